//! The symmetric discrete interval exchange `T_λ` of a composition: block
//! `B_i` is moved by its translation parameter `s_i`, which reverses the
//! order of the blocks.

use crate::composition::Composition;
use crate::permutation::{CyclicType, Permutation};

/// Builds `T_λ` as a permutation of `1..=n`.
///
/// Materialises the full image table, so `n` has to fit in memory.
pub fn build_diet(c: &Composition) -> Permutation {
    let s = c.translation_vector();
    assert!(
        s.is_strictly_decreasing(),
        "translation vector of {c:?} not decreasing"
    );
    let mut images = Vec::with_capacity(c.sum() as usize);
    let mut x: u64 = 1;
    for (&len, &shift) in c.parts().iter().zip(s.entries()) {
        for _ in 0..len {
            images.push(x.wrapping_add_signed(shift));
            x += 1;
        }
    }
    Permutation::from_images(images).expect("a symmetric interval exchange is a bijection")
}

/// Canonical cycles of `p`.
pub fn orbit_decomposition(p: &Permutation) -> Vec<Vec<u64>> {
    p.cycles().to_vec()
}

pub fn cyclic_type(p: &Permutation) -> CyclicType {
    p.cyclic_type()
}
