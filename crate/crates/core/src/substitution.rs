//! The letter substitution `ψ_t` carrying the orbits of `T_λ` to the orbits
//! of `T_λ'`, where `λ'` is `λ` with `λ_t` enlarged by `|s_t|`.
//!
//! Orbits are read as circular words over `1..=n`. With a threshold `k`:
//! letters `≤ k` are kept, letters in `k+1..=k+|s_t|` become two letters
//! (`x, x+|s_t|` when `s_t > 0`, `x+|s_t|, x` when `s_t < 0`), and larger
//! letters are shifted by `|s_t|`. `k` is `Σ_{j≤t} λ_j` for `s_t ≥ 0` and
//! `Σ_{j<t} λ_j − |s_t|` otherwise.

use crate::composition::Composition;
use crate::error::{Error, Result};

/// Applies `ψ_t` to every circular word in `cycles`.
///
/// The output words are not rotated; compare them with
/// [`canonical_circular_words`].
pub fn psi_apply(c: &Composition, t: usize, cycles: &[Vec<u64>]) -> Result<Vec<Vec<u64>>> {
    if t == 0 || t > c.len() {
        return Err(Error::IndexOutOfRange {
            index: t,
            len: c.len(),
        });
    }
    let s = c.translation_vector().get(t);
    let width = s.unsigned_abs();
    if width == 0 {
        return Ok(cycles.to_vec());
    }
    let k = if s > 0 {
        c.prefix_sum(t)
    } else {
        c.prefix_sum(t - 1) - width
    };

    let image = |x: u64, out: &mut Vec<u64>| {
        if x <= k {
            out.push(x);
        } else if x <= k + width {
            if s > 0 {
                out.extend([x, x + width]);
            } else {
                out.extend([x + width, x]);
            }
        } else {
            out.push(x + width);
        }
    };

    Ok(cycles
        .iter()
        .map(|word| {
            let mut out = Vec::with_capacity(word.len() * 2);
            for &x in word {
                image(x, &mut out);
            }
            out
        })
        .collect())
}

/// Rotates a circular word so it starts at its smallest letter.
pub fn rotate_to_min(word: &[u64]) -> Vec<u64> {
    let Some(start) = word
        .iter()
        .enumerate()
        .min_by_key(|&(_, x)| x)
        .map(|(i, _)| i)
    else {
        return Vec::new();
    };
    word[start..]
        .iter()
        .chain(&word[..start])
        .copied()
        .collect()
}

/// Normal form of a set of circular words: each rotated to its minimum,
/// then the list sorted. Two sets are equal as circular words exactly when
/// their normal forms are equal.
pub fn canonical_circular_words(words: &[Vec<u64>]) -> Vec<Vec<u64>> {
    let mut out: Vec<Vec<u64>> = words.iter().map(|w| rotate_to_min(w)).collect();
    out.sort();
    out
}

pub fn circular_words_equal(a: &[Vec<u64>], b: &[Vec<u64>]) -> bool {
    canonical_circular_words(a) == canonical_circular_words(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diet::build_diet;

    fn c(parts: &[u64]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn worked_example() {
        let cycles = vec![vec![1, 4, 7], vec![2, 5, 8], vec![3, 6]];
        let out = psi_apply(&c(&[5, 1, 2]), 2, &cycles).unwrap();
        assert_eq!(
            out,
            vec![vec![1, 7, 4, 10], vec![2, 8, 5, 11], vec![6, 3, 9]]
        );
        assert!(circular_words_equal(
            &out,
            build_diet(&c(&[5, 4, 2])).cycles()
        ));
    }

    #[test]
    fn zero_translation_is_identity() {
        let x = c(&[3, 2, 4, 5]);
        assert_eq!(x.translation_vector().get(3), 0);
        let cycles = build_diet(&x).cycles().to_vec();
        assert_eq!(psi_apply(&x, 3, &cycles).unwrap(), cycles);
    }

    #[test]
    fn root_pair() {
        let out = psi_apply(&c(&[1, 1]), 1, &[vec![1, 2]]).unwrap();
        assert!(circular_words_equal(&out, build_diet(&c(&[2, 1])).cycles()));
    }

    #[test]
    fn index_checked() {
        assert_eq!(
            psi_apply(&c(&[1, 1]), 3, &[]),
            Err(Error::IndexOutOfRange { index: 3, len: 2 })
        );
        assert!(psi_apply(&c(&[1, 1]), 0, &[]).is_err());
    }

    #[test]
    fn rotation() {
        assert_eq!(rotate_to_min(&[6, 3, 9]), vec![3, 9, 6]);
        assert!(rotate_to_min(&[]).is_empty());
        assert!(circular_words_equal(
            &[vec![2, 1], vec![3]],
            &[vec![3], vec![1, 2]]
        ));
        assert!(!circular_words_equal(&[vec![1, 2, 3]], &[vec![1, 3, 2]]));
    }
}
