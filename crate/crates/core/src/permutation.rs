//! Permutations of `1..=n` with a cached canonical cycle decomposition.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

/// A bijection on `1..=n`.
///
/// Cycles are kept in canonical form: each starts at its smallest element and
/// the list is sorted by those minima. Elements are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<u64>,
    cycles: Vec<Vec<u64>>,
}

impl Permutation {
    /// `images[x - 1]` is the image of `x`. Returns `None` unless the table
    /// is a bijection on `1..=images.len()`.
    pub fn from_images(images: Vec<u64>) -> Option<Self> {
        let n = images.len() as u64;
        let mut hit = vec![false; images.len()];
        for &y in &images {
            if y == 0 || y > n || hit[(y - 1) as usize] {
                return None;
            }
            hit[(y - 1) as usize] = true;
        }
        let cycles = decompose(&images);
        Some(Permutation { images, cycles })
    }

    pub fn identity(n: u64) -> Self {
        Permutation::from_images((1..=n).collect()).expect("identity is a bijection")
    }

    /// Size of the underlying set.
    pub fn degree(&self) -> u64 {
        self.images.len() as u64
    }

    /// `T(x)`. Panics when `x` is outside `1..=n`.
    pub fn apply(&self, x: u64) -> u64 {
        self.images[(x - 1) as usize]
    }

    pub fn images(&self) -> &[u64] {
        &self.images
    }

    pub fn cycles(&self) -> &[Vec<u64>] {
        &self.cycles
    }

    /// `γ(σ)`, the number of orbits.
    pub fn orbit_count(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &y)| y == i as u64 + 1)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Option<Permutation> {
        if self.degree() != other.degree() {
            return None;
        }
        let images = other.images.iter().map(|&y| self.apply(y)).collect();
        Permutation::from_images(images)
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &y) in self.images.iter().enumerate() {
            images[(y - 1) as usize] = i as u64 + 1;
        }
        Permutation::from_images(images).expect("inverse of a bijection")
    }

    /// The canonical cycle containing `x`.
    pub fn orbit_of(&self, x: u64) -> Option<&[u64]> {
        self.cycles
            .iter()
            .find(|c| c.contains(&x))
            .map(Vec::as_slice)
    }

    pub fn cyclic_type(&self) -> CyclicType {
        CyclicType::from_lengths(self.cycles.iter().map(|c| c.len() as u64))
    }
}

fn decompose(images: &[u64]) -> Vec<Vec<u64>> {
    let mut seen = vec![false; images.len()];
    let mut cycles = Vec::new();
    // Scanning upward means each cycle is discovered from its minimum.
    for start in 0..images.len() {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cycle.push(x as u64 + 1);
            x = (images[x] - 1) as usize;
        }
        cycles.push(cycle);
    }
    cycles
}

/// Renders cycles as `(1,12,6)(4,7,10)`.
pub fn format_cycles(cycles: &[Vec<u64>]) -> String {
    let mut out = String::new();
    for cycle in cycles {
        out.push('(');
        for (i, x) in cycle.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push_str(&x.to_string());
        }
        out.push(')');
    }
    out
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_cycles(&self.cycles))
    }
}

/// A partition `ℓ₁^α₁ … ℓ_k^α_k` of `n` recording orbit lengths `ℓ` and how
/// many orbits `α` have each length; lengths strictly decreasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct CyclicType(Vec<(u64, u64)>);

impl CyclicType {
    pub fn from_lengths<I: IntoIterator<Item = u64>>(lengths: I) -> Self {
        let mut counts: BTreeMap<u64, u64> = BTreeMap::new();
        for len in lengths {
            debug_assert!(len > 0);
            *counts.entry(len).or_default() += 1;
        }
        CyclicType(counts.into_iter().rev().collect())
    }

    /// Builds from `(length, multiplicity)` pairs, merging and sorting them.
    /// Pairs with zero multiplicity are dropped.
    pub fn from_pairs<I: IntoIterator<Item = (u64, u64)>>(pairs: I) -> Self {
        let mut counts: BTreeMap<u64, u64> = BTreeMap::new();
        for (len, mult) in pairs {
            if mult > 0 {
                *counts.entry(len).or_default() += mult;
            }
        }
        CyclicType(counts.into_iter().rev().collect())
    }

    pub fn pairs(&self) -> &[(u64, u64)] {
        &self.0
    }

    /// `Σ ℓ·α`, the size of the permuted set.
    pub fn weight(&self) -> u64 {
        self.0.iter().map(|&(l, a)| l * a).sum()
    }

    /// `Σ α`, the number of orbits.
    pub fn orbit_count(&self) -> u64 {
        self.0.iter().map(|&(_, a)| a).sum()
    }

    /// `k`, the number of distinct orbit lengths.
    pub fn distinct_lengths(&self) -> usize {
        self.0.len()
    }
}

/// `8^1 3^2`
impl fmt::Display for CyclicType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (l, a)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}^{a}")?;
        }
        Ok(())
    }
}
