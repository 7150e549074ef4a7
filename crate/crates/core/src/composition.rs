//! Integer compositions and the data derived from them: translation
//! parameters and the block partition of `1..=n`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest admissible sum. Translation parameters are signed, so every sum
/// must also be representable as an `i64`.
pub const MAX_SUM: u64 = i64::MAX as u64;

/// An ordered sequence of positive parts `(λ₁, …, λ_r)` with `r ≥ 1`.
///
/// Compositions are ordered the way the orbit recursion descends: shorter
/// compositions first, then lexicographically by parts.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "Vec<u64>", try_from = "Vec<u64>")]
pub struct Composition {
    parts: Vec<u64>,
    sum: u64,
}

impl Composition {
    /// Validates `parts` and caches the sum.
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::EmptyComposition);
        }
        if let Some(index) = parts.iter().position(|&p| p == 0) {
            return Err(Error::NonPositivePart {
                index: index + 1,
                value: 0,
            });
        }
        let sum = checked_sum(&parts)?;
        Ok(Composition { parts, sum })
    }

    /// Like [`Composition::new`] but accepts signed input, reporting
    /// non-positive parts instead of wrapping them.
    pub fn from_signed<I>(parts: I) -> Result<Self>
    where
        I: IntoIterator,
        I::Item: Into<i128>,
    {
        let mut out = Vec::new();
        for (i, p) in parts.into_iter().enumerate() {
            let value: i128 = p.into();
            if value <= 0 {
                return Err(Error::NonPositivePart {
                    index: i + 1,
                    value,
                });
            }
            let value = u64::try_from(value).map_err(|_| Error::Overflow("part exceeds u64"))?;
            out.push(value);
        }
        Composition::new(out)
    }

    /// Builds a composition the caller already knows to be valid.
    pub(crate) fn from_valid(parts: Vec<u64>, sum: u64) -> Self {
        debug_assert!(!parts.is_empty() && parts.iter().all(|&p| p > 0));
        debug_assert_eq!(parts.iter().sum::<u64>(), sum);
        Composition { parts, sum }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// The number of parts `r`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// Always false; present for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// The total `n`.
    pub fn sum(&self) -> u64 {
        self.sum
    }

    /// The 1-based part `λ_t`.
    pub fn part(&self, t: usize) -> u64 {
        self.parts[t - 1]
    }

    /// `(λ_r, …, λ₁)`. Its interval exchange is the inverse permutation.
    pub fn reverse(&self) -> Composition {
        let mut parts = self.parts.clone();
        parts.reverse();
        Composition::from_valid(parts, self.sum)
    }

    /// The translation parameters `s_i = Σ_{j>i} λ_j − Σ_{j<i} λ_j`.
    pub fn translation_vector(&self) -> TranslationVector {
        let n = self.sum as i64;
        let mut before = 0i64;
        let entries = self
            .parts
            .iter()
            .map(|&p| {
                let p = p as i64;
                let s = n - before - p - before;
                before += p;
                s
            })
            .collect();
        TranslationVector(entries)
    }

    /// The block `B_t`, `t` 1-based.
    pub fn block(&self, t: usize) -> IntervalBlock {
        let before: u64 = self.parts[..t - 1].iter().sum();
        IntervalBlock {
            index: t,
            lo: before + 1,
            hi: before + self.parts[t - 1],
        }
    }

    /// The blocks `B_1, …, B_r` partitioning `1..=n` in order.
    pub fn blocks(&self) -> Vec<IntervalBlock> {
        let mut lo = 1;
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| {
                let block = IntervalBlock {
                    index: i + 1,
                    lo,
                    hi: lo + p - 1,
                };
                lo += p;
                block
            })
            .collect()
    }

    /// Sum of the first `t` parts.
    pub fn prefix_sum(&self, t: usize) -> u64 {
        self.parts[..t].iter().sum()
    }

    /// Replaces `λ_t` by `value`. A zero `value` removes the part.
    pub(crate) fn with_part(&self, t: usize, value: u64) -> Result<Composition> {
        let mut parts = self.parts.clone();
        let old = parts[t - 1];
        if value == 0 {
            parts.remove(t - 1);
            if parts.is_empty() {
                return Err(Error::EmptyComposition);
            }
            return Ok(Composition::from_valid(parts, self.sum - old));
        }
        parts[t - 1] = value;
        let sum = (self.sum - old)
            .checked_add(value)
            .filter(|&s| s <= MAX_SUM)
            .ok_or(Error::Overflow("composition sum"))?;
        Ok(Composition::from_valid(parts, sum))
    }

    /// Removes `λ_t`. Panics if this is the only part.
    pub(crate) fn without_part(&self, t: usize) -> Composition {
        assert!(self.len() > 1, "cannot remove the only part");
        let mut parts = self.parts.clone();
        let old = parts.remove(t - 1);
        Composition::from_valid(parts, self.sum - old)
    }

    /// Inserts `value` after the first `after` parts.
    pub(crate) fn inserting(&self, after: usize, value: u64) -> Result<Composition> {
        debug_assert!(value > 0);
        let sum = self
            .sum
            .checked_add(value)
            .filter(|&s| s <= MAX_SUM)
            .ok_or(Error::Overflow("composition sum"))?;
        let mut parts = self.parts.clone();
        parts.insert(after, value);
        Ok(Composition::from_valid(parts, sum))
    }
}

fn checked_sum(parts: &[u64]) -> Result<u64> {
    parts
        .iter()
        .try_fold(0u64, |acc, &p| acc.checked_add(p))
        .filter(|&s| s <= MAX_SUM)
        .ok_or(Error::Overflow("composition sum"))
}

impl Ord for Composition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.parts
            .len()
            .cmp(&other.parts.len())
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Composition> for Vec<u64> {
    fn from(c: Composition) -> Self {
        c.parts
    }
}

impl TryFrom<Vec<u64>> for Composition {
    type Error = Error;

    fn try_from(parts: Vec<u64>) -> Result<Self> {
        Composition::new(parts)
    }
}

/// `3,5,4,2`; the alternate form `{:#}` gives `(3,5,4,2)`.
impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if f.alternate() {
            f.write_str("(")?;
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        if f.alternate() {
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:#}")
    }
}

/// Parses comma-separated decimal parts. Whitespace around tokens is ignored.
impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Err(Error::EmptyComposition);
        }
        let mut parts = Vec::new();
        for (i, token) in s.split(',').enumerate() {
            let text = token.trim();
            let value: i128 = text.parse().map_err(|_| Error::Parse {
                token: i + 1,
                text: text.to_string(),
            })?;
            parts.push(value);
        }
        Composition::from_signed(parts)
    }
}

/// The translation parameters `(s₁, …, s_r)` of a composition.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct TranslationVector(Vec<i64>);

impl TranslationVector {
    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    /// The 1-based parameter `s_t`.
    pub fn get(&self, t: usize) -> i64 {
        self.0[t - 1]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_strictly_decreasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }
}

/// The integer interval `B_i = lo..=hi` moved by the `i`-th translation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IntervalBlock {
    pub index: usize,
    pub lo: u64,
    pub hi: u64,
}

impl IntervalBlock {
    pub fn len(&self) -> u64 {
        self.hi - self.lo + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, x: u64) -> bool {
        self.lo <= x && x <= self.hi
    }
}
