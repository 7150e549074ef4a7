//! Cyclic types in closed form for two and three parts, plus an empirical
//! sweep over the number of distinct orbit lengths for longer compositions.

use std::fmt::Write as _;

use num_integer::Integer;
use serde::Serialize;

use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::oracle::{brute_cycle_lengths, CompositionStream};
use crate::permutation::CyclicType;

/// `((a+b)/g)^g` with `g = gcd(a, b)`.
pub fn cyclic_type_2(a: u64, b: u64) -> CyclicType {
    assert!(a >= 1 && b >= 1, "parts must be positive");
    let g = a.gcd(&b);
    CyclicType::from_pairs([((a + b) / g, g)])
}

/// Orbit structure of a three-part exchange `(a, b, c)`.
///
/// With `d = gcd(a+b, b+c)` every translation parameter is a multiple of
/// `d`, and the orbits are exactly the residue classes modulo `d` inside
/// `1..=n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct OrbitFormula3 {
    pub n: u64,
    pub d: u64,
    pub quotient: u64,
    pub remainder: u64,
}

impl OrbitFormula3 {
    pub fn new(a: u64, b: u64, c: u64) -> Result<Self> {
        Composition::new(vec![a, b, c])?;
        let n = a + b + c;
        let d = (a + b).gcd(&(b + c));
        Ok(OrbitFormula3 {
            n,
            d,
            quotient: n / d,
            remainder: n % d,
        })
    }

    /// `q^d` when `d | n`, otherwise `(q+1)^rem q^(d−rem)`.
    pub fn cyclic_type(&self) -> CyclicType {
        CyclicType::from_pairs([
            (self.quotient + 1, self.remainder),
            (self.quotient, self.d - self.remainder),
        ])
    }

    /// `{x + kd : 1 ≤ x + kd ≤ n}`, ascending.
    pub fn orbit(&self, x: u64) -> Result<Vec<u64>> {
        if x == 0 || x > self.n {
            return Err(Error::OutOfRange {
                element: x,
                n: self.n,
            });
        }
        let first = (x - 1) % self.d + 1;
        Ok((first..=self.n).step_by(self.d as usize).collect())
    }
}

pub fn cyclic_type_3(a: u64, b: u64, c: u64) -> CyclicType {
    OrbitFormula3::new(a, b, c)
        .expect("parts must be positive")
        .cyclic_type()
}

pub fn orbit_of_3(a: u64, b: u64, c: u64, x: u64) -> Result<Vec<u64>> {
    OrbitFormula3::new(a, b, c)?.orbit(x)
}

/// Observed numbers of distinct orbit lengths over all compositions of one
/// length, against the bound `⌈(r−1)/2⌉`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub length: usize,
    pub max_sum: u64,
    pub scanned: u64,
    /// Largest number of distinct orbit lengths seen.
    pub max_k: usize,
    /// First composition (in scan order) reaching `max_k`.
    pub witness: Option<Composition>,
    pub bound: usize,
    /// Every scanned composition whose count exceeds `bound`.
    pub counterexamples: Vec<Composition>,
}

/// `⌈(r−1)/2⌉`
pub fn conjectured_bound(length: usize) -> usize {
    length / 2
}

/// Scans every composition of `length` parts with sum at most `max_sum`.
///
/// Orbit lengths come from the brute-force permutation, since the orbit
/// recursion only yields the count.
pub fn conjecture_sweep(length: usize, max_sum: u64) -> ConjectureReport {
    let bound = conjectured_bound(length);
    let mut report = ConjectureReport {
        length,
        max_sum,
        scanned: 0,
        max_k: 0,
        witness: None,
        bound,
        counterexamples: Vec::new(),
    };
    for c in CompositionStream::with_length(length, max_sum) {
        let mut lengths = brute_cycle_lengths(&c);
        lengths.dedup();
        let k = lengths.len();
        report.scanned += 1;
        if k > report.max_k {
            report.max_k = k;
            report.witness = Some(c.clone());
        }
        if k > bound {
            report.counterexamples.push(c);
        }
    }
    report
}

/// Aligned table with columns `length max_sum max_k bound violations`.
pub fn render_table(reports: &[ConjectureReport]) -> String {
    let mut out = String::from("length  max_sum  max_k  bound  violations\n");
    for r in reports {
        writeln!(
            out,
            "{:>6}  {:>7}  {:>5}  {:>5}  {:>10}",
            r.length,
            r.max_sum,
            r.max_k,
            r.bound,
            r.counterexamples.len()
        )
        .unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_parts() {
        assert_eq!(cyclic_type_2(1, 1).to_string(), "2^1");
        assert_eq!(cyclic_type_2(4, 6).to_string(), "5^2");
        assert_eq!(cyclic_type_2(3, 3).to_string(), "2^3");
    }

    #[test]
    fn three_parts() {
        assert_eq!(cyclic_type_3(9, 1, 4).to_string(), "3^4 2^1");
        assert_eq!(cyclic_type_3(1, 1, 1).to_string(), "2^1 1^1");
        assert_eq!(cyclic_type_3(3, 2, 5).to_string(), "10^1");
        let f = OrbitFormula3::new(9, 1, 4).unwrap();
        assert_eq!((f.d, f.quotient, f.remainder), (5, 2, 4));
    }

    #[test]
    fn orbits_of_three() {
        assert_eq!(orbit_of_3(9, 1, 4, 9).unwrap(), vec![4, 9, 14]);
        assert_eq!(orbit_of_3(1, 1, 1, 2).unwrap(), vec![2]);
        assert_eq!(orbit_of_3(9, 1, 4, 1).unwrap(), vec![1, 6, 11]);
        assert_eq!(
            orbit_of_3(9, 1, 4, 15),
            Err(Error::OutOfRange { element: 15, n: 14 })
        );
        assert_eq!(
            orbit_of_3(9, 1, 4, 0),
            Err(Error::OutOfRange { element: 0, n: 14 })
        );
        assert!(matches!(
            orbit_of_3(0, 1, 4, 1),
            Err(Error::NonPositivePart { .. })
        ));
    }

    #[test]
    fn bounds() {
        let got: Vec<_> = (1..=6).map(conjectured_bound).collect();
        assert_eq!(got, vec![0, 1, 1, 2, 2, 3]);
    }

    #[test]
    fn sweep_two_parts_has_one_length() {
        let r = conjecture_sweep(2, 40);
        assert_eq!((r.max_k, r.bound), (1, 1));
        assert!(r.counterexamples.is_empty());
        assert_eq!(r.scanned, 39 * 40 / 2);
    }

    #[test]
    fn sweep_single_part() {
        let r = conjecture_sweep(1, 10);
        assert_eq!((r.max_k, r.scanned, r.bound), (1, 10, 0));
        assert_eq!(r.counterexamples.len(), 10);
    }

    #[test]
    fn table_layout() {
        let table = render_table(&[conjecture_sweep(2, 6)]);
        assert_eq!(
            table,
            "length  max_sum  max_k  bound  violations\n     2        6      1      1           0\n"
        );
    }
}
