//! Orbit counting by repeated reduction of the composition.
//!
//! At the pivot `t` (the smallest index with `λ_t ≥ |s_t|`) one of four
//! reductions applies:
//!
//! | case              | effect                        | orbits added |
//! |-------------------|-------------------------------|--------------|
//! | `r = 1`           | stop                          | `λ₁`         |
//! | `s_t = 0`         | drop part `t`                 | `λ_t`        |
//! | `λ_t = \|s_t\|`   | drop part `t`                 | 0            |
//! | `λ_t > \|s_t\|`   | replace `λ_t` by `λ_t − \|s_t\|` | 0         |
//!
//! Every successor is strictly smaller in the length-then-lexicographic
//! order, so iterating terminates. For two parts this is the subtractive
//! Euclidean algorithm.

use std::fmt;

use serde::Serialize;

use crate::composition::Composition;

/// The smallest 1-based index `t` with `λ_t ≥ |s_t|`, and `|s_t|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Pivot {
    pub t: usize,
    pub abs_s: u64,
}

/// Which case of the reduction fired.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum StepTag {
    Base,
    AddAndDrop,
    Drop,
    Shrink,
}

impl fmt::Display for StepTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            StepTag::Base => "Base",
            StepTag::AddAndDrop => "AddAndDrop",
            StepTag::Drop => "Drop",
            StepTag::Shrink => "Shrink",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ReductionStep {
    pub tag: StepTag,
    /// Absent for `Base`.
    pub pivot: Option<Pivot>,
    pub contribution: u64,
    /// Absent for `Base`.
    pub successor: Option<Composition>,
}

/// Every index qualifying as a pivot, ascending.
pub fn pivot_candidates(c: &Composition) -> Vec<usize> {
    let s = c.translation_vector();
    (1..=c.len())
        .filter(|&t| c.part(t) >= s.get(t).unsigned_abs())
        .collect()
}

pub fn pivot(c: &Composition) -> Pivot {
    pivot_of_parts(c.parts(), c.sum())
}

fn pivot_of_parts(parts: &[u64], n: u64) -> Pivot {
    // Running form of s_t = n - 2·Σ_{j<t} λ_j - λ_t.
    let n = n as i128;
    let mut before = 0i128;
    for (i, &p) in parts.iter().enumerate() {
        let abs_s = (n - 2 * before - p as i128).unsigned_abs() as u64;
        if p >= abs_s {
            return Pivot { t: i + 1, abs_s };
        }
        before += p as i128;
    }
    unreachable!("every composition has an index with λ_t ≥ |s_t|")
}

fn classify(parts: &[u64], pivot: Pivot) -> StepTag {
    let lambda = parts[pivot.t - 1];
    if parts.len() == 1 {
        StepTag::Base
    } else if pivot.abs_s == 0 {
        StepTag::AddAndDrop
    } else if lambda == pivot.abs_s {
        StepTag::Drop
    } else {
        StepTag::Shrink
    }
}

/// Applies one reduction.
pub fn reduce_step(c: &Composition) -> ReductionStep {
    let p = pivot(c);
    let tag = classify(c.parts(), p);
    let lambda = c.part(p.t);
    match tag {
        StepTag::Base => ReductionStep {
            tag,
            pivot: None,
            contribution: lambda,
            successor: None,
        },
        StepTag::AddAndDrop => ReductionStep {
            tag,
            pivot: Some(p),
            contribution: lambda,
            successor: Some(c.without_part(p.t)),
        },
        StepTag::Drop => ReductionStep {
            tag,
            pivot: Some(p),
            contribution: 0,
            successor: Some(c.without_part(p.t)),
        },
        StepTag::Shrink => {
            let successor = c
                .with_part(p.t, lambda - p.abs_s)
                .expect("shrinking never overflows");
            ReductionStep {
                tag,
                pivot: Some(p),
                contribution: 0,
                successor: Some(successor),
            }
        }
    }
}

/// `γ(T_λ)`, the number of orbits, without building the permutation.
pub fn count_orbits(c: &Composition) -> u64 {
    let mut parts = c.parts().to_vec();
    let mut n = c.sum();
    let mut total = 0;
    loop {
        let p = pivot_of_parts(&parts, n);
        let lambda = parts[p.t - 1];
        match classify(&parts, p) {
            StepTag::Base => return total + lambda,
            StepTag::AddAndDrop => {
                total += lambda;
                parts.remove(p.t - 1);
                n -= lambda;
            }
            StepTag::Drop => {
                parts.remove(p.t - 1);
                n -= lambda;
            }
            StepTag::Shrink => {
                parts[p.t - 1] -= p.abs_s;
                n -= p.abs_s;
            }
        }
    }
}

/// True when `T_λ` has a single orbit.
pub fn is_minimal(c: &Composition) -> bool {
    count_orbits(c) == 1
}

/// One row of a [`ReductionTrace`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceEntry {
    pub composition: Composition,
    pub step: ReductionStep,
}

/// The full sequence of reductions from a composition down to one part.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionTrace {
    pub steps: Vec<TraceEntry>,
    pub total: u64,
}

pub fn trace(c: &Composition) -> ReductionTrace {
    let mut steps = Vec::new();
    let mut total = 0;
    let mut current = c.clone();
    loop {
        let step = reduce_step(&current);
        total += step.contribution;
        let next = step.successor.clone();
        steps.push(TraceEntry {
            composition: current,
            step,
        });
        match next {
            Some(next) => current = next,
            None => break,
        }
    }
    ReductionTrace { steps, total }
}

impl ReductionTrace {
    /// The compositions visited, starting with the input.
    pub fn compositions(&self) -> impl Iterator<Item = &Composition> {
        self.steps.iter().map(|e| &e.composition)
    }

    /// Pivots of every non-base step.
    pub fn pivots(&self) -> impl Iterator<Item = Pivot> + '_ {
        self.steps.iter().filter_map(|e| e.step.pivot)
    }
}

/// One line per step, `3,5,4,2 t=2 |s_t|=3 Shrink +0`, then `total=3`.
/// The base step has no pivot and prints `t=- |s_t|=-`.
impl fmt::Display for ReductionTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for entry in &self.steps {
            let step = &entry.step;
            match step.pivot {
                Some(p) => write!(f, "{} t={} |s_t|={}", entry.composition, p.t, p.abs_s)?,
                None => write!(f, "{} t=- |s_t|=-", entry.composition)?,
            }
            writeln!(f, " {} +{}", step.tag, step.contribution)?;
        }
        write!(f, "total={}", self.total)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(parts: &[u64]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn pivots() {
        assert_eq!(pivot(&c(&[3, 5, 4, 2])), Pivot { t: 2, abs_s: 3 });
        assert_eq!(pivot(&c(&[3, 2, 1, 2])), Pivot { t: 2, abs_s: 0 });
        assert_eq!(pivot(&c(&[1])), Pivot { t: 1, abs_s: 0 });
        assert_eq!(pivot_candidates(&c(&[2, 1, 2, 1])), vec![2, 3]);
    }

    #[test]
    fn single_steps() {
        let s = reduce_step(&c(&[3, 5, 4, 2]));
        assert_eq!(
            (s.tag, s.successor),
            (StepTag::Shrink, Some(c(&[3, 2, 4, 2])))
        );

        let s = reduce_step(&c(&[3, 2, 1, 2]));
        assert_eq!(s.tag, StepTag::AddAndDrop);
        assert_eq!(s.contribution, 2);
        assert_eq!(s.successor, Some(c(&[3, 1, 2])));

        let s = reduce_step(&c(&[3, 1, 2]));
        assert_eq!((s.tag, s.pivot.unwrap().t), (StepTag::Drop, 1));
        assert_eq!(s.successor, Some(c(&[1, 2])));

        let s = reduce_step(&c(&[7]));
        assert_eq!(
            (s.tag, s.contribution, s.pivot, s.successor),
            (StepTag::Base, 7, None, None)
        );
    }

    #[test]
    fn counts() {
        assert_eq!(count_orbits(&c(&[3, 5, 4, 2])), 3);
        assert_eq!(count_orbits(&c(&[3, 2, 4, 5])), 5);
        assert_eq!(count_orbits(&c(&[4, 6])), 2);
        assert_eq!(count_orbits(&c(&[9])), 9);
    }

    #[test]
    fn minimality() {
        assert!(is_minimal(&c(&[3, 2, 5])));
        assert!(!is_minimal(&c(&[3, 5, 4, 2])));
        assert!(is_minimal(&c(&[1, 1])));
        assert!(is_minimal(&c(&[1])));
    }

    #[test]
    fn table_trace() {
        let tr = trace(&c(&[3, 5, 4, 2]));
        let comps: Vec<_> = tr.compositions().cloned().collect();
        let want: Vec<_> = [
            &[3, 5, 4, 2][..],
            &[3, 2, 4, 2],
            &[3, 2, 1, 2],
            &[3, 1, 2],
            &[1, 2],
            &[1, 1],
            &[1],
        ]
        .iter()
        .map(|p| c(p))
        .collect();
        assert_eq!(comps, want);
        assert_eq!(
            tr.pivots().map(|p| p.t).collect::<Vec<_>>(),
            vec![2, 3, 2, 1, 2, 1]
        );
        assert_eq!(
            tr.pivots().map(|p| p.abs_s).collect::<Vec<_>>(),
            vec![3, 3, 0, 3, 1, 1]
        );
        assert_eq!(tr.total, 3);
        assert_eq!(
            tr.to_string(),
            "3,5,4,2 t=2 |s_t|=3 Shrink +0\n\
             3,2,4,2 t=3 |s_t|=3 Shrink +0\n\
             3,2,1,2 t=2 |s_t|=0 AddAndDrop +2\n\
             3,1,2 t=1 |s_t|=3 Drop +0\n\
             1,2 t=2 |s_t|=1 Shrink +0\n\
             1,1 t=1 |s_t|=1 Drop +0\n\
             1 t=- |s_t|=- Base +1\n\
             total=3"
        );
    }

    #[test]
    fn short_traces() {
        let tr = trace(&c(&[1]));
        assert_eq!((tr.steps.len(), tr.total), (1, 1));
        let tr = trace(&c(&[1, 1]));
        assert_eq!(
            tr.compositions().cloned().collect::<Vec<_>>(),
            vec![c(&[1, 1]), c(&[1])]
        );
        assert_eq!(tr.total, 1);
    }

    #[test]
    fn long_subtractive_run() {
        assert_eq!(count_orbits(&c(&[1, 100_000])), 1);
        assert_eq!(count_orbits(&c(&[30_000, 45_000])), 15_000);
    }
}
