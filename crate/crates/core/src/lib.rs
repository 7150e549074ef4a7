//! # diet-core
//!
//! Symmetric discrete interval exchanges. A composition `λ = (λ₁, …, λ_r)`
//! of `n` cuts `1..=n` into consecutive blocks of those sizes; the exchange
//! `T_λ` puts the blocks back in reverse order. This crate
//!
//! * builds `T_λ` and its canonical cycle decomposition ([`diet`]);
//! * counts its orbits without building it, by a subtractive reduction that
//!   generalises Euclid's algorithm ([`recursion`]);
//! * rewrites orbits letter by letter when one part grows ([`substitution`]);
//! * enumerates every single-orbit ("circular") composition exactly once in a
//!   tree extending the Raney tree of fractions ([`tree`]);
//! * gives cyclic types in closed form for two and three parts
//!   ([`cyclictype`]);
//! * and keeps a brute-force oracle for all of the above ([`oracle`]).
//!
//! ```
//! use diet_core::{build_diet, count_orbits, Composition};
//!
//! let c: Composition = "3,5,4,2".parse().unwrap();
//! assert_eq!(build_diet(&c).to_string(), "(1,12,6,9,3,14,2,13)(4,7,10)(5,8,11)");
//! assert_eq!(count_orbits(&c), 3);
//! ```

pub mod composition;
pub mod cyclictype;
pub mod diet;
mod error;
pub mod oracle;
pub mod permutation;
pub mod recursion;
pub mod substitution;
pub mod tree;

pub use composition::{Composition, IntervalBlock, TranslationVector, MAX_SUM};
pub use cyclictype::{
    conjecture_sweep, cyclic_type_2, cyclic_type_3, orbit_of_3, ConjectureReport, OrbitFormula3,
};
pub use diet::{build_diet, cyclic_type, orbit_decomposition};
pub use error::{Error, Result};
pub use oracle::{all_circular, all_compositions, brute_orbit_count, CompositionStream};
pub use permutation::{format_cycles, CyclicType, Permutation};
pub use recursion::{
    count_orbits, is_minimal, pivot, reduce_step, trace, Pivot, ReductionStep, ReductionTrace,
    StepTag,
};
pub use substitution::{canonical_circular_words, psi_apply};
pub use tree::{
    children, delta_vector, enumerate, parent, path_to_root, ChildKind, ChildSpec, DeltaVector,
    ParentOf, Provenance, TreeNode,
};
