//! Littlewood-Richardson expansions of skew Schur polynomials in finitely
//! many variables, the shape reductions that preserve multiplicity-freeness,
//! and closed-form classifiers checked against a ballot tableau oracle.
//!
//! ```
//! use skewmf::{classify, SkewPartition};
//!
//! let shape: SkewPartition = "3,2,1/2,1".parse().unwrap();
//! let verdict = classify(&shape, 2).unwrap();
//! assert!(!verdict.multiplicity_free);
//! ```

pub mod classify;
pub mod error;
pub mod lr;
pub mod partition;
pub mod skew;
pub mod tableau;
pub mod verify;

pub use classify::{
    classify, classify_cases, classify_reduced, classify_skew_function, min_nonfree_vars, r1, r2,
    Case, ClassificationVerdict, ExtendedNat,
};
pub use error::{Error, Result};
pub use lr::{
    is_multiplicity_free_oracle, lr_coefficient, max_multiplicity, monomial_expansion,
    multiplicity_witness, skew_schur_expansion, LrCache, MonomialBag, SchurExpansion,
};
pub use partition::{Partition, Rectangle};
pub use skew::{Reduction, SkewPartition};
pub use tableau::{
    ballot_tableaux, ballot_tableaux_bounded, is_ballot, semistandard_tableaux, Tableau, Word,
};
pub use verify::{verify, VerifyRange, VerifyReport};
