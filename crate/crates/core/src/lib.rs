//! # cobweb
//!
//! Exact-arithmetic tools for cobweb-admissible integer sequences.
//!
//! A finite sequence `F = (1_F, 2_F, ..., N_F)` of positive integers is
//! *cobweb-admissible* when every F-nomial coefficient
//!
//! ```text
//! C(n, k)_F = n_F (n-1)_F ... (n-k+1)_F / (1_F 2_F ... k_F)
//! ```
//!
//! is an integer. Every admissible sequence is the pointwise product of
//! *primary* admissible sequences (all terms powers of a single prime), and
//! the primary ones are exactly the root paths of a weighted tree whose
//! successor sets are `{m, m+1, m+2, ...}`.
//!
//! The crate is split by concern:
//!
//! - [`sequence`]: sequences, F-nomial evaluation and the direct admissibility scan.
//! - [`factor`]: trial-division factorization and primality.
//! - [`primary`]: primary decomposition, reconstruction and the exponent-sum criterion.
//! - [`tree`]: the admissible-path tree: successors, enumeration and sampling.
//! - [`verify`]: cross-check suites binding the above to the direct scan.
//!
//! ```
//! use cobweb::{f_binomial, is_admissible, FSequence};
//!
//! let fib = FSequence::new([1u32, 1, 2, 3, 5, 8, 13]).unwrap();
//! assert!(is_admissible(&fib).admissible);
//! assert_eq!(f_binomial(&fib, 6, 3).unwrap().to_string(), "60");
//! ```

pub mod error;
pub mod factor;
pub mod primary;
pub mod ratio;
pub mod sequence;
pub mod tree;
pub mod verify;

pub use error::{Error, Result};
pub use factor::{factorize_value, is_prime, TrialDivision};
pub use primary::{
    decompose, is_primary, lemma1_admissible, primary_to_sequence, reconstruct, ExponentSequence,
    PrimaryBase, PrimaryDecomposition,
};
pub use ratio::ExactRatio;
pub use sequence::{
    binomial_triangle, f_binomial, is_admissible, is_admissible_full_range, make_sequence,
    AdmissibilityReport, FSequence,
};
pub use tree::{
    count_paths, enumerate, min_successor_exponent, path_to_sequence, sample_random,
    EnumerationConfig, Paths, SuccessorSet, TreePath,
};
pub use verify::{run_suites, Mutant, SuiteOutcome, SuiteStatus, VerifyConfig, VerifySummary};
