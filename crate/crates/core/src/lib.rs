//! Minimal zero-sum sequences over finite cyclic groups.
//!
//! Sequences over Z_n are multisets of residues. This crate computes subset-sum
//! sets Σ(S), g-norms and the index, decides splittability, enumerates minimal
//! zero-sum sequences up to unit scaling, and runs verification campaigns for
//! known classification results.

pub mod cyclic;
pub mod enumerate;
pub mod error;
pub mod index;
pub mod naive;
pub mod sigma;
pub mod split;
pub mod verify;

pub use cyclic::{canonical_class, CyclicGroup, Element, Sequence, SequenceClass, MAX_ORDER};
pub use enumerate::{
    compute_I, compute_Ik, compute_max_index, davenport, enumerate_mzs, enumerate_zero_sum_free,
    fold_mzs, max_index_over, ClassRecord, EnumSpec, Enumeration, Filter, InvariantResult,
    SearchOptions,
};
pub use error::{Error, Result};
pub use index::{g_norm, index, index_with_generator, NormValue};
pub use sigma::{
    is_minimal_zero_sum, is_zero_sum_free, sigma_complement_sizes, sigma_set, SigmaBuilder, SumSet,
};
pub use split::{
    classify, is_splittable_bruteforce, is_unsplittable, is_unsplittable_fast, split,
    Classification, Method, SplitMove,
};
pub use verify::{Counterexample, Mode, Status, Target, VerifyParams, VerifyReport};
