//! Zero-sum combinatorics over cyclic groups `Z_n` with `n <= 64`.
//!
//! Sequences are multisets of residues stored as multiplicity vectors. All
//! subsequence-sum questions go through one bitset reachability table, and
//! exhaustive searches enumerate multisets up to affine-unit equivalence.

pub mod cache;
pub mod error;
pub mod extremal;
pub mod structure;
pub mod sumset;
pub mod zerosum;
pub mod zmod;

pub use error::{Error, Result};
pub use extremal::{
    compute_f, compute_h, enumerate, scan_conjecture, verify_theorem, Budget, EnumSpec,
    ExtremalKind, ExtremalResult, TheoremId, VerificationReport, VerifyParams, ZeroSumConstraint,
};
pub use sumset::{cd_bound, reach_table, sums_all, sums_exact, sumset, ReachTable, ResidueSet};
pub use zerosum::{
    has_zero_sum_of_length, is_zero_free, max_zero_sum_subseq, zero_sum_witness, ZeroSumWitness,
};
pub use zmod::{apply_transform, canonicalize, equivalent, Residue, Seq, Transform};
