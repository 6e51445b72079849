//! Brauer symmetry classes of polynomials and tensors for the semidihedral
//! groups SD_{8n} and the dihedral groups D_m, in exact arithmetic.
//!
//! The library constructs the two group families with faithful permutation
//! actions, their ordinary and Brauer character tables over cyclotomic
//! fields, the symmetrizer that carves symmetry classes out of homogeneous
//! polynomial spaces and tensor powers, and decides orthogonal-basis
//! (o-basis) existence two independent ways: by closed-form criteria in the
//! group parameters, and by exhaustive search over standard symmetrized
//! generators with exact Gram arithmetic. The verification sweep
//! cross-validates the two routes and reports any disagreement as a
//! structured discrepancy record.
//!
//! Everything is exact: orthogonality is a zero test in Q(ζ_N), never a
//! float comparison. Floats appear only in human-readable reports, always
//! marked lossy.

pub mod characters;
pub mod cyclotomic;
pub mod groups;
pub mod orbital;
pub mod polyspace;
pub mod report;
pub mod sweep;
pub mod tensorspace;
pub mod verdicts;

use thiserror::Error;

/// Desk-scale guards: sweeps and global searches refuse anything larger.
pub mod guards {
    /// Largest group order the sweep and global o-basis search accept.
    pub const MAX_GROUP_ORDER: u32 = 48;
    /// Largest polynomial degree for orbit enumeration.
    pub const MAX_DEGREE: u32 = 3;
    /// Largest tensor index space n^m enumerated for orbit decomposition.
    pub const MAX_TENSOR_SPACE: u64 = 1 << 22;
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("group parameter {0} below minimum {1} for this family")]
    ParamTooSmall(u32, u32),
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("permutation action is not faithful")]
    UnfaithfulAction,
    #[error("unknown character label {0}")]
    UnknownLabel(String),
    #[error("class function evaluated outside its domain (element {0})")]
    OutsideDomain(usize),
    #[error("index tuple invalid: {0}")]
    BadTuple(String),
    #[error("character does not split into two distinct linear characters on the subgroup")]
    NoLinearSplit,
    #[error("empty generator list")]
    EmptyGenerators,
    #[error("desk-scale guard refused: {0}")]
    GuardRefused(String),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
