//! Garside calculus for Artin braid groups, and a Nielsen–Thurston classifier
//! built on top of it.
//!
//! The crate is organized bottom-up:
//!
//! * [`simple`] — permutation braids (the simple elements of the Garside
//!   structure), the half twist Δ, complements, and the prefix-order lattice.
//! * [`word`] — generator words: parsing, printing, and random generation.
//! * [`canonical`] — left normal forms `Δ^p x_1 ⋯ x_r` and the Garside
//!   bookkeeping functions τ, ι, φ, inf, sup, ℓ.
//! * [`sliding`] — cyclic sliding, sliding circuits, preferred conjugators,
//!   stabilized circuit representatives, and rigidity.
//! * [`curves`] — the action of braids on simple closed curves in the
//!   punctured disc, roundness testing, and invariant families of round
//!   curves.
//! * [`reduction`] — the puncture-dance labelling algorithm that finds
//!   invariant almost-round curves of positive braids, and the rigid-case
//!   reducibility driver.
//! * [`classify`] — the top-level trichotomy: periodic / reducible /
//!   pseudo-Anosov, with machine-checkable certificates.
//!
//! All values are immutable after construction and all operations are pure
//! functions, so everything here may be freely shared across threads.
//!
//! Strands, punctures, and generators are 1-indexed throughout the public
//! API: the braid group on `n` strands is generated by `σ_1 … σ_{n-1}`, and
//! `σ_i` exchanges the punctures at positions `i` and `i+1`.

pub mod canonical;
// TEMPSTUB pub mod classify;
pub mod curves;
// TEMPSTUB pub mod reduction;
pub mod simple;
pub mod sliding;
pub mod word;

pub use canonical::CanonicalBraid;
// TEMPSTUB pub use classify::{Classification, ClassifierConfig, Verdict};
pub use curves::{CurveCoord, RoundCurve, RoundFamily};
// TEMPSTUB pub use reduction::{Labelling, ReductionWitness};
pub use simple::SimpleBraid;
pub use sliding::{Rigidity, SlidingTrajectory};
pub use word::GeneratorWord;

/// Errors reported by fallible operations.
///
/// Only operations with a genuine failure mode return `Result`; violations of
/// internal invariants are bugs and panic instead.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A word or permutation refers to a strand count that is not supported.
    #[error("invalid strand count {n}: need n >= 1")]
    InvalidStrandCount { n: usize },
    /// A generator index lies outside `1..=n-1`.
    #[error("generator index {index} out of range for {n} strands")]
    GeneratorOutOfRange { index: isize, n: usize },
    /// Two operands live in braid groups with different strand counts.
    #[error("strand count mismatch: {left} vs {right}")]
    StrandCountMismatch { left: usize, right: usize },
    /// A word failed to parse.
    #[error("cannot parse braid word: {reason}")]
    ParseWord { reason: String },
    /// An operation that needs a positive word was given a negative letter.
    #[error("word is not positive (letter {letter})")]
    NotPositive { letter: isize },
    /// The rigidity fraction is undefined for braids of canonical length zero.
    #[error("rigidity value is undefined for powers of the half twist (canonical length 0)")]
    RigidityUndefined,
    /// The endpoint pair handed to the labelling search violates its
    /// precondition (both strands pure, never crossing each other).
    #[error("invalid endpoint pair ({p},{q}): {reason}")]
    InvalidPair { p: usize, q: usize, reason: String },
    /// A strand subset was empty where at least one strand is required.
    #[error("strand subset must not be empty")]
    EmptySubset,
    /// A strand subset refers to strands outside `1..=n`.
    #[error("strand {strand} out of range for {n} strands")]
    StrandOutOfRange { strand: usize, n: usize },
    /// A curve family handed to `component` is not invariant under the braid.
    #[error("curve family is not invariant under the braid")]
    FamilyNotInvariant,
    /// The curve handed to `component` does not belong to the family.
    #[error("curve ({lo},{hi}) is not a member of the family")]
    CurveNotInFamily { lo: usize, hi: usize },
    /// A round-curve interval is degenerate (fewer than 2 or all n punctures).
    #[error("invalid round curve ({lo},{hi}) for {n} strands")]
    InvalidRoundCurve { lo: usize, hi: usize, n: usize },
    /// `rigid_case_classify` was called on a braid that is not rigid or is
    /// periodic.
    #[error("rigid-case reduction requires a rigid, non-periodic braid: {reason}")]
    RigidCasePrecondition { reason: String },
}

/// Crate-wide result alias.
pub type Result<T, E = Error> = std::result::Result<T, E>;
