//! Exact-arithmetic weight cones over concrete root data.
//!
//! The crate builds root data for `GL_n` with signature `(r,s)` and for
//! `Sp(2n)` with the Siegel Levi, the attendant Weyl-group combinatorics
//! (length, Bruhat order, lower neighbours, minimal coset representatives),
//! and a rational polyhedral cone kernel (Fourier–Motzkin, double
//! description, Farkas certificates) with no floating point anywhere.
//!
//! On top of that it constructs and compares the weight cones that govern
//! automorphic forms in characteristic p: the Griffiths–Schmid cone, Hasse
//! cones of flag strata, orbit and L-minimal cones, the unipotent-invariance
//! cone, intersection cones of separating systems, and the machinery special
//! to `GL_n` of signature `(n-1,1)`: z-small block permutations, explicit
//! Hasse inequalities, the auxiliary path of partial Hasse invariants, and
//! exact certificates for the inter-cone inclusions.
//!
//! Everything is deterministic and exact; see the `examples/` directory for
//! one runnable example per capability and the `zipcone` binary for the CLI.

pub mod cli;
pub mod cones;
pub mod oracle;
pub mod rootdata;
pub mod unitary_n1;
pub mod weightcones;
pub mod weyl;

use thiserror::Error;

/// Errors surfaced by the library operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("invalid signature: r={r}, s={s}")]
    InvalidSignature { r: usize, s: usize },
    #[error("q must be a prime power >= 2, got {0}")]
    InvalidQ(u64),
    #[error("sigma is not a diagram automorphism compatible with the Levi")]
    InvalidSigma,
    #[error("cone name {name} does not apply to this group")]
    NameGroupMismatch { name: String },
    #[error("empty cone specification")]
    EmptySpec,
    #[error("monoid membership requested without a coefficient bound")]
    MonoidBoundRequired,
    #[error("dimension {0} too large for double description fallback (limit 12)")]
    DimensionLimit(usize),
    #[error("Fourier-Motzkin blow-up guard exceeded ({0} inequalities)")]
    FmBlowup(usize),
    #[error("element is not in W^I")]
    NotInWI,
    #[error("bad composition: parts must be positive and sum to n")]
    BadComposition,
    #[error("root is not a lower neighbour of w")]
    NotLowerNeighbour,
    #[error("length of w must be >= 1")]
    LengthZero,
    #[error("multiset support outside the negative Levi roots")]
    SupportOutsideLevi,
    #[error("no case of the inter-cone analysis applies (w={w}, alpha={alpha})")]
    NoCaseApplies { w: String, alpha: String },
    #[error("h_w matrix is singular (internal error)")]
    SingularMatrix,
    #[error("separating system violates its invariants at w={0}")]
    InvalidSeparatingSystem(String),
    #[error("bruhat oracle limit: type A with n <= 6 only")]
    OracleLimit,
    #[error("Hilbert basis requires linearly independent pairings (simplicial case)")]
    NotSimplicial,
    #[error("{0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;
