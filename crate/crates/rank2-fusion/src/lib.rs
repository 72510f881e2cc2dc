//! Exact graded tensor decompositions for the rank-two simple Lie algebras
//! A2, C2 and G2.
//!
//! The central object is the graded multiplicity polynomial: for dominant
//! weights `λ`, `μ` the tensor product `V(λ) ⊗ V(μ)` decomposes as a direct
//! sum of irreducibles `V(ν)`, and each multiplicity is refined here into a
//! polynomial in `q` whose coefficients count lattice points of a convex
//! polytope by their coordinate sum. Everything is computed in exact 64-bit
//! integer arithmetic; every multiplication and division is checked.
//!
//! Module map:
//!
//! * [`root_system`] — Cartan data, Weyl group actions, the Weyl dimension
//!   formula and Freudenthal weight multiplicities.
//! * [`polytope`] — integer linear inequality systems and a deterministic
//!   lattice-point enumerator.
//! * [`fusion_polytope`] — the decomposition polytopes `S` for each type,
//!   with their degree and weight statistics.
//! * [`graded_fusion`] — graded decompositions, the dimension identity and
//!   Schur-positivity comparisons.
//! * [`lr_oracle`] — two independent oracles for the ungraded multiplicities:
//!   the Weyl-group (Klimyk) expansion and classical lattice-point models.
//! * [`lemma_verifier`] — machine checks of the counting identities,
//!   recursions and bijections that tie the polytopes to the oracles.
//! * [`verify`] — sweep drivers that run every cross-check over a parameter
//!   range.
//! * [`cli`] — serialization (JSON / CSV / text) and the command-line entry
//!   point used by the `rank2-fusion` binary.

pub mod cli;
pub mod fusion_polytope;
pub mod graded_fusion;
pub mod lemma_verifier;
pub mod lr_oracle;
pub mod polytope;
pub mod root_system;
pub mod verify;

pub use graded_fusion::{GradedDecomposition, QPolynomial};
pub use lr_oracle::TensorDecomposition;
pub use polytope::{IneqSystem, LatticePoint};
pub use root_system::{LieType, RootVector, Weight};

/// Errors reported by the library.
///
/// Hypothesis violations (nondominant input, an inadmissible G2 pair, a
/// malformed Schur comparison) are usage errors; `InvariantViolation` and
/// `Unbounded` indicate that an internal consistency check failed and the
/// computation cannot be trusted.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A weight that must be dominant has a negative coordinate.
    #[error("weight ({0}, {1}) is not dominant (role: {2})")]
    NondominantWeight(i64, i64, &'static str),

    /// The G2 decomposition requires one factor with trivial second
    /// coordinate: min(λ(h2), μ(h2)) = 0.
    #[error(
        "G2 pair λ=({0}, {1}), μ=({2}, {3}) is inadmissible: \
         min(λ(h2), μ(h2)) = 0 is required (one factor must be a multiple \
         of the first fundamental weight)"
    )]
    G2Inadmissible(i64, i64, i64, i64),

    /// An inequality system does not bound one of its coordinates, so its
    /// lattice-point set may be infinite.
    #[error("inequality system leaves coordinate {coord} of {arity} unbounded")]
    Unbounded { coord: usize, arity: usize },

    /// A Schur comparison hypothesis failed.
    #[error("Schur comparison hypothesis violated: {0}")]
    SchurHypothesis(String),

    /// An internal consistency check failed.
    #[error("invariant violation: {0}")]
    InvariantViolation(String),

    /// Output could not be written.
    #[error("output error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

/// Multiplies with overflow detection; panics on wrap.
///
/// All quantities in this crate stay far below `i64::MAX` for the supported
/// parameter ranges, so a wrap can only mean a logic error.
#[inline]
pub(crate) fn mul(a: i64, b: i64) -> i64 {
    a.checked_mul(b)
        .expect("integer overflow in multiplication")
}

/// Adds with overflow detection; panics on wrap.
#[inline]
pub(crate) fn add(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("integer overflow in addition")
}

/// Exact integer division; panics if the divisor does not divide evenly.
#[inline]
pub(crate) fn exact_div(num: i64, den: i64) -> i64 {
    assert!(den != 0, "exact division by zero");
    assert!(
        num % den == 0,
        "inexact division: {num} is not a multiple of {den}"
    );
    num / den
}
