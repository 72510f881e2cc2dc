//! The decomposition polytopes `S(λ, μ)` whose lattice points carry the
//! graded tensor multiplicities.
//!
//! For dominant `λ = (m1, m2)` and `μ = (n1, n2)` the polytope lives in
//! `Z^3` (A2), `Z^4` (C2) or `Z^6` (G2), cut out by the inequality lists
//! below; `min{x, y}` bounds are expanded into two constraints. Each point
//! `s` carries two statistics:
//!
//! * `degree(s)` — the sum of its coordinates (the grading exponent);
//! * `weight_statistic(s)` — a root-lattice element; the point contributes
//!   multiplicity to `ν = λ + μ - weight_statistic(s)`.
//!
//! The G2 polytope is only a decomposition model under the admissibility
//! hypothesis `min(λ(h2), μ(h2)) = 0`: one factor must be a multiple of the
//! first fundamental weight.

use crate::polytope::{IneqSystem, LatticePoint};
use crate::root_system::{LieType, RootVector, Weight};
use crate::{add, mul, Error, Result};

/// Expected polytope arity per type: 3, 4, 6.
pub fn arity(ty: LieType) -> usize {
    match ty {
        LieType::A2 => 3,
        LieType::C2 => 4,
        LieType::G2 => 6,
    }
}

/// Checks the G2 admissibility hypothesis `min(λ(h2), μ(h2)) = 0`.
/// A2 and C2 pairs are always admissible.
pub fn require_admissible(ty: LieType, lambda: Weight, mu: Weight) -> Result<()> {
    if ty == LieType::G2 && lambda.w2.min(mu.w2) != 0 {
        return Err(Error::G2Inadmissible(lambda.w1, lambda.w2, mu.w1, mu.w2));
    }
    Ok(())
}

/// Builds the inequality system for `S(λ, μ)`.
///
/// Both weights must be dominant, and a G2 pair must be admissible.
pub fn build_s_system(ty: LieType, lambda: Weight, mu: Weight) -> Result<IneqSystem> {
    lambda.require_dominant("first tensor factor")?;
    mu.require_dominant("second tensor factor")?;
    require_admissible(ty, lambda, mu)?;
    Ok(s_system_raw(ty, lambda.w1, lambda.w2, mu.w1, mu.w2))
}

/// The `S(λ, μ)` system from raw labels, without dominance or admissibility
/// checks. Negative labels are allowed and make the system infeasible, which
/// is the convention the counting recursions use for shifted weights.
pub(crate) fn s_system_raw(ty: LieType, m1: i64, m2: i64, n1: i64, n2: i64) -> IneqSystem {
    match ty {
        // Coordinates (a, b, c).
        LieType::A2 => IneqSystem::new(3)
            .le(&[1, 0, 0], m1)
            .le(&[1, 0, 0], n1)
            .le(&[0, 0, 1], m2)
            .le(&[0, 0, 1], n2)
            .le(&[1, 1, 1], add(m1, m2))
            .le(&[1, 1, 1], add(n1, n2))
            .le(&[2, 1, 0], add(m1, n1))
            .le(&[0, 1, 2], add(m2, n2)),
        // Coordinates (a, b, c, d).
        LieType::C2 => IneqSystem::new(4)
            .le(&[1, 0, 0, 0], m1)
            .le(&[1, 0, 0, 0], n1)
            .le(&[0, 0, 0, 1], m2)
            .le(&[0, 0, 0, 1], n2)
            .le(&[1, 1, 1, 0], add(m1, m2))
            .le(&[1, 1, 1, 0], add(n1, n2))
            .le(&[1, 1, 0, 1], add(m1, m2))
            .le(&[1, 1, 0, 1], add(n1, n2))
            .le(&[2, 1, 0, 0], add(m1, n1))
            .le(&[0, 1, 0, 2], add(m2, n2))
            .le(&[2, 1, 2, -2], add(m1, n1)),
        // Coordinates (a, b, c, d, e, f).
        LieType::G2 => IneqSystem::new(6)
            .le(&[1, 0, 0, 0, 0, 0], m1)
            .le(&[1, 0, 0, 0, 0, 0], n1)
            .le(&[0, 1, 0, 0, 0, 0], add(m2, n2))
            .le(&[0, 0, 0, 0, 0, 1], m2)
            .le(&[0, 0, 0, 0, 0, 1], n2)
            .le(&[-1, 1, 0, 0, 1, 0], add(m2, n2))
            .le(&[1, 0, 1, 1, 0, 0], add(m1, m2))
            .le(&[1, 0, 1, 1, 0, 0], add(n1, n2))
            .le(&[1, 1, 1, 0, 0, 0], add(m1, m2))
            .le(&[1, 1, 1, 0, 0, 0], add(n1, n2))
            .le(&[1, 1, 1, 1, 0, 0], add(m1, mul(2, m2)))
            .le(&[1, 1, 1, 1, 0, 0], add(n1, mul(2, n2)))
            .le(&[0, 1, 1, 1, 1, 0], add(m1, mul(2, m2)))
            .le(&[0, 1, 1, 1, 1, 0], add(n1, mul(2, n2)))
            .le(&[2, -1, 2, 3, 0, 0], add(m1, n1))
            .le(&[2, 1, 2, 1, 0, 0], add(m1, n1)),
    }
}

/// Enumerates `S(λ, μ)` in lexicographic order.
pub fn enumerate_s(ty: LieType, lambda: Weight, mu: Weight) -> Result<Vec<LatticePoint>> {
    build_s_system(ty, lambda, mu)?.enumerate()
}

/// The root-lattice statistic of a point; the point contributes to the
/// component `ν = λ + μ - weight_statistic`.
pub fn weight_statistic(ty: LieType, s: &LatticePoint) -> Weight {
    assert_eq!(
        s.arity(),
        arity(ty),
        "lattice point arity does not match the {ty} polytope"
    );
    let c = s.coords();
    let root = match ty {
        LieType::A2 => RootVector::new(add(c[0], c[1]), add(c[1], c[2])),
        LieType::C2 => RootVector::new(
            add(add(c[0], c[1]), mul(2, c[2])),
            add(add(c[1], c[2]), c[3]),
        ),
        LieType::G2 => RootVector::new(
            add(
                add(add(c[0], c[1]), mul(2, c[2])),
                add(mul(3, c[3]), mul(3, c[4])),
            ),
            add(add(add(c[1], c[2]), c[3]), mul(2, c[4])),
        ),
    };
    ty.root_to_weight(root)
}
