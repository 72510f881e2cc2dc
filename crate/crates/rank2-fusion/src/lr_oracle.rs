//! Independent oracles for classical (ungraded) tensor product
//! multiplicities.
//!
//! Two deliberately separate routes:
//!
//! * [`klimyk_decompose`] — the Weyl-group expansion: for every weight `η`
//!   of `V(μ)` with multiplicity `m`, reflect `λ + η + ρ` into the dominant
//!   chamber and add `sign·m` at the shifted component. This uses only the
//!   root-system layer (Freudenthal multiplicities and signed conjugation),
//!   none of the polytope machinery.
//! * [`enumerate_t_a2`] / [`enumerate_t_c2`] / [`enumerate_t_g2`] — classical
//!   lattice-point models whose cardinality is the total multiplicity
//!   `Σν mult(ν)`: hive-style triples for A2, pattern quadruples for C2 and
//!   a tableau model for G2 (which requires `μ(h2) = 0`; a pair with
//!   `λ(h2) = 0` instead is swapped first).
//! * [`littelmann_tableau_count`] — the G2 tableau count done the long way:
//!   every candidate column word is scanned row by row for dominance of all
//!   partial weights, and the result is cross-checked against the compact
//!   inequality description point by point.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::polytope::{IneqSystem, LatticePoint};
use crate::root_system::{LieType, Weight};
use crate::{add, mul, Error, Result};

/// A classical decomposition: multiplicity of each dominant component.
///
/// Serializes as `{"type", "lambda", "mu", "entries": [{"nu", "mult"}, ...]}`
/// with the entries in descending lexicographic order of `ν`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "TensorWire", from = "TensorWire")]
pub struct TensorDecomposition {
    pub ty: LieType,
    pub lambda: Weight,
    pub mu: Weight,
    /// Keyed by component weight; every stored multiplicity is positive.
    pub entries: BTreeMap<Weight, i64>,
}

#[derive(Serialize, Deserialize)]
struct TensorWire {
    #[serde(rename = "type")]
    ty: LieType,
    lambda: Weight,
    mu: Weight,
    entries: Vec<TensorWireEntry>,
}

#[derive(Serialize, Deserialize)]
struct TensorWireEntry {
    nu: Weight,
    mult: i64,
}

impl From<TensorDecomposition> for TensorWire {
    fn from(d: TensorDecomposition) -> Self {
        TensorWire {
            ty: d.ty,
            lambda: d.lambda,
            mu: d.mu,
            entries: d
                .entries_desc()
                .map(|(&nu, &mult)| TensorWireEntry { nu, mult })
                .collect(),
        }
    }
}

impl From<TensorWire> for TensorDecomposition {
    fn from(w: TensorWire) -> Self {
        TensorDecomposition {
            ty: w.ty,
            lambda: w.lambda,
            mu: w.mu,
            entries: w.entries.into_iter().map(|e| (e.nu, e.mult)).collect(),
        }
    }
}

impl TensorDecomposition {
    /// Components in descending lexicographic order of `ν`.
    pub fn entries_desc(&self) -> impl Iterator<Item = (&Weight, &i64)> {
        self.entries.iter().rev()
    }

    /// The total multiplicity `Σν mult(ν)`.
    pub fn total(&self) -> i64 {
        self.entries.values().copied().fold(0, add)
    }

    /// Checks `Σν mult(ν)·dim V(ν) = dim V(λ)·dim V(μ)`.
    pub fn dimension_check(&self) -> Result<bool> {
        let mut total = 0i64;
        for (&nu, &m) in &self.entries {
            total = add(total, mul(m, self.ty.weyl_dim(nu)?));
        }
        Ok(total == mul(self.ty.weyl_dim(self.lambda)?, self.ty.weyl_dim(self.mu)?))
    }
}

/// Decomposes `V(λ) ⊗ V(μ)` by the Weyl-group expansion over the weights
/// of `V(μ)`.
///
/// Works for any dominant pair of any type; this is the reference oracle
/// the polytope model is compared against.
pub fn klimyk_decompose(ty: LieType, lambda: Weight, mu: Weight) -> Result<TensorDecomposition> {
    lambda.require_dominant("first tensor factor")?;
    mu.require_dominant("second tensor factor")?;
    let mut entries: BTreeMap<Weight, i64> = BTreeMap::new();
    for (&eta, &m) in &ty.weight_multiplicities(mu)? {
        let (rep, sign) = ty.dominant_conjugate_signed(lambda + eta + Weight::RHO);
        if sign == 0 {
            continue;
        }
        let nu = rep - Weight::RHO;
        let slot = entries.entry(nu).or_insert(0);
        *slot = add(*slot, mul(sign, m));
        if *slot == 0 {
            entries.remove(&nu);
        }
    }
    for (nu, &m) in &entries {
        if m < 0 {
            return Err(Error::InvariantViolation(format!(
                "{ty}: λ={lambda}, μ={mu}: negative multiplicity {m} at {nu}"
            )));
        }
    }
    Ok(TensorDecomposition {
        ty,
        lambda,
        mu,
        entries,
    })
}

/// Enumerates the classical lattice-point model for the given type.
pub fn enumerate_t(ty: LieType, lambda: Weight, mu: Weight) -> Result<Vec<LatticePoint>> {
    match ty {
        LieType::A2 => enumerate_t_a2(lambda, mu),
        LieType::C2 => enumerate_t_c2(lambda, mu),
        LieType::G2 => enumerate_t_g2(lambda, mu),
    }
}

/// The A2 triple model: its cardinality is the total multiplicity of
/// `V(λ) ⊗ V(μ)` summed over all components.
pub fn enumerate_t_a2(lambda: Weight, mu: Weight) -> Result<Vec<LatticePoint>> {
    lambda.require_dominant("first tensor factor")?;
    mu.require_dominant("second tensor factor")?;
    t_a2_system_raw(lambda.w1, lambda.w2, mu.w1, mu.w2).enumerate()
}

/// The A2 triple system from raw labels, in coordinates (a, b, c).
/// Negative labels make the system infeasible.
pub(crate) fn t_a2_system_raw(m1: i64, m2: i64, n1: i64, n2: i64) -> IneqSystem {
    IneqSystem::new(3)
        .le(&[0, 1, 0], m2)
        .le(&[0, 1, 0], n1)
        .le(&[1, 1, -1], n1)
        .le(&[-1, 1, 1], m2)
        .le(&[0, 0, 1], n2)
        .le(&[1, 0, 0], m1)
        .le(&[2, 1, -1], add(m1, n1))
        .le(&[-1, 1, 2], add(m2, n2))
}

/// The C2 quadruple model; same counting contract as [`enumerate_t_a2`].
pub fn enumerate_t_c2(lambda: Weight, mu: Weight) -> Result<Vec<LatticePoint>> {
    lambda.require_dominant("first tensor factor")?;
    mu.require_dominant("second tensor factor")?;
    t_c2_system_raw(lambda.w1, lambda.w2, mu.w1, mu.w2).enumerate()
}

/// The C2 quadruple system from raw labels, in coordinates (a, b, c, d).
/// Negative labels make the system infeasible.
pub(crate) fn t_c2_system_raw(m1: i64, m2: i64, n1: i64, n2: i64) -> IneqSystem {
    IneqSystem::new(4)
        .le(&[1, 0, 0, 0], m1)
        .le(&[0, 0, 1, 0], m2)
        .le(&[0, 0, 0, 1], n2)
        .le(&[0, 1, 0, 0], n1)
        .le(&[-1, 1, 1, 0], m2)
        .le(&[-1, 1, 0, 1], m2)
        .le(&[1, 0, 2, -2], n1)
        .le(&[0, 1, 2, -2], n1)
}

/// The G2 tableau model. Requires `μ(h2) = 0`; a pair with `λ(h2) = 0` and
/// `μ(h2) > 0` is swapped first (tensor products commute), and a pair where
/// neither factor qualifies is rejected.
pub fn enumerate_t_g2(lambda: Weight, mu: Weight) -> Result<Vec<LatticePoint>> {
    lambda.require_dominant("first tensor factor")?;
    mu.require_dominant("second tensor factor")?;
    let (lambda, mu) = if mu.w2 == 0 {
        (lambda, mu)
    } else if lambda.w2 == 0 {
        (mu, lambda)
    } else {
        return Err(Error::G2Inadmissible(lambda.w1, lambda.w2, mu.w1, mu.w2));
    };
    t_g2_system(lambda.w1, lambda.w2, mu.w1).enumerate()
}

/// The G2 tableau inequality system for `λ = (m1, m2)`, `μ = (n1, 0)`, in
/// coordinates (a, b, c, d, e, f). Negative labels make it infeasible.
pub(crate) fn t_g2_system(m1: i64, m2: i64, n1: i64) -> IneqSystem {
    IneqSystem::new(6)
        .le(&[1, 1, 1, 1, 1, 1], n1)
        .le(&[0, 0, 1, 0, 0, 0], 1)
        .le(&[0, 1, 0, -1, 1, 0], m2)
        .le(&[0, 0, 0, 0, 0, 1], m1)
        .le(&[0, 0, 0, 0, 1, 0], m2)
        .le(&[1, -2, 0, 2, -1, 1], m1)
        .le(&[0, 0, 1, 2, -1, 1], m1)
}

/// Counts standard dominant tableau columns for the G2 pair `λ = (m1, m2)`,
/// `μ = (n1, 0)` by direct row-by-row scanning.
///
/// A candidate is a tuple `(y2, y3, y34, y4, y5, y6)` of block run lengths
/// with `y34 ≤ 1` and total at most `n1` (`y1` fills the rest). The column
/// of `6·n1` rows is scanned from the bottom; the candidate counts iff both
/// partial-weight functionals stay non-negative at every prefix. Each
/// candidate's verdict is asserted to agree with the compact inequality
/// description, and the total to agree with `enumerate_t_g2` (the models
/// share coordinates, so the identity map is the bijection).
pub fn littelmann_tableau_count(lambda: Weight, mu: Weight) -> Result<i64> {
    lambda.require_dominant("first tensor factor")?;
    mu.require_dominant("second tensor factor")?;
    if mu.w2 != 0 {
        return Err(Error::G2Inadmissible(lambda.w1, lambda.w2, mu.w1, mu.w2));
    }
    let (m1, m2, n1) = (lambda.w1, lambda.w2, mu.w1);

    // The outer candidate space: run lengths with y34 ≤ 1, total ≤ n1.
    let candidates = IneqSystem::new(6)
        .le(&[1, 1, 1, 1, 1, 1], n1)
        .le(&[0, 0, 1, 0, 0, 0], 1)
        .enumerate()?;
    let compact = t_g2_system(m1, m2, n1);

    let mut count = 0i64;
    for tuple in &candidates {
        let scanned = scan_column(m1, m2, n1, tuple.coords());
        let predicted = compact.contains(tuple);
        if scanned != predicted {
            return Err(Error::InvariantViolation(format!(
                "G2 tableau scan disagrees with the inequality description \
                 at {tuple} for λ=({m1}, {m2}), μ=({n1}, 0): \
                 scan {scanned}, inequalities {predicted}"
            )));
        }
        if scanned {
            count = add(count, 1);
        }
    }

    let via_t = enumerate_t_g2(lambda, mu)?.len() as i64;
    if count != via_t {
        return Err(Error::InvariantViolation(format!(
            "G2 tableau count {count} differs from the model cardinality \
             {via_t} for λ=({m1}, {m2}), μ=({n1}, 0)"
        )));
    }
    Ok(count)
}

/// Scans one candidate column bottom-up, checking both dominance
/// functionals at every prefix.
///
/// The column stacks, from top to bottom, `y1` constant blocks of six 1s,
/// then `y2` blocks of six 2s, `y3` of six 3s, at most one mixed block
/// (3,3,3,4,4,4), then `y4` blocks of six 4s, `y5` of six 5s and `y6` of
/// six 6s. With letter counts `c[j]` over the bottom `i` rows, the
/// functionals are `d1 = c1 + 2c3 + c5 - c2 - 2c4 - c6 + 6·m1` and
/// `d2 = c2 + c4 - c3 - c5 + 6·m2`; the column is standard dominant iff
/// both stay non-negative for every `i`.
fn scan_column(m1: i64, m2: i64, n1: i64, runs: &[i64]) -> bool {
    const BLOCKS: [[i64; 6]; 7] = [
        [1, 1, 1, 1, 1, 1], // filler block, multiplicity y1
        [2, 2, 2, 2, 2, 2], // y2
        [3, 3, 3, 3, 3, 3], // y3
        [3, 3, 3, 4, 4, 4], // y34 (at most once)
        [4, 4, 4, 4, 4, 4], // y4
        [5, 5, 5, 5, 5, 5], // y5
        [6, 6, 6, 6, 6, 6], // y6
    ];
    let y1 = n1 - runs.iter().sum::<i64>();
    assert!(y1 >= 0, "candidate space guarantees the filler count");
    let mut column: Vec<i64> = Vec::with_capacity((6 * n1) as usize);
    for (block, &reps) in BLOCKS.iter().zip(std::iter::once(&y1).chain(runs.iter())) {
        for _ in 0..reps {
            column.extend_from_slice(block);
        }
    }

    let mut counts = [0i64; 7];
    for &letter in column.iter().rev() {
        counts[letter as usize] += 1;
        let c = &counts;
        let d1 = c[1] + 2 * c[3] + c[5] - c[2] - 2 * c[4] - c[6] + 6 * m1;
        let d2 = c[2] + c[4] - c[3] - c[5] + 6 * m2;
        if d1 < 0 || d2 < 0 {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(a: i64, b: i64) -> Weight {
        Weight::new(a, b)
    }

    fn klimyk_entries(ty: LieType, l: Weight, m: Weight) -> Vec<((i64, i64), i64)> {
        klimyk_decompose(ty, l, m)
            .unwrap()
            .entries_desc()
            .map(|(nu, &k)| ((nu.w1, nu.w2), k))
            .collect()
    }

    #[test]
    fn a2_fundamental_square() {
        assert_eq!(
            klimyk_entries(LieType::A2, w(1, 0), w(1, 0)),
            vec![((2, 0), 1), ((0, 1), 1)]
        );
    }

    #[test]
    fn a2_adjoint_square() {
        // V(1,1) ⊗ V(1,1) = V(2,2) + V(3,0) + V(0,3) + 2V(1,1) + V(0,0).
        assert_eq!(
            klimyk_entries(LieType::A2, w(1, 1), w(1, 1)),
            vec![
                ((3, 0), 1),
                ((2, 2), 1),
                ((1, 1), 2),
                ((0, 3), 1),
                ((0, 0), 1),
            ]
        );
    }

    #[test]
    fn c2_vector_square() {
        assert_eq!(
            klimyk_entries(LieType::C2, w(1, 0), w(1, 0)),
            vec![((2, 0), 1), ((0, 1), 1), ((0, 0), 1)]
        );
    }

    #[test]
    fn g2_seven_dimensional_square() {
        // 7 ⊗ 7 = 27 + 14 + 7 + 1.
        assert_eq!(
            klimyk_entries(LieType::G2, w(1, 0), w(1, 0)),
            vec![((2, 0), 1), ((1, 0), 1), ((0, 1), 1), ((0, 0), 1)]
        );
    }

    #[test]
    fn klimyk_dimension_identity_on_samples() {
        let cases = [
            (LieType::A2, w(2, 1), w(1, 2)),
            (LieType::C2, w(2, 1), w(1, 2)),
            (LieType::C2, w(3, 0), w(0, 2)),
            (LieType::G2, w(1, 1), w(2, 2)),
            (LieType::G2, w(2, 0), w(1, 2)),
        ];
        for (ty, l, m) in cases {
            let d = klimyk_decompose(ty, l, m).unwrap();
            assert!(d.dimension_check().unwrap(), "{ty} {l} {m}");
            assert_eq!(
                d.entries,
                klimyk_decompose(ty, m, l).unwrap().entries,
                "{ty}: tensor products commute"
            );
        }
    }

    #[test]
    fn model_totals_match_klimyk_on_samples() {
        let a2 = [(w(1, 0), w(0, 1)), (w(2, 1), w(1, 2)), (w(3, 3), w(2, 0))];
        for (l, m) in a2 {
            let total = klimyk_decompose(LieType::A2, l, m).unwrap().total();
            assert_eq!(
                enumerate_t_a2(l, m).unwrap().len() as i64,
                total,
                "A2 {l} {m}"
            );
        }
        let c2 = [(w(1, 0), w(1, 0)), (w(2, 1), w(1, 2)), (w(0, 2), w(3, 1))];
        for (l, m) in c2 {
            let total = klimyk_decompose(LieType::C2, l, m).unwrap().total();
            assert_eq!(
                enumerate_t_c2(l, m).unwrap().len() as i64,
                total,
                "C2 {l} {m}"
            );
        }
        let g2 = [(w(1, 0), w(1, 0)), (w(1, 1), w(2, 0)), (w(0, 2), w(3, 0))];
        for (l, m) in g2 {
            let total = klimyk_decompose(LieType::G2, l, m).unwrap().total();
            assert_eq!(
                enumerate_t_g2(l, m).unwrap().len() as i64,
                total,
                "G2 {l} {m}"
            );
        }
    }

    #[test]
    fn g2_model_swaps_the_factors_when_needed() {
        let direct = enumerate_t_g2(w(2, 0), w(1, 1));
        let swapped = enumerate_t_g2(w(1, 1), w(2, 0));
        assert_eq!(direct.unwrap(), swapped.unwrap());
        assert!(matches!(
            enumerate_t_g2(w(1, 1), w(1, 1)),
            Err(Error::G2Inadmissible(..))
        ));
    }

    #[test]
    fn tableau_count_matches_the_model() {
        for (l, m) in [
            (w(1, 0), w(1, 0)),
            (w(1, 1), w(2, 0)),
            (w(2, 1), w(3, 0)),
            (w(0, 2), w(4, 0)),
        ] {
            let count = littelmann_tableau_count(l, m).unwrap();
            assert_eq!(count, enumerate_t_g2(l, m).unwrap().len() as i64, "{l} {m}");
        }
        assert_eq!(littelmann_tableau_count(w(1, 0), w(1, 0)).unwrap(), 4);
    }

    #[test]
    fn tableau_count_requires_trivial_second_coordinate() {
        assert!(matches!(
            littelmann_tableau_count(w(1, 0), w(1, 1)),
            Err(Error::G2Inadmissible(..))
        ));
    }
}
