//! Graded tensor decompositions and the comparisons built on them.
//!
//! `graded_decompose(ty, λ, μ)` enumerates the polytope `S(λ, μ)` and files
//! each point `s` under the component `ν = λ + μ - weight_statistic(s)` at
//! degree `degree(s)`, producing a `q`-polynomial per component. Setting
//! `q = 1` recovers the classical tensor product multiplicities, which is
//! what the sweeps in [`crate::verify`] check against the independent
//! oracles.
//!
//! `schur_positivity_check` compares two tensor pairs with equal total
//! weight: when the row minima of coroot pairings of the first pair are
//! dominated by those of the second, every classical multiplicity of the
//! first is bounded by the second. The graded (coefficientwise) analogue is
//! not asserted anywhere; [`graded_domination_report`] only reports it.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::fusion_polytope::{enumerate_s, weight_statistic};
use crate::lr_oracle::{klimyk_decompose, TensorDecomposition};
use crate::root_system::{LieType, Weight};
use crate::{add, mul, Error, Result};

/// A polynomial in `q` with non-negative integer coefficients, stored as
/// `coeffs[k] = coefficient of q^k` with no trailing zero.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct QPolynomial {
    coeffs: Vec<i64>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        QPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPolynomial { coeffs: vec![1] }
    }

    pub fn from_coeffs(coeffs: Vec<i64>) -> Self {
        assert!(
            coeffs.iter().all(|&c| c >= 0),
            "coefficients must be non-negative"
        );
        let mut p = QPolynomial { coeffs };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    /// Adds one to the coefficient of `q^degree`.
    pub fn bump(&mut self, degree: i64) {
        let idx = usize::try_from(degree).expect("degrees are non-negative");
        if self.coeffs.len() <= idx {
            self.coeffs.resize(idx + 1, 0);
        }
        self.coeffs[idx] = add(self.coeffs[idx], 1);
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Evaluation at `q = 1`: the coefficient sum.
    pub fn eval_at_one(&self) -> i64 {
        self.coeffs.iter().copied().fold(0, add)
    }

    /// True when every coefficient of `self` is at most the matching
    /// coefficient of `other`.
    pub fn dominated_by(&self, other: &QPolynomial) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(k, &c)| c <= other.coeffs.get(k).copied().unwrap_or(0))
    }

    /// Renders the polynomial as, for example, `1 + 2q + q^3`.
    pub fn display(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut terms = Vec::new();
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let term = match (k, c) {
                (0, c) => format!("{c}"),
                (1, 1) => "q".to_string(),
                (1, c) => format!("{c}q"),
                (k, 1) => format!("q^{k}"),
                (k, c) => format!("{c}q^{k}"),
            };
            terms.push(term);
        }
        terms.join(" + ")
    }
}

/// A graded decomposition of `V(λ) ⊗ V(μ)`: a `q`-polynomial for every
/// dominant component `ν`.
///
/// Serializes as `{"type", "lambda", "mu", "entries": [{"nu", "poly"}, ...]}`
/// with the entries in descending lexicographic order of `ν`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "GradedWire", from = "GradedWire")]
pub struct GradedDecomposition {
    pub ty: LieType,
    pub lambda: Weight,
    pub mu: Weight,
    /// Keyed by component weight; every stored polynomial is nonzero.
    pub entries: BTreeMap<Weight, QPolynomial>,
}

#[derive(Serialize, Deserialize)]
struct GradedWire {
    #[serde(rename = "type")]
    ty: LieType,
    lambda: Weight,
    mu: Weight,
    entries: Vec<GradedWireEntry>,
}

#[derive(Serialize, Deserialize)]
struct GradedWireEntry {
    nu: Weight,
    poly: QPolynomial,
}

impl From<GradedDecomposition> for GradedWire {
    fn from(d: GradedDecomposition) -> Self {
        GradedWire {
            ty: d.ty,
            lambda: d.lambda,
            mu: d.mu,
            entries: d
                .entries_desc()
                .map(|(&nu, poly)| GradedWireEntry {
                    nu,
                    poly: poly.clone(),
                })
                .collect(),
        }
    }
}

impl From<GradedWire> for GradedDecomposition {
    fn from(w: GradedWire) -> Self {
        GradedDecomposition {
            ty: w.ty,
            lambda: w.lambda,
            mu: w.mu,
            entries: w
                .entries
                .into_iter()
                .map(|e| (e.nu, QPolynomial::from_coeffs(e.poly.coeffs)))
                .filter(|(_, p)| !p.is_zero())
                .collect(),
        }
    }
}

impl GradedDecomposition {
    /// Components in descending lexicographic order of `ν`, the order used
    /// by every serialized form.
    pub fn entries_desc(&self) -> impl Iterator<Item = (&Weight, &QPolynomial)> {
        self.entries.iter().rev()
    }

    /// Forgets the grading: the multiplicity of each component at `q = 1`.
    pub fn at_q_one(&self) -> TensorDecomposition {
        TensorDecomposition {
            ty: self.ty,
            lambda: self.lambda,
            mu: self.mu,
            entries: self
                .entries
                .iter()
                .map(|(&nu, p)| (nu, p.eval_at_one()))
                .collect(),
        }
    }

    /// Total lattice-point count: the sum of all coefficients.
    pub fn total(&self) -> i64 {
        self.entries
            .values()
            .map(QPolynomial::eval_at_one)
            .fold(0, add)
    }
}

/// Computes the graded decomposition of `V(λ) ⊗ V(μ)` from the lattice
/// points of `S(λ, μ)`.
///
/// Fails on nondominant input or an inadmissible G2 pair; a lattice point
/// whose component weight is not dominant would falsify the model and is
/// reported as an invariant violation.
pub fn graded_decompose(ty: LieType, lambda: Weight, mu: Weight) -> Result<GradedDecomposition> {
    let points = enumerate_s(ty, lambda, mu)?;
    let top = lambda + mu;
    let mut entries: BTreeMap<Weight, QPolynomial> = BTreeMap::new();
    for s in &points {
        let nu = top - weight_statistic(ty, s);
        if !nu.is_dominant() {
            return Err(Error::InvariantViolation(format!(
                "{ty}: λ={lambda}, μ={mu}: point {s} yields nondominant component {nu}"
            )));
        }
        entries
            .entry(nu)
            .or_insert_with(QPolynomial::zero)
            .bump(s.degree());
    }
    Ok(GradedDecomposition {
        ty,
        lambda,
        mu,
        entries,
    })
}

/// Checks `Σν (polynomial at q=1)·dim V(ν) = dim V(λ)·dim V(μ)`.
pub fn dimension_check(d: &GradedDecomposition) -> Result<bool> {
    let mut total = 0i64;
    for (&nu, poly) in &d.entries {
        total = add(total, mul(poly.eval_at_one(), d.ty.weyl_dim(nu)?));
    }
    let expected = mul(d.ty.weyl_dim(d.lambda)?, d.ty.weyl_dim(d.mu)?);
    Ok(total == expected)
}

/// Outcome of a classical Schur-positivity comparison between
/// `V(λ1) ⊗ V(λ2)` and `V(μ1) ⊗ V(μ2)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(into = "SchurWire")]
pub struct SchurComparison {
    pub ty: LieType,
    pub pair_left: (Weight, Weight),
    pub pair_right: (Weight, Weight),
    /// Rows `(ν, multiplicity on the left, multiplicity on the right)` for
    /// every component appearing on either side, descending in `ν`.
    pub rows: Vec<(Weight, i64, i64)>,
    /// True when every left multiplicity is at most the right one.
    pub dominated: bool,
}

#[derive(Serialize)]
struct SchurWire {
    #[serde(rename = "type")]
    ty: LieType,
    pair_left: [Weight; 2],
    pair_right: [Weight; 2],
    rows: Vec<SchurWireRow>,
    dominated: bool,
}

#[derive(Serialize)]
struct SchurWireRow {
    nu: Weight,
    left: i64,
    right: i64,
}

impl From<SchurComparison> for SchurWire {
    fn from(c: SchurComparison) -> Self {
        SchurWire {
            ty: c.ty,
            pair_left: [c.pair_left.0, c.pair_left.1],
            pair_right: [c.pair_right.0, c.pair_right.1],
            rows: c
                .rows
                .into_iter()
                .map(|(nu, left, right)| SchurWireRow { nu, left, right })
                .collect(),
            dominated: c.dominated,
        }
    }
}

/// Compares classical multiplicities of two tensor pairs under the
/// hypotheses: all four weights dominant, `λ1 + λ2 = μ1 + μ2`, the row
/// minima condition `min(λ1(h_α), λ2(h_α)) ≤ min(μ1(h_α), μ2(h_α))` for
/// every positive root `α`, and for G2 that `λ2` and `μ2` are multiples of
/// the first fundamental weight.
///
/// Returns the per-component comparison; `dominated` is the conclusion the
/// hypotheses guarantee.
pub fn schur_positivity_check(
    ty: LieType,
    lambda1: Weight,
    lambda2: Weight,
    mu1: Weight,
    mu2: Weight,
) -> Result<SchurComparison> {
    for (w, role) in [(lambda1, "λ1"), (lambda2, "λ2"), (mu1, "μ1"), (mu2, "μ2")] {
        if !w.is_dominant() {
            return Err(Error::SchurHypothesis(format!(
                "{role} = {w} is not dominant"
            )));
        }
    }
    if lambda1 + lambda2 != mu1 + mu2 {
        return Err(Error::SchurHypothesis(format!(
            "total weights differ: λ1+λ2 = {}, μ1+μ2 = {}",
            lambda1 + lambda2,
            mu1 + mu2
        )));
    }
    if ty == LieType::G2 && (lambda2.w2 != 0 || mu2.w2 != 0) {
        return Err(Error::SchurHypothesis(format!(
            "G2 comparison requires λ2 and μ2 to be multiples of the first \
             fundamental weight; got λ2 = {lambda2}, μ2 = {mu2}"
        )));
    }
    for &alpha in ty.positive_roots() {
        let left = ty
            .coroot_pairing(lambda1, alpha)
            .min(ty.coroot_pairing(lambda2, alpha));
        let right = ty
            .coroot_pairing(mu1, alpha)
            .min(ty.coroot_pairing(mu2, alpha));
        if left > right {
            return Err(Error::SchurHypothesis(format!(
                "row minima condition fails at positive root {alpha}: \
                 min over the first pair is {left}, over the second {right}"
            )));
        }
    }

    let left = klimyk_decompose(ty, lambda1, lambda2)?;
    let right = klimyk_decompose(ty, mu1, mu2)?;
    let mut keys: Vec<Weight> = left
        .entries
        .keys()
        .chain(right.entries.keys())
        .copied()
        .collect();
    keys.sort();
    keys.dedup();
    keys.reverse();
    let rows: Vec<(Weight, i64, i64)> = keys
        .into_iter()
        .map(|nu| {
            (
                nu,
                left.entries.get(&nu).copied().unwrap_or(0),
                right.entries.get(&nu).copied().unwrap_or(0),
            )
        })
        .collect();
    let dominated = rows.iter().all(|&(_, l, r)| l <= r);
    Ok(SchurComparison {
        ty,
        pair_left: (lambda1, lambda2),
        pair_right: (mu1, mu2),
        rows,
        dominated,
    })
}

/// Exploratory graded comparison: per component, whether the left
/// `q`-polynomial is coefficientwise dominated by the right one.
///
/// This is a report, not a theorem: callers must not treat a `false` here
/// as an error. Requires both pairs to be admissible for the graded model.
pub fn graded_domination_report(
    ty: LieType,
    pair_left: (Weight, Weight),
    pair_right: (Weight, Weight),
) -> Result<Vec<(Weight, QPolynomial, QPolynomial, bool)>> {
    let left = graded_decompose(ty, pair_left.0, pair_left.1)?;
    let right = graded_decompose(ty, pair_right.0, pair_right.1)?;
    let mut keys: Vec<Weight> = left
        .entries
        .keys()
        .chain(right.entries.keys())
        .copied()
        .collect();
    keys.sort();
    keys.dedup();
    keys.reverse();
    Ok(keys
        .into_iter()
        .map(|nu| {
            let l = left
                .entries
                .get(&nu)
                .cloned()
                .unwrap_or_else(QPolynomial::zero);
            let r = right
                .entries
                .get(&nu)
                .cloned()
                .unwrap_or_else(QPolynomial::zero);
            let dominated = l.dominated_by(&r);
            (nu, l, r, dominated)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn entries(ty: LieType, l: (i64, i64), m: (i64, i64)) -> Vec<((i64, i64), Vec<i64>)> {
        graded_decompose(ty, Weight::new(l.0, l.1), Weight::new(m.0, m.1))
            .unwrap()
            .entries_desc()
            .map(|(nu, p)| ((nu.w1, nu.w2), p.coeffs().to_vec()))
            .collect()
    }

    #[test]
    fn a2_fundamental_times_dual() {
        assert_eq!(
            entries(LieType::A2, (1, 0), (0, 1)),
            vec![((1, 1), vec![1]), ((0, 0), vec![0, 1])]
        );
    }

    #[test]
    fn c2_vector_square() {
        assert_eq!(
            entries(LieType::C2, (1, 0), (1, 0)),
            vec![
                ((2, 0), vec![1]),
                ((0, 1), vec![0, 1]),
                ((0, 0), vec![0, 1]),
            ]
        );
    }

    #[test]
    fn g2_seven_dimensional_square() {
        assert_eq!(
            entries(LieType::G2, (1, 0), (1, 0)),
            vec![
                ((2, 0), vec![1]),
                ((1, 0), vec![0, 1]),
                ((0, 1), vec![0, 1]),
                ((0, 0), vec![0, 0, 1]),
            ]
        );
    }

    #[test]
    fn cartan_component_is_the_constant_one() {
        let cases = [
            (LieType::A2, (2, 1), (1, 2)),
            (LieType::C2, (2, 2), (1, 1)),
            (LieType::G2, (2, 1), (3, 0)),
        ];
        for (ty, l, m) in cases {
            let (lambda, mu) = (Weight::new(l.0, l.1), Weight::new(m.0, m.1));
            let d = graded_decompose(ty, lambda, mu).unwrap();
            assert_eq!(d.entries[&(lambda + mu)], QPolynomial::one(), "{ty}");
            assert!(d.entries.values().all(|p| !p.is_zero()), "{ty}");
        }
    }

    #[test]
    fn dimension_identity_on_samples() {
        let cases = [
            (LieType::A2, (2, 1), (1, 2)),
            (LieType::A2, (3, 0), (0, 3)),
            (LieType::C2, (2, 1), (1, 2)),
            (LieType::C2, (0, 2), (3, 1)),
            (LieType::G2, (1, 1), (2, 0)),
            (LieType::G2, (3, 0), (0, 2)),
        ];
        for (ty, l, m) in cases {
            let d = graded_decompose(ty, Weight::new(l.0, l.1), Weight::new(m.0, m.1)).unwrap();
            assert!(dimension_check(&d).unwrap(), "{ty} {l:?} {m:?}");
        }
    }

    #[test]
    fn qpolynomial_normalization_and_display() {
        let p = QPolynomial::from_coeffs(vec![1, 0, 2, 0, 0]);
        assert_eq!(p.coeffs(), &[1, 0, 2]);
        assert_eq!(p.display(), "1 + 2q^2");
        assert_eq!(p.eval_at_one(), 3);
        assert_eq!(QPolynomial::zero().display(), "0");
        let mut q = QPolynomial::zero();
        q.bump(1);
        assert_eq!(q.display(), "q");
        assert!(QPolynomial::from_coeffs(vec![0, 1])
            .dominated_by(&QPolynomial::from_coeffs(vec![1, 1])));
        assert!(
            !QPolynomial::from_coeffs(vec![2]).dominated_by(&QPolynomial::from_coeffs(vec![1, 5]))
        );
    }

    #[test]
    fn serialized_decomposition_round_trips() {
        let d = graded_decompose(LieType::G2, Weight::new(1, 0), Weight::new(1, 0)).unwrap();
        let json = serde_json::to_string(&d).unwrap();
        let back: GradedDecomposition = serde_json::from_str(&json).unwrap();
        assert_eq!(d, back);
        // Entries are descending in ν, so the Cartan component comes first.
        assert!(json.find("[2,0]").unwrap() < json.find("[0,0]").unwrap());
    }

    #[test]
    fn schur_comparison_rejects_bad_hypotheses() {
        // Totals differ.
        let err = schur_positivity_check(
            LieType::A2,
            Weight::new(1, 0),
            Weight::new(1, 0),
            Weight::new(1, 1),
            Weight::new(1, 1),
        );
        assert!(matches!(err, Err(Error::SchurHypothesis(_))));
        // Row minima fail: (1,1),(1,1) vs (2,2),(0,0) at any simple root.
        let err = schur_positivity_check(
            LieType::A2,
            Weight::new(1, 1),
            Weight::new(1, 1),
            Weight::new(2, 2),
            Weight::ZERO,
        );
        assert!(matches!(err, Err(Error::SchurHypothesis(_))));
    }

    #[test]
    fn schur_comparison_on_a_classical_instance() {
        // (2,0)·(0,0) against (1,0)·(1,0): the split pair dominates.
        let cmp = schur_positivity_check(
            LieType::A2,
            Weight::new(2, 0),
            Weight::ZERO,
            Weight::new(1, 0),
            Weight::new(1, 0),
        )
        .unwrap();
        assert!(cmp.dominated);
        assert_eq!(
            cmp.rows,
            vec![(Weight::new(2, 0), 1, 1), (Weight::new(0, 1), 0, 1)]
        );
    }
}
