//! Cartan data and weight combinatorics for the rank-two simple Lie algebras.
//!
//! Conventions, fixed once and used everywhere:
//!
//! * Weights are written in fundamental-weight coordinates: `λ = (λ1, λ2)`
//!   means `λ = λ1·ϖ1 + λ2·ϖ2`, so `λi = λ(hi)`.
//! * Roots are written in simple-root coordinates: `α = (r1, r2)` means
//!   `α = r1·α1 + r2·α2`.
//! * The Cartan matrix is `a[i][j] = αj(hi)`; for C2 and G2 the first simple
//!   root is the short one, so `a[0][1]` is `-2` (C2) or `-3` (G2).
//! * The invariant form `B` is normalised so short roots have squared length
//!   2: `B(ϖi, αj) = dj·δij` with symmetrizers `d = (1,1)`, `(1,2)`, `(1,3)`.
//!
//! `B` on a pair of weights is rational with denominator dividing
//! `det(Cartan)`, so the Freudenthal recursion is run against the det-scaled
//! form, which is integral; the final division is checked to be exact.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{add, exact_div, mul, Error, Result};

/// One of the three rank-two simple Lie algebras.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LieType {
    A2,
    C2,
    G2,
}

/// A weight in fundamental-weight coordinates.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, Default,
)]
#[serde(from = "[i64; 2]", into = "[i64; 2]")]
pub struct Weight {
    pub w1: i64,
    pub w2: i64,
}

/// An element of the root lattice in simple-root coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootVector {
    pub r1: i64,
    pub r2: i64,
}

impl Weight {
    /// Half the sum of positive roots; `ρ = ϖ1 + ϖ2` for every type.
    pub const RHO: Weight = Weight { w1: 1, w2: 1 };

    pub const ZERO: Weight = Weight { w1: 0, w2: 0 };

    pub fn new(w1: i64, w2: i64) -> Self {
        Weight { w1, w2 }
    }

    pub fn is_dominant(self) -> bool {
        self.w1 >= 0 && self.w2 >= 0
    }

    /// Requires dominance, naming the weight's role in the failure message.
    pub fn require_dominant(self, role: &'static str) -> Result<Self> {
        if self.is_dominant() {
            Ok(self)
        } else {
            Err(Error::NondominantWeight(self.w1, self.w2, role))
        }
    }
}

impl std::ops::Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        Weight::new(add(self.w1, rhs.w1), add(self.w2, rhs.w2))
    }
}

impl std::ops::Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        Weight::new(add(self.w1, -rhs.w1), add(self.w2, -rhs.w2))
    }
}

impl From<[i64; 2]> for Weight {
    fn from(a: [i64; 2]) -> Self {
        Weight::new(a[0], a[1])
    }
}

impl From<Weight> for [i64; 2] {
    fn from(w: Weight) -> Self {
        [w.w1, w.w2]
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.w1, self.w2)
    }
}

impl RootVector {
    pub fn new(r1: i64, r2: i64) -> Self {
        RootVector { r1, r2 }
    }

    /// Height of the root-lattice element: the sum of its coordinates.
    pub fn height(self) -> i64 {
        add(self.r1, self.r2)
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}·α1 + {}·α2", self.r1, self.r2)
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LieType::A2 => "A2",
            LieType::C2 => "C2",
            LieType::G2 => "G2",
        })
    }
}

impl std::str::FromStr for LieType {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "A2" | "a2" => Ok(LieType::A2),
            "C2" | "c2" => Ok(LieType::C2),
            "G2" | "g2" => Ok(LieType::G2),
            other => Err(format!("unknown type {other:?}; expected A2, C2 or G2")),
        }
    }
}

const POSITIVE_ROOTS_A2: [RootVector; 3] = [
    RootVector { r1: 1, r2: 0 },
    RootVector { r1: 0, r2: 1 },
    RootVector { r1: 1, r2: 1 },
];

const POSITIVE_ROOTS_C2: [RootVector; 4] = [
    RootVector { r1: 1, r2: 0 },
    RootVector { r1: 0, r2: 1 },
    RootVector { r1: 1, r2: 1 },
    RootVector { r1: 2, r2: 1 },
];

const POSITIVE_ROOTS_G2: [RootVector; 6] = [
    RootVector { r1: 1, r2: 0 },
    RootVector { r1: 0, r2: 1 },
    RootVector { r1: 1, r2: 1 },
    RootVector { r1: 2, r2: 1 },
    RootVector { r1: 3, r2: 1 },
    RootVector { r1: 3, r2: 2 },
];

impl LieType {
    pub const ALL: [LieType; 3] = [LieType::A2, LieType::C2, LieType::G2];

    /// Cartan matrix `a[i][j] = αj(hi)`.
    pub fn cartan(self) -> [[i64; 2]; 2] {
        match self {
            LieType::A2 => [[2, -1], [-1, 2]],
            LieType::C2 => [[2, -2], [-1, 2]],
            LieType::G2 => [[2, -3], [-1, 2]],
        }
    }

    /// Symmetrizers `d` with `d[i]·a[i][j]` symmetric; `d[i] = B(αi, αi)/2`.
    pub fn symmetrizers(self) -> [i64; 2] {
        match self {
            LieType::A2 => [1, 1],
            LieType::C2 => [1, 2],
            LieType::G2 => [1, 3],
        }
    }

    pub fn positive_roots(self) -> &'static [RootVector] {
        match self {
            LieType::A2 => &POSITIVE_ROOTS_A2,
            LieType::C2 => &POSITIVE_ROOTS_C2,
            LieType::G2 => &POSITIVE_ROOTS_G2,
        }
    }

    pub fn weyl_order(self) -> usize {
        match self {
            LieType::A2 => 6,
            LieType::C2 => 8,
            LieType::G2 => 12,
        }
    }

    pub fn cartan_det(self) -> i64 {
        match self {
            LieType::A2 => 3,
            LieType::C2 => 2,
            LieType::G2 => 1,
        }
    }

    /// Adjugate of the Cartan matrix: `adj(A)·A = det(A)·I`.
    fn cartan_adjugate(self) -> [[i64; 2]; 2] {
        let a = self.cartan();
        [[a[1][1], -a[0][1]], [-a[1][0], a[0][0]]]
    }

    /// Converts simple-root coordinates to fundamental-weight coordinates:
    /// the image of `v` under the Cartan matrix.
    pub fn root_to_weight(self, v: RootVector) -> Weight {
        let a = self.cartan();
        Weight::new(
            add(mul(a[0][0], v.r1), mul(a[0][1], v.r2)),
            add(mul(a[1][0], v.r1), mul(a[1][1], v.r2)),
        )
    }

    /// Simple-root coordinates of `w` scaled by `det(Cartan)`: `adj(A)·w`.
    pub fn weight_to_root_scaled(self, w: Weight) -> (i64, i64) {
        let adj = self.cartan_adjugate();
        (
            add(mul(adj[0][0], w.w1), mul(adj[0][1], w.w2)),
            add(mul(adj[1][0], w.w1), mul(adj[1][1], w.w2)),
        )
    }

    /// Exact simple-root coordinates of `w`, if `w` lies in the root lattice.
    pub fn weight_to_root(self, w: Weight) -> Option<RootVector> {
        let det = self.cartan_det();
        let (s1, s2) = self.weight_to_root_scaled(w);
        if s1 % det == 0 && s2 % det == 0 {
            Some(RootVector::new(s1 / det, s2 / det))
        } else {
            None
        }
    }

    /// `λ - η` as a non-negative root-lattice element, if it is one.
    pub fn dominance_gap(self, lambda: Weight, eta: Weight) -> Option<RootVector> {
        self.weight_to_root(lambda - eta)
            .filter(|v| v.r1 >= 0 && v.r2 >= 0)
    }

    /// Invariant form of a weight against a root-lattice element:
    /// `B(w, v) = Σj wj·vj·dj`, exact in integers.
    pub fn bilinear(self, w: Weight, v: RootVector) -> i64 {
        let d = self.symmetrizers();
        add(mul(mul(w.w1, v.r1), d[0]), mul(mul(w.w2, v.r2), d[1]))
    }

    /// `det(Cartan)·B(x, y)` for two weights; integral because the simple-root
    /// coordinates of `y` are `adj(A)·y / det(A)`.
    pub fn pairing_scaled(self, x: Weight, y: Weight) -> i64 {
        let d = self.symmetrizers();
        let (s1, s2) = self.weight_to_root_scaled(y);
        add(mul(mul(x.w1, s1), d[0]), mul(mul(x.w2, s2), d[1]))
    }

    /// Coroot pairing `w(h_α) = 2·B(w, α) / B(α, α)`, exact in integers.
    pub fn coroot_pairing(self, w: Weight, alpha: RootVector) -> i64 {
        let alpha_sq = self.bilinear(self.root_to_weight(alpha), alpha);
        exact_div(mul(2, self.bilinear(w, alpha)), alpha_sq)
    }

    /// Dimension of the irreducible representation `V(ν)` by the Weyl
    /// dimension formula; the division is exact by construction.
    pub fn weyl_dim(self, nu: Weight) -> Result<i64> {
        nu.require_dominant("weyl_dim argument")?;
        let shifted = nu + Weight::RHO;
        let mut num = 1i64;
        let mut den = 1i64;
        for &alpha in self.positive_roots() {
            num = mul(num, self.bilinear(shifted, alpha));
            den = mul(den, self.bilinear(Weight::RHO, alpha));
        }
        Ok(exact_div(num, den))
    }

    /// Simple reflection `s_i` (i is 1 or 2) on a weight:
    /// `s_i(w) = w - w_i·α_i`.
    pub fn simple_reflection(self, i: usize, w: Weight) -> Weight {
        assert!(i == 1 || i == 2, "simple reflection index must be 1 or 2");
        let alpha = self.root_to_weight(if i == 1 {
            RootVector::new(1, 0)
        } else {
            RootVector::new(0, 1)
        });
        let c = if i == 1 { w.w1 } else { w.w2 };
        Weight::new(add(w.w1, -mul(c, alpha.w1)), add(w.w2, -mul(c, alpha.w2)))
    }

    /// The dominant representative of the Weyl orbit of `ξ`, chamber walls
    /// included.
    pub fn dominant_representative(self, xi: Weight) -> Weight {
        let mut w = xi;
        for _ in 0..=self.weyl_order() {
            if w.w1 < 0 {
                w = self.simple_reflection(1, w);
            } else if w.w2 < 0 {
                w = self.simple_reflection(2, w);
            } else {
                return w;
            }
        }
        unreachable!("dominant chamber not reached within the Weyl group order");
    }

    /// Walks `ξ` into the dominant chamber by simple reflections.
    ///
    /// Returns the dominant representative together with the determinant of
    /// the Weyl element used, or `(ξ, 0)` when the orbit meets a chamber wall
    /// (the dominant representative has a zero coordinate).
    pub fn dominant_conjugate_signed(self, xi: Weight) -> (Weight, i64) {
        let mut w = xi;
        let mut sign = 1i64;
        for _ in 0..=self.weyl_order() {
            if w.w1 < 0 {
                w = self.simple_reflection(1, w);
                sign = -sign;
            } else if w.w2 < 0 {
                w = self.simple_reflection(2, w);
                sign = -sign;
            } else if w.w1 == 0 || w.w2 == 0 {
                return (xi, 0);
            } else {
                return (w, sign);
            }
        }
        unreachable!("dominant chamber not reached within the Weyl group order");
    }

    /// The full Weyl orbit of `w`, sorted and deduplicated.
    pub fn weyl_orbit(self, w: Weight) -> Vec<Weight> {
        let mut seen = std::collections::BTreeSet::new();
        let mut queue = vec![w];
        seen.insert(w);
        while let Some(x) = queue.pop() {
            for i in [1, 2] {
                let y = self.simple_reflection(i, x);
                if seen.insert(y) {
                    queue.push(y);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// Weight multiplicities of `V(λ)` by the Freudenthal recursion, for
    /// every weight of the representation (full Weyl orbits).
    ///
    /// The recursion is evaluated on dominant weights `η ≤ λ` in increasing
    /// height of `λ - η`, scaled by `det(Cartan)` so that all intermediate
    /// values are integers; each division is checked to be exact.
    pub fn weight_multiplicities(self, lambda: Weight) -> Result<BTreeMap<Weight, i64>> {
        lambda.require_dominant("highest weight")?;
        let det = self.cartan_det();
        let (l1, l2) = self.weight_to_root_scaled(lambda);

        // Dominant weights η with λ - η in the non-negative root lattice,
        // ordered by the height of the gap so dependencies come first.
        let mut dominants: Vec<(i64, Weight)> = Vec::new();
        for k1 in 0..=(l1 / det) {
            for k2 in 0..=(l2 / det) {
                let gap = self.root_to_weight(RootVector::new(k1, k2));
                let eta = lambda - gap;
                if eta.is_dominant() {
                    dominants.push((add(k1, k2), eta));
                }
            }
        }
        dominants.sort();

        let lambda_norm = self.pairing_scaled(lambda + Weight::RHO, lambda + Weight::RHO);
        let mut dominant_mult: BTreeMap<Weight, i64> = BTreeMap::new();
        for &(height, eta) in &dominants {
            if height == 0 {
                dominant_mult.insert(eta, 1);
                continue;
            }
            let mut sum = 0i64;
            for &alpha in self.positive_roots() {
                let step = self.root_to_weight(alpha);
                for k in 1.. {
                    let xi =
                        Weight::new(add(eta.w1, mul(k, step.w1)), add(eta.w2, mul(k, step.w2)));
                    let rep = self.dominant_representative(xi);
                    let m = dominant_mult.get(&rep).copied().unwrap_or(0);
                    if m == 0 {
                        // Weights of V(λ) form unbroken root strings, so the
                        // first absent weight ends the string.
                        break;
                    }
                    sum = add(sum, mul(m, self.bilinear(xi, alpha)));
                }
            }
            let denom = add(
                lambda_norm,
                -self.pairing_scaled(eta + Weight::RHO, eta + Weight::RHO),
            );
            assert!(denom > 0, "Freudenthal denominator must be positive");
            let m = exact_div(mul(mul(2, det), sum), denom);
            assert!(
                m > 0,
                "every dominant weight below λ carries positive multiplicity"
            );
            dominant_mult.insert(eta, m);
        }

        let mut out = BTreeMap::new();
        for (&eta, &m) in &dominant_mult {
            for orbit_weight in self.weyl_orbit(eta) {
                out.insert(orbit_weight, m);
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn cartan_matrices_are_consistent() {
        for ty in LieType::ALL {
            let a = ty.cartan();
            let d = ty.symmetrizers();
            assert_eq!(a[0][0], 2);
            assert_eq!(a[1][1], 2);
            // d[i]·a[i][j] is the symmetrised matrix B(αi, αj).
            assert_eq!(mul(d[0], a[0][1]), mul(d[1], a[1][0]));
            assert_eq!(ty.cartan_det(), a[0][0] * a[1][1] - a[0][1] * a[1][0]);
            // adj(A)·A = det(A)·I.
            let adj = ty.cartan_adjugate();
            let det = ty.cartan_det();
            let product = [
                [
                    adj[0][0] * a[0][0] + adj[0][1] * a[1][0],
                    adj[0][0] * a[0][1] + adj[0][1] * a[1][1],
                ],
                [
                    adj[1][0] * a[0][0] + adj[1][1] * a[1][0],
                    adj[1][0] * a[0][1] + adj[1][1] * a[1][1],
                ],
            ];
            assert_eq!(product, [[det, 0], [0, det]]);
        }
        assert_eq!(LieType::A2.cartan()[0][1], -1);
        assert_eq!(LieType::C2.cartan()[0][1], -2);
        assert_eq!(LieType::G2.cartan()[0][1], -3);
        assert_eq!(LieType::C2.cartan()[1][0], -1);
        assert_eq!(LieType::G2.cartan()[1][0], -1);
    }

    #[test]
    fn positive_roots_closed_under_simple_reflections() {
        for ty in LieType::ALL {
            let roots = ty.positive_roots();
            assert_eq!(roots.len(), ty.weyl_order() / 2);
            for &alpha in roots {
                for i in [1, 2] {
                    // Reflect in root coordinates: subtract αi times the i-th
                    // fundamental coordinate of the root.
                    let fc = ty.root_to_weight(alpha);
                    let c = if i == 1 { fc.w1 } else { fc.w2 };
                    let image = if i == 1 {
                        RootVector::new(alpha.r1 - c, alpha.r2)
                    } else {
                        RootVector::new(alpha.r1, alpha.r2 - c)
                    };
                    let neg = RootVector::new(-image.r1, -image.r2);
                    assert!(
                        roots.contains(&image) || roots.contains(&neg),
                        "{ty}: s{i} of {alpha:?} is {image:?}, not a root"
                    );
                }
            }
        }
    }

    #[test]
    fn root_to_weight_spot_values() {
        assert_eq!(
            LieType::A2.root_to_weight(RootVector::new(1, 1)),
            Weight::new(1, 1)
        );
        assert_eq!(
            LieType::C2.root_to_weight(RootVector::new(2, 1)),
            Weight::new(2, 0)
        );
        // The G2 highest root is the fundamental weight ϖ2.
        assert_eq!(
            LieType::G2.root_to_weight(RootVector::new(3, 2)),
            Weight::new(0, 1)
        );
    }

    #[test]
    fn bilinear_on_rho_matches_root_heights() {
        let expect: [(LieType, &[i64]); 3] = [
            (LieType::A2, &[1, 1, 2]),
            (LieType::C2, &[1, 2, 3, 4]),
            (LieType::G2, &[1, 3, 4, 5, 6, 9]),
        ];
        for (ty, values) in expect {
            let got: Vec<i64> = ty
                .positive_roots()
                .iter()
                .map(|&a| ty.bilinear(Weight::RHO, a))
                .collect();
            assert_eq!(got, values, "{ty}");
        }
    }

    type CorootRow = ((i64, i64), (i64, i64));

    #[test]
    fn coroot_pairings_on_fundamental_weights() {
        // Rows: positive root (in simple-root coordinates) and the pair
        // (ϖ1(h_α), ϖ2(h_α)).
        let expect: [(LieType, &[CorootRow]); 3] = [
            (
                LieType::A2,
                &[((1, 0), (1, 0)), ((0, 1), (0, 1)), ((1, 1), (1, 1))],
            ),
            (
                LieType::C2,
                &[
                    ((1, 0), (1, 0)),
                    ((0, 1), (0, 1)),
                    ((1, 1), (1, 2)),
                    ((2, 1), (1, 1)),
                ],
            ),
            (
                LieType::G2,
                &[
                    ((1, 0), (1, 0)),
                    ((0, 1), (0, 1)),
                    ((1, 1), (1, 3)),
                    ((2, 1), (2, 3)),
                    ((3, 1), (1, 1)),
                    ((3, 2), (1, 2)),
                ],
            ),
        ];
        for (ty, rows) in expect {
            for &((r1, r2), (p1, p2)) in rows {
                let alpha = RootVector::new(r1, r2);
                assert_eq!(
                    ty.coroot_pairing(Weight::new(1, 0), alpha),
                    p1,
                    "{ty} {alpha:?}"
                );
                assert_eq!(
                    ty.coroot_pairing(Weight::new(0, 1), alpha),
                    p2,
                    "{ty} {alpha:?}"
                );
            }
        }
    }

    #[test]
    fn weyl_dim_spot_values() {
        let cases = [
            (LieType::A2, Weight::new(1, 0), 3),
            (LieType::A2, Weight::new(1, 1), 8),
            (LieType::A2, Weight::new(2, 2), 27),
            (LieType::C2, Weight::new(1, 0), 4),
            (LieType::C2, Weight::new(0, 1), 5),
            (LieType::C2, Weight::new(2, 0), 10),
            (LieType::C2, Weight::new(1, 1), 16),
            (LieType::G2, Weight::new(1, 0), 7),
            (LieType::G2, Weight::new(0, 1), 14),
            (LieType::G2, Weight::new(2, 0), 27),
            (LieType::G2, Weight::new(1, 1), 64),
            (LieType::G2, Weight::new(0, 2), 77),
            (LieType::G2, Weight::new(3, 0), 77),
        ];
        for (ty, nu, dim) in cases {
            assert_eq!(ty.weyl_dim(nu).unwrap(), dim, "{ty} {nu}");
        }
        assert!(LieType::A2.weyl_dim(Weight::new(-1, 0)).is_err());
    }

    #[test]
    fn simple_reflection_spot_values() {
        assert_eq!(
            LieType::A2.simple_reflection(1, Weight::new(1, 0)),
            Weight::new(-1, 1)
        );
        assert_eq!(
            LieType::C2.simple_reflection(2, Weight::new(0, 1)),
            Weight::new(2, -1)
        );
        assert_eq!(
            LieType::G2.simple_reflection(1, Weight::new(1, 0)),
            Weight::new(-1, 1)
        );
    }

    #[test]
    fn dominant_conjugate_examples() {
        // -ρ is carried to ρ by the longest element; its determinant is
        // (-1) to the number of positive roots.
        for ty in LieType::ALL {
            let (rep, sign) = ty.dominant_conjugate_signed(Weight::new(-1, -1));
            assert_eq!(rep, Weight::RHO);
            let expected_sign = if ty.positive_roots().len() % 2 == 0 {
                1
            } else {
                -1
            };
            assert_eq!(sign, expected_sign, "{ty}");
        }
        // An orbit through a wall reports sign 0 and echoes the input.
        let (rep, sign) = LieType::A2.dominant_conjugate_signed(Weight::new(0, -1));
        assert_eq!((rep, sign), (Weight::new(0, -1), 0));
    }

    #[test]
    fn orbit_sizes_divide_group_order() {
        for ty in LieType::ALL {
            assert_eq!(ty.weyl_orbit(Weight::RHO).len(), ty.weyl_order());
            assert_eq!(ty.weyl_orbit(Weight::ZERO).len(), 1);
            let wall = ty.weyl_orbit(Weight::new(1, 0)).len();
            assert_eq!(ty.weyl_order() % wall, 0, "{ty}");
        }
    }

    #[test]
    fn freudenthal_spot_values() {
        // The A2 adjoint representation V(1,1): zero weight has
        // multiplicity 2.
        let m = LieType::A2
            .weight_multiplicities(Weight::new(1, 1))
            .unwrap();
        assert_eq!(m[&Weight::ZERO], 2);
        assert_eq!(m[&Weight::new(1, 1)], 1);
        assert_eq!(m.values().sum::<i64>(), 8);

        // The 7-dimensional G2 representation: six short-root weights plus
        // a single zero weight.
        let m = LieType::G2
            .weight_multiplicities(Weight::new(1, 0))
            .unwrap();
        assert_eq!(m[&Weight::ZERO], 1);
        assert_eq!(m.len(), 7);
        assert_eq!(m.values().sum::<i64>(), 7);

        // The G2 adjoint V(0,1): zero weight has multiplicity 2.
        let m = LieType::G2
            .weight_multiplicities(Weight::new(0, 1))
            .unwrap();
        assert_eq!(m[&Weight::ZERO], 2);
        assert_eq!(m.values().sum::<i64>(), 14);

        // C2 V(0,1) is the 5-dimensional representation.
        let m = LieType::C2
            .weight_multiplicities(Weight::new(0, 1))
            .unwrap();
        assert_eq!(m.values().sum::<i64>(), 5);
        assert_eq!(m[&Weight::ZERO], 1);
    }

    #[test]
    fn freudenthal_sums_match_weyl_dim_up_to_eight() {
        for ty in LieType::ALL {
            for w1 in 0..=8 {
                for w2 in 0..=8 {
                    let lambda = Weight::new(w1, w2);
                    let total: i64 = ty.weight_multiplicities(lambda).unwrap().values().sum();
                    assert_eq!(total, ty.weyl_dim(lambda).unwrap(), "{ty} {lambda}");
                }
            }
        }
    }

    fn any_type() -> impl Strategy<Value = LieType> {
        prop_oneof![Just(LieType::A2), Just(LieType::C2), Just(LieType::G2)]
    }

    fn any_weight() -> impl Strategy<Value = Weight> {
        (-12i64..=12, -12i64..=12).prop_map(|(a, b)| Weight::new(a, b))
    }

    proptest! {
        #[test]
        fn simple_reflections_are_involutions(ty in any_type(), w in any_weight(), i in 1usize..=2) {
            prop_assert_eq!(ty.simple_reflection(i, ty.simple_reflection(i, w)), w);
        }

        #[test]
        fn reflections_preserve_the_form(ty in any_type(), w in any_weight(), i in 1usize..=2) {
            let r = ty.simple_reflection(i, w);
            prop_assert_eq!(ty.pairing_scaled(r, r), ty.pairing_scaled(w, w));
        }

        #[test]
        fn sign_zero_exactly_on_wall_orbits(ty in any_type(), w in any_weight()) {
            let (_, sign) = ty.dominant_conjugate_signed(w);
            let on_wall = ty.weyl_orbit(w).iter().any(|x| x.w1 == 0 || x.w2 == 0);
            prop_assert_eq!(sign == 0, on_wall);
        }

        #[test]
        fn dominant_conjugate_lands_in_orbit(ty in any_type(), w in any_weight()) {
            let (rep, sign) = ty.dominant_conjugate_signed(w);
            if sign != 0 {
                prop_assert!(rep.is_dominant());
                prop_assert!(ty.weyl_orbit(w).contains(&rep));
            }
        }
    }
}
