//! Integer linear inequality systems over non-negative coordinates, with a
//! deterministic lattice-point enumerator.
//!
//! A system is a conjunction of constraints `Σj coeffs[j]·xj ≤ bound` (or
//! `< bound` when the strict flag is set) over points `x ∈ Z^arity` with
//! `xj ≥ 0`. Strict constraints exist so that systems copied from displayed
//! inequality lists can keep their printed form; internally a strict bound
//! `< b` is the integer bound `≤ b - 1`.
//!
//! Enumeration fixes coordinates left to right. At each level the next
//! coordinate's range is recomputed from every constraint whose remaining
//! coefficients are all non-negative (such a constraint can only grow from
//! here, so it prunes soundly), and each completed point is checked against
//! the full constraint list before being emitted. Output is in ascending
//! lexicographic order, free of duplicates.

use std::fmt;

use crate::{add, mul, Error, Result};

/// A point of `Z^n` with non-negative entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint(Vec<i64>);

impl LatticePoint {
    pub fn new(coords: Vec<i64>) -> Self {
        assert!(
            coords.iter().all(|&c| c >= 0),
            "lattice points have non-negative coordinates"
        );
        LatticePoint(coords)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    /// The grading statistic: the sum of all coordinates.
    pub fn degree(&self) -> i64 {
        self.0.iter().copied().fold(0, add)
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// One linear constraint `coeffs·x ≤ bound` (strict: `< bound`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub coeffs: Vec<i64>,
    pub bound: i64,
    pub strict: bool,
}

impl Constraint {
    fn effective_bound(&self) -> i64 {
        if self.strict {
            add(self.bound, -1)
        } else {
            self.bound
        }
    }

    fn dot_prefix(&self, point: &[i64]) -> i64 {
        point
            .iter()
            .zip(&self.coeffs)
            .fold(0, |acc, (&x, &c)| add(acc, mul(x, c)))
    }

    fn satisfied_by(&self, point: &[i64]) -> bool {
        self.dot_prefix(point) <= self.effective_bound()
    }
}

/// A conjunction of linear constraints over `Z^arity` with `x ≥ 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IneqSystem {
    arity: usize,
    constraints: Vec<Constraint>,
}

impl IneqSystem {
    pub fn new(arity: usize) -> Self {
        IneqSystem {
            arity,
            constraints: Vec::new(),
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    /// Adds `coeffs·x ≤ bound`.
    pub fn le(mut self, coeffs: &[i64], bound: i64) -> Self {
        assert_eq!(coeffs.len(), self.arity, "constraint arity mismatch");
        self.constraints.push(Constraint {
            coeffs: coeffs.to_vec(),
            bound,
            strict: false,
        });
        self
    }

    /// Adds the strict constraint `coeffs·x < bound`.
    pub fn lt(mut self, coeffs: &[i64], bound: i64) -> Self {
        assert_eq!(coeffs.len(), self.arity, "constraint arity mismatch");
        self.constraints.push(Constraint {
            coeffs: coeffs.to_vec(),
            bound,
            strict: true,
        });
        self
    }

    /// Adds `coeffs·x ≥ bound` by negating both sides.
    pub fn ge(self, coeffs: &[i64], bound: i64) -> Self {
        let negated: Vec<i64> = coeffs.iter().map(|&c| -c).collect();
        self.le(&negated, -bound)
    }

    pub fn contains(&self, point: &LatticePoint) -> bool {
        assert_eq!(point.arity(), self.arity, "point arity mismatch");
        self.constraints
            .iter()
            .all(|c| c.satisfied_by(point.coords()))
    }

    /// Every coordinate must be bounded by some constraint with a positive
    /// coefficient there and no negative coefficient anywhere.
    fn check_bounded(&self) -> Result<()> {
        for coord in 0..self.arity {
            let bounded = self
                .constraints
                .iter()
                .any(|c| c.coeffs[coord] > 0 && c.coeffs.iter().all(|&x| x >= 0));
            if !bounded {
                return Err(Error::Unbounded {
                    coord,
                    arity: self.arity,
                });
            }
        }
        Ok(())
    }

    /// All lattice points of the system in ascending lexicographic order.
    pub fn enumerate(&self) -> Result<Vec<LatticePoint>> {
        self.check_bounded()?;
        let mut out = Vec::new();
        let mut current = vec![0i64; self.arity];
        self.search(0, &mut current, &mut out);
        Ok(out)
    }

    pub fn count(&self) -> Result<i64> {
        Ok(self.enumerate()?.len() as i64)
    }

    fn search(&self, level: usize, current: &mut Vec<i64>, out: &mut Vec<LatticePoint>) {
        if level == self.arity {
            if self.constraints.iter().all(|c| c.satisfied_by(current)) {
                out.push(LatticePoint::new(current.clone()));
            }
            return;
        }
        let mut upper = i64::MAX;
        for c in &self.constraints {
            if c.coeffs[level..].iter().all(|&x| x >= 0) {
                let remaining = add(c.effective_bound(), -c.dot_prefix(&current[..level]));
                if remaining < 0 {
                    // The prefix already violates a constraint that can only
                    // grow: no completion can succeed.
                    return;
                }
                if c.coeffs[level] > 0 {
                    upper = upper.min(remaining / c.coeffs[level]);
                }
            }
        }
        assert!(upper < i64::MAX, "boundedness was checked up front");
        for value in 0..=upper {
            current[level] = value;
            self.search(level + 1, current, out);
        }
        current[level] = 0;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(coords: &[i64]) -> LatticePoint {
        LatticePoint::new(coords.to_vec())
    }

    #[test]
    fn simplex_count_matches_binomial() {
        // x + y + z ≤ 4 has C(7,3) = 35 non-negative solutions.
        let sys = IneqSystem::new(3).le(&[1, 1, 1], 4);
        assert_eq!(sys.count().unwrap(), 35);
    }

    #[test]
    fn output_is_lexicographic_and_duplicate_free() {
        let sys = IneqSystem::new(2).le(&[1, 0], 2).le(&[0, 1], 2);
        let points = sys.enumerate().unwrap();
        assert_eq!(points.len(), 9);
        let mut sorted = points.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(points, sorted);
        assert_eq!(points[0], pt(&[0, 0]));
        assert_eq!(points[8], pt(&[2, 2]));
    }

    #[test]
    fn strict_bounds_shrink_by_one() {
        let le = IneqSystem::new(1).le(&[1], 3);
        let lt = IneqSystem::new(1).lt(&[1], 3);
        assert_eq!(le.count().unwrap(), 4);
        assert_eq!(lt.count().unwrap(), 3);
    }

    #[test]
    fn lower_bounds_via_ge() {
        // 1 ≤ x ≤ 3.
        let sys = IneqSystem::new(1).le(&[1], 3).ge(&[1], 1);
        let points = sys.enumerate().unwrap();
        assert_eq!(points, vec![pt(&[1]), pt(&[2]), pt(&[3])]);
    }

    #[test]
    fn negative_bound_gives_empty_set() {
        let sys = IneqSystem::new(2).le(&[1, 0], -1).le(&[0, 1], 5);
        assert_eq!(sys.count().unwrap(), 0);
    }

    #[test]
    fn infeasible_ge_gives_empty_set() {
        let sys = IneqSystem::new(1).le(&[1], 2).ge(&[1], 5);
        assert_eq!(sys.count().unwrap(), 0);
    }

    #[test]
    fn unbounded_coordinate_is_rejected_with_its_index() {
        // y appears only with a negative coefficient: unbounded.
        let sys = IneqSystem::new(2).le(&[1, -1], 3).le(&[1, 0], 3);
        match sys.enumerate() {
            Err(Error::Unbounded { coord, arity }) => {
                assert_eq!((coord, arity), (1, 2));
            }
            other => panic!("expected Unbounded, got {other:?}"),
        }
    }

    #[test]
    fn mixed_sign_constraints_are_checked_at_the_leaves() {
        // x - y ≤ 0 cannot prune prefixes but must still filter points.
        let sys = IneqSystem::new(2)
            .le(&[1, 0], 2)
            .le(&[0, 1], 2)
            .le(&[1, -1], 0);
        let points = sys.enumerate().unwrap();
        assert!(points.iter().all(|p| p.coords()[0] <= p.coords()[1]));
        assert_eq!(points.len(), 6);
    }

    #[test]
    fn degree_is_the_coordinate_sum() {
        assert_eq!(pt(&[1, 2, 0, 4]).degree(), 7);
        assert_eq!(pt(&[]).degree(), 0);
    }
}
