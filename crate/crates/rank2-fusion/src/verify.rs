//! Verification sweeps: every cross-check the library offers, run over all
//! admissible pairs up to a coordinate bound.
//!
//! For each pair the sweep compares the graded model against the
//! independent oracles (`q = 1` equality, cardinality identities, dimension
//! identity), asserts the structural properties (Cartan component,
//! symmetry in the factors), and runs the full counting-lemma suite from
//! [`crate::lemma_verifier`]. Pairs are independent, so the sweep is
//! parallel; results are merged in parameter order, making the summary
//! deterministic.

use rayon::prelude::*;
use serde::Serialize;

use crate::graded_fusion::{dimension_check, graded_decompose, QPolynomial};
use crate::lemma_verifier::check_for_type;
use crate::lr_oracle::{enumerate_t, klimyk_decompose, littelmann_tableau_count};
use crate::root_system::{LieType, Weight};
use crate::Result;

/// Result of verifying one pair: how many checks ran and which failed.
#[derive(Debug, Clone)]
pub struct PairOutcome {
    pub lambda: Weight,
    pub mu: Weight,
    pub checks: usize,
    pub failures: Vec<String>,
}

impl PairOutcome {
    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(describe());
        }
    }
}

/// One failed pair in a sweep summary.
#[derive(Debug, Clone, Serialize)]
pub struct PairFailure {
    pub lambda: Weight,
    pub mu: Weight,
    pub details: Vec<String>,
}

/// Aggregated result of a sweep.
#[derive(Debug, Clone, Serialize)]
pub struct VerifySummary {
    #[serde(rename = "type")]
    pub ty: LieType,
    pub max_coord: i64,
    pub pairs: usize,
    pub checks: usize,
    pub failures: Vec<PairFailure>,
}

impl VerifySummary {
    pub fn all_pass(&self) -> bool {
        self.failures.is_empty()
    }

    /// Plain-text rendering; the closing line states the verdict.
    pub fn render_text(&self) -> String {
        let mut out = format!(
            "{} sweep, coordinates <= {}: {} checks\n",
            self.ty, self.max_coord, self.checks
        );
        let pair_word = if self.pairs == 1 { "pair" } else { "pairs" };
        if self.all_pass() {
            out.push_str(&format!("{} {pair_word}, all checks pass\n", self.pairs));
        } else {
            out.push_str(&format!(
                "{} {pair_word}, {} with failures\n",
                self.pairs,
                self.failures.len()
            ));
            for f in &self.failures {
                out.push_str(&format!("  λ={} μ={}:\n", f.lambda, f.mu));
                for d in &f.details {
                    out.push_str(&format!("    {d}\n"));
                }
            }
        }
        out
    }
}

/// All pairs of dominant weights with coordinates at most `max_coord`,
/// restricted for G2 to the admissible ones (`min(λ(h2), μ(h2)) = 0`).
pub fn sweep_pairs(ty: LieType, max_coord: i64) -> Vec<(Weight, Weight)> {
    assert!(max_coord >= 0, "sweep bound must be non-negative");
    let mut pairs = Vec::new();
    for m1 in 0..=max_coord {
        for m2 in 0..=max_coord {
            for n1 in 0..=max_coord {
                for n2 in 0..=max_coord {
                    if ty == LieType::G2 && m2.min(n2) != 0 {
                        continue;
                    }
                    pairs.push((Weight::new(m1, m2), Weight::new(n1, n2)));
                }
            }
        }
    }
    pairs
}

/// Runs every check on one pair. Library errors are reported as failures
/// rather than propagated, so a sweep always completes.
pub fn verify_pair(ty: LieType, lambda: Weight, mu: Weight) -> PairOutcome {
    let mut out = PairOutcome {
        lambda,
        mu,
        checks: 0,
        failures: Vec::new(),
    };
    if let Err(e) = run_checks(ty, lambda, mu, &mut out) {
        out.failures.push(format!("error: {e}"));
    }
    out
}

fn run_checks(ty: LieType, lambda: Weight, mu: Weight, out: &mut PairOutcome) -> Result<()> {
    let graded = graded_decompose(ty, lambda, mu)?;
    let oracle = klimyk_decompose(ty, lambda, mu)?;
    out.check(graded.at_q_one().entries == oracle.entries, || {
        "graded model at q = 1 differs from the oracle decomposition".to_string()
    });

    let t_count = enumerate_t(ty, lambda, mu)?.len() as i64;
    let s_count = graded.total();
    out.check(s_count == t_count, || {
        format!("|S| = {s_count} but |T| = {t_count}")
    });
    out.check(t_count == oracle.total(), || {
        format!("|T| = {t_count} but the oracle total is {}", oracle.total())
    });
    if ty == LieType::G2 {
        let (l, m) = if mu.w2 == 0 {
            (lambda, mu)
        } else {
            (mu, lambda)
        };
        let tableaux = littelmann_tableau_count(l, m)?;
        out.check(tableaux == t_count, || {
            format!("tableau count {tableaux} differs from |T| = {t_count}")
        });
    }

    out.check(dimension_check(&graded)?, || {
        "dimension identity fails".to_string()
    });
    out.check(
        graded.entries.get(&(lambda + mu)) == Some(&QPolynomial::one()),
        || "Cartan component is not the constant 1 at degree 0".to_string(),
    );
    let swapped = graded_decompose(ty, mu, lambda)?;
    out.check(swapped.entries == graded.entries, || {
        "decomposition is not symmetric in the factors".to_string()
    });

    let report = check_for_type(ty, lambda, mu)?;
    out.checks += report.checks.len();
    for c in report.checks.iter().filter(|c| !c.pass) {
        out.failures.push(format!(
            "{}: {}: expected {}, got {}",
            report.lemma, c.name, c.expected, c.actual
        ));
    }
    Ok(())
}

/// Verifies every pair in the sweep, in parallel, and aggregates the
/// outcome in parameter order.
pub fn run_sweep(ty: LieType, max_coord: i64) -> VerifySummary {
    let outcomes: Vec<PairOutcome> = sweep_pairs(ty, max_coord)
        .into_par_iter()
        .map(|(l, m)| verify_pair(ty, l, m))
        .collect();
    let pairs = outcomes.len();
    let checks = outcomes.iter().map(|o| o.checks).sum();
    let failures = outcomes
        .into_iter()
        .filter(|o| !o.failures.is_empty())
        .map(|o| PairFailure {
            lambda: o.lambda,
            mu: o.mu,
            details: o.failures,
        })
        .collect();
    VerifySummary {
        ty,
        max_coord,
        pairs,
        checks,
        failures,
    }
}
