//! The counting-lemma suite on concrete pairs.
//!
//! Each type has a structural lemma behind the equality |S| = |T|: a line
//! bijection for A2 and shift recursions for C2 and G2. This example runs
//! the full check suite for one pair per type and prints every verified
//! identity with the two numbers that had to agree.
//!
//! Run with: cargo run --example lemma_reports

use rank2_fusion::lemma_verifier::check_for_type;
use rank2_fusion::{LieType, Weight};

fn main() -> rank2_fusion::Result<()> {
    let pairs = [
        (LieType::A2, Weight::new(2, 1), Weight::new(1, 2)),
        (LieType::C2, Weight::new(1, 2), Weight::new(2, 1)),
        (LieType::G2, Weight::new(1, 1), Weight::new(2, 0)),
    ];

    for (ty, lambda, mu) in pairs {
        let report = check_for_type(ty, lambda, mu)?;
        println!("{}: λ = {lambda}, μ = {mu}", report.lemma);
        for check in &report.checks {
            let verdict = if check.pass { "ok" } else { "FAIL" };
            println!(
                "  [{verdict}] {}: expected {}, got {}",
                check.name, check.expected, check.actual
            );
        }
        for note in &report.notes {
            println!("  note: {note}");
        }
        println!("  => {}", if report.pass { "all pass" } else { "FAILED" });
        println!();
    }
    Ok(())
}
