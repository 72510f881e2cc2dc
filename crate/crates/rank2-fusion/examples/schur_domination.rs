//! Multiplicity domination between two tensor pairs.
//!
//! When (λ', μ') is obtained from (λ, μ) by moving weight from one factor
//! toward the other along positive-root directions (with the same total
//! λ + μ = λ' + μ'), every classical multiplicity of the more balanced pair
//! dominates the corresponding one of the less balanced pair. This example
//! checks one instance per type and prints the multiplicity tables.
//!
//! Run with: cargo run --example schur_domination

use rank2_fusion::graded_fusion::schur_positivity_check;
use rank2_fusion::{LieType, Weight};

fn main() -> rank2_fusion::Result<()> {
    let comparisons = [
        (
            LieType::A2,
            (Weight::new(2, 0), Weight::new(0, 0)),
            (Weight::new(1, 0), Weight::new(1, 0)),
        ),
        (
            LieType::C2,
            (Weight::new(2, 2), Weight::new(0, 0)),
            (Weight::new(1, 1), Weight::new(1, 1)),
        ),
        // For G2 both second factors must be multiples of the first
        // fundamental weight.
        (
            LieType::G2,
            (Weight::new(2, 1), Weight::new(1, 0)),
            (Weight::new(1, 1), Weight::new(2, 0)),
        ),
    ];

    for (ty, left, right) in comparisons {
        let cmp = schur_positivity_check(ty, left.0, left.1, right.0, right.1)?;
        println!(
            "{ty}: V{} ⊗ V{}  vs  V{} ⊗ V{}",
            left.0, left.1, right.0, right.1
        );
        for &(nu, l, r) in &cmp.rows {
            println!("  {nu}: {l} ≤ {r}");
        }
        println!("dominated: {}", cmp.dominated);
        println!();
        assert!(cmp.dominated);
    }
    Ok(())
}
