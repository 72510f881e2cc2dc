//! Graded decomposition of a single tensor product.
//!
//! Computes V(λ) ⊗ V(μ) for C2 with λ = (2, 1) and μ = (1, 2) from the
//! lattice model and prints one q-polynomial per irreducible component,
//! highest ν first. Setting q = 1 recovers the classical multiplicities.
//!
//! Run with: cargo run --example decompose_pair

use rank2_fusion::graded_fusion::graded_decompose;
use rank2_fusion::{LieType, Weight};

fn main() -> rank2_fusion::Result<()> {
    let ty = LieType::C2;
    let lambda = Weight::new(2, 1);
    let mu = Weight::new(1, 2);

    let d = graded_decompose(ty, lambda, mu)?;
    println!("{ty}: V{lambda} ⊗ V{mu}");
    for (nu, poly) in d.entries_desc() {
        println!("  {nu}: {}", poly.display());
    }
    println!();
    println!("components: {}", d.entries_desc().count());
    println!("total multiplicity at q = 1: {}", d.total());
    Ok(())
}
