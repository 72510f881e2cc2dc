//! Classical tensor-product decomposition from the independent oracle.
//!
//! Decomposes V(λ) ⊗ V(μ) with the Weyl-group-based algorithm (weight
//! multiplicities by Freudenthal, then signed dominant conjugation) and
//! confirms the dimension identity dim V(λ) · dim V(μ) = Σ c^ν · dim V(ν).
//! The oracle never touches the lattice models, so it is an independent
//! cross-check for them.
//!
//! Run with: cargo run --example classical_oracle

use rank2_fusion::lr_oracle::klimyk_decompose;
use rank2_fusion::{LieType, Weight};

fn main() -> rank2_fusion::Result<()> {
    let ty = LieType::G2;
    let lambda = Weight::new(1, 1);
    let mu = Weight::new(1, 0);

    let d = klimyk_decompose(ty, lambda, mu)?;
    println!("{ty}: V{lambda} ⊗ V{mu}");
    let mut rhs = 0i64;
    for (&nu, &mult) in d.entries_desc() {
        let dim = ty.weyl_dim(nu)?;
        println!("  {nu}: multiplicity {mult}  (dim {dim})");
        rhs += mult * dim;
    }

    let lhs = ty.weyl_dim(lambda)? * ty.weyl_dim(mu)?;
    println!();
    println!("dim V{lambda} · dim V{mu} = {lhs}");
    println!("Σ multiplicity · dim      = {rhs}");
    assert_eq!(lhs, rhs, "dimension identity must hold");
    Ok(())
}
