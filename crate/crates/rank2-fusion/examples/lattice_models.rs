//! The two lattice-point models side by side.
//!
//! For a pair (λ, μ) the polytope S(λ, μ) carries the graded statistics
//! (degree and weight), while T(λ, μ) counts classical tensor-product
//! multiplicities. Both have exactly as many lattice points as the tensor
//! product has irreducible components counted with multiplicity. This
//! example lists every point of S for an A2 pair with its degree and target
//! component ν, then compares the three counts.
//!
//! Run with: cargo run --example lattice_models

use rank2_fusion::fusion_polytope::{enumerate_s, weight_statistic};
use rank2_fusion::lr_oracle::{enumerate_t, klimyk_decompose};
use rank2_fusion::{LieType, Weight};

fn main() -> rank2_fusion::Result<()> {
    let ty = LieType::A2;
    let lambda = Weight::new(1, 1);
    let mu = Weight::new(1, 1);

    let s_points = enumerate_s(ty, lambda, mu)?;
    println!("{ty}: V{lambda} ⊗ V{mu}");
    println!("S(λ, μ) points (degree = coordinate sum, ν = λ + μ - wt):");
    for p in &s_points {
        let nu = lambda + mu - weight_statistic(ty, p);
        println!("  {p}: degree {}, ν = {nu}", p.degree());
    }

    let t_points = enumerate_t(ty, lambda, mu)?;
    let oracle = klimyk_decompose(ty, lambda, mu)?;
    println!();
    println!("|S| = {}", s_points.len());
    println!("|T| = {}", t_points.len());
    println!("oracle total = {}", oracle.total());
    assert_eq!(s_points.len(), t_points.len());
    assert_eq!(t_points.len() as i64, oracle.total());
    Ok(())
}
