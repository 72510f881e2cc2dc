//! Cross-checking every invariant over a sweep of pairs.
//!
//! For each type this runs, over all dominant pairs with coordinates up to
//! a bound (G2 restricted to admissible pairs): graded model vs oracle at
//! q = 1, the count identity |S| = |T| = oracle total, the G2 tableau
//! count, the dimension identity, symmetry in the two factors, the Cartan
//! component, and the full counting-lemma suite. Pairs are checked in
//! parallel.
//!
//! Run with: cargo run --example verification_sweep

use rank2_fusion::verify::run_sweep;
use rank2_fusion::LieType;

fn main() {
    let mut all_pass = true;
    for ty in LieType::ALL {
        let summary = run_sweep(ty, 3);
        print!("{}", summary.render_text());
        all_pass &= summary.all_pass();
    }
    assert!(all_pass, "every sweep must pass");
}
