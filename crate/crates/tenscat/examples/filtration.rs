//! The kernel filtration of a skew derivation: layer dimensions and the
//! lettered properties (derivations lower the filtration, group
//! invariance, multiplicativity, exhaustion, strict drop, and simplicity
//! of the degree-zero part).
//!
//!     cargo run --example filtration

use tenscat::field::{ExactField, FieldElem};
use tenscat::simplecheck::{build_taft_a, compute_filtration};

fn main() {
    for (l, d) in [(2u64, 2u64), (3, 3), (4, 2), (4, 4)] {
        let field = ExactField::cyclotomic(l as u32);
        let a = build_taft_a(&field, l, d, FieldElem::one(&field)).unwrap();
        let rep = compute_filtration(&a);
        println!(
            "A({d}, 1) at l = {l}: layer dimensions {:?}",
            rep.chain.iter().map(|b| b.len()).collect::<Vec<_>>()
        );
        for (label, holds) in &rep.properties {
            println!("  {label}: {holds}");
        }
        println!();
    }
    // A derivation that is identically zero exhausts immediately.
    let field = ExactField::cyclotomic(2);
    let mut a = build_taft_a(&field, 2, 2, FieldElem::one(&field)).unwrap();
    for row in a.derivations[0].matrix.iter_mut() {
        for e in row.iter_mut() {
            *e = FieldElem::zero(&field);
        }
    }
    a.derivations[0].nilpotence = Some(1);
    let rep = compute_filtration(&a);
    println!(
        "zero derivation: layer dimensions {:?} (degree zero is everything)",
        rep.chain.iter().map(|b| b.len()).collect::<Vec<_>>()
    );
}
