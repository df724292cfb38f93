//! The index of a tensor subcategory divides: d(ambient)/d(sub) is always
//! an algebraic integer, certified through exact minimal polynomials.
//!
//!     cargo run --example lagrange

use tenscat::catalog::{self, GroupSpec};
use tenscat::functors::lagrange;
use tenscat::report::render_algebraic;

fn main() {
    // Vec inside the golden-ratio category: the quotient (5 + sqrt 5)/2 is
    // irrational but integral, with minimal polynomial x^2 - 5x + 5.
    let vec_cat = catalog::build_pointed(&GroupSpec::Abelian(vec![]), 0).unwrap();
    let fib = catalog::build_fibonacci();
    let res = lagrange(&vec_cat, &fib, &[0]).unwrap();
    println!(
        "Vec inside fibonacci: quotient = {}, integral = {}",
        render_algebraic(&res.quotient.to_real().unwrap(), 4),
        res.integral
    );

    // The grouplike part inside the nonsemisimple family: index l.
    for l in [2u64, 3, 6] {
        let sub = catalog::build_pointed(&GroupSpec::Abelian(vec![l]), 0).unwrap();
        let amb = catalog::build_taft(l).unwrap();
        let embed: Vec<usize> = (0..l as usize).collect();
        let res = lagrange(&sub, &amb, &embed).unwrap();
        println!(
            "pointed:{l} inside taft:{l}: quotient = {}, integral = {}",
            render_algebraic(&res.quotient.to_real().unwrap(), 2),
            res.integral
        );
    }

    // A failed embedding is rejected before any dimension comparison.
    let z2 = catalog::build_pointed(&GroupSpec::Abelian(vec![2]), 0).unwrap();
    let z4 = catalog::build_pointed(&GroupSpec::Abelian(vec![4]), 0).unwrap();
    match lagrange(&z2, &z4, &[0, 1]) {
        Err(e) => println!("bad embedding rejected: {e}"),
        Ok(_) => unreachable!(),
    }
}
