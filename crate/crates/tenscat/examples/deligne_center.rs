//! External products of category data and the center dimension identity
//! d(Z(C)) = d(C)^2, checked on supplied center data with its forgetful
//! functor.
//!
//!     cargo run --example deligne_center

use tenscat::catalog::{self, GroupSpec};
use tenscat::functors::verify_center_dim;
use tenscat::report::render_algebraic;
use tenscat::tensorcat::deligne_product;

fn main() {
    // Kronecker products of fusion and Cartan data multiply dimensions.
    let sweedler = catalog::build_taft(2).unwrap();
    let fib = catalog::build_fibonacci();
    for (name, a, b) in [
        ("taft:2 x taft:2", &sweedler, &sweedler),
        ("fibonacci x fibonacci", &fib, &fib),
        ("taft:2 x fibonacci", &sweedler, &fib),
    ] {
        let prod = deligne_product(a, b).unwrap();
        let total = prod.fpdim_category().unwrap().to_real().unwrap();
        println!(
            "{name}: {} simples, d = {}",
            prod.rank(),
            render_algebraic(&total, 4)
        );
    }

    // Center data for the pointed Z/2 category: four invertibles graded by
    // the group, forgetful functor remembering the grading. All three
    // checks pass: d(Z) = d(C)^2, surjectivity, and the freeness ratio.
    let (c, z, f) = catalog::z2_center_forgetful().unwrap();
    let report = verify_center_dim(&c, &z, &f).unwrap();
    println!(
        "center of pointed:2: dim square = {}, forgetful surjective = {}, ratio = d(C): {}",
        report.dim_is_square, report.forgetful_surjective, report.ratio_matches
    );

    // A wrong candidate is reported rather than silently accepted.
    let wrong = catalog::build_pointed(&GroupSpec::Abelian(vec![2]), 0).unwrap();
    let id = tenscat::functors::FunctorData {
        source: wrong.clone(),
        target: c.clone(),
        a: vec![vec![1, 0], vec![0, 1]],
        b: Some(vec![vec![1, 0], vec![0, 1]]),
        image: tenscat::functors::ImageSpec::Semisimple,
    };
    let report = verify_center_dim(&c, &wrong, &id).unwrap();
    println!("wrong center candidate: findings = {:?}", report.findings);
}
