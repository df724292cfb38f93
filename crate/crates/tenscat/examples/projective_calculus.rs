//! Tensoring projectives: the decomposition formulas for P_i (x) Z and
//! P_i (x) P_j, and the regular object with its exact eigen-property.
//!
//!     cargo run --example projective_calculus

use tenscat::catalog;
use tenscat::report::render_algebraic;
use tenscat::ring::{GrVector, Side};

fn main() {
    let cat = catalog::build_taft(3).unwrap();
    let n = cat.rank();
    println!("category taft:3 with labels {:?}", cat.ring.labels);

    // P_0 (x) L_1 shifts the projective index.
    let z = GrVector::basis(n, 1);
    let moved = cat.proj_tensor(0, &z, Side::Right).unwrap();
    println!("P_0 (x) L_1 = {moved:?} over the projectives");

    // Projective fusion: P_i (x) P_j decomposes with every projective once
    // per Cartan row entry; the dimension check reads 3*3 = 3+3+3.
    let b = cat.proj_fusion(0, 1).unwrap();
    println!("P_0 (x) P_1 = {b:?}");

    // The regular object R = sum_i d_i P_i satisfies X (x) R = d(X) R
    // exactly for every simple X (verified internally before returning).
    let reg = cat.regular_object().unwrap();
    print!("regular object:");
    for (label, c) in cat.ring.labels.iter().zip(&reg) {
        print!("  {} P_{}", render_algebraic(&c.to_real().unwrap(), 3), label);
    }
    println!();

    // The same calculus on a semisimple example collapses to the fusion
    // rules themselves.
    let fib = catalog::build_fibonacci();
    let b = fib.proj_fusion(1, 1).unwrap();
    println!("fibonacci: P_X (x) P_X = {b:?} (the fusion rule X^2 = 1 + X)");
}
