//! Cartan-matrix ranks over the rationals and the ground field: for
//! nonsemisimple data with a pivotal trace the ground-field rank must drop,
//! and the diagnostic flags data that pretends otherwise.
//!
//!     cargo run --example cartan_degeneracy

use tenscat::catalog;
use tenscat::tensorcat::TensorCatData;

fn show(name: &str, cat: &TensorCatData) {
    let r = cat.cartan_rank();
    println!(
        "{name}: simples = {}, rank over Q = {}, ground rank = {}{}{}",
        cat.rank(),
        r.over_q,
        r.ground,
        r.over_fp
            .map(|_| format!(" (over F_{})", cat.characteristic))
            .unwrap_or_default(),
        if r.lorentz_violation {
            "  <- violates the degeneracy theorem"
        } else {
            ""
        }
    );
}

fn main() {
    show("taft:2 (quasitriangular)", &catalog::build_taft(2).unwrap());
    show("taft:4", &catalog::build_taft(4).unwrap());
    for p in [2u64, 3, 5] {
        show(
            &format!("modular-cyclic:{p}"),
            &catalog::build_modular_cyclic(p, 1).unwrap(),
        );
    }
    show("fibonacci (semisimple)", &catalog::build_fibonacci());
    // Fabricated inconsistent data: pivotal trace declared, nonsemisimple,
    // yet a nondegenerate Cartan matrix. The rank check flags it.
    let mut fake = catalog::build_taft(2).unwrap();
    fake.cartan = vec![vec![2, 1], vec![1, 2]];
    fake.socle = None;
    show("fabricated pivotal data", &fake);
}
