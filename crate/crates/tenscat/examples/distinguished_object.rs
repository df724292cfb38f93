//! The distinguished invertible object and the duality map on projectives,
//! including the ambiguity that appears when socle data is withheld.
//!
//!     cargo run --example distinguished_object

use tenscat::catalog;
use tenscat::tensorcat::{TcError, TensorCatData};

fn show(name: &str, cat: &TensorCatData) {
    match cat.distinguished() {
        Ok(d) => {
            println!(
                "{name}: rho = {}, D = {:?}, unimodular = {}",
                cat.ring.labels[d.rho],
                d.d_map
                    .iter()
                    .map(|&v| cat.ring.labels[v].clone())
                    .collect::<Vec<_>>(),
                d.rho == cat.ring.unit
            );
        }
        Err(TcError::Ambiguous(cands)) => {
            println!(
                "{name}: ambiguous without socle data; {} consistent candidates: {:?}",
                cands.len(),
                cands
                    .iter()
                    .map(|c| cat.ring.labels[c.rho].clone())
                    .collect::<Vec<_>>()
            );
        }
        Err(e) => println!("{name}: {e}"),
    }
}

fn main() {
    // The nonsemisimple family: the distinguished simple is the character
    // g |-> zeta, determined by the socle of the projective cover of 1.
    for l in [2u64, 3, 4] {
        let cat = catalog::build_taft(l).unwrap();
        show(&format!("taft:{l}"), &cat);
    }
    // Semisimple data is always unimodular with D = star.
    show("fibonacci", &catalog::build_fibonacci());
    show(
        "group:S3",
        &catalog::build_group_semisimple(&tenscat::catalog::GroupSpec::S3).unwrap(),
    );
    // Dropping the socle makes the answer genuinely ambiguous: the Cartan
    // rows of the two-dimensional family coincide, so both candidates pass
    // every Grothendieck-level test.
    let mut sweedler = catalog::build_taft(2).unwrap();
    sweedler.socle = None;
    show("taft:2 without socle", &sweedler);
}
