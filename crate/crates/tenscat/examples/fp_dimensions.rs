//! Frobenius-Perron dimensions of the bundled categories: the dimension
//! character on simples and the global dimension, all exact.
//!
//!     cargo run --example fp_dimensions

use tenscat::catalog::{self, GroupSpec};
use tenscat::report::render_algebraic;

fn main() {
    let cats = vec![
        ("taft:2".to_string(), catalog::build_taft(2).unwrap()),
        ("taft:3".to_string(), catalog::build_taft(3).unwrap()),
        ("taft:6".to_string(), catalog::build_taft(6).unwrap()),
        (
            "group:S3".to_string(),
            catalog::build_group_semisimple(&GroupSpec::S3).unwrap(),
        ),
        (
            "modular-cyclic:3".to_string(),
            catalog::build_modular_cyclic(3, 1).unwrap(),
        ),
        ("fibonacci".to_string(), catalog::build_fibonacci()),
    ];
    for (name, cat) in cats {
        println!("{name}");
        let fp = cat.fpdims().unwrap();
        for (label, d) in cat.ring.labels.iter().zip(&fp.dims) {
            println!(
                "  d({label}) = {}",
                render_algebraic(&d.to_real().unwrap(), 4)
            );
        }
        let total = cat.fpdim_category().unwrap().to_real().unwrap();
        println!("  d(category) = {}", render_algebraic(&total, 4));
        println!(
            "  integral dimensions: {}",
            cat.integrality_flag().unwrap()
        );
        let (sign, _) = cat.dimension_inequality().unwrap();
        println!("  d(C) - N d(P_1) sign: {sign:?}");
        println!();
    }
}
