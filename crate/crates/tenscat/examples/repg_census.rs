//! Counting module categories over semisimple group categories: one per
//! subgroup and Schur-multiplier class, with the characteristic-p part of
//! the multiplier stripped in characteristic p.
//!
//!     cargo run --example repg_census

use tenscat::catalog::{count_repg_module_cats, GroupSpec};

fn main() {
    for (factors, ch) in [
        (vec![2u64, 2], 0u64),
        (vec![2, 2], 2),
        (vec![5], 5),
        (vec![12], 0),
        (vec![2, 4], 0),
    ] {
        let spec = GroupSpec::Abelian(factors.clone());
        let (total, items) = count_repg_module_cats(&spec, ch).unwrap();
        println!(
            "G = {}, characteristic {ch}: {total} module categories",
            factors
                .iter()
                .map(|f| format!("Z/{f}"))
                .collect::<Vec<_>>()
                .join(" x ")
        );
        for (desc, count) in items {
            println!("  subgroup {desc}: {count} class(es)");
        }
        println!();
    }
}
