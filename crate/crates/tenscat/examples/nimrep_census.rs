//! Complete enumeration of irreducible nonnegative-integer-matrix modules
//! over a based ring, matched against the classified module-category
//! censuses.
//!
//!     cargo run --example nimrep_census

use tenscat::catalog;
use tenscat::nimrep::{census_match, enumerate};

fn main() {
    for l in [2u64, 3, 4, 6] {
        let cat = catalog::build_taft(l).unwrap();
        let modules = enumerate(&cat.ring, l as usize, true).unwrap();
        let ranks: Vec<usize> = modules.iter().map(|m| m.rank).collect();
        println!("taft:{l}: module ranks {ranks:?} (one per divisor of {l})");
        let census = catalog::taft_module_census(l).unwrap();
        println!("  classified families:");
        for e in &census.entries {
            println!(
                "    {} ({} parameter{})",
                e.description,
                e.parameter_dimension,
                if e.parameter_dimension == 1 { "" } else { "s" }
            );
        }
        let mut unique: Vec<usize> = census.entries.iter().map(|e| e.simple_count).collect();
        unique.dedup();
        println!(
            "  each shadow is shared by two families; census match = {}",
            census_match(&modules, &unique)
        );
    }
    // The golden ring admits only its regular module at small rank.
    let fib = catalog::build_fibonacci();
    let modules = enumerate(&fib.ring, 3, true).unwrap();
    println!("fibonacci up to rank 3: {} module(s)", modules.len());
    for m in &modules {
        println!("  rank {}: action of X = {:?}", m.rank, m.action[1]);
    }
}
