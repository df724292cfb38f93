//! The categorical freeness identity: a surjective functor sends the
//! regular object to an exact multiple of the target's, with an integer
//! multiplicity when the source has integer dimensions.
//!
//!     cargo run --example freeness

use tenscat::catalog;
use tenscat::report::render_algebraic;

fn main() {
    for l in [2u64, 3, 4, 6] {
        let f = catalog::taft_restriction_functor(l).unwrap();
        assert!(f.validate().unwrap().is_empty());
        let fr = f.freeness_check().unwrap();
        let (int_ok, rank) = f.integer_freeness().unwrap();
        println!(
            "restriction taft:{l} -> pointed:{l}: ratio = {}, identity holds = {}, integer rank = {:?} ({})",
            render_algebraic(&fr.ratio.to_real().unwrap(), 2),
            fr.ok,
            rank,
            if int_ok { "free" } else { "not free" },
        );
    }
    let f = catalog::s3_restriction_functor().unwrap();
    let fr = f.freeness_check().unwrap();
    println!(
        "restriction group:S3 -> pointed:3: ratio = {}, identity holds = {}",
        render_algebraic(&fr.ratio.to_real().unwrap(), 2),
        fr.ok
    );
    // surjectivity and injectivity by exact dimension comparison
    let incl = catalog::taft_inclusion_functor(3).unwrap();
    println!(
        "inclusion pointed:3 -> taft:3: surjective = {}, injective = {}",
        incl.is_surjective().unwrap(),
        incl.is_injective().unwrap()
    );
}
