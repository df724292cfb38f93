//! Exact real algebraic numbers: certified Perron roots, number-field
//! arithmetic, minimal polynomials, and sign decisions without floats.
//!
//!     cargo run --example exact_numbers

use tenscat::algnum::{perron_root_i64, NumberField, NumberFieldElement};
use tenscat::rat::ratio;
use tenscat::report::render_algebraic;

fn main() {
    // The dominant eigenvalue of a nonnegative integer matrix, as an exact
    // algebraic number: minimal polynomial plus isolating interval.
    let phi = perron_root_i64(&[vec![0, 1], vec![1, 1]], true).unwrap();
    println!("perron([[0,1],[1,1]])  = {}", render_algebraic(&phi, 6));

    let three = perron_root_i64(&[vec![1, 1, 1], vec![1, 1, 1], vec![1, 1, 1]], true).unwrap();
    println!("perron(all-ones 3x3)   = {}", render_algebraic(&three, 6));

    // Comparisons are exact: refine isolating intervals until they separate.
    println!(
        "phi > 3/2?               {:?}",
        phi.cmp_rational(&ratio(3, 2))
    );
    println!(
        "phi < 7/4?               {:?}",
        phi.cmp_rational(&ratio(7, 4))
    );

    // Arithmetic in the field Q(phi): the defining relation phi^2 = phi + 1.
    let field = NumberField::new(phi);
    let gen = NumberFieldElement::generator(field.clone());
    let one = NumberFieldElement::one(field.clone());
    let square = gen.mul(&gen).unwrap();
    println!("phi^2                  = {square}  (power basis 1, phi)");

    // 1 + phi^2 = (5 + sqrt 5)/2: its minimal polynomial is monic and
    // integral, so it is an algebraic integer.
    let a = one.add(&square).unwrap();
    println!(
        "minpoly(1 + phi^2)     = {}",
        a.minimal_polynomial().unwrap().to_string_pretty()
    );
    println!(
        "algebraic integer?       {}",
        a.is_algebraic_integer().unwrap()
    );
    let half = NumberFieldElement::from_rational(field, ratio(1, 2));
    println!(
        "1/2 algebraic integer?   {}",
        half.is_algebraic_integer().unwrap()
    );

    // Products across fields go through a resultant construction.
    let sqrt = a.to_real().unwrap();
    let squared = sqrt.mul(&sqrt).unwrap();
    println!("((5+sqrt5)/2)^2        = {}", render_algebraic(&squared, 6));
}
