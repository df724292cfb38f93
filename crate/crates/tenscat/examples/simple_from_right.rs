//! Certifying the absence of invariant right ideals by exact operator
//! closure: the classified cyclic-quotient algebras, internal Hom algebras
//! of the supergroup module categories, coset algebras, and a reducible
//! counterexample with its witness ideal.
//!
//!     cargo run --example simple_from_right

use tenscat::field::{ExactField, FieldElem};
use tenscat::simplecheck::{
    build_group_quotient, build_taft_a, is_simple_from_right, semisimplicity_test, Group,
    SupergroupParams,
};

fn main() {
    // The one-parameter family A(d, lambda) at lambda = 1.
    for (l, d) in [(2u64, 1u64), (2, 2), (3, 1), (3, 3), (4, 2)] {
        let field = ExactField::cyclotomic(l as u32);
        let a = build_taft_a(&field, l, d, FieldElem::one(&field)).unwrap();
        let res = is_simple_from_right(&a);
        println!(
            "A({d}, 1) at l = {l}: dim {}, closure {} of {}, simple = {}, semisimple = {}",
            a.dim,
            res.closure_dimension,
            a.dim * a.dim,
            res.simple,
            semisimplicity_test(&a).unwrap()
        );
    }

    // Internal Hom algebras over the one-generator supergroup: Clifford
    // algebras of the dual quotient form, with parity and contraction
    // operators. Every one certifies simple, including degenerate forms.
    let q = ExactField::rationals();
    let minus = FieldElem::from_integer(&q, -1);
    for (w, y, b, label) in [
        (1usize, 1usize, vec![vec![FieldElem::one(&q)]], "B = [1]"),
        (1, 0, vec![], "Y = 0"),
        (1, 1, vec![vec![FieldElem::zero(&q)]], "B = [0]"),
    ] {
        let params = SupergroupParams {
            field: &q,
            g_factors: &[2],
            u: vec![1],
            h_gens: vec![vec![1]],
            w_action: vec![vec![minus.clone(); w]],
            w_dim: w,
            y_dim: y,
            b,
            dimension_bound: 32,
        };
        let res = tenscat::simplecheck::supergroup_internal_hom(&params).unwrap();
        println!(
            "internal Hom (w = {w}, {label}): dim {}, simple = {}",
            res.algebra.dim, res.simplicity.simple
        );
    }

    // Coset algebras: simple exactly when the translation action is
    // transitive on the cosets.
    let s3 = Group::s3();
    let h = s3.subgroup(&[1]);
    let a = build_group_quotient(&q, &s3, &h, None, None).unwrap();
    println!(
        "k[S3 / Z3]: dim {}, simple = {}",
        a.dim,
        is_simple_from_right(&a).simple
    );

    // Without any group action, k x k keeps its idempotent ideal; the
    // witness is a basis of the invariant subspace.
    let mut split = build_group_quotient(&q, &Group::abelian(&[2]), &[0], None, None).unwrap();
    split.group_ops.clear(); // forget the swap action
    let res = is_simple_from_right(&split);
    println!(
        "k x k with trivial action: simple = {}, witness dimension = {:?}",
        res.simple,
        res.witness.as_ref().map(|w| w.len())
    );
}
