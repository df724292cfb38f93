//! Acceptance gate: one test per criterion, exact assertions, one pass line
//! each. Run with `cargo test --test acceptance -- --nocapture` to see the
//! lines.

mod common;

use common::{bundled_examples, taft_hopf_oracle};
use num::rational::BigRational;
use num::BigInt;
use std::cmp::Ordering;
use std::time::Instant;
use tenscat::catalog::{self, GroupSpec};
use tenscat::field::{ExactField, FieldElem};
use tenscat::linalg::ExactScalar;
use tenscat::nimrep;
use tenscat::poly::IntPoly;
use tenscat::rat::rat;
use tenscat::ring::GrVector;
use tenscat::simplecheck::{
    self, build_taft_a, compute_filtration, is_simple_from_right, supergroup_internal_hom,
    EquivariantAlgebra, Group, SupergroupParams,
};
use tenscat::tensorcat::deligne_product;

fn pass(criterion: &str, elapsed: std::time::Duration) {
    println!("acceptance: {criterion}: PASS ({} ms)", elapsed.as_millis());
}

#[test]
fn criterion_01_taft_dimensions() {
    let t0 = Instant::now();
    for l in [2u64, 3, 4, 6] {
        let start = Instant::now();
        let cat = catalog::build_taft(l).unwrap();
        let total = cat.fpdim_category().unwrap();
        assert_eq!(
            total.as_rational(),
            Some(rat((l * l) as i64)),
            "d_+ of the degree-{l} family must be l^2"
        );
        assert!(start.elapsed().as_secs() < 1, "each case under a second");
    }
    // cross-check against the explicit algebra: dim H_l = l^2 at l = 2, 3
    for l in [2u32, 3] {
        let oracle = taft_hopf_oracle(l);
        assert_eq!(oracle.dim as u64, (l * l) as u64);
        let cat = catalog::build_taft(l as u64).unwrap();
        assert_eq!(
            cat.fpdim_category().unwrap().as_rational(),
            Some(rat(oracle.dim as i64))
        );
        assert_eq!(cat.cartan, oracle.cartan, "oracle pins the Cartan matrix");
    }
    pass("1 cyclic-quotient Hopf dimensions l^2", t0.elapsed());
}

#[test]
fn criterion_02_distinguished_object() {
    let t0 = Instant::now();
    let cat = catalog::build_taft(2).unwrap();
    let d = cat.distinguished().unwrap();
    assert_eq!(d.rho, 1, "the distinguished simple is the nontrivial one");
    assert_eq!(d.d_map, vec![1, 0], "D is the swap");
    // socle convention pinned by the explicit modules
    let oracle = taft_hopf_oracle(2);
    assert_eq!(cat.socle.as_ref().unwrap(), &oracle.socle);
    // duality identities as Grothendieck-class statements, for all i:
    // P_D(i) = P_*i (x) L_rho and the double-dual conjugation identities
    let n = cat.rank();
    for i in 0..n {
        let moved = cat
            .proj_tensor(
                cat.ring.star_inv(i),
                &GrVector::basis(n, d.rho),
                tenscat::ring::Side::Right,
            )
            .unwrap();
        let mut want = vec![0i64; n];
        want[d.d_map[i]] = 1;
        assert_eq!(moved, want, "duality lemma at the K-group level");
        // L_{i**} = L_rho^* . L_{**i} . L_rho on classes
        let rho_star = GrVector::basis(n, cat.ring.star(d.rho));
        let mid = GrVector::basis(n, cat.ring.star_inv(cat.ring.star_inv(i)));
        let rho = GrVector::basis(n, d.rho);
        let lhs = GrVector::basis(n, cat.ring.star(cat.ring.star(i)));
        let prod = cat
            .ring
            .gr_mul(&cat.ring.gr_mul(&rho_star, &mid).unwrap(), &rho)
            .unwrap();
        assert_eq!(lhs, prod, "double-dual class identity");
        // P-version through the projective calculus
        let step1 = cat
            .proj_tensor(
                cat.ring.star_inv(cat.ring.star_inv(i)),
                &rho,
                tenscat::ring::Side::Right,
            )
            .unwrap();
        let target = step1.iter().position(|&c| c == 1).unwrap();
        let step2 = cat
            .proj_tensor(target, &rho_star, tenscat::ring::Side::Left)
            .unwrap();
        let mut want2 = vec![0i64; n];
        want2[cat.ring.star(cat.ring.star(i))] = 1;
        assert_eq!(step2, want2, "double-dual identity on projectives");
        assert_eq!(d.d_map[d.d_map[i]], cat.ring.star(cat.ring.star(i)));
    }
    // every semisimple example is unimodular with D = star
    for (name, cat) in bundled_examples() {
        if cat.is_semisimple() {
            let d = cat.distinguished().unwrap();
            assert_eq!(d.rho, cat.ring.unit, "{name}: semisimple data is unimodular");
            for i in 0..cat.rank() {
                assert_eq!(d.d_map[i], cat.ring.star(i), "{name}: D = star");
            }
        }
    }
    assert!(t0.elapsed().as_secs() < 1);
    pass("2 distinguished invertible object", t0.elapsed());
}

#[test]
fn criterion_03_categorical_freeness() {
    let t0 = Instant::now();
    for l in [2u64, 3, 4, 6] {
        let f = catalog::taft_restriction_functor(l).unwrap();
        assert!(f.validate().unwrap().is_empty());
        let fr = f.freeness_check().unwrap();
        assert!(fr.ok, "freeness identity at l = {l}");
        assert_eq!(fr.ratio.as_rational(), Some(rat(l as i64)));
        let (int_ok, rank) = f.integer_freeness().unwrap();
        assert!(int_ok);
        assert_eq!(rank.unwrap(), BigInt::from(l));
    }
    let f = catalog::s3_restriction_functor().unwrap();
    let fr = f.freeness_check().unwrap();
    assert!(fr.ok);
    assert_eq!(fr.ratio.as_rational(), Some(rat(2)));
    assert!(t0.elapsed().as_secs() < 1);
    pass("3 categorical freeness with integer rank", t0.elapsed());
}

#[test]
fn criterion_04_lagrange_divisibility() {
    let t0 = Instant::now();
    let vec_cat = catalog::build_pointed(&GroupSpec::Abelian(vec![]), 0).unwrap();
    let fib = catalog::build_fibonacci();
    let res = tenscat::functors::lagrange(&vec_cat, &fib, &[0]).unwrap();
    assert!(res.integral);
    assert_eq!(
        res.quotient.minimal_polynomial().unwrap(),
        IntPoly::from_i64(&[5, -5, 1]),
        "quotient (5+sqrt5)/2 has monic integral minimal polynomial"
    );
    assert!(res.quotient.is_algebraic_integer().unwrap());
    for l in [2u64, 3, 4, 6] {
        let sub = catalog::build_pointed(&GroupSpec::Abelian(vec![l]), 0).unwrap();
        let amb = catalog::build_taft(l).unwrap();
        let embed: Vec<usize> = (0..l as usize).collect();
        let res = tenscat::functors::lagrange(&sub, &amb, &embed).unwrap();
        assert!(res.integral);
        assert_eq!(res.quotient.as_rational(), Some(rat(l as i64)));
    }
    assert!(t0.elapsed().as_secs() < 1);
    pass("4 subcategory index divisibility", t0.elapsed());
}

#[test]
fn criterion_05_cartan_degeneracy() {
    let t0 = Instant::now();
    let sweedler = catalog::build_taft(2).unwrap();
    assert_eq!(sweedler.pivotal_trace_exists, Some(true));
    let r = sweedler.cartan_rank();
    assert!(r.ground < sweedler.rank());
    assert!(!r.lorentz_violation);
    for p in [2u64, 3, 5] {
        let c = catalog::build_modular_cyclic(p, 1).unwrap();
        let r = c.cartan_rank();
        assert!(
            r.ground < c.rank(),
            "ground-field rank drops in characteristic {p}"
        );
        assert_eq!(r.over_fp, Some(0));
        assert!(!r.lorentz_violation);
    }
    let fib = catalog::build_fibonacci();
    let r = fib.cartan_rank();
    assert_eq!(r.ground, fib.rank(), "semisimple data keeps full rank");
    assert!(!r.lorentz_violation);
    assert!(t0.elapsed().as_secs() < 1);
    pass("5 Cartan degeneracy in the pivotal nonsemisimple case", t0.elapsed());
}

#[test]
fn criterion_06_nimrep_census() {
    let t0 = Instant::now();
    for l in [2u64, 3, 4, 6] {
        let cat = catalog::build_taft(l).unwrap();
        let modules = nimrep::enumerate(&cat.ring, l as usize, true).unwrap();
        let divisors: Vec<usize> = (1..=l as usize).filter(|d| l as usize % d == 0).collect();
        let ranks: Vec<usize> = modules.iter().map(|m| m.rank).collect();
        assert_eq!(ranks, divisors, "one module per divisor at l = {l}");
        // the census lists two families per divisor sharing one shadow
        let census = catalog::taft_module_census(l).unwrap();
        let mut unique: Vec<usize> = census.entries.iter().map(|e| e.simple_count).collect();
        unique.dedup();
        assert!(nimrep::census_match(&modules, &unique));
        assert_eq!(census.entries.len(), 2 * divisors.len());
    }
    let fib = catalog::build_fibonacci();
    let modules = nimrep::enumerate(&fib.ring, 3, true).unwrap();
    assert_eq!(modules.len(), 1);
    assert_eq!(modules[0].rank, 2);
    assert_eq!(
        modules[0],
        nimrep::ZPlusModule::regular(&fib.ring).canonicalize(),
        "only the regular module survives"
    );
    assert!(t0.elapsed().as_secs() < 30, "census within thirty seconds");
    pass("6 irreducible module census", t0.elapsed());
}

#[test]
fn criterion_07_repg_module_counts() {
    let t0 = Instant::now();
    let (total, _) = catalog::count_repg_module_cats(&GroupSpec::Abelian(vec![2, 2]), 0).unwrap();
    assert_eq!(total, 6);
    let (total, _) = catalog::count_repg_module_cats(&GroupSpec::Abelian(vec![2, 2]), 2).unwrap();
    assert_eq!(total, 5);
    for p in [2u64, 3, 5, 7, 11] {
        let (total, _) = catalog::count_repg_module_cats(&GroupSpec::Abelian(vec![p]), p).unwrap();
        assert_eq!(total, 2);
    }
    for n in 2u64..=12 {
        let (total, _) = catalog::count_repg_module_cats(&GroupSpec::Abelian(vec![n]), 0).unwrap();
        let subgroups = (1..=n).filter(|d| n % d == 0).count() as u64;
        assert_eq!(total, subgroups, "cyclic group of order {n}");
    }
    assert!(t0.elapsed().as_secs() < 1);
    pass("7 group-category module counts", t0.elapsed());
}

#[test]
fn criterion_08_simple_from_right() {
    let t0 = Instant::now();
    for (l, d) in [(2u64, 1u64), (2, 2), (3, 1), (3, 3), (4, 2)] {
        let start = Instant::now();
        let field = ExactField::cyclotomic(l as u32);
        let a = build_taft_a(&field, l, d, FieldElem::one(&field)).unwrap();
        assert!(a.validate().is_empty(), "(l, d) = ({l}, {d}): {:?}", a.validate());
        let res = is_simple_from_right(&a);
        assert!(res.simple, "A({d}, 1) at l = {l} has no invariant right ideals");
        assert!(
            start.elapsed().as_secs() < 5,
            "closure bound at (l, d) = ({l}, {d})"
        );
    }
    // supergroup internal Hom algebras up to ambient dimension two,
    // including every degenerate form
    let field = ExactField::rationals();
    let minus = FieldElem::from_integer(&field, -1);
    let mut cases: Vec<(usize, usize, Vec<Vec<FieldElem>>)> = vec![
        (1, 0, vec![]),
        (1, 1, vec![vec![FieldElem::one(&field)]]),
        (1, 1, vec![vec![FieldElem::zero(&field)]]),
        (2, 0, vec![]),
        (2, 1, vec![vec![FieldElem::one(&field)]]),
        (2, 1, vec![vec![FieldElem::zero(&field)]]),
    ];
    let one = FieldElem::one(&field);
    let zero = FieldElem::zero(&field);
    cases.push((
        2,
        2,
        vec![vec![one.clone(), zero.clone()], vec![zero.clone(), one.clone()]],
    ));
    cases.push((
        2,
        2,
        vec![vec![one.clone(), zero.clone()], vec![zero.clone(), zero.clone()]],
    ));
    cases.push((
        2,
        2,
        vec![vec![zero.clone(), zero.clone()], vec![zero.clone(), zero.clone()]],
    ));
    cases.push((
        2,
        2,
        vec![vec![zero.clone(), one.clone()], vec![one.clone(), zero.clone()]],
    ));
    for (w, y, b) in cases {
        let start = Instant::now();
        let params = SupergroupParams {
            field: &field,
            g_factors: &[2],
            u: vec![1],
            h_gens: vec![vec![1]],
            w_action: vec![vec![minus.clone(); w]],
            w_dim: w,
            y_dim: y,
            b,
            dimension_bound: 64,
        };
        let res = supergroup_internal_hom(&params).unwrap();
        assert!(
            res.simplicity.simple,
            "internal Hom at w = {w}, y = {y} must be simple (dim {})",
            res.algebra.dim
        );
        assert!(start.elapsed().as_secs() < 5);
    }
    // coset algebras with transitive actions
    let q = ExactField::rationals();
    let z4 = Group::abelian(&[4]);
    let h = z4.subgroup(&[2]); // order-2 subgroup {0, 2}
    let a = simplecheck::build_group_quotient(&q, &z4, &h, None, None).unwrap();
    assert!(is_simple_from_right(&a).simple);
    let s3 = Group::s3();
    let h3 = s3.subgroup(&[1]);
    let a = simplecheck::build_group_quotient(&q, &s3, &h3, None, None).unwrap();
    assert!(is_simple_from_right(&a).simple);
    // trivial action on k x k: reducible with the first idempotent as witness
    let split = split_plane(&q);
    let res = is_simple_from_right(&split);
    assert!(!res.simple);
    let witness = res.witness.expect("idempotent span is found");
    assert_eq!(witness.len(), 1);
    pass("8 simple-from-the-right certificates", t0.elapsed());
}

/// k x k with componentwise product and no operators beyond right
/// multiplication.
fn split_plane(field: &std::sync::Arc<ExactField>) -> EquivariantAlgebra {
    let one = FieldElem::one(field);
    let zero = FieldElem::zero(field);
    let mut structure = vec![vec![vec![zero.clone(); 2]; 2]; 2];
    structure[0][0][0] = one.clone();
    structure[1][1][1] = one.clone();
    EquivariantAlgebra {
        field: field.clone(),
        dim: 2,
        basis_names: vec!["e0".into(), "e1".into()],
        unit: vec![one.clone(), one],
        structure,
        group_ops: vec![],
        derivations: vec![],
        parity: None,
    }
}

#[test]
fn criterion_09_filtration_properties() {
    let t0 = Instant::now();
    // every built algebra with derivations reproduces the lettered
    // filtration properties with zero violations
    for (l, d) in [(2u64, 1u64), (2, 2), (3, 1), (3, 3), (4, 2), (4, 4)] {
        let field = ExactField::cyclotomic(l as u32);
        let a = build_taft_a(&field, l, d, FieldElem::one(&field)).unwrap();
        let rep = compute_filtration(&a);
        assert!(
            rep.all_hold(),
            "filtration properties at (l, d) = ({l}, {d}): {:?}",
            rep.properties
        );
        assert!(rep.violations.is_empty());
    }
    let field = ExactField::rationals();
    let minus = FieldElem::from_integer(&field, -1);
    for (w, y, b) in [
        (1usize, 0usize, vec![]),
        (1, 1, vec![vec![FieldElem::one(&field)]]),
        (2, 1, vec![vec![FieldElem::zero(&field)]]),
    ] {
        let params = SupergroupParams {
            field: &field,
            g_factors: &[2],
            u: vec![1],
            h_gens: vec![vec![1]],
            w_action: vec![vec![minus.clone(); w]],
            w_dim: w,
            y_dim: y,
            b,
            dimension_bound: 64,
        };
        let res = supergroup_internal_hom(&params).unwrap();
        let rep = compute_filtration(&res.algebra);
        assert!(rep.all_hold(), "supergroup filtration at w = {w}, y = {y}");
    }
    // derivative of the powers of the skew generator: d(y^m) =
    // (1 + zeta^{-1} + ... + zeta^{1-m}) y^{m-1}, symbolically for m < l
    for l in [2u32, 3, 4] {
        let field = ExactField::cyclotomic(l);
        let zeta = FieldElem::root_of_unity(&field, l).unwrap();
        let a = build_taft_a(&field, l as u64, l as u64, FieldElem::one(&field)).unwrap();
        // basis of A(l, lambda) with d = l is 1, y, ..., y^{l-1}
        let der = &a.derivations[0].matrix;
        for m in 1..l {
            let mut expected = FieldElem::zero(&field);
            for j in 0..m {
                expected = expected.add(&zeta.inv().pow(j));
            }
            for r in 0..a.dim {
                let want = if r == (m - 1) as usize {
                    expected.clone()
                } else {
                    FieldElem::zero(&field)
                };
                assert_eq!(der[r][m as usize], want, "d(y^{m}) at l = {l}");
            }
        }
    }
    pass("9 derivation filtration properties", t0.elapsed());
}

#[test]
fn criterion_10_invariant_suites() {
    let t0 = Instant::now();
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x7e5ca75);
    let examples = bundled_examples();
    // associativity and anti-automorphism on the bundled examples
    for (name, cat) in &examples {
        assert!(cat.validate().is_empty(), "{name} validates");
    }
    // 200 provably-invalid mutations must be caught
    let mut caught = 0;
    while caught < 200 {
        let (name, cat) = &examples[rng.gen_range(0..examples.len())];
        let mut ring = cat.ring.clone();
        let n = ring.rank();
        match rng.gen_range(0..3) {
            0 => {
                // break a unit law
                let j = rng.gen_range(0..n);
                let k = rng.gen_range(0..n);
                ring.fusion[ring.unit][j][k] += 1;
            }
            1 => {
                // break the coevaluation bound
                let i = rng.gen_range(0..n);
                let st = ring.star(i);
                if ring.fusion[i][st][ring.unit] == 0 {
                    continue;
                }
                ring.fusion[i][st][ring.unit] = 0;
            }
            _ => {
                // break the anti-automorphism at a non-self-mirrored triple
                let i = rng.gen_range(0..n);
                let j = rng.gen_range(0..n);
                let k = rng.gen_range(0..n);
                let mirror = (ring.star(j), ring.star(i), ring.star(k));
                if mirror == (i, j, k) {
                    continue;
                }
                ring.fusion[i][j][k] += 1;
                // restore the mirror so only one side moves
                let (mi, mj, mk) = mirror;
                if (mi, mj, mk) != (i, j, k) {
                    // leave fusion[mi][mj][mk] untouched
                }
            }
        }
        assert!(
            !ring.validate(false).is_empty(),
            "{name}: mutation must be caught"
        );
        caught += 1;
    }
    // exact eigen-residual of the dimension character
    for (name, cat) in &examples {
        let fp = cat.fpdims().unwrap();
        let n = cat.rank();
        for i in 0..n {
            for j in 0..n {
                let mut lhs = tenscat::algnum::NumberFieldElement::zero(fp.field.clone());
                for k in 0..n {
                    lhs = lhs
                        .add(&fp.dims[k].scale(&rat(cat.ring.n(i, j, k))))
                        .unwrap();
                }
                assert_eq!(
                    lhs,
                    fp.dims[i].mul(&fp.dims[j]).unwrap(),
                    "{name}: character equation at ({i}, {j})"
                );
            }
        }
    }
    // projective fusion: left and right formulas agree everywhere
    for (name, cat) in &examples {
        for i in 0..cat.rank() {
            for j in 0..cat.rank() {
                assert!(
                    cat.proj_fusion(i, j).is_ok(),
                    "{name}: projective fusion at ({i}, {j})"
                );
            }
        }
    }
    // multiplicativity of the dimension character on random pairs
    for (name, cat) in &examples {
        let n = cat.rank();
        for _ in 0..100 {
            let x = GrVector((0..n).map(|_| rng.gen_range(0..3) as i64).collect());
            let y = GrVector((0..n).map(|_| rng.gen_range(0..3) as i64).collect());
            let xy = cat.ring.gr_mul(&x, &y).unwrap();
            let lhs = cat.fpdim_object(&xy).unwrap();
            let rhs = cat
                .fpdim_object(&x)
                .unwrap()
                .mul(&cat.fpdim_object(&y).unwrap())
                .unwrap();
            assert_eq!(lhs, rhs, "{name}: multiplicativity");
        }
    }
    // external product multiplicativity, across distinct Perron fields
    let sweedler = catalog::build_taft(2).unwrap();
    let fib = catalog::build_fibonacci();
    let s3 = catalog::build_group_semisimple(&GroupSpec::S3).unwrap();
    for (a, b) in [(&sweedler, &sweedler), (&fib, &fib), (&sweedler, &s3), (&fib, &s3)] {
        let prod = deligne_product(a, b).unwrap();
        assert!(prod.validate().is_empty());
        let lhs = prod.fpdim_category().unwrap().to_real().unwrap();
        let ra = a.fpdim_category().unwrap().to_real().unwrap();
        let rb = b.fpdim_category().unwrap().to_real().unwrap();
        let rhs = ra.mul(&rb).unwrap();
        assert_eq!(lhs.cmp(&rhs), Ordering::Equal, "external product dimension");
    }
    let fib2 = deligne_product(&fib, &fib).unwrap();
    assert_eq!(
        fib2.fpdim_category()
            .unwrap()
            .minimal_polynomial()
            .unwrap(),
        IntPoly::from_i64(&[25, -15, 1]),
        "((5+sqrt5)/2)^2 = (15+5 sqrt5)/2 has minimal polynomial x^2-15x+25"
    );
    // dimension inequality never negative
    for (name, cat) in &examples {
        let (sign, _) = cat.dimension_inequality().unwrap();
        assert_ne!(sign, Ordering::Less, "{name}: dimension inequality");
    }
    assert!(
        t0.elapsed() < std::time::Duration::from_secs(120),
        "full invariant suite inside two minutes"
    );
    pass("10 invariant suites", t0.elapsed());
}

// keep the helper import exercised even when filters skip criterion 10
#[allow(unused)]
fn touch(_: &BigRational) {}
