//! Shared test support: the explicit module oracle for the cyclic-quotient
//! Hopf algebras and the bundled example list.
//!
//! The oracle builds the l^2-dimensional algebra <g, x | g^l = 1, x^l = 0,
//! x g = zeta^{-1} g x> over Q(zeta_l), cuts out the projective
//! indecomposables with the grouplike idempotents, and reads off the Cartan
//! matrix and socle characters by exact eigenspace computations. This is
//! the independent source pinning the all-ones Cartan matrix and the socle
//! direction used by the catalog builder.

#![allow(dead_code)]

use std::sync::Arc;
use tenscat::catalog::{self, GroupSpec};
use tenscat::field::{ExactField, FieldElem};
use tenscat::linalg::{kernel, ExactScalar, Span};
use tenscat::simplecheck::{build_from_presentation, Exchange, GenSpec, Presentation};
use tenscat::tensorcat::TensorCatData;

pub struct HopfOracle {
    pub l: usize,
    pub dim: usize,
    pub cartan: Vec<Vec<i64>>,
    pub socle: Vec<usize>,
}

/// Builds the Hopf algebra as a presentation, spins the projective cover of
/// each character out of its grouplike idempotent, and computes composition
/// multiplicities and socle characters exactly.
pub fn taft_hopf_oracle(l: u32) -> HopfOracle {
    let field = ExactField::cyclotomic(l);
    let zeta = FieldElem::root_of_unity(&field, l).expect("cyclotomic field has its root");
    let pres = Presentation {
        field: field.clone(),
        generators: vec![
            GenSpec {
                name: "g".into(),
                power: l,
                power_value: FieldElem::one(&field),
            },
            GenSpec {
                name: "x".into(),
                power: l,
                power_value: FieldElem::zero(&field),
            },
        ],
        exchanges: vec![Exchange {
            left: 1,
            right: 0,
            swap: zeta.inv(),
            unit_term: FieldElem::zero(&field),
        }],
        dimension_bound: (l * l) as usize,
    };
    let h = build_from_presentation(&pres).expect("Hopf presentation is consistent");
    let n = h.dim;
    let ln = l as usize;
    assert_eq!(n, ln * ln);
    // basis index of g^a x^b
    let idx = |a: usize, b: usize| a * ln + b;
    let l_g = h.left_mult(&h.basis_elem(idx(1, 0)));
    let l_x = h.left_mult(&h.basis_elem(idx(0, 1)));
    let inv_l = FieldElem::from_integer(&field, l as i64).inv();
    let mut cartan = vec![vec![0i64; ln]; ln];
    let mut socle = vec![0usize; ln];
    for i in 0..ln {
        // idempotent E_i = (1/l) sum_a zeta^{-i a} g^a
        let mut e = vec![FieldElem::zero(&field); n];
        for a in 0..ln {
            let c = zeta.pow(((ln - i % ln) * a % ln) as u32).mul(&inv_l);
            e[idx(a, 0)] = c;
        }
        // spin under left multiplication
        let mut span: Span<FieldElem> = Span::new(n);
        let mut vecs = vec![e];
        span.insert(vecs[0].clone());
        let mut t = 0;
        while t < vecs.len() {
            for m in [&l_g, &l_x] {
                let w = apply(m, &vecs[t]);
                if span.insert(w.clone()) {
                    vecs.push(w);
                }
            }
            t += 1;
        }
        assert_eq!(span.rank(), ln, "projective cover has dimension l");
        // restrict the operators to the subspace coordinates
        let rows = span.rows().to_vec();
        let pivots: Vec<usize> = rows
            .iter()
            .map(|r| r.iter().position(|c| !c.is_zero()).unwrap())
            .collect();
        let coords = |v: &Vec<FieldElem>| -> Vec<FieldElem> {
            pivots.iter().map(|&p| v[p].clone()).collect()
        };
        let restrict = |m: &Vec<Vec<FieldElem>>| -> Vec<Vec<FieldElem>> {
            let cols: Vec<Vec<FieldElem>> = rows
                .iter()
                .map(|r| {
                    let img = apply(m, r);
                    assert!(span.contains(&img), "subspace is a left submodule");
                    coords(&img)
                })
                .collect();
            (0..rows.len())
                .map(|r| (0..rows.len()).map(|c| cols[c][r].clone()).collect())
                .collect()
        };
        let g_res = restrict(&l_g);
        let x_res = restrict(&l_x);
        // composition multiplicities = eigenvalue multiplicities of g
        for j in 0..ln {
            let lam = zeta.pow(j as u32);
            let shifted: Vec<Vec<FieldElem>> = (0..rows.len())
                .map(|r| {
                    (0..rows.len())
                        .map(|c| {
                            if r == c {
                                g_res[r][c].sub(&lam)
                            } else {
                                g_res[r][c].clone()
                            }
                        })
                        .collect()
                })
                .collect();
            let zero = FieldElem::zero(&field);
            let one = FieldElem::one(&field);
            cartan[i][j] = kernel(&shifted, rows.len(), &zero, &one).len() as i64;
        }
        // socle: kernel of the nilpotent part, one-dimensional, carrying a
        // single character of g
        let zero = FieldElem::zero(&field);
        let one = FieldElem::one(&field);
        let ker = kernel(&x_res, rows.len(), &zero, &one);
        assert_eq!(ker.len(), 1, "projective cover is uniserial");
        let v = &ker[0];
        let gv = apply(&g_res, v);
        let pivot = v.iter().position(|c| !c.is_zero()).unwrap();
        let ratio = gv[pivot].mul(&v[pivot].inv());
        let s = (0..ln)
            .find(|&j| zeta.pow(j as u32) == ratio)
            .expect("socle carries a character of g");
        socle[i] = s;
    }
    HopfOracle {
        l: ln,
        dim: n,
        cartan,
        socle,
    }
}

fn apply(m: &[Vec<FieldElem>], v: &[FieldElem]) -> Vec<FieldElem> {
    let n = m.len();
    let mut out = vec![v[0].zero(); n];
    for (c, vc) in v.iter().enumerate() {
        if vc.is_zero() {
            continue;
        }
        for r in 0..n {
            if m[r][c].is_zero() {
                continue;
            }
            let t = m[r][c].mul(vc);
            out[r] = out[r].add(&t);
        }
    }
    out
}

pub fn cyclotomic_field(l: u32) -> Arc<ExactField> {
    ExactField::cyclotomic(l)
}

/// Every bundled example category, by name.
pub fn bundled_examples() -> Vec<(String, TensorCatData)> {
    let mut out = Vec::new();
    for l in [2u64, 3, 4, 6] {
        out.push((format!("taft:{l}"), catalog::build_taft(l).unwrap()));
    }
    for (p, n) in [(2u64, 1u32), (3, 1), (5, 1), (2, 2)] {
        out.push((
            format!("modular-cyclic:{p}^{n}"),
            catalog::build_modular_cyclic(p, n).unwrap(),
        ));
    }
    out.push((
        "group:S3".into(),
        catalog::build_group_semisimple(&GroupSpec::S3).unwrap(),
    ));
    for spec in [vec![2u64], vec![3], vec![2, 2]] {
        out.push((
            format!(
                "pointed:{}",
                spec.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join("x")
            ),
            catalog::build_pointed(&GroupSpec::Abelian(spec), 0).unwrap(),
        ));
    }
    out.push(("fibonacci".into(), catalog::build_fibonacci()));
    out
}
