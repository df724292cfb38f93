//! Enumeration and verification of irreducible nonnegative-integer-matrix
//! modules over a based ring: the Grothendieck shadow of indecomposable
//! exact module categories.
//!
//! The enumerator is complete by construction: generators are searched
//! exhaustively under entry bounds that are necessary conditions (Perron
//! bounds, the invertible-generator permutation constraint, and the
//! row-square-sum identity under the duality flag), and all remaining basis
//! matrices are derived from the ring relations.

use crate::algnum::NumberFieldElement;
use crate::rat::rat;
use crate::ring::{BasedRing, Violation};
use crate::tensorcat::TcError;
use num::rational::BigRational;
use num::{One, ToPrimitive};
use std::collections::BTreeSet;
use thiserror::Error;

/// Default hard cap on the module rank for enumeration.
pub const DEFAULT_RANK_CAP: usize = 8;

#[derive(Debug, Error)]
pub enum NimrepError {
    #[error("requested rank {0} exceeds the cap of {1}")]
    RankTooLarge(usize, usize),
    #[error("ring is not transitive")]
    NotTransitive,
    #[error(transparent)]
    Tc(#[from] TcError),
}

type Matrix = Vec<Vec<i64>>;

/// A module over a based ring: one nonnegative matrix per basis element,
/// with `action[i][b'][b]` the multiplicity of basis vector b' in e_i * b.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZPlusModule {
    pub rank: usize,
    pub action: Vec<Matrix>,
}

impl ZPlusModule {
    /// The regular module: the ring acting on itself by left multiplication.
    pub fn regular(ring: &BasedRing) -> Self {
        let n = ring.rank();
        ZPlusModule {
            rank: n,
            action: (0..n)
                .map(|i| ring.basis_mult_matrix(i, crate::ring::Side::Left))
                .collect(),
        }
    }

    /// Canonical form under simultaneous basis permutation: the
    /// lexicographically smallest flattening of the permuted matrices.
    pub fn canonical_key(&self) -> Vec<i64> {
        let m = self.rank;
        let mut best: Option<Vec<i64>> = None;
        let mut perm: Vec<usize> = (0..m).collect();
        permute_all(&mut perm, 0, &mut |p| {
            let mut key = Vec::with_capacity(self.action.len() * m * m);
            for mat in &self.action {
                for b2 in 0..m {
                    for b in 0..m {
                        key.push(mat[p[b2]][p[b]]);
                    }
                }
            }
            if best.as_ref().map_or(true, |b| key < *b) {
                best = Some(key);
            }
        });
        best.unwrap()
    }

    pub fn canonicalize(&self) -> ZPlusModule {
        let key = self.canonical_key();
        let m = self.rank;
        let mut action = Vec::with_capacity(self.action.len());
        let mut idx = 0;
        for _ in 0..self.action.len() {
            let mut mat = vec![vec![0i64; m]; m];
            for row in mat.iter_mut() {
                for e in row.iter_mut() {
                    *e = key[idx];
                    idx += 1;
                }
            }
            action.push(mat);
        }
        ZPlusModule { rank: m, action }
    }
}

fn permute_all<F: FnMut(&[usize])>(perm: &mut Vec<usize>, k: usize, f: &mut F) {
    if k == perm.len() {
        f(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute_all(perm, k + 1, f);
        perm.swap(k, i);
    }
}

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let m = a.len();
    let mut out = vec![vec![0i64; m]; m];
    for i in 0..m {
        for k in 0..m {
            let aik = a[i][k];
            if aik == 0 {
                continue;
            }
            for j in 0..m {
                out[i][j] += aik * b[k][j];
            }
        }
    }
    out
}

fn identity(m: usize) -> Matrix {
    (0..m)
        .map(|i| (0..m).map(|j| i64::from(i == j)).collect())
        .collect()
}

fn transpose(a: &Matrix) -> Matrix {
    let m = a.len();
    (0..m).map(|i| (0..m).map(|j| a[j][i]).collect()).collect()
}

/// Checks the module axioms; the duality flag additionally requires
/// R_{i*} = R_i transposed.
pub fn verify_module(ring: &BasedRing, module: &ZPlusModule, duality: bool) -> Vec<Violation> {
    let mut out = Vec::new();
    let n = ring.rank();
    let m = module.rank;
    if module.action.len() != n
        || module
            .action
            .iter()
            .any(|mat| mat.len() != m || mat.iter().any(|r| r.len() != m))
    {
        out.push(Violation {
            code: "shape".into(),
            message: "action matrices do not match ring rank and module rank".into(),
            witness: vec![],
        });
        return out;
    }
    for (i, mat) in module.action.iter().enumerate() {
        for b2 in 0..m {
            for b in 0..m {
                if mat[b2][b] < 0 {
                    out.push(Violation {
                        code: "negativity".into(),
                        message: "negative action entry".into(),
                        witness: vec![i, b2, b],
                    });
                }
            }
        }
    }
    if module.action[ring.unit] != identity(m) {
        out.push(Violation {
            code: "unit_action".into(),
            message: "the unit must act as the identity".into(),
            witness: vec![ring.unit],
        });
    }
    for i in 0..n {
        for j in 0..n {
            let prod = mat_mul(&module.action[i], &module.action[j]);
            let mut want = vec![vec![0i64; m]; m];
            for k in 0..n {
                let c = ring.n(i, j, k);
                if c == 0 {
                    continue;
                }
                for b2 in 0..m {
                    for b in 0..m {
                        want[b2][b] += c * module.action[k][b2][b];
                    }
                }
            }
            if prod != want {
                out.push(Violation {
                    code: "module_relation".into(),
                    message: "R_i R_j differs from sum_k N[i][j][k] R_k".into(),
                    witness: vec![i, j],
                });
            }
        }
    }
    // Irreducibility: one-step support must connect every ordered pair
    // (one-step reachability is transitively closed by the relations).
    for b in 0..m {
        for b2 in 0..m {
            if !(0..n).any(|i| module.action[i][b2][b] > 0) {
                out.push(Violation {
                    code: "irreducibility".into(),
                    message: "support graph is not strongly connected".into(),
                    witness: vec![b, b2],
                });
            }
        }
    }
    if duality {
        for i in 0..n {
            if module.action[ring.star(i)] != transpose(&module.action[i]) {
                out.push(Violation {
                    code: "duality".into(),
                    message: "R_{i*} is not the transpose of R_i".into(),
                    witness: vec![i],
                });
            }
        }
    }
    out
}

/// Exact positive eigenvector check: finds v > 0 with R_i v = d_i v for
/// every basis element, in the ring's Perron field, if one exists.
pub fn fp_eigenvector(
    ring: &BasedRing,
    dims: &[NumberFieldElement],
    module: &ZPlusModule,
) -> Option<Vec<NumberFieldElement>> {
    let _ = ring;
    let field = dims[0].field().clone();
    let m = module.rank;
    // Perron eigenvalue of the total action is sum_i d_i; solve the
    // one-dimensional eigenspace and normalize positive.
    let mut lambda = NumberFieldElement::zero(field.clone());
    for d in dims {
        lambda = lambda.add(d).ok()?;
    }
    let mut total = vec![vec![NumberFieldElement::zero(field.clone()); m]; m];
    for mat in &module.action {
        for b2 in 0..m {
            for b in 0..m {
                if mat[b2][b] != 0 {
                    total[b2][b] = total[b2][b]
                        .add(&NumberFieldElement::from_rational(
                            field.clone(),
                            rat(mat[b2][b]),
                        ))
                        .ok()?;
                }
            }
        }
    }
    let v = crate::algnum::field_solve_eigvector(&total, &lambda, 0).ok()?;
    if !v.iter().all(|c| c.is_positive()) {
        return None;
    }
    // verify R_i v = d_i v exactly
    for (i, mat) in module.action.iter().enumerate() {
        for b2 in 0..m {
            let mut acc = NumberFieldElement::zero(field.clone());
            for b in 0..m {
                if mat[b2][b] != 0 {
                    acc = acc.add(&v[b].scale(&rat(mat[b2][b]))).ok()?;
                }
            }
            if acc != dims[i].mul(&v[b2]).ok()? {
                return None;
            }
        }
    }
    Some(v)
}

/// Multiset comparison of enumerated ranks against an expected census.
pub fn census_match(modules: &[ZPlusModule], expected_ranks: &[usize]) -> bool {
    let mut got: Vec<usize> = modules.iter().map(|m| m.rank).collect();
    let mut want = expected_ranks.to_vec();
    got.sort_unstable();
    want.sort_unstable();
    got == want
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
struct DeriveStep {
    a: usize,
    s: usize,
    k: usize,
    coeff: i64,
}

#[derive(Debug, Clone)]
struct Plan {
    generators: Vec<usize>,
    steps: Vec<DeriveStep>,
}

/// Finds a smallest basis subset from which every other basis matrix is
/// forced by the ring relations, together with the derivation order.
fn make_plan(ring: &BasedRing) -> Plan {
    let n = ring.rank();
    let non_unit: Vec<usize> = (0..n).filter(|&i| i != ring.unit).collect();
    for size in 0..=non_unit.len() {
        for combo in combinations(&non_unit, size) {
            if let Some(steps) = try_plan(ring, &combo) {
                return Plan {
                    generators: combo,
                    steps,
                };
            }
        }
    }
    unreachable!("the full basis always generates")
}

fn try_plan(ring: &BasedRing, generators: &[usize]) -> Option<Vec<DeriveStep>> {
    let n = ring.rank();
    let mut known = vec![false; n];
    known[ring.unit] = true;
    for &g in generators {
        known[g] = true;
    }
    let mut steps = Vec::new();
    loop {
        if known.iter().all(|&b| b) {
            return Some(steps);
        }
        let mut progressed = false;
        'search: for a in 0..n {
            if !known[a] {
                continue;
            }
            for s in 0..n {
                if !known[s] {
                    continue;
                }
                let unknowns: Vec<usize> = (0..n)
                    .filter(|&k| ring.n(a, s, k) > 0 && !known[k])
                    .collect();
                if unknowns.len() == 1 {
                    let k = unknowns[0];
                    steps.push(DeriveStep {
                        a,
                        s,
                        k,
                        coeff: ring.n(a, s, k),
                    });
                    known[k] = true;
                    progressed = true;
                    break 'search;
                }
            }
        }
        if !progressed {
            return None;
        }
    }
}

fn combinations(items: &[usize], size: usize) -> Vec<Vec<usize>> {
    if size == 0 {
        return vec![vec![]];
    }
    if items.len() < size {
        return vec![];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        for mut rest in combinations(&items[i + 1..], size - 1) {
            rest.insert(0, x);
            out.push(rest);
        }
    }
    out
}

/// True when the basis element is invertible in the ring: e_s e_{s*} and
/// e_{s*} e_s are both exactly the unit.
fn is_invertible(ring: &BasedRing, s: usize) -> bool {
    let n = ring.rank();
    let st = ring.star(s);
    (0..n).all(|k| {
        ring.n(s, st, k) == i64::from(k == ring.unit)
            && ring.n(st, s, k) == i64::from(k == ring.unit)
    })
}

/// Rational upper bound on the Perron root of the ring's total
/// multiplication matrix, refined to width below 1/16.
fn perron_upper_bound(ring: &BasedRing) -> Result<BigRational, NimrepError> {
    let total = ring.total_mult_matrix();
    let lam = crate::algnum::perron_root_i64(&total, true).map_err(TcError::from)?;
    lam.refine_below(&BigRational::new(1.into(), 16.into()));
    Ok(lam.interval().1)
}

fn pow_rational(x: &BigRational, e: usize) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..e {
        acc *= x;
    }
    acc
}

/// Complete list of irreducible modules up to simultaneous basis
/// permutation, for every rank up to `max_rank`, with the duality flag
/// requiring R_{i*} = R_i transposed.
pub fn enumerate(
    ring: &BasedRing,
    max_rank: usize,
    duality: bool,
) -> Result<Vec<ZPlusModule>, NimrepError> {
    enumerate_with_cap(ring, max_rank, duality, DEFAULT_RANK_CAP)
}

pub fn enumerate_with_cap(
    ring: &BasedRing,
    max_rank: usize,
    duality: bool,
    cap: usize,
) -> Result<Vec<ZPlusModule>, NimrepError> {
    if max_rank > cap {
        return Err(NimrepError::RankTooLarge(max_rank, cap));
    }
    if !ring.is_transitive() {
        return Err(NimrepError::NotTransitive);
    }
    let plan = make_plan(ring);
    let lam_hi = perron_upper_bound(ring)?;
    let mut found: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut out: Vec<ZPlusModule> = Vec::new();
    for m in 1..=max_rank {
        // Perron entry bound: every entry of an action matrix of an
        // irreducible rank-m module is at most lambda^m.
        let bound = pow_rational(&lam_hi, m).floor().to_integer();
        let bound = bound.to_i64().unwrap_or(i64::MAX).max(1);
        let mut assignment: Vec<Matrix> = Vec::new();
        search_generators(ring, &plan, m, duality, bound, 0, &mut assignment, &mut |mats| {
            if let Some(module) = complete_module(ring, &plan, m, mats) {
                if verify_module(ring, &module, duality).is_empty() {
                    let canon = module.canonicalize();
                    if found.insert(canon.canonical_key()) {
                        out.push(canon);
                    }
                }
            }
        });
    }
    out.sort_by_key(|m| (m.rank, m.canonical_key()));
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn search_generators(
    ring: &BasedRing,
    plan: &Plan,
    m: usize,
    duality: bool,
    bound: i64,
    idx: usize,
    assignment: &mut Vec<Matrix>,
    emit: &mut dyn FnMut(&[Matrix]),
) {
    if idx == plan.generators.len() {
        emit(assignment);
        return;
    }
    let s = plan.generators[idx];
    // Under the duality flag, the partner of an already-assigned generator
    // is forced to be its transpose.
    if duality {
        if let Some(pos) = plan.generators[..idx]
            .iter()
            .position(|&g| ring.star(g) == s)
        {
            let forced = transpose(&assignment[pos]);
            assignment.push(forced);
            search_generators(ring, plan, m, duality, bound, idx + 1, assignment, emit);
            assignment.pop();
            return;
        }
    }
    if is_invertible(ring, s) {
        // e_s e_{s*} = 1 forces a nonnegative integer matrix with a
        // nonnegative integer inverse: a permutation matrix.
        let mut perm: Vec<usize> = (0..m).collect();
        permute_all(&mut perm, 0, &mut |p| {
            let mut mat = vec![vec![0i64; m]; m];
            for b in 0..m {
                mat[p[b]][b] = 1;
            }
            assignment.push(mat);
            search_generators(ring, plan, m, duality, bound, idx + 1, assignment, emit);
            assignment.pop();
        });
        return;
    }
    // General case: DFS over entries, bounded by the Perron bound and, with
    // duality on, by the row-square-sum identity
    // sum_c R_s[b][c]^2 = sum_k N[s][s*][k] R_k[b][b] <= N_unit + bound * rest.
    let symmetric = duality && ring.star(s) == s;
    let sq_cap: i64 = if duality {
        let st = ring.star(s);
        let mut cap = 0i64;
        for k in 0..ring.rank() {
            let c = ring.n(s, st, k);
            if c > 0 {
                cap += c * if k == ring.unit { 1 } else { bound };
            }
        }
        cap
    } else {
        i64::MAX
    };
    let mut mat = vec![vec![0i64; m]; m];
    fill_entries(&mut mat, m, symmetric, bound, sq_cap, 0, &mut |mat| {
        assignment.push(mat.clone());
        search_generators(ring, plan, m, duality, bound, idx + 1, assignment, emit);
        assignment.pop();
    });
}

fn fill_entries(
    mat: &mut Matrix,
    m: usize,
    symmetric: bool,
    bound: i64,
    sq_cap: i64,
    pos: usize,
    emit: &mut dyn FnMut(&Matrix),
) {
    if pos == m * m {
        emit(mat);
        return;
    }
    let (r, c) = (pos / m, pos % m);
    if symmetric && c < r {
        // lower triangle mirrors the upper one
        mat[r][c] = mat[c][r];
        if row_sq(mat, r, c + 1) <= sq_cap {
            fill_entries(mat, m, symmetric, bound, sq_cap, pos + 1, emit);
        }
        mat[r][c] = 0;
        return;
    }
    for v in 0..=bound {
        mat[r][c] = v;
        if row_sq(mat, r, c + 1) > sq_cap {
            break;
        }
        fill_entries(mat, m, symmetric, bound, sq_cap, pos + 1, emit);
    }
    mat[r][c] = 0;
}

fn row_sq(mat: &Matrix, r: usize, upto: usize) -> i64 {
    mat[r][..upto].iter().map(|&x| x * x).sum()
}

/// Replays the derivation plan to obtain every basis matrix; returns None
/// when a derived matrix fails integrality or nonnegativity.
fn complete_module(
    ring: &BasedRing,
    plan: &Plan,
    m: usize,
    generator_mats: &[Matrix],
) -> Option<ZPlusModule> {
    let n = ring.rank();
    let mut action: Vec<Option<Matrix>> = vec![None; n];
    action[ring.unit] = Some(identity(m));
    for (g, mat) in plan.generators.iter().zip(generator_mats) {
        action[*g] = Some(mat.clone());
    }
    for step in &plan.steps {
        let prod = mat_mul(
            action[step.a].as_ref().unwrap(),
            action[step.s].as_ref().unwrap(),
        );
        let mut rem = prod;
        for k2 in 0..n {
            if k2 == step.k {
                continue;
            }
            let c = ring.n(step.a, step.s, k2);
            if c == 0 {
                continue;
            }
            let known = action[k2].as_ref().unwrap();
            for b2 in 0..m {
                for b in 0..m {
                    rem[b2][b] -= c * known[b2][b];
                }
            }
        }
        let mut mat = vec![vec![0i64; m]; m];
        for b2 in 0..m {
            for b in 0..m {
                if rem[b2][b] % step.coeff != 0 || rem[b2][b] < 0 {
                    return None;
                }
                mat[b2][b] = rem[b2][b] / step.coeff;
            }
        }
        action[step.k] = Some(mat);
    }
    Some(ZPlusModule {
        rank: m,
        action: action.into_iter().map(Option::unwrap).collect(),
    })
}
