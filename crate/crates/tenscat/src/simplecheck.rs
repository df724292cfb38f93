//! Exact computational algebra for the module-category classifications:
//! build finite-dimensional equivariant algebras (twisted group algebras,
//! Clifford smash products, cyclic-quotient algebras with a skew
//! derivation), compute derivation filtrations, and certify the absence of
//! invariant right ideals by operator closure.
//!
//! The simplicity certificate is Burnside's: over an algebraically closed
//! ground field, the operator set (right multiplications, group actions,
//! derivations) acts irreducibly iff the algebra it generates has dimension
//! n^2. A closure dimension of n^2 computed over Q or Q(zeta) certifies
//! geometric simplicity; a deficit certifies geometric reducibility, and a
//! rational witness subspace is then searched for by spinning.

use crate::field::{ExactField, FieldElem, FieldKind};
use crate::linalg::{kernel, ExactScalar, Span};
use crate::ring::Violation;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SimpleCheckError {
    #[error("spanning closure needs dimension {required}, above the bound {bound}")]
    DimensionOverflow { required: usize, bound: usize },
    #[error("inconsistent relations: {0}")]
    InconsistentRelations(String),
    #[error("supplied elements do not form a subgroup")]
    NotASubgroup,
    #[error("cocycle table invalid: {0}")]
    CocycleInvalid(String),
    #[error("characteristic two is excluded in the super setting")]
    CharacteristicTwo,
    #[error("bilinear form is not symmetric")]
    AsymmetricForm,
    #[error("{d} does not divide {l}")]
    BadDivisor { d: u64, l: u64 },
    #[error("trace-form criterion needs characteristic 0 or p > dim, got p = {p}, dim = {dim}")]
    CharacteristicTooSmall { p: u64, dim: usize },
    #[error("bad input: {0}")]
    BadInput(String),
}

type Elem = Vec<FieldElem>;
type Matrix = Vec<Vec<FieldElem>>;

// ---------------------------------------------------------------------------
// Operators
// ---------------------------------------------------------------------------

/// An algebra automorphism of declared finite order.
#[derive(Debug, Clone)]
pub struct GroupOperator {
    pub name: String,
    pub matrix: Matrix,
    pub order: u32,
}

/// A skew derivation: d(ab) = d(a) b + g(a) d(b) for the twist
/// automorphism g (index into the group operators).
#[derive(Debug, Clone)]
pub struct DerivationOperator {
    pub name: String,
    pub matrix: Matrix,
    pub twist: usize,
    /// d^k = 0 when declared.
    pub nilpotence: Option<u32>,
    /// d(g(a)) = c * g(d(a)) when declared, for the automorphism at the
    /// given index.
    pub zeta_commutation: Option<(usize, FieldElem)>,
    /// Derivations sharing a group label pairwise anticommute and square
    /// to zero.
    pub anticommute_group: Option<usize>,
}

/// A finite-dimensional unital algebra over an exact field, together with
/// group-action automorphisms, skew derivations, and an optional parity
/// automorphism (an index into the group operators).
#[derive(Debug, Clone)]
pub struct EquivariantAlgebra {
    pub field: Arc<ExactField>,
    pub dim: usize,
    pub basis_names: Vec<String>,
    pub unit: Elem,
    /// `structure[i][j][k]`: coefficient of e_k in e_i e_j.
    pub structure: Vec<Vec<Elem>>,
    pub group_ops: Vec<GroupOperator>,
    pub derivations: Vec<DerivationOperator>,
    pub parity: Option<usize>,
}

fn zero_elem(field: &Arc<ExactField>, n: usize) -> Elem {
    vec![FieldElem::zero(field); n]
}

fn mat_identity(field: &Arc<ExactField>, n: usize) -> Matrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        FieldElem::one(field)
                    } else {
                        FieldElem::zero(field)
                    }
                })
                .collect()
        })
        .collect()
}

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let field = a[0][0].field().clone();
    let mut out = vec![zero_elem(&field, n); n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if b[k][j].is_zero() {
                    continue;
                }
                let t = a[i][k].mul(&b[k][j]);
                out[i][j] = out[i][j].add(&t);
            }
        }
    }
    out
}

fn mat_apply(m: &Matrix, v: &Elem) -> Elem {
    let n = m.len();
    let field = v[0].field().clone();
    let mut out = zero_elem(&field, n);
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

fn mat_eq(a: &Matrix, b: &Matrix) -> bool {
    a == b
}

fn mat_pow(m: &Matrix, e: u32) -> Matrix {
    let field = m[0][0].field().clone();
    let mut acc = mat_identity(&field, m.len());
    for _ in 0..e {
        acc = mat_mul(&acc, m);
    }
    acc
}

fn mat_is_zero(m: &Matrix) -> bool {
    m.iter().all(|r| r.iter().all(|c| c.is_zero()))
}

fn mat_add(a: &Matrix, b: &Matrix) -> Matrix {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x.add(y)).collect())
        .collect()
}

fn mat_neg(a: &Matrix) -> Matrix {
    a.iter()
        .map(|r| r.iter().map(|x| x.neg()).collect())
        .collect()
}

fn mat_inverse(m: &Matrix) -> Option<Matrix> {
    let n = m.len();
    let field = m[0][0].field().clone();
    let mut a: Vec<Vec<FieldElem>> = m.clone();
    let mut inv = mat_identity(&field, n);
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        inv.swap(col, piv);
        let f = a[col][col].inv();
        for j in 0..n {
            a[col][j] = a[col][j].mul(&f);
            inv[col][j] = inv[col][j].mul(&f);
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let c = a[r][col].clone();
                for j in 0..n {
                    let t = c.mul(&a[col][j]);
                    a[r][j] = a[r][j].sub(&t);
                    let t = c.mul(&inv[col][j]);
                    inv[r][j] = inv[r][j].sub(&t);
                }
            }
        }
    }
    Some(inv)
}

impl EquivariantAlgebra {
    pub fn basis_elem(&self, i: usize) -> Elem {
        let mut v = zero_elem(&self.field, self.dim);
        v[i] = FieldElem::one(&self.field);
        v
    }

    /// Product of two elements through the structure constants.
    pub fn mul(&self, x: &Elem, y: &Elem) -> Elem {
        let mut out = zero_elem(&self.field, self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi.mul(yj);
                for (k, s) in self.structure[i][j].iter().enumerate() {
                    if s.is_zero() {
                        continue;
                    }
                    let t = c.mul(s);
                    out[k] = out[k].add(&t);
                }
            }
        }
        out
    }

    /// Matrix of left multiplication by x.
    pub fn left_mult(&self, x: &Elem) -> Matrix {
        let mut m = vec![zero_elem(&self.field, self.dim); self.dim];
        for j in 0..self.dim {
            let col = self.mul(x, &self.basis_elem(j));
            for r in 0..self.dim {
                m[r][j] = col[r].clone();
            }
        }
        m
    }

    /// Matrix of right multiplication by x.
    pub fn right_mult(&self, x: &Elem) -> Matrix {
        let mut m = vec![zero_elem(&self.field, self.dim); self.dim];
        for j in 0..self.dim {
            let col = self.mul(&self.basis_elem(j), x);
            for r in 0..self.dim {
                m[r][j] = col[r].clone();
            }
        }
        m
    }

    /// All invariants: unit laws, associativity, automorphism and order
    /// declarations, skew-Leibniz rules, nilpotence, commutation with the
    /// twist, and anticommutation in the super setting.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let n = self.dim;
        // unit laws
        for j in 0..n {
            let e = self.basis_elem(j);
            if self.mul(&self.unit, &e) != e || self.mul(&e, &self.unit) != e {
                out.push(Violation {
                    code: "unit".into(),
                    message: "unit laws fail".into(),
                    witness: vec![j],
                });
            }
        }
        // associativity
        'aloop: for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let ej = self.basis_elem(j);
                    let ek = self.basis_elem(k);
                    let ei = self.basis_elem(i);
                    let lhs = self.mul(&self.mul(&ei, &ej), &ek);
                    let rhs = self.mul(&ei, &self.mul(&ej, &ek));
                    if lhs != rhs {
                        out.push(Violation {
                            code: "associativity".into(),
                            message: "structure constants are not associative".into(),
                            witness: vec![i, j, k],
                        });
                        break 'aloop;
                    }
                }
            }
        }
        // group operators
        for (gi, g) in self.group_ops.iter().enumerate() {
            if mat_apply(&g.matrix, &self.unit) != self.unit {
                out.push(Violation {
                    code: "automorphism_unit".into(),
                    message: format!("{} does not fix the unit", g.name),
                    witness: vec![gi],
                });
            }
            for i in 0..n {
                for j in 0..n {
                    let ei = self.basis_elem(i);
                    let ej = self.basis_elem(j);
                    let lhs = mat_apply(&g.matrix, &self.mul(&ei, &ej));
                    let rhs = self.mul(&mat_apply(&g.matrix, &ei), &mat_apply(&g.matrix, &ej));
                    if lhs != rhs {
                        out.push(Violation {
                            code: "automorphism".into(),
                            message: format!("{} is not multiplicative", g.name),
                            witness: vec![gi, i, j],
                        });
                    }
                }
            }
            if !mat_eq(&mat_pow(&g.matrix, g.order), &mat_identity(&self.field, n)) {
                out.push(Violation {
                    code: "operator_order".into(),
                    message: format!("{} does not have the declared order {}", g.name, g.order),
                    witness: vec![gi],
                });
            }
        }
        // derivations
        for (di, d) in self.derivations.iter().enumerate() {
            let twist = &self.group_ops[d.twist].matrix;
            for i in 0..n {
                for j in 0..n {
                    let ei = self.basis_elem(i);
                    let ej = self.basis_elem(j);
                    let lhs = mat_apply(&d.matrix, &self.mul(&ei, &ej));
                    let da = mat_apply(&d.matrix, &ei);
                    let db = mat_apply(&d.matrix, &ej);
                    let ga = mat_apply(twist, &ei);
                    let mut rhs = self.mul(&da, &ej);
                    let second = self.mul(&ga, &db);
                    for r in 0..n {
                        rhs[r] = rhs[r].add(&second[r]);
                    }
                    if lhs != rhs {
                        out.push(Violation {
                            code: "skew_leibniz".into(),
                            message: format!("{} violates the skew-Leibniz rule", d.name),
                            witness: vec![di, i, j],
                        });
                    }
                }
            }
            if let Some(k) = d.nilpotence {
                if !mat_is_zero(&mat_pow(&d.matrix, k)) {
                    out.push(Violation {
                        code: "nilpotence".into(),
                        message: format!("{}^{} is not zero", d.name, k),
                        witness: vec![di],
                    });
                }
            }
            if let Some((gi, c)) = &d.zeta_commutation {
                let g = &self.group_ops[*gi].matrix;
                let lhs = mat_mul(&d.matrix, g);
                let mut rhs = mat_mul(g, &d.matrix);
                for row in rhs.iter_mut() {
                    for e in row.iter_mut() {
                        *e = e.mul(c);
                    }
                }
                if !mat_eq(&lhs, &rhs) {
                    out.push(Violation {
                        code: "twist_commutation".into(),
                        message: format!("{} does not commute with the twist as declared", d.name),
                        witness: vec![di],
                    });
                }
            }
        }
        // anticommutation inside each declared super family
        for (i, a) in self.derivations.iter().enumerate() {
            let Some(fam) = a.anticommute_group else { continue };
            for (j, b) in self.derivations.iter().enumerate().skip(i) {
                if b.anticommute_group != Some(fam) {
                    continue;
                }
                let sum = mat_add(
                    &mat_mul(&a.matrix, &b.matrix),
                    &mat_mul(&b.matrix, &a.matrix),
                );
                if !mat_is_zero(&sum) {
                    out.push(Violation {
                        code: "anticommutation".into(),
                        message: format!("{} and {} do not anticommute", a.name, b.name),
                        witness: vec![i, j],
                    });
                }
            }
        }
        out
    }

    /// The operator set whose invariant subspaces are exactly the invariant
    /// right ideals: right multiplications plus all declared operators.
    fn operator_set(&self) -> Vec<Matrix> {
        let mut ops = Vec::new();
        for b in 0..self.dim {
            ops.push(self.right_mult(&self.basis_elem(b)));
        }
        for g in &self.group_ops {
            ops.push(g.matrix.clone());
        }
        for d in &self.derivations {
            ops.push(d.matrix.clone());
        }
        ops
    }
}

// ---------------------------------------------------------------------------
// Simplicity by operator closure
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct SimplicityResult {
    pub simple: bool,
    pub closure_dimension: usize,
    /// A basis of a proper nonzero invariant subspace, when one was found
    /// by spinning basis vectors (rational witnesses are best-effort).
    pub witness: Option<Vec<Elem>>,
}

/// Burnside certification, exact: the unital operator algebra generated by
/// right multiplications, group actions and derivations is closed under
/// left multiplication by generators until stable; the algebra is simple
/// from the right iff the closure has dimension dim^2.
pub fn is_simple_from_right(a: &EquivariantAlgebra) -> SimplicityResult {
    let n = a.dim;
    let ops = a.operator_set();
    let dim2 = n * n;
    let mut span: Span<FieldElem> = Span::new(dim2);
    let mut reps: Vec<Matrix> = Vec::new();
    let flat = |m: &Matrix| -> Vec<FieldElem> {
        m.iter().flat_map(|r| r.iter().cloned()).collect()
    };
    let id = mat_identity(&a.field, n);
    if span.insert(flat(&id)) {
        reps.push(id);
    }
    for op in &ops {
        if span.rank() == dim2 {
            break;
        }
        if span.insert(flat(op)) {
            reps.push(op.clone());
        }
    }
    let mut i = 0;
    while i < reps.len() && span.rank() < dim2 {
        for op in &ops {
            let prod = mat_mul(op, &reps[i]);
            if span.insert(flat(&prod)) {
                reps.push(prod);
                if span.rank() == dim2 {
                    break;
                }
            }
        }
        i += 1;
    }
    let simple = span.rank() == dim2;
    let witness = if simple { None } else { find_witness(a, &ops) };
    SimplicityResult {
        simple,
        closure_dimension: span.rank(),
        witness,
    }
}

/// Best-effort rational witness: spins basis vectors and small eigen-kernel
/// vectors of the operators; a stable span of dimension strictly between 0
/// and n is an invariant right ideal.
fn find_witness(a: &EquivariantAlgebra, ops: &[Matrix]) -> Option<Vec<Elem>> {
    let n = a.dim;
    let mut seeds: Vec<Elem> = (0..n).map(|b| a.basis_elem(b)).collect();
    // kernel vectors of M - c for small shifts c and the diagonal entries
    for op in ops {
        let mut shifts: Vec<FieldElem> = vec![
            FieldElem::zero(&a.field),
            FieldElem::one(&a.field),
            FieldElem::from_integer(&a.field, -1),
        ];
        for i in 0..n {
            if !shifts.contains(&op[i][i]) {
                shifts.push(op[i][i].clone());
            }
        }
        for c in shifts {
            let rows: Vec<Vec<FieldElem>> = (0..n)
                .map(|r| {
                    (0..n)
                        .map(|col| {
                            if r == col {
                                op[r][col].sub(&c)
                            } else {
                                op[r][col].clone()
                            }
                        })
                        .collect()
                })
                .collect();
            let zero = FieldElem::zero(&a.field);
            let one = FieldElem::one(&a.field);
            seeds.extend(kernel(&rows, n, &zero, &one));
        }
    }
    for seed in seeds {
        if seed.iter().all(|c| c.is_zero()) {
            continue;
        }
        let mut span: Span<FieldElem> = Span::new(n);
        let mut vecs = vec![seed];
        span.insert(vecs[0].clone());
        let mut i = 0;
        while i < vecs.len() && span.rank() < n {
            for op in ops {
                let w = mat_apply(op, &vecs[i]);
                if span.insert(w.clone()) {
                    vecs.push(w);
                }
            }
            i += 1;
        }
        if span.rank() < n {
            return Some(span.rows().to_vec());
        }
    }
    None
}

/// Left-regular trace form nondegeneracy. Valid in characteristic zero or
/// when p exceeds the dimension.
pub fn semisimplicity_test(a: &EquivariantAlgebra) -> Result<bool, SimpleCheckError> {
    let p = a.field.characteristic();
    if p != 0 && (p as usize) <= a.dim {
        return Err(SimpleCheckError::CharacteristicTooSmall { p, dim: a.dim });
    }
    let n = a.dim;
    let lefts: Vec<Matrix> = (0..n).map(|i| a.left_mult(&a.basis_elem(i))).collect();
    let mut gram = vec![zero_elem(&a.field, n); n];
    for i in 0..n {
        for j in 0..n {
            let mut tr = FieldElem::zero(&a.field);
            for r in 0..n {
                for c in 0..n {
                    if lefts[i][r][c].is_zero() || lefts[j][c][r].is_zero() {
                        continue;
                    }
                    let t = lefts[i][r][c].mul(&lefts[j][c][r]);
                    tr = tr.add(&t);
                }
            }
            gram[i][j] = tr;
        }
    }
    Ok(crate::linalg::rank(&gram) == n)
}

// ---------------------------------------------------------------------------
// Derivation filtration
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct FiltrationReport {
    /// Bases of A_0 subset A_1 subset ... (row-reduced).
    pub chain: Vec<Vec<Elem>>,
    /// (property label, holds) in the order (a)..(f).
    pub properties: Vec<(String, bool)>,
    pub violations: Vec<Violation>,
}

impl FiltrationReport {
    pub fn all_hold(&self) -> bool {
        self.properties.iter().all(|(_, ok)| *ok)
    }
}

/// The kernel filtration A_{-1} = 0, A_i = { a : d(a) in A_{i-1} for every
/// derivation d }, with the lettered properties checked exactly:
/// (a) d(A_i) in A_{i-1}; (b) group invariance; (c) multiplicativity
/// A_i A_j in A_{i+j}; (d) exhaustion at the declared nilpotence degree;
/// (e) the strict drop property; and, when the algebra is simple from the
/// right, (f) A_0 has no nontrivial invariant ideals for the restricted
/// operator set.
pub fn compute_filtration(a: &EquivariantAlgebra) -> FiltrationReport {
    let n = a.dim;
    let mut violations = Vec::new();
    let ders: Vec<&Matrix> = a.derivations.iter().map(|d| &d.matrix).collect();
    // chain of spans
    let mut spans: Vec<Span<FieldElem>> = Vec::new();
    let mut prev = Span::new(n); // A_{-1} = 0
    loop {
        // stack the conditions residual(prev) . D_v a = 0
        let mut rows: Vec<Vec<FieldElem>> = Vec::new();
        for d in &ders {
            for r in 0..n {
                // row r of residual-after-prev of D_v
                let mut row = Vec::with_capacity(n);
                for c in 0..n {
                    row.push(d[r][c].clone());
                }
                rows.push(row);
            }
        }
        // convert: condition is prev.reduce(D a) = 0; realize by reducing
        // each D e_c against prev and collecting the residual coordinates.
        let mut cond_rows: Vec<Vec<FieldElem>> = Vec::new();
        for d in &ders {
            // residual images of basis vectors
            let mut cols: Vec<Elem> = Vec::new();
            for c in 0..n {
                let mut img: Elem = (0..n).map(|r| d[r][c].clone()).collect();
                prev.reduce(&mut img);
                cols.push(img);
            }
            for r in 0..n {
                let row: Vec<FieldElem> = (0..n).map(|c| cols[c][r].clone()).collect();
                if row.iter().any(|x| !x.is_zero()) {
                    cond_rows.push(row);
                }
            }
        }
        let zero = FieldElem::zero(&a.field);
        let one = FieldElem::one(&a.field);
        let basis = if ders.is_empty() {
            // no derivations: A_0 is everything
            (0..n).map(|i| {
                let mut v = zero_elem(&a.field, n);
                v[i] = one.clone();
                v
            }).collect()
        } else {
            kernel(&cond_rows, n, &zero, &one)
        };
        let mut span = Span::new(n);
        for v in basis {
            span.insert(v);
        }
        let _ = rows;
        if span.rank() == prev.rank() && !spans.is_empty() {
            break;
        }
        let full = span.rank() == n;
        spans.push(span.clone());
        prev = span;
        if full {
            break;
        }
    }
    let chain: Vec<Vec<Elem>> = spans.iter().map(|s| s.rows().to_vec()).collect();
    let mut properties = Vec::new();
    // (a) d(A_i) in A_{i-1}
    let mut ok_a = true;
    for (i, s) in spans.iter().enumerate() {
        for v in s.rows() {
            for d in &ders {
                let mut img = mat_apply(d, v);
                if i == 0 {
                    if img.iter().any(|x| !x.is_zero()) {
                        ok_a = false;
                    }
                } else {
                    spans[i - 1].reduce(&mut img);
                    if img.iter().any(|x| !x.is_zero()) {
                        ok_a = false;
                    }
                }
            }
        }
    }
    properties.push(("derivations lower the filtration".to_string(), ok_a));
    // (b) group invariance
    let mut ok_b = true;
    for s in &spans {
        for v in s.rows() {
            for g in &a.group_ops {
                if !s.contains(&mat_apply(&g.matrix, v)) {
                    ok_b = false;
                }
            }
        }
    }
    properties.push(("filtration is group-invariant".to_string(), ok_b));
    // (c) A_i A_j in A_{i+j}
    let mut ok_c = true;
    for i in 0..spans.len() {
        for j in 0..spans.len() {
            let target = if i + j < spans.len() {
                &spans[i + j]
            } else {
                spans.last().unwrap()
            };
            if i + j >= spans.len() && target.rank() < n {
                // beyond the chain top everything must already be A
                ok_c = ok_c && target.rank() == n;
                continue;
            }
            for x in spans[i].rows() {
                for y in spans[j].rows() {
                    if !target.contains(&a.mul(x, y)) {
                        ok_c = false;
                    }
                }
            }
        }
    }
    properties.push(("filtration is multiplicative".to_string(), ok_c));
    // (d) exhaustion at the declared nilpotence degree
    let declared: Option<u32> = a.derivations.iter().filter_map(|d| d.nilpotence).max();
    let ok_d = match declared {
        None => spans.last().map_or(false, |s| s.rank() == n),
        Some(k) => {
            let idx = (k as usize).min(spans.len().saturating_sub(1));
            spans[idx].rank() == n
        }
    };
    properties.push(("filtration exhausts the algebra".to_string(), ok_d));
    // (e) strict drop: { a in A_i : d(a) in A_{i-2} } = A_{i-1}
    let mut ok_e = true;
    for i in 1..spans.len() {
        // conditions: a in A_i and residual_{A_{i-2}}(d a) = 0
        let lower = if i >= 2 { Some(&spans[i - 2]) } else { None };
        // parametrize a in A_i by coefficients over its basis
        let basis = spans[i].rows();
        let m = basis.len();
        let mut rows: Vec<Vec<FieldElem>> = Vec::new();
        for d in &ders {
            for r in 0..n {
                let mut row = Vec::with_capacity(m);
                for b in basis {
                    let mut img = mat_apply(d, b);
                    if let Some(low) = lower {
                        low.reduce(&mut img);
                    }
                    row.push(img[r].clone());
                }
                rows.push(row);
            }
        }
        let zero = FieldElem::zero(&a.field);
        let one = FieldElem::one(&a.field);
        let ker = kernel(&rows, m, &zero, &one);
        // the kernel must be exactly A_{i-1} expressed in this basis
        let mut ker_span: Span<FieldElem> = Span::new(n);
        for coeffs in &ker {
            let mut v = zero_elem(&a.field, n);
            for (c, b) in coeffs.iter().zip(basis) {
                if c.is_zero() {
                    continue;
                }
                for r in 0..n {
                    let t = c.mul(&b[r]);
                    v[r] = v[r].add(&t);
                }
            }
            ker_span.insert(v);
        }
        if ker_span.rank() != spans[i - 1].rank() {
            ok_e = false;
        } else {
            for v in spans[i - 1].rows() {
                if !ker_span.contains(v) {
                    ok_e = false;
                }
            }
        }
    }
    properties.push(("strict drop from each layer".to_string(), ok_e));
    // (f) when simple from the right, A_0 has no invariant ideals under the
    // restricted operator set
    let parent = is_simple_from_right(a);
    if parent.simple && !spans.is_empty() {
        let ok_f = a0_has_no_invariant_ideals(a, &spans[0], &mut violations);
        properties.push((
            "degree-zero part has no invariant ideals".to_string(),
            ok_f,
        ));
    }
    FiltrationReport {
        chain,
        properties,
        violations,
    }
}

/// Builds the degree-zero subalgebra in its own coordinates and runs the
/// Burnside closure with right multiplications and restricted group
/// operators.
fn a0_has_no_invariant_ideals(
    a: &EquivariantAlgebra,
    a0: &Span<FieldElem>,
    violations: &mut Vec<Violation>,
) -> bool {
    let rows = a0.rows();
    let m = rows.len();
    if m == 0 {
        return false;
    }
    // coordinates of a vector of the parent algebra inside A_0
    let coords = |v: &Elem| -> Option<Vec<FieldElem>> {
        if !a0.contains(v) {
            return None;
        }
        // rows are fully reduced with unit pivots
        let pivots: Vec<usize> = rows
            .iter()
            .map(|r| r.iter().position(|x| !x.is_zero()).unwrap())
            .collect();
        Some(pivots.iter().map(|&p| v[p].clone()).collect())
    };
    let mut structure = vec![vec![zero_elem(&a.field, m); m]; m];
    for i in 0..m {
        for j in 0..m {
            let prod = a.mul(&rows[i], &rows[j]);
            match coords(&prod) {
                Some(c) => structure[i][j] = c,
                None => {
                    violations.push(Violation {
                        code: "a0_not_closed".into(),
                        message: "degree-zero part is not multiplicatively closed".into(),
                        witness: vec![i, j],
                    });
                    return false;
                }
            }
        }
    }
    let unit_coords = match coords(&a.unit) {
        Some(c) => c,
        None => {
            violations.push(Violation {
                code: "a0_missing_unit".into(),
                message: "unit does not lie in the degree-zero part".into(),
                witness: vec![],
            });
            return false;
        }
    };
    let mut group_ops = Vec::new();
    for g in &a.group_ops {
        let mut mat = vec![zero_elem(&a.field, m); m];
        let mut ok = true;
        for j in 0..m {
            let img = mat_apply(&g.matrix, &rows[j]);
            match coords(&img) {
                Some(c) => {
                    for r in 0..m {
                        mat[r][j] = c[r].clone();
                    }
                }
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            group_ops.push(GroupOperator {
                name: format!("{}|A0", g.name),
                matrix: mat,
                order: g.order,
            });
        }
    }
    let sub = EquivariantAlgebra {
        field: a.field.clone(),
        dim: m,
        basis_names: (0..m).map(|i| format!("a0_{i}")).collect(),
        unit: unit_coords,
        structure,
        group_ops,
        derivations: vec![],
        parity: None,
    };
    is_simple_from_right(&sub).simple
}

// ---------------------------------------------------------------------------
// Presentations: power rules plus two-term exchange rules
// ---------------------------------------------------------------------------

/// A generator with g^power = power_value * 1.
#[derive(Debug, Clone)]
pub struct GenSpec {
    pub name: String,
    pub power: u32,
    pub power_value: FieldElem,
}

/// Normal-ordering rule g_left g_right = swap * g_right g_left
/// + unit_term * 1, required for every pair left > right.
#[derive(Debug, Clone)]
pub struct Exchange {
    pub left: usize,
    pub right: usize,
    pub swap: FieldElem,
    pub unit_term: FieldElem,
}

#[derive(Debug, Clone)]
pub struct Presentation {
    pub field: Arc<ExactField>,
    pub generators: Vec<GenSpec>,
    pub exchanges: Vec<Exchange>,
    pub dimension_bound: usize,
}

type Mono = Vec<u32>;
type LinComb = BTreeMap<Mono, FieldElem>;

impl Presentation {
    fn exchange(&self, left: usize, right: usize) -> Option<&Exchange> {
        self.exchanges
            .iter()
            .find(|e| e.left == left && e.right == right)
    }

    /// Normalizes a word of generator indices into canonical monomials.
    fn normalize(&self, word: &[usize], scalar: &FieldElem, out: &mut LinComb) {
        if scalar.is_zero() {
            return;
        }
        // find the first adjacent inversion
        for t in 0..word.len().saturating_sub(1) {
            if word[t] > word[t + 1] {
                let ex = self
                    .exchange(word[t], word[t + 1])
                    .expect("exchange rules cover every ordered pair");
                let mut swapped = word.to_vec();
                swapped.swap(t, t + 1);
                self.normalize(&swapped, &scalar.mul(&ex.swap), out);
                if !ex.unit_term.is_zero() {
                    let mut shorter = word.to_vec();
                    shorter.drain(t..t + 2);
                    self.normalize(&shorter, &scalar.mul(&ex.unit_term), out);
                }
                return;
            }
        }
        // sorted: fold into exponents and apply power rules
        let mut exp = vec![0u32; self.generators.len()];
        for &g in word {
            exp[g] += 1;
        }
        let mut coeff = scalar.clone();
        loop {
            let mut reduced = false;
            for (g, spec) in self.generators.iter().enumerate() {
                if exp[g] >= spec.power {
                    exp[g] -= spec.power;
                    coeff = coeff.mul(&spec.power_value);
                    reduced = true;
                }
            }
            if !reduced {
                break;
            }
            if coeff.is_zero() {
                return;
            }
        }
        let key = exp.clone();
        let entry = out
            .entry(exp)
            .or_insert_with(|| FieldElem::zero(&self.field));
        *entry = entry.add(&coeff);
        if entry.is_zero() {
            out.remove(&key);
        }
    }

    fn mono_word(&self, mono: &Mono) -> Vec<usize> {
        let mut w = Vec::new();
        for (g, &e) in mono.iter().enumerate() {
            for _ in 0..e {
                w.push(g);
            }
        }
        w
    }

    fn mono_mul(&self, a: &Mono, b: &Mono) -> LinComb {
        let mut word = self.mono_word(a);
        word.extend(self.mono_word(b));
        let mut out = LinComb::new();
        self.normalize(&word, &FieldElem::one(&self.field), &mut out);
        out
    }

    /// All canonical monomials, mixed-radix order.
    fn basis(&self) -> Vec<Mono> {
        let mut out = vec![vec![]];
        for spec in &self.generators {
            let mut next = Vec::new();
            for m in &out {
                for e in 0..spec.power {
                    let mut m2 = m.clone();
                    m2.push(e);
                    next.push(m2);
                }
            }
            out = next;
        }
        out
    }

    fn mono_name(&self, mono: &Mono) -> String {
        let mut parts = Vec::new();
        for (g, &e) in mono.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(self.generators[g].name.clone()),
                _ => parts.push(format!("{}^{}", self.generators[g].name, e)),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

/// Spanning closure of a presentation into an explicit structure-constant
/// algebra; relations are validated post hoc, so an inconsistent
/// presentation is rejected rather than silently collapsed.
pub fn build_from_presentation(
    pres: &Presentation,
) -> Result<EquivariantAlgebra, SimpleCheckError> {
    for l in 0..pres.generators.len() {
        for r in 0..l {
            if pres.exchange(l, r).is_none() {
                return Err(SimpleCheckError::BadInput(format!(
                    "missing exchange rule for generators {l} over {r}"
                )));
            }
        }
    }
    let basis = pres.basis();
    let dim = basis.len();
    if dim > pres.dimension_bound {
        return Err(SimpleCheckError::DimensionOverflow {
            required: dim,
            bound: pres.dimension_bound,
        });
    }
    let index: BTreeMap<Mono, usize> = basis
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, m)| (m, i))
        .collect();
    let field = &pres.field;
    let mut structure = vec![vec![zero_elem(field, dim); dim]; dim];
    for (i, a) in basis.iter().enumerate() {
        for (j, b) in basis.iter().enumerate() {
            for (mono, c) in pres.mono_mul(a, b) {
                let k = *index
                    .get(&mono)
                    .ok_or_else(|| SimpleCheckError::InconsistentRelations(
                        "normalization left the canonical basis".into(),
                    ))?;
                structure[i][j][k] = c;
            }
        }
    }
    let mut unit = zero_elem(field, dim);
    unit[*index.get(&vec![0; pres.generators.len()]).unwrap()] = FieldElem::one(field);
    let algebra = EquivariantAlgebra {
        field: field.clone(),
        dim,
        basis_names: basis.iter().map(|m| pres.mono_name(m)).collect(),
        unit,
        structure,
        group_ops: vec![],
        derivations: vec![],
        parity: None,
    };
    let violations = algebra.validate();
    if !violations.is_empty() {
        return Err(SimpleCheckError::InconsistentRelations(format!(
            "{} ({} more)",
            violations[0].message,
            violations.len() - 1
        )));
    }
    Ok(algebra)
}

/// Diagonal automorphism from per-generator scalars.
pub fn diagonal_automorphism(
    pres: &Presentation,
    name: &str,
    scalars: &[FieldElem],
    order: u32,
) -> GroupOperator {
    let basis = pres.basis();
    let field = &pres.field;
    let dim = basis.len();
    let mut matrix = vec![zero_elem(field, dim); dim];
    for (j, mono) in basis.iter().enumerate() {
        let mut s = FieldElem::one(field);
        for (g, &e) in mono.iter().enumerate() {
            s = s.mul(&scalars[g].pow(e));
        }
        matrix[j][j] = s;
    }
    GroupOperator {
        name: name.to_string(),
        matrix,
        order,
    }
}

/// Skew derivation from generator constants: d(g_i) = c_i * 1, extended by
/// d(x_1...x_m) = sum_t twist(x_1...x_{t-1}) c_{x_t} x_1...x_{t-1} x_{t+1}
/// ... x_m. Removing one letter from a sorted word keeps it canonical.
pub fn derivation_from_constants(
    pres: &Presentation,
    name: &str,
    constants: &[FieldElem],
    twist_scalars: &[FieldElem],
    twist_index: usize,
    nilpotence: Option<u32>,
    zeta_commutation: Option<(usize, FieldElem)>,
    anticommute_group: Option<usize>,
) -> DerivationOperator {
    let basis = pres.basis();
    let field = &pres.field;
    let dim = basis.len();
    let index: BTreeMap<Mono, usize> = basis
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, m)| (m, i))
        .collect();
    let mut matrix = vec![zero_elem(field, dim); dim];
    for (j, mono) in basis.iter().enumerate() {
        let word = pres.mono_word(mono);
        let mut prefix_twist = FieldElem::one(field);
        for (t, &g) in word.iter().enumerate() {
            if !constants[g].is_zero() {
                let mut rest = word.clone();
                rest.remove(t);
                let mut target = vec![0u32; pres.generators.len()];
                for &x in &rest {
                    target[x] += 1;
                }
                let k = index[&target];
                let contrib = prefix_twist.mul(&constants[g]);
                matrix[k][j] = matrix[k][j].add(&contrib);
            }
            prefix_twist = prefix_twist.mul(&twist_scalars[g]);
        }
    }
    DerivationOperator {
        name: name.to_string(),
        matrix,
        twist: twist_index,
        nilpotence,
        zeta_commutation,
        anticommute_group,
    }
}

// ---------------------------------------------------------------------------
// Table groups and cocycles
// ---------------------------------------------------------------------------

/// A finite group as an explicit multiplication table.
#[derive(Debug, Clone)]
pub struct Group {
    pub labels: Vec<String>,
    pub mul: Vec<Vec<usize>>,
    pub inv: Vec<usize>,
}

impl Group {
    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn identity(&self) -> usize {
        // element with g*x = x for all x
        (0..self.order())
            .find(|&e| (0..self.order()).all(|x| self.mul[e][x] == x))
            .expect("a group table has an identity")
    }

    pub fn element_order(&self, g: usize) -> u32 {
        let e = self.identity();
        let mut acc = g;
        let mut k = 1;
        while acc != e {
            acc = self.mul[acc][g];
            k += 1;
        }
        k
    }

    pub fn abelian(factors: &[u64]) -> Group {
        let elements = crate::ring::enumerate_abelian(factors);
        let n = elements.len();
        let find = |e: &Vec<u64>| elements.iter().position(|x| x == e).unwrap();
        let mut mul = vec![vec![0usize; n]; n];
        let mut inv = vec![0usize; n];
        for (i, a) in elements.iter().enumerate() {
            let neg: Vec<u64> = a
                .iter()
                .zip(factors)
                .map(|(&x, &m)| (m - x % m) % m)
                .collect();
            inv[i] = find(&neg);
            for (j, b) in elements.iter().enumerate() {
                let sum: Vec<u64> = a
                    .iter()
                    .zip(b)
                    .zip(factors)
                    .map(|((&x, &y), &m)| (x + y) % m)
                    .collect();
                mul[i][j] = find(&sum);
            }
        }
        Group {
            labels: elements
                .iter()
                .map(|e| {
                    e.iter()
                        .map(|x| x.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                })
                .collect(),
            mul,
            inv,
        }
    }

    pub fn s3() -> Group {
        // permutations of {0,1,2} in one-line notation
        let perms: Vec<[usize; 3]> = vec![
            [0, 1, 2],
            [1, 2, 0],
            [2, 0, 1],
            [1, 0, 2],
            [0, 2, 1],
            [2, 1, 0],
        ];
        let n = perms.len();
        let compose = |a: &[usize; 3], b: &[usize; 3]| -> [usize; 3] {
            [a[b[0]], a[b[1]], a[b[2]]]
        };
        let find = |p: &[usize; 3]| perms.iter().position(|x| x == p).unwrap();
        let mut mul = vec![vec![0usize; n]; n];
        let mut inv = vec![0usize; n];
        for (i, a) in perms.iter().enumerate() {
            let mut ainv = [0usize; 3];
            for t in 0..3 {
                ainv[a[t]] = t;
            }
            inv[i] = find(&ainv);
            for (j, b) in perms.iter().enumerate() {
                mul[i][j] = find(&compose(a, b));
            }
        }
        Group {
            labels: perms.iter().map(|p| format!("{}{}{}", p[0], p[1], p[2])).collect(),
            mul,
            inv,
        }
    }

    /// Closure of a generating set; sorted element list.
    pub fn subgroup(&self, gens: &[usize]) -> Vec<usize> {
        let mut set = vec![false; self.order()];
        set[self.identity()] = true;
        loop {
            let mut grew = false;
            for x in 0..self.order() {
                if !set[x] {
                    continue;
                }
                for &g in gens {
                    if !set[self.mul[x][g]] {
                        set[self.mul[x][g]] = true;
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }
        (0..self.order()).filter(|&x| set[x]).collect()
    }

    pub fn is_subgroup(&self, elems: &[usize]) -> bool {
        let e = self.identity();
        elems.contains(&e)
            && elems
                .iter()
                .all(|&a| elems.iter().all(|&b| elems.contains(&self.mul[a][b])))
            && elems.iter().all(|&a| elems.contains(&self.inv[a]))
    }
}

/// A normalized 2-cocycle table on a subgroup, indexed by positions in the
/// subgroup's element list.
pub type CocycleTable = Vec<Vec<FieldElem>>;

pub fn validate_cocycle(
    group: &Group,
    elems: &[usize],
    psi: &CocycleTable,
) -> Result<(), SimpleCheckError> {
    let m = elems.len();
    if psi.len() != m || psi.iter().any(|r| r.len() != m) {
        return Err(SimpleCheckError::CocycleInvalid("table shape".into()));
    }
    let pos = |x: usize| elems.iter().position(|&e| e == x).unwrap();
    let e = group.identity();
    let ei = pos(e);
    for a in 0..m {
        if !psi[ei][a].is_one() || !psi[a][ei].is_one() {
            return Err(SimpleCheckError::CocycleInvalid(
                "table is not normalized".into(),
            ));
        }
        if psi.iter().any(|r| r.iter().any(|x| x.is_zero())) {
            return Err(SimpleCheckError::CocycleInvalid("zero entry".into()));
        }
    }
    for a in 0..m {
        for b in 0..m {
            for c in 0..m {
                let ab = pos(group.mul[elems[a]][elems[b]]);
                let bc = pos(group.mul[elems[b]][elems[c]]);
                let lhs = psi[a][b].mul(&psi[ab][c]);
                let rhs = psi[b][c].mul(&psi[a][bc]);
                if lhs != rhs {
                    return Err(SimpleCheckError::CocycleInvalid(format!(
                        "cocycle identity fails at ({a}, {b}, {c})"
                    )));
                }
            }
        }
    }
    Ok(())
}

/// The standard nontrivial 2-cocycle on the Klein four group (in the
/// element order of `Group::abelian(&[2, 2])`): psi((a1,a2),(b1,b2)) =
/// (-1)^(a2 b1).
pub fn klein_nontrivial_cocycle(field: &Arc<ExactField>) -> CocycleTable {
    let elements = crate::ring::enumerate_abelian(&[2, 2]);
    let one = FieldElem::one(field);
    let neg = FieldElem::from_integer(field, -1);
    elements
        .iter()
        .map(|a| {
            elements
                .iter()
                .map(|b| if (a[1] * b[0]) % 2 == 1 { neg.clone() } else { one.clone() })
                .collect()
        })
        .collect()
}

/// Pauli-type projective representation of the Klein four group for the
/// nontrivial cocycle: V(a1, a2) = X^a1 Z^a2.
pub fn klein_projective_rep(field: &Arc<ExactField>) -> Vec<Matrix> {
    let o = FieldElem::one(field);
    let z = FieldElem::zero(field);
    let n = FieldElem::from_integer(field, -1);
    let id = vec![vec![o.clone(), z.clone()], vec![z.clone(), o.clone()]];
    let x = vec![vec![z.clone(), o.clone()], vec![o.clone(), z.clone()]];
    let zz = vec![vec![o.clone(), z.clone()], vec![z.clone(), n.clone()]];
    let xz = vec![vec![z.clone(), n], vec![o, z]];
    // element order of enumerate_abelian(&[2,2]): (0,0), (0,1), (1,0), (1,1)
    vec![id, zz, x, xz]
}

// ---------------------------------------------------------------------------
// Builders
// ---------------------------------------------------------------------------

/// k[G/H] with the translation G-action, or Ind_H^G(End V) for a supplied
/// psi-projective simple V given by explicit matrices over the field (one
/// per subgroup element, in subgroup order).
pub fn build_group_quotient(
    field: &Arc<ExactField>,
    group: &Group,
    subgroup: &[usize],
    psi: Option<&CocycleTable>,
    v: Option<&[Matrix]>,
) -> Result<EquivariantAlgebra, SimpleCheckError> {
    if !group.is_subgroup(subgroup) {
        return Err(SimpleCheckError::NotASubgroup);
    }
    if let Some(psi) = psi {
        validate_cocycle(group, subgroup, psi)?;
    }
    // left cosets gH with minimal representatives
    let mut coset_of = vec![usize::MAX; group.order()];
    let mut reps = Vec::new();
    for g in 0..group.order() {
        if coset_of[g] != usize::MAX {
            continue;
        }
        let t = reps.len();
        for &h in subgroup {
            coset_of[group.mul[g][h]] = t;
        }
        reps.push(g);
    }
    let vd = v.map_or(1, |mats| mats[0].len());
    if let (Some(psi), Some(mats)) = (psi, v) {
        // check psi-projectivity: V(a) V(b) = psi(a, b) V(ab)
        let pos = |x: usize| subgroup.iter().position(|&e| e == x).unwrap();
        for (ai, &a) in subgroup.iter().enumerate() {
            for (bi, &b) in subgroup.iter().enumerate() {
                let lhs = mat_mul(&mats[ai], &mats[bi]);
                let mut rhs = mats[pos(group.mul[a][b])].clone();
                for row in rhs.iter_mut() {
                    for e in row.iter_mut() {
                        *e = e.mul(&psi[ai][bi]);
                    }
                }
                if !mat_eq(&lhs, &rhs) {
                    return Err(SimpleCheckError::CocycleInvalid(
                        "V is not psi-projective".into(),
                    ));
                }
            }
        }
    }
    let t_count = reps.len();
    let dim = t_count * vd * vd;
    let idx = |t: usize, p: usize, q: usize| (t * vd + p) * vd + q;
    let mut structure = vec![vec![zero_elem(field, dim); dim]; dim];
    for t in 0..t_count {
        for p in 0..vd {
            for q in 0..vd {
                for r in 0..vd {
                    for s in 0..vd {
                        if q == r {
                            structure[idx(t, p, q)][idx(t, r, s)][idx(t, p, s)] =
                                FieldElem::one(field);
                        }
                    }
                }
            }
        }
    }
    let mut unit = zero_elem(field, dim);
    for t in 0..t_count {
        for p in 0..vd {
            unit[idx(t, p, p)] = FieldElem::one(field);
        }
    }
    // group action by left translation, twisted by V-conjugation through
    // the H-component of the translation
    let mut group_ops = Vec::new();
    let e = group.identity();
    for g in 0..group.order() {
        if g == e {
            continue;
        }
        let mut matrix = vec![zero_elem(field, dim); dim];
        for (t, &rt) in reps.iter().enumerate() {
            let gt = coset_of[group.mul[g][rt]];
            // h = r_gt^{-1} g r_t in H
            let h = group.mul[group.inv[reps[gt]]][group.mul[g][rt]];
            debug_assert!(subgroup.contains(&h));
            let (vh, vh_inv);
            if let Some(mats) = v {
                let pos = subgroup.iter().position(|&x| x == h).unwrap();
                vh = mats[pos].clone();
                vh_inv = mat_inverse(&vh).expect("projective representation is invertible");
            } else {
                vh = mat_identity(field, vd);
                vh_inv = mat_identity(field, vd);
            }
            // E_pq -> V(h) E_pq V(h)^{-1}
            for p in 0..vd {
                for q in 0..vd {
                    for a in 0..vd {
                        for b in 0..vd {
                            let c = vh[a][p].mul(&vh_inv[q][b]);
                            if !c.is_zero() {
                                matrix[idx(gt, a, b)][idx(t, p, q)] =
                                    matrix[idx(gt, a, b)][idx(t, p, q)].add(&c);
                            }
                        }
                    }
                }
            }
        }
        group_ops.push(GroupOperator {
            name: format!("g[{}]", group.labels[g]),
            matrix,
            order: group.element_order(g),
        });
    }
    Ok(EquivariantAlgebra {
        field: field.clone(),
        dim,
        basis_names: (0..t_count)
            .flat_map(|t| {
                (0..vd).flat_map(move |p| (0..vd).map(move |q| format!("e[{t};{p}{q}]")))
            })
            .collect(),
        unit,
        structure,
        group_ops,
        derivations: vec![],
        parity: None,
    })
}

/// The smash product of a twisted abelian group algebra with a Clifford
/// algebra: generators u_1..u_r (group) and y_1..y_d (Clifford) with
/// y_b y_a = -y_a y_b + 2 B_ab, u y = (diagonal action) y u, parity grading
/// on the y part, conjugation H-action, and odd derivations for a basis of
/// the ambient space acting through Y by twisted commutators.
pub struct CliffordSmashParams<'a> {
    pub field: &'a Arc<ExactField>,
    pub h_factors: &'a [u64],
    /// `action[g][i]`: scalar of the g-th group generator on y_i (diagonal).
    pub action: Vec<Vec<FieldElem>>,
    pub y_dim: usize,
    pub b: Vec<Vec<FieldElem>>,
    pub psi: Option<CocycleTable>,
    pub w_dim: usize,
    pub dimension_bound: usize,
}

pub fn build_clifford_smash(
    params: &CliffordSmashParams,
) -> Result<EquivariantAlgebra, SimpleCheckError> {
    let field = params.field;
    if field.characteristic() == 2 {
        return Err(SimpleCheckError::CharacteristicTwo);
    }
    let d = params.y_dim;
    if params.b.len() != d || params.b.iter().any(|r| r.len() != d) {
        return Err(SimpleCheckError::BadInput("B has the wrong shape".into()));
    }
    for i in 0..d {
        for j in 0..d {
            if params.b[i][j] != params.b[j][i] {
                return Err(SimpleCheckError::AsymmetricForm);
            }
        }
    }
    if params.w_dim < d {
        return Err(SimpleCheckError::BadInput(
            "ambient dimension below the Y dimension".into(),
        ));
    }
    let group = Group::abelian(params.h_factors);
    let r = params.h_factors.len();
    if params.action.len() != r || params.action.iter().any(|a| a.len() != d) {
        return Err(SimpleCheckError::BadInput(
            "need one diagonal action vector per group generator".into(),
        ));
    }
    // generator action must preserve B: B(g y_i, g y_j) = s_i s_j B_ij = B_ij
    for g in 0..r {
        for i in 0..d {
            for j in 0..d {
                let scaled = params.action[g][i]
                    .mul(&params.action[g][j])
                    .mul(&params.b[i][j]);
                if scaled != params.b[i][j] {
                    return Err(SimpleCheckError::BadInput(
                        "group action does not preserve the form".into(),
                    ));
                }
            }
        }
    }
    let psi = match &params.psi {
        Some(t) => {
            let all: Vec<usize> = (0..group.order()).collect();
            validate_cocycle(&group, &all, t)?;
            t.clone()
        }
        None => vec![vec![FieldElem::one(field); group.order()]; group.order()],
    };
    // presentation: u_1..u_r then y_1..y_d
    let elements = crate::ring::enumerate_abelian(params.h_factors);
    let elem_pos = |e: &Vec<u64>| elements.iter().position(|x| x == e).unwrap();
    let gen_elem = |g: usize| -> usize {
        let mut e = vec![0u64; r];
        e[g] = 1;
        elem_pos(&e)
    };
    let mut gens = Vec::new();
    for g in 0..r {
        // u_g^{n_g} = prod_t psi(g^t, g)
        let n_g = params.h_factors[g] as u32;
        let mut val = FieldElem::one(field);
        let ge = gen_elem(g);
        let mut acc = group.identity();
        for _ in 1..n_g {
            acc = group.mul[acc][ge];
            val = val.mul(&psi[acc][ge]);
        }
        // the loop above multiplies psi(g^t, g) for t = 1..n-1
        gens.push(GenSpec {
            name: format!("u{}", g + 1),
            power: n_g,
            power_value: val,
        });
    }
    for i in 0..d {
        gens.push(GenSpec {
            name: format!("y{}", i + 1),
            power: 2,
            power_value: params.b[i][i].clone(),
        });
    }
    let mut exchanges = Vec::new();
    // group-group: u_b u_a = (psi(gb, ga)/psi(ga, gb)) u_a u_b
    for b in 0..r {
        for a in 0..b {
            let gb = gen_elem(b);
            let ga = gen_elem(a);
            let swap = psi[gb][ga].mul(&psi[ga][gb].inv());
            exchanges.push(Exchange {
                left: b,
                right: a,
                swap,
                unit_term: FieldElem::zero(field),
            });
        }
    }
    // y over u: y_i u_g = s^{-1} u_g y_i for s the action scalar
    for i in 0..d {
        for g in 0..r {
            exchanges.push(Exchange {
                left: r + i,
                right: g,
                swap: params.action[g][i].inv(),
                unit_term: FieldElem::zero(field),
            });
        }
    }
    // y-y: y_j y_i = -y_i y_j + 2 B_ij
    let two = FieldElem::from_integer(field, 2);
    for j in 0..d {
        for i in 0..j {
            exchanges.push(Exchange {
                left: r + j,
                right: r + i,
                swap: FieldElem::from_integer(field, -1),
                unit_term: two.mul(&params.b[i][j]),
            });
        }
    }
    let pres = Presentation {
        field: field.clone(),
        generators: gens,
        exchanges,
        dimension_bound: params.dimension_bound,
    };
    let mut algebra = build_from_presentation(&pres)?;
    // parity: +1 on group part, -1 per Clifford generator
    let mut parity_scalars = vec![FieldElem::one(field); r];
    parity_scalars.extend(vec![FieldElem::from_integer(field, -1); d]);
    let parity_op = diagonal_automorphism(&pres, "parity", &parity_scalars, 2);
    algebra.group_ops.push(parity_op);
    let parity_idx = algebra.group_ops.len() - 1;
    algebra.parity = Some(parity_idx);
    // H-action: conjugation by the invertible basis monomial u_g
    let basis = pres.basis();
    for g in 0..r {
        let mut mono = vec![0u32; pres.generators.len()];
        mono[g] = 1;
        let pos = basis.iter().position(|m| *m == mono).unwrap();
        let u = algebra.basis_elem(pos);
        let left = algebra.left_mult(&u);
        let right_inv = {
            let lu = algebra.right_mult(&u);
            mat_inverse(&lu).expect("twisted group generators are invertible")
        };
        let matrix = mat_mul(&left, &right_inv);
        algebra.group_ops.push(GroupOperator {
            name: format!("h{}", g + 1),
            matrix,
            order: params.h_factors[g] as u32,
        });
    }
    // derivations: ad_v(a) = y_v a - parity(a) y_v for v in Y, zero beyond
    let parity_matrix = algebra.group_ops[parity_idx].matrix.clone();
    for vcoord in 0..params.w_dim {
        let matrix = if vcoord < d {
            let mut mono = vec![0u32; pres.generators.len()];
            mono[r + vcoord] = 1;
            let pos = basis.iter().position(|m| *m == mono).unwrap();
            let yv = algebra.basis_elem(pos);
            let left = algebra.left_mult(&yv);
            let right = algebra.right_mult(&yv);
            mat_add(&left, &mat_neg(&mat_mul(&right, &parity_matrix)))
        } else {
            vec![zero_elem(field, algebra.dim); algebra.dim]
        };
        algebra.derivations.push(DerivationOperator {
            name: format!("d{}", vcoord + 1),
            matrix,
            twist: parity_idx,
            nilpotence: Some(2),
            zeta_commutation: None,
            anticommute_group: Some(0),
        });
    }
    Ok(algebra)
}

/// The cyclic-quotient algebra A(d, lambda): generated by the coset algebra
/// of the index-d subgroup (as a cyclic group algebra via characters) and
/// an element y with y c = zeta^{-d}... the normal form c^a y^m, subject to
/// y^l = lambda, g(c) = omega^{-1} c, g(y) = zeta^{-1} y, d(c) = 0,
/// d(y) = 1 with the skew-Leibniz twist g.
pub fn build_taft_a(
    field: &Arc<ExactField>,
    l: u64,
    d: u64,
    lambda: FieldElem,
) -> Result<EquivariantAlgebra, SimpleCheckError> {
    if d == 0 || l % d != 0 {
        return Err(SimpleCheckError::BadDivisor { d, l });
    }
    let zeta = FieldElem::root_of_unity(field, l as u32).ok_or_else(|| {
        SimpleCheckError::BadInput(format!("field has no primitive {l}-th root of unity"))
    })?;
    let n0 = (l / d) as u32;
    let omega = zeta.pow(d as u32);
    let mut gens = Vec::new();
    let mut has_c = false;
    if n0 > 1 {
        has_c = true;
        gens.push(GenSpec {
            name: "c".into(),
            power: n0,
            power_value: FieldElem::one(field),
        });
    }
    gens.push(GenSpec {
        name: "y".into(),
        power: l as u32,
        power_value: lambda,
    });
    let mut exchanges = Vec::new();
    if has_c {
        exchanges.push(Exchange {
            left: 1,
            right: 0,
            swap: omega.inv(),
            unit_term: FieldElem::zero(field),
        });
    }
    let pres = Presentation {
        field: field.clone(),
        generators: gens,
        exchanges,
        dimension_bound: (l * (l / d)) as usize,
    };
    let mut algebra = build_from_presentation(&pres)?;
    debug_assert_eq!(algebra.dim as u64, l * (l / d));
    // The group action translates the coset idempotents inversely to the
    // way y shifts them (forced by the skew-Leibniz rule against the
    // relation y e_s = e_{gs} y), so the character combination c picks up
    // omega, not its inverse.
    let scalars: Vec<FieldElem> = if has_c {
        vec![omega.clone(), zeta.inv()]
    } else {
        vec![zeta.inv()]
    };
    let g_op = diagonal_automorphism(&pres, "g", &scalars, l as u32);
    algebra.group_ops.push(g_op);
    let constants: Vec<FieldElem> = if has_c {
        vec![FieldElem::zero(field), FieldElem::one(field)]
    } else {
        vec![FieldElem::one(field)]
    };
    let der = derivation_from_constants(
        &pres,
        "d",
        &constants,
        &scalars,
        0,
        Some(l as u32),
        Some((0, zeta.inv())),
        None,
    );
    algebra.derivations.push(der);
    Ok(algebra)
}

/// Result of the internal-Hom construction: the algebra plus its
/// simplicity certificate (a failed certificate contradicts the
/// classification and is surfaced to the caller as a finding).
#[derive(Debug)]
pub struct InternalHomResult {
    pub algebra: EquivariantAlgebra,
    pub simplicity: SimplicityResult,
}

pub struct SupergroupParams<'a> {
    pub field: &'a Arc<ExactField>,
    /// Abelian ambient group G.
    pub g_factors: &'a [u64],
    /// The central order <= 2 element acting by -1 on W, as a tuple.
    pub u: Vec<u64>,
    /// Generators of the subgroup H, as tuples.
    pub h_gens: Vec<Vec<u64>>,
    /// `action[g][i]`: diagonal scalar of the g-th generator of G on w_i.
    pub w_action: Vec<Vec<FieldElem>>,
    pub w_dim: usize,
    /// Y is spanned by the first y_dim ambient coordinates.
    pub y_dim: usize,
    /// Symmetric form on Y.
    pub b: Vec<Vec<FieldElem>>,
    pub dimension_bound: usize,
}

/// The internal Hom algebra of a simple object of the module category
/// attached to (Y, B, H): Ind over the cosets of the subgroup generated by
/// H and u, of End(V) tensored (in the super sense) with the Clifford
/// algebra of the dual of W modulo the radical of B, carrying the full
/// equivariant structure. V is taken one-dimensional (trivial psi twist);
/// the simple-from-the-right certificate is run before returning.
pub fn supergroup_internal_hom(
    params: &SupergroupParams,
) -> Result<InternalHomResult, SimpleCheckError> {
    let field = params.field;
    if field.characteristic() == 2 {
        return Err(SimpleCheckError::CharacteristicTwo);
    }
    let w = params.w_dim;
    let d = params.y_dim;
    if d > w {
        return Err(SimpleCheckError::BadInput("Y exceeds W".into()));
    }
    if params.b.len() != d || params.b.iter().any(|r| r.len() != d) {
        return Err(SimpleCheckError::BadInput("B has the wrong shape".into()));
    }
    for i in 0..d {
        for j in 0..d {
            if params.b[i][j] != params.b[j][i] {
                return Err(SimpleCheckError::AsymmetricForm);
            }
        }
    }
    let group = Group::abelian(params.g_factors);
    let elements = crate::ring::enumerate_abelian(params.g_factors);
    let elem_pos = |e: &Vec<u64>| -> Result<usize, SimpleCheckError> {
        elements
            .iter()
            .position(|x| x == e)
            .ok_or_else(|| SimpleCheckError::BadInput("element outside the group".into()))
    };
    let u_idx = elem_pos(&params.u)?;
    if group.mul[u_idx][u_idx] != group.identity() {
        return Err(SimpleCheckError::BadInput("u must have order <= 2".into()));
    }
    let r = params.g_factors.len();
    if params.w_action.len() != r || params.w_action.iter().any(|a| a.len() != w) {
        return Err(SimpleCheckError::BadInput(
            "need one diagonal action vector per group generator".into(),
        ));
    }
    // per-element diagonal action on W
    let action_of = |elem: &[u64]| -> Vec<FieldElem> {
        let mut s = vec![FieldElem::one(field); w];
        for (g, &e) in elem.iter().enumerate() {
            for (i, sc) in s.iter_mut().enumerate() {
                *sc = sc.mul(&params.w_action[g][i].pow(e as u32));
            }
        }
        s
    };
    let minus_one = FieldElem::from_integer(field, -1);
    let u_action = action_of(&params.u);
    if u_action.iter().any(|s| *s != minus_one) {
        return Err(SimpleCheckError::BadInput("u must act by -1 on W".into()));
    }
    let h_gen_idx: Vec<usize> = params
        .h_gens
        .iter()
        .map(|e| elem_pos(e))
        .collect::<Result<_, _>>()?;
    let h_elems = group.subgroup(&h_gen_idx);
    let mut hhat_gens = h_gen_idx.clone();
    hhat_gens.push(u_idx);
    let hhat = group.subgroup(&hhat_gens);
    let sigma_present = !h_elems.contains(&u_idx);
    // radical of B on Y
    let rad = {
        let zero = FieldElem::zero(field);
        let one = FieldElem::one(field);
        kernel(&params.b, d, &zero, &one)
    };
    // complement of the radical inside Y: greedy standard coordinates
    let mut comp: Vec<usize> = Vec::new();
    {
        let mut span: Span<FieldElem> = Span::new(d.max(1));
        for v in &rad {
            span.insert(v.clone());
        }
        for i in 0..d {
            let mut e = vec![FieldElem::zero(field); d.max(1)];
            if d > 0 {
                e[i] = FieldElem::one(field);
            }
            if span.insert(e) {
                comp.push(i);
            }
        }
    }
    // the quotient W/rad: basis = comp (from Y) plus the coordinates above Y
    let q_basis: Vec<usize> = comp.iter().copied().chain(d..w).collect();
    let q = q_basis.len();
    let qy = comp.len();
    // induced form on the Y-part of the dual: inverse of B restricted
    let bbar: Matrix = comp
        .iter()
        .map(|&i| comp.iter().map(|&j| params.b[i][j].clone()).collect())
        .collect();
    let b_dual_y = if qy > 0 {
        mat_inverse(&bbar).ok_or_else(|| {
            SimpleCheckError::BadInput("form is degenerate on its own complement".into())
        })?
    } else {
        Vec::new()
    };
    let mut b_dual = vec![vec![FieldElem::zero(field); q]; q];
    for i in 0..qy {
        for j in 0..qy {
            b_dual[i][j] = b_dual_y[i][j].clone();
        }
    }
    // pairing of ambient vectors with the dual generators: xi_i(w_j-bar):
    // express e_j modulo the radical in the chosen basis
    let pairing = |j: usize| -> Vec<FieldElem> {
        // returns the coefficient of each q-basis vector in e_j mod rad
        let mut coeffs = vec![FieldElem::zero(field); q];
        if j >= d {
            let pos = q_basis.iter().position(|&x| x == j).unwrap();
            coeffs[pos] = FieldElem::one(field);
            return coeffs;
        }
        // solve e_j = sum_i alpha_i u_i + radical
        // stack [u-basis | rad-basis] and solve
        let cols: Vec<Vec<FieldElem>> = comp
            .iter()
            .map(|&i| {
                (0..d)
                    .map(|rr| {
                        if rr == i {
                            FieldElem::one(field)
                        } else {
                            FieldElem::zero(field)
                        }
                    })
                    .collect()
            })
            .chain(rad.iter().cloned())
            .collect();
        // gaussian solve cols * x = e_j
        let mut aug: Vec<Vec<FieldElem>> = (0..d)
            .map(|rr| {
                let mut row: Vec<FieldElem> =
                    cols.iter().map(|c| c[rr].clone()).collect();
                row.push(if rr == j {
                    FieldElem::one(field)
                } else {
                    FieldElem::zero(field)
                });
                row
            })
            .collect();
        let vars = cols.len();
        let mut rank = 0;
        let mut pivots = Vec::new();
        for col in 0..vars {
            let piv = (rank..d).find(|&rr| !aug[rr][col].is_zero());
            let Some(piv) = piv else { continue };
            aug.swap(rank, piv);
            let f = aug[rank][col].inv();
            for x in aug[rank].iter_mut() {
                *x = x.mul(&f);
            }
            for rr in 0..d {
                if rr != rank && !aug[rr][col].is_zero() {
                    let c = aug[rr][col].clone();
                    for x in 0..=vars {
                        let t = c.mul(&aug[rank][x]);
                        aug[rr][x] = aug[rr][x].sub(&t);
                    }
                }
            }
            pivots.push(col);
            rank += 1;
        }
        for (rr, &pc) in pivots.iter().enumerate() {
            if pc < qy {
                coeffs[pc] = aug[rr][vars].clone();
            }
        }
        coeffs
    };
    // odd presentation: sigma (optional) then xi_1..xi_q
    let mut gens = Vec::new();
    let sigma_offset = usize::from(sigma_present);
    if sigma_present {
        gens.push(GenSpec {
            name: "s".into(),
            power: 2,
            power_value: FieldElem::one(field),
        });
    }
    for i in 0..q {
        gens.push(GenSpec {
            name: format!("x{}", i + 1),
            power: 2,
            power_value: b_dual[i][i].clone(),
        });
    }
    let mut exchanges = Vec::new();
    let two = FieldElem::from_integer(field, 2);
    for j in 0..q {
        if sigma_present {
            exchanges.push(Exchange {
                left: sigma_offset + j,
                right: 0,
                swap: FieldElem::from_integer(field, -1),
                unit_term: FieldElem::zero(field),
            });
        }
        for i in 0..j {
            exchanges.push(Exchange {
                left: sigma_offset + j,
                right: sigma_offset + i,
                swap: FieldElem::from_integer(field, -1),
                unit_term: two.mul(&b_dual[i][j]),
            });
        }
    }
    let odd_pres = Presentation {
        field: field.clone(),
        generators: gens,
        exchanges,
        dimension_bound: params.dimension_bound,
    };
    let odd = build_from_presentation(&odd_pres)?;
    // cosets of H-hat in G
    let mut coset_of = vec![usize::MAX; group.order()];
    let mut reps = Vec::new();
    for g in 0..group.order() {
        if coset_of[g] != usize::MAX {
            continue;
        }
        let t = reps.len();
        for &h in &hhat {
            coset_of[group.mul[g][h]] = t;
        }
        reps.push(g);
    }
    let t_count = reps.len();
    let dim = t_count * odd.dim;
    if dim > params.dimension_bound {
        return Err(SimpleCheckError::DimensionOverflow {
            required: dim,
            bound: params.dimension_bound,
        });
    }
    let idx = |t: usize, m: usize| t * odd.dim + m;
    let mut structure = vec![vec![zero_elem(field, dim); dim]; dim];
    for t in 0..t_count {
        for m1 in 0..odd.dim {
            for m2 in 0..odd.dim {
                for (k, c) in odd.structure[m1][m2].iter().enumerate() {
                    if !c.is_zero() {
                        structure[idx(t, m1)][idx(t, m2)][idx(t, k)] = c.clone();
                    }
                }
            }
        }
    }
    let mut unit = zero_elem(field, dim);
    for t in 0..t_count {
        for (k, c) in odd.unit.iter().enumerate() {
            if !c.is_zero() {
                unit[idx(t, k)] = c.clone();
            }
        }
    }
    // parity on the odd part, coset-blockwise
    let odd_basis = odd_pres.basis();
    let parity_of = |mono: &Mono| -> i64 {
        let total: u32 = mono.iter().sum();
        if total % 2 == 0 {
            1
        } else {
            -1
        }
    };
    let mut parity_matrix = vec![zero_elem(field, dim); dim];
    for t in 0..t_count {
        for (m, mono) in odd_basis.iter().enumerate() {
            parity_matrix[idx(t, m)][idx(t, m)] = FieldElem::from_integer(field, parity_of(mono));
        }
    }
    let mut group_ops = vec![GroupOperator {
        name: "parity".into(),
        matrix: parity_matrix,
        order: 2,
    }];
    let parity_idx = 0;
    // G-action: permute cosets; within a block, act on sigma by the
    // u-component sign and on the xi's by the dual diagonal action
    let e = group.identity();
    for g in 0..group.order() {
        if g == e {
            continue;
        }
        let g_elem = &elements[g];
        let mut matrix = vec![zero_elem(field, dim); dim];
        for (t, &rt) in reps.iter().enumerate() {
            let gt = coset_of[group.mul[g][rt]];
            let hh = group.mul[group.inv[reps[gt]]][group.mul[g][rt]];
            // decompose hh = h * u^eps with h in H
            let (hy, eps) = if h_elems.contains(&hh) {
                (hh, 0u32)
            } else {
                (group.mul[hh][u_idx], 1u32)
            };
            debug_assert!(h_elems.contains(&hy));
            let _ = hy;
            let hh_action = action_of(&elements[hh]);
            // dual action on xi_i: inverse scalar of the action on the
            // corresponding quotient basis vector
            let mut gen_scalars = Vec::new();
            if sigma_present {
                gen_scalars.push(if eps == 1 {
                    FieldElem::from_integer(field, -1)
                } else {
                    FieldElem::one(field)
                });
            }
            for &qb in &q_basis {
                gen_scalars.push(hh_action[qb].inv());
            }
            for (m, mono) in odd_basis.iter().enumerate() {
                let mut s = FieldElem::one(field);
                for (gi, &ex) in mono.iter().enumerate() {
                    s = s.mul(&gen_scalars[gi].pow(ex));
                }
                matrix[idx(gt, m)][idx(t, m)] = s;
            }
        }
        group_ops.push(GroupOperator {
            name: format!("g[{}]", group.labels[g]),
            matrix,
            order: group.element_order(g),
        });
        let _ = g_elem;
    }
    // derivations: contraction against the dual generators, extended as an
    // odd twisted derivation, acting blockwise on the odd part
    let mut derivations = Vec::new();
    let odd_index: BTreeMap<Mono, usize> = odd_basis
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, m)| (m, i))
        .collect();
    for vcoord in 0..w {
        let pair = pairing(vcoord);
        // constants on the odd generators: 0 on sigma, xi_i |-> pairing_i
        let mut constants = Vec::new();
        let mut twist_scalars = Vec::new();
        if sigma_present {
            constants.push(FieldElem::zero(field));
            twist_scalars.push(FieldElem::from_integer(field, -1));
        }
        for i in 0..q {
            constants.push(pair[i].clone());
            twist_scalars.push(FieldElem::from_integer(field, -1));
        }
        // build on the odd part
        let mut small = vec![zero_elem(field, odd.dim); odd.dim];
        for (j, mono) in odd_basis.iter().enumerate() {
            let word = odd_pres.mono_word(mono);
            let mut prefix = FieldElem::one(field);
            for (t, &gidx) in word.iter().enumerate() {
                if !constants[gidx].is_zero() {
                    let mut rest = word.clone();
                    rest.remove(t);
                    let mut target = vec![0u32; odd_pres.generators.len()];
                    for &x in &rest {
                        target[x] += 1;
                    }
                    let k = odd_index[&target];
                    let contrib = prefix.mul(&constants[gidx]);
                    small[k][j] = small[k][j].add(&contrib);
                }
                prefix = prefix.mul(&twist_scalars[gidx]);
            }
        }
        let mut matrix = vec![zero_elem(field, dim); dim];
        for t in 0..t_count {
            for m1 in 0..odd.dim {
                for m2 in 0..odd.dim {
                    if !small[m1][m2].is_zero() {
                        matrix[idx(t, m1)][idx(t, m2)] = small[m1][m2].clone();
                    }
                }
            }
        }
        derivations.push(DerivationOperator {
            name: format!("d{}", vcoord + 1),
            matrix,
            twist: parity_idx,
            nilpotence: Some(2),
            zeta_commutation: None,
            anticommute_group: Some(0),
        });
    }
    let algebra = EquivariantAlgebra {
        field: field.clone(),
        dim,
        basis_names: {
            let mut names = Vec::with_capacity(dim);
            for t in 0..t_count {
                for m in &odd_basis {
                    names.push(format!("[{t}]{}", odd_pres.mono_name(m)));
                }
            }
            names
        },
        unit,
        structure,
        group_ops,
        derivations,
        parity: Some(parity_idx),
    };
    let violations = algebra.validate();
    if !violations.is_empty() {
        return Err(SimpleCheckError::InconsistentRelations(format!(
            "internal Hom assembly failed validation: {}",
            violations[0].message
        )));
    }
    let simplicity = is_simple_from_right(&algebra);
    Ok(InternalHomResult {
        algebra,
        simplicity,
    })
}

// ---------------------------------------------------------------------------
// JSON surface
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FieldJson {
    Named(String),
    Prime { prime: u64 },
    Cyclotomic { cyclotomic: u32 },
}

impl FieldJson {
    pub fn build(&self) -> Result<Arc<ExactField>, SimpleCheckError> {
        match self {
            FieldJson::Named(s) if s == "rationals" => Ok(ExactField::rationals()),
            FieldJson::Named(s) => Err(SimpleCheckError::BadInput(format!(
                "unknown field {s:?}"
            ))),
            FieldJson::Prime { prime } => Ok(ExactField::prime(*prime)),
            FieldJson::Cyclotomic { cyclotomic } => Ok(ExactField::cyclotomic(*cyclotomic)),
        }
    }

    pub fn of(field: &ExactField) -> FieldJson {
        match field.kind {
            FieldKind::Rationals => FieldJson::Named("rationals".into()),
            FieldKind::Prime(p) => FieldJson::Prime { prime: p },
            FieldKind::Cyclotomic(l) => FieldJson::Cyclotomic { cyclotomic: l },
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GenJson {
    pub name: String,
    pub power: u32,
    /// scalar literal: "p/q" or "[a0, a1, ...]" in the zeta power basis
    pub power_scalar: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ExchangeJson {
    pub left: String,
    pub right: String,
    pub swap: String,
    #[serde(default)]
    pub unit_term: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ActionJson {
    pub name: String,
    pub order: u32,
    /// generator name -> scalar: the action is diagonal on generators
    pub on: BTreeMap<String, String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DerivationJson {
    pub name: String,
    pub twist: String,
    /// generator name -> constant term scalar: d(gen) = scalar * 1
    pub on: BTreeMap<String, String>,
    #[serde(default)]
    pub nilpotence: Option<u32>,
    #[serde(default)]
    pub zeta_commutation: Option<ZetaCommutationJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ZetaCommutationJson {
    pub action: String,
    pub scalar: String,
}

/// On-disk algebra description for the `simplecheck` and `filtration`
/// commands.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlgebraSpecJson {
    pub field: FieldJson,
    pub generators: Vec<GenJson>,
    #[serde(default)]
    pub exchange: Vec<ExchangeJson>,
    #[serde(default)]
    pub actions: Vec<ActionJson>,
    #[serde(default)]
    pub derivations: Vec<DerivationJson>,
    #[serde(default)]
    pub parity: Option<String>,
    pub dimension_bound: usize,
}

pub fn build_from_spec(spec: &AlgebraSpecJson) -> Result<EquivariantAlgebra, SimpleCheckError> {
    let field = spec.field.build()?;
    let scalar = |s: &str| -> Result<FieldElem, SimpleCheckError> {
        crate::field::parse_scalar(&field, s).map_err(SimpleCheckError::BadInput)
    };
    let gen_index = |name: &str| -> Result<usize, SimpleCheckError> {
        spec.generators
            .iter()
            .position(|g| g.name == name)
            .ok_or_else(|| SimpleCheckError::BadInput(format!("unknown generator {name:?}")))
    };
    let generators: Vec<GenSpec> = spec
        .generators
        .iter()
        .map(|g| {
            Ok(GenSpec {
                name: g.name.clone(),
                power: g.power,
                power_value: scalar(&g.power_scalar)?,
            })
        })
        .collect::<Result<_, SimpleCheckError>>()?;
    let mut exchanges = Vec::new();
    for e in &spec.exchange {
        exchanges.push(Exchange {
            left: gen_index(&e.left)?,
            right: gen_index(&e.right)?,
            swap: scalar(&e.swap)?,
            unit_term: match &e.unit_term {
                Some(s) => scalar(s)?,
                None => FieldElem::zero(&field),
            },
        });
    }
    let pres = Presentation {
        field: field.clone(),
        generators,
        exchanges,
        dimension_bound: spec.dimension_bound,
    };
    let mut algebra = build_from_presentation(&pres)?;
    let mut action_scalar_table: Vec<Vec<FieldElem>> = Vec::new();
    for a in &spec.actions {
        let mut scalars = Vec::new();
        for g in &spec.generators {
            let s = a.on.get(&g.name).ok_or_else(|| {
                SimpleCheckError::BadInput(format!(
                    "action {:?} missing generator {:?}",
                    a.name, g.name
                ))
            })?;
            scalars.push(scalar(s)?);
        }
        algebra
            .group_ops
            .push(diagonal_automorphism(&pres, &a.name, &scalars, a.order));
        action_scalar_table.push(scalars);
    }
    let op_index = |name: &str| -> Result<usize, SimpleCheckError> {
        algebra
            .group_ops
            .iter()
            .position(|g| g.name == name)
            .ok_or_else(|| SimpleCheckError::BadInput(format!("unknown action {name:?}")))
    };
    for d in &spec.derivations {
        let twist = op_index(&d.twist)?;
        let mut constants = Vec::new();
        for g in &spec.generators {
            let s = d.on.get(&g.name).ok_or_else(|| {
                SimpleCheckError::BadInput(format!(
                    "derivation {:?} missing generator {:?}",
                    d.name, g.name
                ))
            })?;
            constants.push(scalar(s)?);
        }
        let zeta = match &d.zeta_commutation {
            Some(z) => Some((op_index(&z.action)?, scalar(&z.scalar)?)),
            None => None,
        };
        let der = derivation_from_constants(
            &pres,
            &d.name,
            &constants,
            &action_scalar_table[twist],
            twist,
            d.nilpotence,
            zeta,
            None,
        );
        algebra.derivations.push(der);
    }
    if let Some(p) = &spec.parity {
        algebra.parity = Some(op_index(p)?);
    }
    let violations = algebra.validate();
    if !violations.is_empty() {
        return Err(SimpleCheckError::InconsistentRelations(format!(
            "{} at {:?}",
            violations[0].message, violations[0].witness
        )));
    }
    Ok(algebra)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Arc<ExactField> {
        ExactField::rationals()
    }

    fn simple_pres(field: &Arc<ExactField>, power: u32, value: i64) -> Presentation {
        Presentation {
            field: field.clone(),
            generators: vec![GenSpec {
                name: "y".into(),
                power,
                power_value: FieldElem::from_integer(field, value),
            }],
            exchanges: vec![],
            dimension_bound: 16,
        }
    }

    #[test]
    fn presentation_small_algebras() {
        // k[Z/2] = <e | e^2 = 1>: dim 2
        let a = build_from_presentation(&simple_pres(&q(), 2, 1)).unwrap();
        assert_eq!(a.dim, 2);
        assert!(a.validate().is_empty());
        // exterior algebra <y | y^2 = 0>: dim 2
        let ext = build_from_presentation(&simple_pres(&q(), 2, 0)).unwrap();
        assert_eq!(ext.dim, 2);
        // Clifford <y | y^2 = b>, b != 0: dim 2, semisimple
        let cl = build_from_presentation(&simple_pres(&q(), 2, 3)).unwrap();
        assert!(semisimplicity_test(&cl).unwrap());
        assert!(!semisimplicity_test(&ext).unwrap());
        assert!(semisimplicity_test(&a).unwrap());
    }

    #[test]
    fn dimension_bound_errors() {
        let mut p = simple_pres(&q(), 5, 1);
        p.dimension_bound = 4;
        assert!(matches!(
            build_from_presentation(&p),
            Err(SimpleCheckError::DimensionOverflow {
                required: 5,
                bound: 4
            })
        ));
    }

    #[test]
    fn trivial_action_not_simple_with_witness() {
        // k^2 = k[Z/2] with no operators beyond right multiplication
        let a = build_from_presentation(&simple_pres(&q(), 2, 1)).unwrap();
        let res = is_simple_from_right(&a);
        assert!(!res.simple);
        assert!(res.witness.is_some());
    }

    #[test]
    fn swap_action_on_k2_is_simple() {
        let field = q();
        let group = Group::abelian(&[2]);
        let a = build_group_quotient(&field, &group, &[0], None, None).unwrap();
        assert_eq!(a.dim, 2);
        assert!(a.validate().is_empty());
        let res = is_simple_from_right(&a);
        assert!(res.simple);
        assert_eq!(res.closure_dimension, 4);
    }

    #[test]
    fn s3_coset_algebra() {
        let field = q();
        let group = Group::s3();
        // H = Z/3 generated by the 3-cycle (element 1 in the table)
        let h = group.subgroup(&[1]);
        assert_eq!(h.len(), 3);
        let a = build_group_quotient(&field, &group, &h, None, None).unwrap();
        assert_eq!(a.dim, 2);
        assert!(a.validate().is_empty());
        assert!(is_simple_from_right(&a).simple);
    }

    #[test]
    fn klein_projective_rep_is_matrix_algebra() {
        let field = q();
        let group = Group::abelian(&[2, 2]);
        let psi = klein_nontrivial_cocycle(&field);
        let v = klein_projective_rep(&field);
        let all: Vec<usize> = (0..4).collect();
        let a = build_group_quotient(&field, &group, &all, Some(&psi), Some(&v)).unwrap();
        assert_eq!(a.dim, 4);
        assert!(a.validate().is_empty());
        assert!(is_simple_from_right(&a).simple);
    }

    #[test]
    fn exterior_with_derivation_is_simple() {
        // <y | y^2 = 0> with parity and the odd twisted derivation dy = 1
        let field = q();
        let pres = simple_pres(&field, 2, 0);
        let mut a = build_from_presentation(&pres).unwrap();
        let parity = diagonal_automorphism(
            &pres,
            "parity",
            &[FieldElem::from_integer(&field, -1)],
            2,
        );
        a.group_ops.push(parity);
        a.parity = Some(0);
        let der = derivation_from_constants(
            &pres,
            "d",
            &[FieldElem::one(&field)],
            &[FieldElem::from_integer(&field, -1)],
            0,
            Some(2),
            None,
            Some(0),
        );
        a.derivations.push(der);
        assert!(a.validate().is_empty());
        let res = is_simple_from_right(&a);
        assert!(res.simple);
        assert_eq!(res.closure_dimension, 4);
        // filtration: A_0 = span(1), A_1 = everything
        let rep = compute_filtration(&a);
        assert!(rep.all_hold(), "{:?}", rep.properties);
        assert_eq!(rep.chain[0].len(), 1);
        assert_eq!(rep.chain.last().unwrap().len(), 2);
    }

    #[test]
    fn taft_a_builders() {
        // l = 2, d = 2: <y | y^2 = 1> over the rationals (zeta_2 = -1)
        let field = ExactField::cyclotomic(2);
        let a = build_taft_a(&field, 2, 2, FieldElem::one(&field)).unwrap();
        assert_eq!(a.dim, 2);
        assert!(a.validate().is_empty());
        assert!(is_simple_from_right(&a).simple);
        // l = 2, d = 1: c and y, dim 4
        let a = build_taft_a(&field, 2, 1, FieldElem::one(&field)).unwrap();
        assert_eq!(a.dim, 4);
        assert!(a.validate().is_empty());
        assert!(is_simple_from_right(&a).simple);
        // lambda = 0 stays well-defined
        let a0 = build_taft_a(&field, 2, 1, FieldElem::zero(&field)).unwrap();
        assert!(a0.validate().is_empty());
        assert!(matches!(
            build_taft_a(&field, 4, 3, FieldElem::one(&field)),
            Err(SimpleCheckError::BadDivisor { d: 3, l: 4 })
        ));
    }

    #[test]
    fn taft_a_filtration() {
        let field = ExactField::cyclotomic(3);
        let a = build_taft_a(&field, 3, 3, FieldElem::one(&field)).unwrap();
        let rep = compute_filtration(&a);
        assert!(rep.all_hold(), "{:?}", rep.properties);
        assert_eq!(rep.chain.len(), 3);
        assert_eq!(rep.chain[0].len(), 1);
    }

    #[test]
    fn clifford_smash_dimensions() {
        let field = q();
        let minus = FieldElem::from_integer(&field, -1);
        let params = CliffordSmashParams {
            field: &field,
            h_factors: &[2],
            action: vec![vec![minus.clone()]],
            y_dim: 1,
            b: vec![vec![FieldElem::one(&field)]],
            psi: None,
            w_dim: 1,
            dimension_bound: 16,
        };
        let a = build_clifford_smash(&params).unwrap();
        assert_eq!(a.dim, 4);
        assert!(a.validate().is_empty(), "{:?}", a.validate());
        assert!(semisimplicity_test(&a).unwrap());
        // degenerate form: exterior part, not semisimple
        let params0 = CliffordSmashParams {
            field: &field,
            h_factors: &[2],
            action: vec![vec![minus]],
            y_dim: 1,
            b: vec![vec![FieldElem::zero(&field)]],
            psi: None,
            w_dim: 1,
            dimension_bound: 16,
        };
        let a0 = build_clifford_smash(&params0).unwrap();
        assert_eq!(a0.dim, 4);
        assert!(a0.validate().is_empty());
        assert!(!semisimplicity_test(&a0).unwrap());
        // empty Clifford part: just the group algebra
        let params_empty = CliffordSmashParams {
            field: &field,
            h_factors: &[2],
            action: vec![vec![]],
            y_dim: 0,
            b: vec![],
            psi: None,
            w_dim: 0,
            dimension_bound: 16,
        };
        let ag = build_clifford_smash(&params_empty).unwrap();
        assert_eq!(ag.dim, 2);
    }

    #[test]
    fn twisted_klein_smash_is_matrix_algebra() {
        // k[H]_psi for the nontrivial Klein cocycle is the 2x2 matrix
        // algebra in disguise: dim 4, semisimple, center of dimension 1
        let field = q();
        let psi = klein_nontrivial_cocycle(&field);
        let params = CliffordSmashParams {
            field: &field,
            h_factors: &[2, 2],
            action: vec![vec![], vec![]],
            y_dim: 0,
            b: vec![],
            psi: Some(psi),
            w_dim: 0,
            dimension_bound: 16,
        };
        let a = build_clifford_smash(&params).unwrap();
        assert_eq!(a.dim, 4);
        assert!(a.validate().is_empty(), "{:?}", a.validate());
        assert!(semisimplicity_test(&a).unwrap());
        // u2 u1 = -u1 u2 from the cocycle asymmetry
        let u1 = a.basis_elem(2); // monomial (1, 0)
        let u2 = a.basis_elem(1); // monomial (0, 1)
        let lhs = a.mul(&u2, &u1);
        let rhs = a.mul(&u1, &u2);
        let neg: Vec<FieldElem> = rhs.iter().map(|c| c.neg()).collect();
        assert_eq!(lhs, neg);
        // with a Clifford generator on top the invariants still hold
        let psi = klein_nontrivial_cocycle(&field);
        let params = CliffordSmashParams {
            field: &field,
            h_factors: &[2, 2],
            action: vec![
                vec![FieldElem::from_integer(&field, -1)],
                vec![FieldElem::one(&field)],
            ],
            y_dim: 1,
            b: vec![vec![FieldElem::one(&field)]],
            psi: Some(psi),
            w_dim: 1,
            dimension_bound: 16,
        };
        let a = build_clifford_smash(&params).unwrap();
        assert_eq!(a.dim, 8);
        assert!(a.validate().is_empty(), "{:?}", a.validate());
    }

    #[test]
    fn supergroup_with_trivial_subgroup_uses_the_odd_unit() {
        // H = 1 inside G = Z/2: the induction step contributes an odd
        // square root of one, and the certificates still come back simple
        let field = q();
        let minus = FieldElem::from_integer(&field, -1);
        for (y, b) in [
            (1usize, vec![vec![FieldElem::one(&field)]]),
            (0, vec![]),
        ] {
            let params = SupergroupParams {
                field: &field,
                g_factors: &[2],
                u: vec![1],
                h_gens: vec![],
                w_action: vec![vec![minus.clone()]],
                w_dim: 1,
                y_dim: y,
                b,
                dimension_bound: 32,
            };
            let res = supergroup_internal_hom(&params).unwrap();
            assert_eq!(res.algebra.dim, 4);
            assert!(res.algebra.validate().is_empty());
            assert!(res.simplicity.simple, "y = {y}");
        }
        // degenerate form with trivial subgroup: sigma alone, dim 2
        let params = SupergroupParams {
            field: &field,
            g_factors: &[2],
            u: vec![1],
            h_gens: vec![],
            w_action: vec![vec![minus]],
            w_dim: 1,
            y_dim: 1,
            b: vec![vec![FieldElem::zero(&field)]],
            dimension_bound: 32,
        };
        let res = supergroup_internal_hom(&params).unwrap();
        assert_eq!(res.algebra.dim, 2);
        assert!(res.simplicity.simple);
    }

    #[test]
    fn supergroup_internal_hom_cases() {
        let field = q();
        let minus = FieldElem::from_integer(&field, -1);
        // G = H = Z/2, W = Y one-dimensional, B = [1]: dim-2 Clifford
        let params = SupergroupParams {
            field: &field,
            g_factors: &[2],
            u: vec![1],
            h_gens: vec![vec![1]],
            w_action: vec![vec![minus.clone()]],
            w_dim: 1,
            y_dim: 1,
            b: vec![vec![FieldElem::one(&field)]],
            dimension_bound: 32,
        };
        let res = supergroup_internal_hom(&params).unwrap();
        assert_eq!(res.algebra.dim, 2);
        assert!(res.simplicity.simple);
        // Y = 0 inside a one-dimensional W: exterior algebra with dy = 1
        let params = SupergroupParams {
            field: &field,
            g_factors: &[2],
            u: vec![1],
            h_gens: vec![vec![1]],
            w_action: vec![vec![minus.clone()]],
            w_dim: 1,
            y_dim: 0,
            b: vec![],
            dimension_bound: 32,
        };
        let res = supergroup_internal_hom(&params).unwrap();
        assert_eq!(res.algebra.dim, 2);
        assert!(res.simplicity.simple);
        // Y = W, B = 0: everything collapses to the ground field
        let params = SupergroupParams {
            field: &field,
            g_factors: &[2],
            u: vec![1],
            h_gens: vec![vec![1]],
            w_action: vec![vec![minus.clone()]],
            w_dim: 1,
            y_dim: 1,
            b: vec![vec![FieldElem::zero(&field)]],
            dimension_bound: 32,
        };
        let res = supergroup_internal_hom(&params).unwrap();
        assert_eq!(res.algebra.dim, 1);
        assert!(res.simplicity.simple);
        // no odd part at all: the internal Hom of the unit is the ground
        // field itself
        let params = SupergroupParams {
            field: &field,
            g_factors: &[2],
            u: vec![1],
            h_gens: vec![vec![1]],
            w_action: vec![vec![]],
            w_dim: 0,
            y_dim: 0,
            b: vec![],
            dimension_bound: 32,
        };
        let res = supergroup_internal_hom(&params).unwrap();
        assert_eq!(res.algebra.dim, 1);
        assert!(res.simplicity.simple);
    }

    #[test]
    fn supergroup_with_proper_coset_induction() {
        // G = Klein four, u = (1,0) acting by -1, H = <u>: the second
        // generator permutes the two cosets of H-hat, exercising the
        // block-permutation part of the action
        let field = q();
        let minus = FieldElem::from_integer(&field, -1);
        let one = FieldElem::one(&field);
        let params = SupergroupParams {
            field: &field,
            g_factors: &[2, 2],
            u: vec![1, 0],
            h_gens: vec![vec![1, 0]],
            w_action: vec![vec![minus], vec![one]],
            w_dim: 1,
            y_dim: 1,
            b: vec![vec![FieldElem::one(&field)]],
            dimension_bound: 32,
        };
        let res = supergroup_internal_hom(&params).unwrap();
        assert_eq!(res.algebra.dim, 4, "two cosets of a dim-2 Clifford part");
        assert!(res.algebra.validate().is_empty());
        assert!(res.simplicity.simple);
    }

    #[test]
    fn spec_round_trip_builds() {
        let json = r#"{
            "field": {"cyclotomic": 4},
            "generators": [
                {"name": "c", "power": 2, "power_scalar": "1"},
                {"name": "y", "power": 4, "power_scalar": "1"}
            ],
            "exchange": [
                {"left": "y", "right": "c", "swap": "-1"}
            ],
            "actions": [
                {"name": "g", "order": 4, "on": {"c": "-1", "y": "[0,-1]"}}
            ],
            "derivations": [
                {"name": "d", "twist": "g", "on": {"c": "0", "y": "1"}, "nilpotence": 4,
                 "zeta_commutation": {"action": "g", "scalar": "[0,-1]"}}
            ],
            "dimension_bound": 8
        }"#;
        let spec: AlgebraSpecJson = serde_json::from_str(json).unwrap();
        let a = build_from_spec(&spec).unwrap();
        assert_eq!(a.dim, 8);
        assert!(a.validate().is_empty());
        assert!(is_simple_from_right(&a).simple);
    }
}
