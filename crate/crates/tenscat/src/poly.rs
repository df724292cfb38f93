//! Exact univariate polynomial arithmetic over the integers and rationals:
//! Sturm sequences, real-root isolation, fraction-free determinants,
//! resultants, and irreducible factorization for the small degrees this
//! crate needs.

use crate::rat::Interval;
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("polynomial degree {0} exceeds the supported factorization cap of {1}")]
    DegreeTooLarge(usize, usize),
}

/// Hard cap on the degree handled by the irreducible factorization routine.
pub const FACTOR_DEGREE_CAP: usize = 12;

// ---------------------------------------------------------------------------
// Integer polynomials
// ---------------------------------------------------------------------------

/// A polynomial with integer coefficients, low degree first, no trailing
/// zeros. The zero polynomial is the empty vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntPoly(pub Vec<BigInt>);

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly(coeffs)
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly(vec![])
    }

    pub fn one() -> Self {
        IntPoly(vec![BigInt::one()])
    }

    pub fn x() -> Self {
        IntPoly(vec![BigInt::zero(), BigInt::one()])
    }

    /// The monic-up-to-sign linear polynomial `x - r` scaled to integer
    /// coefficients: for r = p/q returns `q x - p` (primitive).
    pub fn x_minus_rational(r: &BigRational) -> Self {
        IntPoly::new(vec![-r.numer().clone(), r.denom().clone()]).primitive()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn leading(&self) -> BigInt {
        self.0.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.0.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.0.len().max(other.0.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        IntPoly::new(out)
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let n = self.0.len().max(other.0.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - other.coeff(i));
        }
        IntPoly::new(out)
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly(self.0.iter().map(|c| -c.clone()).collect())
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        IntPoly::new(self.0.iter().map(|a| a * c).collect())
    }

    /// Content: gcd of coefficients, positive. Content of 0 is 0.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.0 {
            g = g.gcd(c);
        }
        g
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut g = self.content();
        if self.leading().is_negative() {
            g = -g;
        }
        IntPoly(self.0.iter().map(|c| c / &g).collect())
    }

    pub fn derivative(&self) -> IntPoly {
        if self.0.len() <= 1 {
            return IntPoly::zero();
        }
        IntPoly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rat(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Horner evaluation over a closed interval; exact outer bound.
    pub fn eval_interval(&self, x: &Interval) -> Interval {
        let mut acc = Interval::point(BigRational::zero());
        for c in self.0.iter().rev() {
            acc = acc
                .mul(x)
                .add(&Interval::point(BigRational::from_integer(c.clone())));
        }
        acc
    }

    /// Exact division; returns None if `other` does not divide `self` in `Z[x]`.
    pub fn div_exact(&self, other: &IntPoly) -> Option<IntPoly> {
        assert!(!other.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        if self.degree() < other.degree() {
            return None;
        }
        let mut rem = self.0.clone();
        let n = other.0.len();
        let lead = other.leading();
        let mut quot = vec![BigInt::zero(); rem.len() - n + 1];
        for k in (0..quot.len()).rev() {
            let top = rem[k + n - 1].clone();
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(&lead);
            if !r.is_zero() {
                return None;
            }
            quot[k] = q.clone();
            for (j, b) in other.0.iter().enumerate() {
                rem[k + j] -= &q * b;
            }
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(IntPoly::new(quot))
    }

    pub fn to_rat(&self) -> RatPoly {
        RatPoly::new(
            self.0
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }

    /// Squarefree part: p / gcd(p, p'), primitive.
    pub fn squarefree_part(&self) -> IntPoly {
        if self.degree() == 0 {
            return self.primitive();
        }
        let g = rat_gcd(&self.to_rat(), &self.derivative().to_rat());
        if g.degree() == 0 {
            return self.primitive();
        }
        let q = self.to_rat().div_rem(&g).0;
        q.clear_denominators().primitive()
    }

    /// Cauchy bound: every real root lies in (-B, B).
    pub fn root_bound(&self) -> BigRational {
        let lead = BigRational::from_integer(self.leading().abs());
        let mut m = BigRational::zero();
        for c in &self.0[..self.0.len() - 1] {
            let v = BigRational::from_integer(c.abs());
            if v > m {
                m = v;
            }
        }
        BigRational::one() + m / lead
    }

    pub fn to_string_pretty(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts: Vec<String> = Vec::new();
        for (i, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let term = match i {
                0 => mag.to_string(),
                1 => {
                    if mag.is_one() {
                        "x".into()
                    } else {
                        format!("{mag}x")
                    }
                }
                _ => {
                    if mag.is_one() {
                        format!("x^{i}")
                    } else {
                        format!("{mag}x^{i}")
                    }
                }
            };
            if parts.is_empty() {
                parts.push(if c.is_negative() {
                    format!("-{term}")
                } else {
                    term
                });
            } else {
                parts.push(format!("{}{}", if c.is_negative() { "-" } else { "+" }, term));
            }
        }
        parts.join("")
    }
}

// ---------------------------------------------------------------------------
// Rational polynomials
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatPoly(pub Vec<BigRational>);

impl RatPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly(coeffs)
    }

    pub fn zero() -> Self {
        RatPoly(vec![])
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn leading(&self) -> BigRational {
        self.0.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.0.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn scale(&self, c: &BigRational) -> RatPoly {
        RatPoly::new(self.0.iter().map(|a| a * c).collect())
    }

    pub fn sub(&self, other: &RatPoly) -> RatPoly {
        let n = self.0.len().max(other.0.len());
        RatPoly::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &RatPoly) -> RatPoly {
        if self.is_zero() || other.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::new(out)
    }

    /// Division with remainder: self = q * other + r, deg r < deg other.
    pub fn div_rem(&self, other: &RatPoly) -> (RatPoly, RatPoly) {
        assert!(!other.is_zero(), "division by zero polynomial");
        if self.is_zero() || self.degree() < other.degree() {
            return (RatPoly::zero(), self.clone());
        }
        let mut rem = self.0.clone();
        let n = other.0.len();
        let lead_inv = BigRational::one() / other.leading();
        let mut quot = vec![BigRational::zero(); rem.len() - n + 1];
        for k in (0..quot.len()).rev() {
            let q = &rem[k + n - 1] * &lead_inv;
            if q.is_zero() {
                continue;
            }
            quot[k] = q.clone();
            for (j, b) in other.0.iter().enumerate() {
                let delta = &q * b;
                rem[k + j] -= delta;
            }
        }
        (RatPoly::new(quot), RatPoly::new(rem))
    }

    pub fn monic(&self) -> RatPoly {
        if self.is_zero() {
            return RatPoly::zero();
        }
        self.scale(&(BigRational::one() / self.leading()))
    }

    /// Clears denominators to a primitive integer polynomial.
    pub fn clear_denominators(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut lcm = BigInt::one();
        for c in &self.0 {
            lcm = lcm.lcm(c.denom());
        }
        IntPoly::new(
            self.0
                .iter()
                .map(|c| c.numer() * (&lcm / c.denom()))
                .collect(),
        )
        .primitive()
    }
}

/// Monic gcd over the rationals.
pub fn rat_gcd(a: &RatPoly, b: &RatPoly) -> RatPoly {
    let mut a = a.clone();
    let mut b = b.clone();
    while !b.is_zero() {
        let r = a.div_rem(&b).1;
        a = b;
        b = r;
    }
    if a.is_zero() {
        RatPoly::zero()
    } else {
        a.monic()
    }
}

// ---------------------------------------------------------------------------
// Sturm sequences and real-root isolation
// ---------------------------------------------------------------------------

/// Sturm chain of a squarefree polynomial.
#[derive(Debug, Clone)]
pub struct SturmChain(Vec<RatPoly>);

impl SturmChain {
    pub fn new(p: &IntPoly) -> Self {
        let mut chain = vec![p.to_rat(), p.derivative().to_rat()];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                break;
            }
            if chain[n - 1].degree() == 0 {
                break;
            }
            let r = chain[n - 2].div_rem(&chain[n - 1]).1;
            chain.push(RatPoly::new(r.0.iter().map(|c| -c).collect()));
        }
        SturmChain(chain)
    }

    fn variations(&self, x: &BigRational) -> usize {
        let mut count = 0;
        let mut last: Option<bool> = None;
        for p in &self.0 {
            let v = p.eval(x);
            if v.is_zero() {
                continue;
            }
            let sign = v.is_positive();
            if let Some(prev) = last {
                if prev != sign {
                    count += 1;
                }
            }
            last = Some(sign);
        }
        count
    }

    /// Number of distinct real roots in the open interval (a, b).
    /// Requires p(a) != 0 and p(b) != 0.
    pub fn count_open(&self, a: &BigRational, b: &BigRational) -> usize {
        debug_assert!(a < b);
        debug_assert!(!self.0[0].eval(a).is_zero() && !self.0[0].eval(b).is_zero());
        self.variations(a) - self.variations(b)
    }
}

/// An isolated real root of a squarefree polynomial: either an exact
/// rational, or an open interval with a sign change containing one root.
#[derive(Debug, Clone)]
pub enum IsolatedRoot {
    Exact(BigRational),
    Bracket { lo: BigRational, hi: BigRational },
}

impl IsolatedRoot {
    pub fn lo(&self) -> BigRational {
        match self {
            IsolatedRoot::Exact(v) => v.clone(),
            IsolatedRoot::Bracket { lo, .. } => lo.clone(),
        }
    }

    pub fn hi(&self) -> BigRational {
        match self {
            IsolatedRoot::Exact(v) => v.clone(),
            IsolatedRoot::Bracket { hi, .. } => hi.clone(),
        }
    }
}

/// Isolates all real roots of a squarefree polynomial, in increasing order.
pub fn isolate_real_roots(p: &IntPoly) -> Vec<IsolatedRoot> {
    assert!(!p.is_zero());
    if p.degree() == 0 {
        return vec![];
    }
    let bound = p.root_bound();
    let mut roots = isolate_in(p, &-bound.clone(), &bound);
    // (lo, hi) ordering puts an exact root at m before a bracket (m, b).
    roots.sort_by(|a, b| (a.lo(), a.hi()).cmp(&(b.lo(), b.hi())));
    roots
}

fn isolate_in(p: &IntPoly, a: &BigRational, b: &BigRational) -> Vec<IsolatedRoot> {
    // Endpoints are guaranteed non-roots by the callers: the initial Cauchy
    // bound is strict, and rational roots hit during bisection are divided out.
    let chain = SturmChain::new(p);
    let mut out = Vec::new();
    let mut stack = vec![(a.clone(), b.clone(), chain, p.clone())];
    while let Some((lo, hi, chain, poly)) = stack.pop() {
        let n = chain.count_open(&lo, &hi);
        if n == 0 {
            continue;
        }
        if n == 1 {
            out.push(IsolatedRoot::Bracket { lo, hi });
            continue;
        }
        let mid = (&lo + &hi) / BigRational::from_integer(BigInt::from(2));
        if poly.eval_rat(&mid).is_zero() {
            out.push(IsolatedRoot::Exact(mid.clone()));
            let quo = poly
                .div_exact(&IntPoly::x_minus_rational(&mid))
                .expect("rational root must divide");
            let quo = quo.primitive();
            let chain2 = SturmChain::new(&quo);
            stack.push((lo, mid.clone(), chain2.clone(), quo.clone()));
            stack.push((mid, hi, chain2, quo));
        } else {
            stack.push((lo, mid.clone(), chain.clone(), poly.clone()));
            stack.push((mid, hi, chain, poly));
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Fraction-free determinants over Z[x]
// ---------------------------------------------------------------------------

/// Determinant of a square matrix with entries in `Z[x]`, computed by
/// fraction-free Gaussian elimination (Bareiss): divisions are exact in the
/// domain, keeping intermediate coefficient growth polynomial.
pub fn det_bareiss_poly(mut m: Vec<Vec<IntPoly>>) -> IntPoly {
    let n = m.len();
    if n == 0 {
        return IntPoly::one();
    }
    for row in &m {
        assert_eq!(row.len(), n, "determinant of a non-square matrix");
    }
    let mut sign = 1i32;
    let mut prev = IntPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let swap = (k + 1..n).find(|&i| !m[i][k].is_zero());
            match swap {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return IntPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = t
                    .div_exact(&prev)
                    .expect("Bareiss division is exact over an integral domain");
            }
            m[i][k] = IntPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        det.neg()
    } else {
        det
    }
}

/// Characteristic polynomial `det(xI - M)` of an integer matrix.
pub fn char_poly(m: &[Vec<BigInt>]) -> IntPoly {
    let n = m.len();
    let mut mat = Vec::with_capacity(n);
    for i in 0..n {
        assert_eq!(m[i].len(), n);
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            if i == j {
                row.push(IntPoly::new(vec![-m[i][j].clone(), BigInt::one()]));
            } else {
                row.push(IntPoly::new(vec![-m[i][j].clone()]));
            }
        }
        mat.push(row);
    }
    det_bareiss_poly(mat)
}

pub fn char_poly_i64(m: &[Vec<i64>]) -> IntPoly {
    let rows: Vec<Vec<BigInt>> = m
        .iter()
        .map(|r| r.iter().map(|&c| BigInt::from(c)).collect())
        .collect();
    char_poly(&rows)
}

/// Resultant of two integer polynomials via the Sylvester matrix, with the
/// matrix entries promoted to `Z[x]` so `det_bareiss_poly` can be reused. Used
/// here with bivariate inputs encoded as polynomials in x whose coefficients
/// came from substituting into the second argument.
pub fn resultant_sylvester(p: &[IntPoly], q: &[IntPoly]) -> IntPoly {
    // p, q: coefficient vectors (low degree first) whose entries are in Z[x].
    let m = p.len() - 1;
    let n = q.len() - 1;
    if m == 0 && n == 0 {
        return IntPoly::one();
    }
    let size = m + n;
    let mut mat = vec![vec![IntPoly::zero(); size]; size];
    for i in 0..n {
        for (j, c) in p.iter().enumerate() {
            mat[i][i + (m - j)] = c.clone();
        }
    }
    for i in 0..m {
        for (j, c) in q.iter().enumerate() {
            mat[n + i][i + (n - j)] = c.clone();
        }
    }
    det_bareiss_poly(mat)
}

/// A polynomial whose roots include every product alpha*beta of a root alpha
/// of p and a root beta of q: `Res_y(p(y), y^deg(q) * q(x/y))`.
pub fn root_product_poly(p: &IntPoly, q: &IntPoly) -> IntPoly {
    assert!(p.degree() >= 1 && q.degree() >= 1);
    // p(y) has entries constant in x; the second argument has coefficient of
    // y^(n-j) equal to q_j * x^j.
    let py: Vec<IntPoly> = p.0.iter().map(|c| IntPoly::new(vec![c.clone()])).collect();
    let n = q.degree();
    let mut qy: Vec<IntPoly> = vec![IntPoly::zero(); n + 1];
    for (j, c) in q.0.iter().enumerate() {
        // term q_j x^j y^(n-j)
        let mut coeffs = vec![BigInt::zero(); j + 1];
        coeffs[j] = c.clone();
        qy[n - j] = IntPoly::new(coeffs);
    }
    resultant_sylvester(&py, &qy).primitive()
}

// ---------------------------------------------------------------------------
// Irreducible factorization over Z (small degrees)
// ---------------------------------------------------------------------------

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            out.push(d.clone());
            let other = &n / &d;
            if other != d {
                out.push(other);
            }
        }
        d += 1;
    }
    out
}

/// All rational roots of a primitive integer polynomial.
fn rational_roots(p: &IntPoly) -> Vec<BigRational> {
    if p.is_zero() || p.degree() == 0 {
        return vec![];
    }
    let a0 = p.coeff(0);
    if a0.is_zero() {
        let mut roots = rational_roots(&p.div_exact(&IntPoly::x()).unwrap().primitive());
        roots.push(BigRational::zero());
        return roots;
    }
    let mut out = Vec::new();
    for num in divisors(&a0) {
        for den in divisors(&p.leading()) {
            for sign in [1i64, -1] {
                let cand = BigRational::new(&num * BigInt::from(sign), den.clone());
                if p.eval_rat(&cand).is_zero() && !out.contains(&cand) {
                    out.push(cand);
                }
            }
        }
    }
    out
}

/// Factors a nonzero integer polynomial into irreducible primitive factors
/// with multiplicity (the content is dropped). Uses rational-root extraction
/// and Kronecker interpolation for the remaining degrees; complete for
/// degree <= FACTOR_DEGREE_CAP.
pub fn factor_irreducible(p: &IntPoly) -> Result<Vec<(IntPoly, usize)>, PolyError> {
    assert!(!p.is_zero());
    if p.degree() > FACTOR_DEGREE_CAP {
        return Err(PolyError::DegreeTooLarge(p.degree(), FACTOR_DEGREE_CAP));
    }
    let mut out: Vec<(IntPoly, usize)> = Vec::new();
    let mut rest = p.primitive();
    // Squarefree split first: repeatedly peel the squarefree part.
    while rest.degree() >= 1 {
        let sf = rest.squarefree_part();
        for f in factor_squarefree(&sf)? {
            let mut mult = 0;
            loop {
                match rest.div_exact(&f) {
                    Some(q) => {
                        rest = q.primitive();
                        mult += 1;
                    }
                    None => break,
                }
            }
            merge_factor(&mut out, f, mult);
        }
    }
    Ok(out)
}

fn merge_factor(out: &mut Vec<(IntPoly, usize)>, f: IntPoly, mult: usize) {
    if mult == 0 {
        return;
    }
    for (g, m) in out.iter_mut() {
        if *g == f {
            *m += mult;
            return;
        }
    }
    out.push((f, mult));
}

fn factor_squarefree(p: &IntPoly) -> Result<Vec<IntPoly>, PolyError> {
    let mut factors = Vec::new();
    let mut rest = p.primitive();
    // Linear factors.
    for r in rational_roots(&rest) {
        let lin = IntPoly::x_minus_rational(&r);
        while let Some(q) = rest.div_exact(&lin) {
            factors.push(lin.clone());
            rest = q.primitive();
        }
    }
    // Higher-degree factors by Kronecker interpolation.
    'outer: while rest.degree() >= 2 {
        let n = rest.degree();
        if n <= 3 {
            // No rational root and degree <= 3: irreducible over Q.
            factors.push(rest.clone());
            break;
        }
        for d in 2..=n / 2 {
            if let Some(f) = kronecker_factor(&rest, d) {
                factors.push(f.clone());
                rest = rest.div_exact(&f).unwrap().primitive();
                continue 'outer;
            }
        }
        factors.push(rest.clone());
        break;
    }
    factors.sort();
    Ok(factors)
}

/// Searches for an irreducible factor of exact degree d via Kronecker's
/// method: a degree-d factor g satisfies g(a) | p(a) at d+1 integer points,
/// so interpolate through all divisor combinations and test divisibility.
fn kronecker_factor(p: &IntPoly, d: usize) -> Option<IntPoly> {
    let points: Vec<BigInt> = sample_points(d + 1);
    let values: Vec<BigInt> = points.iter().map(|a| p.eval_int(a)).collect();
    debug_assert!(values.iter().all(|v| !v.is_zero()), "rational roots removed first");
    let divisor_lists: Vec<Vec<BigInt>> = values
        .iter()
        .map(|v| {
            let mut ds = Vec::new();
            for pos in divisors(v) {
                ds.push(-pos.clone());
                ds.push(pos);
            }
            ds
        })
        .collect();
    let mut choice = vec![0usize; points.len()];
    loop {
        let targets: Vec<BigRational> = choice
            .iter()
            .zip(&divisor_lists)
            .map(|(&c, l)| BigRational::from_integer(l[c].clone()))
            .collect();
        if let Some(g) = interpolate_int(&points, &targets) {
            if g.degree() == d && p.div_exact(&g).is_some() {
                let g = g.primitive();
                // Recursion bottom-out: d <= deg/2 and the smaller-degree
                // factors were already exhausted, so g is irreducible.
                if smallest_factor_degree(&g) == g.degree() {
                    return Some(g);
                }
            }
        }
        // Advance the mixed-radix counter.
        let mut i = 0;
        loop {
            if i == choice.len() {
                return None;
            }
            choice[i] += 1;
            if choice[i] < divisor_lists[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

fn smallest_factor_degree(g: &IntPoly) -> usize {
    if !rational_roots(g).is_empty() {
        return 1;
    }
    let n = g.degree();
    for d in 2..=n / 2 {
        if kronecker_factor(g, d).is_some() {
            return d;
        }
    }
    n
}

fn sample_points(count: usize) -> Vec<BigInt> {
    // 0, 1, -1, 2, -2, ...
    let mut pts = Vec::with_capacity(count);
    let mut k = 0i64;
    while pts.len() < count {
        pts.push(BigInt::from(k));
        if k > 0 && pts.len() < count {
            pts.push(BigInt::from(-k));
        }
        k += 1;
    }
    pts
}

/// Lagrange interpolation; returns the integer polynomial if all
/// coefficients come out integral.
fn interpolate_int(points: &[BigInt], values: &[BigRational]) -> Option<IntPoly> {
    let n = points.len();
    let mut acc = RatPoly::zero();
    for i in 0..n {
        let mut basis = RatPoly::new(vec![BigRational::one()]);
        let mut denom = BigRational::one();
        for j in 0..n {
            if i == j {
                continue;
            }
            basis = basis.mul(&RatPoly::new(vec![
                BigRational::from_integer(-points[j].clone()),
                BigRational::one(),
            ]));
            denom *= BigRational::from_integer(&points[i] - &points[j]);
        }
        acc = acc.sub(&basis.scale(&(-&values[i] / denom)));
    }
    if acc.0.iter().all(|c| c.denom().is_one()) {
        Some(IntPoly::new(acc.0.iter().map(|c| c.numer().clone()).collect()))
    } else {
        None
    }
}

/// Tests irreducibility over Q of a primitive integer polynomial.
pub fn is_irreducible(p: &IntPoly) -> Result<bool, PolyError> {
    if p.degree() == 0 {
        return Ok(false);
    }
    if p.degree() == 1 {
        return Ok(true);
    }
    let fs = factor_irreducible(p)?;
    Ok(fs.len() == 1 && fs[0].1 == 1)
}

// ---------------------------------------------------------------------------
// Cyclotomic polynomials
// ---------------------------------------------------------------------------

/// The l-th cyclotomic polynomial, by dividing x^l - 1 by the cyclotomic
/// polynomials of the proper divisors of l.
pub fn cyclotomic(l: u32) -> IntPoly {
    assert!(l >= 1);
    let mut coeffs = vec![BigInt::zero(); l as usize + 1];
    coeffs[0] = -BigInt::one();
    coeffs[l as usize] = BigInt::one();
    let mut num = IntPoly::new(coeffs);
    for d in 1..l {
        if l % d == 0 {
            num = num
                .div_exact(&cyclotomic(d))
                .expect("cyclotomic polynomials divide x^l - 1");
        }
    }
    num
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, ratio};

    #[test]
    fn char_poly_fibonacci_matrix() {
        // [[0,1],[1,1]] has characteristic polynomial x^2 - x - 1.
        let p = char_poly_i64(&[vec![0, 1], vec![1, 1]]);
        assert_eq!(p, IntPoly::from_i64(&[-1, -1, 1]));
    }

    #[test]
    fn char_poly_all_ones() {
        // 3x3 all-ones: x^3 - 3x^2.
        let p = char_poly_i64(&[vec![1, 1, 1], vec![1, 1, 1], vec![1, 1, 1]]);
        assert_eq!(p, IntPoly::from_i64(&[0, 0, -3, 1]));
    }

    #[test]
    fn sturm_counts_roots() {
        // x^2 - 2 has one root in (0, 2) and one in (-2, 0).
        let p = IntPoly::from_i64(&[-2, 0, 1]);
        let chain = SturmChain::new(&p);
        assert_eq!(chain.count_open(&rat(0), &rat(2)), 1);
        assert_eq!(chain.count_open(&rat(-2), &rat(0)), 1);
        assert_eq!(chain.count_open(&rat(-2), &rat(2)), 2);
    }

    #[test]
    fn isolation_handles_rational_roots() {
        // x^2 - 3x = x(x-3): both roots rational, midpoints will hit them.
        let p = IntPoly::from_i64(&[0, -3, 1]);
        let roots = isolate_real_roots(&p);
        assert_eq!(roots.len(), 2);
        // 0 is hit exactly by bisection; 3 is bracketed.
        assert_eq!(roots[0].lo(), rat(0));
        assert_eq!(roots[0].hi(), rat(0));
        assert!(roots[1].lo() < rat(3) && rat(3) < roots[1].hi());
    }

    #[test]
    fn isolation_golden_ratio() {
        let p = IntPoly::from_i64(&[-1, -1, 1]);
        let roots = isolate_real_roots(&p);
        assert_eq!(roots.len(), 2);
        // Bisection oracle: refine the larger root below width 1/1024 and
        // check it lies in (3/2, 7/4).
        let (mut lo, mut hi) = (roots[1].lo(), roots[1].hi());
        while &hi - &lo > ratio(1, 1024) {
            let mid = (&lo + &hi) / rat(2);
            if p.eval_rat(&mid).is_negative() == p.eval_rat(&lo).is_negative() {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        assert!(lo > ratio(3, 2) && hi < ratio(7, 4));
    }

    #[test]
    fn factorization_small_cases() {
        // x^2 - 1 = (x-1)(x+1)
        let fs = factor_irreducible(&IntPoly::from_i64(&[-1, 0, 1])).unwrap();
        assert_eq!(fs.len(), 2);
        // x^2 - x - 1 irreducible
        assert!(is_irreducible(&IntPoly::from_i64(&[-1, -1, 1])).unwrap());
        // x^4 - 4 = (x^2-2)(x^2+2)
        let fs = factor_irreducible(&IntPoly::from_i64(&[-4, 0, 0, 0, 1])).unwrap();
        assert_eq!(fs.len(), 2);
        assert!(fs.iter().all(|(f, m)| f.degree() == 2 && *m == 1));
        // x^3 - 3x^2 = x^2 (x - 3)
        let fs = factor_irreducible(&IntPoly::from_i64(&[0, 0, -3, 1])).unwrap();
        let mut degs: Vec<(usize, usize)> = fs.iter().map(|(f, m)| (f.degree(), *m)).collect();
        degs.sort();
        assert_eq!(degs, vec![(1, 1), (1, 2)]);
    }

    #[test]
    fn degree_cap_enforced() {
        let mut coeffs = vec![0i64; 14];
        coeffs[13] = 1;
        coeffs[0] = -1;
        assert!(matches!(
            factor_irreducible(&IntPoly::from_i64(&coeffs)),
            Err(PolyError::DegreeTooLarge(13, _))
        ));
    }

    #[test]
    fn root_product_contains_product() {
        // phi * sqrt2 is a root of the resultant construction.
        let p = IntPoly::from_i64(&[-1, -1, 1]);
        let q = IntPoly::from_i64(&[-2, 0, 1]);
        let r = root_product_poly(&p, &q);
        // minimal polynomial of phi*sqrt2 = sqrt2(1+sqrt5)/2: x^4 - 6x^2 + 4.
        let target = IntPoly::from_i64(&[4, 0, -6, 0, 1]);
        assert!(r.div_exact(&target).is_some());
    }

    #[test]
    fn cyclotomic_polys() {
        assert_eq!(cyclotomic(1), IntPoly::from_i64(&[-1, 1]));
        assert_eq!(cyclotomic(2), IntPoly::from_i64(&[1, 1]));
        assert_eq!(cyclotomic(3), IntPoly::from_i64(&[1, 1, 1]));
        assert_eq!(cyclotomic(4), IntPoly::from_i64(&[1, 0, 1]));
        assert_eq!(cyclotomic(6), IntPoly::from_i64(&[1, -1, 1]));
        assert_eq!(cyclotomic(12), IntPoly::from_i64(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn pretty_printing() {
        assert_eq!(IntPoly::from_i64(&[-1, -1, 1]).to_string_pretty(), "x^2-x-1");
        assert_eq!(IntPoly::from_i64(&[-4, 1]).to_string_pretty(), "x-4");
        assert_eq!(IntPoly::from_i64(&[5, 0, -3]).to_string_pretty(), "-3x^2+5");
    }
}
