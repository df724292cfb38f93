//! Exact ground fields for the algebra computations: the rationals, prime
//! fields, and cyclotomic fields Q(zeta_l) with arithmetic modulo the l-th
//! cyclotomic polynomial.

use crate::linalg::ExactScalar;
use crate::poly::{cyclotomic, RatPoly};
use crate::rat::format_rational;
use num::bigint::BigInt;
use num::rational::BigRational;
use num::Signed;
use std::fmt;
use std::sync::Arc;

fn q0() -> BigRational {
    num::Zero::zero()
}

fn q1() -> BigRational {
    num::One::one()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldKind {
    Rationals,
    Prime(u64),
    /// Q(zeta_l), coordinates in the power basis of zeta_l modulo the l-th
    /// cyclotomic polynomial.
    Cyclotomic(u32),
}

#[derive(Debug)]
pub struct ExactField {
    pub kind: FieldKind,
    degree: usize,
    /// Monic reduction polynomial for the cyclotomic case.
    modulus: Option<RatPoly>,
}

impl PartialEq for ExactField {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}
impl Eq for ExactField {}

impl ExactField {
    pub fn rationals() -> Arc<Self> {
        Arc::new(ExactField {
            kind: FieldKind::Rationals,
            degree: 1,
            modulus: None,
        })
    }

    pub fn prime(p: u64) -> Arc<Self> {
        assert!(is_prime(p), "prime field needs a prime modulus");
        Arc::new(ExactField {
            kind: FieldKind::Prime(p),
            degree: 1,
            modulus: None,
        })
    }

    pub fn cyclotomic(l: u32) -> Arc<Self> {
        assert!(l >= 1);
        let phi = cyclotomic(l);
        let degree = phi.degree();
        Arc::new(ExactField {
            kind: FieldKind::Cyclotomic(l),
            degree,
            modulus: Some(phi.to_rat().monic()),
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn characteristic(&self) -> u64 {
        match self.kind {
            FieldKind::Prime(p) => p,
            _ => 0,
        }
    }

    fn reduce(self: &Arc<Self>, mut coords: Vec<BigRational>) -> Vec<BigRational> {
        match &self.kind {
            FieldKind::Rationals => {
                coords.resize(1, q0());
                coords
            }
            FieldKind::Prime(p) => {
                coords.resize(1, q0());
                coords[0] = reduce_mod_p(&coords[0], *p);
                coords
            }
            FieldKind::Cyclotomic(_) => {
                let m = self.modulus.as_ref().unwrap();
                let n = self.degree;
                while coords.len() > n {
                    let top = coords.pop().unwrap();
                    if top.is_zero() {
                        continue;
                    }
                    let k = coords.len() - n;
                    for i in 0..n {
                        let delta = &top * &m.coeff(i);
                        coords[k + i] -= delta;
                    }
                }
                coords.resize(n, q0());
                coords
            }
        }
    }
}

fn reduce_mod_p(x: &BigRational, p: u64) -> BigRational {
    let p_big = BigInt::from(p);
    let num = x.numer().mod_floor_big(&p_big);
    let den = x.denom().mod_floor_big(&p_big);
    assert!(!num::Zero::is_zero(&den), "denominator divisible by the characteristic");
    let inv = mod_inverse_big(&den, &p_big);
    BigRational::from_integer((num * inv) % &p_big)
}

trait ModFloor {
    fn mod_floor_big(&self, m: &BigInt) -> BigInt;
}
impl ModFloor for BigInt {
    fn mod_floor_big(&self, m: &BigInt) -> BigInt {
        let r = self % m;
        if r.is_negative() {
            r + m
        } else {
            r
        }
    }
}

fn mod_inverse_big(a: &BigInt, p: &BigInt) -> BigInt {
    let (mut t, mut new_t) = (BigInt::from(0), BigInt::from(1));
    let (mut r, mut new_r) = (p.clone(), a.mod_floor_big(p));
    while !num::Zero::is_zero(&new_r) {
        let q = &r / &new_r;
        let tmp_t = &t - &q * &new_t;
        t = std::mem::replace(&mut new_t, tmp_t);
        let tmp_r = &r - &q * &new_r;
        r = std::mem::replace(&mut new_r, tmp_r);
    }
    debug_assert!(num::One::is_one(&r));
    t.mod_floor_big(p)
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of an [`ExactField`], carrying its field for context.
#[derive(Debug, Clone)]
pub struct FieldElem {
    field: Arc<ExactField>,
    coords: Vec<BigRational>,
}

impl FieldElem {
    pub fn new(field: Arc<ExactField>, coords: Vec<BigRational>) -> Self {
        let coords = field.reduce(coords);
        FieldElem { field, coords }
    }

    pub fn zero(field: &Arc<ExactField>) -> Self {
        FieldElem {
            coords: vec![q0(); field.degree()],
            field: field.clone(),
        }
    }

    pub fn one(field: &Arc<ExactField>) -> Self {
        let mut e = Self::zero(field);
        e.coords[0] = q1();
        e
    }

    pub fn from_rational(field: &Arc<ExactField>, r: BigRational) -> Self {
        FieldElem::new(field.clone(), vec![r])
    }

    pub fn from_integer(field: &Arc<ExactField>, n: i64) -> Self {
        Self::from_rational(field, BigRational::from_integer(BigInt::from(n)))
    }

    /// A primitive l-th root of unity, when the field has one.
    pub fn root_of_unity(field: &Arc<ExactField>, l: u32) -> Option<Self> {
        match field.kind {
            FieldKind::Rationals => match l {
                1 => Some(Self::one(field)),
                2 => Some(Self::from_integer(field, -1)),
                _ => None,
            },
            FieldKind::Prime(p) => {
                if l == 0 || (p - 1) % u64::from(l) != 0 {
                    return None;
                }
                // search for an element of exact multiplicative order l
                for a in 2..p {
                    let elem = Self::from_integer(field, a as i64);
                    if elem.pow(l).is_one()
                        && (1..l).all(|k| !elem.pow(k).is_one())
                    {
                        return Some(elem);
                    }
                }
                None
            }
            FieldKind::Cyclotomic(m) => {
                if m % l != 0 {
                    return None;
                }
                let mut gen = Self::zero(field);
                if field.degree() == 1 {
                    // zeta lives in Q for m <= 2
                    gen = Self::from_integer(field, if m == 2 { -1 } else { 1 });
                } else {
                    gen.coords[1] = q1();
                }
                Some(gen.pow(m / l))
            }
        }
    }

    pub fn field(&self) -> &Arc<ExactField> {
        &self.field
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.field);
        for _ in 0..e {
            acc = ExactScalar::mul(&acc, self);
        }
        acc
    }

    pub fn neg(&self) -> Self {
        FieldElem::new(
            self.field.clone(),
            self.coords.iter().map(|c| -c.clone()).collect(),
        )
    }

    pub fn is_one(&self) -> bool {
        self.coords[0] == q1() && self.coords[1..].iter().all(|c| c.is_zero())
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        if self.coords[1..].iter().all(|c| c.is_zero()) {
            Some(self.coords[0].clone())
        } else {
            None
        }
    }
}

impl PartialEq for FieldElem {
    fn eq(&self, other: &Self) -> bool {
        debug_assert!(self.field == other.field, "field mismatch");
        self.coords == other.coords
    }
}
impl Eq for FieldElem {}

impl ExactScalar for FieldElem {
    fn zero(&self) -> Self {
        FieldElem::zero(&self.field)
    }

    fn one(&self) -> Self {
        FieldElem::one(&self.field)
    }

    fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    fn add(&self, other: &Self) -> Self {
        debug_assert!(self.field == other.field, "field mismatch");
        FieldElem::new(
            self.field.clone(),
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    fn sub(&self, other: &Self) -> Self {
        debug_assert!(self.field == other.field, "field mismatch");
        FieldElem::new(
            self.field.clone(),
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    fn mul(&self, other: &Self) -> Self {
        debug_assert!(self.field == other.field, "field mismatch");
        match self.field.kind {
            FieldKind::Rationals | FieldKind::Prime(_) => FieldElem::new(
                self.field.clone(),
                vec![&self.coords[0] * &other.coords[0]],
            ),
            FieldKind::Cyclotomic(_) => {
                let n = self.coords.len();
                let mut raw = vec![q0(); 2 * n];
                for (i, a) in self.coords.iter().enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    for (j, b) in other.coords.iter().enumerate() {
                        raw[i + j] += a * b;
                    }
                }
                FieldElem::new(self.field.clone(), raw)
            }
        }
    }

    fn inv(&self) -> Self {
        assert!(!ExactScalar::is_zero(self), "division by zero");
        match self.field.kind {
            FieldKind::Rationals => FieldElem::new(
                self.field.clone(),
                vec![q1() / &self.coords[0]],
            ),
            FieldKind::Prime(p) => {
                let p_big = BigInt::from(p);
                let a = self.coords[0].numer().mod_floor_big(&p_big);
                FieldElem::new(
                    self.field.clone(),
                    vec![BigRational::from_integer(mod_inverse_big(&a, &p_big))],
                )
            }
            FieldKind::Cyclotomic(_) => {
                let a = RatPoly::new(self.coords.clone());
                let m = self.field.modulus.as_ref().unwrap().clone();
                let (g, s) = half_ext_gcd(&a, &m);
                debug_assert!(g.degree() == 0 && !g.is_zero());
                let scale = q1() / g.coeff(0);
                FieldElem::new(self.field.clone(), s.scale(&scale).0)
            }
        }
    }
}

fn half_ext_gcd(a: &RatPoly, m: &RatPoly) -> (RatPoly, RatPoly) {
    let mut r0 = a.clone();
    let mut r1 = m.clone();
    let mut s0 = RatPoly::new(vec![q1()]);
    let mut s1 = RatPoly::zero();
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1);
        let s = s0.sub(&q.mul(&s1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
    }
    (r0, s0)
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let body = match i {
                0 => format_rational(c),
                1 => format!("{}*z", format_rational(c)),
                _ => format!("{}*z^{}", format_rational(c), i),
            };
            parts.push(body);
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join("+"))
        }
    }
}

/// Parses a scalar literal: "p/q" for the rational part, or coordinate
/// arrays like "[1, -1/2]" in the zeta power basis.
pub fn parse_scalar(field: &Arc<ExactField>, s: &str) -> Result<FieldElem, String> {
    let s = s.trim();
    if let Some(inner) = s.strip_prefix('[').and_then(|x| x.strip_suffix(']')) {
        let coords: Result<Vec<BigRational>, String> = inner
            .split(',')
            .map(|piece| crate::rat::parse_rational(piece))
            .collect();
        return Ok(FieldElem::new(field.clone(), coords?));
    }
    Ok(FieldElem::from_rational(
        field,
        crate::rat::parse_rational(s)?,
    ))
}
