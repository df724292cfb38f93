//! Generic exact linear algebra over any field-like scalar: rank, kernel,
//! and an incremental row-reduced span used by the operator-closure and
//! filtration computations.

use num::rational::BigRational;

/// Minimal field interface for exact elimination.
pub trait ExactScalar: Clone + PartialEq {
    fn zero(&self) -> Self;
    fn one(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn inv(&self) -> Self;
}

impl ExactScalar for BigRational {
    fn zero(&self) -> Self {
        <BigRational as num::Zero>::zero()
    }
    fn one(&self) -> Self {
        <BigRational as num::One>::one()
    }
    fn is_zero(&self) -> bool {
        <BigRational as num::Zero>::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn inv(&self) -> Self {
        <BigRational as num::One>::one() / self
    }
}

/// A growing row-echelon basis of a subspace; rows kept pivot-normalized.
#[derive(Debug, Clone)]
pub struct Span<S: ExactScalar> {
    dim: usize,
    rows: Vec<Vec<S>>,
    pivots: Vec<usize>,
}

impl<S: ExactScalar> Span<S> {
    pub fn new(dim: usize) -> Self {
        Span {
            dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<S>] {
        &self.rows
    }

    /// Reduces `v` against the current basis, in place.
    pub fn reduce(&self, v: &mut Vec<S>) {
        debug_assert_eq!(v.len(), self.dim);
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let c = v[p].clone();
            for j in 0..self.dim {
                let d = c.mul(&row[j]);
                v[j] = v[j].sub(&d);
            }
        }
    }

    /// Inserts a vector; returns true if it enlarged the span.
    pub fn insert(&mut self, mut v: Vec<S>) -> bool {
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let inv = v[p].inv();
        for c in v.iter_mut() {
            *c = c.mul(&inv);
        }
        // Back-substitute into earlier rows to keep full reduction.
        for (row, &rp) in self.rows.iter_mut().zip(&self.pivots) {
            let _ = rp;
            if !row[p].is_zero() {
                let c = row[p].clone();
                for j in 0..self.dim {
                    let d = c.mul(&v[j]);
                    row[j] = row[j].sub(&d);
                }
            }
        }
        // Keep rows ordered by pivot.
        let idx = self.pivots.partition_point(|&q| q < p);
        self.rows.insert(idx, v);
        self.pivots.insert(idx, p);
        true
    }

    pub fn contains(&self, v: &[S]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|c| c.is_zero())
    }

    pub fn is_full(&self) -> bool {
        self.rank() == self.dim
    }
}

/// Rank of a matrix over the scalar field.
pub fn rank<S: ExactScalar>(rows: &[Vec<S>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let mut span = Span::new(rows[0].len());
    for r in rows {
        span.insert(r.clone());
    }
    span.rank()
}

/// Kernel basis of the linear map given by `rows` (each row one equation in
/// `cols` unknowns): all v with rows * v = 0.
pub fn kernel<S: ExactScalar>(rows: &[Vec<S>], cols: usize, zero: &S, one: &S) -> Vec<Vec<S>> {
    let mut a: Vec<Vec<S>> = rows.to_vec();
    let n = a.len();
    let mut pivots: Vec<usize> = Vec::new();
    let mut rank = 0usize;
    for col in 0..cols {
        let piv = (rank..n).find(|&r| !a[r][col].is_zero());
        let Some(piv) = piv else { continue };
        a.swap(rank, piv);
        let inv = a[rank][col].inv();
        for j in 0..cols {
            a[rank][j] = a[rank][j].mul(&inv);
        }
        for r in 0..n {
            if r != rank && !a[r][col].is_zero() {
                let c = a[r][col].clone();
                for j in 0..cols {
                    let d = c.mul(&a[rank][j]);
                    a[r][j] = a[r][j].sub(&d);
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = vec![zero.clone(); cols];
        v[free] = one.clone();
        for (r, &pc) in pivots.iter().enumerate() {
            let c = a[r][free].clone();
            v[pc] = zero.sub(&c);
        }
        basis.push(v);
    }
    basis
}

/// Rank of an integer matrix over the prime field F_p.
pub fn rank_mod_p(rows: &[Vec<i64>], p: u64) -> usize {
    let p = p as i64;
    let mut a: Vec<Vec<i64>> = rows
        .iter()
        .map(|r| r.iter().map(|&c| c.rem_euclid(p)).collect())
        .collect();
    let n = a.len();
    if n == 0 {
        return 0;
    }
    let cols = a[0].len();
    let mut rank = 0usize;
    for col in 0..cols {
        let piv = (rank..n).find(|&r| a[r][col] % p != 0);
        let Some(piv) = piv else { continue };
        a.swap(rank, piv);
        let inv = mod_inverse(a[rank][col], p);
        for j in 0..cols {
            a[rank][j] = (a[rank][j] * inv).rem_euclid(p);
        }
        for r in 0..n {
            if r != rank && a[r][col] != 0 {
                let c = a[r][col];
                for j in 0..cols {
                    a[r][j] = (a[r][j] - c * a[rank][j]).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn mod_inverse(a: i64, p: i64) -> i64 {
    // extended Euclid; p prime, a nonzero mod p
    let (mut t, mut new_t) = (0i64, 1i64);
    let (mut r, mut new_r) = (p, a.rem_euclid(p));
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1, "inverse of a unit mod a prime");
    t.rem_euclid(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    #[test]
    fn span_and_rank() {
        let mut s: Span<BigRational> = Span::new(3);
        assert!(s.insert(vec![rat(1), rat(2), rat(3)]));
        assert!(s.insert(vec![rat(0), rat(1), rat(1)]));
        assert!(!s.insert(vec![rat(1), rat(3), rat(4)]));
        assert_eq!(s.rank(), 2);
        assert!(s.contains(&[rat(2), rat(5), rat(7)]));
        assert!(!s.contains(&[rat(0), rat(0), rat(1)]));
    }

    #[test]
    fn kernel_of_rank_one() {
        let rows = vec![vec![rat(1), rat(1)]];
        let k = kernel(&rows, 2, &rat(0), &rat(1));
        assert_eq!(k.len(), 1);
        assert_eq!(k[0], vec![rat(-1), rat(1)]);
    }

    #[test]
    fn rank_mod_p_examples() {
        // [p] over F_p has rank 0
        assert_eq!(rank_mod_p(&[vec![5]], 5), 0);
        assert_eq!(rank_mod_p(&[vec![1, 1], vec![1, 1]], 2), 1);
        assert_eq!(rank_mod_p(&[vec![1, 0], vec![0, 1]], 3), 2);
    }
}
