//! Based rings with nonnegative structure constants: validation of fusion
//! data, multiplication matrices, transitivity, and the duality
//! anti-automorphism.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("vector length {0} does not match ring rank {1}")]
    LengthMismatch(usize, usize),
    #[error("unknown label {0:?}")]
    UnknownLabel(String),
    #[error("malformed ring data: {0}")]
    Malformed(String),
}

/// Which side a multiplication matrix acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A unital ring with a distinguished basis, nonnegative integer structure
/// constants `fusion[i][j][k]`, and a duality bijection `star` acting as an
/// anti-automorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasedRing {
    pub labels: Vec<String>,
    pub unit: usize,
    pub fusion: Vec<Vec<Vec<i64>>>,
    pub star: Vec<usize>,
}

/// An element of the ring in the distinguished basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrVector(pub Vec<i64>);

impl GrVector {
    pub fn basis(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        GrVector(v)
    }

    pub fn zero(rank: usize) -> Self {
        GrVector(vec![0; rank])
    }
}

/// One violated invariant, with a witness index tuple.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub code: String,
    pub message: String,
    pub witness: Vec<usize>,
}

impl BasedRing {
    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn n(&self, i: usize, j: usize, k: usize) -> i64 {
        self.fusion[i][j][k]
    }

    pub fn star(&self, i: usize) -> usize {
        self.star[i]
    }

    pub fn star_inv(&self, i: usize) -> usize {
        self.star
            .iter()
            .position(|&s| s == i)
            .expect("star is a bijection")
    }

    pub fn label_index(&self, name: &str) -> Result<usize, RingError> {
        self.labels
            .iter()
            .position(|l| l == name)
            .ok_or_else(|| RingError::UnknownLabel(name.to_string()))
    }

    fn check_len(&self, v: &GrVector) -> Result<(), RingError> {
        if v.0.len() != self.rank() {
            Err(RingError::LengthMismatch(v.0.len(), self.rank()))
        } else {
            Ok(())
        }
    }

    /// Checks every based-ring axiom, returning one entry per violation.
    /// An empty report means the data is a valid based ring. With
    /// `strict_semisimple` the coevaluation lower bound is upgraded to the
    /// delta-condition `N[i][j][unit] = delta(j, i*)`.
    pub fn validate(&self, strict_semisimple: bool) -> Vec<Violation> {
        let mut out = Vec::new();
        let n = self.rank();
        // shape
        if self.unit >= n || self.star.len() != n || self.fusion.len() != n {
            out.push(Violation {
                code: "shape".into(),
                message: "index data does not match rank".into(),
                witness: vec![],
            });
            return out;
        }
        for i in 0..n {
            if self.fusion[i].len() != n || self.fusion[i].iter().any(|r| r.len() != n) {
                out.push(Violation {
                    code: "shape".into(),
                    message: format!("fusion tensor slice {i} is not {n}x{n}"),
                    witness: vec![i],
                });
                return out;
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if self.n(i, j, k) < 0 {
                        out.push(Violation {
                            code: "negativity".into(),
                            message: "negative structure constant".into(),
                            witness: vec![i, j, k],
                        });
                    }
                }
            }
        }
        // star bijection
        let mut seen = vec![false; n];
        for i in 0..n {
            if self.star[i] >= n || seen[self.star[i]] {
                out.push(Violation {
                    code: "star_bijection".into(),
                    message: "star is not a bijection".into(),
                    witness: vec![i],
                });
                return out;
            }
            seen[self.star[i]] = true;
        }
        if self.star[self.unit] != self.unit {
            out.push(Violation {
                code: "star_unit".into(),
                message: "star does not fix the unit".into(),
                witness: vec![self.unit],
            });
        }
        // unit laws
        for j in 0..n {
            for k in 0..n {
                let want = i64::from(j == k);
                if self.n(self.unit, j, k) != want {
                    out.push(Violation {
                        code: "unit_left".into(),
                        message: "left unit law fails".into(),
                        witness: vec![j, k],
                    });
                }
                if self.n(j, self.unit, k) != want {
                    out.push(Violation {
                        code: "unit_right".into(),
                        message: "right unit law fails".into(),
                        witness: vec![j, k],
                    });
                }
            }
        }
        // associativity
        'assoc: for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        let lhs: i64 = (0..n).map(|m| self.n(i, j, m) * self.n(m, k, l)).sum();
                        let rhs: i64 = (0..n).map(|m| self.n(j, k, m) * self.n(i, m, l)).sum();
                        if lhs != rhs {
                            out.push(Violation {
                                code: "associativity".into(),
                                message: "associativity fails".into(),
                                witness: vec![i, j, k, l],
                            });
                            // one witness per (i,j) pair keeps reports short
                            continue 'assoc;
                        }
                    }
                }
            }
        }
        // duality anti-automorphism
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if self.n(i, j, k) != self.n(self.star[j], self.star[i], self.star[k]) {
                        out.push(Violation {
                            code: "star_antiautomorphism".into(),
                            message: "star is not an anti-automorphism".into(),
                            witness: vec![i, j, k],
                        });
                    }
                }
            }
        }
        // coevaluation bound
        for i in 0..n {
            if strict_semisimple {
                for j in 0..n {
                    let want = i64::from(j == self.star[i]);
                    if self.n(i, j, self.unit) != want {
                        out.push(Violation {
                            code: "coevaluation_strict".into(),
                            message: "semisimple delta-condition fails at the unit".into(),
                            witness: vec![i, j],
                        });
                    }
                }
            } else if self.n(i, self.star[i], self.unit) < 1 {
                out.push(Violation {
                    code: "coevaluation".into(),
                    message: "unit does not embed in L_i (x) L_i*".into(),
                    witness: vec![i],
                });
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate(false).is_empty()
    }

    /// Matrix of multiplication by `x`: left gives `M[k][j]` = coefficient of
    /// basis k in x * e_j, right gives the coefficient of basis k in e_j * x.
    pub fn mult_matrix(&self, x: &GrVector, side: Side) -> Result<Vec<Vec<i64>>, RingError> {
        self.check_len(x)?;
        let n = self.rank();
        let mut m = vec![vec![0i64; n]; n];
        for k in 0..n {
            for j in 0..n {
                m[k][j] = (0..n)
                    .map(|i| match side {
                        Side::Left => x.0[i] * self.n(i, j, k),
                        Side::Right => x.0[i] * self.n(j, i, k),
                    })
                    .sum();
            }
        }
        Ok(m)
    }

    pub fn basis_mult_matrix(&self, i: usize, side: Side) -> Vec<Vec<i64>> {
        self.mult_matrix(&GrVector::basis(self.rank(), i), side)
            .expect("basis vector has the right length")
    }

    /// Sum of all left multiplication matrices.
    pub fn total_mult_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank();
        let mut t = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    t[k][j] += self.n(i, j, k);
                }
            }
        }
        t
    }

    /// True iff for every pair (i, j) some basis element's left multiple of
    /// e_i contains e_j. One-step reachability is transitively closed in a
    /// based ring, so this is equivalent to irreducibility of the total
    /// multiplication matrix.
    pub fn is_transitive(&self) -> bool {
        let n = self.rank();
        for i in 0..n {
            for j in 0..n {
                if !(0..n).any(|k| self.n(k, i, j) > 0) {
                    return false;
                }
            }
        }
        true
    }

    /// Bilinear extension of the fusion rules.
    pub fn gr_mul(&self, x: &GrVector, y: &GrVector) -> Result<GrVector, RingError> {
        self.check_len(x)?;
        self.check_len(y)?;
        let n = self.rank();
        let mut out = vec![0i64; n];
        for i in 0..n {
            if x.0[i] == 0 {
                continue;
            }
            for j in 0..n {
                if y.0[j] == 0 {
                    continue;
                }
                for k in 0..n {
                    out[k] += x.0[i] * y.0[j] * self.n(i, j, k);
                }
            }
        }
        Ok(GrVector(out))
    }

    /// Applies star to a vector: the class of the right dual.
    pub fn star_vector(&self, x: &GrVector) -> Result<GrVector, RingError> {
        self.check_len(x)?;
        let mut out = vec![0i64; self.rank()];
        for (i, &c) in x.0.iter().enumerate() {
            out[self.star[i]] += c;
        }
        Ok(GrVector(out))
    }
}

// ---------------------------------------------------------------------------
// JSON schema
// ---------------------------------------------------------------------------

/// Serialized form: fusion keys are "i|j" with a sparse inner map; absent
/// entries are zero.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RingJson {
    pub labels: Vec<String>,
    pub unit: String,
    pub star: BTreeMap<String, String>,
    pub fusion: BTreeMap<String, BTreeMap<String, i64>>,
}

impl RingJson {
    pub fn from_ring(r: &BasedRing) -> Self {
        let mut fusion = BTreeMap::new();
        for i in 0..r.rank() {
            for j in 0..r.rank() {
                let mut inner = BTreeMap::new();
                for k in 0..r.rank() {
                    if r.n(i, j, k) != 0 {
                        inner.insert(r.labels[k].clone(), r.n(i, j, k));
                    }
                }
                if !inner.is_empty() {
                    fusion.insert(format!("{}|{}", r.labels[i], r.labels[j]), inner);
                }
            }
        }
        RingJson {
            labels: r.labels.clone(),
            unit: r.labels[r.unit].clone(),
            star: r
                .labels
                .iter()
                .enumerate()
                .map(|(i, l)| (l.clone(), r.labels[r.star[i]].clone()))
                .collect(),
            fusion,
        }
    }

    pub fn to_ring(&self) -> Result<BasedRing, RingError> {
        let n = self.labels.len();
        let index = |name: &str| -> Result<usize, RingError> {
            self.labels
                .iter()
                .position(|l| l == name)
                .ok_or_else(|| RingError::UnknownLabel(name.to_string()))
        };
        let unit = index(&self.unit)?;
        let mut star = vec![usize::MAX; n];
        for (a, b) in &self.star {
            star[index(a)?] = index(b)?;
        }
        if star.iter().any(|&s| s == usize::MAX) {
            return Err(RingError::Malformed("star map is not total".into()));
        }
        let mut fusion = vec![vec![vec![0i64; n]; n]; n];
        for (key, inner) in &self.fusion {
            let (a, b) = key
                .split_once('|')
                .ok_or_else(|| RingError::Malformed(format!("bad fusion key {key:?}")))?;
            let i = index(a)?;
            let j = index(b)?;
            for (c, &v) in inner {
                fusion[i][j][index(c)?] = v;
            }
        }
        Ok(BasedRing {
            labels: self.labels.clone(),
            unit,
            fusion,
            star,
        })
    }
}

// ---------------------------------------------------------------------------
// Small constructors shared by tests and the catalog
// ---------------------------------------------------------------------------

/// Group ring of Z/n1 x ... x Z/nk with star = inversion.
pub fn abelian_group_ring(factors: &[u64]) -> BasedRing {
    let elements = enumerate_abelian(factors);
    let n = elements.len();
    let index = |e: &Vec<u64>| elements.iter().position(|x| x == e).unwrap();
    let mut fusion = vec![vec![vec![0i64; n]; n]; n];
    let mut star = vec![0usize; n];
    for (i, a) in elements.iter().enumerate() {
        let inv: Vec<u64> = a
            .iter()
            .zip(factors)
            .map(|(&x, &m)| (m - x % m) % m)
            .collect();
        star[i] = index(&inv);
        for (j, b) in elements.iter().enumerate() {
            let sum: Vec<u64> = a
                .iter()
                .zip(b.iter())
                .zip(factors)
                .map(|((&x, &y), &m)| (x + y) % m)
                .collect();
            fusion[i][j][index(&sum)] = 1;
        }
    }
    let labels = elements
        .iter()
        .map(|e| {
            if e.is_empty() {
                "0".to_string()
            } else {
                e.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            }
        })
        .collect();
    BasedRing {
        labels,
        unit: 0,
        fusion,
        star,
    }
}

/// All elements of the abelian group with the given cyclic factors, unit
/// first, in lexicographic order.
pub fn enumerate_abelian(factors: &[u64]) -> Vec<Vec<u64>> {
    let mut out = vec![vec![]];
    for &m in factors {
        let mut next = Vec::new();
        for e in &out {
            for x in 0..m {
                let mut e2 = e.clone();
                e2.push(x);
                next.push(e2);
            }
        }
        out = next;
    }
    out
}

/// The rank-2 ring with X*X = 1 + X and star = id.
pub fn fibonacci_ring() -> BasedRing {
    BasedRing {
        labels: vec!["1".into(), "X".into()],
        unit: 0,
        fusion: vec![
            vec![vec![1, 0], vec![0, 1]],
            vec![vec![0, 1], vec![1, 1]],
        ],
        star: vec![0, 1],
    }
}
