//! Builders for the worked example categories (cyclic-quotient Hopf data,
//! modular cyclic groups, semisimple group categories, pointed categories),
//! finite-group plumbing, and the module-category censuses.

use crate::functors::{FunctorData, ImageSpec};
use crate::ring::{abelian_group_ring, enumerate_abelian, BasedRing};
use crate::tensorcat::TensorCatData;
use num::Integer;
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("unsupported group: {0}")]
    UnsupportedGroup(String),
}

/// A finite group given by invariant factors, or a stored nonabelian table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    /// Invariant factors n_1 | n_2 | ... , each >= 2 (empty = trivial group).
    Abelian(Vec<u64>),
    S3,
}

impl GroupSpec {
    pub fn validate(&self) -> Result<(), CatalogError> {
        if let GroupSpec::Abelian(factors) = self {
            for w in factors.windows(2) {
                if w[1] % w[0] != 0 {
                    return Err(CatalogError::BadParameter(format!(
                        "invariant factors must form a divisibility chain, got {factors:?}"
                    )));
                }
            }
            if factors.iter().any(|&f| f < 2) {
                return Err(CatalogError::BadParameter(
                    "invariant factors must be at least 2".into(),
                ));
            }
        }
        Ok(())
    }

    pub fn order(&self) -> u64 {
        match self {
            GroupSpec::Abelian(f) => f.iter().product::<u64>().max(1),
            GroupSpec::S3 => 6,
        }
    }
}

/// One classified module-category family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusEntry {
    pub description: String,
    pub simple_count: usize,
    pub parameter_dimension: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleCategoryCensus {
    pub entries: Vec<CensusEntry>,
}

// ---------------------------------------------------------------------------
// Category builders
// ---------------------------------------------------------------------------

fn identity_matrix(n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

/// Grothendieck data of the representation category of the l-dimensional
/// cyclic-quotient Hopf algebra with a degree-l nilpotent part: l invertible
/// simples indexed by characters of the grouplike, all-ones Cartan matrix,
/// uniserial projectives whose socle steps one character down.
///
/// The socle direction socle(P_i) = L_{i-1} is pinned by the explicit
/// module computation: with characters labelled by g |-> zeta^i and the
/// relation g x g^{-1} = zeta x, the nilpotent generator raises the
/// character index, so the bottom layer of P_i carries chi_{i-1}. The
/// distinguished invertible then sits at index 1.
pub fn build_taft(l: u64) -> Result<TensorCatData, CatalogError> {
    if l < 2 {
        return Err(CatalogError::BadParameter(format!("need l >= 2, got {l}")));
    }
    let n = l as usize;
    let ring = abelian_group_ring(&[l]);
    let cartan = vec![vec![1i64; n]; n];
    let socle: Vec<usize> = (0..n).map(|i| (i + n - 1) % n).collect();
    // Only the l = 2 member is quasitriangular.
    let pivotal = if l == 2 { Some(true) } else { None };
    Ok(TensorCatData::new(ring, cartan, 0, Some(socle), pivotal))
}

/// Rep of Z/p^n over a field of characteristic p: one simple, uniserial
/// regular module of length p^n.
pub fn build_modular_cyclic(p: u64, n: u32) -> Result<TensorCatData, CatalogError> {
    if !is_prime(p) {
        return Err(CatalogError::NotPrime(p));
    }
    if n < 1 {
        return Err(CatalogError::BadParameter("need n >= 1".into()));
    }
    let ring = abelian_group_ring(&[1]);
    let dim = (p as i64).pow(n);
    Ok(TensorCatData::new(
        ring,
        vec![vec![dim]],
        p,
        Some(vec![0]),
        Some(true),
    ))
}

/// Semisimple Rep(G) in characteristic zero: pointed data for abelian G,
/// stored character-table data for S3.
pub fn build_group_semisimple(spec: &GroupSpec) -> Result<TensorCatData, CatalogError> {
    spec.validate()?;
    match spec {
        GroupSpec::Abelian(factors) => build_pointed(&GroupSpec::Abelian(factors.clone()), 0),
        GroupSpec::S3 => {
            // simples: triv, sgn, std with std^2 = triv + sgn + std
            let labels = vec!["triv".to_string(), "sgn".to_string(), "std".to_string()];
            let mut fusion = vec![vec![vec![0i64; 3]; 3]; 3];
            let table: &[(usize, usize, &[usize])] = &[
                (0, 0, &[0]),
                (0, 1, &[1]),
                (0, 2, &[2]),
                (1, 0, &[1]),
                (1, 1, &[0]),
                (1, 2, &[2]),
                (2, 0, &[2]),
                (2, 1, &[2]),
                (2, 2, &[0, 1, 2]),
            ];
            for &(i, j, ks) in table {
                for &k in ks {
                    fusion[i][j][k] += 1;
                }
            }
            let ring = BasedRing {
                labels,
                unit: 0,
                fusion,
                star: vec![0, 1, 2],
            };
            Ok(TensorCatData::new(
                ring,
                identity_matrix(3),
                0,
                Some(vec![0, 1, 2]),
                Some(true),
            ))
        }
    }
}

/// Pointed category data: invertible simples forming the abelian group,
/// identity Cartan matrix, any characteristic.
pub fn build_pointed(spec: &GroupSpec, characteristic: u64) -> Result<TensorCatData, CatalogError> {
    spec.validate()?;
    let GroupSpec::Abelian(factors) = spec else {
        return Err(CatalogError::UnsupportedGroup(
            "pointed data needs an abelian group".into(),
        ));
    };
    let ring = abelian_group_ring(factors);
    let n = ring.rank();
    Ok(TensorCatData::new(
        ring,
        identity_matrix(n),
        characteristic,
        Some((0..n).collect()),
        Some(true),
    ))
}

/// The rank-2 category with X (x) X = 1 + X, semisimple.
pub fn build_fibonacci() -> TensorCatData {
    TensorCatData::new(
        crate::ring::fibonacci_ring(),
        identity_matrix(2),
        0,
        Some(vec![0, 1]),
        Some(true),
    )
}

// ---------------------------------------------------------------------------
// Functor data for the bundled examples
// ---------------------------------------------------------------------------

/// Restriction from the cyclic-quotient Hopf data to its grouplike part:
/// identity on simple labels, all-ones projective decomposition (each
/// uniserial projective restricts to one copy of every character).
pub fn taft_restriction_functor(l: u64) -> Result<FunctorData, CatalogError> {
    let source = build_taft(l)?;
    let target = build_pointed(&GroupSpec::Abelian(vec![l]), 0)?;
    let n = l as usize;
    Ok(FunctorData {
        source,
        target,
        a: identity_matrix(n),
        b: Some(vec![vec![1i64; n]; n]),
        image: ImageSpec::Semisimple,
    })
}

/// The inclusion of the grouplike part back into the cyclic-quotient data:
/// injective, not surjective; its image is the semisimple subcategory on
/// all the invertibles, so the image Cartan matrix is the identity.
pub fn taft_inclusion_functor(l: u64) -> Result<FunctorData, CatalogError> {
    let source = build_pointed(&GroupSpec::Abelian(vec![l]), 0)?;
    let target = build_taft(l)?;
    let n = l as usize;
    Ok(FunctorData {
        source,
        target,
        a: identity_matrix(n),
        b: None,
        image: ImageSpec::Semisimple,
    })
}

/// Restriction Rep(S3) -> Rep(Z/3) in characteristic zero, from the
/// character table: triv and sgn restrict trivially, std restricts to the
/// two nontrivial characters.
pub fn s3_restriction_functor() -> Result<FunctorData, CatalogError> {
    let source = build_group_semisimple(&GroupSpec::S3)?;
    let target = build_pointed(&GroupSpec::Abelian(vec![3]), 0)?;
    let a = vec![vec![1, 0, 0], vec![1, 0, 0], vec![0, 1, 1]];
    let b = vec![vec![1, 1, 0], vec![0, 0, 1], vec![0, 0, 1]];
    Ok(FunctorData {
        source,
        target,
        a,
        b: Some(b),
        image: ImageSpec::Semisimple,
    })
}

/// Center data for the pointed Z/2 category: four invertibles (grading,
/// character) with the forgetful functor remembering the grading.
pub fn z2_center_forgetful() -> Result<(TensorCatData, TensorCatData, FunctorData), CatalogError> {
    let c = build_pointed(&GroupSpec::Abelian(vec![2]), 0)?;
    // order the center labels (a, chi) with the grading a as the slow index
    let z = build_pointed(&GroupSpec::Abelian(vec![2, 2]), 0)?;
    let a = vec![vec![1, 0], vec![1, 0], vec![0, 1], vec![0, 1]];
    let b = vec![vec![1, 1, 0, 0], vec![0, 0, 1, 1]];
    let f = FunctorData {
        source: z.clone(),
        target: c.clone(),
        a,
        b: Some(b),
        image: ImageSpec::Semisimple,
    };
    Ok((c, z, f))
}

// ---------------------------------------------------------------------------
// Support decomposition
// ---------------------------------------------------------------------------

/// One connected component of the fusion support.
#[derive(Debug, Clone)]
pub struct Component {
    /// Indices into the parent ring's basis.
    pub labels: Vec<usize>,
    /// The induced based ring, when the component is fusion-closed and
    /// contains an element acting as a unit on it.
    pub ring: Option<BasedRing>,
    pub transitive: bool,
}

/// Splits a (possibly non-transitive) fusion datum into the strongly
/// connected components of its one-step reachability relation; components
/// that are fusion- and star-closed with an internal unit come back as
/// rings of their own.
pub fn decompose_components(ring: &BasedRing) -> Vec<Component> {
    let n = ring.rank();
    // reach[i][j]: some e_k * e_i contains e_j
    let mut reach = vec![vec![false; n]; n];
    for i in 0..n {
        reach[i][i] = true;
        for j in 0..n {
            if (0..n).any(|k| ring.n(k, i, j) > 0) {
                reach[i][j] = true;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            if reach[i][k] {
                for j in 0..n {
                    if reach[k][j] {
                        reach[i][j] = true;
                    }
                }
            }
        }
    }
    let mut assigned = vec![false; n];
    let mut components = Vec::new();
    for i in 0..n {
        if assigned[i] {
            continue;
        }
        let labels: Vec<usize> = (0..n)
            .filter(|&j| reach[i][j] && reach[j][i] && !assigned[j])
            .collect();
        for &j in &labels {
            assigned[j] = true;
        }
        components.push(labels);
    }
    components
        .into_iter()
        .map(|labels| {
            let inside = |x: usize| labels.contains(&x);
            // fusion and star closure
            let closed = labels.iter().all(|&i| {
                inside(ring.star(i))
                    && labels
                        .iter()
                        .all(|&j| (0..n).all(|k| ring.n(i, j, k) == 0 || inside(k)))
            });
            if !closed {
                return Component {
                    labels,
                    ring: None,
                    transitive: false,
                };
            }
            // find an internal unit
            let unit = labels.iter().copied().find(|&e| {
                labels.iter().all(|&j| {
                    labels.iter().all(|&k| {
                        ring.n(e, j, k) == i64::from(j == k)
                            && ring.n(j, e, k) == i64::from(j == k)
                    })
                })
            });
            let Some(unit) = unit else {
                return Component {
                    labels,
                    ring: None,
                    transitive: false,
                };
            };
            let s = labels.len();
            let pos = |t: usize| labels.iter().position(|&x| x == t).unwrap();
            let mut fusion = vec![vec![vec![0i64; s]; s]; s];
            for (a, &ta) in labels.iter().enumerate() {
                for (b, &tb) in labels.iter().enumerate() {
                    for (c, &tc) in labels.iter().enumerate() {
                        fusion[a][b][c] = ring.n(ta, tb, tc);
                    }
                }
            }
            let sub = BasedRing {
                labels: labels.iter().map(|&t| ring.labels[t].clone()).collect(),
                unit: pos(unit),
                fusion,
                star: labels.iter().map(|&t| pos(ring.star(t))).collect(),
            };
            let transitive = sub.is_transitive();
            Component {
                labels,
                ring: Some(sub),
                transitive,
            }
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Module-category censuses
// ---------------------------------------------------------------------------

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

/// All subgroups of the abelian group with the given invariant factors, as
/// element sets; generated by all tuples of at most rank-many elements.
pub fn abelian_subgroups(factors: &[u64]) -> Vec<Vec<Vec<u64>>> {
    let elements = enumerate_abelian(factors);
    let rank = factors.len().max(1);
    let add = |a: &[u64], b: &[u64]| -> Vec<u64> {
        a.iter()
            .zip(b)
            .zip(factors)
            .map(|((&x, &y), &m)| (x + y) % m)
            .collect()
    };
    let closure = |gens: &[Vec<u64>]| -> BTreeSet<Vec<u64>> {
        let zero = vec![0u64; factors.len()];
        let mut set: BTreeSet<Vec<u64>> = BTreeSet::new();
        set.insert(zero);
        loop {
            let mut grew = false;
            let snapshot: Vec<Vec<u64>> = set.iter().cloned().collect();
            for a in &snapshot {
                for g in gens {
                    let s = add(a, g);
                    if set.insert(s) {
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }
        set
    };
    let mut seen: BTreeSet<Vec<Vec<u64>>> = BTreeSet::new();
    let mut stack: Vec<Vec<Vec<u64>>> = vec![vec![]];
    for _ in 0..rank {
        let mut next = Vec::new();
        for gens in &stack {
            for e in &elements {
                let mut g2 = gens.clone();
                g2.push(e.clone());
                next.push(g2);
            }
        }
        stack.extend(next);
    }
    for gens in stack {
        let sub: Vec<Vec<u64>> = closure(&gens).into_iter().collect();
        seen.insert(sub);
    }
    seen.into_iter().collect()
}

/// Invariant factors of a subgroup given as an element set, recovered from
/// the p-primary order-counting profile.
pub fn invariant_factors(factors: &[u64], elements: &[Vec<u64>]) -> Vec<u64> {
    let order = elements.len() as u64;
    if order == 1 {
        return vec![];
    }
    let mut primes = Vec::new();
    let mut rest = order;
    let mut p = 2;
    while p * p <= rest {
        if rest % p == 0 {
            primes.push(p);
            while rest % p == 0 {
                rest /= p;
            }
        }
        p += 1;
    }
    if rest > 1 {
        primes.push(rest);
    }
    // exponent multiset per prime
    let mut per_prime: Vec<Vec<u32>> = Vec::new();
    for &p in &primes {
        let mut counts = vec![1u64]; // a_0 = 1
        let mut k = 1u32;
        loop {
            let pk = p.pow(k);
            let a_k = elements
                .iter()
                .filter(|e| {
                    e.iter()
                        .zip(factors)
                        .all(|(&x, &m)| (x * (pk % m)) % m == 0)
                })
                .count() as u64;
            counts.push(a_k);
            if a_k == counts[k as usize - 1] {
                break;
            }
            k += 1;
        }
        // c_k = #{cyclic p-factors with exponent >= k}
        let mut exps = Vec::new();
        for k in 1..counts.len() {
            let c_k = log_p(counts[k] / counts[k - 1], p);
            exps.push(c_k);
        }
        let mut mult = Vec::new();
        for k in 0..exps.len() {
            let next = if k + 1 < exps.len() { exps[k + 1] } else { 0 };
            for _ in 0..(exps[k] - next) {
                mult.push((k + 1) as u32);
            }
        }
        mult.sort_unstable_by(|a, b| b.cmp(a));
        per_prime.push(mult);
    }
    let width = per_prime.iter().map(|v| v.len()).max().unwrap_or(0);
    let mut descending = Vec::new();
    for j in 0..width {
        let mut m = 1u64;
        for (pi, &p) in primes.iter().enumerate() {
            if let Some(&e) = per_prime[pi].get(j) {
                m *= p.pow(e);
            }
        }
        descending.push(m);
    }
    descending.reverse();
    descending
}

fn log_p(mut n: u64, p: u64) -> u32 {
    let mut e = 0;
    while n > 1 {
        debug_assert_eq!(n % p, 0);
        n /= p;
        e += 1;
    }
    e
}

/// |H^2(H, k^*)| for finite abelian H with invariant factors m_1 | ... | m_s:
/// the exterior square has order prod_{i<j} gcd(m_i, m_j), with the p-part
/// removed in characteristic p (k^* is p-divisible without p-torsion).
pub fn schur_multiplier_order(invariants: &[u64], characteristic: u64) -> u64 {
    let mut total: u64 = 1;
    for i in 0..invariants.len() {
        for j in i + 1..invariants.len() {
            total *= invariants[i].gcd(&invariants[j]);
        }
    }
    if characteristic != 0 {
        while total % characteristic == 0 {
            total /= characteristic;
        }
    }
    total
}

/// Census of indecomposable exact module categories over the semisimple
/// group category: one per pair (subgroup H, class in the Schur multiplier
/// of H adjusted for the characteristic). Returns the total and the
/// itemized subgroup list.
pub fn count_repg_module_cats(
    spec: &GroupSpec,
    characteristic: u64,
) -> Result<(u64, Vec<(String, u64)>), CatalogError> {
    spec.validate()?;
    let GroupSpec::Abelian(factors) = spec else {
        return Err(CatalogError::UnsupportedGroup(
            "subgroup census is implemented for abelian groups".into(),
        ));
    };
    let mut items = Vec::new();
    let mut total = 0u64;
    for sub in abelian_subgroups(factors) {
        let inv = invariant_factors(factors, &sub);
        let count = schur_multiplier_order(&inv, characteristic);
        let desc = if inv.is_empty() {
            "1".to_string()
        } else {
            inv.iter()
                .map(|m| format!("Z/{m}"))
                .collect::<Vec<_>>()
                .join(" x ")
        };
        items.push((desc, count));
        total += count;
    }
    Ok((total, items))
}

/// The module-category census over the cyclic-quotient Hopf data: for each
/// divisor d of l, one nonsemisimple category with d simples and one
/// one-parameter semisimple family with d simples.
pub fn taft_module_census(l: u64) -> Result<ModuleCategoryCensus, CatalogError> {
    if l < 2 {
        return Err(CatalogError::BadParameter(format!("need l >= 2, got {l}")));
    }
    let mut entries = Vec::new();
    for d in 1..=l {
        if l % d != 0 {
            continue;
        }
        entries.push(CensusEntry {
            description: format!("nonsemisimple, {d} simples"),
            simple_count: d as usize,
            parameter_dimension: 0,
        });
        entries.push(CensusEntry {
            description: format!("semisimple one-parameter family, {d} simples"),
            simple_count: d as usize,
            parameter_dimension: 1,
        });
    }
    Ok(ModuleCategoryCensus { entries })
}
