//! Hecke congruence subgroups: coset enumeration over the projective line
//! mod n, the induced permutation representation, the upper-triangular
//! families X_m with their Hecke elements T(p) and U(q), and the coset
//! bookkeeping maps sigma_g and phi_A.
//!
//! Right cosets of the level-n subgroup in SL(2,Z) are classified by the
//! bottom row (c : d) mod n up to multiplication by a unit. The table
//! stores one lifted representative per projective point together with a
//! hash map from the canonical point to the 1-based coset index, so
//! identification is a single normalization instead of mu membership tests.

use std::collections::HashMap;
use std::fmt;

use num_integer::Integer;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::formal_sum::FormalSum;
use crate::mat2::Mat2;

/// True iff g has determinant 1 and lower-left entry divisible by n.
pub fn in_gamma0(g: &Mat2, n: i64) -> bool {
    g.is_gamma0(n)
}

/// Trial-division primality check; inputs here are desk scale.
pub fn is_prime(n: i64) -> bool {
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

/// Coset table for the level-n congruence subgroup inside SL(2,Z).
#[derive(Clone, Debug)]
pub struct CosetTable {
    n: i64,
    reps: Vec<Mat2>,
    units: Vec<i64>,
    index: HashMap<(i64, i64), usize>,
}

impl PartialEq for CosetTable {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.reps == other.reps
    }
}

impl Eq for CosetTable {}

fn units_mod(n: i64) -> Vec<i64> {
    (1..=n.max(1)).filter(|u| u.gcd(&n) == 1).collect()
}

/// Canonical representative of the unit-scaling orbit of (c : d) mod n:
/// the lexicographically smallest pair among all unit multiples.
fn normalize_point(n: i64, units: &[i64], c: i64, d: i64) -> (i64, i64) {
    let c = c.rem_euclid(n);
    let d = d.rem_euclid(n);
    units
        .iter()
        .map(|&u| ((u * c).rem_euclid(n), (u * d).rem_euclid(n)))
        .min()
        .expect("unit group is never empty")
}

/// Lift a projective point (c : d) mod n to an SL(2,Z) matrix with bottom
/// row congruent to a representative of the same orbit.
fn lift_point(n: i64, c: i64, d: i64) -> Mat2 {
    // Adjust d by multiples of n until the bottom row is coprime; this
    // terminates because gcd(c, d, n) = 1.
    let (c0, mut d0) = (c, d);
    if c0 == 0 {
        return Mat2::new(1, 0, 0, 1);
    }
    while c0.gcd(&d0) != 1 {
        d0 += n;
    }
    // Top row from Bezout: a*d0 - b*c0 = 1.
    let gcd = d0.extended_gcd(&c0);
    debug_assert_eq!(gcd.gcd, 1);
    let m = Mat2::new(gcd.x, -gcd.y, c0, d0);
    debug_assert!(m.is_sl2());
    m
}

impl CosetTable {
    /// Enumerate the projective line mod n and lift one representative per
    /// point. Level 2 uses the fixed representatives I, S, ST.
    pub fn new(n: i64) -> Result<CosetTable> {
        if n < 1 {
            return Err(Error::InvalidLevel(n));
        }
        if n == 2 {
            return CosetTable::with_reps(
                2,
                vec![Mat2::I, Mat2::S, Mat2::S.mul(&Mat2::T)],
            );
        }
        let units = units_mod(n);
        let mut points: Vec<(i64, i64)> = Vec::new();
        for c in 0..n {
            for d in 0..n {
                if c.gcd(&d).gcd(&n) == 1 {
                    points.push(normalize_point(n, &units, c, d));
                }
            }
        }
        points.sort_unstable();
        points.dedup();
        let reps: Vec<Mat2> = points.iter().map(|&(c, d)| lift_point(n, c, d)).collect();
        let index = points.into_iter().enumerate().map(|(i, p)| (p, i)).collect();
        Ok(CosetTable { n, reps, units, index })
    }

    /// Build a table from user-supplied representatives. They must be
    /// unimodular, pairwise inequivalent, and exactly one per coset.
    pub fn with_reps(n: i64, reps: Vec<Mat2>) -> Result<CosetTable> {
        if n < 1 {
            return Err(Error::InvalidLevel(n));
        }
        let units = units_mod(n);
        let mu = {
            let mut points: Vec<(i64, i64)> = Vec::new();
            for c in 0..n {
                for d in 0..n {
                    if c.gcd(&d).gcd(&n) == 1 {
                        points.push(normalize_point(n, &units, c, d));
                    }
                }
            }
            points.sort_unstable();
            points.dedup();
            points.len()
        };
        if reps.len() != mu {
            return Err(Error::InvalidReps(format!(
                "level {n} has index {mu}, got {} representatives",
                reps.len()
            )));
        }
        let mut index = HashMap::new();
        for (i, rep) in reps.iter().enumerate() {
            if !rep.is_sl2() {
                return Err(Error::InvalidReps(format!(
                    "representative {rep} has determinant {}",
                    rep.det()
                )));
            }
            let p = normalize_point(n, &units, rep.c, rep.d);
            if index.insert(p, i).is_some() {
                return Err(Error::InvalidReps(format!(
                    "representative {rep} is equivalent to an earlier one"
                )));
            }
        }
        Ok(CosetTable { n, reps, units, index })
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    /// The index mu of the subgroup.
    pub fn mu(&self) -> usize {
        self.reps.len()
    }

    pub fn reps(&self) -> &[Mat2] {
        &self.reps
    }

    /// 1-based representative access.
    pub fn rep(&self, i: usize) -> &Mat2 {
        &self.reps[i - 1]
    }

    /// The 1-based index j with g in the coset of alpha_j, read off the
    /// bottom row of g.
    pub fn coset_index(&self, g: &Mat2) -> usize {
        assert!(g.is_sl2(), "coset index is defined on SL(2,Z) only");
        let p = normalize_point(self.n, &self.units, g.c, g.d);
        let i = *self
            .index
            .get(&p)
            .expect("every unimodular bottom row normalizes into the table");
        debug_assert!(in_gamma0(&g.mul(&self.reps[i].inv_unimodular().unwrap()), self.n));
        i + 1
    }

    /// Membership-test fallback for the same index; kept as the oracle the
    /// hash lookup is checked against.
    pub fn coset_index_by_membership(&self, g: &Mat2) -> usize {
        assert!(g.is_sl2());
        let hits: Vec<usize> = self
            .reps
            .iter()
            .enumerate()
            .filter(|(_, rep)| in_gamma0(&g.mul(&rep.inv_unimodular().unwrap()), self.n))
            .map(|(i, _)| i + 1)
            .collect();
        assert_eq!(hits.len(), 1, "cosets partition the group");
        hits[0]
    }
}

impl Serialize for CosetTable {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            n: i64,
            mu: usize,
            reps: &'a [Mat2],
        }
        Repr { n: self.n, mu: self.mu(), reps: &self.reps }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CosetTable {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            n: i64,
            #[serde(default)]
            mu: Option<usize>,
            reps: Vec<Mat2>,
        }
        let r = Repr::deserialize(deserializer)?;
        if let Some(mu) = r.mu {
            if mu != r.reps.len() {
                return Err(D::Error::custom(format!(
                    "mu = {mu} does not match {} representatives",
                    r.reps.len()
                )));
            }
        }
        CosetTable::with_reps(r.n, r.reps).map_err(D::Error::custom)
    }
}

/// Enumerate the right cosets of the level-n subgroup.
pub fn cosets(n: i64) -> Result<CosetTable> {
    CosetTable::new(n)
}

/// A permutation of {1, ..., mu}, stored as the 1-based image array.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Permutation {
    map: Vec<usize>,
}

impl Permutation {
    pub fn new(map: Vec<usize>) -> Permutation {
        let mu = map.len();
        let mut seen = vec![false; mu];
        for &k in &map {
            assert!(k >= 1 && k <= mu && !std::mem::replace(&mut seen[k - 1], true),
                "permutation images must be a bijection of 1..=mu");
        }
        Permutation { map }
    }

    pub fn identity(mu: usize) -> Permutation {
        Permutation::new((1..=mu).collect())
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// Image of the 1-based index i.
    pub fn apply(&self, i: usize) -> usize {
        self.map[i - 1]
    }

    /// The 1-based image array.
    pub fn mapping(&self) -> &[usize] {
        &self.map
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &k)| k == i + 1)
    }

    /// 0/1 matrix view: entry (i, j) is 1 iff j is the image of i.
    pub fn matrix(&self) -> Vec<Vec<u8>> {
        let mu = self.map.len();
        let mut m = vec![vec![0u8; mu]; mu];
        for (i, &k) in self.map.iter().enumerate() {
            m[i][k - 1] = 1;
        }
        m
    }

    /// Matrix product self * other as permutation matrices; the result maps
    /// i to self's image chased through other.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len());
        Permutation::new((1..=self.len()).map(|i| other.apply(self.apply(i))).collect())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, k) in self.map.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{k}")?;
        }
        write!(f, "]")
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.map.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let map = Vec::<usize>::deserialize(deserializer)?;
        let mu = map.len();
        let mut seen = vec![false; mu];
        for &k in &map {
            if k < 1 || k > mu || std::mem::replace(&mut seen[k - 1], true) {
                return Err(D::Error::custom("not a bijection of 1..=mu"));
            }
        }
        Ok(Permutation { map })
    }
}

/// The induced permutation representation: row i of rho(g) has its 1 in the
/// column of the coset of alpha_i * g, so applying rho(g) to a vector reads
/// component i from that coset's slot.
pub fn rho(g: &Mat2, table: &CosetTable) -> Permutation {
    assert!(g.is_sl2(), "rho is defined on SL(2,Z) only");
    Permutation::new(
        table
            .reps()
            .iter()
            .map(|alpha| table.coset_index(&alpha.mul(g)))
            .collect(),
    )
}

/// The upper-triangular matrices (a b; 0 d) with ad = m and 0 <= b < d,
/// ordered by ascending a then b.
pub fn x_m(m: i64) -> Vec<Mat2> {
    assert!(m >= 1, "x_m requires m >= 1");
    let mut out = Vec::new();
    for a in 1..=m {
        if m % a != 0 {
            continue;
        }
        let d = m / a;
        for b in 0..d {
            out.push(Mat2::new(a, b, 0, d));
        }
    }
    out
}

/// The p-th Hecke element: the sum over all of X_p.
pub fn t_p(p: i64) -> Result<FormalSum> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(FormalSum::from_terms(x_m(p).into_iter().map(|m| (1, m))))
}

/// The q-th Hecke element for q dividing the level: X_q without (q 0; 0 1).
pub fn u_q(q: i64) -> Result<FormalSum> {
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    Ok(FormalSum::from_terms((0..q).map(|b| (1, Mat2::new(1, b, 0, q)))))
}

/// The unique U in X_m with A * g * U^{-1} unimodular, read off the Hermite
/// decomposition of A * g.
pub fn sigma(g: &Mat2, a: &Mat2) -> Mat2 {
    assert!(g.is_sl2(), "sigma requires a unimodular g");
    assert!(a.is_x_m(), "sigma acts on the upper-triangular family");
    let (_, u) = a.mul(g).hnf_upper().expect("det(A g) = det(A) > 0");
    u
}

/// The index map j -> phi_A(j) defined by A alpha_j lying in the coset of
/// alpha_{phi_A(j)} * sigma_{alpha_j}(A). Returned as the 1-based image
/// array; the map need not be injective.
pub fn phi(a: &Mat2, table: &CosetTable) -> Vec<usize> {
    assert!(a.is_x_m(), "phi is defined for the upper-triangular family");
    table
        .reps()
        .iter()
        .map(|alpha| {
            let (g, _u) = a.mul(alpha).hnf_upper().expect("det(A alpha) > 0");
            debug_assert!(g.is_sl2());
            table.coset_index(&g)
        })
        .collect()
}
