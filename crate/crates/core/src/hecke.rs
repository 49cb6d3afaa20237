//! Hecke operators on period functions as exact formal-sum data.
//!
//! At level 1 the m-th operator is the single formal sum built by rewriting
//! each upper-triangular A through the left neighbor chain of A0. At higher
//! levels the operator becomes a mu x mu grid of formal sums: the left
//! neighbor factors m_l additionally permute the vector components through
//! the induced representation, and the coset bookkeeping of sigma and phi
//! decides which component each slashed matrix acts on.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::congruence::{is_prime, x_m, CosetTable};
use crate::error::{Error, Result};
use crate::farey::m_chain;
use crate::formal_sum::FormalSum;
use crate::mat2::Mat2;
use crate::rational::ExtRational;

/// The level-1 Hecke sum: for each A in X_m, the ordered factors of
/// M(A0) multiplied onto A, all collected into one canonical sum.
pub fn h_tilde_level1(m: i64) -> Result<FormalSum> {
    if m < 1 {
        return Err(Error::OutOfDomain(format!("degree must be >= 1 (got {m})")));
    }
    let mut acc = FormalSum::zero();
    for a in x_m(m) {
        let q = a.act(ExtRational::ZERO);
        let shifted = crate::farey::m_of(q)?.mat_mul_right(&a);
        acc = acc.add(&shifted);
    }
    Ok(acc)
}

/// Independent enumeration of the matrices with determinant m, a > c >= 0
/// and d > b >= 0. Exhausts the search space directly: the determinant
/// equation forces a + d <= m + 1, so both diagonal entries are bounded.
pub fn s_m_oracle(m: i64) -> BTreeSet<Mat2> {
    assert!(m >= 1, "s_m_oracle requires m >= 1");
    let mut out = BTreeSet::new();
    for a in 1..=m {
        for d in 1..=(m + 1 - a) {
            for b in 0..d {
                for c in 0..a {
                    if a * d - b * c == m {
                        out.insert(Mat2::new(a, b, c, d));
                    }
                }
            }
        }
    }
    out
}

/// The m-th Hecke operator at level n as a mu x mu grid of formal sums.
///
/// Cell (j, k) collects the matrices that act on source component k and
/// contribute to output component j; both indices are 1-based.
#[derive(Clone, PartialEq, Debug)]
pub struct HeckeRep {
    n: i64,
    m: i64,
    table: CosetTable,
    grid: Vec<Vec<FormalSum>>,
}

impl HeckeRep {
    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn mu(&self) -> usize {
        self.table.mu()
    }

    pub fn table(&self) -> &CosetTable {
        &self.table
    }

    pub fn grid(&self) -> &[Vec<FormalSum>] {
        &self.grid
    }

    /// 1-based cell access.
    pub fn cell(&self, j: usize, k: usize) -> &FormalSum {
        &self.grid[j - 1][k - 1]
    }

    /// Total term weight of row j (1-based).
    pub fn row_term_count(&self, j: usize) -> i64 {
        self.grid[j - 1].iter().map(|s| s.weight()).sum()
    }

    /// Rebuild from parsed parts, validating grid dimensions.
    pub fn from_parts(m: i64, table: CosetTable, grid: Vec<Vec<FormalSum>>) -> Result<HeckeRep> {
        let mu = table.mu();
        if grid.len() != mu || grid.iter().any(|row| row.len() != mu) {
            return Err(Error::OutOfDomain(format!("grid must be {mu} x {mu}")));
        }
        Ok(HeckeRep { n: table.n(), m, table, grid })
    }
}

/// Construct the m-th Hecke operator at level n over the given coset table.
/// m must be prime; the sum ranges over X_m, dropping (m 0; 0 1) when m
/// divides n. Rows are independent and are built in parallel.
pub fn h_tilde(n: i64, m: i64, table: &CosetTable) -> Result<HeckeRep> {
    if n < 1 {
        return Err(Error::InvalidLevel(n));
    }
    if table.n() != n {
        return Err(Error::InvalidLevel(table.n()));
    }
    if !is_prime(m) {
        return Err(Error::NotPrime(m));
    }
    let drop_diag = n % m == 0;
    let elements: Vec<Mat2> = x_m(m)
        .into_iter()
        .filter(|a| !(drop_diag && *a == Mat2::new(m, 0, 0, 1)))
        .collect();
    let mu = table.mu();
    let grid: Vec<Vec<FormalSum>> = (1..=mu)
        .into_par_iter()
        .map(|j| {
            let mut row: Vec<Vec<(i64, Mat2)>> = vec![Vec::new(); mu];
            for a in &elements {
                // A alpha_j = gamma * U with U = sigma_{alpha_j}(A) and
                // gamma landing in the coset indexed by phi_A(j).
                let (gamma, u) = a.mul(table.rep(j)).hnf_upper().expect("det(A alpha_j) > 0");
                let phi_aj = table.coset_index(&gamma);
                let q = u.act(ExtRational::ZERO);
                for m_l in m_chain(q).expect("U0 lies in [0, 1) for U in X_m") {
                    // The factor m_l routes component phi_A(j) through the
                    // induced representation of its inverse.
                    let m_l_inv = m_l.inv_unimodular().expect("left neighbor factors are unimodular");
                    let k = table.coset_index(&table.rep(phi_aj).mul(&m_l_inv));
                    row[k - 1].push((1, m_l.mul(&u)));
                }
            }
            row.into_iter().map(FormalSum::from_terms).collect()
        })
        .collect();
    Ok(HeckeRep { n, m, table: table.clone(), grid })
}

impl Serialize for HeckeRep {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            n: i64,
            m: i64,
            mu: usize,
            grid: &'a [Vec<FormalSum>],
        }
        Repr { n: self.n, m: self.m, mu: self.mu(), grid: &self.grid }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for HeckeRep {
    /// Reconstructs over the default coset table of the encoded level; the
    /// wire format does not carry representatives.
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            n: i64,
            m: i64,
            #[serde(default)]
            mu: Option<usize>,
            grid: Vec<Vec<FormalSum>>,
        }
        let r = Repr::deserialize(deserializer)?;
        let table = CosetTable::new(r.n).map_err(D::Error::custom)?;
        if let Some(mu) = r.mu {
            if mu != table.mu() {
                return Err(D::Error::custom(format!(
                    "mu = {mu} does not match index {} at level {}",
                    table.mu(),
                    r.n
                )));
            }
        }
        HeckeRep::from_parts(r.m, table, r.grid).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::congruence::cosets;

    fn fs(mats: &[Mat2]) -> FormalSum {
        FormalSum::from_terms(mats.iter().map(|&m| (1, m)))
    }

    #[test]
    fn level1_degree_one_and_two() {
        assert_eq!(h_tilde_level1(1).unwrap(), FormalSum::identity());
        assert_eq!(
            h_tilde_level1(2).unwrap(),
            fs(&[
                Mat2::new(1, 0, 0, 2),
                Mat2::new(1, 1, 0, 2),
                Mat2::new(2, 0, 1, 1),
                Mat2::new(2, 0, 0, 1),
            ])
        );
        assert!(h_tilde_level1(0).is_err());
    }

    #[test]
    fn oracle_small_cases() {
        assert_eq!(s_m_oracle(1).into_iter().collect::<Vec<_>>(), vec![Mat2::I]);
        let s2: Vec<Mat2> = s_m_oracle(2).into_iter().collect();
        assert_eq!(
            s2,
            vec![
                Mat2::new(1, 0, 0, 2),
                Mat2::new(1, 1, 0, 2),
                Mat2::new(2, 0, 0, 1),
                Mat2::new(2, 0, 1, 1),
            ]
        );
    }

    #[test]
    fn oracle_agrees_with_construction() {
        for m in [3, 5] {
            let sum = h_tilde_level1(m).unwrap();
            let support: BTreeSet<Mat2> = sum.support().collect();
            assert_eq!(support, s_m_oracle(m));
            assert!(sum.terms().iter().all(|&(c, _)| c == 1));
        }
    }

    #[test]
    fn grid_level2_degree2() {
        let table = cosets(2).unwrap();
        let rep = h_tilde(2, 2, &table).unwrap();
        assert_eq!(rep.mu(), 3);

        let a1 = Mat2::new(1, 0, 0, 2);
        let a2 = Mat2::new(1, 1, 0, 2);
        let a3 = Mat2::new(2, 0, 0, 1);
        let w = Mat2::new(2, 0, 1, 1);

        assert_eq!(rep.cell(1, 1), &fs(&[a1, a2]));
        assert_eq!(rep.cell(1, 2), &fs(&[w]));
        assert_eq!(rep.cell(2, 1), &fs(&[a2]));
        assert_eq!(rep.cell(2, 2), &fs(&[a3, w]));
        assert_eq!(rep.cell(3, 1), &fs(&[a1]));
        assert_eq!(rep.cell(3, 2), &fs(&[a3]));
        for j in 1..=3 {
            assert!(rep.cell(j, 3).is_empty());
        }
        assert_eq!(rep.row_term_count(1), 3);
        assert_eq!(rep.row_term_count(2), 3);
        assert_eq!(rep.row_term_count(3), 2);
    }

    #[test]
    fn level1_reduction() {
        let table = cosets(1).unwrap();
        for m in [2, 3, 5, 7, 11, 13] {
            let rep = h_tilde(1, m, &table).unwrap();
            assert_eq!(rep.mu(), 1);
            assert_eq!(rep.cell(1, 1), &h_tilde_level1(m).unwrap());
        }
    }

    #[test]
    fn degree_must_be_prime_at_higher_level() {
        let table = cosets(2).unwrap();
        assert_eq!(h_tilde(2, 4, &table).unwrap_err(), Error::NotPrime(4));
        assert!(matches!(h_tilde(3, 2, &table), Err(Error::InvalidLevel(_))));
    }

    #[test]
    fn json_round_trip_uses_default_table() {
        let table = cosets(2).unwrap();
        let rep = h_tilde(2, 2, &table).unwrap();
        let json = serde_json::to_string(&rep).unwrap();
        let back: HeckeRep = serde_json::from_str(&json).unwrap();
        assert_eq!(back, rep);
    }
}
