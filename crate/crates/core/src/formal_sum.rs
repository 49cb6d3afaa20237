//! Integer-coefficient formal sums of 2x2 matrices.
//!
//! Sums are kept in a canonical form: terms sorted lexicographically by
//! matrix entries, duplicate matrices merged, zero coefficients dropped.
//! Structural equality therefore coincides with equality of formal sums.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::mat2::Mat2;

#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct FormalSum {
    terms: Vec<(i64, Mat2)>,
}

impl FormalSum {
    /// The empty sum.
    pub fn zero() -> Self {
        FormalSum::default()
    }

    /// The single term 1 * I.
    pub fn identity() -> Self {
        FormalSum::singleton(Mat2::I)
    }

    /// The single term 1 * mat.
    pub fn singleton(mat: Mat2) -> Self {
        FormalSum { terms: vec![(1, mat)] }
    }

    /// Canonicalize an arbitrary term list.
    pub fn from_terms<I: IntoIterator<Item = (i64, Mat2)>>(terms: I) -> Self {
        let mut terms: Vec<(i64, Mat2)> = terms.into_iter().collect();
        terms.sort_by_key(|&(_, m)| m);
        let mut out: Vec<(i64, Mat2)> = Vec::with_capacity(terms.len());
        for (coeff, mat) in terms {
            match out.last_mut() {
                Some((c, m)) if *m == mat => {
                    *c = c.checked_add(coeff).expect("coefficient overflow")
                }
                _ => out.push((coeff, mat)),
            }
        }
        out.retain(|&(c, _)| c != 0);
        FormalSum { terms: out }
    }

    pub fn terms(&self) -> &[(i64, Mat2)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of absolute coefficients, i.e. the term count with multiplicity.
    pub fn weight(&self) -> i64 {
        self.terms.iter().map(|&(c, _)| c.abs()).sum()
    }

    pub fn coefficient_of(&self, mat: &Mat2) -> i64 {
        match self.terms.binary_search_by_key(mat, |&(_, m)| m) {
            Ok(i) => self.terms[i].0,
            Err(_) => 0,
        }
    }

    /// The set of matrices with nonzero coefficient, in canonical order.
    pub fn support(&self) -> impl Iterator<Item = Mat2> + '_ {
        self.terms.iter().map(|&(_, m)| m)
    }

    pub fn add(&self, other: &FormalSum) -> FormalSum {
        FormalSum::from_terms(self.terms.iter().chain(other.terms.iter()).copied())
    }

    pub fn scalar_mul(&self, k: i64) -> FormalSum {
        FormalSum::from_terms(self.terms.iter().map(|&(c, m)| {
            (c.checked_mul(k).expect("coefficient overflow"), m)
        }))
    }

    /// Right multiplication by a matrix: sum (c * m) -> sum (c * (m g)).
    pub fn mat_mul_right(&self, g: &Mat2) -> FormalSum {
        FormalSum::from_terms(self.terms.iter().map(|&(c, m)| (c, m.mul(g))))
    }

    /// Left multiplication by a matrix: sum (c * m) -> sum (c * (g m)).
    pub fn mat_mul_left(&self, g: &Mat2) -> FormalSum {
        FormalSum::from_terms(self.terms.iter().map(|&(c, m)| (c, g.mul(&m))))
    }
}

impl fmt::Display for FormalSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (coeff, mat)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if *coeff == 1 {
                write!(f, "{mat}")?;
            } else {
                write!(f, "{coeff}*{mat}")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    coeff: i64,
    mat: Mat2,
}

impl Serialize for FormalSum {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.terms.iter().map(|&(coeff, mat)| TermRepr { coeff, mat }))
    }
}

impl<'de> Deserialize<'de> for FormalSum {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<TermRepr>::deserialize(deserializer)?;
        Ok(FormalSum::from_terms(terms.into_iter().map(|t| (t.coeff, t.mat))))
    }
}
