//! Farey sequences, the level function, left neighbor sequences, and the
//! unimodular path sums M(q) built from them.
//!
//! The Farey sequence of level n used here is two-sided and extended: it
//! holds every reduced u/v with |u| <= n and 0 <= v <= n, which puts both
//! -1/0 and 1/0 in every level. Level 0 is the triple (-1/0, 0/1, 1/0).

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::formal_sum::FormalSum;
use crate::mat2::Mat2;
use crate::rational::ExtRational;

/// Default refusal threshold for whole-sequence construction; the entry
/// count grows quadratically with the level.
pub const DEFAULT_MAX_FAREY_LEVEL: i64 = 10_000;

/// Level of the sequence in which a value first appears: 0 on the base
/// triple, max(|num|, den) elsewhere.
pub fn lev(q: ExtRational) -> i64 {
    if q == ExtRational::ZERO || q.is_infinite() {
        0
    } else {
        q.num().abs().max(q.den())
    }
}

/// An entire Farey sequence, ordered.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct FareySequence {
    level: i64,
    entries: Vec<ExtRational>,
}

impl FareySequence {
    pub fn level(&self) -> i64 {
        self.level
    }

    pub fn entries(&self) -> &[ExtRational] {
        &self.entries
    }
}

fn farey_entries(n: i64) -> Vec<ExtRational> {
    if n == 0 {
        return vec![ExtRational::NEG_INFINITY, ExtRational::ZERO, ExtRational::INFINITY];
    }
    let mut entries = vec![ExtRational::NEG_INFINITY, ExtRational::INFINITY];
    for v in 1..=n {
        for u in -n..=n {
            if u.gcd(&v) == 1 {
                entries.push(ExtRational::new(u, v));
            }
        }
    }
    entries.sort();
    entries.dedup();
    entries
}

/// The Farey sequence of the given level, guarded by the default size limit.
pub fn farey_sequence(n: i64) -> Result<FareySequence> {
    farey_sequence_with_limit(n, DEFAULT_MAX_FAREY_LEVEL)
}

/// The Farey sequence of the given level with an explicit size limit.
pub fn farey_sequence_with_limit(n: i64, max_level: i64) -> Result<FareySequence> {
    if n < 0 {
        return Err(Error::OutOfDomain(format!("farey level must be >= 0 (got {n})")));
    }
    if n > max_level {
        return Err(Error::FareyTooLarge { n, max: max_level });
    }
    Ok(FareySequence { level: n, entries: farey_entries(n) })
}

/// Left neighbor of q in the Farey sequence of level lev(q).
///
/// Fast path: neighbors x/y < q = a/b satisfy a*y - b*x = 1, so the answer
/// is the solution of that equation with the largest admissible parameter.
/// `left_neighbor_scan` is the defining maximum over the full sequence; the
/// two must agree (checked in debug builds and by the verification suites).
pub fn left_neighbor(q: ExtRational) -> Result<ExtRational> {
    if q == ExtRational::NEG_INFINITY {
        return Err(Error::NoNeighbor);
    }
    let fast = left_neighbor_fast(q);
    #[cfg(debug_assertions)]
    if lev(q) <= 12 {
        debug_assert_eq!(fast, left_neighbor_scan(q).unwrap());
    }
    Ok(fast)
}

fn left_neighbor_fast(q: ExtRational) -> ExtRational {
    if q == ExtRational::INFINITY {
        return ExtRational::ZERO;
    }
    if q == ExtRational::ZERO {
        return ExtRational::NEG_INFINITY;
    }
    let (a, b) = (q.num(), q.den());
    let n = lev(q);
    // Particular solution of a*y0 - b*x0 = 1 via the extended gcd, then the
    // full family (x, y) = (x0 + t*a, y0 + t*b). The fraction x/y increases
    // with t, so the left neighbor is the largest t with |x| <= n, y <= n.
    let gcd = a.extended_gcd(&b);
    debug_assert_eq!(gcd.gcd, 1);
    let (y0, x0) = (gcd.x, -gcd.y);
    let t_den = Integer::div_floor(&(n - y0), &b);
    let t_num = if a > 0 {
        Integer::div_floor(&(n - x0), &a)
    } else {
        Integer::div_floor(&(-n - x0), &a)
    };
    let t = t_den.min(t_num);
    let (x, y) = (x0 + t * a, y0 + t * b);
    debug_assert!(y >= 0 && y <= n && x.abs() <= n);
    ExtRational::new(x, y)
}

/// Normative left neighbor: the maximal entry of the level-lev(q) sequence
/// strictly below q, found by scanning the whole sequence.
pub fn left_neighbor_scan(q: ExtRational) -> Result<ExtRational> {
    if q == ExtRational::NEG_INFINITY {
        return Err(Error::NoNeighbor);
    }
    let entries = farey_entries(lev(q));
    entries
        .iter()
        .rev()
        .find(|&&r| r < q)
        .copied()
        .ok_or(Error::NoNeighbor)
}

/// The chain from -1/0 up to a target, each entry the left neighbor of the
/// next.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct LNSequence {
    #[serde(rename = "q")]
    target: ExtRational,
    chain: Vec<ExtRational>,
}

impl LNSequence {
    pub fn target(&self) -> ExtRational {
        self.target
    }

    pub fn chain(&self) -> &[ExtRational] {
        &self.chain
    }

    /// Number of left-neighbor steps (chain length minus one).
    pub fn steps(&self) -> usize {
        self.chain.len() - 1
    }
}

/// Iterate the left neighbor map down to -1/0 and return the chain in
/// ascending order. Defined for rationals and +inf.
pub fn lns(q: ExtRational) -> Result<LNSequence> {
    if q == ExtRational::NEG_INFINITY {
        return Err(Error::OutOfDomain("lns is not defined at -inf".into()));
    }
    let mut chain = vec![q];
    let mut cur = q;
    while cur != ExtRational::NEG_INFINITY {
        cur = left_neighbor(cur)?;
        chain.push(cur);
    }
    chain.reverse();
    Ok(LNSequence { target: q, chain })
}

/// Ordered unimodular factors m_1, ..., m_L attached to the left neighbor
/// chain of q: with chain entries a_l/b_l, the l-th factor is the inverse
/// of (-a_{l-1} a_l; -b_{l-1} b_l). Requires a rational q in [0, 1).
pub fn m_chain(q: ExtRational) -> Result<Vec<Mat2>> {
    if !q.is_finite() || q < ExtRational::ZERO || q >= ExtRational::new(1, 1) {
        return Err(Error::OutOfDomain(format!("m_chain requires 0 <= q < 1 (got {q})")));
    }
    let chain = lns(q)?.chain;
    chain
        .windows(2)
        .map(|w| {
            let (prev, next) = (w[0], w[1]);
            Mat2::new(-prev.num(), next.num(), -prev.den(), next.den()).inv_unimodular()
        })
        .collect()
}

/// The factors of `m_chain` as a canonical formal sum.
pub fn m_of(q: ExtRational) -> Result<FormalSum> {
    Ok(FormalSum::from_terms(m_chain(q)?.into_iter().map(|m| (1, m))))
}
