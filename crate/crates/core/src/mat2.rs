//! Exact 2x2 integer matrices.
//!
//! Entries are 64-bit; all arithmetic runs through 128-bit intermediates and
//! is narrowed back with an overflow check, so results are either exact or a
//! loud panic (never a silent wrap). The inputs this crate is designed for
//! keep entries far below the 64-bit range.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::ExtRational;

/// A 2x2 integer matrix (a b; c d).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Mat2 {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

#[inline]
fn narrow(v: i128) -> i64 {
    i64::try_from(v).expect("matrix entry overflowed the 64-bit range")
}

impl Mat2 {
    /// Identity.
    pub const I: Mat2 = Mat2::new(1, 0, 0, 1);
    /// Translation z -> z + 1.
    pub const T: Mat2 = Mat2::new(1, 1, 0, 1);
    /// Inversion z -> -1/z.
    pub const S: Mat2 = Mat2::new(0, -1, 1, 0);
    /// Lower translation z -> z/(z+1).
    pub const T_PRIME: Mat2 = Mat2::new(1, 0, 1, 1);

    pub const fn new(a: i64, b: i64, c: i64, d: i64) -> Self {
        Mat2 { a, b, c, d }
    }

    /// Determinant ad - bc.
    pub fn det(&self) -> i64 {
        narrow(self.a as i128 * self.d as i128 - self.b as i128 * self.c as i128)
    }

    /// Matrix product self * rhs.
    pub fn mul(&self, rhs: &Mat2) -> Mat2 {
        let (a, b, c, d) = (self.a as i128, self.b as i128, self.c as i128, self.d as i128);
        let (e, f, g, h) = (rhs.a as i128, rhs.b as i128, rhs.c as i128, rhs.d as i128);
        Mat2::new(
            narrow(a * e + b * g),
            narrow(a * f + b * h),
            narrow(c * e + d * g),
            narrow(c * f + d * h),
        )
    }

    /// Exact integer inverse of a matrix with determinant +-1.
    pub fn inv_unimodular(&self) -> Result<Mat2> {
        match self.det() {
            1 => Ok(Mat2::new(self.d, -self.b, -self.c, self.a)),
            -1 => Ok(Mat2::new(-self.d, self.b, self.c, -self.a)),
            det => Err(Error::NonUnimodular(det)),
        }
    }

    /// Integer power; negative exponents require determinant +-1.
    pub fn pow(&self, exp: i32) -> Result<Mat2> {
        let base = if exp < 0 { self.inv_unimodular()? } else { *self };
        let mut out = Mat2::I;
        for _ in 0..exp.unsigned_abs() {
            out = out.mul(&base);
        }
        Ok(out)
    }

    /// Moebius action on the extended rationals.
    ///
    /// Requires a nonzero determinant, which rules out the 0/0 image. The two
    /// infinities are distinguished values here: the image of den = 0 carries
    /// the sign of its numerator.
    pub fn act(&self, q: ExtRational) -> ExtRational {
        assert!(self.det() != 0, "act requires a nonzero determinant");
        let num = self.a as i128 * q.num() as i128 + self.b as i128 * q.den() as i128;
        let den = self.c as i128 * q.num() as i128 + self.d as i128 * q.den() as i128;
        ExtRational::from_i128(num, den)
    }

    /// Hermite decomposition m = g * u with g in SL(2,Z) and u the unique
    /// upper-triangular representative with a, d > 0 and 0 <= b < d.
    ///
    /// Works by Euclidean row reduction on the left; requires det > 0.
    pub fn hnf_upper(&self) -> Result<(Mat2, Mat2)> {
        let det = self.det();
        if det <= 0 {
            return Err(Error::NonpositiveDet(det));
        }
        let mut w = *self;
        let mut g = Mat2::I;
        // Invariant: self == g * w, det(g) == 1.
        let shear = |w: &mut Mat2, g: &mut Mat2, q: i64| {
            // w <- (1 -q; 0 1) w, g <- g (1 q; 0 1)
            *w = Mat2::new(1, -q, 0, 1).mul(w);
            *g = g.mul(&Mat2::new(1, q, 0, 1));
        };
        while w.c != 0 {
            if w.a != 0 {
                let q = w.a.div_euclid(w.c);
                shear(&mut w, &mut g, q);
            }
            // Swap rows with a sign: w <- (0 1; -1 0) w, g <- g (0 -1; 1 0).
            w = Mat2::new(0, 1, -1, 0).mul(&w);
            g = g.mul(&Mat2::new(0, -1, 1, 0));
        }
        if w.a < 0 {
            w = Mat2::new(-w.a, -w.b, -w.c, -w.d);
            g = Mat2::new(-g.a, -g.b, -g.c, -g.d);
        }
        let q = w.b.div_euclid(w.d);
        shear(&mut w, &mut g, q);
        debug_assert!(g.det() == 1 && w.is_x_m() && g.mul(&w) == *self);
        Ok((g, w))
    }

    /// det == 1.
    pub fn is_sl2(&self) -> bool {
        self.det() == 1
    }

    /// det == 1 and c divisible by n.
    pub fn is_gamma0(&self, n: i64) -> bool {
        assert!(n >= 1, "group level must be >= 1");
        self.is_sl2() && self.c.rem_euclid(n) == 0
    }

    /// All entries >= 0.
    pub fn is_nonneg(&self) -> bool {
        self.a >= 0 && self.b >= 0 && self.c >= 0 && self.d >= 0
    }

    /// Member of the upper-triangular family: c == 0, a > 0, 0 <= b < d.
    pub fn is_x_m(&self) -> bool {
        self.c == 0 && self.a > 0 && self.b >= 0 && self.d > self.b
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]]", self.a, self.b, self.c, self.d)
    }
}

impl Serialize for Mat2 {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        [[self.a, self.b], [self.c, self.d]].serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Mat2 {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let rows = <[[i64; 2]; 2]>::deserialize(deserializer)?;
        Ok(Mat2::new(rows[0][0], rows[0][1], rows[1][0], rows[1][1]))
    }
}

impl std::str::FromStr for Mat2 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Mat2> {
        serde_json::from_str(s)
            .map_err(|e| Error::OutOfDomain(format!("cannot parse matrix {s:?}: {e}")))
    }
}
