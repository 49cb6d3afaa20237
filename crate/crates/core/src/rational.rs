//! Reduced fractions extended by the two signed infinities 1/0 and -1/0.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A fraction num/den in lowest terms with den >= 0.
///
/// den == 0 encodes the infinities +-1/0, which compare below respectively
/// above every finite value. Finite values compare by cross multiplication.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct ExtRational {
    num: i64,
    den: i64,
}

impl ExtRational {
    pub const ZERO: ExtRational = ExtRational { num: 0, den: 1 };
    pub const INFINITY: ExtRational = ExtRational { num: 1, den: 0 };
    pub const NEG_INFINITY: ExtRational = ExtRational { num: -1, den: 0 };

    /// Build and normalize: reduce by the gcd and make the denominator
    /// nonnegative. (0, 0) is not a value and panics.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(num != 0 || den != 0, "0/0 is not an extended rational");
        if den == 0 {
            return ExtRational { num: num.signum(), den: 0 };
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = (num / g, den / g);
        if den < 0 {
            num = -num;
            den = -den;
        }
        ExtRational { num, den }
    }

    pub(crate) fn from_i128(num: i128, den: i128) -> Self {
        assert!(num != 0 || den != 0, "0/0 is not an extended rational");
        if den == 0 {
            return ExtRational { num: num.signum() as i64, den: 0 };
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = (num / g, den / g);
        if den < 0 {
            num = -num;
            den = -den;
        }
        ExtRational {
            num: i64::try_from(num).expect("numerator overflowed the 64-bit range"),
            den: i64::try_from(den).expect("denominator overflowed the 64-bit range"),
        }
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn den(&self) -> i64 {
        self.den
    }

    pub fn is_finite(&self) -> bool {
        self.den != 0
    }

    pub fn is_infinite(&self) -> bool {
        self.den == 0
    }

    /// Equality on the projective line, where 1/0 and -1/0 are one point.
    pub fn projectively_eq(&self, other: &ExtRational) -> bool {
        self == other || (self.is_infinite() && other.is_infinite())
    }
}

impl PartialOrd for ExtRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtRational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.is_infinite(), other.is_infinite()) {
            (true, true) => self.num.cmp(&other.num),
            (true, false) => self.num.cmp(&0),
            (false, true) => 0.cmp(&other.num),
            (false, false) => {
                let lhs = self.num as i128 * other.den as i128;
                let rhs = other.num as i128 * self.den as i128;
                lhs.cmp(&rhs)
            }
        }
    }
}

impl fmt::Display for ExtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 0 {
            write!(f, "{}", if self.num > 0 { "inf" } else { "-inf" })
        } else if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl FromStr for ExtRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "inf" | "+inf" | "oo" => return Ok(ExtRational::INFINITY),
            "-inf" | "-oo" => return Ok(ExtRational::NEG_INFINITY),
            _ => {}
        }
        let bad = || Error::OutOfDomain(format!("cannot parse rational {s:?}"));
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (
                n.trim().parse::<i64>().map_err(|_| bad())?,
                d.trim().parse::<i64>().map_err(|_| bad())?,
            ),
            None => (s.parse::<i64>().map_err(|_| bad())?, 1),
        };
        if num == 0 && den == 0 {
            return Err(bad());
        }
        Ok(ExtRational::new(num, den))
    }
}

impl Serialize for ExtRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            num: i64,
            den: i64,
        }
        Repr { num: self.num, den: self.den }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ExtRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            num: i64,
            den: i64,
        }
        let r = Repr::deserialize(deserializer)?;
        if r.num == 0 && r.den == 0 {
            return Err(D::Error::custom("0/0 is not an extended rational"));
        }
        Ok(ExtRational::new(r.num, r.den))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization() {
        assert_eq!(ExtRational::new(2, 4), ExtRational::new(1, 2));
        assert_eq!(ExtRational::new(-2, -4), ExtRational::new(1, 2));
        assert_eq!(ExtRational::new(2, -4), ExtRational::new(-1, 2));
        assert_eq!(ExtRational::new(0, -7), ExtRational::ZERO);
        assert_eq!(ExtRational::new(5, 0), ExtRational::INFINITY);
        assert_eq!(ExtRational::new(-3, 0), ExtRational::NEG_INFINITY);
    }

    #[test]
    fn total_order() {
        let v = [
            ExtRational::NEG_INFINITY,
            ExtRational::new(-2, 1),
            ExtRational::new(-1, 2),
            ExtRational::ZERO,
            ExtRational::new(1, 3),
            ExtRational::new(1, 2),
            ExtRational::new(7, 2),
            ExtRational::INFINITY,
        ];
        let mut sorted = v.to_vec();
        sorted.sort();
        assert_eq!(sorted, v);
        assert!(ExtRational::NEG_INFINITY < ExtRational::INFINITY);
    }

    #[test]
    fn parse_and_display() {
        for s in ["inf", "-inf", "0", "-3", "1/2", "-7/3"] {
            let q: ExtRational = s.parse().unwrap();
            assert_eq!(q.to_string(), s);
        }
        assert_eq!("2/4".parse::<ExtRational>().unwrap(), ExtRational::new(1, 2));
        assert!("0/0".parse::<ExtRational>().is_err());
        assert!("x".parse::<ExtRational>().is_err());
    }

    #[test]
    fn json_shape() {
        let q = ExtRational::new(-1, 2);
        assert_eq!(serde_json::to_string(&q).unwrap(), r#"{"num":-1,"den":2}"#);
        assert_eq!(serde_json::from_str::<ExtRational>(r#"{"num":-1,"den":2}"#).unwrap(), q);
    }
}
