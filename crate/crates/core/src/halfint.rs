//! Exact half-integer arithmetic.
//!
//! Degree averages of digraph vertices are always halves of integers, and
//! every bound in this crate is a floor or ceiling of an expression in such
//! values. [`HalfInt`] stores twice the value as an `i64` so all of that
//! arithmetic stays exact; nothing in the crate computes a bound through
//! floating point.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

/// A number of the form k/2 for an integer k, stored as k.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct HalfInt {
    twice: i64,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { twice: 0 };
    pub const HALF: HalfInt = HalfInt { twice: 1 };
    pub const ONE: HalfInt = HalfInt { twice: 2 };

    /// The integer `v` as a half-integer.
    pub fn from_int(v: i64) -> HalfInt {
        HalfInt { twice: 2 * v }
    }

    /// The half-integer `t / 2`.
    pub fn from_twice(t: i64) -> HalfInt {
        HalfInt { twice: t }
    }

    /// Twice the value, i.e. the exact numerator over denominator 2.
    pub fn twice(self) -> i64 {
        self.twice
    }

    pub fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }

    /// Largest integer not above the value. Exact for negatives too:
    /// floor(-1/2) = -1.
    pub fn floor(self) -> i64 {
        self.twice.div_euclid(2)
    }

    /// Smallest integer not below the value.
    pub fn ceil(self) -> i64 {
        (self.twice + 1).div_euclid(2)
    }

    pub fn mul_int(self, k: i64) -> HalfInt {
        HalfInt { twice: self.twice * k }
    }

    /// Floor of the exact quotient `self / rhs`. `rhs` must be positive.
    pub fn div_floor(self, rhs: HalfInt) -> i64 {
        assert!(rhs.twice > 0, "div_floor needs a positive divisor");
        self.twice.div_euclid(rhs.twice)
    }

    /// Lossy conversion, for display only.
    pub fn to_f64(self) -> f64 {
        self.twice as f64 / 2.0
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt { twice: self.twice + rhs.twice }
    }
}

impl AddAssign for HalfInt {
    fn add_assign(&mut self, rhs: HalfInt) {
        self.twice += rhs.twice;
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt { twice: self.twice - rhs.twice }
    }
}

impl SubAssign for HalfInt {
    fn sub_assign(&mut self, rhs: HalfInt) {
        self.twice -= rhs.twice;
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt { twice: -self.twice }
    }
}

impl Sum for HalfInt {
    fn sum<I: Iterator<Item = HalfInt>>(iter: I) -> HalfInt {
        iter.fold(HalfInt::ZERO, |a, b| a + b)
    }
}

impl From<i64> for HalfInt {
    fn from(v: i64) -> HalfInt {
        HalfInt::from_int(v)
    }
}

/// Integers print bare ("3"), proper halves as "k/2" ("5/2", "-1/2").
impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

impl fmt::Debug for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Failure to parse a half-integer literal.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid half-integer '{input}', expected an integer or 'k/2'")]
pub struct ParseHalfIntError {
    pub input: String,
}

/// Accepts the same forms `Display` produces: "3", "-2", "5/2", "-1/2".
impl FromStr for HalfInt {
    type Err = ParseHalfIntError;

    fn from_str(s: &str) -> Result<HalfInt, ParseHalfIntError> {
        let err = || ParseHalfIntError { input: s.to_string() };
        if let Some(num) = s.strip_suffix("/2") {
            let t: i64 = num.trim().parse().map_err(|_| err())?;
            Ok(HalfInt::from_twice(t))
        } else {
            let v: i64 = s.trim().parse().map_err(|_| err())?;
            Ok(HalfInt::from_int(v))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floor_and_ceil() {
        assert_eq!(HalfInt::from_twice(5).floor(), 2);
        assert_eq!(HalfInt::from_twice(5).ceil(), 3);
        assert_eq!(HalfInt::from_int(3).floor(), 3);
        assert_eq!(HalfInt::from_int(3).ceil(), 3);
        assert_eq!(HalfInt::from_twice(-1).floor(), -1);
        assert_eq!(HalfInt::from_twice(-1).ceil(), 0);
        assert_eq!(HalfInt::from_twice(-5).floor(), -3);
        assert_eq!(HalfInt::from_twice(-5).ceil(), -2);
    }

    #[test]
    fn arithmetic() {
        let a = HalfInt::from_twice(5); // 5/2
        let b = HalfInt::from_int(2);
        assert_eq!(a + b, HalfInt::from_twice(9));
        assert_eq!(a - b, HalfInt::HALF);
        assert_eq!(-a, HalfInt::from_twice(-5));
        assert_eq!(a.mul_int(3), HalfInt::from_twice(15));
        let s: HalfInt = [a, b, HalfInt::HALF].into_iter().sum();
        assert_eq!(s, HalfInt::from_int(5));
    }

    #[test]
    fn div_floor_matches_rational_division() {
        // 21/2 divided by 5/2 is 4.2, floor 4
        assert_eq!(HalfInt::from_twice(21).div_floor(HalfInt::from_twice(5)), 4);
        // 10 / (5/2) = 4 exactly
        assert_eq!(HalfInt::from_int(10).div_floor(HalfInt::from_twice(5)), 4);
        assert_eq!(HalfInt::from_int(9).div_floor(HalfInt::from_int(2)), 4);
        assert_eq!(HalfInt::from_twice(-1).div_floor(HalfInt::ONE), -1);
    }

    #[test]
    fn ordering() {
        assert!(HalfInt::ZERO < HalfInt::HALF);
        assert!(HalfInt::HALF < HalfInt::ONE);
        assert!(HalfInt::from_twice(7) > HalfInt::from_int(3));
    }

    #[test]
    fn display_and_parse_round_trip() {
        for t in -7..=7 {
            let h = HalfInt::from_twice(t);
            let back: HalfInt = h.to_string().parse().unwrap();
            assert_eq!(back, h);
        }
        assert_eq!(HalfInt::from_twice(5).to_string(), "5/2");
        assert_eq!(HalfInt::from_twice(-1).to_string(), "-1/2");
        assert_eq!(HalfInt::from_int(4).to_string(), "4");
        assert_eq!("5/2".parse::<HalfInt>().unwrap(), HalfInt::from_twice(5));
        assert!("5/3".parse::<HalfInt>().is_err());
        assert!("x".parse::<HalfInt>().is_err());
        assert!("".parse::<HalfInt>().is_err());
    }
}
