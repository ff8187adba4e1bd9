//! Exact half-integer indices.
//!
//! Weights such as `l`, `m`, `n` are integers or half-integers. They are
//! stored as twice their value so that sums, differences and parity checks
//! stay exact; conversion to floating point happens only inside kernels.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use crate::error::Error;

/// A half-integer stored as `twice = 2 * value`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct HalfInt {
    twice: i64,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { twice: 0 };
    pub const HALF: HalfInt = HalfInt { twice: 1 };
    pub const ONE: HalfInt = HalfInt { twice: 2 };

    pub const fn from_twice(twice: i64) -> Self {
        HalfInt { twice }
    }

    pub const fn from_int(value: i64) -> Self {
        HalfInt { twice: 2 * value }
    }

    /// Twice the logical value.
    pub const fn twice(self) -> i64 {
        self.twice
    }

    pub const fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }

    pub fn to_f64(self) -> f64 {
        self.twice as f64 * 0.5
    }

    /// The value as an integer, if it is one.
    pub fn to_int(self) -> Option<i64> {
        if self.is_integer() {
            Some(self.twice / 2)
        } else {
            None
        }
    }

    pub fn abs(self) -> Self {
        HalfInt { twice: self.twice.abs() }
    }

    pub fn is_negative(self) -> bool {
        self.twice < 0
    }

    /// `self - other` when that difference is an integer.
    pub fn int_diff(self, other: HalfInt) -> Option<i64> {
        (self - other).to_int()
    }

    /// Weights `-self, -self + 1, ..., self` in increasing order.
    pub fn weights(self) -> impl DoubleEndedIterator<Item = HalfInt> + Clone {
        let t = self.twice;
        (0..=t.max(-1)).map(move |k| HalfInt::from_twice(2 * k - t))
    }

    /// Number of weights `2 * self + 1`; zero for negative values.
    pub fn multiplicity(self) -> usize {
        if self.twice < 0 {
            0
        } else {
            (self.twice + 1) as usize
        }
    }
}

impl From<i64> for HalfInt {
    fn from(v: i64) -> Self {
        HalfInt::from_int(v)
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt { twice: self.twice + rhs.twice }
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt { twice: self.twice - rhs.twice }
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt { twice: -self.twice }
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

/// Accepts `"3/2"`, `"-1/2"`, `"2"`, and the doubled form `"d3"` (= 3/2).
impl FromStr for HalfInt {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || Error::Parse(format!("not a half-integer: {s:?}"));
        if let Some(rest) = s.strip_prefix('d') {
            return rest.parse::<i64>().map(HalfInt::from_twice).map_err(|_| bad());
        }
        if let Some((num, den)) = s.split_once('/') {
            let num: i64 = num.trim().parse().map_err(|_| bad())?;
            let den: i64 = den.trim().parse().map_err(|_| bad())?;
            return match den {
                1 => Ok(HalfInt::from_int(num)),
                2 => Ok(HalfInt::from_twice(num)),
                _ => Err(bad()),
            };
        }
        s.parse::<i64>().map(HalfInt::from_int).map_err(|_| bad())
    }
}
