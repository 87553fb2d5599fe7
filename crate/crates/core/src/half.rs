//! Half-integers: exponents of the norm character and L-function shifts.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A number of the form `k/2`, stored as `k`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Half(i64);

impl Half {
    pub const ZERO: Half = Half(0);
    pub const ONE: Half = Half(2);

    pub const fn from_int(n: i64) -> Half {
        Half(2 * n)
    }

    /// `k/2`.
    pub const fn from_halves(k: i64) -> Half {
        Half(k)
    }

    pub const fn halves(self) -> i64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    /// Integer value, if there is one.
    pub fn to_int(self) -> Option<i64> {
        self.is_integer().then_some(self.0 / 2)
    }

    /// Halve again. Only defined when the result is still a half-integer.
    pub fn half_of(self) -> Option<Half> {
        (self.0 % 2 == 0).then_some(Half(self.0 / 2))
    }

    pub fn abs(self) -> Half {
        Half(self.0.abs())
    }
}

impl Add for Half {
    type Output = Half;
    fn add(self, o: Half) -> Half {
        Half(self.0 + o.0)
    }
}

impl AddAssign for Half {
    fn add_assign(&mut self, o: Half) {
        self.0 += o.0;
    }
}

impl Sub for Half {
    type Output = Half;
    fn sub(self, o: Half) -> Half {
        Half(self.0 - o.0)
    }
}

impl Neg for Half {
    type Output = Half;
    fn neg(self) -> Half {
        Half(-self.0)
    }
}

impl Mul<i64> for Half {
    type Output = Half;
    fn mul(self, k: i64) -> Half {
        Half(self.0 * k)
    }
}

impl From<i64> for Half {
    fn from(n: i64) -> Half {
        Half::from_int(n)
    }
}

impl fmt::Display for Half {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("not a half-integer: {0:?}")]
pub struct ParseHalfError(pub String);

impl FromStr for Half {
    type Err = ParseHalfError;

    /// Accepts `3`, `-1`, `3/2`, `-1/2` and `4/2`.
    fn from_str(s: &str) -> Result<Half, ParseHalfError> {
        let err = || ParseHalfError(s.to_string());
        let t = s.trim();
        match t.split_once('/') {
            None => t.parse::<i64>().ok().and_then(|n| n.checked_mul(2)).map(Half).ok_or_else(err),
            Some((num, den)) => {
                let num: i64 = num.trim().parse().map_err(|_| err())?;
                match den.trim() {
                    "1" => num.checked_mul(2).map(Half).ok_or_else(err),
                    "2" => Ok(Half(num)),
                    _ => Err(err()),
                }
            }
        }
    }
}

impl Serialize for Half {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Half {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Half, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
