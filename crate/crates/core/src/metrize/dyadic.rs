//! Exact dyadic rationals `m / 2ⁿ`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Serialize, Serializer};

/// A nonnegative dyadic rational, always stored in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Dyadic {
    num: u64,
    exp: u32,
}

impl Dyadic {
    pub const ZERO: Dyadic = Dyadic { num: 0, exp: 0 };
    pub const ONE: Dyadic = Dyadic { num: 1, exp: 0 };

    /// `num / 2^exp`. Panics if `exp > 62`.
    pub fn new(num: u64, exp: u32) -> Self {
        assert!(exp <= 62, "dyadic exponent {exp} too large");
        let shift = num.trailing_zeros().min(exp);
        if num == 0 {
            return Self::ZERO;
        }
        Dyadic {
            num: num >> shift,
            exp: exp - shift,
        }
    }

    /// `2⁻ⁿ`.
    pub fn pow2_inv(n: u32) -> Self {
        Self::new(1, n)
    }

    pub fn numerator(&self) -> u64 {
        self.num
    }

    pub fn exponent(&self) -> u32 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    /// Numerator over the common denominator `2^exp`, for `exp ≥ self.exp`.
    fn scaled(&self, exp: u32) -> u128 {
        (self.num as u128) << (exp - self.exp)
    }

    pub fn abs_diff(self, other: Dyadic) -> Dyadic {
        let e = self.exp.max(other.exp);
        let (a, b) = (self.scaled(e), other.scaled(e));
        Dyadic::new(a.abs_diff(b) as u64, e)
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / (1u64 << self.exp) as f64
    }

    pub fn to_rational(&self) -> BigRational {
        BigRational::new(BigInt::from(self.num), BigInt::from(1u64 << self.exp))
    }

    /// Exact comparison with a rational.
    pub fn cmp_rational(&self, r: &BigRational) -> Ordering {
        self.to_rational().cmp(r)
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let e = self.exp.max(other.exp);
        self.scaled(e).cmp(&other.scaled(e))
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for Dyadic {
    type Output = Dyadic;

    fn add(self, other: Dyadic) -> Dyadic {
        let e = self.exp.max(other.exp);
        let sum = self.scaled(e) + other.scaled(e);
        Dyadic::new(u64::try_from(sum).expect("dyadic sum overflows"), e)
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, 1u64 << self.exp)
        }
    }
}

impl Serialize for Dyadic {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
