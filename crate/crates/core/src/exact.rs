//! Exact rational and modular primitives.
//!
//! Angles are carried as rationals `a` standing for `a·π`. Nothing in this
//! module touches floating point.

use std::fmt;
use std::ops::{Mul, Neg};

use num_bigint::{BigInt, BigUint, Sign as BigSign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exact reduced fraction. `num_rational` keeps it normalized with a positive
/// denominator and `0/1` for zero.
pub type Rational = BigRational;

/// Builds `num/den` from machine integers. Panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `t/s` or a bare integer. Fractions not in lowest terms are refused
/// rather than silently reduced.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let trimmed = text.trim().replace('\u{2212}', "-");
    let (num, den) = match trimmed.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (trimmed.as_str(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| Error::parse("rational", text))?;
    let den: BigInt = den.parse().map_err(|_| Error::parse("rational", text))?;
    if den.is_zero() {
        return Err(Error::parse("rational", text));
    }
    if !num.gcd(&den).is_one() || den.is_negative() {
        return Err(Error::NotReduced(text.trim().to_string()));
    }
    Ok(Rational::new_raw(num, den))
}

/// Renders as `num/den`, including `n/1` for integers.
pub fn format_rational(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// A single radical sign. Serialized as `"+"` or `"-"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_i32(v: i32) -> Option<Sign> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn to_i32(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn is_plus(self) -> bool {
        self == Sign::Plus
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    /// Product of a run of signs; `Plus` for the empty product.
    pub fn product<'a>(signs: impl IntoIterator<Item = &'a Sign>) -> Sign {
        signs.into_iter().fold(Sign::Plus, |acc, &s| acc * s)
    }

    pub fn apply(self, q: Rational) -> Rational {
        match self {
            Sign::Plus => q,
            Sign::Minus => -q,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        self * Sign::Minus
    }
}

impl From<Sign> for String {
    fn from(s: Sign) -> String {
        s.as_char().to_string()
    }
}

impl TryFrom<String> for Sign {
    type Error = Error;

    fn try_from(text: String) -> Result<Sign> {
        match text.as_str() {
            "+" => Ok(Sign::Plus),
            "-" | "\u{2212}" => Ok(Sign::Minus),
            _ => Err(Error::parse("sign", text)),
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// `base^exp mod modulus`, always in `[0, modulus)`.
pub fn mod_pow(base: &BigInt, exp: &BigUint, modulus: &BigInt) -> Result<BigInt> {
    if !modulus.is_positive() {
        return Err(Error::out_of_range(modulus, "positive moduli"));
    }
    let m = modulus.magnitude();
    let b = base.mod_floor(modulus).to_biguint().unwrap_or_default();
    Ok(BigInt::from_biguint(BigSign::Plus, b.modpow(exp, m)))
}

/// Semi-order of 2 modulo an odd `s`: the least `d ≥ 1` with `2^d ≡ ±1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemiOrder {
    pub period: u64,
    /// `Plus` when `2^period ≡ 1`, `Minus` when `2^period ≡ -1`.
    pub sign: Sign,
}

/// The search is linear in the period, which is at most `s - 1`.
pub fn semi_order(s: &BigInt) -> Result<SemiOrder> {
    if s < &BigInt::from(3) || s.is_even() {
        return Err(Error::BadModulus(s.to_string()));
    }
    if let Some(small) = s.to_u64() {
        return Ok(semi_order_u64(small));
    }
    let two = BigInt::from(2);
    let minus_one = s - 1u32;
    let mut acc = BigInt::one();
    let mut d = 0u64;
    loop {
        d += 1;
        acc = (&acc * &two) % s;
        if acc.is_one() {
            return Ok(SemiOrder {
                period: d,
                sign: Sign::Plus,
            });
        }
        if acc == minus_one {
            return Ok(SemiOrder {
                period: d,
                sign: Sign::Minus,
            });
        }
    }
}

fn semi_order_u64(s: u64) -> SemiOrder {
    let s = s as u128;
    let mut acc: u128 = 1;
    let mut d = 0u64;
    loop {
        d += 1;
        acc = (acc * 2) % s;
        if acc == 1 {
            return SemiOrder {
                period: d,
                sign: Sign::Plus,
            };
        }
        if acc == s - 1 {
            return SemiOrder {
                period: d,
                sign: Sign::Minus,
            };
        }
    }
}

/// Reduces an angle (in units of π) into `[0, 2)`.
pub fn reduce_mod2(angle: &Rational) -> Rational {
    let two = Rational::from_integer(BigInt::from(2));
    let k = (angle / &two).floor();
    angle - k * two
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Quadrant {
    First,
    Second,
    Third,
    Fourth,
    OnAxisCosZero,
}

/// Quadrant of `angle·π`. The half-open split is `[0,½)`, `(½,1]`, `(1,3/2)`,
/// `(3/2,2)`, with `½` and `3/2` reported separately.
pub fn quadrant(angle: &Rational) -> Quadrant {
    let a = reduce_mod2(angle);
    let half = ratio(1, 2);
    let one = Rational::one();
    let three_halves = ratio(3, 2);
    if a == half || a == three_halves {
        Quadrant::OnAxisCosZero
    } else if a < half {
        Quadrant::First
    } else if a <= one {
        Quadrant::Second
    } else if a < three_halves {
        Quadrant::Third
    } else {
        Quadrant::Fourth
    }
}

/// Sign of `cos(angle·π)`, or `None` when the cosine vanishes.
pub fn cos_sign(angle: &Rational) -> Option<Sign> {
    match quadrant(angle) {
        Quadrant::First | Quadrant::Fourth => Some(Sign::Plus),
        Quadrant::Second | Quadrant::Third => Some(Sign::Minus),
        Quadrant::OnAxisCosZero => None,
    }
}

/// `q = t / (2^k · s)` with `s` odd and positive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DyadicSplit {
    pub t: BigInt,
    pub k: u64,
    pub s: BigInt,
}

pub fn split_two_power(q: &Rational) -> DyadicSplit {
    let mut s = q.denom().clone();
    let mut k = 0u64;
    while s.is_even() {
        s >>= 1;
        k += 1;
    }
    DyadicSplit {
        t: q.numer().clone(),
        k,
        s,
    }
}

/// `2^e · q`, exact.
pub fn shl_rational(q: &Rational, e: u64) -> Rational {
    q * Rational::from_integer(BigInt::one() << e)
}

/// True for `0 < q < 1/2`.
pub fn in_open_half(q: &Rational) -> bool {
    q.is_positive() && q < &ratio(1, 2)
}
