//! Dyadic rationals `mantissa · 2^exponent` with directed rounding.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exact::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Round {
    Down,
    Up,
}

/// Exact dyadic rational. Kept normalized: the mantissa is odd, or zero with
/// exponent zero, so structural equality is value equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Dyadic {
    mantissa: BigInt,
    exponent: i64,
}

fn floor_shr(m: &BigInt, bits: u64) -> BigInt {
    m.div_floor(&(BigInt::one() << bits))
}

fn shr_round(m: &BigInt, bits: u64, dir: Round) -> BigInt {
    match dir {
        Round::Down => floor_shr(m, bits),
        Round::Up => -floor_shr(&-m, bits),
    }
}

impl Dyadic {
    pub fn new(mantissa: BigInt, exponent: i64) -> Self {
        let mut d = Dyadic { mantissa, exponent };
        d.normalize();
        d
    }

    fn normalize(&mut self) {
        if self.mantissa.is_zero() {
            self.exponent = 0;
            return;
        }
        let tz = self.mantissa.trailing_zeros().unwrap_or(0);
        if tz > 0 {
            self.mantissa >>= tz;
            self.exponent += tz as i64;
        }
    }

    pub fn zero() -> Self {
        Dyadic {
            mantissa: BigInt::zero(),
            exponent: 0,
        }
    }

    pub fn from_int(v: impl Into<BigInt>) -> Self {
        Dyadic::new(v.into(), 0)
    }

    /// `2^e`.
    pub fn pow2(e: i64) -> Self {
        Dyadic {
            mantissa: BigInt::one(),
            exponent: e,
        }
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mantissa
    }

    pub fn exponent(&self) -> i64 {
        self.exponent
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mantissa.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.mantissa.is_positive()
    }

    pub fn abs(&self) -> Self {
        Dyadic {
            mantissa: self.mantissa.abs(),
            exponent: self.exponent,
        }
    }

    /// Position of the leading bit: `2^(msb-1) ≤ |x| < 2^msb`. Zero maps to `i64::MIN`.
    pub fn magnitude_bits(&self) -> i64 {
        if self.is_zero() {
            i64::MIN
        } else {
            self.mantissa.bits() as i64 + self.exponent
        }
    }

    pub fn mul_pow2(&self, e: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        Dyadic {
            mantissa: self.mantissa.clone(),
            exponent: self.exponent + e,
        }
    }

    /// Rounds to at most `prec` significant bits in direction `dir`.
    pub fn round(&self, prec: u32, dir: Round) -> Self {
        let bits = self.mantissa.bits();
        if bits <= prec as u64 {
            return self.clone();
        }
        let drop = bits - prec as u64;
        Dyadic::new(
            shr_round(&self.mantissa, drop, dir),
            self.exponent + drop as i64,
        )
    }

    /// Rounds to a multiple of `2^exp`.
    pub fn round_to_exponent(&self, exp: i64, dir: Round) -> Self {
        if self.exponent >= exp {
            return self.clone();
        }
        let drop = (exp - self.exponent) as u64;
        Dyadic::new(shr_round(&self.mantissa, drop, dir), exp)
    }

    /// Rational `q` rounded to `prec` significant bits.
    pub fn from_rational(q: &Rational, prec: u32, dir: Round) -> Self {
        if q.is_integer() {
            return Dyadic::from_int(q.numer().clone()).round(prec, dir);
        }
        let num = q.numer();
        let den = q.denom();
        // choose shift so the quotient carries at least prec bits
        let shift = prec as i64 + den.bits() as i64 - num.bits() as i64 + 2;
        let scaled = if shift >= 0 {
            num << shift as u64
        } else {
            num.clone()
        };
        let den_scaled = if shift >= 0 {
            den.clone()
        } else {
            den << (-shift) as u64
        };
        let (quot, rem) = scaled.div_mod_floor(&den_scaled);
        let m = match dir {
            Round::Down => quot,
            Round::Up if rem.is_zero() => quot,
            Round::Up => quot + 1,
        };
        Dyadic::new(m, -shift).round(prec, dir)
    }

    pub fn to_rational(&self) -> Rational {
        let m = Rational::from_integer(self.mantissa.clone());
        if self.exponent >= 0 {
            m * Rational::from_integer(BigInt::one() << self.exponent as u64)
        } else {
            m / Rational::from_integer(BigInt::one() << (-self.exponent) as u64)
        }
    }

    /// Quotient rounded to `prec` bits. `rhs` must be nonzero.
    pub fn div(&self, rhs: &Dyadic, prec: u32, dir: Round) -> Self {
        assert!(!rhs.is_zero(), "dyadic division by zero");
        if self.is_zero() {
            return Dyadic::zero();
        }
        let shift = prec as i64 + rhs.mantissa.bits() as i64 - self.mantissa.bits() as i64 + 2;
        let shift = shift.max(0);
        let num = &self.mantissa << shift as u64;
        // floor division for either divisor sign
        let (mut quot, rem) = num.div_mod_floor(&rhs.mantissa);
        if dir == Round::Up && !rem.is_zero() {
            quot += 1;
        }
        Dyadic::new(quot, self.exponent - rhs.exponent - shift).round(prec, dir)
    }

    /// Square root rounded to `prec` bits. `self` must be non-negative.
    pub fn sqrt(&self, prec: u32, dir: Round) -> Self {
        assert!(!self.is_negative(), "square root of a negative dyadic");
        if self.is_zero() {
            return Dyadic::zero();
        }
        // scale so the integer square root has at least prec + 2 bits
        let target_bits = 2 * (prec as i64 + 2);
        let mut shift = (target_bits - self.mantissa.bits() as i64).max(0);
        if (self.exponent - shift).rem_euclid(2) != 0 {
            shift += 1;
        }
        let m = &self.mantissa << shift as u64;
        let root = m.sqrt();
        let root = match dir {
            Round::Down => root,
            Round::Up if &root * &root == m => root,
            Round::Up => root + 1,
        };
        Dyadic::new(root, (self.exponent - shift) / 2).round(prec, dir)
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let bits = self.mantissa.bits() as i64;
        let keep = 60i64;
        let (m, e) = if bits > keep {
            (
                floor_shr(&self.mantissa, (bits - keep) as u64),
                self.exponent + bits - keep,
            )
        } else {
            (self.mantissa.clone(), self.exponent)
        };
        let mf = m.to_f64().unwrap_or(0.0);
        if e > i32::MAX as i64 {
            return mf * f64::INFINITY;
        }
        if e < i32::MIN as i64 {
            return 0.0;
        }
        mf * 2f64.powi(e.clamp(-1100, 1100) as i32)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = self - other;
        if diff.mantissa.is_zero() {
            Ordering::Equal
        } else if diff.mantissa.is_negative() {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

impl<'a> Add<&'a Dyadic> for &'a Dyadic {
    type Output = Dyadic;

    fn add(self, rhs: &Dyadic) -> Dyadic {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let e = self.exponent.min(rhs.exponent);
        let a = &self.mantissa << (self.exponent - e) as u64;
        let b = &rhs.mantissa << (rhs.exponent - e) as u64;
        Dyadic::new(a + b, e)
    }
}

impl<'a> Sub<&'a Dyadic> for &'a Dyadic {
    type Output = Dyadic;

    fn sub(self, rhs: &Dyadic) -> Dyadic {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Dyadic> for &'a Dyadic {
    type Output = Dyadic;

    fn mul(self, rhs: &Dyadic) -> Dyadic {
        Dyadic::new(&self.mantissa * &rhs.mantissa, self.exponent + rhs.exponent)
    }
}

impl Neg for &Dyadic {
    type Output = Dyadic;

    fn neg(self) -> Dyadic {
        Dyadic {
            mantissa: -&self.mantissa,
            exponent: self.exponent,
        }
    }
}

impl Neg for Dyadic {
    type Output = Dyadic;

    fn neg(self) -> Dyadic {
        -&self
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*2^{}", self.mantissa, self.exponent)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    #[test]
    fn normalization_makes_equality_structural() {
        assert_eq!(
            Dyadic::new(BigInt::from(12), 0),
            Dyadic::new(BigInt::from(3), 2)
        );
        assert_eq!(Dyadic::new(BigInt::zero(), 7), Dyadic::zero());
    }

    #[test]
    fn directed_rounding_brackets_rationals() {
        for (n, d) in [(1, 3), (-1, 3), (22, 7), (-355, 113), (5, 8)] {
            let q = ratio(n, d);
            let lo = Dyadic::from_rational(&q, 40, Round::Down);
            let hi = Dyadic::from_rational(&q, 40, Round::Up);
            assert!(lo.to_rational() <= q && q <= hi.to_rational(), "{n}/{d}");
            assert!(lo.mantissa().bits() <= 40 && hi.mantissa().bits() <= 40);
        }
        // exact values stay exact
        let q = ratio(5, 8);
        assert_eq!(Dyadic::from_rational(&q, 40, Round::Down).to_rational(), q);
        assert_eq!(Dyadic::from_rational(&q, 40, Round::Up).to_rational(), q);
    }

    #[test]
    fn sqrt_brackets_and_is_exact_on_squares() {
        let two = Dyadic::from_int(2);
        let lo = two.sqrt(64, Round::Down);
        let hi = two.sqrt(64, Round::Up);
        assert!(&lo * &lo <= two && two <= &hi * &hi);
        assert_eq!(lo.to_f64(), std::f64::consts::SQRT_2);
        let nine_quarters = Dyadic::from_rational(&ratio(9, 4), 10, Round::Down);
        assert_eq!(nine_quarters.sqrt(10, Round::Up).to_rational(), ratio(3, 2));
        assert_eq!(
            nine_quarters.sqrt(10, Round::Down).to_rational(),
            ratio(3, 2)
        );
    }

    #[test]
    fn division_brackets_quotient() {
        for (a, b) in [(1, 3), (-1, 3), (1, -3), (-7, -5)] {
            let x = Dyadic::from_int(a);
            let y = Dyadic::from_int(b);
            let lo = x.div(&y, 50, Round::Down).to_rational();
            let hi = x.div(&y, 50, Round::Up).to_rational();
            let q = ratio(a, b);
            assert!(lo <= q && q <= hi, "{a}/{b}");
            assert!(&hi - &lo < ratio(1, 1 << 40));
        }
    }

    #[test]
    fn ordering_and_magnitude() {
        let a = Dyadic::from_rational(&ratio(3, 4), 10, Round::Down);
        let b = Dyadic::from_int(1);
        assert!(a < b);
        assert!(-&b < a);
        assert_eq!(b.magnitude_bits(), 1);
        assert_eq!(a.magnitude_bits(), 0);
    }
}
