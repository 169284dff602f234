//! Outward-rounded intervals with dyadic endpoints.
//!
//! Every operation rounds `lo` down and `hi` up to the interval's working
//! precision, so an interval built from exact inputs always contains the exact
//! result. Mixed-precision operations run at the larger of the two precisions.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::dyadic::{Dyadic, Round};
use crate::error::{Error, Result};
use crate::exact::{Rational, Sign};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DyadicInterval {
    lo: Dyadic,
    hi: Dyadic,
    precision: u32,
}

impl DyadicInterval {
    /// Builds `[lo, hi]`, rounding both endpoints outward to `precision` bits.
    pub fn new(lo: Dyadic, hi: Dyadic, precision: u32) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        DyadicInterval {
            lo: lo.round(precision, Round::Down),
            hi: hi.round(precision, Round::Up),
            precision,
        }
    }

    pub fn point(x: Dyadic, precision: u32) -> Self {
        DyadicInterval::new(x.clone(), x, precision)
    }

    pub fn from_int(v: i64, precision: u32) -> Self {
        DyadicInterval::point(Dyadic::from_int(v), precision)
    }

    pub fn from_rational(q: &Rational, precision: u32) -> Self {
        DyadicInterval {
            lo: Dyadic::from_rational(q, precision, Round::Down),
            hi: Dyadic::from_rational(q, precision, Round::Up),
            precision,
        }
    }

    /// `[-r, r]`.
    pub fn symmetric(radius: Dyadic, precision: u32) -> Self {
        let r = radius.abs();
        DyadicInterval::new(-&r, r, precision)
    }

    pub fn lo(&self) -> &Dyadic {
        &self.lo
    }

    pub fn hi(&self) -> &Dyadic {
        &self.hi
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    /// Re-rounds outward to a new working precision.
    pub fn with_precision(&self, precision: u32) -> Self {
        DyadicInterval::new(self.lo.clone(), self.hi.clone(), precision)
    }

    pub fn width(&self) -> Dyadic {
        &self.hi - &self.lo
    }

    /// Exact midpoint.
    pub fn mid(&self) -> Dyadic {
        (&self.lo + &self.hi).mul_pow2(-1)
    }

    /// Exact half-width.
    pub fn radius(&self) -> Dyadic {
        self.width().mul_pow2(-1)
    }

    /// Upper bound on `|x|` over the interval.
    pub fn mag(&self) -> Dyadic {
        self.lo.abs().max(self.hi.abs())
    }

    pub fn contains(&self, x: &Dyadic) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn contains_rational(&self, q: &Rational) -> bool {
        &self.lo.to_rational() <= q && q <= &self.hi.to_rational()
    }

    pub fn overlaps(&self, other: &DyadicInterval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn is_subset_of(&self, other: &DyadicInterval) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    /// Sign of every point in the interval, or `None` if it straddles zero.
    pub fn sign(&self) -> Option<Sign> {
        if self.lo.is_positive() {
            Some(Sign::Plus)
        } else if self.hi.is_negative() {
            Some(Sign::Minus)
        } else {
            None
        }
    }

    /// Upper bound on `max |x - y|` over both intervals.
    pub fn distance_bound(&self, other: &DyadicInterval) -> Dyadic {
        (&self.hi - &other.lo)
            .abs()
            .max((&other.hi - &self.lo).abs())
    }

    pub fn width_f64(&self) -> f64 {
        self.width().to_f64()
    }

    pub fn mid_f64(&self) -> f64 {
        self.mid().to_f64()
    }

    /// Widens by `[-r, r]`.
    pub fn inflate(&self, r: &Dyadic) -> Self {
        let r = r.abs();
        DyadicInterval::new(&self.lo - &r, &self.hi + &r, self.precision)
    }

    pub fn hull(&self, other: &DyadicInterval) -> Self {
        DyadicInterval::new(
            self.lo.clone().min(other.lo.clone()),
            self.hi.clone().max(other.hi.clone()),
            self.precision.max(other.precision),
        )
    }

    /// Intersection with `[0, ∞)`; `None` when the interval is entirely negative.
    pub fn clamp_nonnegative(&self) -> Option<Self> {
        if self.hi.is_negative() {
            return None;
        }
        Some(DyadicInterval {
            lo: self.lo.clone().max(Dyadic::zero()),
            hi: self.hi.clone(),
            precision: self.precision,
        })
    }

    pub fn neg(&self) -> Self {
        DyadicInterval {
            lo: -&self.hi,
            hi: -&self.lo,
            precision: self.precision,
        }
    }

    pub fn abs(&self) -> Self {
        match self.sign() {
            Some(Sign::Plus) => self.clone(),
            Some(Sign::Minus) => self.neg(),
            None => DyadicInterval {
                lo: Dyadic::zero(),
                hi: self.mag(),
                precision: self.precision,
            },
        }
    }

    pub fn add(&self, rhs: &DyadicInterval) -> Self {
        DyadicInterval::new(
            &self.lo + &rhs.lo,
            &self.hi + &rhs.hi,
            self.precision.max(rhs.precision),
        )
    }

    pub fn sub(&self, rhs: &DyadicInterval) -> Self {
        DyadicInterval::new(
            &self.lo - &rhs.hi,
            &self.hi - &rhs.lo,
            self.precision.max(rhs.precision),
        )
    }

    pub fn mul(&self, rhs: &DyadicInterval) -> Self {
        let products = [
            &self.lo * &rhs.lo,
            &self.lo * &rhs.hi,
            &self.hi * &rhs.lo,
            &self.hi * &rhs.hi,
        ];
        let lo = products.iter().min().cloned().unwrap_or_else(Dyadic::zero);
        let hi = products.iter().max().cloned().unwrap_or_else(Dyadic::zero);
        DyadicInterval::new(lo, hi, self.precision.max(rhs.precision))
    }

    /// `x²`, tight when the interval contains zero.
    pub fn square(&self) -> Self {
        let a = &self.lo * &self.lo;
        let b = &self.hi * &self.hi;
        let (lo, hi) = if self.contains_zero() {
            (Dyadic::zero(), a.max(b))
        } else if a <= b {
            (a, b)
        } else {
            (b, a)
        };
        DyadicInterval::new(lo, hi, self.precision)
    }

    pub fn div(&self, rhs: &DyadicInterval) -> Result<Self> {
        if rhs.contains_zero() {
            return Err(Error::DivisionByZero);
        }
        let prec = self.precision.max(rhs.precision);
        let pairs = [
            (&self.lo, &rhs.lo),
            (&self.lo, &rhs.hi),
            (&self.hi, &rhs.lo),
            (&self.hi, &rhs.hi),
        ];
        let lo = pairs
            .iter()
            .map(|(a, b)| a.div(b, prec, Round::Down))
            .min()
            .unwrap_or_else(Dyadic::zero);
        let hi = pairs
            .iter()
            .map(|(a, b)| a.div(b, prec, Round::Up))
            .max()
            .unwrap_or_else(Dyadic::zero);
        Ok(DyadicInterval::new(lo, hi, prec))
    }

    pub fn div_int(&self, d: i64) -> Self {
        let di = DyadicInterval::from_int(d, self.precision);
        self.div(&di).expect("nonzero integer divisor")
    }

    pub fn mul_rational(&self, q: &Rational) -> Self {
        self.mul(&DyadicInterval::from_rational(q, self.precision))
    }

    pub fn add_rational(&self, q: &Rational) -> Self {
        self.add(&DyadicInterval::from_rational(q, self.precision))
    }

    /// Exact scaling by `2^e`.
    pub fn mul_pow2(&self, e: i64) -> Self {
        DyadicInterval {
            lo: self.lo.mul_pow2(e),
            hi: self.hi.mul_pow2(e),
            precision: self.precision,
        }
    }

    /// Outward-rounded square root. The caller guarantees the exact value is
    /// non-negative; any negative part produced by rounding is clipped.
    pub fn sqrt(&self) -> Result<Self> {
        let clamped = self
            .clamp_nonnegative()
            .ok_or(Error::InconsistentTower { depth: 0 })?;
        Ok(DyadicInterval {
            lo: clamped.lo.sqrt(self.precision, Round::Down),
            hi: clamped.hi.sqrt(self.precision, Round::Up),
            precision: self.precision,
        })
    }

    /// Largest `d` with `radius < 10^-d` (the count of guaranteed decimals);
    /// `None` for a point interval.
    pub fn guaranteed_digits(&self) -> Option<u32> {
        let r = self.radius();
        if r.is_zero() {
            return None;
        }
        let r = r.to_rational();
        let mut d = 0u32;
        let mut scale = Rational::from_integer(BigInt::from(1));
        let ten = Rational::from_integer(BigInt::from(10));
        // |r| < 10^-(d+1)  <=>  r * 10^(d+1) < 1
        loop {
            scale *= &ten;
            if &r * &scale >= Rational::from_integer(BigInt::from(1)) {
                return Some(d);
            }
            d += 1;
            if d > 100_000 {
                return Some(d);
            }
        }
    }

    /// Midpoint rounded to `digits` decimals.
    pub fn mid_decimal(&self, digits: u32) -> String {
        decimal_string(&self.mid().to_rational(), digits)
    }

    /// `mid ± radius`, printing only guaranteed decimals.
    pub fn render(&self) -> String {
        let digits = self.guaranteed_digits().unwrap_or(40).min(2000);
        format!(
            "{} ± {:.1e}",
            self.mid_decimal(digits),
            self.radius().to_f64()
        )
    }
}

/// Decimal expansion of `q` rounded half away from zero to `digits` places.
pub fn decimal_string(q: &Rational, digits: u32) -> String {
    let scale = BigInt::from(10).pow(digits);
    let scaled = q * Rational::from_integer(scale);
    let rounded = scaled.abs().round().to_integer();
    let neg = q.is_negative() && !rounded.is_zero();
    let s = rounded.to_string();
    let d = digits as usize;
    let body = if d == 0 {
        s
    } else if s.len() <= d {
        format!("0.{}{}", "0".repeat(d - s.len()), s)
    } else {
        format!("{}.{}", &s[..s.len() - d], &s[s.len() - d..])
    };
    if neg {
        format!("-{body}")
    } else {
        body
    }
}

impl fmt::Display for DyadicInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
