//! JSON shapes shared by the CLI and the verification suites.
//!
//! Exact rationals are always strings `"num/den"`; big integers are strings;
//! intervals are `{ "mid", "radius", "digits", "lo", "hi" }` with decimal
//! strings limited to guaranteed digits.

use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use crate::exact::{format_rational, Rational};
use crate::interval::DyadicInterval;

pub fn ser_bigint<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

pub fn ser_rational<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(q))
}

pub fn ser_rationals<S: Serializer>(qs: &[Rational], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(qs.iter().map(format_rational))
}

pub fn ser_interval<S: Serializer>(x: &DyadicInterval, s: S) -> Result<S::Ok, S::Error> {
    IntervalJson::from(x).serialize(s)
}

pub fn ser_intervals<S: Serializer>(xs: &[DyadicInterval], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(xs.iter().map(IntervalJson::from))
}

/// Decimal view of an interval.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IntervalJson {
    /// Midpoint rounded to `digits` decimals.
    pub mid: String,
    /// Half-width, as a float (it is only an error bar).
    pub radius: f64,
    /// Decimals guaranteed by the radius: the largest `d` with `radius < 10^-d`.
    pub digits: u32,
    /// Endpoints rounded outward to `digits + 3` decimals.
    pub lo: String,
    pub hi: String,
}

const MAX_DIGITS: u32 = 2000;

impl From<&DyadicInterval> for IntervalJson {
    fn from(x: &DyadicInterval) -> Self {
        let digits = x.guaranteed_digits().unwrap_or(40).min(MAX_DIGITS);
        let edge = digits + 3;
        IntervalJson {
            mid: x.mid_decimal(digits),
            radius: x.radius().to_f64(),
            digits,
            lo: outward_decimal(&x.lo().to_rational(), edge, false),
            hi: outward_decimal(&x.hi().to_rational(), edge, true),
        }
    }
}

fn outward_decimal(q: &Rational, digits: u32, up: bool) -> String {
    let scale = Rational::from_integer(BigInt::from(10).pow(digits));
    let scaled = q * &scale;
    let r = if up { scaled.ceil() } else { scaled.floor() };
    crate::interval::decimal_string(&(r / scale), digits)
}
