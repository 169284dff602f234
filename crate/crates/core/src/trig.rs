//! Reference values of π, `cos(aπ)` and `sin(aπ)` for rational `a`.
//!
//! π comes from Machin's formula in fixed point with an explicit ulp error
//! count; cosine and sine are argument-reduced to `[0, π/4]` exactly on the
//! rational angle and then summed as Taylor series in interval arithmetic,
//! closing with the alternating-series remainder bound. All work happens at the
//! requested precision plus [`GUARD_BITS`].

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::dyadic::Dyadic;
use crate::exact::{ratio, reduce_mod2, Rational};
use crate::interval::DyadicInterval;

pub const GUARD_BITS: u32 = 32;

/// Fixed-point `atan(1/x)·2^wp` and the bound on its error in ulps.
fn atan_inv_fixed(x: u64, wp: u32) -> (BigInt, u64) {
    let x = BigInt::from(x);
    let x2 = &x * &x;
    let mut power = (BigInt::one() << wp) / &x;
    let mut sum = BigInt::zero();
    let mut k = 0u64;
    while !power.is_zero() {
        let term = &power / (2 * k + 1);
        if k.is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
        power /= &x2;
        k += 1;
    }
    // each truncated term is off by less than one ulp, and the omitted tail is
    // below one ulp
    (sum, k + 1)
}

/// Enclosure of π.
pub fn pi(prec: u32) -> DyadicInterval {
    let wp = prec + GUARD_BITS;
    let (a, ea) = atan_inv_fixed(5, wp);
    let (b, eb) = atan_inv_fixed(239, wp);
    let approx = a * 16u32 - b * 4u32;
    let err = BigInt::from(16 * ea + 4 * eb);
    let lo = Dyadic::new(&approx - &err, -(wp as i64));
    let hi = Dyadic::new(approx + err, -(wp as i64));
    DyadicInterval::new(lo, hi, prec)
}

enum Kernel {
    Cos,
    Sin,
}

/// Taylor sum of cos or sin at an interval `x` with `|x| ≤ 1`.
fn taylor(x: &DyadicInterval, kernel: Kernel) -> DyadicInterval {
    let wp = x.precision();
    let x2 = x.square();
    let eps = Dyadic::pow2(-(wp as i64));
    let (mut term, mut sum, mut n) = match kernel {
        Kernel::Cos => (
            DyadicInterval::from_int(1, wp),
            DyadicInterval::from_int(1, wp),
            0i64,
        ),
        Kernel::Sin => (x.clone(), x.clone(), 1i64),
    };
    let mut negate = true;
    loop {
        term = term.mul(&x2).div_int((n + 1) * (n + 2));
        n += 2;
        let mag = term.mag();
        if mag < eps {
            return sum.inflate(&mag);
        }
        sum = if negate {
            sum.sub(&term)
        } else {
            sum.add(&term)
        };
        negate = !negate;
    }
}

/// Enclosure of `cos(angle·π)`.
pub fn cos_pi(angle: &Rational, prec: u32) -> DyadicInterval {
    let wp = prec + GUARD_BITS;
    let mut a = reduce_mod2(angle);
    if a > Rational::one() {
        a = Rational::from_integer(BigInt::from(2)) - a;
    }
    let mut negative = false;
    if a > ratio(1, 2) {
        a = Rational::one() - a;
        negative = true;
    }
    let value = if a > ratio(1, 4) {
        let r = ratio(1, 2) - a;
        taylor(&pi(wp).mul_rational(&r), Kernel::Sin)
    } else {
        taylor(&pi(wp).mul_rational(&a), Kernel::Cos)
    };
    let value = if negative { value.neg() } else { value };
    value.with_precision(prec)
}

/// Enclosure of `sin(angle·π)`.
pub fn sin_pi(angle: &Rational, prec: u32) -> DyadicInterval {
    cos_pi(&(ratio(1, 2) - angle), prec)
}

/// Enclosure of `2cos(angle·π)`.
pub fn two_cos_pi(angle: &Rational, prec: u32) -> DyadicInterval {
    cos_pi(angle, prec).mul_pow2(1)
}
