//! Conversion between angles `q` (value `2cos(qπ)`) and sign words.
//!
//! Every `x ∈ (0, 2)` is `2cos φ` with `0 < φ < π/2`, and its signs are
//! `ε_n = sign cos(2ⁿφ)`. For rational `q = t / (2^k s)` with odd `s`:
//!
//! * `s = 1` gives a finite radical with `k - 2` signs;
//! * otherwise the first `k` signs form the preamble and the rest repeats
//!   with period equal to the semi-order of 2 modulo `s`.
//!
//! Decoding sums `q = (1 - Σ δᵢ/2ⁱ) / 4` with `δᵢ = ε₁…εᵢ`, closing the
//! periodic tail with a geometric series, so both directions are exact.

pub mod finite;
pub mod word;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{
    cos_sign, in_open_half, ratio, reduce_mod2, semi_order, shl_rational, split_two_power,
    Rational, SemiOrder, Sign,
};
use crate::interval::DyadicInterval;

pub use finite::{finite_closed_form, odd_decomposition, FiniteClosedForm};
pub use word::{parse_signs, primitive_period, render_signs, SignWord, WordKind};

fn check_open_half(q: &Rational) -> Result<()> {
    if !in_open_half(q) {
        return Err(Error::out_of_range(q, "the open interval (0, 1/2)"));
    }
    Ok(())
}

/// Signs `ε_i = sign cos(2^i · angle · π)` for `i` in `first..=last`.
fn doubling_signs(angle: &Rational, first: u64, last: u64) -> Vec<Sign> {
    (first..=last)
        .map(|i| cos_sign(&shl_rational(angle, i)).expect("cosine vanishes only at dyadic angles"))
        .collect()
}

/// Writes `2cos(aπ) = ε · 2cos(a₀π)` with `a₀ ∈ [0, 1/2]`.
///
/// `a` and `2 - a` give the same cosine; of `a₀` and `1 - a₀` only one lands
/// in `[0, 1/2]`, which fixes the sign `ε`.
pub fn residual_angle(angle: &Rational) -> (Sign, Rational) {
    let a = reduce_mod2(angle);
    let two = Rational::from_integer(BigInt::from(2));
    let folded = if a > Rational::one() { &two - &a } else { a };
    let half = ratio(1, 2);
    let candidates = [
        (Sign::Plus, folded.clone()),
        (Sign::Minus, Rational::one() - &folded),
    ];
    candidates
        .into_iter()
        .find(|(_, r)| !r.is_negative() && r <= &half)
        .expect("one candidate lies in [0, 1/2]")
}

/// Sign word of `2cos(qπ)` for `0 < q < 1/2`.
pub fn encode_rational(q: &Rational) -> Result<SignWord> {
    check_open_half(q)?;
    let split = split_two_power(q);
    if split.s.is_one() {
        // q = β / 2^(depth+2), a finite radical
        let depth = split.k - 2;
        let signs = doubling_signs(q, 1, depth);
        debug_assert_eq!(finite_closed_form(&signs).beta, split.t);
        return Ok(SignWord::finite(signs));
    }
    let SemiOrder { period, .. } = semi_order(&split.s)?;
    let preamble = doubling_signs(q, 1, split.k);
    let (bridge, residual) = residual_angle(&shl_rational(q, split.k));
    if let Some(&last) = preamble.last() {
        assert_eq!(
            last, bridge,
            "bridging sign disagrees with the quadrant sign"
        );
    }
    let block = doubling_signs(&residual, 1, period);
    assert_eq!(
        primitive_period(&block),
        block.len(),
        "block of {q} is not primitive at the semi-order period"
    );
    let word = SignWord::new(preamble, block);
    debug_assert!(word.is_canonical());
    Ok(word)
}

/// Exact `q` with `2cos(qπ)` equal to the limit of the word's radical.
pub fn decode(word: &SignWord) -> Result<Rational> {
    if word.spells_set_a() {
        return Err(Error::NonCanonical(word.render()));
    }
    let mut delta = Sign::Plus;
    let mut sum = Rational::zero();
    let mut scale = Rational::one();
    let half = ratio(1, 2);
    for &eps in word.preamble() {
        delta = delta * eps;
        scale *= &half;
        sum += delta.apply(scale.clone());
    }
    if !word.is_finite() {
        // δ_(P+mp+j) = δ_P · d_p^m · d_j, summed as a geometric series in m
        let mut d = Sign::Plus;
        let mut block_sum = Rational::zero();
        let mut block_scale = Rational::one();
        for &eps in word.block() {
            d = d * eps;
            block_scale *= &half;
            block_sum += d.apply(block_scale.clone());
        }
        let p_pow = Rational::from_integer(BigInt::one() << word.block().len());
        let ratio_den = &p_pow - d.apply(Rational::one());
        let tail = delta.apply(scale * block_sum * p_pow / ratio_den);
        sum += tail;
    }
    Ok((Rational::one() - sum) / Rational::from_integer(BigInt::from(4)))
}

/// Minimal period of the radical of `2cos(qπ)` for odd-denominator `q`.
pub fn minimal_period(q: &Rational) -> Result<u64> {
    check_open_half(q)?;
    if q.denom().bit(0) {
        Ok(semi_order(q.denom())?.period)
    } else {
        Err(Error::EvenDenominator(q.to_string()))
    }
}

/// Classification summary of `2cos(qπ)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub kind: WordKind,
    pub word: SignWord,
    /// Number of signs in a finite radical.
    pub depth: Option<usize>,
    pub preamble_len: usize,
    pub period: Option<u64>,
    /// Whether `2^p ≡ +1` or `-1` modulo the odd part of the denominator.
    pub semi_order_sign: Option<Sign>,
}

pub fn classify(q: &Rational) -> Result<Classification> {
    let word = encode_rational(q)?;
    let split = split_two_power(q);
    let (period, semi_order_sign) = if split.s.is_one() {
        (None, None)
    } else {
        let so = semi_order(&split.s)?;
        (Some(so.period), Some(so.sign))
    };
    Ok(Classification {
        kind: word.kind(),
        depth: word.is_finite().then(|| word.preamble().len()),
        preamble_len: if word.is_finite() {
            0
        } else {
            word.preamble().len()
        },
        period,
        semi_order_sign,
        word,
    })
}

/// Result of reading signs off an enclosure of `x = 2cos φ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RealEncoding {
    pub signs: Vec<Sign>,
    /// 1-based index of the first sign that could not be decided.
    pub undecidable_at: Option<usize>,
}

/// First `n` signs of `x ∈ (0, 2)` from `y₁ = x² - 2`, `y_(i+1) = y_i² - 2`
/// (so `y_i` encloses `2cos(2^i φ)`), stopping at the first `y_i` that
/// straddles zero.
pub fn encode_real(x: &DyadicInterval, n: usize, precision: u32) -> Result<RealEncoding> {
    let two = DyadicInterval::from_int(2, precision);
    if !x.lo().is_positive() || x.hi() >= two.hi() {
        return Err(Error::out_of_range(x.render(), "the open interval (0, 2)"));
    }
    let mut y = x.with_precision(precision);
    let mut signs = Vec::with_capacity(n);
    for i in 1..=n {
        y = y.square().sub(&two);
        match y.sign() {
            Some(s) => signs.push(s),
            None => {
                return Ok(RealEncoding {
                    signs,
                    undecidable_at: Some(i),
                })
            }
        }
    }
    Ok(RealEncoding {
        signs,
        undecidable_at: None,
    })
}
