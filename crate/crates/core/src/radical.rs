//! Rigorous evaluation of finite towers `rₙ(c) = √(2 + ε₁√(2 + … + εₙ√(2 + c)))`
//! and of the error sequence `uₙ = 2ⁿ(r_∞ - rₙ)`.
//!
//! Signs are stored outermost first (`signs[0]` is `ε₁`), as they are written.
//! Evaluation runs innermost out, so it walks the list backwards; this is the
//! only place that reversal happens.

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::codec::{decode, SignWord, WordKind};
use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::exact::{ratio, Rational, Sign};
use crate::interval::DyadicInterval;
use crate::limits::sigma_table;
use crate::trig::{two_cos_pi, GUARD_BITS};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RadicalTower {
    pub signs: Vec<Sign>,
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub tail: Rational,
}

impl RadicalTower {
    pub fn new(signs: Vec<Sign>, tail: Rational) -> Result<Self> {
        if tail < ratio(-2, 1) || tail > ratio(2, 1) {
            return Err(Error::out_of_range(tail, "the tail range [-2, 2]"));
        }
        Ok(RadicalTower { signs, tail })
    }

    /// `rₙ = rₙ(0)`.
    pub fn plain(signs: Vec<Sign>) -> Self {
        RadicalTower {
            signs,
            tail: Rational::from_integer(BigInt::from(0)),
        }
    }

    /// The first `n` signs of a word with tail 0.
    pub fn prefix(word: &SignWord, n: usize) -> Self {
        RadicalTower::plain(word.prefix(n))
    }

    pub fn depth(&self) -> usize {
        self.signs.len()
    }
}

fn working_precision(prec: u32, depth: usize) -> u32 {
    prec + GUARD_BITS + (usize::BITS - depth.leading_zeros())
}

/// Enclosure of the tower's value at `prec` bits.
pub fn eval_tower(tower: &RadicalTower, prec: u32) -> Result<DyadicInterval> {
    let wp = working_precision(prec, tower.depth());
    Ok(eval_at(tower, wp)?.with_precision(prec))
}

fn eval_at(tower: &RadicalTower, wp: u32) -> Result<DyadicInterval> {
    let two = DyadicInterval::from_int(2, wp);
    let n = tower.depth();
    let mut v = two
        .add_rational(&tower.tail)
        .sqrt()
        .map_err(|_| Error::InconsistentTower { depth: n })?;
    for (i, &eps) in tower.signs.iter().enumerate().rev() {
        let radicand = match eps {
            Sign::Plus => two.add(&v),
            Sign::Minus => two.sub(&v),
        };
        v = radicand
            .sqrt()
            .map_err(|_| Error::InconsistentTower { depth: i })?;
    }
    Ok(v)
}

/// `uₙ = 2ⁿ(r_∞ - rₙ)` for `n = 1 ..= n_max`.
///
/// The subtraction cancels about `n` bits, so everything runs at
/// `prec + n_max + 64` bits. An entry whose width still exceeds `2^-prec`
/// is reported as [`Error::PrecisionExhausted`] instead of being returned.
pub fn u_sequence(word: &SignWord, n_max: usize, prec: u32) -> Result<Vec<Result<DyadicInterval>>> {
    if word.kind() != WordKind::TotallyPeriodic {
        return Err(Error::Unsupported(format!(
            "the error sequence needs a totally periodic word, got {word}"
        )));
    }
    if word.block().iter().all(|s| s.is_plus()) {
        return Err(Error::out_of_range(word, "words with a nontrivial block"));
    }
    if n_max == 0 {
        return Err(Error::out_of_range(n_max, "positive term counts"));
    }
    let wp = prec + n_max as u32 + 64;
    let q = decode(word)?;
    let limit = two_cos_pi(&q, wp);
    let tolerance = Dyadic::pow2(-(prec as i64));
    Ok((1..=n_max)
        .map(|n| {
            let r = eval_at(&RadicalTower::prefix(word, n), wp)?;
            let u = limit.sub(&r).mul_pow2(n as i64);
            if u.width() > tolerance {
                return Err(Error::PrecisionExhausted {
                    what: format!("u_{n}"),
                    bits: prec,
                });
            }
            Ok(u.with_precision(prec))
        })
        .collect())
}

/// Exact `a` with `r_(mp+j) = 2cos(aπ/4)` for a totally periodic word with
/// block length `p`.
///
/// With `X = 2^p σ_p / (2^p - δ_p)`, `a = 1 - X + δ_p^m (X - σ_j) / 2^(mp)`;
/// `j` ranges over `0..p` when `δ_p = 1` and `0..2p` when `δ_p = -1`.
pub fn iterate_angle(word: &SignWord, m: u64, j: usize) -> Result<Rational> {
    if word.kind() != WordKind::TotallyPeriodic {
        return Err(Error::Unsupported(format!(
            "iterate angles need a totally periodic word, got {word}"
        )));
    }
    let table = sigma_table(word.block())?;
    if j >= table.class_count() {
        return Err(Error::out_of_range(
            j,
            "offsets below p (or 2p when the block product is -1)",
        ));
    }
    let p = table.period() as u64;
    let x = table.series_limit();
    let scale = Rational::new(BigInt::one(), BigInt::one() << (m * p));
    let sign = match (table.delta_p, m % 2) {
        (Sign::Minus, 1) => Sign::Minus,
        _ => Sign::Plus,
    };
    let tail = sign.apply((&x - &table.sigma[j]) * scale);
    Ok(Rational::one() - x + tail)
}
