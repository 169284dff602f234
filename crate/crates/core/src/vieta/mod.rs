//! Vieta-style products
//!
//! `2cos(2qπ) / ((1-4q)π sin(qπ)) = (2cos(qπ) + √2)/2 · Π_i Π_(j=1..p) (|2cos(2^(p-j) qπ)| + s_(pi+j)) / 2`
//!
//! for `0 < q < 1/2` with odd denominator. `p` and the signs `ε₁…ε_p` come from
//! the periodic block of `2cos(qπ)`, and the `s` sequence runs the block
//! backwards: `s₀ = √2`, `s_(pn+i) = √(2 + ε_(p+1-i) s_(pn+i-1))`.
//!
//! `q = 1/3` gives `2√3/π = (1+√2)/2 · (1+√(2-√2))/2 · …`.

pub mod latex;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::codec::encode_rational;
use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::exact::{in_open_half, reduce_mod2, shl_rational, Rational, Sign};
use crate::interval::DyadicInterval;
use crate::trig::{pi, sin_pi, two_cos_pi, GUARD_BITS};

pub use latex::render_latex;

/// Block data of an admissible `q`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProductShape {
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub q: Rational,
    pub block: Vec<Sign>,
    pub delta_p: Sign,
}

impl ProductShape {
    pub fn new(q: &Rational) -> Result<Self> {
        if !in_open_half(q) {
            return Err(Error::out_of_range(q, "the open interval (0, 1/2)"));
        }
        if !q.denom().bit(0) {
            return Err(Error::EvenDenominator(q.to_string()));
        }
        let word = encode_rational(q)?;
        let block = word.block().to_vec();
        Ok(ProductShape {
            q: q.clone(),
            delta_p: Sign::product(&block),
            block,
        })
    }

    pub fn period(&self) -> usize {
        self.block.len()
    }

    /// Sign used to step from `s_(t-1)` to `s_t` (`t ≥ 1`).
    pub fn step_sign(&self, t: u64) -> Sign {
        let p = self.period() as u64;
        let i = ((t - 1) % p) as usize + 1;
        self.block[self.period() - i]
    }

    /// `2^(p-j) q` reduced mod 2, for `j` in `1..=p`.
    pub fn cosine_angle(&self, j: usize) -> Rational {
        reduce_mod2(&shl_rational(&self.q, (self.period() - j) as u64))
    }
}

fn s_values(shape: &ProductShape, n_max: u64, wp: u32) -> Vec<DyadicInterval> {
    let two = DyadicInterval::from_int(2, wp);
    let mut s = Vec::with_capacity(n_max as usize + 1);
    s.push(two.sqrt().expect("2 is positive"));
    for t in 1..=n_max {
        let prev = &s[t as usize - 1];
        let radicand = match shape.step_sign(t) {
            Sign::Plus => two.add(prev),
            Sign::Minus => two.sub(prev),
        };
        s.push(radicand.sqrt().expect("radicands stay in [0, 4]"));
    }
    s
}

fn working_precision(prec: u32, steps: u64) -> u32 {
    prec + GUARD_BITS + (u64::BITS - steps.leading_zeros())
}

/// `s₀ … s_(n_max)`.
pub fn s_sequence(q: &Rational, n_max: u64, prec: u32) -> Result<Vec<DyadicInterval>> {
    let shape = ProductShape::new(q)?;
    let wp = working_precision(prec, n_max);
    Ok(s_values(&shape, n_max, wp)
        .into_iter()
        .map(|s| s.with_precision(prec))
        .collect())
}

fn target_at(q: &Rational, wp: u32) -> Result<DyadicInterval> {
    let num = two_cos_pi(&shl_rational(q, 1), wp);
    let scale = Rational::one() - Rational::from_integer(BigInt::from(4)) * q;
    let den = pi(wp).mul(&sin_pi(q, wp)).mul_rational(&scale);
    num.div(&den)
}

/// `2cos(2qπ) / ((1-4q)π sin(qπ))`.
pub fn vieta_target(q: &Rational, prec: u32) -> Result<DyadicInterval> {
    ProductShape::new(q)?;
    Ok(target_at(q, prec + GUARD_BITS)?.with_precision(prec))
}

/// One stream factor `(|2cos(aπ)| + s_(pi+j)) / 2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VietaFactor {
    /// Block repetition, from 0.
    pub i: u64,
    /// Position in the block, `1..=p`.
    pub j: usize,
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub cosine_angle: Rational,
    pub s_index: u64,
    #[serde(serialize_with = "crate::report::ser_interval")]
    pub value: DyadicInterval,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorStream {
    pub shape: ProductShape,
    /// `(2cos(qπ) + √2) / 2`.
    #[serde(serialize_with = "crate::report::ser_interval")]
    pub leading: DyadicInterval,
    pub factors: Vec<VietaFactor>,
}

fn stream_at(q: &Rational, count: u64, wp: u32) -> Result<FactorStream> {
    let shape = ProductShape::new(q)?;
    let p = shape.period();
    let s = s_values(&shape, count, wp);
    let magnitudes: Vec<DyadicInterval> = (1..=p)
        .map(|j| two_cos_pi(&shape.cosine_angle(j), wp).abs())
        .collect();
    let leading = two_cos_pi(q, wp).add(&s[0]).mul_pow2(-1);
    let factors = (1..=count)
        .map(|t| {
            let i = (t - 1) / p as u64;
            let j = ((t - 1) % p as u64) as usize + 1;
            VietaFactor {
                i,
                j,
                cosine_angle: shape.cosine_angle(j),
                s_index: t,
                value: magnitudes[j - 1].add(&s[t as usize]).mul_pow2(-1),
            }
        })
        .collect();
    Ok(FactorStream {
        shape,
        leading,
        factors,
    })
}

/// The leading factor and the first `count` stream factors, in `(i, j)` order.
pub fn vieta_factors(q: &Rational, count: u64, prec: u32) -> Result<FactorStream> {
    let wp = working_precision(prec, count);
    let mut stream = stream_at(q, count, wp)?;
    stream.leading = stream.leading.with_precision(prec);
    for f in &mut stream.factors {
        f.value = f.value.with_precision(prec);
    }
    Ok(stream)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProductReport {
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub q: Rational,
    pub period: usize,
    pub delta_p: Sign,
    #[serde(serialize_with = "crate::report::ser_interval")]
    pub target: DyadicInterval,
    /// `partials[k]`: the leading factor times the first `k` stream factors.
    #[serde(serialize_with = "crate::report::ser_intervals")]
    pub partials: Vec<DyadicInterval>,
    pub factor_count: u64,
    /// Upper bounds on `|partials[k] - target|`.
    pub distances: Vec<f64>,
    /// True when some partial came out wider than `2^-precision`.
    pub precision_exhausted: bool,
    pub precision: u32,
}

impl ProductReport {
    /// Distance bound at the last whole-block partial. Single factors do not
    /// tend to 1 when `p > 1`; only whole blocks do.
    pub fn final_distance(&self) -> f64 {
        let k = (self.factor_count as usize / self.period) * self.period;
        self.distances[k]
    }

    /// Partial products after whole blocks (`k = 0, p, 2p, …`).
    pub fn block_partials(&self) -> impl Iterator<Item = &DyadicInterval> {
        self.partials.iter().step_by(self.period)
    }
}

pub fn verify_product(q: &Rational, factor_count: u64, prec: u32) -> Result<ProductReport> {
    let wp = working_precision(prec, factor_count) + 16;
    let stream = stream_at(q, factor_count, wp)?;
    let target = target_at(q, wp)?;
    let mut partials = Vec::with_capacity(factor_count as usize + 1);
    partials.push(stream.leading.clone());
    for f in &stream.factors {
        let next = partials.last().expect("nonempty").mul(&f.value);
        partials.push(next);
    }
    let tolerance = Dyadic::pow2(-(prec as i64));
    let precision_exhausted = partials.iter().any(|p| p.width() > tolerance);
    let distances = partials
        .iter()
        .map(|p| p.distance_bound(&target).to_f64())
        .collect();
    Ok(ProductReport {
        q: q.clone(),
        period: stream.shape.period(),
        delta_p: stream.shape.delta_p,
        target: target.with_precision(prec),
        partials: partials
            .into_iter()
            .map(|p| p.with_precision(prec))
            .collect(),
        factor_count,
        distances,
        precision_exhausted,
        precision: prec,
    })
}

/// Products `w_i = Π_(j=1..p)` of the stream factors of block `i`, for
/// `i < blocks`.
pub fn block_products(q: &Rational, blocks: u64, prec: u32) -> Result<Vec<DyadicInterval>> {
    let p = ProductShape::new(q)?.period() as u64;
    let wp = working_precision(prec, blocks * p);
    let stream = stream_at(q, blocks * p, wp)?;
    Ok(stream
        .factors
        .chunks(p as usize)
        .map(|chunk| {
            chunk
                .iter()
                .fold(DyadicInterval::from_int(1, wp), |acc, f| acc.mul(&f.value))
                .with_precision(prec)
        })
        .collect())
}

/// Both sides of
/// `2^(p(n+1)) (2cos(qπ) - s_(p(n+1))) · w₀⋯w_n = δ_p^(n+1) (2cos(qπ) - √2)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TelescopeCheck {
    pub n: u64,
    #[serde(serialize_with = "crate::report::ser_interval")]
    pub lhs: DyadicInterval,
    #[serde(serialize_with = "crate::report::ser_interval")]
    pub rhs: DyadicInterval,
    pub holds: bool,
}

/// Checks the identity for every `n ≤ n_max`.
pub fn telescoping_checks(q: &Rational, n_max: u64, prec: u32) -> Result<Vec<TelescopeCheck>> {
    let shape = ProductShape::new(q)?;
    let p = shape.period() as u64;
    let steps = p * (n_max + 1);
    // the difference 2cos(qπ) - s_(p(n+1)) cancels about p(n+1) bits
    let wp = working_precision(prec, steps) + steps as u32;
    let stream = stream_at(q, steps, wp)?;
    let s = s_values(&shape, steps, wp);
    let c = two_cos_pi(q, wp);
    let base = c.sub(&s[0]);
    let mut product = DyadicInterval::from_int(1, wp);
    let mut out = Vec::with_capacity(n_max as usize + 1);
    for (n, chunk) in stream.factors.chunks(p as usize).enumerate() {
        for f in chunk {
            product = product.mul(&f.value);
        }
        let n = n as u64;
        let e = p * (n + 1);
        let lhs = c.sub(&s[e as usize]).mul_pow2(e as i64).mul(&product);
        let rhs = match (shape.delta_p, n % 2) {
            (Sign::Minus, 0) => base.neg(),
            _ => base.clone(),
        };
        out.push(TelescopeCheck {
            n,
            holds: lhs.overlaps(&rhs),
            lhs: lhs.with_precision(prec),
            rhs: rhs.with_precision(prec),
        });
    }
    Ok(out)
}
