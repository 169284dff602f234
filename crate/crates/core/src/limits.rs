//! Exact limit data of totally periodic radicals.
//!
//! For a block `ε₁…ε_p` let `δᵢ = ε₁…εᵢ` (continued periodically) and
//! `σⱼ = Σ_{i≤j} δᵢ/2ⁱ` with `δ₀ = 0`. With `X = 2^p σ_p / (2^p - δ_p)` the
//! limit is `2cos(qπ)` where `q = (1 - X)/4`, and the error sequence
//! `uₙ = 2ⁿ(r_∞ - rₙ)` has one limit point per residue class of `n` modulo
//! `p` (when `δ_p = 1`) or `2p` (when `δ_p = -1`):
//!
//! `L_j = c_j · π · sin(qπ)` with `c_j = 2^(j-1) (X - σ_j)`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{in_open_half, ratio, Rational, Sign};
use crate::interval::DyadicInterval;
use crate::trig::{pi, sin_pi, GUARD_BITS};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SigmaTable {
    pub block: Vec<Sign>,
    /// `δ₀ … δ_N` with `δ₀ = 0`; `N = p` when `δ_p = 1`, `N = 2p` otherwise.
    pub delta: Vec<i32>,
    #[serde(serialize_with = "crate::report::ser_rationals")]
    pub sigma: Vec<Rational>,
    pub delta_p: Sign,
}

impl SigmaTable {
    pub fn period(&self) -> usize {
        self.block.len()
    }

    /// Number of residue classes of `uₙ`: `p` or `2p`.
    pub fn class_count(&self) -> usize {
        match self.delta_p {
            Sign::Plus => self.period(),
            Sign::Minus => 2 * self.period(),
        }
    }

    /// `X = 2^p σ_p / (2^p - δ_p)`.
    pub fn series_limit(&self) -> Rational {
        let p_pow = Rational::from_integer(BigInt::one() << self.period());
        let den = &p_pow - self.delta_p.apply(Rational::one());
        p_pow * &self.sigma[self.period()] / den
    }
}

pub fn sigma_table(block: &[Sign]) -> Result<SigmaTable> {
    if block.is_empty() {
        return Err(Error::out_of_range("empty block", "nonempty sign blocks"));
    }
    let p = block.len();
    let delta_p = Sign::product(block);
    let len = match delta_p {
        Sign::Plus => p,
        Sign::Minus => 2 * p,
    };
    let mut delta = vec![0];
    let mut sigma = vec![Rational::zero()];
    let mut running = Sign::Plus;
    let mut scale = Rational::one();
    let half = ratio(1, 2);
    for i in 0..len {
        running = running * block[i % p];
        scale *= &half;
        delta.push(running.to_i32());
        let next = &sigma[i] + running.apply(scale.clone());
        sigma.push(next);
    }
    Ok(SigmaTable {
        block: block.to_vec(),
        delta,
        sigma,
        delta_p,
    })
}

/// `q` of the limit `2cos(qπ)`; the all-plus block gives `0` (limit 2).
pub fn limit_value(block: &[Sign]) -> Result<Rational> {
    let table = sigma_table(block)?;
    Ok((Rational::one() - table.series_limit()) / Rational::from_integer(BigInt::from(4)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LimitPointSet {
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub q: Rational,
    pub delta_p: Sign,
    /// `c_j` for `j = 0 … p-1` or `0 … 2p-1`.
    #[serde(serialize_with = "crate::report::ser_rationals")]
    pub coefficients: Vec<Rational>,
}

impl LimitPointSet {
    /// Residue modulus of the subsequences `u_(m·P + j)`.
    pub fn class_count(&self) -> usize {
        self.coefficients.len()
    }

    /// Enclosures of `c_j · π · sin(qπ)`.
    pub fn values(&self, precision: u32) -> Vec<DyadicInterval> {
        let wp = precision + GUARD_BITS;
        let base = pi(wp).mul(&sin_pi(&self.q, wp));
        self.coefficients
            .iter()
            .map(|c| base.mul_rational(c).with_precision(precision))
            .collect()
    }
}

pub fn limit_points(block: &[Sign]) -> Result<LimitPointSet> {
    if block.iter().all(|s| s.is_plus()) {
        return Err(Error::out_of_range(
            "all-plus block",
            "blocks with at least one minus sign",
        ));
    }
    let table = sigma_table(block)?;
    let x = table.series_limit();
    let q = (Rational::one() - &x) / Rational::from_integer(BigInt::from(4));
    let coefficients = (0..table.class_count())
        .map(|j| {
            let diff = &x - &table.sigma[j];
            if j == 0 {
                diff / Rational::from_integer(BigInt::from(2))
            } else {
                diff * Rational::from_integer(BigInt::one() << (j - 1))
            }
        })
        .collect();
    Ok(LimitPointSet {
        q,
        delta_p: table.delta_p,
        coefficients,
    })
}

/// `c₀ = (1 - 4q)/2`, the limit coefficient of `u_(pn)` (even multiples of
/// `p` when `δ_p = -1`).
pub fn first_limit_coefficient(q: &Rational) -> Result<Rational> {
    if !in_open_half(q) {
        return Err(Error::out_of_range(q, "the open interval (0, 1/2)"));
    }
    if !q.denom().bit(0) {
        return Err(Error::EvenDenominator(q.to_string()));
    }
    Ok(
        (Rational::one() - Rational::from_integer(BigInt::from(4)) * q)
            / Rational::from_integer(BigInt::from(2)),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codec::{decode, encode_rational, parse_signs, SignWord};

    fn b(s: &str) -> Vec<Sign> {
        parse_signs(s).unwrap()
    }

    fn rs(v: &[(i64, i64)]) -> Vec<Rational> {
        v.iter().map(|&(n, d)| ratio(n, d)).collect()
    }

    #[test]
    fn sigma_table_examples() {
        let t = sigma_table(&b("-+-")).unwrap();
        assert_eq!(t.delta, vec![0, -1, -1, 1]);
        assert_eq!(t.sigma, rs(&[(0, 1), (-1, 2), (-3, 4), (-5, 8)]));
        assert_eq!(t.delta_p, Sign::Plus);

        let t = sigma_table(&b("+-")).unwrap();
        assert_eq!(t.delta, vec![0, 1, -1, -1, 1]);
        assert_eq!(t.sigma, rs(&[(0, 1), (1, 2), (1, 4), (1, 8), (3, 16)]));
        assert_eq!(t.delta_p, Sign::Minus);

        let t = sigma_table(&b("+")).unwrap();
        assert_eq!(t.delta, vec![0, 1]);
        assert_eq!(t.sigma, rs(&[(0, 1), (1, 2)]));
        assert!(sigma_table(&[]).is_err());
    }

    #[test]
    fn limit_value_examples() {
        assert_eq!(limit_value(&b("-")).unwrap(), ratio(1, 3));
        assert_eq!(limit_value(&b("-+-")).unwrap(), ratio(3, 7));
        assert_eq!(limit_value(&b("+-")).unwrap(), ratio(1, 5));
        assert_eq!(limit_value(&b("+")).unwrap(), ratio(0, 1));
    }

    #[test]
    fn limit_point_examples() {
        let lp = limit_points(&b("-+-")).unwrap();
        assert_eq!(lp.coefficients, rs(&[(-5, 14), (-3, 14), (1, 14)]));
        let lp = limit_points(&b("-")).unwrap();
        assert_eq!(lp.coefficients, rs(&[(-1, 6), (1, 6)]));
        let lp = limit_points(&b("+-")).unwrap();
        assert_eq!(lp.coefficients, rs(&[(1, 10), (-3, 10), (-1, 10), (3, 10)]));
        assert!(limit_points(&b("++")).is_err());
    }

    #[test]
    fn first_coefficient_examples() {
        assert_eq!(first_limit_coefficient(&ratio(1, 3)).unwrap(), ratio(-1, 6));
        assert_eq!(
            first_limit_coefficient(&ratio(3, 7)).unwrap(),
            ratio(-5, 14)
        );
        assert_eq!(first_limit_coefficient(&ratio(1, 5)).unwrap(), ratio(1, 10));
        assert!(first_limit_coefficient(&ratio(1, 8)).is_err());
    }

    #[test]
    fn sqrt3_pi_over_12() {
        let lp = limit_points(&b("-")).unwrap();
        let v = lp.values(128);
        let expected = 3f64.sqrt() * std::f64::consts::PI / 12.0;
        assert!((v[0].mid_f64() + expected).abs() < 1e-15);
        assert!((v[1].mid_f64() - expected).abs() < 1e-15);
    }

    fn all_blocks(max_len: usize) -> impl Iterator<Item = Vec<Sign>> {
        (1..=max_len).flat_map(|len| {
            (0..(1u32 << len)).map(move |bits| {
                (0..len)
                    .map(|i| {
                        if bits >> i & 1 == 1 {
                            Sign::Minus
                        } else {
                            Sign::Plus
                        }
                    })
                    .collect()
            })
        })
    }

    #[test]
    fn consistency_over_all_short_blocks() {
        for block in all_blocks(8) {
            if block.iter().all(|s| s.is_plus()) {
                continue;
            }
            let q = limit_value(&block).unwrap();
            let lp = limit_points(&block).unwrap();
            assert_eq!(lp.q, q);
            assert_eq!(first_limit_coefficient(&q).unwrap(), lp.coefficients[0]);
            assert_eq!(decode(&SignWord::periodic(block.clone())).unwrap(), q);
            let table = sigma_table(&block).unwrap();
            let mut sorted = table.sigma.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(
                sorted.len(),
                table.sigma.len(),
                "sigma repeats for {block:?}"
            );
            if crate::codec::primitive_period(&block) < block.len() {
                continue;
            }
            let mut coeffs = lp.coefficients.clone();
            coeffs.sort();
            coeffs.dedup();
            assert_eq!(
                coeffs.len(),
                lp.coefficients.len(),
                "coefficients repeat for {block:?}"
            );
        }
    }

    #[test]
    fn encoded_blocks_round_trip_through_limit_value() {
        for (n, d) in [(1, 3), (1, 5), (3, 7), (4, 17), (10, 31), (5, 33)] {
            let q = ratio(n, d);
            let word = encode_rational(&q).unwrap();
            assert_eq!(limit_value(word.block()).unwrap(), q);
        }
    }
}
