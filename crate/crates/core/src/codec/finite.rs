//! Finite radicals `√(2 + ε₁√(2 + … + ε_k√2))` and their closed form
//! `2cos(βπ / 2^(k+2))` with odd `β`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{Rational, Sign};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiniteClosedForm {
    #[serde(serialize_with = "crate::report::ser_bigint")]
    pub beta: BigInt,
    pub k: u32,
}

impl FiniteClosedForm {
    pub fn new(beta: BigInt, k: u32) -> Result<Self> {
        let max = (BigInt::one() << (k + 1)) - 1;
        if beta.is_even() || beta < BigInt::one() || beta > max {
            return Err(Error::out_of_range(
                beta,
                "odd integers in [1, 2^(k+1) - 1]",
            ));
        }
        Ok(FiniteClosedForm { beta, k })
    }

    /// `q` with value `2cos(qπ)`, i.e. `β / 2^(k+2)`.
    pub fn angle(&self) -> Rational {
        Rational::new(self.beta.clone(), BigInt::one() << (self.k + 2))
    }

    /// Recovers the signs: `α = 2^k - β` is split into running products
    /// `δ`, and then `ε_r = δ_r / δ_(r-1)`.
    pub fn signs(&self) -> Vec<Sign> {
        if self.k == 0 {
            return Vec::new();
        }
        let alpha = (BigInt::one() << self.k) - &self.beta;
        let mut deltas = odd_decomposition(&alpha, self.k).expect("alpha in range by construction");
        // odd_decomposition lists the coefficient of 2^(i-1) first, which is δ_(k+1-i)
        deltas.reverse();
        let mut prev = Sign::Plus;
        deltas
            .into_iter()
            .map(|d| {
                let eps = d * prev;
                prev = d;
                eps
            })
            .collect()
    }
}

/// The unique `ε₁…ε_k` with `Σ 2^(i-1) ε_i = alpha`.
pub fn odd_decomposition(alpha: &BigInt, k: u32) -> Result<Vec<Sign>> {
    let bound = (BigInt::one() << k) - 1;
    if alpha.is_even() || alpha.abs() > bound {
        return Err(Error::out_of_range(
            alpha,
            "odd integers with |alpha| <= 2^k - 1",
        ));
    }
    let mut rest = alpha.clone();
    let mut signs = vec![Sign::Plus; k as usize];
    for i in (1..=k).rev() {
        let weight = BigInt::one() << (i - 1);
        if rest.is_negative() {
            signs[(i - 1) as usize] = Sign::Minus;
            rest += weight;
        } else {
            rest -= weight;
        }
    }
    debug_assert!(num_traits::Zero::is_zero(&rest));
    Ok(signs)
}

/// Closed form of the finite radical with the given signs.
pub fn finite_closed_form(signs: &[Sign]) -> FiniteClosedForm {
    let k = signs.len() as u32;
    let mut delta = Sign::Plus;
    let mut alpha = BigInt::from(0);
    for (i, &eps) in signs.iter().enumerate() {
        delta = delta * eps;
        let weight = BigInt::one() << (signs.len() - 1 - i);
        alpha += weight * delta.to_i32();
    }
    let beta = (BigInt::one() << k) - alpha;
    FiniteClosedForm { beta, k }
}
