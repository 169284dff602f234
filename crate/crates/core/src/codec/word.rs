use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::Sign;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WordKind {
    Finite,
    TotallyPeriodic,
    EventuallyPeriodic,
}

/// Sign sequence of a continued radical `√(2 + ε₁√(2 + ε₂√(2 + …)))`,
/// written as a finite preamble followed by a block repeated forever.
///
/// An empty block denotes the finite radical `√(2 + ε₁√(2 + … + ε_k√2))`
/// whose signs are the preamble.
///
/// The value itself is not forced into canonical form; see
/// [`SignWord::canonicalize`] and [`SignWord::is_canonical`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignWord {
    preamble: Vec<Sign>,
    block: Vec<Sign>,
}

impl SignWord {
    pub fn new(preamble: Vec<Sign>, block: Vec<Sign>) -> Self {
        SignWord { preamble, block }
    }

    pub fn finite(signs: Vec<Sign>) -> Self {
        SignWord::new(signs, Vec::new())
    }

    pub fn periodic(block: Vec<Sign>) -> Self {
        SignWord::new(Vec::new(), block)
    }

    /// All plus signs: the radical converging to 2.
    pub fn constant_two() -> Self {
        SignWord::periodic(vec![Sign::Plus])
    }

    /// `-` then all plus: the radical converging to 0.
    pub fn constant_zero() -> Self {
        SignWord::new(vec![Sign::Minus], vec![Sign::Plus])
    }

    pub fn preamble(&self) -> &[Sign] {
        &self.preamble
    }

    pub fn block(&self) -> &[Sign] {
        &self.block
    }

    pub fn kind(&self) -> WordKind {
        match (self.preamble.is_empty(), self.block.is_empty()) {
            (_, true) => WordKind::Finite,
            (true, false) => WordKind::TotallyPeriodic,
            (false, false) => WordKind::EventuallyPeriodic,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.block.is_empty()
    }

    /// True for the two limit words of value 2 and 0.
    pub fn is_sentinel(&self) -> bool {
        *self == SignWord::constant_two() || *self == SignWord::constant_zero()
    }

    /// Sign `ε_i` (1-based) of the infinite sequence. Finite words are spelled
    /// through their non-set-A extension `…, +, -, +, +, …`.
    pub fn sign_at(&self, i: usize) -> Sign {
        assert!(i >= 1, "sign indices start at 1");
        let idx = i - 1;
        if idx < self.preamble.len() {
            return self.preamble[idx];
        }
        let rest = idx - self.preamble.len();
        if self.block.is_empty() {
            return if rest == 1 { Sign::Minus } else { Sign::Plus };
        }
        self.block[rest % self.block.len()]
    }

    /// First `n` signs of the infinite sequence.
    pub fn prefix(&self, n: usize) -> Vec<Sign> {
        (1..=n).map(|i| self.sign_at(i)).collect()
    }

    /// The infinite spelling of a finite word that avoids set A.
    pub fn infinite_extension(&self) -> SignWord {
        if !self.is_finite() {
            return self.clone();
        }
        let mut pre = self.preamble.clone();
        pre.extend([Sign::Plus, Sign::Minus]);
        SignWord::new(pre, vec![Sign::Plus])
    }

    /// Whether the spelled sequence ends with `-, -` followed by all `+`.
    pub fn spells_set_a(&self) -> bool {
        if self.block.is_empty() || self.block.iter().any(|s| !s.is_plus()) {
            return false;
        }
        let mut end = self.preamble.len();
        while end > 0 && self.preamble[end - 1].is_plus() {
            end -= 1;
        }
        end >= 2 && !self.preamble[end - 1].is_plus() && !self.preamble[end - 2].is_plus()
    }

    /// Canonical representative of the same continued radical:
    ///
    /// * the block is cut to its primitive period,
    /// * preamble signs that merely repeat the block are absorbed into it,
    /// * a tail of all `+` after `+,-` or `-,-` collapses to the finite word,
    /// * the limits 2 and 0 keep their sentinel spellings.
    pub fn canonicalize(&self) -> SignWord {
        if self.is_finite() {
            return self.clone();
        }
        let mut block = self.block[..primitive_period(&self.block)].to_vec();
        let mut preamble = self.preamble.clone();
        while let (Some(&last_pre), Some(&last_block)) = (preamble.last(), block.last()) {
            if last_pre != last_block {
                break;
            }
            preamble.pop();
            block.rotate_right(1);
        }
        if block == [Sign::Plus] {
            match preamble.len() {
                0 => return SignWord::constant_two(),
                1 => return SignWord::constant_zero(),
                n => return SignWord::finite(preamble[..n - 2].to_vec()),
            }
        }
        SignWord::new(preamble, block)
    }

    pub fn is_canonical(&self) -> bool {
        self.canonicalize() == *self
    }

    /// `preamble|block` with `+` and `-`.
    pub fn render(&self) -> String {
        let mut out = String::with_capacity(self.preamble.len() + self.block.len() + 1);
        out.extend(self.preamble.iter().map(|s| s.as_char()));
        out.push('|');
        out.extend(self.block.iter().map(|s| s.as_char()));
        out
    }

    pub fn parse(text: &str) -> Result<SignWord> {
        let text = text.trim();
        let (pre, block) = text
            .split_once('|')
            .ok_or_else(|| Error::parse("sign word", text))?;
        let preamble = parse_signs(pre).map_err(|_| Error::parse("sign word", text))?;
        let block = parse_signs(block).map_err(|_| Error::parse("sign word", text))?;
        Ok(SignWord::new(preamble, block))
    }
}

/// Parses a run of `+`/`-` characters (the Unicode minus is accepted too).
pub fn parse_signs(text: &str) -> Result<Vec<Sign>> {
    text.trim()
        .chars()
        .map(|c| match c {
            '+' => Ok(Sign::Plus),
            '-' | '\u{2212}' => Ok(Sign::Minus),
            _ => Err(Error::parse("sign list", text)),
        })
        .collect()
}

pub fn render_signs(signs: &[Sign]) -> String {
    signs.iter().map(|s| s.as_char()).collect()
}

/// Length of the shortest period dividing the block length.
pub fn primitive_period(block: &[Sign]) -> usize {
    let n = block.len();
    (1..=n)
        .filter(|&d| n.is_multiple_of(d))
        .find(|&d| (d..n).all(|i| block[i] == block[i - d]))
        .unwrap_or(n)
}

impl fmt::Display for SignWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl FromStr for SignWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SignWord::parse(s)
    }
}

impl Serialize for SignWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.render())
    }
}

impl<'de> Deserialize<'de> for SignWord {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        SignWord::parse(&s).map_err(serde::de::Error::custom)
    }
}
