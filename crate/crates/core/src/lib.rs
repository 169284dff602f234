//! Exact and interval arithmetic on continued radicals of 2,
//! `√(2 + ε₁√(2 + ε₂√(2 + …)))` with `εᵢ = ±1`.
//!
//! The main entry points:
//!
//! * [`codec`]: rationals `q` (value `2cos(qπ)`) to sign words and back,
//!   finite radical closed forms, sign extraction from real enclosures;
//! * [`radical`]: rigorous evaluation of towers and the error sequence
//!   `uₙ = 2ⁿ(r_∞ - rₙ)`;
//! * [`limits`]: exact limit points of `uₙ`;
//! * [`vieta`]: Vieta-style products for `2cos(2qπ) / ((1-4q)π sin(qπ))`.
//!
//! ```
//! use radical_forge::{codec, exact::ratio};
//!
//! let word = codec::encode_rational(&ratio(3, 7)).unwrap();
//! assert_eq!(word.to_string(), "|-+-");
//! assert_eq!(codec::decode(&word).unwrap(), ratio(3, 7));
//! ```

pub mod cli;
pub mod codec;
pub mod dyadic;
pub mod error;
pub mod exact;
pub mod interval;
pub mod limits;
pub mod radical;
pub mod report;
pub mod suites;
pub mod trig;
pub mod vieta;

pub use codec::{SignWord, WordKind};
pub use dyadic::Dyadic;
pub use error::{Error, ErrorClass, Result};
pub use exact::{Rational, Sign};
pub use interval::DyadicInterval;
