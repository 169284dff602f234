//! Self-checks behind `radical-forge verify`.

use std::collections::BTreeSet;
use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer;
use serde::Serialize;
use serde_json::{json, Value};

use crate::codec::{decode, encode_rational, finite_closed_form, SignWord};
use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::exact::{ratio, semi_order, Rational, Sign};
use crate::limits::limit_points;
use crate::radical::{eval_tower, u_sequence, RadicalTower};
use crate::trig::two_cos_pi;
use crate::vieta::{telescoping_checks, verify_product};

pub const SUITES: [&str; 4] = ["roundtrip", "theorem3", "limits", "vieta"];

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: bool,
    pub cases: u64,
    pub failures: Vec<String>,
    pub elapsed_ms: u128,
    pub details: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Summary {
    pub passed: bool,
    pub suites: Vec<SuiteReport>,
}

/// Runs one named suite, or every suite for `"all"`.
pub fn run(name: &str, precision: u32) -> Result<Summary> {
    let names: Vec<&str> = match name {
        "all" => SUITES.to_vec(),
        n if SUITES.contains(&n) => vec![n],
        other => {
            return Err(Error::Unsupported(format!(
                "unknown suite {other:?}; expected one of roundtrip, theorem3, limits, vieta, all"
            )))
        }
    };
    let suites: Vec<SuiteReport> = names
        .into_iter()
        .map(|n| timed(n, precision))
        .collect::<Result<_>>()?;
    Ok(Summary {
        passed: suites.iter().all(|s| s.passed),
        suites,
    })
}

fn timed(name: &str, precision: u32) -> Result<SuiteReport> {
    let start = Instant::now();
    let mut report = match name {
        "roundtrip" => roundtrip()?,
        "theorem3" => theorem3(precision)?,
        "limits" => limits(precision)?,
        "vieta" => vieta(precision)?,
        _ => unreachable!("names are checked by run"),
    };
    report.elapsed_ms = start.elapsed().as_millis();
    Ok(report)
}

fn finish(suite: &str, cases: u64, failures: Vec<String>, details: Value) -> SuiteReport {
    SuiteReport {
        suite: suite.to_string(),
        passed: failures.is_empty(),
        cases,
        failures,
        elapsed_ms: 0,
        details,
    }
}

/// Every reduced `t/s` in `(0, 1/2)` with odd `3 ≤ s ≤ 199`, plus `21/136`.
pub fn roundtrip() -> Result<SuiteReport> {
    let mut failures = Vec::new();
    let mut cases = 0u64;
    let mut words = BTreeSet::new();
    for s in (3..=199i64).step_by(2) {
        let p = semi_order(&BigInt::from(s))?.period as usize;
        for t in 1..=(s - 1) / 2 {
            if t.gcd(&s) != 1 {
                continue;
            }
            cases += 1;
            let q = ratio(t, s);
            let word = encode_rational(&q)?;
            if decode(&word)? != q {
                failures.push(format!("{t}/{s}: decode gives {}", decode(&word)?));
            }
            if word.block().len() != p || !word.preamble().is_empty() {
                failures.push(format!("{t}/{s}: word {word}, expected period {p}"));
            }
            if !word.is_canonical() || word.spells_set_a() {
                failures.push(format!("{t}/{s}: {word} is not canonical"));
            }
            if !words.insert(word.render()) {
                failures.push(format!("{t}/{s}: word {word} repeats"));
            }
        }
    }
    let q = ratio(21, 136);
    let word = encode_rational(&q)?;
    cases += 1;
    if decode(&word)? != q {
        failures.push("21/136 does not round trip".to_string());
    }
    Ok(finish(
        "roundtrip",
        cases,
        failures,
        json!({ "max_denominator": 199, "word_21_136": word.render() }),
    ))
}

/// All sign lists of length `k ≤ 12` against `2cos(βπ/2^(k+2))`.
pub fn theorem3(precision: u32) -> Result<SuiteReport> {
    let precision = precision.max(256);
    let tolerance = Dyadic::pow2(-100);
    let mut failures = Vec::new();
    let mut cases = 0u64;
    let mut worst = 0f64;
    for k in 0..=12u32 {
        let mut betas = BTreeSet::new();
        for bits in 0..(1u32 << k) {
            cases += 1;
            let signs: Vec<Sign> = (0..k)
                .map(|i| {
                    if bits >> i & 1 == 1 {
                        Sign::Minus
                    } else {
                        Sign::Plus
                    }
                })
                .collect();
            let form = finite_closed_form(&signs);
            if form.signs() != signs {
                failures.push(format!("k={k}: beta {} does not invert", form.beta));
            }
            let exact = two_cos_pi(&form.angle(), precision);
            let eval = eval_tower(&RadicalTower::plain(signs), precision)?;
            let span = exact.hull(&eval).width();
            worst = worst.max(span.to_f64());
            if !exact.overlaps(&eval) || span > tolerance {
                failures.push(format!("k={k}: beta {} evaluates apart", form.beta));
            }
            betas.insert(form.beta);
        }
        let expected: BTreeSet<BigInt> =
            (0..(1i64 << k)).map(|i| BigInt::from(2 * i + 1)).collect();
        if betas != expected {
            failures.push(format!(
                "k={k}: betas are not the odd numbers below 2^{}",
                k + 1
            ));
        }
    }
    Ok(finish(
        "theorem3",
        cases,
        failures,
        json!({ "max_depth": 12, "worst_hull_width": worst }),
    ))
}

/// Exact coefficients and `u` values at 20 periods for the three worked blocks.
pub fn limits(precision: u32) -> Result<SuiteReport> {
    let cases_in: [(&str, &[(i64, i64)]); 3] = [
        ("-+-", &[(-5, 14), (-3, 14), (1, 14)]),
        ("-", &[(-1, 6), (1, 6)]),
        ("+-", &[(1, 10), (-3, 10), (-1, 10), (3, 10)]),
    ];
    let mut failures = Vec::new();
    let mut table = Vec::new();
    let mut cases = 0u64;
    for (block, expected) in cases_in {
        let word = SignWord::parse(&format!("|{block}"))?;
        let lp = limit_points(word.block())?;
        let want: Vec<Rational> = expected.iter().map(|&(n, d)| ratio(n, d)).collect();
        cases += 1;
        if lp.coefficients != want {
            failures.push(format!("block {block}: coefficients differ"));
        }
        let classes = lp.class_count();
        let values = lp.values(precision);
        let us = u_sequence(&word, 21 * classes, precision)?;
        for (j, value) in values.iter().enumerate() {
            cases += 1;
            let n = 20 * classes + j;
            let u = us[n - 1].clone()?;
            let err = u.distance_bound(value).to_f64();
            if err > 1e-8 {
                failures.push(format!("block {block}: u_{n} is {err:e} from its limit"));
            }
            table.push(json!({ "block": block, "n": n, "j": j, "error": err }));
        }
    }
    Ok(finish(
        "limits",
        cases,
        failures,
        json!({ "errors": table }),
    ))
}

/// Products and the telescoping identity for `q = 1/3, 1/5, 3/7`.
pub fn vieta(precision: u32) -> Result<SuiteReport> {
    let mut failures = Vec::new();
    let mut table = Vec::new();
    let mut cases = 0u64;
    for (t, s) in [(1, 3), (1, 5), (3, 7)] {
        let q = ratio(t, s);
        // at least 40 factors, rounded up to whole blocks
        let p = semi_order(&BigInt::from(s))?.period;
        let count = 40u64.div_ceil(p) * p;
        let report = verify_product(&q, count, precision)?;
        cases += 1;
        let err = report.final_distance();
        if err > 1e-10 || report.precision_exhausted {
            failures.push(format!(
                "q={t}/{s}: {count}-factor product is {err:e} from the target"
            ));
        }
        let checks = telescoping_checks(&q, 20, precision)?;
        cases += checks.len() as u64;
        let broken = checks.iter().filter(|c| !c.holds).count();
        if broken > 0 {
            failures.push(format!("q={t}/{s}: {broken} telescoping checks fail"));
        }
        table.push(json!({
            "q": format!("{t}/{s}"),
            "factors": count,
            "max_error": err,
            "telescoping_checks": checks.len(),
        }));
    }
    Ok(finish("vieta", cases, failures, json!({ "errors": table })))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite_is_rejected() {
        assert!(matches!(run("nope", 256), Err(Error::Unsupported(_))));
    }

    #[test]
    fn limits_and_vieta_pass() {
        let summary = run("limits", 256).unwrap();
        assert!(summary.passed, "{:?}", summary.suites[0].failures);
        let summary = run("vieta", 256).unwrap();
        assert!(summary.passed, "{:?}", summary.suites[0].failures);
    }
}
