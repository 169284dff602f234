//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
//!
//! Reference numbers come from outside the library: π from a published
//! 70-digit expansion, surds from integer square roots below, and a few
//! trigonometric values frozen from an independent 60-digit computation.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use radical_forge::codec::{decode, encode_rational, encode_real, finite_closed_form, SignWord};
use radical_forge::exact::{mod_pow, ratio, semi_order, Rational, Sign};
use radical_forge::limits::limit_points;
use radical_forge::radical::{eval_tower, u_sequence, RadicalTower};
use radical_forge::trig::two_cos_pi;
use radical_forge::vieta::{telescoping_checks, verify_product, vieta_target};
use radical_forge::{Dyadic, DyadicInterval};

const PI_70: &str = "3.1415926535897932384626433832795028841971693993751058209749445923078164";

// 60-digit values of c_j·π·sin(qπ), computed independently.
const L_3_7: [&str; 3] = [
    "-1.09386655953216147662266538241205132631018659088966977100383",
    "-0.656319935719296885973599229447230795786111954533801862602296",
    "0.218773311906432295324533076482410265262037318177933954200765",
];
const L_1_5: [&str; 4] = [
    "0.184658183049045675726648623225425155703472707749375720699196",
    "-0.553974549147137027179945869676275467110418123248127162097589",
    "-0.184658183049045675726648623225425155703472707749375720699196",
    "0.553974549147137027179945869676275467110418123248127162097589",
];

/// Decimal digits carried by the fixed-point oracle.
const DIGITS: u32 = 60;

fn scale() -> BigInt {
    BigInt::from(10).pow(DIGITS)
}

fn decimal(s: &str) -> Rational {
    let neg = s.starts_with('-');
    let s = s.trim_start_matches('-');
    let (int, frac) = s.split_once('.').unwrap_or((s, ""));
    let digits: BigInt = format!("{int}{frac}").parse().expect("decimal literal");
    let q = Rational::new(digits, BigInt::from(10).pow(frac.len() as u32));
    if neg {
        -q
    } else {
        q
    }
}

/// `√x` for rational `x ≥ 0`, bracketed with `DIGITS` decimals.
fn sqrt_bracket(x: &Rational) -> (Rational, Rational) {
    let s = scale();
    let scaled = (x * Rational::from_integer(&s * &s)).floor().to_integer();
    let root = scaled.sqrt();
    let lo = Rational::new(root.clone(), s.clone());
    let hi = Rational::new(root + 1, s);
    (lo, hi)
}

fn mid(b: &(Rational, Rational)) -> Rational {
    (&b.0 + &b.1) / Rational::from_integer(BigInt::from(2))
}

fn to_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

/// Upper bound on the distance from `x` to the rational `r`.
fn gap(x: &DyadicInterval, r: &Rational) -> f64 {
    let lo = (x.lo().to_rational() - r).abs();
    let hi = (x.hi().to_rational() - r).abs();
    to_f64(&lo.max(hi))
}

/// Brute-force semi-order with plain machine arithmetic.
fn naive_semi_order(s: u64) -> (u64, i32) {
    let mut x = 1u64;
    for d in 1..=s {
        x = x * 2 % s;
        if x == 1 {
            return (d, 1);
        }
        if x == s - 1 {
            return (d, -1);
        }
    }
    unreachable!("2 is invertible modulo odd s")
}

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

fn c1_semi_order() -> Outcome {
    let seventeen = semi_order(&BigInt::from(17)).unwrap();
    let mut bad = Vec::new();
    let mut count = 0;
    for s in (3..=9999u64).step_by(2) {
        count += 1;
        let so = semi_order(&BigInt::from(s)).unwrap();
        let s_big = BigInt::from(s);
        let twice = mod_pow(&BigInt::from(2), &BigUint::from(2 * so.period), &s_big).unwrap();
        if !twice.is_one() || naive_semi_order(s) != (so.period, so.sign.to_i32()) {
            bad.push(s);
        }
    }
    let pass = seventeen.period == 4 && seventeen.sign == Sign::Minus && bad.is_empty();
    outcome(
        pass,
        format!(
            "semi_order(17) = ({}, {}); {count} odd moduli, {} mismatches",
            seventeen.period,
            seventeen.sign,
            bad.len()
        ),
    )
}

fn c2_round_trip() -> Outcome {
    let mut cases = 0;
    let mut bad = Vec::new();
    for s in (3..=199i64).step_by(2) {
        let (p, _) = naive_semi_order(s as u64);
        for t in 1..=(s - 1) / 2 {
            if t.gcd(&s) != 1 {
                continue;
            }
            cases += 1;
            let q = ratio(t, s);
            let word = encode_rational(&q).unwrap();
            if decode(&word).unwrap() != q || word.block().len() as u64 != p {
                bad.push(format!("{t}/{s}"));
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!("{cases} rationals, {} failures {:?}", bad.len(), bad),
    )
}

fn c3_finite_enumeration() -> Outcome {
    let tolerance = Dyadic::pow2(-100);
    let mut bad = 0;
    let mut total = 0;
    let mut worst = 0f64;
    for k in 0..=12u32 {
        let mut betas = BTreeSet::new();
        for bits in 0..(1u32 << k) {
            total += 1;
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
            let reference = two_cos_pi(&form.angle(), 256);
            let value = eval_tower(&RadicalTower::plain(signs), 256).unwrap();
            let span = reference.hull(&value).width();
            worst = worst.max(span.to_f64());
            if !reference.overlaps(&value) || span > tolerance {
                bad += 1;
            }
            betas.insert(form.beta);
        }
        let odd: BTreeSet<BigInt> = (0..(1i64 << k)).map(|i| BigInt::from(2 * i + 1)).collect();
        if betas != odd {
            bad += 1;
        }
    }
    outcome(
        bad == 0,
        format!("{total} words, worst hull width {worst:.1e}, {bad} failures"),
    )
}

/// `u` at `m = 20` periods against the frozen limits.
fn limit_check(block: &str, want: &[(i64, i64)], limits: &[Rational], tol: f64) -> (bool, String) {
    let word = SignWord::parse(&format!("|{block}")).unwrap();
    let lp = limit_points(word.block()).unwrap();
    let exact: Vec<Rational> = want.iter().map(|&(n, d)| ratio(n, d)).collect();
    let classes = lp.class_count();
    let us = u_sequence(&word, 21 * classes, 256).unwrap();
    let mut worst = 0f64;
    for (j, limit) in limits.iter().enumerate() {
        let n = 20 * classes + j;
        worst = worst.max(gap(us[n - 1].as_ref().unwrap(), limit));
    }
    let pass = lp.coefficients == exact && worst <= tol;
    let coefs: Vec<String> = lp.coefficients.iter().map(|c| c.to_string()).collect();
    (
        pass,
        format!("c = [{}], max |u - L| = {worst:.2e}", coefs.join(", ")),
    )
}

fn c4_block_minus_plus_minus() -> Outcome {
    let limits: Vec<Rational> = L_3_7.iter().map(|s| decimal(s)).collect();
    let (pass, detail) = limit_check("-+-", &[(-5, 14), (-3, 14), (1, 14)], &limits, 1e-8);
    outcome(pass, detail)
}

fn c5_block_minus() -> Outcome {
    // √3·π/12 from the integer square root and the π literal
    let sqrt3 = mid(&sqrt_bracket(&Rational::from_integer(BigInt::from(3))));
    let l = sqrt3 * decimal(PI_70) / Rational::from_integer(BigInt::from(12));
    let word = SignWord::parse("|-").unwrap();
    let us = u_sequence(&word, 40, 256).unwrap();
    let even = gap(us[39].as_ref().unwrap(), &-l.clone());
    let odd = gap(us[38].as_ref().unwrap(), &l);
    outcome(
        even <= 1e-10 && odd <= 1e-10,
        format!("|u_40 + √3π/12| = {even:.2e}, |u_39 - √3π/12| = {odd:.2e}"),
    )
}

fn c6_block_plus_minus() -> Outcome {
    let limits: Vec<Rational> = L_1_5.iter().map(|s| decimal(s)).collect();
    let (mut pass, detail) =
        limit_check("+-", &[(1, 10), (-3, 10), (-1, 10), (3, 10)], &limits, 1e-8);
    // the coefficient set is {1, -3, -1, 3}/10 of π·sin(π/5); sin(π/5) = √(10 - 2√5)/4
    let sqrt5 = mid(&sqrt_bracket(&Rational::from_integer(BigInt::from(5))));
    let inner =
        Rational::from_integer(BigInt::from(10)) - Rational::from_integer(BigInt::from(2)) * sqrt5;
    let sin_fifth = mid(&sqrt_bracket(&inner)) / Rational::from_integer(BigInt::from(4));
    let base = decimal(PI_70) * sin_fifth;
    for (c, l) in [
        (1, &limits[0]),
        (-3, &limits[1]),
        (-1, &limits[2]),
        (3, &limits[3]),
    ] {
        let v = &base * ratio(c, 10);
        pass &= to_f64(&(v - l).abs()) < 1e-50;
    }
    outcome(pass, detail)
}

fn c7_vieta_one_third() -> Outcome {
    let start = Instant::now();
    let report = verify_product(&ratio(1, 3), 40, 256).unwrap();
    let elapsed = start.elapsed();
    let sqrt3 = mid(&sqrt_bracket(&Rational::from_integer(BigInt::from(3))));
    let oracle = Rational::from_integer(BigInt::from(2)) * sqrt3 / decimal(PI_70);
    let err = gap(report.partials.last().unwrap(), &oracle);
    outcome(
        err <= 1e-10 && elapsed < Duration::from_secs(5),
        format!("|P_40 - 2√3/π| = {err:.2e} in {} ms", elapsed.as_millis()),
    )
}

fn c8_vieta_one_fifth() -> Outcome {
    let q = ratio(1, 5);
    let target = vieta_target(&q, 256).unwrap();
    // 5√2(√5 - 1) / (π √(5 - √5))
    let two = Rational::from_integer(BigInt::from(2));
    let five = Rational::from_integer(BigInt::from(5));
    let sqrt2 = mid(&sqrt_bracket(&two));
    let sqrt5 = mid(&sqrt_bracket(&five));
    let denom_root = mid(&sqrt_bracket(&(&five - &sqrt5)));
    let surd = &five * sqrt2 * (&sqrt5 - Rational::one()) / (decimal(PI_70) * denom_root);
    let target_err = gap(&target, &surd);
    let report = verify_product(&q, 40, 256).unwrap();
    let partial_err = report.final_distance();
    outcome(
        target_err <= 1e-12 && partial_err <= 1e-10,
        format!(
            "target {} vs surd {:.2e} apart; |P_40 - target| <= {partial_err:.2e}",
            target.mid_decimal(20),
            target_err
        ),
    )
}

fn c9_telescoping() -> Outcome {
    let mut total = 0;
    let mut bad = 0;
    for (t, s) in [(1, 3), (1, 5), (3, 7)] {
        let checks = telescoping_checks(&ratio(t, s), 20, 256).unwrap();
        total += checks.len();
        bad += checks.iter().filter(|c| !c.holds).count();
    }
    outcome(bad == 0, format!("{total} identity checks, {bad} failures"))
}

fn weakly_between(a: &DyadicInterval, x: &DyadicInterval, b: &DyadicInterval) -> bool {
    let ascending = a.lo() <= x.hi() && x.lo() <= b.hi();
    let descending = b.lo() <= x.hi() && x.lo() <= a.hi();
    ascending || descending
}

fn random_signs(rng: &mut StdRng, n: usize) -> Vec<Sign> {
    (0..n)
        .map(|_| {
            if rng.gen_bool(0.5) {
                Sign::Plus
            } else {
                Sign::Minus
            }
        })
        .collect()
}

fn c10_properties() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed_2c05);

    let mut sandwich_bad = 0;
    for _ in 0..1000 {
        let n = rng.gen_range(1..=30);
        let signs = random_signs(&mut rng, n);
        let c = ratio(rng.gen_range(-4096..=4096), 2048);
        let x = eval_tower(&RadicalTower::new(signs.clone(), c).unwrap(), 128).unwrap();
        let a = eval_tower(&RadicalTower::plain(signs[..n - 1].to_vec()), 128).unwrap();
        let b = eval_tower(&RadicalTower::new(signs, ratio(2, 1)).unwrap(), 128).unwrap();
        if !weakly_between(&a, &x, &b) {
            sandwich_bad += 1;
        }
    }

    let mut real_bad = 0;
    let mut real_count = 0;
    while real_count < 100 {
        let s: i64 = rng.gen_range(3..=2000);
        let t: i64 = rng.gen_range(1..s);
        let q = ratio(t, s);
        if q >= ratio(1, 2) || q.denom().to_u64().is_some_and(|d| d.is_power_of_two()) {
            continue;
        }
        real_count += 1;
        let word = encode_rational(&q).unwrap();
        let x = two_cos_pi(&q, 512);
        let got = encode_real(&x, 64, 512).unwrap();
        if got.undecidable_at.is_some() || got.signs != word.prefix(64) {
            real_bad += 1;
        }
    }

    let mut canon_bad = 0;
    for _ in 0..2000 {
        let pre_len = rng.gen_range(0..10);
        let mut pre = random_signs(&mut rng, pre_len);
        let block = if rng.gen_bool(0.3) {
            // force a set-A tail
            pre.extend([Sign::Minus, Sign::Minus]);
            vec![Sign::Plus; rng.gen_range(1..4)]
        } else {
            let len = rng.gen_range(1..8);
            random_signs(&mut rng, len)
        };
        let word = SignWord::new(pre, block);
        let canon = word.canonicalize();
        if canon.spells_set_a() || canon.canonicalize() != canon {
            canon_bad += 1;
        }
        let value_kept = match (word.spells_set_a(), decode(&canon)) {
            (true, Ok(q)) => canon.is_finite() || canon.is_sentinel() || q.is_zero(),
            (false, Ok(q)) => decode(&word).is_ok_and(|r| r == q),
            (_, Err(_)) => false,
        };
        if !value_kept {
            canon_bad += 1;
        }
    }

    outcome(
        sandwich_bad == 0 && real_bad == 0 && canon_bad == 0,
        format!(
            "sandwich failures {sandwich_bad}/1000, encode_real mismatches {real_bad}/100, canonicalize failures {canon_bad}/2000"
        ),
    )
}

type Criterion = (&'static str, Option<Duration>, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (
            "semi-order sweep",
            Some(Duration::from_secs(5)),
            c1_semi_order,
        ),
        (
            "codec round trip",
            Some(Duration::from_secs(30)),
            c2_round_trip,
        ),
        (
            "finite radical enumeration",
            Some(Duration::from_secs(60)),
            c3_finite_enumeration,
        ),
        ("limit points of -+-", None, c4_block_minus_plus_minus),
        ("limit points of -", None, c5_block_minus),
        ("limit points of +-", None, c6_block_plus_minus),
        ("Vieta product q = 1/3", None, c7_vieta_one_third),
        ("Vieta product q = 1/5", None, c8_vieta_one_fifth),
        ("telescoping identity", None, c9_telescoping),
        ("property suite", None, c10_properties),
    ];
    let mut failed = 0;
    for (i, (name, budget, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let in_time = budget.is_none_or(|b| elapsed < b);
        let pass = result.pass && in_time;
        if !pass {
            failed += 1;
        }
        println!(
            "criterion {:>2} {} {name}: {} ({} ms{})",
            i + 1,
            if pass { "PASS" } else { "FAIL" },
            result.detail,
            elapsed.as_millis(),
            budget.map_or(String::new(), |b| format!(", budget {} s", b.as_secs()))
        );
    }
    println!("acceptance: {} of 10 criteria pass", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
