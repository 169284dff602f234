//! LaTeX rendering of the product with exact surds.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::ProductShape;
use crate::codec::residual_angle;
use crate::error::Result;
use crate::exact::{ratio, shl_rational, Rational, Sign};

fn frac(q: &Rational) -> String {
    if q.is_integer() {
        return q.numer().to_string();
    }
    let sign = if q.is_negative() { "-" } else { "" };
    format!("{sign}\\frac{{{}}}{{{}}}", q.numer().abs(), q.denom())
}

/// `\frac{tπ}{s}`, with the numerator 1 left out.
fn angle(q: &Rational) -> String {
    let num = if q.numer().is_one() {
        String::new()
    } else {
        q.numer().to_string()
    };
    if q.denom().is_one() {
        format!("{num}\\pi")
    } else {
        format!("\\frac{{{num}\\pi}}{{{}}}", q.denom())
    }
}

/// `2cos(rπ)` for `r ∈ [0, 1/2]` as a surd when one is known.
fn two_cos_surd(r: &Rational) -> String {
    let known: &[((i64, i64), &str)] = &[
        ((0, 1), "2"),
        ((1, 2), "0"),
        ((1, 3), "1"),
        ((1, 4), "\\sqrt{2}"),
        ((1, 6), "\\sqrt{3}"),
        ((1, 5), "(\\sqrt{5}+1)\\frac{1}{2}"),
        ((2, 5), "(\\sqrt{5}-1)\\frac{1}{2}"),
        ((1, 8), "\\sqrt{2+\\sqrt{2}}"),
        ((3, 8), "\\sqrt{2-\\sqrt{2}}"),
        ((1, 10), "\\sqrt{\\frac{5+\\sqrt{5}}{2}}"),
        ((3, 10), "\\sqrt{\\frac{5-\\sqrt{5}}{2}}"),
        ((1, 12), "\\frac{\\sqrt{6}+\\sqrt{2}}{2}"),
        ((5, 12), "\\frac{\\sqrt{6}-\\sqrt{2}}{2}"),
    ];
    known
        .iter()
        .find(|((n, d), _)| *r == ratio(*n, *d))
        .map(|(_, s)| s.to_string())
        .unwrap_or_else(|| format!("2\\cos {}", angle(r)))
}

/// `|2cos(aπ)|` as LaTeX.
fn magnitude(a: &Rational) -> String {
    let (_, r) = residual_angle(a);
    two_cos_surd(&r)
}

fn target(q: &Rational) -> String {
    if *q == ratio(1, 3) {
        return "\\frac{2\\sqrt{3}}{\\pi}".to_string();
    }
    if *q == ratio(1, 5) {
        return "\\frac{(\\sqrt{5}-1)5\\sqrt{2}}{\\pi\\sqrt{5-\\sqrt{5}}}".to_string();
    }
    let scale = Rational::one() - Rational::from_integer(BigInt::from(4)) * q;
    format!(
        "\\frac{{2\\cos {}}}{{{}\\pi\\sin {}}}",
        angle(&shl_rational(q, 1)),
        frac(&scale),
        angle(q)
    )
}

/// `s₀ … s_n` as nested radicals.
fn nested(shape: &ProductShape, n: u64) -> Vec<String> {
    let mut out = vec!["\\sqrt{2}".to_string()];
    for t in 1..=n {
        let op = match shape.step_sign(t) {
            Sign::Plus => '+',
            Sign::Minus => '-',
        };
        let inner = &out[t as usize - 1];
        out.push(format!("\\sqrt{{2{op}{inner}}}"));
    }
    out
}

/// The identity with the target on the left and the leading factor plus
/// `factor_count` stream factors on the right. Factors of one block are
/// grouped in `\left( … \right)` when the block is longer than one sign.
pub fn render_latex(q: &Rational, factor_count: u64) -> Result<String> {
    let shape = ProductShape::new(q)?;
    let p = shape.period();
    let s = nested(&shape, factor_count);
    let leading = format!("\\frac{{{}+\\sqrt{{2}}}}{{2}}", magnitude(q));
    let factors: Vec<String> = (1..=factor_count)
        .map(|t| {
            let j = ((t - 1) % p as u64) as usize + 1;
            format!(
                "\\frac{{{}+{}}}{{2}}",
                magnitude(&shape.cosine_angle(j)),
                s[t as usize]
            )
        })
        .collect();
    let mut rhs = leading;
    if p == 1 {
        for f in &factors {
            rhs.push_str(" \\cdot ");
            rhs.push_str(f);
        }
    } else {
        for group in factors.chunks(p) {
            rhs.push_str(" \\left(");
            rhs.push_str(&group.join(" \\cdot "));
            rhs.push_str(" \\right)");
        }
    }
    debug_assert!(!q.is_zero());
    Ok(format!("{} = {} \\dots", target(q), rhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_third() {
        let got = render_latex(&ratio(1, 3), 2).unwrap();
        assert_eq!(
            got,
            "\\frac{2\\sqrt{3}}{\\pi} = \\frac{1+\\sqrt{2}}{2} \\cdot \
             \\frac{1+\\sqrt{2-\\sqrt{2}}}{2} \\cdot \
             \\frac{1+\\sqrt{2-\\sqrt{2-\\sqrt{2}}}}{2} \\dots"
        );
        let bare = render_latex(&ratio(1, 3), 0).unwrap();
        assert_eq!(
            bare,
            "\\frac{2\\sqrt{3}}{\\pi} = \\frac{1+\\sqrt{2}}{2} \\dots"
        );
    }

    #[test]
    fn one_fifth() {
        let got = render_latex(&ratio(1, 5), 4).unwrap();
        let a = "(\\sqrt{5}-1)\\frac{1}{2}";
        let b = "(\\sqrt{5}+1)\\frac{1}{2}";
        let expected = format!(
            "\\frac{{(\\sqrt{{5}}-1)5\\sqrt{{2}}}}{{\\pi\\sqrt{{5-\\sqrt{{5}}}}}} = \
             \\frac{{{b}+\\sqrt{{2}}}}{{2}} \
             \\left(\\frac{{{a}+\\sqrt{{2-\\sqrt{{2}}}}}}{{2}} \\cdot \
             \\frac{{{b}+\\sqrt{{2+\\sqrt{{2-\\sqrt{{2}}}}}}}}{{2}} \\right) \
             \\left(\\frac{{{a}+\\sqrt{{2-\\sqrt{{2+\\sqrt{{2-\\sqrt{{2}}}}}}}}}}{{2}} \\cdot \
             \\frac{{{b}+\\sqrt{{2+\\sqrt{{2-\\sqrt{{2+\\sqrt{{2-\\sqrt{{2}}}}}}}}}}}}{{2}} \\right) \\dots"
        );
        assert_eq!(got, expected);
        // a trailing partial block still gets its own group
        let five = render_latex(&ratio(1, 5), 5).unwrap();
        assert_eq!(five.matches("\\left(").count(), 3);
    }

    #[test]
    fn generic_target_and_cosines() {
        let got = render_latex(&ratio(3, 7), 1).unwrap();
        assert!(got.starts_with(
            "\\frac{2\\cos \\frac{6\\pi}{7}}{-\\frac{5}{7}\\pi\\sin \\frac{3\\pi}{7}} = "
        ));
        assert!(got.contains("2\\cos \\frac{3\\pi}{7}+\\sqrt{2}"));
        assert_eq!(magnitude(&ratio(2, 3)), "1");
        assert_eq!(magnitude(&ratio(4, 5)), "(\\sqrt{5}+1)\\frac{1}{2}");
        assert_eq!(magnitude(&ratio(12, 7)), "2\\cos \\frac{2\\pi}{7}");
    }
}
