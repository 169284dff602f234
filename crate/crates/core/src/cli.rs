//! `radical-forge <command> [arg] [--depth N] [--factors N] [--prec BITS] [--format plain|json|latex]`
//!
//! Exit codes: 0 success, 1 parse error, 2 domain error, 3 precision
//! exhausted, 4 a verification suite failed.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::codec::{classify, decode, encode_rational, render_signs, SignWord, WordKind};
use crate::error::{Error, Result};
use crate::exact::{format_rational, parse_rational};
use crate::interval::DyadicInterval;
use crate::limits::limit_points;
use crate::radical::{eval_tower, RadicalTower};
use crate::report::IntervalJson;
use crate::suites;
use crate::trig::two_cos_pi;
use crate::vieta::{render_latex, verify_product, vieta_factors};

pub const DEFAULT_PRECISION: u32 = 256;
pub const MIN_PRECISION: u32 = 64;
pub const MAX_PRECISION: u32 = 65536;
pub const PRECISION_ENV: &str = "RADICAL_FORGE_PREC";
pub const EXIT_VERIFY_FAILED: i32 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Latex,
}

#[derive(Debug, Parser)]
#[command(
    name = "radical-forge",
    version,
    about = "Continued radicals of 2: encode, decode, evaluate, limit points, Vieta products"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Number of signs (eval) or signs to spell out (encode).
    #[arg(long, global = true)]
    pub depth: Option<usize>,

    /// Stream factors after the leading one (vieta).
    #[arg(long, global = true)]
    pub factors: Option<u64>,

    /// Working precision in bits, 64..=65536.
    #[arg(long, global = true, env = PRECISION_ENV)]
    pub prec: Option<u32>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Kind, period and preamble of the radical of 2cos(qπ).
    Classify { q: String },
    /// Sign word of 2cos(qπ).
    Encode { q: String },
    /// Exact q for a sign word "preamble|block".
    Decode {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Interval value of a word's first N signs.
    Eval {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Limit points of 2ⁿ(r_∞ - rₙ) for a periodic block.
    Limits {
        #[arg(allow_hyphen_values = true)]
        block: String,
    },
    /// Vieta-style product for 2cos(2qπ)/((1-4q)π sin qπ).
    Vieta { q: String },
    /// Run a self-check suite: roundtrip, theorem3, limits, vieta or all.
    Verify { suite: String },
}

/// Validated request.
#[derive(Debug, Clone)]
pub struct CommandRequest {
    pub command: Command,
    pub depth: Option<usize>,
    pub factors: Option<u64>,
    pub precision: u32,
    pub format: Format,
}

impl CommandRequest {
    pub fn from_cli(cli: Cli) -> Result<Self> {
        let precision = cli.prec.unwrap_or(DEFAULT_PRECISION);
        if !(MIN_PRECISION..=MAX_PRECISION).contains(&precision) {
            return Err(Error::out_of_range(precision, "precisions 64..=65536 bits"));
        }
        Ok(CommandRequest {
            command: cli.command,
            depth: cli.depth,
            factors: cli.factors,
            precision,
            format: cli.format,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses arguments and runs the command without touching the process.
pub fn execute<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: 1,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    let result = CommandRequest::from_cli(cli).and_then(|req| run(&req));
    match result {
        Ok((code, stdout)) => Outcome {
            code,
            stdout,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

/// Word argument: `preamble|block`, or a bare sign list read as a periodic block.
pub fn parse_word_arg(text: &str) -> Result<SignWord> {
    if text.contains('|') {
        SignWord::parse(text)
    } else {
        Ok(SignWord::periodic(crate::codec::parse_signs(text)?))
    }
}

fn kind_name(kind: WordKind) -> &'static str {
    match kind {
        WordKind::Finite => "finite",
        WordKind::TotallyPeriodic => "totally periodic",
        WordKind::EventuallyPeriodic => "eventually periodic",
    }
}

fn to_json(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report types serialize");
    s.push('\n');
    s
}

fn no_latex(req: &CommandRequest, what: &str) -> Result<()> {
    if req.format == Format::Latex {
        return Err(Error::Unsupported(format!(
            "--format latex is only available for vieta, not {what}"
        )));
    }
    Ok(())
}

/// Runs a request, returning the exit code and standard output.
pub fn run(req: &CommandRequest) -> Result<(i32, String)> {
    let out = match &req.command {
        Command::Classify { q } => cmd_classify(req, q)?,
        Command::Encode { q } => cmd_encode(req, q)?,
        Command::Decode { word } => cmd_decode(req, word)?,
        Command::Eval { word } => cmd_eval(req, word)?,
        Command::Limits { block } => cmd_limits(req, block)?,
        Command::Vieta { q } => cmd_vieta(req, q)?,
        Command::Verify { suite } => return cmd_verify(req, suite),
    };
    Ok((0, out))
}

pub fn cmd_classify(req: &CommandRequest, q: &str) -> Result<String> {
    no_latex(req, "classify")?;
    let q = parse_rational(q)?;
    let c = classify(&q)?;
    let roots = c.depth.map(|d| d + 1);
    if req.format == Format::Json {
        let mut v = serde_json::to_value(&c).expect("serializable");
        v["q"] = json!(format_rational(&q));
        v["roots"] = json!(roots);
        return Ok(to_json(&v));
    }
    let mut s = String::new();
    writeln!(s, "q           {}", format_rational(&q)).ok();
    writeln!(s, "kind        {}", kind_name(c.kind)).ok();
    writeln!(s, "word        {}", c.word).ok();
    if let (Some(depth), Some(roots)) = (c.depth, roots) {
        writeln!(s, "depth       {depth} signs, {roots} square roots").ok();
    } else {
        writeln!(s, "preamble    {}", c.preamble_len).ok();
    }
    if let (Some(p), Some(sign)) = (c.period, c.semi_order_sign) {
        writeln!(s, "period      {p}").ok();
        writeln!(s, "2^p mod s   {}1", sign).ok();
    }
    Ok(s)
}

pub fn cmd_encode(req: &CommandRequest, q: &str) -> Result<String> {
    no_latex(req, "encode")?;
    let q = parse_rational(q)?;
    let word = encode_rational(&q)?;
    let spelled = req.depth.map(|n| render_signs(&word.prefix(n)));
    if req.format == Format::Json {
        return Ok(to_json(&json!({
            "q": format_rational(&q),
            "word": word,
            "kind": word.kind(),
            "preamble": render_signs(word.preamble()),
            "block": render_signs(word.block()),
            "signs": spelled,
        })));
    }
    let mut s = format!("{word}\n");
    if let Some(spelled) = spelled {
        writeln!(s, "{spelled}").ok();
    }
    Ok(s)
}

pub fn cmd_decode(req: &CommandRequest, word: &str) -> Result<String> {
    no_latex(req, "decode")?;
    let word = parse_word_arg(word)?;
    let q = decode(&word)?;
    let value = two_cos_pi(&q, req.precision);
    if req.format == Format::Json {
        return Ok(to_json(&json!({
            "word": word,
            "q": format_rational(&q),
            "value": IntervalJson::from(&value),
        })));
    }
    Ok(format!(
        "{}\n2cos(qπ) = {}\n",
        format_rational(&q),
        value.render()
    ))
}

pub fn cmd_eval(req: &CommandRequest, word: &str) -> Result<String> {
    no_latex(req, "eval")?;
    let word = parse_word_arg(word)?;
    let depth = req.depth.unwrap_or(if word.is_finite() {
        word.preamble().len()
    } else {
        32
    });
    let tower = RadicalTower::prefix(&word, depth);
    let value = eval_tower(&tower, req.precision)?;
    let limit = decode(&word)?;
    let limit_value = two_cos_pi(&limit, req.precision);
    let scaled_gap: DyadicInterval = limit_value
        .with_precision(req.precision + depth as u32 + 64)
        .sub(&eval_tower(&tower, req.precision + depth as u32 + 64)?)
        .mul_pow2(depth as i64)
        .with_precision(req.precision);
    if req.format == Format::Json {
        return Ok(to_json(&json!({
            "word": word,
            "depth": depth,
            "signs": render_signs(&tower.signs),
            "value": IntervalJson::from(&value),
            "limit_q": format_rational(&limit),
            "limit": IntervalJson::from(&limit_value),
            "u": IntervalJson::from(&scaled_gap),
        })));
    }
    let mut s = String::new();
    writeln!(s, "r_{depth}        {}", value.render()).ok();
    writeln!(
        s,
        "limit      2cos(qπ), q = {}: {}",
        format_rational(&limit),
        limit_value.render()
    )
    .ok();
    writeln!(s, "2^n(r-r_n) {}", scaled_gap.render()).ok();
    Ok(s)
}

pub fn cmd_limits(req: &CommandRequest, block: &str) -> Result<String> {
    no_latex(req, "limits")?;
    let word = parse_word_arg(block)?;
    if word.kind() != WordKind::TotallyPeriodic {
        return Err(Error::Unsupported(format!(
            "limits need a periodic block, got {word}"
        )));
    }
    let lp = limit_points(word.block())?;
    let values = lp.values(req.precision);
    let points: Vec<Value> = lp
        .coefficients
        .iter()
        .zip(&values)
        .enumerate()
        .map(|(j, (c, v))| {
            json!({
                "j": j,
                "coef": format_rational(c),
                "value": IntervalJson::from(v),
                "approx": v.mid_f64(),
            })
        })
        .collect();
    if req.format == Format::Json {
        return Ok(to_json(&json!({
            "block": render_signs(word.block()),
            "q": format_rational(&lp.q),
            "delta_p": lp.delta_p,
            "classes": lp.class_count(),
            "points": points,
        })));
    }
    let mut s = String::new();
    writeln!(
        s,
        "q = {}; u_(m·{}+j) → c_j·π·sin(qπ)",
        format_rational(&lp.q),
        lp.class_count()
    )
    .ok();
    for (j, (c, v)) in lp.coefficients.iter().zip(&values).enumerate() {
        writeln!(s, "j={j:<3} c={:<12} {}", format_rational(c), v.render()).ok();
    }
    Ok(s)
}

pub fn cmd_vieta(req: &CommandRequest, q: &str) -> Result<String> {
    let q = parse_rational(q)?;
    let n = req.factors.unwrap_or(8);
    match req.format {
        Format::Latex => Ok(format!("{}\n", render_latex(&q, n)?)),
        Format::Json => {
            let report = verify_product(&q, n, req.precision)?;
            let stream = vieta_factors(&q, n, req.precision)?;
            let mut v = serde_json::to_value(&report).expect("serializable");
            v["leading"] =
                serde_json::to_value(IntervalJson::from(&stream.leading)).expect("serializable");
            v["factors"] = serde_json::to_value(&stream.factors).expect("serializable");
            v["final_distance"] = json!(report.final_distance());
            Ok(to_json(&v))
        }
        Format::Plain => {
            let report = verify_product(&q, n, req.precision)?;
            let stream = vieta_factors(&q, n, req.precision)?;
            let mut s = String::new();
            writeln!(s, "target    {}", report.target.render()).ok();
            writeln!(s, "leading   {}", stream.leading.render()).ok();
            for (f, partial) in stream.factors.iter().zip(report.partials.iter().skip(1)) {
                writeln!(
                    s,
                    "({},{})     {:.20}  partial {:.20}",
                    f.i,
                    f.j,
                    f.value.mid_f64(),
                    partial.mid_f64()
                )
                .ok();
            }
            writeln!(
                s,
                "distance  {:.3e} after {} whole blocks",
                report.final_distance(),
                n / report.period as u64
            )
            .ok();
            if report.precision_exhausted {
                writeln!(
                    s,
                    "warning   partial products wider than 2^-{}",
                    req.precision
                )
                .ok();
            }
            Ok(s)
        }
    }
}

pub fn cmd_verify(req: &CommandRequest, suite: &str) -> Result<(i32, String)> {
    no_latex(req, "verify")?;
    let summary = suites::run(suite, req.precision)?;
    let code = if summary.passed {
        0
    } else {
        EXIT_VERIFY_FAILED
    };
    if req.format == Format::Json {
        return Ok((code, to_json(&summary)));
    }
    let mut s = String::new();
    for r in &summary.suites {
        writeln!(
            s,
            "{} {:<10} {} cases, {} ms",
            if r.passed { "PASS" } else { "FAIL" },
            r.suite,
            r.cases,
            r.elapsed_ms
        )
        .ok();
        for f in &r.failures {
            writeln!(s, "     {f}").ok();
        }
    }
    Ok((code, s))
}
