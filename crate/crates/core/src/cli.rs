//! The `hmf` command-line front end.
//!
//! Exit codes: 0 success, 2 parse or input error, 3 validation error,
//! 4 precondition violated.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::artinian::{ar_quiver, mu, stable_hom, LambdaContext};
use crate::class::{
    cone_split, critical_decompose, hmf_hom, hmf_iso, is_iso, primary_decompose, strong_decompose,
    strong_iso,
};
use crate::error::Error;
use crate::json::{
    class_to_value, critical_data_to_value, element_from_value, factorization_from_value,
    factorization_to_value, matrix_from_value, morphism_from_value, smith_to_value,
};
use crate::mf::{cone, elementary_morphism, MatrixFactorization};
use crate::random::{random_unimodular, rng_from_seed};
use crate::ring::{Ring, RingElement};
use crate::smith::smith;

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_VALIDATION: i32 = 3;
pub const EXIT_PRECONDITION: i32 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "hmf",
    version,
    about = "Matrix factorizations over Z and GF(p)[x]"
)]
struct Cli {
    /// Ring for inputs that do not declare one: `Z` or `GF(p)[x]`.
    #[arg(long, global = true)]
    ring: Option<String>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Seed for sampled examples.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Dot,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Smith normal form of a matrix.
    Snf { input: String },
    /// Primary class of a factorization, or of each one in an array.
    Classify { input: String },
    /// Strong (zmf) and homotopy (hmf) isomorphism of two factorizations.
    Iso { a: String, b: String },
    /// Mapping cone of a morphism and its splitting.
    Cone { input: String },
    /// Hom modules in hmf between two factorizations.
    Hom { a: String, b: String },
    /// Auslander-Reiten quiver of A_n(p).
    Quiver {
        p: String,
        n: u32,
        #[arg(long)]
        stable: bool,
    },
    /// A walkthrough of the main computations.
    Demo,
}

/// A failure with its exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) => EXIT_PARSE,
            Error::Precondition(_) => EXIT_PRECONDITION,
            _ => EXIT_VALIDATION,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

fn input_error(msg: impl Into<String>) -> CliError {
    CliError {
        code: EXIT_PARSE,
        message: msg.into(),
    }
}

/// Runs the CLI and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
        }
    };
    match execute(&cli).and_then(|out| emit(&cli, &out)) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("error: {}", e.message);
            e.code
        }
    }
}

fn emit(cli: &Cli, out: &str) -> Result<(), CliError> {
    match &cli.out {
        Some(path) => std::fs::write(path, out)
            .map_err(|e| input_error(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(out.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| input_error(format!("cannot write output: {e}")))
        }
    }
}

/// A path, `-` for stdin, or inline JSON.
fn read_input(source: &str) -> Result<Value, CliError> {
    let text = if source == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| input_error(format!("cannot read stdin: {e}")))?;
        s
    } else if source.trim_start().starts_with(['{', '[']) {
        source.to_string()
    } else {
        std::fs::read_to_string(source)
            .map_err(|e| input_error(format!("cannot read {source}: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| input_error(format!("malformed JSON: {e}")))
}

fn ring_flag(cli: &Cli) -> Result<Option<Ring>, CliError> {
    cli.ring
        .as_deref()
        .map(|s| s.parse::<Ring>().map_err(CliError::from))
        .transpose()
}

fn render(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON values serialize");
    s.push('\n');
    s
}

fn execute(cli: &Cli) -> Result<String, CliError> {
    let ring = ring_flag(cli)?;
    let format = cli.format;
    if format == Some(Format::Dot) && !matches!(cli.command, Command::Quiver { .. }) {
        return Err(input_error("--format dot is only available for `quiver`"));
    }
    match &cli.command {
        Command::Snf { input } => {
            let m = matrix_from_value(&read_input(input)?, ring)?;
            let s = smith(&m);
            Ok(match format {
                Some(Format::Text) => format!("{}\n", s.d),
                _ => render(&smith_to_value(&s)),
            })
        }
        Command::Classify { input } => {
            let v = read_input(input)?;
            let out = match &v {
                Value::Array(items) => {
                    let results: Vec<Result<Value, CliError>> = items
                        .par_iter()
                        .map(|item| classify_one(item, ring))
                        .collect();
                    let mut values = Vec::with_capacity(results.len());
                    for (i, r) in results.into_iter().enumerate() {
                        values.push(r.map_err(|e| CliError {
                            code: e.code,
                            message: format!("item {i}: {}", e.message),
                        })?);
                    }
                    Value::Array(values)
                }
                _ => classify_one(&v, ring)?,
            };
            Ok(match format {
                Some(Format::Text) => classify_text(&out),
                _ => render(&out),
            })
        }
        Command::Iso { a, b } => {
            let a = factorization_from_value(&read_input(a)?, ring, None)?;
            let b = factorization_from_value(&read_input(b)?, ring, None)?;
            let out = json!({"zmf": strong_iso(&a, &b)?, "hmf": hmf_iso(&a, &b)?});
            Ok(match format {
                Some(Format::Text) => format!("zmf: {}\nhmf: {}\n", out["zmf"], out["hmf"]),
                _ => render(&out),
            })
        }
        Command::Cone { input } => {
            let f = morphism_from_value(&read_input(input)?, ring)?;
            let c = cone(&f)?;
            let cd = critical_decompose(c.w())?;
            let split = f.elementary_scalar().map(|_| cone_split(&f)).transpose()?;
            let out = json!({
                "cone": factorization_to_value(&c),
                "u_invariant_factors": smith(c.u()).invariant_factors.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "v_invariant_factors": strong_decompose(&c)?.factors.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "xi": split.as_ref().map(|s| s.xi.to_string()),
                "zeta": split.as_ref().map(|s| s.zeta.to_string()),
                "is_iso": if split.is_some() { Some(is_iso(&f)?) } else { None },
                "class": class_to_value(&primary_decompose(&c, &cd)?),
            });
            Ok(render(&out))
        }
        Command::Hom { a, b } => {
            let a = factorization_from_value(&read_input(a)?, ring, None)?;
            let b = factorization_from_value(&read_input(b)?, ring, None)?;
            let (even, odd) = hmf_hom(&a, &b)?;
            Ok(match format {
                Some(Format::Text) => format!("even: {even}\nodd: {odd}\n"),
                _ => render(&json!({"even": even, "odd": odd})),
            })
        }
        Command::Quiver { p, n, stable } => {
            let ring = ring.unwrap_or(Ring::Integers);
            let p = element_from_value(ring, &Value::String(p.clone()))?;
            let ctx = LambdaContext::new(&p, *n)?;
            let q = ar_quiver(&ctx, *stable);
            Ok(match format {
                Some(Format::Json) => render(&serde_json::to_value(&q).expect("plain data")),
                Some(Format::Text) => {
                    let kind = if *stable { "stable" } else { "module" };
                    format!(
                        "{kind} AR quiver of A_{n}({p}): {} vertices, {} arrows\n",
                        q.vertices.len(),
                        q.arrows.len()
                    )
                }
                _ => q.to_dot(),
            })
        }
        Command::Demo => demo(cli.seed).map_err(CliError::from),
    }
}

fn classify_one(v: &Value, ring: Option<Ring>) -> Result<Value, CliError> {
    let a = factorization_from_value(v, ring, None)?;
    let cd = critical_decompose(a.w())?;
    let sd = strong_decompose(&a)?;
    let class = primary_decompose(&a, &cd)?;
    Ok(json!({
        "W": a.w().to_string(),
        "ring": a.ring().to_string(),
        "rho": a.rho(),
        "critical_data": critical_data_to_value(&cd),
        "elementary_factors": sd.factors.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "witness": sd.verify(&a)?,
        "labels": class_to_value(&class)["labels"].clone(),
    }))
}

fn classify_text(v: &Value) -> String {
    let one = |v: &Value| {
        let labels: Vec<String> = v["labels"]
            .as_array()
            .into_iter()
            .flatten()
            .map(|l| format!("e[({})^{}]", l[0].as_str().unwrap_or("?"), l[1]))
            .collect();
        let class = if labels.is_empty() {
            "0".to_string()
        } else {
            labels.join(" + ")
        };
        format!("W = {}: {}\n", v["W"].as_str().unwrap_or("?"), class)
    };
    match v {
        Value::Array(items) => items.iter().map(one).collect(),
        _ => one(v),
    }
}

/// The walkthrough printed by `hmf demo`.
pub fn demo(seed: u64) -> crate::error::Result<String> {
    let z = |n: i64| RingElement::from(n);
    let mut s = String::new();

    let _ = writeln!(s, "== Smith normal form ==");
    let a = crate::matrix::RingMatrix::from_i64(Ring::Integers, &[&[2, 4], &[6, 8]])?;
    let sd = smith(&a);
    let _ = writeln!(s, "A =\n{a}\nD =\n{}", sd.d);

    let _ = writeln!(s, "\n== Critical data of W = 360 ==");
    let w = z(360);
    let cd = critical_decompose(&w)?;
    let crit: Vec<String> = cd
        .critical
        .iter()
        .map(|(p, n)| format!("{p}^{n}"))
        .collect();
    let _ = writeln!(s, "W0 = {}, critical part = {}", cd.w0, crit.join(" * "));
    let _ = writeln!(
        s,
        "critical ideal generator = {}",
        crate::class::critical_ideal_generator(&cd)
    );

    let _ = writeln!(s, "\n== Classification of a disguised sum (seed {seed}) ==");
    let base = MatrixFactorization::elementary_sum(&[z(12), z(5), z(4)], &w)?;
    let mut rng = rng_from_seed(seed);
    let (p, _) = random_unimodular(Ring::Integers, 3, 12, &mut rng);
    let (q, _) = random_unimodular(Ring::Integers, 3, 12, &mut rng);
    let (disguised, _) = base.conjugate(&p, &q)?;
    let _ = writeln!(s, "v =\n{}", disguised.v());
    let factors: Vec<String> = strong_decompose(&disguised)?
        .factors
        .iter()
        .map(ToString::to_string)
        .collect();
    let _ = writeln!(s, "elementary factors: {}", factors.join(", "));
    let _ = writeln!(s, "hmf class: {}", primary_decompose(&disguised, &cd)?);

    let _ = writeln!(s, "\n== Cone of e_2 -> e_6 over W = 12, r = 1 ==");
    let w12 = z(12);
    let f = elementary_morphism(
        &MatrixFactorization::elementary(&z(2), &w12)?,
        &MatrixFactorization::elementary(&z(6), &w12)?,
        &z(1),
    )?;
    let split = cone_split(&f)?;
    let c = cone(&f)?;
    let _ = writeln!(s, "xi = {}, zeta = {}", split.xi, split.zeta);
    let uf: Vec<String> = smith(c.u())
        .invariant_factors
        .iter()
        .map(ToString::to_string)
        .collect();
    let _ = writeln!(s, "cone u-block invariant factors: {}", uf.join(", "));
    let _ = writeln!(s, "f is an isomorphism in hmf: {}", is_iso(&f)?);

    let n = 5;
    let _ = writeln!(s, "\n== Hom(e_2^i, e_2^j) over W = 2^{n} ==");
    let ctx = LambdaContext::new(&z(2), n)?;
    let wn = ctx.modulus();
    let _ = writeln!(
        s,
        "entry: exponent k with Hom = R/<2^k> (hom complex / mu formula)"
    );
    for i in 1..n {
        let mut row = Vec::new();
        for j in 1..n {
            let (even, _) = hmf_hom(
                &MatrixFactorization::elementary(&z(2).pow(i), &wn)?,
                &MatrixFactorization::elementary(&z(2).pow(j), &wn)?,
            )?;
            let k = match even.cyclic_factors.as_slice() {
                [] => 0,
                [g] => crate::class::valuation(g, &z(2))?,
                _ => u32::MAX,
            };
            row.push(format!("{k}/{}", mu(n, i, j)?));
            debug_assert_eq!(mu(n, i, j)?, stable_hom(&ctx, i, j)?);
        }
        let _ = writeln!(s, "i={i}: {}", row.join("  "));
    }

    let _ = writeln!(s, "\n== Stable AR quiver of A_{n}(2) ==");
    s.push_str(&ar_quiver(&ctx, true).to_dot());
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn demo_runs() {
        let out = demo(1).unwrap();
        assert!(out.contains("xi = 1, zeta = 4"));
        assert!(out.contains("i=2: 1/1  2/2  2/2  1/1"));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run(["hmf", "snf", "[[2,4],[6"]), EXIT_PARSE);
        assert_eq!(
            run(["hmf", "classify", r#"{"W": 5, "u": [[2]], "v": [[2]]}"#]),
            EXIT_VALIDATION
        );
        assert_eq!(run(["hmf", "quiver", "4", "3"]), EXIT_VALIDATION);
        assert_eq!(run(["hmf", "bogus"]), EXIT_PARSE);
        assert_eq!(
            run(["hmf", "classify", r#"{"W": 7, "elementary": [1]}"#]),
            EXIT_OK
        );
        assert_eq!(
            run(["hmf", "classify", r#"{"W": -1, "elementary": [1]}"#]),
            EXIT_PRECONDITION
        );
    }
}
