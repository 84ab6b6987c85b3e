//! Command-line front end. [`run`] parses arguments, dispatches a
//! subcommand and returns the process exit code: 0 on success, 1 when a
//! verification suite has failing cases, 2 on usage or domain errors.

pub mod report;
pub mod suites;

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::arith::{parse_rational, BigFloat, Rational};
use crate::error::{usage, Error, Result};
use crate::padic::{
    carlitz_q_bernoulli, fermionic_sum, padic_of_rational, volkenborn_sum, QBernoulli, QRational,
};
use crate::series_eval::{
    dirichlet_beta_eval, eta_accel, euler_zeta_eval, hurwitz_em, hurwitz_euler_eval, zeta_em, EvalRequest,
};
use crate::special_numbers::{bernoulli, euler_first, euler_poly, NumberKind, NumberTable};
use crate::zeta_values::{beta_odd, euler_zeta_even, lambda_even, zeta_even, zeta_neg};

pub use report::{Case, Listing, VerificationReport};
pub use suites::{coverage, run_suite, Suite, VerifyConfig, ALL_OPS};

#[derive(Parser, Debug)]
#[command(name = "eulerzeta", version, about = "Exact Bernoulli/Euler numbers, zeta values and identity checks")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Write output to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Tsv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Tabulate B_n, E*_n or E_n for n = 0..=max.
    Numbers {
        #[arg(long, value_parser = ["bernoulli", "euler1", "euler2"])]
        kind: String,
        #[arg(long)]
        max: usize,
    },
    /// First-kind Euler polynomials E*_k(x) for k = 0..=n.
    Polys {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
    },
    /// Closed-form special values.
    Zeta(ZetaArgs),
    /// Numeric evaluation.
    Eval {
        #[arg(long = "fn", value_parser = ["zeta", "hurwitz", "eta", "eulerzeta", "beta"])]
        function: String,
        #[arg(long, allow_hyphen_values = true)]
        s: String,
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(long, default_value_t = 256)]
        bits: u32,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_parser = ["exact", "numeric", "padic", "q", "all"], default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 30)]
        max_index: u32,
        #[arg(long, default_value_t = 256)]
        bits: u32,
        /// Comma-separated odd primes.
        #[arg(long = "p", value_delimiter = ',', default_value = "3,5,7")]
        primes: Vec<u64>,
        #[arg(long, default_value_t = 5)]
        depth: u32,
    },
    /// A fermionic or Volkenborn Riemann sum against its limit.
    Padic {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        depth: u32,
        #[arg(long)]
        moment: u32,
        #[arg(long, value_parser = ["fermionic", "volkenborn"])]
        measure: String,
    },
    /// Carlitz q-Bernoulli numbers beta_(k,q) for k = 0..=m.
    Q {
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        #[arg(long)]
        m: u32,
        #[arg(long, default_value_t = 256)]
        bits: u32,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct ZetaArgs {
    /// zeta(2N)
    #[arg(long)]
    even: Option<u32>,
    /// zeta(-N)
    #[arg(long)]
    neg: Option<u32>,
    /// beta(2N+1)
    #[arg(long)]
    beta_odd: Option<u32>,
    /// lambda(2N)
    #[arg(long)]
    lambda: Option<u32>,
    /// zeta_E(2N)
    #[arg(long)]
    euler_even: Option<u32>,
}

enum Rendered {
    Listing(Listing),
    Report(VerificationReport),
}

impl Rendered {
    fn render(&self, format: Format) -> String {
        match (self, format) {
            (Rendered::Listing(l), Format::Table) => l.to_table(),
            (Rendered::Listing(l), Format::Tsv) => l.to_tsv(),
            (Rendered::Listing(l), Format::Json) => l.to_json() + "\n",
            (Rendered::Report(r), Format::Table) => r.to_table(),
            (Rendered::Report(r), Format::Tsv) => r.to_tsv(),
            (Rendered::Report(r), Format::Json) => r.to_json() + "\n",
        }
    }
}

/// Entry point used by the binary; `argv[0]` is the program name.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok((rendered, code)) => {
            let text = rendered.render(cli.format);
            let written = match &cli.out {
                Some(path) => std::fs::write(path, text.as_bytes()).map_err(|e| format!("{}: {e}", path.display())),
                None => std::io::stdout().write_all(text.as_bytes()).map_err(|e| e.to_string()),
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return 2;
            }
            if code != 0 {
                if let Rendered::Report(r) = &rendered {
                    for c in r.failures() {
                        eprintln!("FAIL {}: residual {}", c.id, c.residual);
                    }
                }
            }
            code
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn execute(cli: &Cli) -> Result<(Rendered, i32)> {
    let listing = match &cli.command {
        Command::Numbers { kind, max } => numbers(kind.parse()?, *max),
        Command::Polys { n, x } => polys(*n, &parse_rational(x)?),
        Command::Zeta(args) => zeta(args)?,
        Command::Eval { function, s, a, bits } => eval(function, s, a.as_deref(), *bits)?,
        Command::Verify { suite, max_index, bits, primes, depth } => {
            let config = VerifyConfig { bits: *bits, max_index: *max_index, primes: primes.clone(), depth: *depth };
            let report = run_suite(suite.parse()?, &config)?;
            let code = if report.all_passed() { 0 } else { 1 };
            return Ok((Rendered::Report(report), code));
        }
        Command::Padic { p, depth, moment, measure } => padic(*p, *depth, *moment, measure)?,
        Command::Q { q, m, bits } => q_numbers(&parse_rational(q)?, *m, *bits)?,
    };
    Ok((Rendered::Listing(listing), 0))
}

fn numbers(kind: NumberKind, max: usize) -> Listing {
    let table = NumberTable::build(kind, max);
    let values: Vec<String> = (0..=max).map(|n| table.get(n).expect("built").to_string()).collect();
    let rows = values.iter().enumerate().map(|(n, v)| vec![n.to_string(), v.clone()]).collect();
    Listing::from_rows(&["n", kind.name()], rows).with_json(json!(values))
}

fn polys(n: usize, x: &Rational) -> Listing {
    let values: Vec<String> = (0..=n).map(|k| euler_poly(k, x).to_string()).collect();
    let rows = values.iter().enumerate().map(|(k, v)| vec![k.to_string(), x.to_string(), v.clone()]).collect();
    Listing::from_rows(&["k", "x", "euler_poly"], rows).with_json(json!({ "x": x.to_string(), "values": values }))
}

fn zeta(args: &ZetaArgs) -> Result<Listing> {
    let (name, n, value) = if let Some(n) = args.even {
        ("zeta_even", n, zeta_even(n)?.to_string())
    } else if let Some(n) = args.neg {
        ("zeta_neg", n, zeta_neg(n)?.to_string())
    } else if let Some(n) = args.beta_odd {
        ("beta_odd", n, beta_odd(n).to_string())
    } else if let Some(n) = args.lambda {
        ("lambda_even", n, lambda_even(n)?.to_string())
    } else if let Some(n) = args.euler_even {
        ("euler_zeta_even", n, euler_zeta_even(n)?.to_string())
    } else {
        return Err(usage("zeta needs one of --even, --neg, --beta-odd, --lambda, --euler-even"));
    };
    let row = vec![name.to_string(), n.to_string(), value.clone()];
    Ok(Listing::from_rows(&["function", "n", "value"], vec![row])
        .with_json(json!({ "function": name, "n": n, "value": value })))
}

fn eval(function: &str, s: &str, a: Option<&str>, bits: u32) -> Result<Listing> {
    let wp = bits + 32;
    let s_val = BigFloat::from_rational(&parse_rational(s)?, wp);
    let a_val = a.map(parse_rational).transpose()?;
    let value = match (function, &a_val) {
        ("hurwitz", Some(a)) => {
            let req = EvalRequest::new(s_val, BigFloat::from_rational(a, wp), bits)?;
            hurwitz_em(&req.s, &req.a, bits)?
        }
        ("hurwitz", None) => return Err(usage("--fn hurwitz needs --a")),
        ("eulerzeta", Some(a)) => hurwitz_euler_eval(&s_val, &BigFloat::from_rational(a, wp), bits)?,
        (_, Some(_)) => return Err(usage(format!("--a does not apply to --fn {function}"))),
        ("zeta", None) => zeta_em(&s_val, bits)?,
        ("eta", None) => eta_accel(&s_val, bits)?,
        ("eulerzeta", None) => euler_zeta_eval(&s_val, bits)?,
        ("beta", None) => dirichlet_beta_eval(&s_val, bits)?,
        _ => return Err(usage(format!("unknown function `{function}`"))),
    };
    let digits = BigFloat::decimal_digits_for(bits);
    let text = value.to_decimal(digits);
    let a_text = a_val.map(|a| a.to_string()).unwrap_or_default();
    let row = vec![function.to_string(), s.to_string(), a_text.clone(), bits.to_string(), text.clone()];
    Ok(Listing::from_rows(&["fn", "s", "a", "bits", "value"], vec![row]).with_json(json!({
        "fn": function, "s": s, "a": if a_text.is_empty() { Value::Null } else { Value::String(a_text) },
        "bits": bits, "value": text,
    })))
}

fn padic(p: u64, depth: u32, moment: u32, measure: &str) -> Result<Listing> {
    let (sum, target, agreement, checked) = match measure {
        "fermionic" => {
            let s = fermionic_sum(moment, p, depth)?;
            let e = euler_first(moment as usize);
            let diff = s.sub(&padic_of_rational(&e, p, depth)?)?.valuation();
            (s.to_string(), e.to_string(), diff.to_string(), depth)
        }
        "volkenborn" => {
            let v = volkenborn_sum(moment, p, depth)?;
            let agreement = v.bernoulli_agreement().map_or("exact".to_string(), |a| a.to_string());
            (v.exact.to_string(), bernoulli(moment as usize).to_string(), agreement, v.reported_depth)
        }
        other => return Err(usage(format!("unknown measure `{other}`"))),
    };
    let row = vec![measure.into(), p.to_string(), depth.to_string(), moment.to_string(), sum.clone(), target.clone(), agreement.clone(), checked.to_string()];
    Ok(Listing::from_rows(&["measure", "p", "depth", "moment", "sum", "limit", "valuation", "checked_depth"], vec![row]).with_json(json!({
        "measure": measure, "p": p, "depth": depth, "moment": moment, "sum": sum, "limit": target,
        "valuation": agreement, "checked_depth": checked,
    })))
}

fn q_numbers(q: &Rational, m: u32, bits: u32) -> Result<Listing> {
    let param = QRational::real(q.clone())?;
    let digits = BigFloat::decimal_digits_for(bits);
    let mut rows = Vec::new();
    for k in 0..=m {
        let QBernoulli::Real(b) = carlitz_q_bernoulli(k, &param, bits)? else {
            return Err(Error::Domain("expected a real parameter".into()));
        };
        rows.push(vec![k.to_string(), q.to_string(), b.to_decimal(digits), bernoulli(k as usize).to_string()]);
    }
    let values: Vec<Value> = rows.iter().map(|r| json!({ "m": r[0], "beta": r[2], "bernoulli": r[3] })).collect();
    Ok(Listing::from_rows(&["m", "q", "beta_q", "bernoulli"], rows).with_json(json!({ "q": q.to_string(), "values": values })))
}
