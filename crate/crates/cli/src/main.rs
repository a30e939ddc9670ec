//! `twistcong`: products, congruence lattices, counts, principal congruences, inclusion and
//! generating sets for twisted partition monoids, as JSON, DOT or CSV.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use twistcong::enumeration::{self, CountMethod};
use twistcong::finite::{build_lattice_capped, enumerate_fc, fc_generated, fc_generating_set, fcong_leq, principal_fc, FCMatrix, ENUMERATION_CAP};
use twistcong::infinite::{cong_leq, generating_set, principal_case, principal_cpair, verify_generators, InfiniteCong};
use twistcong::oracle::{all_congruences, closure_of_elements, ExtensionalCongruence, Monoid, ORACLE_CAP};
use twistcong::partition::Partition;
use twistcong::twisted::{t_mul_d, t_mul_infinite, TwistedElement};

#[derive(Parser)]
#[command(name = "twistcong", version, about = "Congruences of twisted partition monoids")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Base size `n` (for `table`, the largest `n`).
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Column bound `d` of the finite quotient (for `table`, the largest `d`).
    #[arg(long, global = true)]
    d: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Method::Closed)]
    method: Method,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write the output here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Enumeration cap; `TWISTCONG_CAP` overrides it.
    #[arg(long, global = true)]
    cap: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Multiply two partitions, or two twisted elements (in `P^Φ_{n,d}` when `--d` is given).
    Mul { a: String, b: String },
    /// Build `Cong(P^Φ_{n,d})` with its property report.
    Lattice,
    /// Count `|Cong(P^Φ_{n,d})|`.
    Count,
    /// The grid of counts for `n ≤ --n`, `d ≤ --d`.
    Table,
    /// The principal congruence of a pair, finitary when `--d` is given.
    Principal { a: String, b: String },
    /// Whether one congruence is contained in another.
    Include { first: String, second: String },
    /// A generating set for a congruence, with its verification.
    Gen { congruence: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Closed,
    Recursion,
    Gf,
    Generate,
    Oracle,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Csv,
}

fn cap(cli: &Cli, default: usize) -> Result<usize> {
    match std::env::var("TWISTCONG_CAP") {
        Ok(v) => v.trim().parse().with_context(|| format!("TWISTCONG_CAP = {v:?} is not a number")),
        Err(_) => Ok(cli.cap.unwrap_or(default)),
    }
}

fn need(v: Option<usize>, flag: &str) -> Result<usize> {
    v.ok_or_else(|| anyhow!("--{flag} is required"))
}

fn pretty<T: Serialize>(v: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

fn parse<T: serde::de::DeserializeOwned>(s: &str, what: &str) -> Result<T> {
    serde_json::from_str(s).with_context(|| format!("cannot read {what} from {s:?}"))
}

/// Exact integers as JSON numbers when they fit, decimal strings otherwise.
fn big_json(x: &twistcong::enumeration::BigCount) -> Value {
    match u64::try_from(x) {
        Ok(v) => json!(v),
        Err(_) => json!(x.to_string()),
    }
}

fn element(s: &str, n: Option<usize>) -> Result<TwistedElement> {
    match parse::<TwistedElement>(s, "a twisted element")? {
        TwistedElement::Zero(_) => Ok(TwistedElement::Zero(need(n, "n").context("the zero needs --n")?)),
        x => Ok(x),
    }
}

fn only(format: Option<Format>, allowed: &[Format], default: Format) -> Result<Format> {
    let f = format.unwrap_or(default);
    if !allowed.contains(&f) {
        bail!("this command does not write {}", ["json", "dot", "csv"][f as usize]);
    }
    Ok(f)
}

fn mul(cli: &Cli, a: &str, b: &str) -> Result<String> {
    only(cli.format, &[Format::Json], Format::Json)?;
    let va: Value = parse(a, "an operand")?;
    if va.get("blocks").is_some() {
        let (x, y): (Partition, Partition) = (parse(a, "a partition")?, parse(b, "a partition")?);
        let (p, phi) = x.multiply(&y)?;
        return pretty(&json!({ "product": p, "phi": phi }));
    }
    let (x, y) = (element(a, cli.n)?, element(b, cli.n)?);
    let product = match cli.d {
        Some(d) => t_mul_d(&x, &y, d)?,
        None => t_mul_infinite(&x, &y)?,
    };
    pretty(&json!({ "product": product }))
}

fn lattice(cli: &Cli) -> Result<String> {
    let (n, d) = (need(cli.n, "n")?, need(cli.d, "d")?);
    let l = build_lattice_capped(n, d, cap(cli, ENUMERATION_CAP)?)?;
    Ok(match only(cli.format, &[Format::Json, Format::Dot, Format::Csv], Format::Json)? {
        Format::Json => pretty(&json!({ "n": n, "d": d, "report": l.report(), "lattice": l }))?,
        Format::Dot => l.to_dot(),
        Format::Csv => l.tables_csv(),
    })
}

fn count(cli: &Cli) -> Result<String> {
    let (n, d) = (need(cli.n, "n")?, need(cli.d, "d")?);
    let (name, value) = match cli.method {
        Method::Closed => ("closed", enumeration::count(n, d, CountMethod::Closed)?),
        Method::Recursion => ("recursion", enumeration::count(n, d, CountMethod::Recursion)?),
        Method::Gf => ("gf", enumeration::count(n, d, CountMethod::Gf)?),
        Method::Generate => {
            let found = if n == 0 { d + 2 } else { enumerate_fc(n, d, cap(cli, ENUMERATION_CAP)?)?.len() };
            ("generate", found.into())
        }
        Method::Oracle => {
            if n == 0 {
                bail!("the brute-force oracle needs n ≥ 1");
            }
            let m = Monoid::with_cap(n, d, cap(cli, ORACLE_CAP)?)?;
            ("oracle", all_congruences(&m).len().into())
        }
    };
    Ok(match only(cli.format, &[Format::Json, Format::Csv], Format::Json)? {
        Format::Csv => format!("n,d,method,count\n{n},{d},{name},{value}\n"),
        _ => pretty(&json!({ "n": n, "d": d, "method": name, "count": big_json(&value) }))?,
    })
}

fn table(cli: &Cli) -> Result<String> {
    let grid = enumeration::table(cli.n.unwrap_or(10), cli.d.unwrap_or(10));
    Ok(match only(cli.format, &[Format::Json, Format::Csv], Format::Csv)? {
        Format::Csv => enumeration::table_csv(&grid),
        _ => pretty(&grid.iter().map(|r| r.iter().map(big_json).collect::<Vec<_>>()).collect::<Vec<_>>())?,
    })
}

fn principal(cli: &Cli, a: &str, b: &str) -> Result<String> {
    only(cli.format, &[Format::Json], Format::Json)?;
    let (x, y) = (element(a, cli.n)?, element(b, cli.n)?);
    match cli.d {
        Some(d) => {
            let m = principal_fc(&x, &y, x.n(), d)?;
            pretty(&json!({ "label": m.label(), "matrix": m }))
        }
        None => {
            let s = principal_cpair(&x, &y)?;
            pretty(&json!({ "case": principal_case(&x, &y)?, "display": s.pair.to_string(), "congruence": s }))
        }
    }
}

enum Congruence {
    Finite(FCMatrix),
    Infinite(InfiniteCong),
}

fn congruence(s: &str) -> Result<Congruence> {
    let v: Value = parse(s, "a congruence")?;
    if v.get("grid").is_some() {
        Ok(Congruence::Finite(parse(s, "an fC-matrix")?))
    } else {
        Ok(Congruence::Infinite(parse(s, "a C-pair")?))
    }
}

fn include(cli: &Cli, first: &str, second: &str) -> Result<String> {
    only(cli.format, &[Format::Json], Format::Json)?;
    let (leq, geq) = match (congruence(first)?, congruence(second)?) {
        (Congruence::Finite(a), Congruence::Finite(b)) => {
            if (a.n, a.d) != (b.n, b.d) {
                bail!("matrices have shapes ({}, {}) and ({}, {})", a.n, a.d, b.n, b.d);
            }
            (fcong_leq(&a, &b), fcong_leq(&b, &a))
        }
        (Congruence::Infinite(a), Congruence::Infinite(b)) => {
            if a.pair.n != b.pair.n {
                bail!("C-pairs have n = {} and n = {}", a.pair.n, b.pair.n);
            }
            (cong_leq(&a, &b), cong_leq(&b, &a))
        }
        _ => bail!("cannot compare a finitary congruence with an infinite one"),
    };
    pretty(&json!({ "first_in_second": leq, "second_in_first": geq }))
}

fn gen(cli: &Cli, s: &str) -> Result<String> {
    only(cli.format, &[Format::Json], Format::Json)?;
    match congruence(s)? {
        Congruence::Finite(m) => {
            let pairs = fc_generating_set(&m)?;
            let verified = fc_generated(&pairs, m.n, m.d)? == m;
            let oracle = match Monoid::with_cap(m.n, m.d, cap(cli, ORACLE_CAP)?) {
                Ok(mon) => Some(closure_of_elements(&mon, &pairs)? == ExtensionalCongruence::from_matrix(&mon, &m)),
                Err(_) => None,
            };
            pretty(&json!({
                "label": m.label(),
                "pairs": pairs,
                "size": pairs.len(),
                "bound": (5 * m.n).div_ceil(2),
                "verified": verified,
                "oracle_verified": oracle,
            }))
        }
        Congruence::Infinite(c) => {
            let pairs = generating_set(&c);
            let check = verify_generators(&c, &pairs);
            pretty(&json!({
                "display": c.pair.to_string(),
                "pairs": pairs,
                "size": pairs.len(),
                "bound": (5 * c.pair.n).div_ceil(2),
                "check": check,
            }))
        }
    }
}

fn run(cli: &Cli) -> Result<()> {
    let out = match &cli.command {
        Command::Mul { a, b } => mul(cli, a, b)?,
        Command::Lattice => lattice(cli)?,
        Command::Count => count(cli)?,
        Command::Table => table(cli)?,
        Command::Principal { a, b } => principal(cli, a, b)?,
        Command::Include { first, second } => include(cli, first, second)?,
        Command::Gen { congruence } => gen(cli, congruence)?,
    };
    match &cli.out {
        Some(path) => fs::write(path, out).with_context(|| format!("cannot write {}", path.display()))?,
        None => print!("{out}"),
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
