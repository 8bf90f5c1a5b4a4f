//! The `opmono` command line.
//!
//! [`run`] parses arguments and writes to the given streams, so the whole
//! surface can be driven in-process. Exit codes: 0 success, 1 verification
//! mismatch, 2 usage error, 3 enumeration cap exceeded.

mod fixtures;

use std::ffi::OsString;
use std::io::{self, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::{json, Value};

use crate::asymptotics::{growth, GrowthMethod, DEFAULT_TOL};
use crate::bijections::{
    binary_trees, matched_ascent_monotone, peakless_paths, right_chain_monotone,
};
use crate::counting::{count, length_sequence, MultigradedTable};
use crate::enumerate::{enumerate_with_cap, EnumerationRequest, DEFAULT_CAP};
use crate::series::{atom_builder, closed_form_free, euler_exp_log, solve_quadratic_fe};
use crate::{Error, Regime};

pub use fixtures::{
    check, length_terms, parse_fixtures, recompute, FixtureEntry, FixtureKind, Mismatch, EMBEDDED,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "opmono",
    version,
    about = "Count and list monomials in operated semigroups"
)]
struct Cli {
    /// free, c (commuting operators), m (commutative product), cm (both)
    #[arg(long, global = true, default_value = "free")]
    regime: Regime,

    /// Number of unary operators [default: 1, or the length of --s]
    #[arg(long, global = true)]
    d: Option<usize>,

    /// Length assigned to the indeterminate
    #[arg(long, global = true, default_value_t = 1)]
    ell: u32,

    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SeriesMethod {
    Fixpoint,
    Closed,
    Euler,
}

#[derive(Args, Debug)]
struct Grade {
    /// Degree: number of occurrences of the indeterminate
    #[arg(long)]
    r: u32,
    /// Multiplicities, comma separated, e.g. 2,1
    #[arg(long, value_delimiter = ',', num_args = 1.., required = true)]
    s: Vec<u32>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Number of monomials with the given degree and multiplicities
    Count(Grade),
    /// Length-graded sequence b(2n) for even ell, b(n) for odd ell
    Sequence {
        #[arg(long, default_value_t = 10)]
        terms: usize,
        /// Index by raw length, zeros included
        #[arg(long)]
        raw_length: bool,
    },
    /// All counts a(r; s) with r <= r-max and s <= s-max
    Table {
        #[arg(long)]
        r_max: u32,
        /// One bound for every operator, or one per operator
        #[arg(long, value_delimiter = ',', num_args = 1.., required = true)]
        s_max: Vec<u32>,
    },
    /// List the canonical monomials with the given degree and multiplicities
    Enumerate {
        #[command(flatten)]
        grade: Grade,
        #[arg(long)]
        count_only: bool,
        /// Refuse when the predicted output exceeds this many monomials
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: u64,
    },
    /// Coefficients of the length generating function from its functional equation
    Series {
        #[arg(long, default_value_t = 20)]
        order: usize,
        #[arg(long, value_enum)]
        method: Option<SeriesMethod>,
    },
    /// Exponential growth rate
    Growth {
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        /// Estimator index for the commutative-product regimes
        #[arg(long, default_value_t = 100)]
        n: usize,
    },
    /// Peakless lattice paths of total span n
    Paths {
        #[arg(long)]
        n: u64,
        /// Keep only paths whose nested up-steps have weakly increasing labels
        #[arg(long)]
        check: bool,
    },
    /// Right-edge-labeled binary trees with n vertices
    Trees {
        #[arg(long)]
        n: usize,
        /// Keep only trees whose right chains have weakly increasing labels
        #[arg(long)]
        check: bool,
    },
    /// Check published sequence prefixes against the engine
    Verify {
        /// Fixture file; the built-in fixtures when omitted
        file: Option<std::path::PathBuf>,
    },
    /// Sequence in b-file form, `index value` per line
    Bfile {
        #[arg(long, default_value_t = 10)]
        terms: usize,
        /// Index of the first term; 0 prepends the empty object
        #[arg(long, default_value_t = 1)]
        offset: usize,
        #[arg(long)]
        raw_length: bool,
    },
}

enum Failure {
    Usage(String),
    Cap(String),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CapExceeded { .. } => Failure::Cap(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = std::result::Result<i32, Failure>;

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Cap(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_CAP
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_MISMATCH
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Outcome {
    match &cli.command {
        Command::Count(grade) => cmd_count(cli, grade, out),
        Command::Sequence { terms, raw_length } => cmd_sequence(cli, *terms, *raw_length, out),
        Command::Table { r_max, s_max } => cmd_table(cli, *r_max, s_max, out),
        Command::Enumerate {
            grade,
            count_only,
            cap,
        } => cmd_enumerate(cli, grade, *count_only, *cap, out),
        Command::Series { order, method } => cmd_series(cli, *order, *method, out),
        Command::Growth { tol, n } => cmd_growth(cli, *tol, *n, out),
        Command::Paths { n, check } => cmd_paths(cli, *n, *check, out),
        Command::Trees { n, check } => cmd_trees(cli, *n, *check, out),
        Command::Verify { file } => cmd_verify(cli, file.as_deref(), out),
        Command::Bfile {
            terms,
            offset,
            raw_length,
        } => cmd_bfile(cli, *terms, *offset, *raw_length, out),
    }
}

fn operators(cli: &Cli) -> std::result::Result<usize, Failure> {
    match cli.d {
        Some(0) => Err(Failure::Usage("--d must be at least 1".into())),
        Some(d) => Ok(d),
        None => Ok(1),
    }
}

fn checked_grade(cli: &Cli, grade: &Grade) -> std::result::Result<(), Failure> {
    if grade.r == 0 {
        return Err(Failure::Usage("--r must be at least 1".into()));
    }
    if let Some(d) = cli.d {
        if d != grade.s.len() {
            return Err(Failure::Usage(format!(
                "--s has {} entries but --d is {d}",
                grade.s.len()
            )));
        }
    }
    Ok(())
}

fn ell(cli: &Cli) -> std::result::Result<u32, Failure> {
    if cli.ell == 0 {
        return Err(Failure::Usage("--ell must be at least 1".into()));
    }
    Ok(cli.ell)
}

fn big(n: &BigUint) -> Value {
    serde_json::from_str(&n.to_string()).expect("decimal integer is valid JSON")
}

fn bigs<'a>(xs: impl IntoIterator<Item = &'a BigUint>) -> Value {
    Value::Array(xs.into_iter().map(big).collect())
}

fn emit_json(out: &mut dyn Write, value: &Value) -> std::result::Result<(), Failure> {
    serde_json::to_writer(&mut *out, value).map_err(io::Error::from)?;
    writeln!(out)?;
    Ok(())
}

fn emit_csv<R, F>(out: &mut dyn Write, header: &[&str], rows: R) -> std::result::Result<(), Failure>
where
    R: IntoIterator<Item = Vec<F>>,
    F: AsRef<[u8]>,
{
    let mut w = csv::Writer::from_writer(out);
    let csv_err = |e: csv::Error| Failure::Io(io::Error::other(e));
    w.write_record(header).map_err(csv_err)?;
    for row in rows {
        w.write_record(row).map_err(csv_err)?;
    }
    w.flush()?;
    Ok(())
}

fn join<T: ToString>(xs: &[T], sep: &str) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}

fn cmd_count(cli: &Cli, grade: &Grade, out: &mut dyn Write) -> Outcome {
    checked_grade(cli, grade)?;
    let n = count(cli.regime, grade.r, &grade.s);
    match cli.format {
        Format::Plain => writeln!(out, "{n}")?,
        Format::Csv => emit_csv(
            out,
            &["regime", "d", "r", "s", "count"],
            [vec![
                cli.regime.tag().to_string(),
                grade.s.len().to_string(),
                grade.r.to_string(),
                join(&grade.s, ";"),
                n.to_string(),
            ]],
        )?,
        Format::Json => emit_json(
            out,
            &json!({"regime": cli.regime.tag(), "d": grade.s.len(), "r": grade.r, "s": grade.s, "count": big(&n)}),
        )?,
    }
    Ok(EXIT_OK)
}

/// `(index, value)` pairs: tabulated indices by default, raw lengths otherwise.
fn sequence_terms(
    cli: &Cli,
    terms: usize,
    offset: usize,
    raw_length: bool,
) -> std::result::Result<Vec<(usize, BigUint)>, Failure> {
    let d = operators(cli)?;
    let ell = ell(cli)?;
    if raw_length {
        let mut out: Vec<(usize, BigUint)> = Vec::with_capacity(terms);
        if offset == 0 {
            out.push((0, BigUint::from(1u32)));
        }
        let seq = length_sequence(cli.regime, d, ell, terms - out.len());
        let start = offset.max(1);
        out.extend(
            seq.values()
                .iter()
                .enumerate()
                .map(|(k, v)| (start + k, v.clone())),
        );
        Ok(out)
    } else if offset == 0 {
        Ok(length_terms(cli.regime, d, ell, 0, terms)
            .into_iter()
            .enumerate()
            .collect())
    } else {
        let values = length_terms(cli.regime, d, ell, 1, terms);
        Ok(values
            .into_iter()
            .enumerate()
            .map(|(k, v)| (offset + k, v))
            .collect())
    }
}

fn cmd_sequence(cli: &Cli, terms: usize, raw_length: bool, out: &mut dyn Write) -> Outcome {
    let pairs = sequence_terms(cli, terms, 1, raw_length)?;
    let values: Vec<&BigUint> = pairs.iter().map(|(_, v)| v).collect();
    let indexing = if raw_length || cli.ell % 2 == 1 {
        "b(n)"
    } else {
        "b(2n)"
    };
    match cli.format {
        Format::Plain => writeln!(out, "{}", join(&values, " "))?,
        Format::Csv => emit_csv(
            out,
            &["n", "value"],
            pairs
                .iter()
                .map(|(k, v)| vec![k.to_string(), v.to_string()]),
        )?,
        Format::Json => emit_json(
            out,
            &json!({
                "regime": cli.regime.tag(),
                "d": operators(cli)?,
                "ell": cli.ell,
                "indexing": indexing,
                "terms": bigs(values),
            }),
        )?,
    }
    Ok(EXIT_OK)
}

fn cmd_table(cli: &Cli, r_max: u32, s_max: &[u32], out: &mut dyn Write) -> Outcome {
    let s_max: Vec<u32> = match (s_max.len(), cli.d) {
        (1, Some(d)) => vec![s_max[0]; d],
        (len, Some(d)) if len != d => {
            return Err(Failure::Usage(format!(
                "--s-max has {len} entries but --d is {d}"
            )));
        }
        _ => s_max.to_vec(),
    };
    if r_max == 0 {
        return Err(Failure::Usage("--r-max must be at least 1".into()));
    }
    let table = MultigradedTable::compute(cli.regime, r_max, &s_max);
    match cli.format {
        Format::Plain => {
            for (r, s, n) in table.entries() {
                writeln!(out, "{r}\t{}\t{n}", join(&s, ","))?;
            }
        }
        Format::Csv => emit_csv(
            out,
            &["r", "s", "count"],
            table
                .entries()
                .map(|(r, s, n)| vec![r.to_string(), join(&s, ";"), n.to_string()]),
        )?,
        Format::Json => {
            let rows: Vec<Value> = table
                .entries()
                .map(|(r, s, n)| json!({"r": r, "s": s, "count": big(n)}))
                .collect();
            emit_json(out, &Value::Array(rows))?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_enumerate(
    cli: &Cli,
    grade: &Grade,
    count_only: bool,
    cap: u64,
    out: &mut dyn Write,
) -> Outcome {
    checked_grade(cli, grade)?;
    let set = enumerate_with_cap(
        &EnumerationRequest::new(cli.regime, grade.r, grade.s.clone()),
        cap,
    )?;
    if count_only {
        match cli.format {
            Format::Plain => writeln!(out, "{}", set.len())?,
            Format::Csv => emit_csv(out, &["count"], [vec![set.len().to_string()]])?,
            Format::Json => emit_json(out, &json!({"count": set.len()}))?,
        }
        return Ok(EXIT_OK);
    }
    let listing: Vec<String> = set.iter().map(|m| m.to_string()).collect();
    write_listing(cli, &listing, "monomial", out)
}

fn cmd_series(
    cli: &Cli,
    order: usize,
    method: Option<SeriesMethod>,
    out: &mut dyn Write,
) -> Outcome {
    let d = operators(cli)?;
    let ell = ell(cli)?;
    let method = method.unwrap_or(if cli.regime.commutative_product() {
        SeriesMethod::Euler
    } else {
        SeriesMethod::Fixpoint
    });
    let series = match (method, cli.regime) {
        (SeriesMethod::Fixpoint, Regime::Free | Regime::CommUnary) => {
            solve_quadratic_fe(cli.regime, d, ell, order)?
        }
        (SeriesMethod::Closed, Regime::Free) => closed_form_free(d, ell, order)?,
        (SeriesMethod::Euler, Regime::CommMult | Regime::CommBoth) => {
            euler_exp_log(atom_builder(cli.regime, d, ell), order)?
        }
        (m, regime) => {
            let name = m
                .to_possible_value()
                .expect("no skipped variants")
                .get_name()
                .to_string();
            return Err(Failure::Usage(format!(
                "method {name} does not apply to regime {}",
                regime.tag()
            )));
        }
    };
    let coeffs = series.to_counts()?;
    match cli.format {
        Format::Plain => {
            for (n, c) in coeffs.iter().enumerate().skip(1) {
                writeln!(out, "{n}\t{c}")?;
            }
        }
        Format::Csv => emit_csv(
            out,
            &["n", "coeff"],
            coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(n, c)| vec![n.to_string(), c.to_string()]),
        )?,
        Format::Json => emit_json(out, &json!({"order": order, "coeffs": bigs(&coeffs)}))?,
    }
    Ok(EXIT_OK)
}

fn cmd_growth(cli: &Cli, tol: f64, n: usize, out: &mut dyn Write) -> Outcome {
    let result = growth(cli.regime, operators(cli)?, ell(cli)?, tol, n)?;
    let g = format!("{:.6}", result.g_f64());
    let rho = result.rho_f64().map(|r| format!("{r:.6}"));
    match cli.format {
        Format::Plain => {
            writeln!(out, "g\t{g}")?;
            if let Some(rho) = &rho {
                writeln!(out, "rho\t{rho}")?;
            }
            if let Some(n) = result.estimate_n {
                writeln!(out, "n\t{n}")?;
            }
            writeln!(out, "method\t{}", result.method)?;
        }
        Format::Csv => emit_csv(
            out,
            &["regime", "d", "ell", "method", "g", "rho", "n"],
            [vec![
                cli.regime.tag().to_string(),
                result.d.to_string(),
                result.ell.to_string(),
                result.method.to_string(),
                g,
                rho.unwrap_or_default(),
                result.estimate_n.map_or(String::new(), |n| n.to_string()),
            ]],
        )?,
        Format::Json => {
            let number = |s: &str| -> Value { serde_json::from_str(s).unwrap_or(Value::Null) };
            let mut obj = json!({
                "regime": cli.regime.tag(),
                "d": result.d,
                "ell": result.ell,
                "method": result.method.to_string(),
                "g": number(&g),
            });
            match result.method {
                GrowthMethod::ExactRoot => obj["rho"] = rho.as_deref().map_or(Value::Null, number),
                GrowthMethod::RatioEstimate => obj["n"] = json!(result.estimate_n),
            }
            emit_json(out, &obj)?;
        }
    }
    Ok(EXIT_OK)
}

fn write_listing(cli: &Cli, items: &[String], key: &str, out: &mut dyn Write) -> Outcome {
    match cli.format {
        Format::Plain => {
            for item in items {
                writeln!(out, "{item}")?;
            }
        }
        Format::Csv => emit_csv(
            out,
            &["index", key],
            items
                .iter()
                .enumerate()
                .map(|(k, item)| vec![(k + 1).to_string(), item.clone()]),
        )?,
        Format::Json => {
            let mut obj = serde_json::Map::new();
            obj.insert("count".into(), json!(items.len()));
            obj.insert(format!("{key}s"), json!(items));
            emit_json(out, &Value::Object(obj))?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_paths(cli: &Cli, n: u64, check: bool, out: &mut dyn Write) -> Outcome {
    let paths = peakless_paths(operators(cli)?, ell(cli)?, n);
    let items: Vec<String> = paths
        .iter()
        .filter(|p| !check || matched_ascent_monotone(p))
        .map(|p| p.to_string())
        .collect();
    write_listing(cli, &items, "path", out)
}

fn cmd_trees(cli: &Cli, n: usize, check: bool, out: &mut dyn Write) -> Outcome {
    let trees = binary_trees(operators(cli)?, n);
    let items: Vec<String> = trees
        .iter()
        .filter(|t| !check || right_chain_monotone(t))
        .map(|t| t.to_string())
        .collect();
    write_listing(cli, &items, "tree", out)
}

fn cmd_verify(cli: &Cli, file: Option<&std::path::Path>, out: &mut dyn Write) -> Outcome {
    let text = match file {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?,
        None => EMBEDDED.to_string(),
    };
    let entries = parse_fixtures(&text)?;
    let results: Vec<(&FixtureEntry, Option<Mismatch>)> =
        entries.iter().map(|e| (e, check(e))).collect();
    let failures = results.iter().filter(|(_, m)| m.is_some()).count();
    match cli.format {
        Format::Plain => {
            for (e, m) in &results {
                match m {
                    None => writeln!(out, "ok\t{e}")?,
                    Some(m) => writeln!(
                        out,
                        "MISMATCH\t{e}\tterm {}: expected {}, got {}",
                        m.index + 1,
                        m.expected,
                        m.actual
                    )?,
                }
            }
            writeln!(out, "{} entries, {failures} mismatches", results.len())?;
        }
        Format::Csv => emit_csv(
            out,
            &["line", "id", "status", "term", "expected", "actual"],
            results.iter().map(|(e, m)| {
                let mut row = vec![e.line.to_string(), e.sequence_id.clone()];
                match m {
                    None => row.extend(["ok".into(), String::new(), String::new(), String::new()]),
                    Some(m) => row.extend([
                        "mismatch".into(),
                        (m.index + 1).to_string(),
                        m.expected.to_string(),
                        m.actual.to_string(),
                    ]),
                }
                row
            }),
        )?,
        Format::Json => {
            let bad: Vec<Value> = results
                .iter()
                .filter_map(|(e, m)| {
                    m.as_ref().map(|m| {
                        json!({
                            "line": e.line,
                            "id": e.sequence_id,
                            "term": m.index + 1,
                            "expected": big(&m.expected),
                            "actual": big(&m.actual),
                        })
                    })
                })
                .collect();
            emit_json(out, &json!({"entries": results.len(), "mismatches": bad}))?;
        }
    }
    Ok(if failures == 0 {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    })
}

fn cmd_bfile(
    cli: &Cli,
    terms: usize,
    offset: usize,
    raw_length: bool,
    out: &mut dyn Write,
) -> Outcome {
    if terms == 0 {
        return Err(Failure::Usage("--terms must be at least 1".into()));
    }
    for (k, v) in sequence_terms(cli, terms, offset, raw_length)? {
        writeln!(out, "{k} {v}")?;
    }
    Ok(EXIT_OK)
}
