//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 violated precondition
//! (non-simplicial or non-homogeneous input). With `--json`, failures are
//! also reported on stdout as `{"error": {...}}`.

use std::io::{Read, Write};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Deserialize;
use serde_json::{json, Map, Value};

use crate::decomposition::{decompose, hilbert_verify, Decomposition};
use crate::error::Error;
use crate::homology::{analyze, Characteristic};
use crate::properties::report_for;
use crate::report;
use crate::semigroup::{AffineSemigroup, Point};
use crate::sweep::{self, SweepConfig, SweepSummary};

/// Largest accepted absolute value of an input entry.
pub const MAX_ENTRY: i64 = 1 << 20;

/// Largest box scanned by the brute-force module-generator check.
const VERIFY_BOX_LIMIT: u64 = 200_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InputDocument {
    pub name: Option<String>,
    pub generators: Vec<Point>,
}

/// Input errors. Rows and fields count from 1; `line` is present when the
/// input was given as text rows.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("row {row} has {found} entries, expected {expected}{}", at_line(*.line))]
    RaggedRows {
        row: usize,
        line: Option<usize>,
        expected: usize,
        found: usize,
    },
    #[error("row {row}, field {field}: `{token}` is not an integer{}", at_line(*.line))]
    NonInteger {
        row: usize,
        field: usize,
        line: Option<usize>,
        token: String,
    },
    #[error("row {row}, field {field}: {value} exceeds the entry limit {MAX_ENTRY}{}", at_line(*.line))]
    OutOfRange {
        row: usize,
        field: usize,
        line: Option<usize>,
        value: String,
    },
}

fn at_line(line: Option<usize>) -> String {
    line.map(|l| format!(" (line {l})")).unwrap_or_default()
}

impl ParseError {
    pub fn kind(&self) -> &'static str {
        match self {
            ParseError::Syntax { .. } => "Syntax",
            ParseError::RaggedRows { .. } => "RaggedRows",
            ParseError::NonInteger { .. } => "NonInteger",
            ParseError::OutOfRange { .. } => "OutOfRange",
        }
    }

    fn to_json(&self) -> Value {
        let mut v = match self {
            ParseError::Syntax { line, column, .. } => json!({ "line": line, "column": column }),
            ParseError::RaggedRows {
                row,
                line,
                expected,
                found,
            } => json!({ "row": row, "line": line, "expected": expected, "found": found }),
            ParseError::NonInteger {
                row,
                field,
                line,
                token,
            } => {
                json!({ "row": row, "field": field, "line": line, "token": token })
            }
            ParseError::OutOfRange {
                row,
                field,
                line,
                value,
            } => {
                json!({ "row": row, "field": field, "line": line, "token": value })
            }
        };
        v["kind"] = json!(self.kind());
        v["message"] = json!(self.to_string());
        v
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonDocument {
    name: Option<String>,
    generators: Vec<Vec<Value>>,
}

/// Parses either a JSON document `{"name": …, "generators": [[…], …]}`, a
/// bare JSON array of rows, or whitespace-separated integer rows (one
/// generator per line, `#` starts a comment).
pub fn parse_input(bytes: &[u8]) -> Result<InputDocument, ParseError> {
    let text = std::str::from_utf8(bytes).map_err(|e| {
        let prefix = &bytes[..e.valid_up_to()];
        let line = prefix.iter().filter(|&&b| b == b'\n').count() + 1;
        let column = prefix.iter().rev().take_while(|&&b| b != b'\n').count() + 1;
        ParseError::Syntax {
            line,
            column,
            message: "input is not valid UTF-8".into(),
        }
    })?;
    let text = text.strip_prefix('\u{feff}').unwrap_or(text);
    match text.trim_start().chars().next() {
        Some('{') => {
            let doc: JsonDocument = serde_json::from_str(text).map_err(json_syntax)?;
            Ok(InputDocument {
                name: doc.name,
                generators: json_rows(doc.generators)?,
            })
        }
        Some('[') => {
            let rows: Vec<Vec<Value>> = serde_json::from_str(text).map_err(json_syntax)?;
            Ok(InputDocument {
                name: None,
                generators: json_rows(rows)?,
            })
        }
        _ => text_rows(text),
    }
}

fn json_syntax(e: serde_json::Error) -> ParseError {
    let message = e.to_string();
    let message = match message.rfind(" at line ") {
        Some(i) => message[..i].to_string(),
        None => message,
    };
    ParseError::Syntax {
        line: e.line(),
        column: e.column(),
        message,
    }
}

fn check_entry(x: i64, row: usize, field: usize, line: Option<usize>) -> Result<i64, ParseError> {
    if x.abs() > MAX_ENTRY {
        return Err(ParseError::OutOfRange {
            row,
            field,
            line,
            value: x.to_string(),
        });
    }
    Ok(x)
}

fn check_width(rows: &[Point], row: usize, line: Option<usize>, found: usize) -> Result<(), ParseError> {
    match rows.first() {
        Some(first) if first.len() != found => Err(ParseError::RaggedRows {
            row,
            line,
            expected: first.len(),
            found,
        }),
        _ => Ok(()),
    }
}

fn json_rows(rows: Vec<Vec<Value>>) -> Result<Vec<Point>, ParseError> {
    let mut out: Vec<Point> = Vec::with_capacity(rows.len());
    for (r, row) in rows.iter().enumerate() {
        let mut point = Vec::with_capacity(row.len());
        for (f, v) in row.iter().enumerate() {
            let x = v.as_i64().ok_or_else(|| match v.as_u64() {
                Some(big) => ParseError::OutOfRange {
                    row: r + 1,
                    field: f + 1,
                    line: None,
                    value: big.to_string(),
                },
                None => ParseError::NonInteger {
                    row: r + 1,
                    field: f + 1,
                    line: None,
                    token: v.to_string(),
                },
            })?;
            point.push(check_entry(x, r + 1, f + 1, None)?);
        }
        check_width(&out, r + 1, None, point.len())?;
        out.push(point);
    }
    Ok(out)
}

fn text_rows(text: &str) -> Result<InputDocument, ParseError> {
    let mut out: Vec<Point> = Vec::new();
    for (l, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        let row = out.len() + 1;
        let mut point = Vec::new();
        for (f, token) in line.split_whitespace().enumerate() {
            let x = token.parse::<i64>().map_err(|e| {
                use std::num::IntErrorKind::{NegOverflow, PosOverflow};
                match e.kind() {
                    PosOverflow | NegOverflow => ParseError::OutOfRange {
                        row,
                        field: f + 1,
                        line: Some(l + 1),
                        value: token.to_string(),
                    },
                    _ => ParseError::NonInteger {
                        row,
                        field: f + 1,
                        line: Some(l + 1),
                        token: token.to_string(),
                    },
                }
            })?;
            point.push(check_entry(x, row, f + 1, Some(l + 1))?);
        }
        check_width(&out, row, Some(l + 1), point.len())?;
        out.push(point);
    }
    Ok(InputDocument {
        name: None,
        generators: out,
    })
}

#[derive(Parser, Debug)]
#[command(
    name = "monoalg",
    version,
    about = "Decomposition, ring properties and regularity of simplicial affine semigroup rings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decompose K[B] into monomial ideals over the frame ring.
    Decompose(CommonArgs),
    /// Test seminormality, normality, Cohen-Macaulayness, Buchsbaumness and
    /// the Gorenstein property.
    Props(CommonArgs),
    /// Regularity, degree, codimension and depth.
    Reg(CommonArgs),
    /// Check reg <= degree - codim.
    Eg(CommonArgs),
    /// Run everything.
    Analyze(CommonArgs),
    /// Seeded sweep over random homogeneous simplicial semigroups.
    Sweep(SweepArgs),
}

#[derive(Args, Debug)]
struct CommonArgs {
    /// Input file; standard input if absent or `-`.
    #[arg(value_name = "FILE", conflicts_with = "input")]
    file: Option<PathBuf>,
    /// Input file; standard input if absent or `-`.
    #[arg(long, value_name = "PATH")]
    input: Option<PathBuf>,
    /// Emit canonical JSON.
    #[arg(long)]
    json: bool,
    /// Field characteristic for Betti numbers: 0 or a prime.
    #[arg(long = "char", value_name = "P", default_value_t = 0)]
    characteristic: u64,
    /// Degree up to which the Hilbert function check runs.
    #[arg(long, value_name = "N", default_value_t = 8)]
    tmax: usize,
    /// Cross-check the decomposition against brute force.
    #[arg(long)]
    verify: bool,
    /// Include frame coordinates and per-summand detail.
    #[arg(long, short)]
    verbose: bool,
}

#[derive(Args, Debug)]
struct SweepArgs {
    /// Ambient dimension m.
    #[arg(long, default_value_t = 3)]
    dim: usize,
    /// Number of generators, frame included.
    #[arg(long, default_value_t = 5)]
    gens: usize,
    /// Common degree D of all generators; also the largest entry.
    #[arg(long, alias = "max-entry", default_value_t = 4)]
    degree: i64,
    #[arg(long, default_value_t = 50)]
    count: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Field characteristic for Betti numbers: 0 or a prime.
    #[arg(long = "char", value_name = "P", default_value_t = 0)]
    characteristic: u64,
    /// Instead of random draws, run every frame-plus-one-point semigroup of
    /// the given dimension and degree.
    #[arg(long)]
    exhaustive: bool,
    /// Also run the Hilbert function check on every instance.
    #[arg(long)]
    verify: bool,
    #[arg(long, value_name = "N", default_value_t = 8)]
    tmax: usize,
    #[arg(long)]
    json: bool,
}

/// Result of a command: text for stdout and stderr plus an exit code.
struct Outcome {
    stdout: String,
    stderr: String,
    code: i32,
}

enum Failure {
    Parse(ParseError),
    Io(String),
    Algebra(Error),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Algebra(e) if e.is_precondition() => 2,
            _ => 1,
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Failure::Parse(e) => e.to_json(),
            Failure::Io(msg) => json!({ "kind": "Io", "message": msg }),
            Failure::Algebra(e) => error_json(e),
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Parse(e) => e.to_string(),
            Failure::Io(msg) => msg.clone(),
            Failure::Algebra(e) => e.to_string(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Algebra(e)
    }
}

fn error_json(e: &Error) -> Value {
    let mut v = json!({
        "kind": e.kind(),
        "message": e.to_string(),
        "precondition": e.is_precondition(),
    });
    match e {
        Error::NotSimplicial { rays, rank } => {
            v["rays"] = json!(rays);
            v["rank"] = json!(rank);
        }
        Error::NonMinimalGenerators(idx) => v["redundant"] = json!(idx),
        _ => {}
    }
    v
}

fn failure(f: Failure, as_json: bool) -> Outcome {
    let stdout = if as_json {
        report::to_canonical_string(&json!({ "error": f.to_json() }))
    } else {
        String::new()
    };
    Outcome {
        stdout,
        stderr: format!("monoalg: error: {}\n", f.message()),
        code: f.code(),
    }
}

/// Runs the CLI on `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind::{DisplayHelp, DisplayVersion};
            let text = e.render().to_string();
            return if matches!(e.kind(), DisplayHelp | DisplayVersion) {
                let _ = stdout.write_all(text.as_bytes());
                0
            } else {
                let _ = stderr.write_all(text.as_bytes());
                1
            };
        }
    };
    let as_json = match &cli.command {
        Command::Sweep(a) => a.json,
        Command::Decompose(c) | Command::Props(c) | Command::Reg(c) | Command::Eg(c) | Command::Analyze(c) => c.json,
    };

    let threads = match std::env::var("MONOALG_THREADS") {
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(n) if n > 0 => Some(n),
            _ => {
                let f = Failure::Io(format!("MONOALG_THREADS must be a positive integer, got `{s}`"));
                return emit(failure(f, as_json), stdout, stderr);
            }
        },
        Err(_) => None,
    };

    let outcome = match &cli.command {
        Command::Sweep(a) => run_sweep(a, threads),
        Command::Decompose(c) | Command::Props(c) | Command::Reg(c) | Command::Eg(c) | Command::Analyze(c) => {
            match read_input(c, stdin) {
                Ok(doc) => guarded(as_json, || {
                    sweep::with_threads(threads, || run_single(&cli.command, c, &doc))
                }),
                Err(f) => failure(f, as_json),
            }
        }
    };
    emit(outcome, stdout, stderr)
}

fn emit(o: Outcome, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let _ = stdout.write_all(o.stdout.as_bytes());
    let _ = stderr.write_all(o.stderr.as_bytes());
    let _ = stdout.flush();
    o.code
}

/// Turns an unexpected panic into an exit code 1 report.
fn guarded(as_json: bool, f: impl FnOnce() -> Outcome) -> Outcome {
    catch_unwind(AssertUnwindSafe(f))
        .unwrap_or_else(|_| failure(Failure::Io("internal error while processing the input".into()), as_json))
}

fn read_input(c: &CommonArgs, stdin: &mut dyn Read) -> Result<InputDocument, Failure> {
    let path = c.file.as_ref().or(c.input.as_ref()).filter(|p| p.as_os_str() != "-");
    let bytes = match path {
        Some(p) => std::fs::read(p).map_err(|e| Failure::Io(format!("{}: {e}", p.display())))?,
        None => {
            let mut buf = Vec::new();
            stdin
                .read_to_end(&mut buf)
                .map_err(|e| Failure::Io(format!("standard input: {e}")))?;
            buf
        }
    };
    parse_input(&bytes).map_err(Failure::Parse)
}

fn ok(stdout: String) -> Outcome {
    Outcome {
        stdout,
        stderr: String::new(),
        code: 0,
    }
}

fn run_single(cmd: &Command, c: &CommonArgs, doc: &InputDocument) -> Outcome {
    let result = (|| -> Result<Outcome, Failure> {
        let char = Characteristic::new(c.characteristic)?;
        let b = AffineSemigroup::new(doc.generators.clone())?;
        let input = report::input_json(doc.name.as_deref(), b.generators());
        let p = char.get();
        Ok(match cmd {
            Command::Decompose(_) => {
                let dec = decompose(&b)?;
                let check = c.verify.then(|| verification(&b, &dec, c.tmax));
                if c.json {
                    let mut v = json!({ "input": input, "decomposition": report::decomposition_json(&dec, c.verbose) });
                    if let Some(check) = check {
                        v["verification"] = check;
                    }
                    ok(report::to_canonical_string(&v))
                } else {
                    let mut s = report::decomposition_text(&dec, c.verbose);
                    if let Some(check) = check {
                        s.push_str(&verification_text(&check));
                    }
                    ok(s)
                }
            }
            Command::Props(_) => {
                let dec = decompose(&b)?;
                let r = report_for(&b, &dec);
                if c.json {
                    ok(report::to_canonical_string(
                        &json!({ "input": input, "properties": report::properties_json(&r) }),
                    ))
                } else {
                    ok(report::properties_text(&r))
                }
            }
            Command::Reg(_) => {
                let r = analyze(&b, char)?;
                if c.json {
                    ok(report::to_canonical_string(
                        &json!({ "input": input, "regularity": report::regularity_json(&r, p, c.verbose) }),
                    ))
                } else {
                    ok(report::regularity_text(&r, p, c.verbose))
                }
            }
            Command::Eg(_) => {
                let r = analyze(&b, char)?;
                if c.json {
                    ok(report::to_canonical_string(&report::eg_json(&r)))
                } else {
                    ok(report::eg_text(&r))
                }
            }
            Command::Analyze(_) => analyze_all(&b, input, doc.name.as_deref(), char, c)?,
            Command::Sweep(_) => unreachable!("sweep is dispatched separately"),
        })
    })();
    result.unwrap_or_else(|f| failure(f, c.json))
}

/// Decomposition and properties always; regularity when the input is
/// homogeneous. A rejected regularity computation still prints the rest and
/// exits with 2.
fn analyze_all(
    b: &AffineSemigroup,
    input: Value,
    name: Option<&str>,
    char: Characteristic,
    c: &CommonArgs,
) -> Result<Outcome, Failure> {
    let dec = decompose(b)?;
    let props = report_for(b, &dec);
    let reg = analyze(b, char);
    let check = c.verify.then(|| verification(b, &dec, c.tmax));
    let p = char.get();

    let (stderr, code) = match &reg {
        Ok(_) => (String::new(), 0),
        Err(e) => (format!("monoalg: error: {e}\n"), Failure::Algebra(e.clone()).code()),
    };
    let stdout = if c.json {
        let mut v = json!({
            "input": input,
            "decomposition": report::decomposition_json(&dec, c.verbose),
            "properties": report::properties_json(&props),
            "regularity": match &reg {
                Ok(r) => report::regularity_json(r, p, c.verbose),
                Err(e) => json!({ "error": error_json(e) }),
            },
        });
        if let Some(check) = check {
            v["verification"] = check;
        }
        report::to_canonical_string(&v)
    } else {
        let mut s = String::new();
        if let Some(name) = name {
            s.push_str(&format!("name: {name}\n"));
        }
        s.push_str("-- decomposition\n");
        s.push_str(&report::decomposition_text(&dec, c.verbose));
        s.push_str("-- properties\n");
        s.push_str(&report::properties_text(&props));
        s.push_str("-- regularity\n");
        match &reg {
            Ok(r) => s.push_str(&report::regularity_text(r, p, c.verbose)),
            Err(e) => s.push_str(&format!("error: {e}\n")),
        }
        if let Some(check) = check {
            s.push_str(&verification_text(&check));
        }
        s
    };
    Ok(Outcome { stdout, stderr, code })
}

/// Hilbert function comparison and a brute-force recount of the module
/// generators inside the bounding box of `B_A`.
fn verification(b: &AffineSemigroup, dec: &Decomposition, t_max: usize) -> Value {
    let mut m = Map::new();
    let hilbert = match b.degree_functional() {
        Some(f) => match hilbert_verify(b, dec, &f, t_max) {
            Ok(v) => json!(v),
            Err(e) => json!(format!("skipped: {e}")),
        },
        None => json!("skipped: not homogeneous"),
    };
    m.insert("hilbert".into(), hilbert);
    m.insert("tMax".into(), json!(t_max));
    m.insert("moduleGenerators".into(), module_generator_check(b, dec));
    Value::Object(m)
}

fn module_generator_check(b: &AffineSemigroup, dec: &Decomposition) -> Value {
    let mut expected: Vec<&Point> = dec.summands.iter().flat_map(|s| &s.gamma).collect();
    expected.sort();
    let m = b.ambient_dim();
    let upper: Vec<i64> = (0..m)
        .map(|k| expected.iter().map(|p| p[k]).max().unwrap_or(0))
        .collect();
    let size = upper.iter().try_fold(1u64, |acc, &u| acc.checked_mul(u as u64 + 1));
    if !size.is_some_and(|s| s <= VERIFY_BOX_LIMIT) {
        return json!("skipped: search box too large");
    }
    let frame = dec.frame.elements();
    let mut found = Vec::new();
    let mut x = vec![0i64; m];
    loop {
        let reducible = |x: &Point| {
            frame.iter().any(|e| {
                let y: Point = x.iter().zip(e).map(|(a, b)| a - b).collect();
                y.iter().all(|&v| v >= 0) && b.member(&y).unwrap_or(false)
            })
        };
        if b.member(&x).unwrap_or(false) && !reducible(&x) {
            found.push(x.clone());
        }
        let mut k = 0;
        while k < m && x[k] == upper[k] {
            x[k] = 0;
            k += 1;
        }
        if k == m {
            break;
        }
        x[k] += 1;
    }
    found.sort();
    json!(found.iter().eq(expected.iter().copied()))
}

fn verification_text(v: &Value) -> String {
    let show = |x: &Value| match x {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    };
    format!(
        "-- verification\nhilbert: {} (tmax {})\nmoduleGenerators: {}\n",
        show(&v["hilbert"]),
        v["tMax"],
        show(&v["moduleGenerators"])
    )
}

fn run_sweep(a: &SweepArgs, threads: Option<usize>) -> Outcome {
    let char = match Characteristic::new(a.characteristic) {
        Ok(c) => c,
        Err(e) => return failure(e.into(), a.json),
    };
    let cfg = SweepConfig {
        ambient_dim: a.dim,
        num_generators: if a.exhaustive { a.dim + 1 } else { a.gens },
        max_entry: a.degree,
        count: a.count,
        seed: a.seed,
        char,
        t_max: a.verify.then_some(a.tmax),
    };
    if let Err(e) = cfg.validate() {
        return failure(e.into(), a.json);
    }
    if a.degree > 64 || a.dim > 8 {
        let f = Failure::Algebra(Error::InvalidConfig(
            "sweeps are limited to dimension 8 and degree 64".into(),
        ));
        return failure(f, a.json);
    }
    guarded(a.json, || {
        sweep::with_threads(threads, || {
            let family = if a.exhaustive {
                sweep::one_extra_point_family(a.dim, a.degree)
            } else {
                match sweep::generate(&cfg) {
                    Ok(f) => f,
                    Err(e) => return failure(e.into(), a.json),
                }
            };
            let summary = SweepSummary::from_instances(&sweep::run_family(family, char, cfg.t_max));
            if a.json {
                let mut v = summary.to_json();
                v["config"] = json!({
                    "dim": a.dim,
                    "gens": cfg.num_generators,
                    "degree": a.degree,
                    "count": a.count,
                    "seed": a.seed,
                    "characteristic": a.characteristic,
                    "exhaustive": a.exhaustive,
                    "tMax": cfg.t_max,
                });
                ok(report::to_canonical_string(&v))
            } else {
                ok(summary.to_text())
            }
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str], input: &str) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut argv = vec!["monoalg"];
        argv.extend_from_slice(args);
        let code = run(argv, &mut input.as_bytes(), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn parses_json_document() {
        let doc = parse_input(br#"{"generators": [[4,0,0],[0,4,0]]}"#).unwrap();
        assert_eq!(doc.generators.len(), 2);
        assert_eq!(doc.generators[0].len(), 3);
        assert_eq!(doc.name, None);
        let doc = parse_input(br#"{"name": "pair", "generators": [[1]]}"#).unwrap();
        assert_eq!(doc.name.as_deref(), Some("pair"));
    }

    #[test]
    fn parses_text_rows() {
        let doc = parse_input(b"2\n3\n").unwrap();
        assert_eq!(doc.generators, vec![vec![2], vec![3]]);
        let doc = parse_input(b"# comment\n 1 0  \n\n0 1 # trailing\n").unwrap();
        assert_eq!(doc.generators, vec![vec![1, 0], vec![0, 1]]);
    }

    #[test]
    fn ragged_rows() {
        assert!(matches!(
            parse_input(b"[[1,2],[3]]"),
            Err(ParseError::RaggedRows {
                row: 2,
                line: None,
                expected: 2,
                found: 1
            })
        ));
        assert!(matches!(
            parse_input(b"1 2\n\n3\n"),
            Err(ParseError::RaggedRows {
                row: 2,
                line: Some(3),
                ..
            })
        ));
    }

    #[test]
    fn non_integers_and_syntax() {
        assert!(matches!(
            parse_input(b"1 2\n3 x\n"),
            Err(ParseError::NonInteger {
                row: 2,
                field: 2,
                line: Some(2),
                ..
            })
        ));
        assert!(matches!(
            parse_input(b"[[1, 2.5]]"),
            Err(ParseError::NonInteger { row: 1, field: 2, .. })
        ));
        assert!(matches!(
            parse_input(b"{\"generators\": [[1,2]"),
            Err(ParseError::Syntax { line: 1, .. })
        ));
        assert!(matches!(parse_input(b"[[1]]\xff"), Err(ParseError::Syntax { .. })));
        assert!(matches!(
            parse_input(b"99999999999999999999"),
            Err(ParseError::OutOfRange { .. })
        ));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_str(&["decompose"], "1 0\n0 1\n").0, 0);
        assert_eq!(run_str(&["decompose"], "1 0\n0 x\n").0, 1);
        assert_eq!(run_str(&["frobnicate"], "").0, 1);
        assert_eq!(run_str(&["reg", "--char", "4"], "1 0\n0 1\n").0, 1);
        assert_eq!(run_str(&["reg"], "2\n3\n").0, 2);
        let (code, out, _) = run_str(&["decompose", "--json"], "1 1 0\n1 0 1\n0 1 1\n1 1 1\n0 0 1\n");
        assert_eq!(code, 2);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["error"]["kind"], "NotSimplicial");
        assert_eq!(run_str(&["--help"], "").0, 0);
    }

    #[test]
    fn free_plane() {
        let (code, out, _) = run_str(&["decompose", "--json"], "1 0\n0 1\n");
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        let summands = v["decomposition"]["summands"].as_array().unwrap();
        assert_eq!(summands.len(), 1);
        assert_eq!(summands[0]["shift"], json!([0, 0]));
        assert_eq!(summands[0]["ideal"]["generators"], json!([[0, 0]]));
    }

    #[test]
    fn analyze_without_grading_keeps_partial_report() {
        let (code, out, err) = run_str(&["analyze", "--json"], "2\n3\n");
        assert_eq!(code, 2);
        assert!(err.contains("not homogeneous"));
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["properties"]["gorenstein"], true);
        assert_eq!(v["regularity"]["error"]["kind"], "NotHomogeneous");
    }

    #[test]
    fn verify_on_worked_example() {
        let input = "4 0 0\n0 4 0\n0 0 4\n1 0 3\n0 2 2\n3 0 1\n1 2 1\n";
        let (code, out, _) = run_str(&["decompose", "--json", "--verify"], input);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["verification"]["hilbert"], true);
        assert_eq!(v["verification"]["moduleGenerators"], true);
    }
}
