//! Command-line front end. Every command returns an [`Outcome`] instead of
//! printing, so the binary stays a thin wrapper and tests run in process.
//!
//! Exit codes: 0 success or minimal, 1 batch mismatch, 2 parse or input
//! error, 3 inconclusive certificate, 4 state-sum limit exceeded.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::atom::Atom;
use crate::bracket::{kauffman_bracket_with_limit, span_report_from, STATE_LIMIT_ENV};
use crate::diagram::{
    braid_closure, cable, connected_sum, mirror, parse_gauss, parse_long_pd, parse_pd,
    serialize_pd, BraidWord, Dart, Diagram, LongDiagram,
};
use crate::error::ParseError;
use crate::minimality::{
    certify_classical, certify_framed, certify_long, Certificate, CertifyOptions,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;
pub const EXIT_LIMIT: i32 = 4;

/// The corpus shipped with the crate.
pub const BUNDLED_CORPUS: &str = include_str!("../corpus/knots.txt");

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            stdout,
            stderr: String::new(),
            code: EXIT_OK,
        }
    }

    fn fail(code: i32, message: impl std::fmt::Display) -> Self {
        Self {
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
            code,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Pd,
    Gauss,
    Braid,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum CategoryArg {
    #[default]
    Classical,
    Framed,
    Long,
}

#[derive(Debug, Parser)]
#[command(
    name = "knot-atoms",
    version,
    about = "Minimality certificates for knot diagrams"
)]
pub struct Cli {
    /// Input notation.
    #[arg(long, global = true, value_enum, default_value_t = Format::Pd)]
    pub format: Format,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Largest crossing count for the exhaustive state sum.
    #[arg(long, global = true, env = STATE_LIMIT_ENV, default_value_t = crate::bracket::DEFAULT_STATE_LIMIT)]
    pub limit: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Crossings, components, classicality, writhe and atom counts.
    Info { input: String },
    /// Check the hypotheses of a minimality statement.
    Certify {
        input: String,
        #[arg(long, value_enum, default_value_t = CategoryArg::Classical)]
        category: CategoryArg,
    },
    /// Kauffman bracket and its span against the atom bound.
    Bracket { input: String },
    /// Certify every entry of a corpus file and compare expected values.
    Batch {
        /// Corpus file; the bundled corpus when omitted.
        #[arg(long)]
        corpus: Option<PathBuf>,
    },
    /// Blackboard-framed `m`-cable, printed as PD.
    Cable {
        input: String,
        #[arg(short, long, default_value_t = 2)]
        m: usize,
    },
    /// Mirror image, printed as PD.
    Mirror { input: String },
    /// Connected sum along two arcs, printed as PD. Dart `4c + s` is slot
    /// `s` of crossing `c`.
    Consum {
        first: String,
        second: String,
        #[arg(long, default_value_t = 0)]
        arc1: u32,
        #[arg(long, default_value_t = 0)]
        arc2: u32,
    },
}

/// Parse arguments and run. Argument errors come back with clap's own text.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let text = e.render().to_string();
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            if code == EXIT_OK {
                Outcome::ok(text)
            } else {
                Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code,
                }
            }
        }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Info { input } => with_text(input, |t| cmd_info(t, cli.format, cli.json)),
        Command::Certify { input, category } => {
            with_text(input, |t| cmd_certify(t, cli.format, *category, cli.limit))
        }
        Command::Bracket { input } => {
            with_text(input, |t| cmd_bracket(t, cli.format, cli.limit, cli.json))
        }
        Command::Batch { corpus } => match corpus {
            None => cmd_batch(BUNDLED_CORPUS, cli.limit, cli.json),
            Some(path) => match std::fs::read_to_string(path) {
                Ok(text) => cmd_batch(&text, cli.limit, cli.json),
                Err(e) => Outcome::fail(EXIT_PARSE, format!("{}: {e}", path.display())),
            },
        },
        Command::Cable { input, m } => with_text(input, |t| cmd_cable(t, cli.format, *m)),
        Command::Mirror { input } => with_text(input, |t| cmd_mirror(t, cli.format)),
        Command::Consum {
            first,
            second,
            arc1,
            arc2,
        } => with_text(first, |a| {
            with_text(second, |b| {
                cmd_consum(a, b, cli.format, Dart(*arc1), Dart(*arc2))
            })
        }),
    }
}

/// An argument naming an existing file is read; `-` reads stdin; anything
/// else is the diagram text itself.
fn with_text(arg: &str, f: impl FnOnce(&str) -> Outcome) -> Outcome {
    let path = std::path::Path::new(arg);
    if arg == "-" {
        let mut buf = String::new();
        return match std::io::Read::read_to_string(&mut std::io::stdin(), &mut buf) {
            Ok(_) => f(&buf),
            Err(e) => Outcome::fail(EXIT_PARSE, e),
        };
    }
    if path.is_file() {
        return match std::fs::read_to_string(path) {
            Ok(text) => f(&text),
            Err(e) => Outcome::fail(EXIT_PARSE, format!("{arg}: {e}")),
        };
    }
    f(arg)
}

pub fn read_diagram(text: &str, format: Format) -> Result<Diagram, ParseError> {
    match format {
        Format::Pd => parse_pd(text),
        Format::Gauss => parse_gauss(text),
        Format::Braid => {
            let word: BraidWord = text.trim().parse()?;
            Ok(braid_closure(&word)?)
        }
    }
}

pub fn cmd_info(text: &str, format: Format, as_json: bool) -> Outcome {
    let d = match read_diagram(text, format) {
        Ok(d) => d,
        Err(e) => return Outcome::fail(EXIT_PARSE, e),
    };
    let atom = Atom::build(&d);
    let report = json!({
        "n": d.crossing_count(),
        "components": d.component_count(),
        "knot": d.is_knot(),
        "classical": d.is_classical(),
        "writhe": d.writhe(),
        "atom": atom.summary(&d),
    });
    if as_json {
        return Outcome::ok(format!("{report}\n"));
    }
    let mut out = String::new();
    let _ = writeln!(out, "n: {}", d.crossing_count());
    let _ = writeln!(out, "components: {}", d.component_count());
    let _ = writeln!(out, "knot: {}", d.is_knot());
    let _ = writeln!(out, "classical: {}", d.is_classical());
    let _ = writeln!(out, "writhe: {}", d.writhe());
    let _ = writeln!(out, "chi: {}", atom.euler_characteristic());
    let _ = writeln!(out, "good: {}", atom.goodness(&d).good);
    Outcome::ok(out)
}

fn certificate_code(c: &Certificate) -> i32 {
    if c.verdict.is_minimal() {
        EXIT_OK
    } else {
        EXIT_INCONCLUSIVE
    }
}

pub fn cmd_certify(text: &str, format: Format, category: CategoryArg, limit: usize) -> Outcome {
    let opts = CertifyOptions { limit };
    let cert = match category {
        CategoryArg::Long => {
            let long = match format {
                Format::Pd => parse_long_pd(text),
                _ => read_diagram(text, format).and_then(|d| {
                    if d.crossing_count() == 0 {
                        Ok(LongDiagram::trivial())
                    } else {
                        Ok(LongDiagram::cut(&d, Dart(0))?)
                    }
                }),
            };
            match long {
                Ok(l) => certify_long(&l, &opts),
                Err(e) => return Outcome::fail(EXIT_PARSE, e),
            }
        }
        CategoryArg::Classical | CategoryArg::Framed => {
            let d = match read_diagram(text, format) {
                Ok(d) => d,
                Err(e) => return Outcome::fail(EXIT_PARSE, e),
            };
            if category == CategoryArg::Classical {
                certify_classical(&d, &opts)
            } else {
                certify_framed(&d, &opts)
            }
        }
    };
    Outcome {
        stdout: format!("{}\n", cert.to_json()),
        stderr: String::new(),
        code: certificate_code(&cert),
    }
}

pub fn cmd_bracket(text: &str, format: Format, limit: usize, as_json: bool) -> Outcome {
    let d = match read_diagram(text, format) {
        Ok(d) => d,
        Err(e) => return Outcome::fail(EXIT_PARSE, e),
    };
    let poly = match kauffman_bracket_with_limit(&d, limit) {
        Ok(p) => p,
        Err(e) => return Outcome::fail(EXIT_LIMIT, e),
    };
    let r = span_report_from(&d, &poly);
    if as_json {
        let v = json!({
            "bracket": poly.to_string(),
            "span": r.span,
            "n": r.n,
            "chi": r.chi,
            "bound": r.bound,
            "holds": r.holds,
            "equality": r.equality,
        });
        return Outcome::ok(format!("{v}\n"));
    }
    Outcome::ok(format!(
        "bracket: {poly}\nspan: {}\nbound: {}\nequality: {}\n",
        r.span, r.bound, r.equality
    ))
}

fn print_pd(d: Result<Diagram, impl std::fmt::Display>) -> Outcome {
    match d {
        Ok(d) => Outcome::ok(format!("{}\n", serialize_pd(&d))),
        Err(e) => Outcome::fail(EXIT_PARSE, e),
    }
}

pub fn cmd_cable(text: &str, format: Format, m: usize) -> Outcome {
    match read_diagram(text, format) {
        Ok(d) => print_pd(cable(&d, m)),
        Err(e) => Outcome::fail(EXIT_PARSE, e),
    }
}

pub fn cmd_mirror(text: &str, format: Format) -> Outcome {
    print_pd(read_diagram(text, format).map(|d| mirror(&d)))
}

pub fn cmd_consum(first: &str, second: &str, format: Format, arc1: Dart, arc2: Dart) -> Outcome {
    let (a, b) = match (read_diagram(first, format), read_diagram(second, format)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => return Outcome::fail(EXIT_PARSE, e),
    };
    print_pd(connected_sum(&a, arc1, &b, arc2))
}

/// Expected values attached to a corpus entry.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Expected {
    pub good: Option<bool>,
    pub chi: Option<i64>,
    pub span: Option<i64>,
}

/// One line of a corpus file:
/// `name | PD code | tags | expected values [DERIVED]`.
/// The last two fields may be empty or absent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusEntry {
    pub line: usize,
    pub name: String,
    pub pd_text: String,
    pub tags: Vec<String>,
    pub expected: Option<Expected>,
}

impl CorpusEntry {
    pub fn tag(&self, key: &str) -> Option<&str> {
        self.tags
            .iter()
            .find_map(|t| t.strip_prefix(key)?.strip_prefix('='))
    }

    pub fn has_tag(&self, tag: &str) -> bool {
        self.tags.iter().any(|t| t == tag)
    }
}

/// A corpus line that could not be read as an entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusLineError {
    pub line: usize,
    pub name: String,
    pub message: String,
}

fn parse_expected(field: &str) -> Result<Option<Expected>, String> {
    let field = field.trim();
    if field.is_empty() {
        return Ok(None);
    }
    let body = field
        .strip_suffix("[DERIVED]")
        .ok_or("expected values must carry a [DERIVED] tag")?;
    let mut e = Expected::default();
    for kv in body.split_whitespace() {
        let (k, v) = kv
            .split_once('=')
            .ok_or_else(|| format!("bad field {kv:?}"))?;
        let bad = || format!("bad value in {kv:?}");
        match k {
            "good" => e.good = Some(v.parse().map_err(|_| bad())?),
            "chi" => e.chi = Some(v.parse().map_err(|_| bad())?),
            "span" => e.span = Some(v.parse().map_err(|_| bad())?),
            _ => return Err(format!("unknown field {k:?}")),
        }
    }
    Ok(Some(e))
}

/// Parse a corpus. Blank lines and `#` comments are skipped; each remaining
/// line yields an entry or an error, in file order.
pub fn parse_corpus(text: &str) -> Vec<Result<CorpusEntry, CorpusLineError>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .map(|(i, l)| {
            let fields: Vec<&str> = l.split('|').map(str::trim).collect();
            let name = fields[0].to_string();
            let err = |message: String| CorpusLineError {
                line: i + 1,
                name: name.clone(),
                message,
            };
            if fields.len() < 2 || fields.len() > 4 || name.is_empty() {
                return Err(err("expected `name | pd | tags | expected`".into()));
            }
            let expected = parse_expected(fields.get(3).copied().unwrap_or("")).map_err(err)?;
            Ok(CorpusEntry {
                line: i + 1,
                name: name.clone(),
                pd_text: fields[1].to_string(),
                tags: fields
                    .get(2)
                    .map(|t| t.split_whitespace().map(String::from).collect())
                    .unwrap_or_default(),
                expected,
            })
        })
        .collect()
}

/// Result of one batch entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BatchRow {
    pub name: String,
    pub line: usize,
    pub certificate: Option<Certificate>,
    pub mismatches: Vec<String>,
    pub error: Option<String>,
}

fn mismatches(cert: &Certificate, e: &Expected) -> Vec<String> {
    let mut out = Vec::new();
    if let Some(g) = e.good.filter(|&g| g != cert.good) {
        out.push(format!("good: expected {g}, got {}", cert.good));
    }
    if let Some(c) = e.chi.filter(|&c| c != cert.chi) {
        out.push(format!("chi: expected {c}, got {}", cert.chi));
    }
    if let (Some(s), Some(got)) = (e.span, cert.span) {
        if s != got {
            out.push(format!("span: expected {s}, got {got}"));
        }
    }
    out
}

pub fn batch_rows(text: &str, limit: usize) -> Vec<BatchRow> {
    let opts = CertifyOptions { limit };
    parse_corpus(text)
        .into_par_iter()
        .map(|entry| match entry {
            Err(e) => BatchRow {
                name: e.name,
                line: e.line,
                certificate: None,
                mismatches: Vec::new(),
                error: Some(e.message),
            },
            Ok(entry) => match parse_pd(&entry.pd_text) {
                Err(e) => BatchRow {
                    name: entry.name,
                    line: entry.line,
                    certificate: None,
                    mismatches: Vec::new(),
                    error: Some(e.to_string()),
                },
                Ok(d) => {
                    let cert = certify_classical(&d, &opts);
                    let mismatches = entry
                        .expected
                        .as_ref()
                        .map(|e| mismatches(&cert, e))
                        .unwrap_or_default();
                    BatchRow {
                        name: entry.name,
                        line: entry.line,
                        certificate: Some(cert),
                        mismatches,
                        error: None,
                    }
                }
            },
        })
        .collect()
}

/// Summary table in corpus order. Exit 2 when a line failed to parse, else
/// 1 on any expected-value mismatch.
pub fn cmd_batch(text: &str, limit: usize, as_json: bool) -> Outcome {
    let rows = batch_rows(text, limit);
    let code = if rows.iter().any(|r| r.error.is_some()) {
        EXIT_PARSE
    } else if rows.iter().any(|r| !r.mismatches.is_empty()) {
        EXIT_MISMATCH
    } else {
        EXIT_OK
    };
    let stdout = if as_json {
        format!("{}\n", serde_json::to_value(&rows).expect("rows serialize"))
    } else {
        let mut out = format!(
            "{:<18} {:>3} {:>5} {:>4} {:>5} {:>5}  {:<18} status\n",
            "name", "n", "good", "chi", "span", "bound", "verdict"
        );
        for r in &rows {
            match (&r.certificate, &r.error) {
                (Some(c), _) => {
                    let span = c.span.map_or("-".to_string(), |s| s.to_string());
                    let verdict = serde_json::to_value(c.verdict).expect("verdict serializes");
                    let status = if r.mismatches.is_empty() {
                        "ok".to_string()
                    } else {
                        format!("MISMATCH {}", r.mismatches.join("; "))
                    };
                    let _ = writeln!(
                        out,
                        "{:<18} {:>3} {:>5} {:>4} {:>5} {:>5}  {:<18} {status}",
                        r.name,
                        c.n,
                        c.good,
                        c.chi,
                        span,
                        c.bound,
                        verdict.as_str().unwrap_or_default(),
                    );
                }
                (None, e) => {
                    let _ = writeln!(
                        out,
                        "{:<18} line {}: ERROR {}",
                        r.name,
                        r.line,
                        e.as_deref().unwrap_or_default()
                    );
                }
            }
        }
        out
    };
    Outcome {
        stdout,
        stderr: String::new(),
        code,
    }
}
