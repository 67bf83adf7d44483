//! The `polyext` command line.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 unsupported pair or
//! functor, 3 cross-check mismatch.

pub mod parse;
pub mod render;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use polyext_core::ext::{cross_check_suite, CrossCheckReport, StableTerm};
use polyext_core::groupcoh::{group_cohomology, FiniteGroup, GModule};
use polyext_core::{
    cross_check, ext, stable_cohomology, Error, ExtOptions, FunctorDescriptor, GradedAbGroup, Method, StableMode,
    StableResult,
};

pub use parse::{parse_functor, ParseError};
use render::{degree_entries, graded_csv, graded_text, DegreeEntry, GradedDocument, QueryDocument};

/// Environment variable holding the default degree bound.
pub const MAX_DEGREE_ENV: &str = "POLYEXT_MAX_DEGREE";
const FALLBACK_MAX_DEGREE: i64 = 8;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_UNSUPPORTED: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "polyext", version, about = "Ext groups between polynomial functors on free groups")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the output here instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MethodArg {
    Auto,
    Closed,
    Chain,
    Both,
}

impl MethodArg {
    fn method(self) -> Method {
        match self {
            MethodArg::Auto => Method::Auto,
            MethodArg::Closed => Method::ClosedForm,
            MethodArg::Chain => Method::ChainLevel,
            MethodArg::Both => Method::Both,
        }
    }

    fn name(self) -> &'static str {
        match self {
            MethodArg::Auto => "auto",
            MethodArg::Closed => "closed",
            MethodArg::Chain => "chain",
            MethodArg::Both => "both",
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TableName {
    /// Ext^i(ab, S^n∘ab) for n = 1..max-n.
    AbSym,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Rational,
    Structural,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GroupArg {
    #[value(name = "S2", alias = "s2")]
    S2,
    #[value(name = "S3", alias = "s3")]
    S3,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CoeffArg {
    Trivial,
    Sign,
}

fn functor_arg(s: &str) -> Result<FunctorDescriptor, String> {
    parse_functor(s).map_err(|e| e.to_string())
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Ext^*(F, G) for a supported pair.
    Ext {
        #[arg(value_parser = functor_arg)]
        source: FunctorDescriptor,
        #[arg(value_parser = functor_arg)]
        target: FunctorDescriptor,
        /// Ranks over Q instead of integral groups.
        #[arg(long)]
        rational: bool,
        /// Degree bound for infinite families (default from POLYEXT_MAX_DEGREE, else 8).
        #[arg(long, value_name = "D")]
        max_degree: Option<i64>,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        /// Print torsion in primary decomposition.
        #[arg(long)]
        primary: bool,
    },
    /// Tables of Ext groups computed from chain-level models.
    Table {
        #[arg(value_enum)]
        name: TableName,
        #[arg(long, value_name = "N", default_value_t = 9)]
        max_n: usize,
        #[arg(long)]
        primary: bool,
    },
    /// Stable cohomology of automorphism groups of free groups.
    Stable {
        #[arg(value_parser = functor_arg)]
        functor: FunctorDescriptor,
        #[arg(long, value_enum, default_value_t = ModeArg::Rational)]
        mode: ModeArg,
        #[arg(long, value_name = "D")]
        max_degree: Option<i64>,
    },
    /// Integral cohomology of a small symmetric group.
    Groupcoh {
        #[arg(value_enum)]
        group: GroupArg,
        #[arg(long, value_enum, default_value_t = CoeffArg::Trivial)]
        coeff: CoeffArg,
        #[arg(long, value_name = "D")]
        max_degree: Option<i64>,
        #[arg(long)]
        primary: bool,
    },
    /// Compare closed forms with chain-level models.
    Check {
        /// Run the whole built-in suite.
        #[arg(long, conflicts_with_all = ["source", "target"])]
        all: bool,
        #[arg(value_parser = functor_arg, requires = "target")]
        source: Option<FunctorDescriptor>,
        #[arg(value_parser = functor_arg)]
        target: Option<FunctorDescriptor>,
        #[arg(long, value_name = "D")]
        max_degree: Option<i64>,
    },
}

/// A failure with its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::UnsupportedPair { .. } | Error::UnsupportedFunctor { .. } | Error::OnlyOneMethod { .. } => {
                EXIT_UNSUPPORTED
            }
            Error::MethodMismatch { .. } => EXIT_MISMATCH,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

fn degree_bound(flag: Option<i64>) -> Result<i64, Failure> {
    let d = match flag {
        Some(d) => d,
        None => match std::env::var(MAX_DEGREE_ENV) {
            Ok(v) => v
                .trim()
                .parse()
                .map_err(|_| usage(format!("{MAX_DEGREE_ENV}={v:?} is not an integer")))?,
            Err(_) => FALLBACK_MAX_DEGREE,
        },
    };
    if d < 0 {
        return Err(usage("the degree bound must be non-negative"));
    }
    Ok(d)
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents serialize");
    s.push('\n');
    s
}

/// Output text plus the exit code it goes with.
struct Output {
    text: String,
    code: i32,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, code: EXIT_OK }
    }
}

fn render_graded(doc: &GradedDocument, value: &GradedAbGroup, format: Format, title: &str, label: &str, primary: bool, rational: bool) -> String {
    match format {
        Format::Json => json(doc),
        Format::Csv => graded_csv(value),
        Format::Text => {
            let mut lines = vec![format!("{title}:")];
            lines.extend(graded_text(label, value, primary, rational));
            if let Some(d) = doc.truncated_above {
                lines.push(format!("computed through degree {d}"));
            }
            if let Some(p) = &doc.periodicity {
                lines.push(format!("periodicity: {p}"));
            }
            lines.push(format!("method: {}", doc.method));
            lines.extend(doc.warnings.iter().map(|w| format!("warning: {w}")));
            lines.join("\n") + "\n"
        }
    }
}

fn run_ext(
    f: FunctorDescriptor,
    g: FunctorDescriptor,
    rational: bool,
    max_degree: Option<i64>,
    method: MethodArg,
    primary: bool,
    format: Format,
) -> Result<Output, Failure> {
    let d = degree_bound(max_degree)?;
    let r = ext(
        f,
        g,
        ExtOptions {
            rational,
            degree_bound: d,
            method: method.method(),
        },
    )?;
    let doc = GradedDocument {
        query: QueryDocument {
            command: "ext".into(),
            source: Some(f.to_string()),
            target: Some(g.to_string()),
            max_degree: Some(d),
            rational: Some(rational),
            method: Some(method.name().into()),
            ..QueryDocument::default()
        },
        grading: "ext".into(),
        degrees: degree_entries(&r.value),
        truncated_above: r.value.truncation().bound(),
        periodicity: r.periodicity.clone(),
        method: r.method.to_string(),
        warnings: r.warnings.clone(),
    };
    let title = format!("Ext^*({f}, {g}){}", if rational { " ⊗ Q" } else { "" });
    Ok(Output::ok(render_graded(&doc, &r.value, format, &title, "Ext", primary, rational)))
}

#[derive(Serialize)]
struct TableRow {
    n: usize,
    degrees: Vec<DegreeEntry>,
}

#[derive(Serialize)]
struct TableDocument {
    table: String,
    method: String,
    rows: Vec<TableRow>,
}

fn run_table(max_n: usize, primary: bool, format: Format) -> Result<Output, Failure> {
    if max_n < 1 {
        return Err(usage("--max-n must be at least 1"));
    }
    let opts = ExtOptions {
        method: Method::ChainLevel,
        ..ExtOptions::default()
    };
    let rows: Vec<GradedAbGroup> = (1..=max_n)
        .into_par_iter()
        .map(|n| ext(FunctorDescriptor::ab(), FunctorDescriptor::symmetric(n), opts).map(|r| r.value))
        .collect::<Result<_, _>>()?;
    let text = match format {
        Format::Json => json(&TableDocument {
            table: "ab-sym".into(),
            method: "chain-level".into(),
            rows: rows
                .iter()
                .enumerate()
                .map(|(i, g)| TableRow {
                    n: i + 1,
                    degrees: degree_entries(g),
                })
                .collect(),
        }),
        Format::Csv => {
            let mut out = String::from("n,i,rank,torsion\n");
            for (k, g) in rows.iter().enumerate() {
                for line in graded_csv(g).lines().skip(1) {
                    out.push_str(&format!("{},{line}\n", k + 1));
                }
            }
            out
        }
        Format::Text => table_text(&rows, primary),
    };
    Ok(Output::ok(text))
}

/// Rows `n`, columns `i`, trivial cells blank.
fn table_text(rows: &[GradedAbGroup], primary: bool) -> String {
    let top = rows.iter().filter_map(GradedAbGroup::max_degree).max().unwrap_or(0).max(0);
    let mut grid: Vec<Vec<String>> = vec![std::iter::once("n".to_string())
        .chain((0..=top).map(|i| format!("i={i}")))
        .collect()];
    for (k, g) in rows.iter().enumerate() {
        let mut row = vec![(k + 1).to_string()];
        for i in 0..=top {
            let c = g.get(i);
            row.push(if c.is_trivial() {
                String::new()
            } else {
                render::group_text(&c, primary, false)
            });
        }
        grid.push(row);
    }
    let widths: Vec<usize> = (0..grid[0].len())
        .map(|j| grid.iter().map(|r| r[j].chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::from("Ext^i(ab, S^n∘ab)\n");
    for r in &grid {
        let cells: Vec<String> = r
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect();
        out.push_str(cells.join(" | ").trim_end());
        out.push('\n');
    }
    out
}

#[derive(Serialize)]
struct StableTermDocument {
    shift: usize,
    space: String,
    coefficients: String,
    multiplicity: String,
    origin: Option<String>,
}

impl From<&StableTerm> for StableTermDocument {
    fn from(t: &StableTerm) -> Self {
        StableTermDocument {
            shift: t.shift,
            space: t.space.clone(),
            coefficients: t.coefficients.clone(),
            multiplicity: t.multiplicity.to_string(),
            origin: t.origin.clone(),
        }
    }
}

#[derive(Serialize)]
struct StableDocument {
    functor: String,
    mode: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    degrees: Option<Vec<DegreeEntry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    terms: Option<Vec<StableTermDocument>>,
    truncated_above: Option<i64>,
}

fn run_stable(f: FunctorDescriptor, mode: ModeArg, max_degree: Option<i64>, format: Format) -> Result<Output, Failure> {
    let d = degree_bound(max_degree)?;
    let mode = match mode {
        ModeArg::Rational => StableMode::Rational,
        ModeArg::Structural => StableMode::Structural,
    };
    let result = stable_cohomology(f, mode, d)?;
    let text = match (&result, format) {
        (StableResult::Rational(g), Format::Json) => json(&StableDocument {
            functor: f.to_string(),
            mode: "rational".into(),
            degrees: Some(degree_entries(g)),
            terms: None,
            truncated_above: g.truncation().bound(),
        }),
        (StableResult::Structural(ts), Format::Json) => json(&StableDocument {
            functor: f.to_string(),
            mode: "structural".into(),
            degrees: None,
            terms: Some(ts.iter().map(StableTermDocument::from).collect()),
            truncated_above: None,
        }),
        (StableResult::Rational(g), Format::Csv) => graded_csv(g),
        (StableResult::Structural(ts), Format::Csv) => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["shift", "space", "coefficients", "multiplicity", "origin"])
                .expect("in-memory write");
            for t in ts {
                w.write_record([
                    t.shift.to_string(),
                    t.space.clone(),
                    t.coefficients.clone(),
                    t.multiplicity.to_string(),
                    t.origin.clone().unwrap_or_default(),
                ])
                .expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("in-memory flush")).expect("UTF-8")
        }
        (StableResult::Rational(g), Format::Text) => {
            let mut lines = vec![format!("H^*_s(aut; {f} ⊗ Q):")];
            lines.extend(graded_text("H", g, false, true));
            lines.join("\n") + "\n"
        }
        (StableResult::Structural(ts), Format::Text) => {
            let mut lines = vec![format!("H^*_s(aut; {f}) ≅ ⊕ of:")];
            lines.extend(ts.iter().map(|t| format!("  {t}")));
            lines.join("\n") + "\n"
        }
    };
    Ok(Output::ok(text))
}

fn run_groupcoh(group: GroupArg, coeff: CoeffArg, max_degree: Option<i64>, primary: bool, format: Format) -> Result<Output, Failure> {
    let d = degree_bound(max_degree)?;
    let (g, name) = match group {
        GroupArg::S2 => (FiniteGroup::symmetric(2), "S2"),
        GroupArg::S3 => (FiniteGroup::symmetric(3), "S3"),
    };
    let (module, coeff_name) = match coeff {
        CoeffArg::Trivial => (GModule::trivial(&g, 1), "trivial"),
        CoeffArg::Sign => (GModule::sign(&g)?, "sign"),
    };
    let value = group_cohomology(&module, d as usize);
    let doc = GradedDocument {
        query: QueryDocument {
            command: "groupcoh".into(),
            group: Some(name.into()),
            coefficients: Some(coeff_name.into()),
            max_degree: Some(d),
            ..QueryDocument::default()
        },
        grading: "cohomology".into(),
        degrees: degree_entries(&value),
        truncated_above: value.truncation().bound(),
        periodicity: None,
        method: "bar-resolution".into(),
        warnings: Vec::new(),
    };
    let coeff_label = if coeff_name == "sign" { "Z[-1]" } else { "Z" };
    let title = format!("H^*({name}; {coeff_label})");
    Ok(Output::ok(render_graded(&doc, &value, format, &title, "H", primary, false)))
}

#[derive(Serialize)]
struct CheckEntry {
    source: String,
    target: String,
    status: String,
    compared_through: Option<i64>,
    detail: Option<String>,
}

fn check_entry(f: FunctorDescriptor, g: FunctorDescriptor, r: &Result<CrossCheckReport, Error>) -> CheckEntry {
    let (status, compared_through, detail) = match r {
        Ok(rep) => ("agree", rep.compared_through, None),
        Err(e @ Error::MethodMismatch { .. }) => ("mismatch", None, Some(e.to_string())),
        Err(e) => ("error", None, Some(e.to_string())),
    };
    CheckEntry {
        source: f.to_string(),
        target: g.to_string(),
        status: status.into(),
        compared_through,
        detail,
    }
}

fn run_check(
    all: bool,
    source: Option<FunctorDescriptor>,
    target: Option<FunctorDescriptor>,
    max_degree: Option<i64>,
    format: Format,
) -> Result<Output, Failure> {
    let d = degree_bound(max_degree)?;
    let pairs = match (all, source, target) {
        (true, _, _) => cross_check_suite(),
        (false, Some(f), Some(g)) => vec![(f, g)],
        _ => return Err(usage("check needs either --all or a pair of functors")),
    };
    let results: Vec<Result<CrossCheckReport, Error>> = pairs.par_iter().map(|&(f, g)| cross_check(f, g, d)).collect();
    if !all {
        // A single pair reports its error directly, with the matching exit code.
        if let Err(e) = &results[0] {
            if !matches!(e, Error::MethodMismatch { .. }) {
                return Err(e.clone().into());
            }
        }
    }
    let entries: Vec<CheckEntry> = pairs
        .iter()
        .zip(&results)
        .map(|(&(f, g), r)| check_entry(f, g, r))
        .collect();
    let code = if results.iter().any(|r| matches!(r, Err(Error::MethodMismatch { .. }))) {
        EXIT_MISMATCH
    } else if results.iter().any(Result::is_err) {
        EXIT_UNSUPPORTED
    } else {
        EXIT_OK
    };
    let text = match format {
        Format::Json => json(&entries),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["source", "target", "status", "compared_through", "detail"])
                .expect("in-memory write");
            for e in &entries {
                w.write_record([
                    e.source.clone(),
                    e.target.clone(),
                    e.status.clone(),
                    e.compared_through.map(|d| d.to_string()).unwrap_or_default(),
                    e.detail.clone().unwrap_or_default(),
                ])
                .expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("in-memory flush")).expect("UTF-8")
        }
        Format::Text => {
            let mut lines: Vec<String> = entries
                .iter()
                .map(|e| {
                    let pair = format!("Ext({}, {})", e.source, e.target);
                    match (e.status.as_str(), e.compared_through) {
                        ("agree", Some(b)) => format!("ok        {pair}: agree through degree {b}"),
                        ("agree", None) => format!("ok        {pair}: agree in every degree"),
                        ("mismatch", _) => format!("MISMATCH  {pair}: {}", e.detail.as_deref().unwrap_or("")),
                        _ => format!("ERROR     {pair}: {}", e.detail.as_deref().unwrap_or("")),
                    }
                })
                .collect();
            let bad = entries.iter().filter(|e| e.status != "agree").count();
            lines.push(format!("{} pairs checked, {bad} failed", entries.len()));
            lines.join("\n") + "\n"
        }
    };
    Ok(Output { text, code })
}

fn dispatch(cli: Cli) -> Result<Output, Failure> {
    let format = cli.format;
    match cli.command {
        Command::Ext {
            source,
            target,
            rational,
            max_degree,
            method,
            primary,
        } => run_ext(source, target, rational, max_degree, method, primary, format),
        Command::Table {
            name: TableName::AbSym,
            max_n,
            primary,
        } => run_table(max_n, primary, format),
        Command::Stable {
            functor,
            mode,
            max_degree,
        } => run_stable(functor, mode, max_degree, format),
        Command::Groupcoh {
            group,
            coeff,
            max_degree,
            primary,
        } => run_groupcoh(group, coeff, max_degree, primary, format),
        Command::Check {
            all,
            source,
            target,
            max_degree,
        } => run_check(all, source, target, max_degree, format),
    }
}

/// Runs the command line `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{text}");
                EXIT_USAGE
            } else {
                // --help and --version.
                let _ = write!(stdout, "{text}");
                EXIT_OK
            };
        }
    };
    let out = cli.out.clone();
    match dispatch(cli) {
        Ok(o) => {
            let written = match &out {
                Some(path) => std::fs::write(path, &o.text).map_err(|e| format!("cannot write {}: {e}", path.display())),
                None => stdout.write_all(o.text.as_bytes()).map_err(|e| e.to_string()),
            };
            match written {
                Ok(()) => o.code,
                Err(msg) => {
                    let _ = writeln!(stderr, "error: {msg}");
                    EXIT_USAGE
                }
            }
        }
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}
