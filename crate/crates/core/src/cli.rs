//! Command-line front end: `bounds`, `compare`, `member`, `verify`.
//!
//! Exit status is 0 on success, 1 when a run finds violations, 2 on usage
//! or input errors.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use malachite_base::num::basic::traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bounds::{
    bound_table, compare_improvement, thm1_bound, thm2_bound, BoundError, BoundParams, BoundRow, Formula,
    FormulaInputs,
};
use crate::classes::{PhiFamily, SchwarzSpec};
use crate::membership::{make_member, ClassKind, ClassSpec, MemberWitness, MembershipError, OperatorParams};
use crate::scalar::{
    format_rational, parse_rational, rational_to_f64, serde_rational, Backend, ExactComplex, FloatComplex, Rational,
    Scalar, ScalarValue,
};
use crate::verify::{run_suite, SuiteConfig, SuiteError, SuiteReport, VerifyError};

pub const SCHEMA_VERSION: u32 = 1;
pub const DEFAULT_MEMBER_ORDER: usize = 16;
pub const DEFAULT_N_MAX: usize = 12;

#[derive(Parser, Debug)]
#[command(name = "schlicht", version, about = "Coefficient bounds for subordination classes of analytic functions")]
pub struct Cli {
    /// Output encoding.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Seed for randomized verification.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Truncation order N; for `bounds`/`compare` it is the largest n when `--n` is absent.
    #[arg(long, global = true)]
    pub order: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Tabulate bound formulas over a range of n.
    Bounds(BoundsArgs),
    /// Compare the Janowski corollary bounds with the earlier theorems.
    Compare(CompareArgs),
    /// Construct a class member from two Schwarz witnesses and dump its coefficients.
    Member(MemberArgs),
    /// Run randomized bound verification from flags or a config file.
    Verify(VerifyArgs),
}

fn rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

/// Inclusive index range written `a..b`, `a..=b`, or a single `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IndexRange {
    pub start: usize,
    pub end: usize,
}

impl FromStr for IndexRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let (a, b) = match t.split_once("..") {
            Some((a, b)) => (a, b.strip_prefix('=').unwrap_or(b)),
            None => (t, t),
        };
        let parse = |x: &str| x.trim().parse::<usize>().map_err(|_| format!("bad index range `{t}`"));
        let (start, end) = (parse(a)?, parse(b)?);
        if start < 2 || end < start {
            return Err(format!("index range `{t}` must satisfy 2 <= start <= end"));
        }
        Ok(IndexRange { start, end })
    }
}

#[derive(Args, Debug)]
pub struct BoundsArgs {
    /// Formula ids, comma separated: thm1, thm2, cor_qk, cor_c, cor_cs, libera, cor1, cor2, thmA, thmB, lemma3, lemma4.
    #[arg(long, required = true, value_delimiter = ',')]
    pub formula: Vec<String>,
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    pub lambda: Option<Rational>,
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    pub delta: Option<Rational>,
    /// |φ'(0)|.
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    pub phi1: Option<Rational>,
    /// |ψ'(0)|.
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    pub psi1: Option<Rational>,
    /// Janowski A.
    #[arg(long = "A", value_parser = rational_arg, allow_hyphen_values = true)]
    pub a: Option<Rational>,
    /// Janowski B.
    #[arg(long = "B", value_parser = rational_arg, allow_hyphen_values = true)]
    pub b: Option<Rational>,
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    pub alpha: Option<Rational>,
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    pub beta: Option<Rational>,
    /// Index range such as `2..8`.
    #[arg(long)]
    pub n: Option<IndexRange>,
}

#[derive(Args, Debug)]
pub struct CompareArgs {
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true, default_value = "0")]
    pub lambda: Rational,
    #[arg(long = "A", value_parser = rational_arg, allow_hyphen_values = true)]
    pub a: Rational,
    #[arg(long = "B", value_parser = rational_arg, allow_hyphen_values = true)]
    pub b: Rational,
    #[arg(long)]
    pub n: Option<IndexRange>,
}

#[derive(Args, Debug)]
pub struct ClassArgs {
    /// Class: K or S.
    #[arg(long = "class")]
    pub kind: ClassKind,
    #[arg(long, value_parser = rational_arg, default_value = "0")]
    pub lambda: Rational,
    #[arg(long, value_parser = rational_arg, default_value = "0")]
    pub delta: Rational,
    /// `halfplane`, `janowski:A,B`, `alpha:a`, or `series:c0,c1,...`.
    #[arg(long, allow_hyphen_values = true)]
    pub phi: PhiFamily,
    #[arg(long, allow_hyphen_values = true)]
    pub psi: PhiFamily,
}

impl ClassArgs {
    fn spec(&self) -> Result<ClassSpec, MembershipError> {
        let params = OperatorParams::new(self.lambda.clone(), self.delta.clone())?;
        ClassSpec::new(self.kind, params, self.phi.clone(), self.psi.clone())
    }
}

#[derive(Args, Debug)]
pub struct MemberArgs {
    #[command(flatten)]
    pub class: ClassArgs,
    /// Witness of the auxiliary function: `zero`, `identity`, `monomial:m`, `rotation:θ`, `blaschke:re,im`.
    #[arg(long, default_value = "identity", allow_hyphen_values = true)]
    pub wg: SchwarzSpec,
    /// Witness of the subordinate quotient.
    #[arg(long, default_value = "identity", allow_hyphen_values = true)]
    pub wq: SchwarzSpec,
    /// `exact` falls back to floating point only for irrational rotations.
    #[arg(long, value_enum, default_value_t = BackendArg::Exact)]
    pub backend: BackendArg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BackendArg {
    Exact,
    Float,
}

impl From<BackendArg> for Backend {
    fn from(b: BackendArg) -> Self {
        match b {
            BackendArg::Exact => Backend::Exact,
            BackendArg::Float => Backend::Float,
        }
    }
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// TOML config; flags given alongside override its values.
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long = "class", requires_all = ["phi", "psi"])]
    pub kind: Option<ClassKind>,
    #[arg(long, value_parser = rational_arg)]
    pub lambda: Option<Rational>,
    #[arg(long, value_parser = rational_arg)]
    pub delta: Option<Rational>,
    #[arg(long, allow_hyphen_values = true)]
    pub phi: Option<PhiFamily>,
    #[arg(long, allow_hyphen_values = true)]
    pub psi: Option<PhiFamily>,
    #[arg(long)]
    pub samples: Option<usize>,
    #[arg(long, value_enum)]
    pub backend: Option<BackendArg>,
    #[arg(long)]
    pub tolerance: Option<f64>,
    /// Include the built-in class specs even when a class is given.
    #[arg(long)]
    pub presets: bool,
    /// Skip the exact identity and improvement checks.
    #[arg(long)]
    pub skip_identities: bool,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Bound(#[from] BoundError),
    #[error(transparent)]
    Membership(#[from] MembershipError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
    #[error(transparent)]
    Suite(#[from] SuiteError),
    #[error("config {path}: {source}")]
    Config { path: String, source: toml::de::Error },
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("csv output: {0}")]
    Csv(#[from] csv::Error),
    #[error("json output: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    fn io(path: &Path, source: io::Error) -> Self {
        CliError::Io { path: path.display().to_string(), source }
    }
}

/// Whether a command's findings are clean.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Clean,
    Violations,
}

/// Every JSON document the tool writes.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub schema_version: u32,
    #[serde(flatten)]
    pub body: RecordBody,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "record", content = "data", rename_all = "snake_case")]
pub enum RecordBody {
    Bounds(BoundTable),
    Comparison(Comparison),
    Member(MemberDump),
    Verification(SuiteReport),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundTable {
    pub formulas: Vec<String>,
    pub rows: Vec<BoundRow>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Comparison {
    #[serde(with = "serde_rational")]
    pub lambda: Rational,
    #[serde(with = "serde_rational")]
    pub a: Rational,
    #[serde(with = "serde_rational")]
    pub b: Rational,
    pub improved: bool,
    pub rows: Vec<BoundRow>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MemberDump {
    pub spec: ClassSpec,
    pub order: usize,
    pub backend: Backend,
    pub witness_g: SchwarzSpec,
    pub witness_quotient: SchwarzSpec,
    /// Bound formula used for the ratio column, if the families admit one.
    pub theorem: Option<String>,
    pub rows: Vec<MemberRow>,
}

/// Coefficients at index `n`: `a_n` of `f`, `b_n` of `g`, `c_n` of the quotient.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MemberRow {
    pub n: usize,
    pub a: ScalarValue,
    pub b: ScalarValue,
    pub c: ScalarValue,
    #[serde(with = "serde_rational::option")]
    pub bound: Option<Rational>,
    pub ratio: Option<f64>,
}

/// Parses `args` (program name first), runs the command, and returns the
/// process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&cli) {
        Ok(Status::Clean) => 0,
        Ok(Status::Violations) => 1,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

pub fn execute(cli: &Cli) -> Result<Status, CliError> {
    let (record, status) = match &cli.command {
        Command::Bounds(args) => (cmd_bounds(cli, args)?, Status::Clean),
        Command::Compare(args) => {
            let cmp = cmd_compare(cli, args)?;
            let status = if cmp.improved { Status::Clean } else { Status::Violations };
            (RecordBody::Comparison(cmp), status)
        }
        Command::Member(args) => (RecordBody::Member(cmd_member(cli, args)?), Status::Clean),
        Command::Verify(args) => {
            let report = cmd_verify(cli, args)?;
            let status = if report.passed() { Status::Clean } else { Status::Violations };
            (RecordBody::Verification(report), status)
        }
    };
    let record = OutputRecord { schema_version: SCHEMA_VERSION, body: record };
    match &cli.out {
        Some(path) => {
            let file = File::create(path).map_err(|e| CliError::io(path, e))?;
            let mut w = io::BufWriter::new(file);
            write_record(&record, cli.format, &mut w)?;
            w.flush().map_err(|e| CliError::io(path, e))?;
        }
        None => {
            let stdout = io::stdout();
            let mut w = stdout.lock();
            write_record(&record, cli.format, &mut w)?;
        }
    }
    Ok(status)
}

fn index_range(cli: &Cli, n: Option<IndexRange>) -> IndexRange {
    n.unwrap_or(IndexRange { start: 2, end: cli.order.unwrap_or(DEFAULT_N_MAX).max(2) })
}

fn cmd_bounds(cli: &Cli, args: &BoundsArgs) -> Result<RecordBody, CliError> {
    let formulas = args.formula.iter().map(|f| f.parse::<Formula>()).collect::<Result<Vec<_>, _>>()?;
    let inputs = FormulaInputs {
        lambda: args.lambda.clone().unwrap_or(Rational::ZERO),
        delta: args.delta.clone().unwrap_or(Rational::ZERO),
        phi1: args.phi1.clone(),
        psi1: args.psi1.clone(),
        a: args.a.clone(),
        b: args.b.clone(),
        alpha: args.alpha.clone(),
        beta: args.beta.clone(),
    };
    let range = index_range(cli, args.n);
    let rows = bound_table(&formulas, &inputs, range.start..=range.end)?;
    Ok(RecordBody::Bounds(BoundTable { formulas: formulas.iter().map(|f| f.id().to_string()).collect(), rows }))
}

fn cmd_compare(cli: &Cli, args: &CompareArgs) -> Result<Comparison, CliError> {
    let range = index_range(cli, args.n);
    let (rows, improved) = match compare_improvement(&args.lambda, &args.a, &args.b, range.end) {
        Ok(rows) => (rows.into_iter().filter(|r| r.n >= range.start).collect(), true),
        Err(BoundError::NotImproved { n, detail }) => {
            eprintln!("not an improvement at n = {n}: {detail}");
            (Vec::new(), false)
        }
        Err(e) => return Err(e.into()),
    };
    Ok(Comparison { lambda: args.lambda.clone(), a: args.a.clone(), b: args.b.clone(), improved, rows })
}

fn cmd_member(cli: &Cli, args: &MemberArgs) -> Result<MemberDump, CliError> {
    let spec = args.class.spec()?;
    let order = cli.order.unwrap_or(DEFAULT_MEMBER_ORDER);
    let exact = Backend::from(args.backend) == Backend::Exact && args.wg.is_exact() && args.wq.is_exact();
    if exact {
        member_dump::<ExactComplex>(&spec, &args.wg, &args.wq, order)
    } else {
        member_dump::<FloatComplex>(&spec, &args.wg, &args.wq, order)
    }
}

fn member_dump<S: Scalar>(
    spec: &ClassSpec,
    wg: &SchwarzSpec,
    wq: &SchwarzSpec,
    order: usize,
) -> Result<MemberDump, CliError> {
    let m: MemberWitness<S> = make_member(spec, wg, wq, order)?;
    let (theorem, params) = match BoundParams::from_spec(spec) {
        Ok(p) => (Some(if spec.kind == ClassKind::K { "thm1" } else { "thm2" }.to_string()), Some(p)),
        Err(_) => (None, None),
    };
    let mut rows = Vec::with_capacity(order);
    for n in 1..=order {
        let bound = match (&params, n >= 2) {
            (Some(p), true) => Some(match spec.kind {
                ClassKind::K => thm1_bound(p, n)?,
                ClassKind::S => thm2_bound(p, n)?,
            }),
            _ => None,
        };
        let a = m.f.coeff(n);
        let ratio = bound.as_ref().filter(|b| **b != 0u32).map(|b| a.to_float().norm() / rational_to_f64(b));
        rows.push(MemberRow {
            n,
            a: ScalarValue::of(&a),
            b: ScalarValue::of(&m.g.series.coeff(n)),
            c: ScalarValue::of(&m.quotient.coeff(n)),
            bound,
            ratio,
        });
    }
    Ok(MemberDump {
        spec: spec.clone(),
        order,
        backend: S::BACKEND,
        witness_g: wg.clone(),
        witness_quotient: wq.clone(),
        theorem,
        rows,
    })
}

fn load_config(path: &Path) -> Result<SuiteConfig, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    toml::from_str(&text).map_err(|source| CliError::Config { path: path.display().to_string(), source })
}

fn cmd_verify(cli: &Cli, args: &VerifyArgs) -> Result<SuiteReport, CliError> {
    let mut cfg = match &args.config {
        Some(path) => load_config(path)?,
        None => SuiteConfig { presets: args.kind.is_none() || args.presets, ..SuiteConfig::default() },
    };
    if let Some(kind) = args.kind {
        cfg.kind = Some(kind);
        cfg.lambda = Some(args.lambda.clone().unwrap_or(Rational::ZERO));
        cfg.delta = Some(args.delta.clone().unwrap_or(Rational::ZERO));
        cfg.phi = args.phi.clone();
        cfg.psi = args.psi.clone();
        if args.presets {
            cfg.presets = true;
        }
    }
    if let Some(seed) = cli.seed {
        cfg.seed = seed;
    }
    if let Some(order) = cli.order {
        cfg.order = order;
    }
    if let Some(samples) = args.samples {
        cfg.samples = samples;
    }
    if let Some(backend) = args.backend {
        cfg.backend = backend.into();
    }
    if let Some(tolerance) = args.tolerance {
        cfg.tolerance = tolerance;
    }
    if args.skip_identities {
        cfg.identities = false;
    }
    Ok(run_suite(&cfg)?)
}

pub fn write_record<W: Write>(record: &OutputRecord, format: Format, w: &mut W) -> Result<(), CliError> {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *w, record)?;
            writeln!(w).map_err(|e| CliError::Json(serde_json::Error::io(e)))?;
        }
        Format::Csv => write_csv(record, w)?,
    }
    Ok(())
}

fn opt_rational(q: &Option<Rational>) -> String {
    q.as_ref().map(format_rational).unwrap_or_default()
}

fn opt_float(x: Option<f64>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

fn write_csv<W: Write>(record: &OutputRecord, w: &mut W) -> Result<(), CliError> {
    let mut out = csv::Writer::from_writer(w);
    match &record.body {
        RecordBody::Bounds(table) => {
            let mut header = vec!["n".to_string()];
            header.extend(table.formulas.iter().cloned());
            out.write_record(&header)?;
            for row in &table.rows {
                let mut fields = vec![row.n.to_string()];
                fields.extend(table.formulas.iter().map(|f| row.values.get(f).map(format_rational).unwrap_or_default()));
                out.write_record(&fields)?;
            }
        }
        RecordBody::Comparison(cmp) => {
            let cols = ["cor1", "cor2", "thmA", "thmB", "ratio_A", "ratio_B"];
            out.write_record(std::iter::once("n").chain(cols))?;
            for row in &cmp.rows {
                let mut fields = vec![row.n.to_string()];
                fields.extend(cols.iter().map(|c| row.values.get(*c).map(format_rational).unwrap_or_default()));
                out.write_record(&fields)?;
            }
        }
        RecordBody::Member(dump) => {
            out.write_record(["n", "a_re", "a_im", "b_re", "b_im", "c_re", "c_im", "bound", "ratio"])?;
            for row in &dump.rows {
                let (a_re, a_im) = row.a.text_parts();
                let (b_re, b_im) = row.b.text_parts();
                let (c_re, c_im) = row.c.text_parts();
                out.write_record([
                    row.n.to_string(),
                    a_re,
                    a_im,
                    b_re,
                    b_im,
                    c_re,
                    c_im,
                    opt_rational(&row.bound),
                    opt_float(row.ratio),
                ])?;
            }
        }
        RecordBody::Verification(report) => {
            out.write_record([
                "run",
                "kind",
                "lambda",
                "delta",
                "phi",
                "psi",
                "theorem",
                "n",
                "bound",
                "worst_ratio",
                "worst_exact_ratio_squared",
                "worst_sample",
                "worst_g",
                "worst_quotient",
                "violations",
            ])?;
            for (i, run) in report.runs.iter().enumerate() {
                for s in &run.per_n {
                    out.write_record([
                        i.to_string(),
                        run.spec.kind.to_string(),
                        format_rational(&run.spec.params.lambda),
                        format_rational(&run.spec.params.delta),
                        run.spec.phi.to_string(),
                        run.spec.psi.to_string(),
                        run.theorem.clone(),
                        s.n.to_string(),
                        format_rational(&s.bound),
                        s.worst_ratio.to_string(),
                        opt_rational(&s.worst_exact_ratio_squared),
                        s.worst_sample.to_string(),
                        s.worst_witness.g.to_string(),
                        s.worst_witness.quotient.to_string(),
                        run.violations.len().to_string(),
                    ])?;
                }
            }
        }
    }
    out.flush().map_err(|e| CliError::Csv(e.into()))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    fn parse(args: &[&str]) -> Cli {
        Cli::try_parse_from(std::iter::once("schlicht").chain(args.iter().copied())).unwrap()
    }

    fn json_of(cli: &Cli) -> OutputRecord {
        let body = match &cli.command {
            Command::Bounds(a) => cmd_bounds(cli, a).unwrap(),
            Command::Compare(a) => RecordBody::Comparison(cmd_compare(cli, a).unwrap()),
            Command::Member(a) => RecordBody::Member(cmd_member(cli, a).unwrap()),
            Command::Verify(a) => RecordBody::Verification(cmd_verify(cli, a).unwrap()),
        };
        OutputRecord { schema_version: SCHEMA_VERSION, body }
    }

    fn round_trip(record: &OutputRecord) {
        let text = serde_json::to_string(record).unwrap();
        let back: OutputRecord = serde_json::from_str(&text).unwrap();
        assert_eq!(&back, record);
    }

    #[test]
    fn index_ranges() {
        assert_eq!("2..6".parse::<IndexRange>().unwrap(), IndexRange { start: 2, end: 6 });
        assert_eq!("3..=3".parse::<IndexRange>().unwrap(), IndexRange { start: 3, end: 3 });
        assert_eq!("5".parse::<IndexRange>().unwrap(), IndexRange { start: 5, end: 5 });
        assert!("1..4".parse::<IndexRange>().is_err());
        assert!("6..2".parse::<IndexRange>().is_err());
    }

    #[test]
    fn convex_column_equals_n() {
        let cli = parse(&["bounds", "--formula", "cor1", "--lambda", "0", "--A", "1", "--B", "-1", "--n", "2..6"]);
        let record = json_of(&cli);
        let RecordBody::Bounds(table) = &record.body else { panic!("wrong record") };
        for row in &table.rows {
            assert_eq!(row.values["cor1"], int(row.n as i64));
        }
        round_trip(&record);
    }

    #[test]
    fn thm2_column_is_n_times_thm1() {
        let cli = parse(&[
            "bounds", "--formula", "thm1,thm2", "--lambda", "1/2", "--delta", "1/4", "--phi1", "2", "--psi1", "2",
            "--n", "2..8",
        ]);
        let RecordBody::Bounds(table) = json_of(&cli).body else { panic!("wrong record") };
        assert_eq!(table.rows.len(), 7);
        for row in &table.rows {
            assert_eq!(row.values["thm2"], int(row.n as i64) * &row.values["thm1"]);
        }
    }

    #[test]
    fn decimals_and_unknown_formulas_are_usage_errors() {
        assert!(Cli::try_parse_from(["schlicht", "bounds", "--formula", "cor1", "--lambda", "0.5"]).is_err());
        let cli = parse(&["bounds", "--formula", "nope"]);
        let Command::Bounds(a) = &cli.command else { unreachable!() };
        assert!(matches!(cmd_bounds(&cli, a), Err(CliError::Bound(BoundError::UnknownFormula(_)))));
    }

    #[test]
    fn compare_rows_and_csv_agree() {
        let cli = parse(&["compare", "--lambda", "0", "--A", "1", "--B", "0", "--n", "2..5"]);
        let record = json_of(&cli);
        let RecordBody::Comparison(cmp) = &record.body else { panic!("wrong record") };
        assert!(cmp.improved);
        assert_eq!(cmp.rows.last().unwrap().values["cor1"], int(3));
        assert_eq!(cmp.rows.last().unwrap().values["thmA"], int(5));
        let mut buf = Vec::new();
        write_record(&record, Format::Csv, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().next().unwrap(), "n,cor1,cor2,thmA,thmB,ratio_A,ratio_B");
        assert_eq!(text.lines().last().unwrap(), "5,3/1,15/1,5/1,25/1,3/5,3/5");
        round_trip(&record);
    }

    #[test]
    fn member_dump_for_extremal_convex() {
        let cli = parse(&[
            "--order", "8", "member", "--class", "K", "--phi", "halfplane", "--psi", "halfplane",
        ]);
        let record = json_of(&cli);
        let RecordBody::Member(dump) = &record.body else { panic!("wrong record") };
        assert_eq!(dump.backend, Backend::Exact);
        for row in dump.rows.iter().skip(1) {
            assert_eq!(row.a, ScalarValue::Exact { re: int(row.n as i64), im: Rational::ZERO });
            assert_eq!(row.ratio, Some(1.0));
        }
        round_trip(&record);
    }

    #[test]
    fn irrational_rotation_switches_to_float() {
        let cli = parse(&[
            "--order", "6", "member", "--class", "S", "--lambda", "1/2", "--phi", "janowski:1/2,-1/2", "--psi",
            "alpha:1/3", "--wg", "rotation:1", "--wq", "blaschke:1/4,-1/8",
        ]);
        let RecordBody::Member(dump) = json_of(&cli).body else { panic!("wrong record") };
        assert_eq!(dump.backend, Backend::Float);
        assert!(dump.rows.iter().filter_map(|r| r.ratio).all(|r| r <= 1.0 + 1e-9));
    }

    #[test]
    fn verify_from_flags() {
        let cli = parse(&[
            "--seed", "3", "--order", "8", "verify", "--class", "S", "--lambda", "1/3", "--phi", "halfplane", "--psi",
            "alpha:1/2", "--samples", "20", "--skip-identities",
        ]);
        let record = json_of(&cli);
        let RecordBody::Verification(report) = &record.body else { panic!("wrong record") };
        assert_eq!(report.runs.len(), 1);
        assert_eq!(report.runs[0].seed, 3);
        assert!(report.passed());
        assert!(report.identities.is_none());
        round_trip(&record);
        let mut buf = Vec::new();
        write_record(&record, Format::Csv, &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap().lines().count(), 1 + 7);
    }

    #[test]
    fn csv_and_json_carry_the_same_bounds() {
        let cli = parse(&["bounds", "--formula", "libera,cor_qk", "--alpha", "1/2", "--beta", "1/3", "--phi1", "2",
            "--psi1", "2", "--n", "2..4"]);
        let record = json_of(&cli);
        let mut buf = Vec::new();
        write_record(&record, Format::Csv, &mut buf).unwrap();
        let mut reader = csv::Reader::from_reader(buf.as_slice());
        let RecordBody::Bounds(table) = &record.body else { panic!("wrong record") };
        for (row, rec) in table.rows.iter().zip(reader.records()) {
            let rec = rec.unwrap();
            assert_eq!(rec[0].parse::<usize>().unwrap(), row.n);
            assert_eq!(parse_rational(&rec[1]).unwrap(), row.values["libera"]);
            assert_eq!(parse_rational(&rec[2]).unwrap(), row.values["cor_qk"]);
        }
        assert_eq!(table.rows[0].values["cor_qk"], Rational::from(1u32));
        assert_eq!(table.rows[0].values["libera"], rat(7, 6));
    }
}
