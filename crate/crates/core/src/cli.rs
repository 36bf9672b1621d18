//! Command-line front end.
//!
//! Exit codes: 0 success, 2 usage error, 3 data error, 4 numeric-domain
//! error such as a constant response. JSON output wraps every result as
//! `{command, config, result}` so a run can be reproduced from its output.
//!
//! Structural bases look for exact functional dependence and are meant for
//! deterministic or administrative data; on sampled data raise `--eps`.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::association::{self, AssociationReport, WeightScheme};
use crate::basis::{self, BasisConfig, TieBreak};
use crate::dataset::{Dataset, MissingPolicy};
use crate::equivalence::{self, EquivalenceReport};
use crate::error::{Error, Result};
use crate::fixtures::{self, Fixture};
use crate::predict::{self, SplitConfig};
use crate::report::{self, fmt4};
use crate::resample::{self, BootstrapConfig};
use crate::scalar::Scalar;
use crate::selection::{self, SelectionConfig, SelectionTrace};
use crate::simgen::{self, FluSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Missing {
    /// Drop records with an empty cell.
    Drop,
    /// Treat empty cells as their own category.
    Category,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Scheme {
    Gk,
    Ew,
    Ipw,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TieOrder {
    Lowest,
    Highest,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Stat {
    Retention,
    Tau,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Model {
    Flu,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct InputArgs {
    /// CSV file whose first row holds the variable names.
    #[arg(long, conflicts_with = "fixture")]
    pub input: Option<PathBuf>,
    /// Bundled fixture to analyse instead of a file (see `fixtures`).
    #[arg(long)]
    pub fixture: Option<String>,
    #[arg(long, value_enum, default_value_t = Missing::Drop)]
    pub missing: Missing,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct WeightArgs {
    #[arg(long, value_enum, default_value_t = Scheme::Gk)]
    pub weights: Scheme,
    /// File of nonnegative weights, one per response category in domain order.
    #[arg(long)]
    pub custom_weights: Option<PathBuf>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct PairArgs {
    /// Explanatory variables; several form a composite.
    #[arg(long, value_delimiter = ',', required = true)]
    pub x: Vec<String>,
    #[arg(long)]
    pub y: String,
}

#[derive(Debug, Clone, Subcommand, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    /// Association matrix γ(Y|X).
    Matrix {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        pair: PairArgs,
    },
    /// Association vector Θ(Y|X).
    Vector {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        pair: PairArgs,
    },
    /// Weighted association degree τ_α(Y|X).
    Tau {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        pair: PairArgs,
        #[command(flatten)]
        weights: WeightArgs,
    },
    /// Equivalence levels of two variables, or of every pair.
    Equiv {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, requires = "x2")]
        x1: Option<String>,
        #[arg(long, requires = "x1")]
        x2: Option<String>,
        #[arg(long)]
        y: String,
        #[command(flatten)]
        weights: WeightArgs,
        #[arg(long, env = "CATASSOC_TOL", default_value_t = equivalence::DEFAULT_TOL)]
        tol: f64,
        /// Use exact rational arithmetic.
        #[arg(long)]
        exact: bool,
    },
    /// Forward-backward α-association basis of a response.
    Select {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long = "y", alias = "response")]
        y: String,
        /// Candidate variables (default: every other column).
        #[arg(long, value_delimiter = ',')]
        candidates: Option<Vec<String>>,
        #[command(flatten)]
        weights: WeightArgs,
        #[arg(long = "eps", env = "CATASSOC_EPS_GAIN", default_value_t = selection::DEFAULT_EPS_GAIN)]
        eps_gain: f64,
        #[arg(long)]
        domain_cap: Option<usize>,
    },
    /// Structural basis of all (or the listed) variables.
    Basis {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_delimiter = ',')]
        vars: Option<Vec<String>>,
        #[arg(long, env = "CATASSOC_BASIS_EPS", default_value_t = basis::DEFAULT_EPS)]
        eps: f64,
        /// Also run the exhaustive smallest-basis search (at most 20 variables).
        #[arg(long)]
        minimal: bool,
        #[arg(long, value_enum, default_value_t = TieOrder::Lowest)]
        tie_break: TieOrder,
        #[arg(long)]
        domain_cap: Option<usize>,
        /// Seed for the random subsets checked during verification.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Train/test check that γ is the expected confusion matrix.
    Validate {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, default_value_t = 0.8)]
        train: f64,
        #[arg(long)]
        seed: u64,
        /// Split within each response category.
        #[arg(long)]
        stratify: bool,
    },
    /// Stratified bootstrap of τ or of a retention ratio.
    Bootstrap {
        #[command(flatten)]
        input: InputArgs,
        /// Simulate this many flu records when no input is given.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_enum, default_value_t = Stat::Retention)]
        stat: Stat,
        #[arg(long = "B", default_value_t = 1000)]
        replicates: usize,
        #[arg(long, default_value_t = 0.95)]
        level: f64,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value = "Y")]
        y: String,
        #[arg(long, value_delimiter = ',', default_value = "X1,X2")]
        subset: Vec<String>,
        /// Reference set of the retention ratio (default: every other column).
        #[arg(long, value_delimiter = ',')]
        full: Option<Vec<String>>,
        /// Stratification variable (default: the response).
        #[arg(long)]
        strata: Option<String>,
        #[command(flatten)]
        weights: WeightArgs,
    },
    /// Generate a simulated dataset as CSV.
    Simulate {
        #[arg(value_enum)]
        model: Model,
        #[arg(long, default_value_t = 100_000)]
        n: usize,
        #[arg(long)]
        seed: u64,
        /// Extra independent binary columns.
        #[arg(long, default_value_t = 0)]
        irrelevant: usize,
    },
    /// List bundled fixtures or export one as CSV.
    Fixtures {
        #[arg(long)]
        name: Option<String>,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Matrix { .. } => "matrix",
            Command::Vector { .. } => "vector",
            Command::Tau { .. } => "tau",
            Command::Equiv { .. } => "equiv",
            Command::Select { .. } => "select",
            Command::Basis { .. } => "basis",
            Command::Validate { .. } => "validate",
            Command::Bootstrap { .. } => "bootstrap",
            Command::Simulate { .. } => "simulate",
            Command::Fixtures { .. } => "fixtures",
        }
    }
}

#[derive(Debug, Clone, Parser, Serialize)]
#[command(name = "catassoc", version, about = "Proportional association analysis of categorical data")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the output here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
}

/// A result in every output format it supports.
struct Rendered {
    text: String,
    json: Value,
    csv: Option<String>,
}

/// Parses `args` (program name first), runs the command and returns the
/// process exit code. Diagnostics go to `stderr` as one line.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{e}");
                    0
                }
                _ => {
                    let _ = write!(stderr, "{e}");
                    2
                }
            };
            return code;
        }
    };
    match execute(&cli, stdout) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(cli: &Cli, stdout: &mut dyn Write) -> Result<()> {
    let output = match cli.threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::InvalidParameter(e.to_string()))?
            .install(|| dispatch(cli))?,
        None => dispatch(cli)?,
    };
    match &cli.out {
        Some(path) => {
            std::fs::write(path, &output.body)?;
            if let Some(note) = &output.note {
                stdout.write_all(note.as_bytes())?;
            }
        }
        None => stdout.write_all(output.body.as_bytes())?,
    }
    Ok(())
}

/// Main output plus an optional console note shown when the body goes to `--out`.
struct Output {
    body: String,
    note: Option<String>,
}

fn dispatch(cli: &Cli) -> Result<Output> {
    if let Some(data) = data_command(cli)? {
        return Ok(data);
    }
    let rendered = match &cli.command {
        Command::Matrix { input, pair } => matrix(&load(input)?, pair)?,
        Command::Vector { input, pair } => vector(&load(input)?, pair)?,
        Command::Tau { input, pair, weights } => tau(&load(input)?, pair, weights)?,
        Command::Equiv {
            input,
            x1,
            x2,
            y,
            weights,
            tol,
            exact,
        } => equiv(&load(input)?, x1.as_deref().zip(x2.as_deref()), y, weights, *tol, *exact)?,
        Command::Select {
            input,
            y,
            candidates,
            weights,
            eps_gain,
            domain_cap,
        } => select(&load(input)?, y, candidates.as_deref(), weights, *eps_gain, *domain_cap)?,
        Command::Basis {
            input,
            vars,
            eps,
            minimal,
            tie_break,
            domain_cap,
            seed,
        } => {
            let ds = load(input)?;
            let ds = match vars {
                Some(v) => ds.project(v)?,
                None => ds,
            };
            let config = BasisConfig {
                eps: nonnegative("eps", *eps)?,
                tie_break: match tie_break {
                    TieOrder::Lowest => TieBreak::LowestIndex,
                    TieOrder::Highest => TieBreak::HighestIndex,
                },
                domain_cap: *domain_cap,
                seed: *seed,
                ..BasisConfig::default()
            };
            basis_cmd(&ds, &config, *minimal)?
        }
        Command::Validate {
            input,
            pair,
            train,
            seed,
            stratify,
        } => {
            let cfg = SplitConfig {
                train_frac: *train,
                seed: *seed,
                stratify: *stratify,
            };
            validate(&load(input)?, pair, &cfg)?
        }
        Command::Bootstrap { .. } => bootstrap(cli)?,
        Command::Simulate { .. } | Command::Fixtures { .. } => unreachable!("handled as data commands"),
    };
    let body = match cli.format {
        Format::Text => rendered.text,
        Format::Json => report::to_json(&json!({
            "command": cli.command.name(),
            "config": cli,
            "result": rendered.json,
        }))?,
        Format::Csv => rendered.csv.ok_or_else(|| {
            Error::InvalidParameter(format!("`{}` has no CSV output", cli.command.name()))
        })?,
    };
    Ok(Output { body, note: None })
}

/// Commands whose main artifact is a CSV file.
fn data_command(cli: &Cli) -> Result<Option<Output>> {
    let (csv, summary) = match &cli.command {
        Command::Simulate {
            model: Model::Flu,
            n,
            seed,
            irrelevant,
        } => {
            let spec = FluSpec::default().with_irrelevant(*irrelevant);
            let ds = simgen::gen_flu_with(&spec, *n, *seed)?;
            (ds.to_csv_string()?, json!({ "records": ds.n_records(), "columns": ds.names() }))
        }
        Command::Fixtures { name: None } => {
            let list: Vec<Value> = fixtures::paper_fixtures()
                .iter()
                .map(|(name, f)| json!({ "name": name, "kind": fixture_kind(f) }))
                .collect();
            let text: String = list
                .iter()
                .map(|v| format!("{}\t{}\n", v["name"].as_str().unwrap(), v["kind"].as_str().unwrap()))
                .collect();
            let body = match cli.format {
                Format::Json => report::to_json(&json!({ "command": "fixtures", "config": cli, "result": list }))?,
                _ => text,
            };
            return Ok(Some(Output { body, note: None }));
        }
        Command::Fixtures { name: Some(name) } => {
            let f = fixtures::fixture(name)?;
            let csv = match &f {
                Fixture::Matrix { labels, rows } => report::matrix_csv("t", labels, labels, rows)?,
                other => other.dataset().expect("record fixture").to_csv_string()?,
            };
            (csv, json!({ "name": name, "kind": fixture_kind(&f) }))
        }
        _ => return Ok(None),
    };
    let note = match &cli.out {
        None => None,
        Some(path) => Some(match cli.format {
            Format::Json => report::to_json(&json!({
                "command": cli.command.name(),
                "config": cli,
                "result": summary,
            }))?,
            _ => format!("wrote {}\n", path.display()),
        }),
    };
    Ok(Some(Output { body: csv, note }))
}

fn fixture_kind(f: &Fixture) -> &'static str {
    match f {
        Fixture::Dataset(_) => "dataset",
        Fixture::Table(_) => "table",
        Fixture::Matrix { .. } => "matrix",
    }
}

fn load(input: &InputArgs) -> Result<Dataset> {
    let policy = match input.missing {
        Missing::Drop => MissingPolicy::DropRow,
        Missing::Category => MissingPolicy::AsCategory,
    };
    match (&input.input, &input.fixture) {
        (Some(path), _) => Dataset::read_csv(path, policy),
        (None, Some(name)) => fixtures::fixture(name)?
            .dataset()
            .ok_or_else(|| Error::InvalidParameter(format!("fixture `{name}` has no records"))),
        (None, None) => Err(Error::InvalidParameter("one of --input or --fixture is required".into())),
    }
}

fn nonnegative(name: &str, v: f64) -> Result<f64> {
    if v >= 0.0 {
        Ok(v)
    } else {
        Err(Error::InvalidParameter(format!("{name} must be nonnegative")))
    }
}

fn scheme<T: Scalar>(w: &WeightArgs) -> Result<WeightScheme<T>> {
    if let Some(path) = &w.custom_weights {
        let text = std::fs::read_to_string(path)?;
        let values = text
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.parse::<f64>()
                    .map(T::from_f64)
                    .map_err(|_| Error::InvalidWeights(format!("`{s}` is not a number")))
            })
            .collect::<Result<Vec<T>>>()?;
        return Ok(WeightScheme::Custom(values));
    }
    Ok(match w.weights {
        Scheme::Gk => WeightScheme::Gk,
        Scheme::Ew => WeightScheme::Equal,
        Scheme::Ipw => WeightScheme::InverseProbability,
    })
}

fn joint(ds: &Dataset, pair: &PairArgs) -> Result<crate::JointDistribution<f64>> {
    if pair.x.contains(&pair.y) {
        return Err(Error::Overlap(pair.y.clone()));
    }
    ds.contingency(&pair.x, &pair.y)?.to_joint::<f64>()
}

fn matrix(ds: &Dataset, pair: &PairArgs) -> Result<Rendered> {
    let j = joint(ds, pair)?;
    let g = association::association_matrix(&j)?;
    let labels = g.y_domain.clone();
    Ok(Rendered {
        text: report::matrix_text(&pair.y, &labels, &labels, &g.gamma),
        csv: Some(report::matrix_csv(&pair.y, &labels, &labels, &g.gamma)?),
        json: serde_json::to_value(&g)?,
    })
}

fn vector(ds: &Dataset, pair: &PairArgs) -> Result<Rendered> {
    let j = joint(ds, pair)?;
    let theta = association::association_vector(&j)?;
    let rows = vec![theta.theta.clone()];
    let label = vec!["theta".to_string()];
    Ok(Rendered {
        text: report::matrix_text(&pair.y, &label, &theta.y_domain, &rows),
        csv: Some(report::matrix_csv(&pair.y, &label, &theta.y_domain, &rows)?),
        json: serde_json::to_value(&theta)?,
    })
}

fn tau(ds: &Dataset, pair: &PairArgs, weights: &WeightArgs) -> Result<Rendered> {
    let j = joint(ds, pair)?;
    let scheme = scheme::<f64>(weights)?;
    let report = AssociationReport::compute(pair.x.join("+"), &pair.y, &j, std::slice::from_ref(&scheme))?;
    let value = report.tau_by_scheme[scheme.name()];
    Ok(Rendered {
        text: format!("tau_{}({} | {}) = {}\n", scheme.name(), pair.y, report.x, fmt4(value)),
        csv: Some(format!("x,y,weights,tau\n{},{},{},{value}\n", report.x, pair.y, scheme.name())),
        json: serde_json::to_value(&report)?,
    })
}

fn equiv(
    ds: &Dataset,
    pair: Option<(&str, &str)>,
    y: &str,
    weights: &WeightArgs,
    tol: f64,
    exact: bool,
) -> Result<Rendered> {
    let tol = nonnegative("tol", tol)?;
    let pairs: Vec<(String, String)> = match pair {
        Some((a, b)) => vec![(a.to_string(), b.to_string())],
        None => {
            let names: Vec<&str> = ds.names().into_iter().filter(|&n| n != y).collect();
            let mut v = Vec::new();
            for (i, a) in names.iter().enumerate() {
                for b in &names[i + 1..] {
                    v.push((a.to_string(), b.to_string()));
                }
            }
            v
        }
    };
    let mut reports: Vec<(EquivalenceReport, bool)> = Vec::new();
    for (a, b) in &pairs {
        let r = if exact {
            let t = BigRational::from_f64(tol);
            (
                equivalence::equivalence_levels(ds, a, b, y, &scheme::<BigRational>(weights)?, t.clone())?,
                equivalence::e2prime(ds, a, b, t)?,
            )
        } else {
            (
                equivalence::equivalence_levels(ds, a, b, y, &scheme::<f64>(weights)?, tol)?,
                equivalence::e2prime(ds, a, b, tol)?,
            )
        };
        reports.push(r);
    }
    let mark = |b: bool| if b { "yes" } else { "no" }.to_string();
    let header: Vec<String> = ["x1", "x2", "E-1", "E-2", "E-2'", "E-3", "E-4", "E-5", "strongest"]
        .map(String::from)
        .to_vec();
    let rows: Vec<Vec<String>> = reports
        .iter()
        .map(|(r, e2p)| {
            let mut row = vec![r.pair[0].clone(), r.pair[1].clone(), mark(r.e1), mark(r.e2), mark(*e2p)];
            row.extend([r.e3, r.e4, r.e5].map(mark));
            row.push(r.strongest.map_or("none".into(), |s| format!("E-{s}")));
            row
        })
        .collect();
    let csv = std::iter::once(header.join(","))
        .chain(rows.iter().map(|r| r.join(",")))
        .map(|l| l + "\n")
        .collect();
    let json: Vec<Value> = reports
        .iter()
        .map(|(r, e2p)| {
            let mut v = serde_json::to_value(r).expect("serialisable");
            v["e2prime"] = json!(e2p);
            v
        })
        .collect();
    Ok(Rendered {
        text: report::text_table(&header, &rows),
        json: Value::Array(json),
        csv: Some(csv),
    })
}

fn trace_csv(trace: &SelectionTrace) -> String {
    let mut s = String::from("step,variable,value,domain_size\n");
    for (i, step) in trace.steps.iter().enumerate() {
        s.push_str(&format!("{},{},{},{}\n", i + 1, step.variable, step.value, step.domain_size));
    }
    s
}

fn select(
    ds: &Dataset,
    y: &str,
    candidates: Option<&[String]>,
    weights: &WeightArgs,
    eps_gain: f64,
    domain_cap: Option<usize>,
) -> Result<Rendered> {
    let ds = match candidates {
        Some(c) => {
            let mut keep = c.to_vec();
            if !keep.iter().any(|v| v == y) {
                keep.push(y.to_string());
            }
            ds.project(&keep)?
        }
        None => ds.clone(),
    };
    let config = SelectionConfig {
        eps_gain: nonnegative("eps", eps_gain)?,
        domain_cap,
    };
    let trace = selection::select_basis(&ds, y, &scheme::<f64>(weights)?, &config)?;
    Ok(Rendered {
        text: report::trace_text(&trace),
        csv: Some(trace_csv(&trace)),
        json: serde_json::to_value(&trace)?,
    })
}

fn basis_cmd(ds: &Dataset, config: &BasisConfig, minimal: bool) -> Result<Rendered> {
    let trace = basis::structural_basis(ds, config)?;
    let verification = basis::verify_basis(ds, &trace.basis, config)?;
    let smallest = if minimal {
        Some(basis::minimal_structural_basis(ds, config.eps)?)
    } else {
        None
    };
    let mut text = report::trace_text(&trace);
    text.push_str(&format!(
        "verified: {} (determines all: {}, subsets: {}/{}, zero-one: {}, minimal: {})\n",
        verification.passed(),
        verification.determines_all,
        if verification.subsets_determined { verification.subsets_checked } else { 0 },
        verification.subsets_checked,
        verification.zero_one,
        verification.minimal,
    ));
    if let Some(s) = &smallest {
        text.push_str(&format!("smallest basis: {}\n", s.join(", ")));
    }
    let mut json = serde_json::to_value(&trace)?;
    json["verification"] = serde_json::to_value(&verification)?;
    json["smallest"] = json!(smallest);
    Ok(Rendered {
        text,
        csv: Some(trace_csv(&trace)),
        json,
    })
}

fn validate(ds: &Dataset, pair: &PairArgs, cfg: &SplitConfig) -> Result<Rendered> {
    let r = predict::split_validate(ds, &pair.x, &pair.y, cfg)?;
    let labels = &r.test_confusion.labels;
    let mut text = report::side_by_side("train", "test", labels, &r.train_gamma.gamma, &r.test_confusion.normalized);
    text.push_str(&format!(
        "n_train: {}  n_test: {}  skipped_unseen: {}\nmax_abs_diff: {}\n",
        r.n_train,
        r.n_test,
        r.skipped_unseen,
        fmt4(r.max_abs_diff)
    ));
    let mut csv = String::from("matrix,true");
    for l in labels {
        csv.push_str(&format!(",{l}"));
    }
    csv.push('\n');
    for (name, m) in [("train_gamma", &r.train_gamma.gamma), ("test_confusion", &r.test_confusion.normalized)] {
        for (l, row) in labels.iter().zip(m) {
            csv.push_str(&format!("{name},{l}"));
            for v in row {
                csv.push_str(&format!(",{v}"));
            }
            csv.push('\n');
        }
    }
    Ok(Rendered {
        text,
        csv: Some(csv),
        json: serde_json::to_value(&r)?,
    })
}

fn bootstrap(cli: &Cli) -> Result<Rendered> {
    let Command::Bootstrap {
        input,
        n,
        stat,
        replicates,
        level,
        seed,
        y,
        subset,
        full,
        strata,
        weights,
    } = &cli.command
    else {
        unreachable!()
    };
    // one seed drives both the optional simulation and the resampling
    let mut seeder = ChaCha8Rng::seed_from_u64(*seed);
    let (data_seed, boot_seed) = (seeder.next_u64(), seeder.next_u64());
    let ds = match (n, &input.input, &input.fixture) {
        (Some(n), None, None) => simgen::gen_flu(*n, data_seed)?,
        (None, _, _) => load(input)?,
        (Some(_), _, _) => {
            return Err(Error::InvalidParameter("--n simulates data and cannot be combined with an input".into()))
        }
    };
    let full: Vec<String> = match full {
        Some(f) => f.clone(),
        None => ds.names().into_iter().filter(|v| v != y).map(String::from).collect(),
    };
    let scheme = scheme::<f64>(weights)?;
    let cfg = BootstrapConfig {
        replicates: *replicates,
        level: *level,
        seed: boot_seed,
    };
    let strata = strata.as_deref().unwrap_or(y);
    let result = match stat {
        Stat::Retention => resample::stratified_bootstrap(
            &ds,
            strata,
            |d| resample::retention_ratio(d, y, subset, &full, &scheme),
            &cfg,
        )?,
        Stat::Tau => resample::stratified_bootstrap(&ds, strata, |d| selection::tau_joint(d, y, subset, &scheme), &cfg)?,
    };
    let text = format!(
        "point: {}\nmean: {}\n{}% interval: ({}, {})\nreplicates: {}\n",
        fmt4(result.point),
        fmt4(result.mean),
        result.level * 100.0,
        fmt4(result.ci_low),
        fmt4(result.ci_high),
        result.replicates.len()
    );
    let csv = std::iter::once("replicate,value\n".to_string())
        .chain(result.replicates.iter().enumerate().map(|(i, v)| format!("{i},{v}\n")))
        .collect();
    let mut json = serde_json::to_value(&result)?;
    json["data_seed"] = json!(data_seed);
    json["bootstrap_seed"] = json!(boot_seed);
    json["records"] = json!(ds.n_records());
    Ok(Rendered { text, json, csv: Some(csv) })
}
