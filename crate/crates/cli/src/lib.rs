//! Command-line driver: load a semigroup, run suites, write reports and
//! Graphviz files.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use regsemi::biorder::BiorderedSet;
use regsemi::corpus;
use regsemi::cxn::{build_gamma_s, CxnError, Side};
use regsemi::cxn_from_ind::{build_gamma_g, ClassPoset};
use regsemi::dot;
use regsemi::inductive::{InductiveGroupoid, OrderedGroupoid};
use regsemi::pipeline::{roundtrip, run_suites, PipelineError, Suite, SuiteRun};
use regsemi::report::Report;
use regsemi::{FiniteSemigroup, SemigroupError};

#[derive(Debug, Parser)]
#[command(name = "regsemi", version, about = "Regular semigroups, inductive groupoids and cross-connections")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print sizes of the semigroup and the structures built from it.
    Analyze {
        #[command(flatten)]
        source: Source,
        /// Also write the counts as JSON.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run verification suites; exit 1 if any check fails.
    Verify {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        checks: Checks,
        /// Also write the report as JSON.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Rebuild the semigroup from its inductive groupoid and from its
    /// cross-connection and compare.
    Roundtrip {
        #[command(flatten)]
        source: Source,
        /// Also write the report as JSON.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write a Graphviz description of one structure.
    ExportDot {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = Structure::Biorder)]
        structure: Structure,
        /// Write the DOT text here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the selected suites over every built-in semigroup.
    Corpus {
        #[command(flatten)]
        checks: Checks,
        /// Also write every report as one JSON array.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct Source {
    /// Built-in semigroup: SL2, RB22, B2, T2, I2 or T3.
    #[arg(long, conflicts_with = "input")]
    pub corpus: Option<String>,
    /// JSON file describing a semigroup.
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Cayley)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct Checks {
    /// Suites to run (comma separated or repeated); all when omitted.
    #[arg(long, value_delimiter = ',')]
    pub suite: Vec<Suite>,
    /// Longest chain (in vertices) fed to the evaluation checks.
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u16).range(1..))]
    pub max_chain_length: u16,
}

impl Checks {
    fn suites(&self) -> Vec<Suite> {
        if self.suite.is_empty() {
            Suite::ALL.to_vec()
        } else {
            let mut v = self.suite.clone();
            v.sort();
            v.dedup();
            v
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// `{"name", "order", "table"}` with a 0-based row-major table.
    Cayley,
    /// `{"name", "degree", "generators"}` with 0-based images.
    Transformations,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Structure {
    Biorder,
    Groupoid,
    LeftClasses,
    RightClasses,
    LeftIdeals,
    RightIdeals,
    LeftClassCategory,
    RightClassCategory,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("cannot write {path}: {source}")]
    Write { path: PathBuf, source: std::io::Error },
    #[error("{path}: line {line}, column {column}: {message}")]
    Parse { path: PathBuf, line: usize, column: usize, message: String },
    #[error("{path}: {source}")]
    Semigroup { path: String, source: SemigroupError },
    #[error("unknown corpus member {0:?}; expected one of {names}", names = corpus::NAMES.join(", "))]
    UnknownCorpus(String),
    #[error("one of --corpus or --input is required")]
    NoSource,
    #[error(transparent)]
    Pipeline(#[from] PipelineError),
    #[error(transparent)]
    Cxn(#[from] CxnError),
    #[error("output: {0}")]
    Output(#[from] std::io::Error),
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Output(e.into())
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CayleyFile {
    #[serde(default)]
    name: Option<String>,
    order: usize,
    table: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TransformationFile {
    #[serde(default)]
    name: Option<String>,
    degree: usize,
    generators: Vec<Vec<usize>>,
}

fn default_name(path: &Path) -> String {
    path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| "S".into())
}

pub fn parse_semigroup(path: &Path, format: Format) -> Result<FiniteSemigroup, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Read { path: path.into(), source })?;
    let parse_err = |e: serde_json::Error| CliError::Parse { path: path.into(), line: e.line(), column: e.column(), message: e.to_string() };
    let wrap = |source| CliError::Semigroup { path: path.display().to_string(), source };
    match format {
        Format::Cayley => {
            let doc: CayleyFile = serde_json::from_str(&text).map_err(parse_err)?;
            if doc.order != doc.table.len() {
                return Err(wrap(SemigroupError::OrderMismatch { declared: doc.order, rows: doc.table.len() }));
            }
            FiniteSemigroup::from_cayley(doc.table, doc.name.unwrap_or_else(|| default_name(path))).map_err(wrap)
        }
        Format::Transformations => {
            let doc: TransformationFile = serde_json::from_str(&text).map_err(parse_err)?;
            FiniteSemigroup::from_generators(doc.degree, &doc.generators, doc.name.unwrap_or_else(|| default_name(path)))
                .map_err(wrap)
        }
    }
}

pub fn load(source: &Source) -> Result<FiniteSemigroup, CliError> {
    match (&source.corpus, &source.input) {
        (Some(name), _) => corpus::by_name(name).ok_or_else(|| CliError::UnknownCorpus(name.clone())),
        (None, Some(path)) => parse_semigroup(path, source.format),
        (None, None) => Err(CliError::NoSource),
    }
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Write { path: path.into(), source })
}

fn write_json<T: Serialize>(out: &Option<PathBuf>, value: &T) -> Result<(), CliError> {
    if let Some(path) = out {
        write_file(path, &(serde_json::to_string_pretty(value)? + "\n"))?;
    }
    Ok(())
}

#[derive(Serialize)]
struct Analysis {
    semigroup: String,
    counts: std::collections::BTreeMap<String, usize>,
}

fn analyze(s: &FiniteSemigroup) -> Result<Analysis, CliError> {
    let mut counts = std::collections::BTreeMap::new();
    let green = s.green();
    counts.insert("elements".to_string(), s.order());
    counts.insert("idempotents".to_string(), s.idempotents().len());
    counts.insert("l_classes".to_string(), green.l_classes().len());
    counts.insert("r_classes".to_string(), green.r_classes().len());
    counts.insert("h_classes".to_string(), green.h_classes().len());
    counts.insert("d_classes".to_string(), green.d_classes().len());
    let regular = s.is_regular();
    counts.insert("regular".to_string(), regular as usize);
    if regular {
        let e = BiorderedSet::from_semigroup(s).map_err(PipelineError::from)?;
        counts.insert("biorder_domain".to_string(), e.domain_size());
        counts.insert("singular_squares".to_string(), e.singular_squares().len());
        let g = InductiveGroupoid::build(s).map_err(PipelineError::from)?;
        counts.insert("groupoid_morphisms".to_string(), g.morphism_count());
        let sc = build_gamma_s(s)?;
        counts.insert("left_ideal_objects".to_string(), sc.left.category.object_count());
        counts.insert("left_ideal_morphisms".to_string(), sc.left.category.morphism_count());
        counts.insert("right_ideal_objects".to_string(), sc.right.category.object_count());
        counts.insert("right_ideal_morphisms".to_string(), sc.right.category.morphism_count());
        counts.insert("paired_objects".to_string(), sc.cxn.e_gamma.len());
    }
    Ok(Analysis { semigroup: s.name().to_string(), counts })
}

fn export(s: &FiniteSemigroup, structure: Structure) -> Result<String, CliError> {
    let e = || BiorderedSet::from_semigroup(s).map_err(PipelineError::from);
    let g = || InductiveGroupoid::build(s).map_err(PipelineError::from);
    Ok(match structure {
        Structure::Biorder => dot::biorder_dot(&e()?),
        Structure::Groupoid => dot::groupoid_dot(&g()?),
        Structure::LeftClasses => dot::poset_dot(&ClassPoset::from_biorder(&e()?, Side::Left)),
        Structure::RightClasses => dot::poset_dot(&ClassPoset::from_biorder(&e()?, Side::Right)),
        Structure::LeftIdeals => dot::category_dot(&build_gamma_s(s)?.left.category),
        Structure::RightIdeals => dot::category_dot(&build_gamma_s(s)?.right.category),
        Structure::LeftClassCategory => dot::category_dot(&build_gamma_g(&g()?)?.left.category),
        Structure::RightClassCategory => dot::category_dot(&build_gamma_g(&g()?)?.right.category),
    })
}

fn summary(run: &SuiteRun) -> String {
    let total = run.report.records.len();
    let failed = run.report.failures().count();
    let cases: usize = run.report.records.iter().map(|r| r.instances).sum();
    let status = if failed == 0 { "PASS" } else { "FAIL" };
    format!("{status} {}: {total} checks, {cases} cases, {failed} failed", run.semigroup)
}

/// Runs one command, writing human-readable output to `stdout`.
/// `Ok(false)` means some check failed.
pub fn run(cli: Cli, stdout: &mut dyn Write) -> Result<bool, CliError> {
    match cli.command {
        Command::Analyze { source, out } => {
            let s = load(&source)?;
            let a = analyze(&s)?;
            writeln!(stdout, "{}", a.semigroup)?;
            for (k, v) in &a.counts {
                writeln!(stdout, "  {k}: {v}")?;
            }
            write_json(&out, &a)?;
            Ok(true)
        }
        Command::Verify { source, checks, out } => {
            let s = load(&source)?;
            let run = run_suites(&s, &checks.suites(), checks.max_chain_length as usize)?;
            write!(stdout, "{}", run.report)?;
            writeln!(stdout, "{}", summary(&run))?;
            write_json(&out, &run)?;
            Ok(run.passed())
        }
        Command::Roundtrip { source, out } => {
            let s = load(&source)?;
            let report: Report = roundtrip(&s)?;
            write!(stdout, "{report}")?;
            write_json(&out, &report)?;
            Ok(report.passed())
        }
        Command::ExportDot { source, structure, out } => {
            let s = load(&source)?;
            let text = export(&s, structure)?;
            match out {
                Some(path) => write_file(&path, &text)?,
                None => write!(stdout, "{text}")?,
            }
            Ok(true)
        }
        Command::Corpus { checks, out } => {
            let suites = checks.suites();
            let max_len = checks.max_chain_length as usize;
            let runs: Vec<Result<SuiteRun, PipelineError>> =
                corpus::NAMES.par_iter().map(|n| run_suites(&corpus::by_name(n).expect("built-in"), &suites, max_len)).collect();
            let runs: Vec<SuiteRun> = runs.into_iter().collect::<Result<_, _>>()?;
            for r in &runs {
                for f in r.report.failures() {
                    writeln!(stdout, "  {}/{}: {}", f.suite, f.check, f.witness.as_deref().unwrap_or(""))?;
                }
                writeln!(stdout, "{}", summary(r))?;
            }
            write_json(&out, &runs)?;
            Ok(runs.iter().all(SuiteRun::passed))
        }
    }
}
