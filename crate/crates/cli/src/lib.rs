//! Command-line front end: read or generate a graph, run the curvature
//! pipeline and the verifiers, and emit JSON reports or DOT drawings.

pub mod dot;
pub mod report;

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use equicurv::corpus::{run_corpus, summarize, CorpusConfig, CorpusSummary};
use equicurv::curvature::INVARIANCE_SAMPLES;
use equicurv::graph::{apsp, generate, parse_edge_list, DistanceMatrix};
use equicurv::theorems::{run_battery, spectral_gap};
use equicurv::{curvature_from_distances, CurvatureResult, CurvatureStatus, FamilySpec, Graph, TheoremId};
use serde::{Deserialize, Serialize};

pub use report::{AnalysisReport, CurvatureSection, Exact, GraphMeta, SCHEMA_VERSION};

/// Exit status for a run whose verifiers found a failing inequality.
pub const EXIT_THEOREM_FAILURE: i32 = 3;
/// Exit status of `compute` when only a pseudo-inverse answer exists.
pub const EXIT_INCONSISTENT: i32 = 2;

const FAMILY_HELP: &str = "\
Family specs are written name:arg1,arg2,... :
  complete:N  cycle:N  path:N  hypercube:N  cocktail_party:N
  johnson:N,K  demicube:N  multipartite:A,B,...  knight:ROWS,COLS
  erdos_renyi:N,P,SEED

Edge lists hold one \"u v\" pair per line, 0-indexed; '#' starts a comment.

Exit status: 0 success, 1 error, 2 compute found no exact solution,
3 a verifier failed.";

#[derive(Debug, Parser)]
#[command(name = "equicurv", version, about = "Equilibrium-measure curvature of graphs", after_help = FAMILY_HELP)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct Source {
    /// Read the graph from an edge-list file.
    #[arg(long, value_name = "PATH")]
    pub edge_list: Option<PathBuf>,
    /// Generate the graph from a family spec, e.g. `johnson:4,2`.
    #[arg(long, value_name = "SPEC", value_parser = parse_family)]
    pub family: Option<FamilySpec>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve for the curvature and print a JSON report.
    Compute {
        #[command(flatten)]
        source: Source,
        /// Write the report here instead of standard output.
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Run the theorem verifiers on one graph.
    Verify {
        #[command(flatten)]
        source: Source,
        /// Comma-separated verifier names, or `all`.
        #[arg(long, default_value = "all", value_parser = parse_theorems)]
        theorems: TheoremList,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Draws for the total-curvature invariance check.
        #[arg(long, default_value_t = INVARIANCE_SAMPLES)]
        invariance_samples: usize,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Run every verifier over seeded random connected graphs.
    Corpus {
        #[arg(long, default_value_t = 500)]
        count: usize,
        /// Vertex-count range `a..b`, both ends included.
        #[arg(long, default_value = "5..40", value_parser = parse_range)]
        n_range: (usize, usize),
        /// Fixed edge probability; drawn per graph when omitted.
        #[arg(long)]
        p: Option<f64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = INVARIANCE_SAMPLES)]
        invariance_samples: usize,
        /// Emit one JSON line per graph before the summary line.
        #[arg(long)]
        json_lines: bool,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Write a Graphviz file with vertices colored by curvature.
    ExportDot {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone)]
pub struct TheoremList(pub Vec<TheoremId>);

fn parse_family(s: &str) -> Result<FamilySpec, String> {
    s.parse().map_err(|e: equicurv::GraphError| e.to_string())
}

fn parse_theorems(s: &str) -> Result<TheoremList, String> {
    if s.trim().eq_ignore_ascii_case("all") {
        return Ok(TheoremList(TheoremId::ALL.to_vec()));
    }
    let ids = s.split(',').filter(|t| !t.trim().is_empty()).map(str::parse).collect::<Result<Vec<_>, _>>()?;
    if ids.is_empty() {
        return Err("no verifier named".into());
    }
    Ok(TheoremList(ids))
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once("..").ok_or_else(|| format!("expected a..b, got {:?}", s))?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let num = |x: &str| x.trim().parse::<usize>().map_err(|e| format!("{:?}: {}", x, e));
    let (a, b) = (num(a)?, num(b)?);
    if a > b {
        return Err(format!("empty range {}..{}", a, b));
    }
    Ok((a, b))
}

/// A loaded graph with its distance matrix.
pub struct Loaded {
    pub source: String,
    pub graph: Graph,
    pub distances: DistanceMatrix,
}

pub fn load(source: &Source) -> Result<Loaded> {
    let (label, graph) = match (&source.edge_list, &source.family) {
        (Some(path), _) => {
            let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            let g = parse_edge_list(&text).with_context(|| format!("parsing {}", path.display()))?;
            (format!("edge-list:{}", path.display()), g)
        }
        (None, Some(spec)) => (format!("family:{}", spec), generate(spec)?),
        (None, None) => bail!("pass --edge-list or --family"),
    };
    let distances = apsp(&graph)?;
    Ok(Loaded { source: label, graph, distances })
}

fn analyze(loaded: &Loaded) -> Result<CurvatureResult> {
    Ok(curvature_from_distances(&loaded.distances)?)
}

fn meta(loaded: &Loaded) -> GraphMeta {
    GraphMeta::new(loaded.source.clone(), loaded.graph.edge_count(), &loaded.distances)
}

pub fn compute(source: &Source) -> Result<AnalysisReport> {
    let loaded = load(source)?;
    let r = analyze(&loaded)?;
    let s = spectral_gap(&loaded.graph, &loaded.distances)?;
    Ok(AnalysisReport::new(meta(&loaded), &r, Some(s), Vec::new(), 0))
}

pub fn verify(source: &Source, theorems: &[TheoremId], seed: u64, invariance_samples: usize) -> Result<AnalysisReport> {
    let loaded = load(source)?;
    let r = analyze(&loaded)?;
    let s = spectral_gap(&loaded.graph, &loaded.distances)?;
    let reports = run_battery(&loaded.distances, &r, &s, seed, invariance_samples, theorems)?;
    Ok(AnalysisReport::new(meta(&loaded), &r, Some(s), reports, seed))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorpusReport {
    pub schema_version: String,
    pub tool_version: String,
    pub config: CorpusConfig,
    pub summary: CorpusSummary,
}

/// Corpus output text and whether any verifier failed.
pub fn corpus(cfg: &CorpusConfig, json_lines: bool) -> Result<(String, bool)> {
    let records = run_corpus(cfg)?;
    let summary = summarize(&records);
    let failed = summary.total_failures > 0;
    let report = CorpusReport {
        schema_version: SCHEMA_VERSION.into(),
        tool_version: env!("CARGO_PKG_VERSION").into(),
        config: cfg.clone(),
        summary,
    };
    let mut out = String::new();
    if json_lines {
        for rec in &records {
            out.push_str(&serde_json::to_string(rec)?);
            out.push('\n');
        }
        out.push_str(&serde_json::to_string(&report)?);
    } else {
        out.push_str(&serde_json::to_string_pretty(&report)?);
    }
    out.push('\n');
    Ok((out, failed))
}

pub fn export_dot(source: &Source) -> Result<String> {
    let loaded = load(source)?;
    let r = analyze(&loaded)?;
    Ok(dot::to_dot(&loaded.graph, &r, &loaded.source))
}

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{}", text);
            Ok(())
        }
    }
}

fn pretty(report: &AnalysisReport) -> Result<String> {
    Ok(serde_json::to_string_pretty(report)? + "\n")
}

/// Runs one command and returns the process exit status.
pub fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Compute { source, out } => {
            let report = compute(&source)?;
            emit(&pretty(&report)?, out.as_deref())?;
            Ok(if report.curvature.status == CurvatureStatus::Inconsistent { EXIT_INCONSISTENT } else { 0 })
        }
        Command::Verify { source, theorems, seed, invariance_samples, out } => {
            let report = verify(&source, &theorems.0, seed, invariance_samples)?;
            emit(&pretty(&report)?, out.as_deref())?;
            Ok(if report.failures > 0 { EXIT_THEOREM_FAILURE } else { 0 })
        }
        Command::Corpus { count, n_range, p, seed, invariance_samples, json_lines, out } => {
            let cfg = CorpusConfig { count, n_min: n_range.0, n_max: n_range.1, p, seed, invariance_samples };
            let (text, failed) = corpus(&cfg, json_lines)?;
            emit(&text, out.as_deref())?;
            Ok(if failed { EXIT_THEOREM_FAILURE } else { 0 })
        }
        Command::ExportDot { source, out } => {
            emit(&export_dot(&source)?, out.as_deref())?;
            Ok(0)
        }
    }
}
