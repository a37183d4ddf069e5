use std::fs;
use std::io::Write;
use std::path::Path;

use exen_core::bounds::{self, resolve_filter, BoundError, Scope, Status, Subject, Subjects, Tolerances};
use exen_core::oracle::{
    identity_suite, run_sweep_with, IdentityConfig, OracleError, SweepConfig, SweepMode, SweepOptions, SweepSummary,
    EXHAUSTIVE_MAX_ORDER,
};
use exen_core::report::{slack_table_csv, to_json, InputDescriptor, ReportDocument};
use exen_core::{generators, parse_edge_list, parse_graph6, Graph, GraphAnalysis, LinalgError};
use serde::Serialize;
use thiserror::Error;

use crate::args::{Cli, Command, ComputeArgs, SweepArgs, SweepOutArgs};

/// Process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exit {
    Ok = 0,
    Violation = 1,
    Input = 2,
    Numeric = 3,
}

impl From<Exit> for std::process::ExitCode {
    fn from(e: Exit) -> Self {
        std::process::ExitCode::from(e as u8)
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("numeric failure: {0}")]
    Numeric(#[from] LinalgError),
}

impl CliError {
    pub fn exit_code(&self) -> Exit {
        match self {
            CliError::Input(_) | CliError::Io(_) => Exit::Input,
            CliError::Numeric(_) => Exit::Numeric,
        }
    }
}

impl From<BoundError> for CliError {
    fn from(e: BoundError) -> Self {
        match e {
            BoundError::Linalg(l) => CliError::Numeric(l),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        CliError::Input(e.to_string())
    }
}

pub fn run(cli: &Cli) -> Result<Exit, CliError> {
    let tol = tolerances(cli)?;
    match &cli.command {
        Command::Compute(args) => compute(args, &tol),
        Command::Verify(args) => verify(cli, args, &tol),
        Command::Sweep(args) => sweep(cli, args, &tol),
        Command::Catalog => catalog(cli.json),
        Command::Identities => identities(cli.seed),
    }
}

fn tolerances(cli: &Cli) -> Result<Tolerances, CliError> {
    for (name, v) in [("--tol-eq", cli.tol_eq), ("--tol-viol", cli.tol_viol)] {
        if !(v.is_finite() && v >= 0.0) {
            return Err(CliError::Input(format!("{name} must be a non-negative number, got {v}")));
        }
    }
    Ok(Tolerances { equality: cli.tol_eq, violation: cli.tol_viol })
}

fn print_stdout(text: &str) -> Result<(), CliError> {
    let mut out = std::io::stdout().lock();
    out.write_all(text.as_bytes())?;
    out.flush()?;
    Ok(())
}

fn print_json<T: Serialize>(value: &T) -> Result<(), CliError> {
    print_stdout(&to_json(value))
}

// ---------------------------------------------------------------------------
// compute

fn read_graph(args: &ComputeArgs) -> Result<(Graph, InputDescriptor), CliError> {
    let (g, kind, value) = if let Some(s) = &args.g6 {
        let g = parse_graph6(s).map_err(|e| CliError::Input(format!("graph6 {s:?}: {e}")))?;
        (g, "graph6", s.clone())
    } else if let Some(path) = &args.edgelist {
        let text =
            fs::read_to_string(path).map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
        let g = parse_edge_list(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        (g, "edgelist", path.display().to_string())
    } else if let Some(spec) = &args.family {
        let g = generators::from_spec(spec).map_err(|e| CliError::Input(format!("family {spec:?}: {e}")))?;
        (g, "family", spec.clone())
    } else {
        return Err(CliError::Input("one of --g6, --edgelist or --family is required".into()));
    };
    let descriptor = InputDescriptor { kind: kind.into(), value, graph6: Some(g.to_graph6()) };
    Ok((g, descriptor))
}

fn compute(args: &ComputeArgs, tol: &Tolerances) -> Result<Exit, CliError> {
    let (g, input) = read_graph(args)?;
    if let Some(v) = args.vertex {
        if v >= g.order() {
            return Err(CliError::Input(format!("vertex {v} out of range for a graph on {} vertices", g.order())));
        }
    }
    let ids = resolve_filter(&args.bounds)?;
    let analysis = GraphAnalysis::of(&g)?;
    let co = (!args.no_pairs).then(|| g.complement());
    let co_analysis = co.as_ref().map(GraphAnalysis::of).transpose()?;
    let subject = Subject::from_analysis(&g, &analysis);
    let subjects = match (&co, &co_analysis) {
        (Some(c), Some(a)) => Subjects::pair(subject, Subject::from_analysis(c, a)),
        _ => Subjects::single(subject),
    };
    let checks: Vec<_> = bounds::evaluate_all(&subjects, tol, |spec| ids.contains(&spec.id))
        .into_iter()
        .filter(|c| c.scope != Scope::PerVertex || args.vertex.is_none() || c.vertex == args.vertex)
        .collect();

    let violated = checks.iter().any(|c| c.status == Status::Violated);
    let mut doc = ReportDocument::new(input);
    doc.order = Some(g.order());
    doc.degree_profile = Some(analysis.profile.clone());
    doc.energy = Some(analysis.report.clone());
    doc.bound_checks = checks;
    print_stdout(&doc.to_json())?;
    Ok(if violated { Exit::Violation } else { Exit::Ok })
}

// ---------------------------------------------------------------------------
// verify / sweep

fn parse_orders(text: &str) -> Result<(usize, usize), CliError> {
    let bad = || CliError::Input(format!("--n expects N or A..B, got {text:?}"));
    let parse = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    match text.split_once("..") {
        Some((a, b)) => Ok((parse(a)?, parse(b.trim_start_matches('='))?)),
        None => {
            let n = parse(text)?;
            Ok((n, n))
        }
    }
}

fn sweep_config(cli: &Cli, args: &SweepArgs, tol: &Tolerances) -> Result<(SweepConfig, InputDescriptor), CliError> {
    let (mut cfg, input) = if let Some(path) = &args.corpus {
        let path = path.display().to_string();
        (SweepConfig::corpus(path.clone()), InputDescriptor { kind: "corpus".into(), value: path, graph6: None })
    } else if let Some(spec) = &args.family {
        let g = generators::from_spec(spec).map_err(|e| CliError::Input(format!("family {spec:?}: {e}")))?;
        let input = InputDescriptor { kind: "family".into(), value: spec.clone(), graph6: Some(g.to_graph6()) };
        (SweepConfig::family(spec.clone()), input)
    } else if let Some(n) = args.exhaustive {
        if n > EXHAUSTIVE_MAX_ORDER {
            return Err(CliError::Input(format!("--exhaustive accepts at most {EXHAUSTIVE_MAX_ORDER}")));
        }
        if n == EXHAUSTIVE_MAX_ORDER && !args.extended {
            return Err(CliError::Input(format!(
                "--exhaustive {n} enumerates 2,097,152 graphs on 7 vertices; pass --extended to run it"
            )));
        }
        let input = InputDescriptor { kind: "exhaustive".into(), value: format!("{}..={n}", args.n_min), graph6: None };
        (SweepConfig::exhaustive(args.n_min, n), input)
    } else {
        let orders = parse_orders(&args.n)?;
        let value = format!("n={} p={:?} samples={}", args.n, args.p, args.samples);
        let input = InputDescriptor { kind: "random".into(), value, graph6: None };
        (SweepConfig::random(orders, args.p.clone(), args.samples, cli.seed), input)
    };
    cfg.seed = cli.seed;
    cfg.bound_filter = resolve_filter(&args.bounds)?.into_iter().map(String::from).collect();
    cfg.complement_pairs = args.pairs;
    cfg.connected_only = args.connected_only;
    cfg.witness_limit = args.witness_limit;
    cfg.relabel_every = args.relabel_every;
    cfg.tolerances = *tol;
    Ok((cfg, input))
}

fn execute(cli: &Cli, args: &SweepArgs, tol: &Tolerances) -> Result<(SweepSummary, InputDescriptor), CliError> {
    let (cfg, input) = sweep_config(cli, args, tol)?;
    let report = |done: u64, total: u64| {
        eprintln!("exen: {done}/{total} graphs");
    };
    let show_progress = args.progress || (args.extended && cfg.mode == SweepMode::ExhaustiveLabeled);
    let opts = SweepOptions {
        threads: cli.threads,
        progress: show_progress.then_some(&report as &(dyn Fn(u64, u64) + Sync)),
        timing: args.timing,
    };
    let summary = run_sweep_with(&cfg, &opts)?;
    Ok((summary, input))
}

fn sweep_exit(summary: &SweepSummary) -> Exit {
    if !summary.failures.is_empty() || !summary.consistency.within_tolerance {
        Exit::Numeric
    } else if summary.violated_total > 0 || !summary.passed {
        Exit::Violation
    } else {
        Exit::Ok
    }
}

fn document(summary: SweepSummary, input: InputDescriptor) -> ReportDocument {
    let mut doc = ReportDocument::new(input);
    doc.sweep = Some(summary);
    doc
}

fn verify(cli: &Cli, args: &SweepArgs, tol: &Tolerances) -> Result<Exit, CliError> {
    let (summary, input) = execute(cli, args, tol)?;
    let exit = sweep_exit(&summary);
    print_stdout(&document(summary, input).to_json())?;
    Ok(exit)
}

fn sweep(cli: &Cli, args: &SweepOutArgs, tol: &Tolerances) -> Result<Exit, CliError> {
    let (summary, input) = execute(cli, &args.sweep, tol)?;
    let exit = sweep_exit(&summary);
    let csv = slack_table_csv(&summary);
    let doc = document(summary, input);
    let json = doc.to_json();
    write_outputs(&args.out, &json, &csv)?;
    if cli.json {
        print_stdout(&json)?;
    } else {
        let s = doc.sweep.as_ref().expect("sweep summary present");
        eprintln!("exen: {} graphs, {} violations, wrote {}", s.graphs_processed, s.violated_total, args.out.display());
    }
    Ok(exit)
}

fn write_outputs(dir: &Path, json: &str, csv: &str) -> Result<(), CliError> {
    fs::create_dir_all(dir)?;
    fs::write(dir.join("summary.json"), json)?;
    fs::write(dir.join("slacks.csv"), csv)?;
    Ok(())
}

// ---------------------------------------------------------------------------
// catalog / identities

#[derive(Serialize)]
struct CatalogEntry {
    id: &'static str,
    scope: Scope,
    direction: bounds::Direction,
    anchor: &'static str,
    statement: &'static str,
    precondition: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    equality_family: Option<&'static str>,
}

fn catalog(json: bool) -> Result<Exit, CliError> {
    let entries: Vec<CatalogEntry> = bounds::catalog()
        .iter()
        .map(|s| CatalogEntry {
            id: s.id,
            scope: s.scope,
            direction: s.direction(),
            anchor: s.anchor,
            statement: s.statement,
            precondition: s.precondition,
            equality_family: s.equality_family(),
        })
        .collect();
    if json {
        print_json(&entries)?;
        return Ok(Exit::Ok);
    }
    let mut text = String::new();
    for e in &entries {
        let scope = match e.scope {
            Scope::PerVertex => "per-vertex",
            Scope::WholeGraph => "whole-graph",
            Scope::GraphPair => "graph-pair",
        };
        text.push_str(&format!("{}  [{scope}]  {}\n", e.id, e.anchor));
        text.push_str(&format!("    {}\n", e.statement));
        text.push_str(&format!("    precondition: {}\n", e.precondition));
        if let Some(f) = e.equality_family {
            text.push_str(&format!("    equality: {f}\n"));
        }
    }
    text.push_str(&format!("{} bounds\n", entries.len()));
    print_stdout(&text)?;
    Ok(Exit::Ok)
}

fn identities(seed: u64) -> Result<Exit, CliError> {
    let summary = identity_suite(&IdentityConfig { seed, ..IdentityConfig::default() })?;
    let passed = summary.passed;
    let mut doc =
        ReportDocument::new(InputDescriptor { kind: "identities".into(), value: format!("seed={seed}"), graph6: None });
    doc.identities = Some(summary);
    print_stdout(&doc.to_json())?;
    Ok(if passed { Exit::Ok } else { Exit::Numeric })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_ranges() {
        assert_eq!(parse_orders("30").unwrap(), (30, 30));
        assert_eq!(parse_orders("10..30").unwrap(), (10, 30));
        assert_eq!(parse_orders("10..=30").unwrap(), (10, 30));
        assert!(parse_orders("ten").is_err());
    }

    #[test]
    fn exit_codes_follow_sweep_outcome() {
        let mut s = exen_core::run_sweep(&SweepConfig::exhaustive(1, 3)).unwrap();
        assert_eq!(sweep_exit(&s), Exit::Ok);
        s.violated_total = 1;
        assert_eq!(sweep_exit(&s), Exit::Violation);
        s.failures.push(exen_core::oracle::GraphFailure { graph6: "B?".into(), message: "no convergence".into() });
        assert_eq!(sweep_exit(&s), Exit::Numeric);
    }

    #[test]
    fn error_exit_codes() {
        assert_eq!(CliError::Input("x".into()).exit_code(), Exit::Input);
        assert_eq!(CliError::Numeric(LinalgError::Singular).exit_code(), Exit::Numeric);
    }
}
