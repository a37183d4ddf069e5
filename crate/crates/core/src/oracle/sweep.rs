use std::sync::atomic::{AtomicU64, Ordering};
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::enumerate::{check_order, labeled_count, labeled_graph};
use super::*;
use crate::bounds::{evaluate, lookup, BoundCheck, BoundSpec, Rule, Status, Subject, Subjects};
use crate::energy::{component_locality_residual, energy_report, GraphAnalysis};
use crate::graph::generators::{from_spec, random_gnp_stream};
use crate::graph::{parse_graph6, Graph};
use crate::linalg::LinalgError;

const CONSISTENCY_TOL: f64 = 1e-9;
const RELABEL_TOL: f64 = 1e-8;
const MIN_VERTEX_ENERGY: f64 = -1e-12;
const PROGRESS_STEP: u64 = 1 << 16;
/// Keeps the relabeling permutations independent of the `G(n, p)` streams.
const RELABEL_SEED_SALT: u64 = 0x9e37_79b9_7f4a_7c15;

/// Execution settings that do not influence the summary contents.
#[derive(Default)]
pub struct SweepOptions<'a> {
    pub threads: Option<usize>,
    /// Called with `(done, total)` every 65536 graphs and at the end.
    pub progress: Option<&'a (dyn Fn(u64, u64) + Sync)>,
    /// Record wall-clock runtime in the summary. Off by default so that
    /// summaries are byte-for-byte reproducible.
    pub timing: bool,
}

pub fn run_sweep(cfg: &SweepConfig) -> Result<SweepSummary, OracleError> {
    run_sweep_with(cfg, &SweepOptions::default())
}

pub fn run_sweep_with(cfg: &SweepConfig, opts: &SweepOptions) -> Result<SweepSummary, OracleError> {
    let start = Instant::now();
    let ctx = Context::new(cfg)?;
    let run = || sweep(&ctx, opts);
    let partial = match opts.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| OracleError::Config(e.to_string()))?
            .install(run),
        None => run(),
    };
    let mut summary = ctx.finish(partial);
    if opts.timing {
        summary.runtime_seconds = Some(start.elapsed().as_secs_f64());
    }
    Ok(summary)
}

/// All graphs in an exhaustive range attaining equality in `bound_id`,
/// with the comparison against the stated equality family.
pub fn find_equality_witnesses(cfg: &SweepConfig, bound_id: &str) -> Result<EqualityWitnesses, OracleError> {
    if cfg.mode != SweepMode::ExhaustiveLabeled {
        return Err(OracleError::Config("equality witnesses need exhaustive mode".into()));
    }
    let spec = lookup(bound_id).ok_or_else(|| BoundError::UnknownBound(bound_id.to_string()))?;
    let mut cfg = cfg.clone();
    cfg.bound_filter = vec![bound_id.to_string()];
    cfg.witness_limit = usize::MAX;
    cfg.complement_pairs |= spec.scope == Scope::GraphPair;
    let mut summary = run_sweep(&cfg)?;
    let bound = summary.bounds.remove(0);
    Ok(EqualityWitnesses { bound_id: bound.bound_id, graphs: bound.equality_witnesses, family: bound.family })
}

// ---------------------------------------------------------------------------
// Graph sources

enum Source {
    Exhaustive(Vec<(usize, u64)>),
    Random { blocks: Vec<(usize, f64, u64)>, seed: u64 },
    Corpus(Vec<Graph>),
}

impl Source {
    fn new(cfg: &SweepConfig) -> Result<Self, OracleError> {
        match &cfg.mode {
            SweepMode::ExhaustiveLabeled => {
                order_range(cfg)?;
                check_order(cfg.n_max)?;
                Ok(Source::Exhaustive((cfg.n_min..=cfg.n_max).map(|n| (n, labeled_count(n))).collect()))
            }
            SweepMode::RandomGnp => {
                order_range(cfg)?;
                if cfg.p_grid.is_empty() {
                    return Err(OracleError::Config("random mode needs at least one edge probability".into()));
                }
                if let Some(p) = cfg.p_grid.iter().find(|p| !(0.0..=1.0).contains(*p)) {
                    return Err(OracleError::Config(format!("edge probability {p} outside [0, 1]")));
                }
                let blocks = (cfg.n_min..=cfg.n_max)
                    .flat_map(|n| cfg.p_grid.iter().map(move |&p| (n, p, cfg.samples as u64)))
                    .collect();
                Ok(Source::Random { blocks, seed: cfg.seed })
            }
            SweepMode::CorpusFile { path } => {
                let text = std::fs::read_to_string(path)
                    .map_err(|source| OracleError::CorpusIo { path: path.clone(), source })?;
                let mut graphs = Vec::new();
                for (k, line) in text.lines().enumerate() {
                    let line = line.trim();
                    if line.is_empty() || line.starts_with('#') {
                        continue;
                    }
                    let g = parse_graph6(line).map_err(|source| OracleError::CorpusParse {
                        path: path.clone(),
                        line: k + 1,
                        source,
                    })?;
                    graphs.push(g);
                }
                Ok(Source::Corpus(graphs))
            }
            SweepMode::Family { spec } => Ok(Source::Corpus(vec![from_spec(spec)?])),
        }
    }

    fn len(&self) -> u64 {
        match self {
            Source::Exhaustive(blocks) => blocks.iter().map(|b| b.1).sum(),
            Source::Random { blocks, .. } => blocks.iter().map(|b| b.2).sum(),
            Source::Corpus(graphs) => graphs.len() as u64,
        }
    }

    fn graph(&self, mut idx: u64) -> Result<Graph, String> {
        match self {
            Source::Exhaustive(blocks) => {
                for &(n, count) in blocks {
                    if idx < count {
                        return Ok(labeled_graph(n, idx));
                    }
                    idx -= count;
                }
            }
            Source::Random { blocks, seed } => {
                let stream = idx;
                for &(n, p, count) in blocks {
                    if idx < count {
                        return random_gnp_stream(n, p, *seed, stream).map_err(|e| e.to_string());
                    }
                    idx -= count;
                }
            }
            Source::Corpus(graphs) => {
                if let Some(g) = graphs.get(idx as usize) {
                    return Ok(g.clone());
                }
            }
        }
        Err(format!("stream index {idx} past the end"))
    }
}

fn order_range(cfg: &SweepConfig) -> Result<(), OracleError> {
    if cfg.n_min == 0 || cfg.n_min > cfg.n_max {
        return Err(OracleError::Config(format!("order range {}..={} is empty or starts at 0", cfg.n_min, cfg.n_max)));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Accumulators

type Keyed<T> = (u64, usize, T);

fn push_capped<T>(list: &mut Vec<Keyed<T>>, item: Keyed<T>, cap: usize) {
    if cap == 0 {
        return;
    }
    list.push(item);
    if list.len() >= cap.saturating_mul(2) {
        trim(list, cap);
    }
}

fn trim<T>(list: &mut Vec<Keyed<T>>, cap: usize) {
    list.sort_by_key(|(i, v, _)| (*i, *v));
    list.truncate(cap);
}

fn merge_capped<T>(a: &mut Vec<Keyed<T>>, b: Vec<Keyed<T>>, cap: usize) {
    a.extend(b);
    trim(a, cap);
}

/// NaN-propagating maximum, so a broken residual cannot hide.
fn worse(a: f64, b: f64) -> f64 {
    if a.is_nan() || b.is_nan() {
        f64::NAN
    } else {
        a.max(b)
    }
}

fn add_status(t: &mut StatusTally, s: Status) {
    match s {
        Status::Holds => t.holds += 1,
        Status::Equality => t.equality += 1,
        Status::Violated => t.violated += 1,
        Status::NotApplicable => t.not_applicable += 1,
    }
}

fn add_tally(a: &mut StatusTally, b: &StatusTally) {
    a.holds += b.holds;
    a.equality += b.equality;
    a.violated += b.violated;
    a.not_applicable += b.not_applicable;
}

#[derive(Clone)]
struct Worst {
    slack: f64,
    idx: u64,
    vertex: usize,
    graph6: String,
}

impl Worst {
    fn better_than(&self, other: &Worst) -> bool {
        self.slack.total_cmp(&other.slack).then(self.idx.cmp(&other.idx)).then(self.vertex.cmp(&other.vertex)).is_lt()
    }
}

fn merge_worst(a: &mut Option<Worst>, b: Option<Worst>) {
    if let Some(b) = b {
        if a.as_ref().is_none_or(|a| b.better_than(a)) {
            *a = Some(b);
        }
    }
}

#[derive(Clone, Default)]
struct BoundAcc {
    graphs: StatusTally,
    vertices: StatusTally,
    worst: Option<Worst>,
    equality: Vec<Keyed<Witness>>,
    violations: Vec<Keyed<Violation>>,
    family_in: u64,
    family_out: u64,
    family_missed: u64,
    outside: Vec<Keyed<Witness>>,
    missed: Vec<Keyed<Witness>>,
}

impl BoundAcc {
    fn merge(&mut self, other: BoundAcc, cap: usize) {
        add_tally(&mut self.graphs, &other.graphs);
        add_tally(&mut self.vertices, &other.vertices);
        merge_worst(&mut self.worst, other.worst);
        merge_capped(&mut self.equality, other.equality, cap);
        merge_capped(&mut self.violations, other.violations, cap);
        self.family_in += other.family_in;
        self.family_out += other.family_out;
        self.family_missed += other.family_missed;
        merge_capped(&mut self.outside, other.outside, cap);
        merge_capped(&mut self.missed, other.missed, cap);
    }
}

#[derive(Clone, Default)]
struct DominanceAcc {
    graphs: u64,
    newer: Option<f64>,
    older: Option<f64>,
}

fn min_opt(a: Option<f64>, b: Option<f64>) -> Option<f64> {
    match (a, b) {
        (Some(x), Some(y)) => Some(if x.total_cmp(&y).is_le() { x } else { y }),
        (x, None) => x,
        (None, y) => y,
    }
}

#[derive(Clone, Default)]
struct Residuals {
    vertex_sum: f64,
    doubly_stochastic: f64,
    weighted_vertex_energy: f64,
    component_locality: f64,
    eigen_orthogonality: f64,
    eigen_reconstruction: f64,
    regular_collapse: f64,
    min_vertex_energy: f64,
    relabel_checked: u64,
    relabel: f64,
}

impl Residuals {
    fn merge(&mut self, o: &Residuals) {
        self.vertex_sum = worse(self.vertex_sum, o.vertex_sum);
        self.doubly_stochastic = worse(self.doubly_stochastic, o.doubly_stochastic);
        self.weighted_vertex_energy = worse(self.weighted_vertex_energy, o.weighted_vertex_energy);
        self.component_locality = worse(self.component_locality, o.component_locality);
        self.eigen_orthogonality = worse(self.eigen_orthogonality, o.eigen_orthogonality);
        self.eigen_reconstruction = worse(self.eigen_reconstruction, o.eigen_reconstruction);
        self.regular_collapse = worse(self.regular_collapse, o.regular_collapse);
        self.min_vertex_energy = -worse(-self.min_vertex_energy, -o.min_vertex_energy);
        self.relabel_checked += o.relabel_checked;
        self.relabel = worse(self.relabel, o.relabel);
    }

    fn observe(&mut self, g: &Graph, a: &GraphAnalysis) -> Result<(), LinalgError> {
        let r = &a.report;
        let sum_ordinary: f64 = r.vertex_energies.iter().sum();
        let sum_extended: f64 = r.extended_vertex_energies.iter().sum();
        self.vertex_sum = worse(
            self.vertex_sum,
            worse((sum_ordinary - r.ordinary_energy).abs(), (sum_extended - r.extended_energy).abs()),
        );
        self.doubly_stochastic = worse(self.doubly_stochastic, r.weights.stochastic_residual());
        for (i, &e) in r.extended_vertex_energies.iter().enumerate() {
            let weighted = (r.weights.vertex_energy(i) - e).abs();
            self.weighted_vertex_energy = worse(self.weighted_vertex_energy, weighted);
        }
        self.component_locality = worse(self.component_locality, component_locality_residual(g, r)?);
        self.eigen_orthogonality = worse(
            self.eigen_orthogonality,
            worse(a.adjacency_eig.orthogonality_residual(), a.extended_eig.orthogonality_residual()),
        );
        self.eigen_reconstruction = worse(
            self.eigen_reconstruction,
            worse(
                a.adjacency_eig.reconstruction_residual(&a.adjacency),
                a.extended_eig.reconstruction_residual(&a.extended),
            ),
        );
        if g.is_regular() {
            let matrix_gap = a.extended.as_matrix().max_abs_diff(a.adjacency.as_matrix());
            let energy_gap = (r.extended_energy - r.ordinary_energy).abs();
            self.regular_collapse = worse(self.regular_collapse, worse(matrix_gap, energy_gap));
        }
        for &e in r.vertex_energies.iter().chain(&r.extended_vertex_energies) {
            self.min_vertex_energy = -worse(-self.min_vertex_energy, -e);
        }
        Ok(())
    }
}

struct Partial {
    processed: u64,
    skipped: u64,
    bounds: Vec<BoundAcc>,
    dominance: Vec<DominanceAcc>,
    residuals: Residuals,
    failures: Vec<Keyed<GraphFailure>>,
}

// ---------------------------------------------------------------------------
// Sweep

struct DominancePair {
    spec: usize,
    newer: usize,
    older: usize,
}

struct Context<'a> {
    cfg: &'a SweepConfig,
    source: Source,
    specs: Vec<&'static BoundSpec>,
    pairs: Vec<DominancePair>,
}

impl<'a> Context<'a> {
    fn new(cfg: &'a SweepConfig) -> Result<Self, OracleError> {
        let specs = cfg
            .bound_filter
            .iter()
            .map(|id| lookup(id).ok_or_else(|| BoundError::UnknownBound(id.clone())))
            .collect::<Result<Vec<_>, _>>()?;
        let position = |id: &str| specs.iter().position(|s| s.id == id);
        let pairs = specs
            .iter()
            .enumerate()
            .filter_map(|(k, s)| match s.rule {
                Rule::Dominance { newer, older, .. } => {
                    Some(DominancePair { spec: k, newer: position(newer)?, older: position(older)? })
                }
                Rule::Inequality { .. } => None,
            })
            .collect();
        Ok(Self { cfg, source: Source::new(cfg)?, specs, pairs })
    }

    fn empty_partial(&self) -> Partial {
        Partial {
            processed: 0,
            skipped: 0,
            bounds: vec![BoundAcc::default(); self.specs.len()],
            dominance: vec![DominanceAcc::default(); self.pairs.len()],
            residuals: Residuals::default(),
            failures: Vec::new(),
        }
    }

    fn merge(&self, mut a: Partial, b: Partial) -> Partial {
        let cap = self.cfg.witness_limit;
        a.processed += b.processed;
        a.skipped += b.skipped;
        for (x, y) in a.bounds.iter_mut().zip(b.bounds) {
            x.merge(y, cap);
        }
        for (x, y) in a.dominance.iter_mut().zip(b.dominance) {
            x.graphs += y.graphs;
            x.newer = min_opt(x.newer, y.newer);
            x.older = min_opt(x.older, y.older);
        }
        a.residuals.merge(&b.residuals);
        a.failures.extend(b.failures);
        a.failures.sort_by_key(|(i, v, _)| (*i, *v));
        a
    }

    fn process(&self, idx: u64, acc: &mut Partial) {
        let g = match self.source.graph(idx) {
            Ok(g) => g,
            Err(message) => {
                acc.failures.push((idx, 0, GraphFailure { graph6: String::new(), message }));
                return;
            }
        };
        if self.cfg.connected_only && !g.is_connected() {
            acc.skipped += 1;
            return;
        }
        acc.processed += 1;
        if let Err(e) = self.process_graph(idx, &g, acc) {
            acc.failures.push((idx, 0, GraphFailure { graph6: g.to_graph6(), message: e.to_string() }));
        }
    }

    fn process_graph(&self, idx: u64, g: &Graph, acc: &mut Partial) -> Result<(), LinalgError> {
        let analysis = GraphAnalysis::of(g)?;
        acc.residuals.observe(g, &analysis)?;
        if self.cfg.relabel_every > 0 && idx.is_multiple_of(self.cfg.relabel_every) {
            let r = relabel_residual(self.cfg.seed, idx, g, &analysis)?;
            acc.residuals.relabel = worse(acc.residuals.relabel, r);
            acc.residuals.relabel_checked += 1;
        }

        let co = self.cfg.complement_pairs.then(|| g.complement());
        let co_analysis = match &co {
            Some(c) => {
                let a = GraphAnalysis::of(c)?;
                acc.residuals.observe(c, &a)?;
                Some(a)
            }
            None => None,
        };
        let subject = Subject::from_analysis(g, &analysis);
        let subjects = match (&co, &co_analysis) {
            (Some(c), Some(a)) => Subjects::pair(subject, Subject::from_analysis(c, a)),
            _ => Subjects::single(subject),
        };

        let mut graph6 = None;
        let mut slacks = vec![None; self.specs.len()];
        for (k, spec) in self.specs.iter().enumerate() {
            let Some(checks) = evaluate(spec, &subjects, &self.cfg.tolerances) else {
                continue;
            };
            slacks[k] = checks.first().and_then(|c| c.slack);
            let per_vertex = spec.scope == Scope::PerVertex;
            record(&mut acc.bounds[k], idx, g, &mut graph6, &checks, per_vertex, self.cfg.witness_limit);
        }
        for (pair, d) in self.pairs.iter().zip(acc.dominance.iter_mut()) {
            let both = slacks[pair.spec].is_some();
            if let (true, Some(n), Some(o)) = (both, slacks[pair.newer], slacks[pair.older]) {
                d.graphs += 1;
                d.newer = min_opt(d.newer, Some(n));
                d.older = min_opt(d.older, Some(o));
            }
        }
        Ok(())
    }

    fn finish(&self, p: Partial) -> SweepSummary {
        let cap = self.cfg.witness_limit;
        let strip = |mut list: Vec<Keyed<Witness>>| {
            trim(&mut list, cap);
            list.into_iter().map(|(_, _, w)| w).collect::<Vec<_>>()
        };
        let bounds: Vec<BoundSummary> = self
            .specs
            .iter()
            .zip(p.bounds)
            .map(|(spec, acc)| {
                let mut violations = acc.violations;
                trim(&mut violations, cap);
                BoundSummary {
                    bound_id: spec.id.to_string(),
                    scope: spec.scope,
                    anchor: spec.anchor.to_string(),
                    tallies: acc.graphs,
                    vertex_tallies: (spec.scope == Scope::PerVertex).then_some(acc.vertices),
                    worst_slack: acc.worst.as_ref().map(|w| w.slack),
                    worst_witness: acc.worst.as_ref().map(|w| w.graph6.clone()),
                    worst_vertex: acc.worst.as_ref().filter(|_| spec.scope == Scope::PerVertex).map(|w| w.vertex),
                    equality_witnesses: strip(acc.equality),
                    violations: violations.into_iter().map(|(_, _, v)| v).collect(),
                    family: spec.equality_family().map(|name| FamilySummary {
                        name: name.to_string(),
                        equality_in_family: acc.family_in,
                        equality_outside_family: acc.family_out,
                        member_not_equal: acc.family_missed,
                        outside_examples: strip(acc.outside),
                        missed_examples: strip(acc.missed),
                    }),
                }
            })
            .collect();

        let tol = self.cfg.tolerances.violation;
        let dominance_sanity: Vec<DominanceSanity> = self
            .pairs
            .iter()
            .zip(p.dominance)
            .map(|(pair, d)| {
                let consistent = match (d.newer, d.older) {
                    (Some(n), Some(o)) => o >= n - tol * (1.0 + n.abs()),
                    _ => true,
                };
                DominanceSanity {
                    pair_id: self.specs[pair.spec].id.to_string(),
                    graphs: d.graphs,
                    newer_worst: d.newer,
                    older_worst: d.older,
                    consistent,
                }
            })
            .collect();

        let r = p.residuals;
        let within = [
            r.vertex_sum,
            r.doubly_stochastic,
            r.weighted_vertex_energy,
            r.component_locality,
            r.eigen_orthogonality,
            r.eigen_reconstruction,
            r.regular_collapse,
        ]
        .iter()
        .all(|&x| x <= CONSISTENCY_TOL)
            && r.relabel <= RELABEL_TOL
            && r.min_vertex_energy >= MIN_VERTEX_ENERGY;
        let consistency = ConsistencySummary {
            vertex_sum: r.vertex_sum,
            doubly_stochastic: r.doubly_stochastic,
            weighted_vertex_energy: r.weighted_vertex_energy,
            component_locality: r.component_locality,
            eigen_orthogonality: r.eigen_orthogonality,
            eigen_reconstruction: r.eigen_reconstruction,
            regular_collapse: r.regular_collapse,
            min_vertex_energy: r.min_vertex_energy,
            relabel_checked: r.relabel_checked,
            relabel: r.relabel,
            tolerance: CONSISTENCY_TOL,
            relabel_tolerance: RELABEL_TOL,
            within_tolerance: within,
        };

        let violated_total = bounds.iter().map(|b| b.tallies.violated).sum();
        let failures: Vec<GraphFailure> = p.failures.into_iter().map(|(_, _, f)| f).collect();
        let passed = violated_total == 0
            && failures.is_empty()
            && consistency.within_tolerance
            && dominance_sanity.iter().all(|d| d.consistent);
        SweepSummary {
            config: self.cfg.clone(),
            graphs_processed: p.processed,
            graphs_skipped: p.skipped,
            bounds,
            dominance_sanity,
            consistency,
            failures,
            violated_total,
            passed,
            runtime_seconds: None,
        }
    }
}

fn sweep(ctx: &Context, opts: &SweepOptions) -> Partial {
    let total = ctx.source.len();
    let done = AtomicU64::new(0);

    (0..total)
        .into_par_iter()
        .fold(
            || ctx.empty_partial(),
            |mut acc, idx| {
                ctx.process(idx, &mut acc);
                if let Some(progress) = opts.progress {
                    let d = done.fetch_add(1, Ordering::Relaxed) + 1;
                    if d.is_multiple_of(PROGRESS_STEP) || d == total {
                        progress(d, total);
                    }
                }
                acc
            },
        )
        .reduce(|| ctx.empty_partial(), |a, b| ctx.merge(a, b))
}

fn record(
    acc: &mut BoundAcc,
    idx: u64,
    g: &Graph,
    graph6: &mut Option<String>,
    checks: &[BoundCheck],
    per_vertex: bool,
    cap: usize,
) {
    let mut name = || graph6.get_or_insert_with(|| g.to_graph6()).clone();
    let mut equal = Vec::new();
    let mut outside = Vec::new();
    let mut missed = Vec::new();
    let mut violated = false;
    let mut all_na = true;
    for c in checks {
        let v = c.vertex.unwrap_or(0);
        if per_vertex {
            add_status(&mut acc.vertices, c.status);
        }
        match c.status {
            Status::Equality => equal.extend(c.vertex),
            Status::Violated => {
                violated = true;
                let violation = Violation {
                    graph6: name(),
                    vertex: c.vertex,
                    lhs: c.lhs.unwrap_or(f64::NAN),
                    rhs: c.rhs.unwrap_or(f64::NAN),
                    slack: c.slack.unwrap_or(f64::NAN),
                };
                push_capped(&mut acc.violations, (idx, v, violation), cap);
            }
            _ => {}
        }
        if c.status != Status::NotApplicable {
            all_na = false;
        }
        if let Some(slack) = c.slack {
            let improves = acc
                .worst
                .as_ref()
                .is_none_or(|w| slack.total_cmp(&w.slack).then(idx.cmp(&w.idx)).then(v.cmp(&w.vertex)).is_lt());
            if improves {
                acc.worst = Some(Worst { slack, idx, vertex: v, graph6: name() });
            }
        }
        match (c.status == Status::Equality, c.family_agreement) {
            (true, Some(true)) => acc.family_in += 1,
            (true, Some(false)) => {
                acc.family_out += 1;
                outside.extend(c.vertex);
            }
            (false, Some(false)) => {
                acc.family_missed += 1;
                missed.extend(c.vertex);
            }
            _ => {}
        }
    }
    let any_equal = checks.iter().any(|c| c.status == Status::Equality);
    let status = if violated {
        Status::Violated
    } else if all_na {
        Status::NotApplicable
    } else if any_equal {
        Status::Equality
    } else {
        Status::Holds
    };
    add_status(&mut acc.graphs, status);
    if any_equal {
        push_capped(&mut acc.equality, (idx, 0, Witness { graph6: name(), vertices: equal }), cap);
    }
    if checks.iter().any(|c| c.status == Status::Equality && c.family_agreement == Some(false)) {
        push_capped(&mut acc.outside, (idx, 0, Witness { graph6: name(), vertices: outside }), cap);
    }
    if checks.iter().any(|c| c.status != Status::Equality && c.family_agreement == Some(false)) {
        push_capped(&mut acc.missed, (idx, 0, Witness { graph6: name(), vertices: missed }), cap);
    }
}

fn relabel_residual(seed: u64, idx: u64, g: &Graph, a: &GraphAnalysis) -> Result<f64, LinalgError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ RELABEL_SEED_SALT);
    rng.set_stream(idx);
    let mut perm: Vec<usize> = (0..g.order()).collect();
    perm.shuffle(&mut rng);
    let relabeled = energy_report(&g.permuted(&perm))?;
    let r = &a.report;
    let mut worst = worse(
        (r.ordinary_energy - relabeled.ordinary_energy).abs(),
        (r.extended_energy - relabeled.extended_energy).abs(),
    );
    for (v, &p) in perm.iter().enumerate() {
        worst = worse(worst, (r.extended_vertex_energies[v] - relabeled.extended_vertex_energies[p]).abs());
    }
    Ok(worst)
}
