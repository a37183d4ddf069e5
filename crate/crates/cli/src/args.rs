use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand};

/// Extended graph energy: spectra, vertex energies and bound verification.
#[derive(Debug, Parser)]
#[command(name = "exen", version, about)]
pub struct Cli {
    /// Emit JSON on stdout. Reports from compute, verify and identities are
    /// JSON regardless; this switches catalog and sweep to JSON too.
    #[arg(long, global = true)]
    pub json: bool,

    /// Seed for random graphs, relabeling spot-checks and random matrices.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Relative equality tolerance, scaled by 1 + |rhs|.
    #[arg(long = "tol-eq", global = true, default_value_t = 1e-7)]
    pub tol_eq: f64,

    /// Relative violation tolerance, scaled by 1 + |rhs|.
    #[arg(long = "tol-viol", global = true, default_value_t = 1e-9)]
    pub tol_viol: f64,

    /// Worker threads for sweeps.
    #[arg(long, global = true, env = "EXEN_THREADS")]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Energies, spectra and every bound check for one graph.
    Compute(ComputeArgs),
    /// Run bounds over a set of graphs and print the summary.
    Verify(SweepArgs),
    /// Like verify, but write summary.json and slacks.csv to a directory.
    Sweep(SweepOutArgs),
    /// List every registered bound.
    Catalog,
    /// Residuals of the matrix identities (polar, Kronecker, |A_ex| vs |A|).
    Identities,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("input").required(true).args(["g6", "edgelist", "family"])))]
pub struct ComputeArgs {
    /// Graph in graph6 format.
    #[arg(long)]
    pub g6: Option<String>,

    /// Edge-list file: header `n m`, then one `i j` pair per line.
    #[arg(long)]
    pub edgelist: Option<PathBuf>,

    /// Family specification, for example `path:3`, `star:4`, `complete_bipartite:2,3`.
    #[arg(long)]
    pub family: Option<String>,

    /// Only report per-vertex checks for this vertex (0-based).
    #[arg(long)]
    pub vertex: Option<usize>,

    /// Bound filter: `all`, comma-separated ids, or a `prefix*` pattern.
    #[arg(long, default_value = "all")]
    pub bounds: String,

    /// Skip graph/complement bounds.
    #[arg(long)]
    pub no_pairs: bool,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("source").required(true).args(["corpus", "family", "exhaustive", "random"])))]
pub struct SweepArgs {
    /// graph6 file, one graph per line, `#` comments allowed.
    #[arg(long)]
    pub corpus: Option<PathBuf>,

    /// A single graph by family specification.
    #[arg(long)]
    pub family: Option<String>,

    /// Every labeled graph with n_min..=N vertices.
    #[arg(long, value_name = "N")]
    pub exhaustive: Option<usize>,

    /// Erdős–Rényi G(n, p) samples.
    #[arg(long)]
    pub random: bool,

    /// Smallest order for exhaustive mode.
    #[arg(long, default_value_t = 1)]
    pub n_min: usize,

    /// Orders for random mode: `N` or an inclusive range `A..B`.
    #[arg(long, default_value = "10")]
    pub n: String,

    /// Edge probabilities for random mode, comma-separated.
    #[arg(long, default_value = "0.5", value_delimiter = ',')]
    pub p: Vec<f64>,

    /// Samples per (n, p) combination in random mode.
    #[arg(long, default_value_t = 100)]
    pub samples: usize,

    /// Bound filter: `all`, comma-separated ids, or a `prefix*` pattern.
    #[arg(long, default_value = "all")]
    pub bounds: String,

    /// Also evaluate graph/complement bounds.
    #[arg(long)]
    pub pairs: bool,

    /// Skip disconnected graphs.
    #[arg(long)]
    pub connected_only: bool,

    /// Example graphs kept per list in the summary.
    #[arg(long, default_value_t = 20)]
    pub witness_limit: usize,

    /// Relabeling spot-check period (every k-th graph); 0 disables.
    #[arg(long, default_value_t = 16)]
    pub relabel_every: u64,

    /// Allow the 2,097,152-graph exhaustive sweep on 7 vertices; reports
    /// progress on stderr.
    #[arg(long)]
    pub extended: bool,

    /// Report progress on stderr.
    #[arg(long)]
    pub progress: bool,

    /// Include the wall-clock runtime in the summary (output is then no
    /// longer reproducible byte for byte).
    #[arg(long)]
    pub timing: bool,
}

#[derive(Debug, Args)]
pub struct SweepOutArgs {
    #[command(flatten)]
    pub sweep: SweepArgs,

    /// Output directory for summary.json and slacks.csv.
    #[arg(long, default_value = "results")]
    pub out: PathBuf,
}
