//! Argument definitions. Flags override environment (`USG_*` prefix), which
//! overrides defaults.

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "usg",
    version,
    about = "Exact connectivity toolkit for uniform subset graphs (Johnson and Kneser graphs)"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct GraphArgs {
    /// Ground-set size (entries are 1..=n)
    #[arg(long)]
    pub n: u32,
    /// Subset size
    #[arg(long)]
    pub k: u32,
    /// Required intersection size; defaults to k-1 (Johnson mode)
    #[arg(long)]
    pub t: Option<u32>,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct EngineArgs {
    /// Worker threads for the search kernels (results are identical for any
    /// count); defaults to available parallelism
    #[arg(long, env = "USG_WORKERS")]
    pub workers: Option<usize>,
    /// Largest vertex count the exhaustive oracle will accept
    #[arg(long, env = "USG_MAX_ORACLE_VERTICES", default_value_t = 24)]
    pub max_oracle_vertices: usize,
    /// Branch-node budget for the flow search
    #[arg(long, env = "USG_MAX_BRANCH_NODES", default_value_t = 10_000_000)]
    pub max_branch_nodes: u64,
    /// Only search for super vertex-cuts up to this size
    #[arg(long)]
    pub max_cut_size: Option<u64>,
    /// Add elapsed-time fields to reports (off by default so identical
    /// invocations produce identical bytes)
    #[arg(long, default_value_t = false)]
    pub timing: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Dimacs,
    Json,
    EdgeList,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    /// Formula when it applies unambiguously, oracle on small graphs, flow
    /// search otherwise; cross-checks whenever two routes are available
    Auto,
    /// Closed-form value with a constructed, certified witness
    Formula,
    /// Branch-and-bound flow search
    Flow,
    /// Exhaustive subset enumeration
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WitnessKind {
    Jn2,
    EdgeNeighborhood,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a graph in DIMACS, JSON or edge-list form
    Gen {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, value_enum, default_value_t = GraphFormat::Dimacs)]
        format: GraphFormat,
    },
    /// Exact vertex connectivity with witness
    Kappa {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        engine: EngineArgs,
    },
    /// Exact super-connectivity (or proven +infinity) with certificate
    Superkappa {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        engine: EngineArgs,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
    },
    /// Construct a named super vertex-cut and certify it
    Witness {
        #[arg(long, value_enum)]
        kind: WitnessKind,
        /// Ground-set size
        #[arg(long)]
        n: u32,
        /// Subset size; fixed to 2 for the jn2 template
        #[arg(long)]
        k: Option<u32>,
        /// Three distinct entries for the jn2 template, e.g. 1,2,3
        #[arg(long, value_delimiter = ',')]
        triple: Option<Vec<u32>>,
    },
    /// Construct a disjoint-path family and run the checker over it
    Paths {
        /// Which family: 7 (edge-to-far-vertex) or 8 (case analysis)
        #[arg(long)]
        lemma: u8,
        #[command(flatten)]
        graph: GraphArgs,
        /// Case for lemma 8: I, II, III-A, III-B, IV-A, IV-B, IV-C
        #[arg(long, value_name = "CASE")]
        case: Option<String>,
        /// Sub-parameter; accepts absolute entries or k-relative tokens
        /// like k+2
        #[arg(long)]
        alpha: Option<String>,
        #[arg(long)]
        beta: Option<String>,
        #[arg(long)]
        gamma: Option<String>,
    },
    /// Re-check a stored cut or path certificate against a graph file
    Verify {
        #[arg(long)]
        graph: std::path::PathBuf,
        #[arg(long)]
        certificate: std::path::PathBuf,
    },
    /// Closed-form versus computed table over a parameter rectangle
    Table {
        #[arg(long, default_value_t = 1)]
        k_min: u32,
        #[arg(long)]
        k_max: u32,
        /// Lower bound for n (clamped to k per row); defaults to k
        #[arg(long)]
        n_min: Option<u32>,
        #[arg(long)]
        n_max: u32,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
        #[command(flatten)]
        engine: EngineArgs,
    },
}
