use clap::{Parser, Subcommand, ValueEnum};
use graph_inertia::enumerator::BkClass;
use graph_inertia::spectra::DEFAULT_TOL;

/// Adjacency inertia, congruent transformations and the p = 2, nullity 1
/// classification of small graphs.
///
/// Graphs are given in graph6, as a `B_k` spec such as `B5(2,2;2,2;1)`, or
/// as `-` to read one line from stdin.
#[derive(Debug, Parser)]
#[command(name = "ginertia", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact inertia as `p=.. n=.. eta=..`.
    Inertia {
        graph: String,
        /// Also print the floating-point spectrum.
        #[arg(long)]
        float: bool,
        #[arg(long)]
        json: bool,
        /// Zero tolerance for the floating-point spectrum.
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Floating-point spectrum as JSON, rounded to 6 decimals.
    Spectrum {
        graph: String,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Build a graph and print it in graph6.
    Construct {
        #[command(subcommand)]
        what: Construct,
    },
    /// Full classification report as JSON.
    Classify {
        graph: String,
        /// Analyse every minimum-degree vertex, not only the lowest.
        #[arg(long)]
        all_vstar: bool,
    },
    /// Add or delete one congruent vertex; prints the new graph6 and the
    /// certificate JSON.
    Transform {
        op: TransformOp,
        graph: String,
        /// `v` for add-1, `v w` for add-2, `v x y` for add-3, `u` for deletions.
        #[arg(required = true)]
        vertices: Vec<usize>,
    },
    /// Census of `B_k` graphs.
    Enumerate {
        /// Single `k`; all `4 <= k <= min(max_n, 13)` when omitted.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        max_n: usize,
        #[arg(long, value_parser = parse_class)]
        class: Option<BkClass>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Reproduce a published result; exit 1 on a counterexample.
    Verify {
        #[command(subcommand)]
        check: Verify,
        /// Print a JSON summary instead of text.
        #[arg(long, global = true)]
        json: bool,
    },
    /// Convert a graph to another text format.
    Export {
        #[command(subcommand)]
        what: Export,
    },
}

#[derive(Debug, Subcommand)]
pub enum Construct {
    /// The two-clique graph `G_N`.
    Gn { n: usize },
    /// `B_K(n_1, ..., n_K)`.
    Bk {
        k: usize,
        #[arg(required = true)]
        parts: Vec<usize>,
    },
    /// Complete multipartite graph.
    Multipartite {
        #[arg(required = true)]
        parts: Vec<usize>,
    },
    /// Star `K_{1,r}` whose center is joined to the attach vertices of a graph.
    Kjoin {
        r: usize,
        graph: String,
        #[arg(required = true)]
        attach: Vec<usize>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TransformOp {
    #[value(name = "add-1")]
    Add1,
    #[value(name = "add-2")]
    Add2,
    #[value(name = "add-3")]
    Add3,
    #[value(name = "delete-1")]
    Delete1,
    #[value(name = "delete-2")]
    Delete2,
    #[value(name = "delete-3")]
    Delete3,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Table1,
}

#[derive(Debug, Subcommand)]
pub enum Verify {
    /// The 802 `B_k` graphs with `p = 2`, `eta = 1`: counts per `k` and the listed specs.
    Table1,
    /// Orders of the listed graphs with `6 <= k <= 10`.
    AppendixHist,
    /// No `p = 2`, `eta = 1` graph `B_k` of order 14 for `4 <= k <= 13`.
    #[command(name = "b0-empty-14")]
    B0Empty14,
    /// No `p = 2`, `eta = 0` graph `B_k` of order 14 for `10 <= k <= 13`.
    #[command(name = "bminus-empty-14")]
    BminusEmpty14,
    /// Order-13 `p = 2`, `eta = 0` rows for `4 <= k <= 9` are exactly the family hits.
    Patterns,
    /// Disconnected members of G match a disconnected shape, and conversely.
    TheoremDisconnected {
        #[arg(long)]
        order: usize,
        /// Visit every labeled graph instead of one per isomorphism class.
        #[arg(long)]
        labeled: bool,
    },
    /// Connected members of G are certified by a branch; pendant-form equivalence.
    TheoremMain {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        labeled: bool,
    },
    /// Seeded random congruent additions keep `p`, `n` and raise `eta` by one.
    Transforms {
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Largest order of a transformed graph.
        #[arg(long, default_value_t = 12)]
        max_order: usize,
    },
    /// Exact and floating-point inertia agree on all graphs up to the order
    /// and on the listed `B_k` graphs.
    Oracle {
        #[arg(long)]
        order: usize,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// `G_n` is an induced subgraph of `G_{n+1}` for `2 <= n <= 13`.
    GnChain,
    /// Structure of every listed graph: reduced, X-complete, `G_k` quotient, chains.
    BstarStructure,
}

#[derive(Debug, Subcommand)]
pub enum Export {
    /// Graphviz DOT.
    Dot {
        graph: String,
        #[arg(long, default_value = "G")]
        name: String,
    },
}

fn parse_class(s: &str) -> Result<BkClass, String> {
    s.parse().map_err(|e: graph_inertia::Error| e.to_string())
}
