use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "shellar", version, about = "Clique complexes, shellings and extremal clique counts")]
pub struct Cli {
    /// `key = value` file with defaults for budget, workers, connected, format.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Echo the effective configuration to stderr.
    #[arg(long, short, global = true)]
    pub verbose: bool,
    /// Worker threads for searches; 0 uses all available cores.
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    /// Cap on candidate graphs examined by a search.
    #[arg(long, global = true)]
    pub budget: Option<u64>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
    Graph6,
    Dot,
}

impl Format {
    pub fn name(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Text => "text",
            Format::Graph6 => "graph6",
            Format::Dot => "dot",
        }
    }
}

#[derive(Debug, Args)]
pub struct Input {
    /// Complex file (`n k` facet list or JSON) or graph6 stream; stdin if absent.
    #[arg(long = "in")]
    pub input: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a graph from one of the built-in families.
    #[command(subcommand)]
    Gen(Family),
    /// Clique counts by size for each graph in a graph6 stream.
    Census {
        #[command(flatten)]
        input: Input,
        /// Only count cliques up to this size.
        #[arg(long)]
        max_size: Option<usize>,
    },
    /// Decide shellability and print a certificate.
    Shellable {
        #[command(flatten)]
        input: Input,
        /// Print the full certificate.
        #[arg(long)]
        certificate: bool,
        /// Exit with status 1 unless every input is shellable.
        #[arg(long)]
        expect_shellable: bool,
        /// Check this facet order (one facet per line) instead of searching.
        #[arg(long)]
        order: Option<PathBuf>,
        /// Add the free-degree trace for this degree bound.
        #[arg(long)]
        free_degree: Option<u32>,
    },
    /// Face counts by size.
    Fvector {
        #[command(flatten)]
        input: Input,
        /// Count the empty face in the total.
        #[arg(long)]
        with_empty: bool,
    },
    /// Build the K_m tree of a pure shelling without structural facets.
    Kmtree {
        #[command(flatten)]
        input: Input,
        /// Even degree bound; facets must have r/2 + 1 vertices.
        #[arg(long)]
        r: u32,
        /// Facet order to use (one facet per line); found by search if absent.
        #[arg(long)]
        order: Option<PathBuf>,
    },
    /// Graph on the facets of size m, joined when they share m - 1 vertices.
    Facetgraph {
        #[command(flatten)]
        input: Input,
        /// Facet size; defaults to the size of the facets of a pure complex.
        #[arg(long)]
        m: Option<usize>,
    },
    /// Exact extremal clique count over shellable graphs with bounded degree.
    Search(SearchArgs),
    /// Exhaustive checks of individual statements.
    #[command(subcommand)]
    Verify(Suite),
    /// Clique counts of Cir*(n, r) per vertex against their limits.
    Ratios {
        #[arg(long)]
        r: u32,
        /// Clique size; all sizes when absent.
        #[arg(long)]
        t: Option<u32>,
        /// Comma-separated vertex counts.
        #[arg(long, value_delimiter = ',', default_value = "10,100,1000")]
        n: Vec<u64>,
        /// Also run the exhaustive search for n up to this value.
        #[arg(long)]
        exhaustive_max: Option<u64>,
    },
}

#[derive(Debug, Subcommand)]
pub enum Family {
    /// Vertices 1..=n, adjacent when at distance at most floor(r/2).
    CirStar {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
    },
    /// Cir*(n, r) plus a long matching, for odd r and n > r.
    CirStarStar {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
    },
    /// Circulant graph on Z_n with the given jumps.
    Circulant {
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        jumps: Vec<usize>,
    },
    /// Complete r-partite graph with balanced parts.
    Turan {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
    },
    /// First m pairs in colex order.
    Colex {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// a copies of K_{r+1} and one K_b.
    UnionCliques {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        b: usize,
    },
    /// The union of cliques with the most cliques under maximum degree r.
    DegreeExtremal {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
    },
    Complete {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(long)]
    pub n: usize,
    /// Maximum degree.
    #[arg(long)]
    pub r: usize,
    /// Clique size to maximize; the total count when absent.
    #[arg(long)]
    pub t: Option<usize>,
    /// Only pure complexes.
    #[arg(long)]
    pub pure: bool,
    /// Only graphs with this clique number.
    #[arg(long)]
    pub omega: Option<usize>,
    /// Include disconnected graphs.
    #[arg(long)]
    pub allow_disconnected: bool,
    #[arg(long, value_enum, default_value = "enumerate")]
    pub source: Source,
    /// graph6 file for `--source stdin`; standard input if absent.
    #[arg(long = "in")]
    pub input: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Source {
    Enumerate,
    Stdin,
}

#[derive(Debug, Subcommand)]
pub enum Suite {
    /// Binomial inequality over all small parameters.
    Binom {
        #[arg(long, default_value_t = 25)]
        a_max: u64,
    },
    /// Complexes containing the Cir*(r+3, r) pattern are Cir*(n, r).
    Tendril {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 4)]
        r: u32,
    },
    /// The K_m tree on r/2 + 3 facets is unique.
    Unique {
        #[arg(long, default_value_t = 4)]
        r: u32,
        /// Use r/2 + 2 facets on r + 2 vertices instead.
        #[arg(long)]
        relaxed: bool,
    },
    /// Zykov, Kruskal–Katona, Gan–Loh–Sudakov and Cutler–Radcliffe bounds.
    Classical {
        #[arg(long, default_value_t = 7)]
        n_max: usize,
    },
    /// Pure shellable candidates for odd r against the path-power graphs.
    Odd {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: u32,
    },
    /// Facets beyond size floor(r/2) + 1 in shellable complexes.
    Large {
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        r: usize,
    },
    /// Edge deltas and the count bound for structural facets.
    Structural {
        #[arg(long, default_value_t = 7)]
        n_max: usize,
    },
    /// Certificate face counts against f-vectors.
    Formula {
        #[arg(long, default_value_t = 7)]
        n_max: usize,
    },
}
