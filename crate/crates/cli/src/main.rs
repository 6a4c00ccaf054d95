use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use shellcount::commands::{
    cmd_bounds, cmd_count, cmd_formula, cmd_gen, cmd_tree_roots, cmd_verify, CountOptions, Family,
    GenKind,
};
use shellcount::graph::{parse_edge_list, Graph};
use shellcount::oracle::DEFAULT_MAX_DP_EDGES;
use shellcount::report::Report;
use shellcount::verify::Suite;

/// Exact shelling counts for graphs.
///
/// Graph files hold one `u v` edge per line, with an optional `n N` header
/// for the vertex count; `#` starts a comment. Pass `-` to read from standard
/// input. Reports go to stdout as JSON and to stderr as a table.
#[derive(Parser)]
#[command(name = "shellcount", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count the shellings of a graph.
    Count {
        file: PathBuf,
        /// Use the subset DP (and enumeration for at most 8 edges) instead of
        /// closed forms.
        #[arg(long)]
        brute: bool,
        /// Skip the DP cross-check when a closed form applies.
        #[arg(long)]
        no_crosscheck: bool,
        #[arg(long, default_value_t = DEFAULT_MAX_DP_EDGES)]
        max_dp_edges: usize,
    },
    /// Rooted counts at every vertex of a tree.
    TreeRoots { file: PathBuf },
    /// Closed-form count for a family: kn N, kmn M N, stanley M N, path N [I].
    Formula {
        family: Family,
        #[arg(required = true)]
        params: Vec<u64>,
        /// Term limit for the stanley sum.
        #[arg(long)]
        max_terms: Option<u64>,
    },
    /// Tree bounds against the exact count.
    Bounds { file: PathBuf },
    /// Run a verification suite: identities, trees, bipartite, bounds or all.
    Verify {
        suite: Suite,
        /// Largest tree size for the exhaustive sweeps.
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Print a generated graph: tree N, all-trees N, kmn M N, kn N, path N,
    /// mid-spider N L.
    Gen {
        kind: GenKind,
        params: Vec<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn read_graph(path: &PathBuf) -> Result<Graph, String> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| format!("stdin: {e}"))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?
    };
    parse_edge_list(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn run(command: Command) -> Result<Report, String> {
    let report = match command {
        Command::Count {
            file,
            brute,
            no_crosscheck,
            max_dp_edges,
        } => {
            let g = read_graph(&file)?;
            let opts = CountOptions {
                brute,
                crosscheck: !no_crosscheck,
                max_dp_edges,
            };
            cmd_count(&g, opts)
        }
        Command::TreeRoots { file } => cmd_tree_roots(&read_graph(&file)?),
        Command::Formula {
            family,
            params,
            max_terms,
        } => cmd_formula(family, &params, max_terms),
        Command::Bounds { file } => cmd_bounds(&read_graph(&file)?),
        Command::Verify { suite, max_n } => cmd_verify(suite, max_n),
        Command::Gen { .. } => unreachable!("handled in main"),
    };
    report.map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Command::Gen { kind, params, seed } = &cli.command {
        return match cmd_gen(*kind, params, *seed) {
            Ok(text) => {
                print!("{text}");
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
        };
    }
    match run(cli.command) {
        Ok(report) => {
            println!("{}", report.to_json());
            eprint!("{}", report.to_table());
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
