use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use multicross::analyze::{
    candidate_deletion, candidate_partition, AnalysisOptions, AnalysisResult,
};
use multicross::construct::{
    fully_single_crossing, implement_clique, implement_empty, implement_even_cycle,
    implement_general, implement_path, implement_permutation_graph, implement_tree,
    implement_tree_rooted, ramsey_bound, ramsey_extract, ImplementationResult,
};
use multicross::election::{numbered_names, Election, SingleCrossing};
use multicross::generate::{random_election, random_graph};
use multicross::graph::search::DEFAULT_NODE_BUDGET;
use multicross::graph::{emit_dot, recognize_permutation, transitive_orientation, UndirectedGraph};
use multicross::oracle;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

const SCHEMA: &str = "1";

/// Exit codes: 0 success or yes, 1 well-formed no, 2 bad input, 3 search
/// budget exhausted.
#[derive(Debug, Clone, Copy)]
enum Status {
    Yes = 0,
    No = 1,
    Budget = 3,
}

#[derive(Parser)]
#[command(
    name = "multicross",
    version,
    about = "Multi-crossing graphs of elections"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Single-crossing test with a witness on failure.
    Check {
        /// Election file, or - for stdin.
        election: PathBuf,
    },
    /// Multi-crossing graph of an election.
    Gamma {
        election: PathBuf,
        /// Graphviz output.
        #[arg(long, conflicts_with = "edges")]
        dot: bool,
        /// Edge lines only.
        #[arg(long)]
        edges: bool,
    },
    /// Build an election whose multi-crossing graph is the given graph.
    Implement(ImplementArgs),
    /// Fully single-crossing election on candidates 1..M.
    Fullsc {
        #[arg(long)]
        m: usize,
    },
    /// Candidate Deletion or k-Candidate Partition.
    Analyze {
        #[arg(value_enum)]
        problem: Problem,
        election: PathBuf,
        #[arg(long)]
        k: usize,
        /// Node budget of the exact search.
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
        /// Skip the polynomial special cases.
        #[arg(long)]
        force_general: bool,
    },
    /// Comparability and permutation graph recognition.
    Recognize { graph: PathBuf },
    /// Large clique or independent set of the multi-crossing graph.
    Ramsey { election: PathBuf },
    /// Seeded random instances.
    #[command(subcommand)]
    Gen(Gen),
    /// Brute-force answers for a small graph.
    #[command(hide = true)]
    Oracle { graph: PathBuf },
}

#[derive(Args)]
struct ImplementArgs {
    /// Graph file; without --family the construction is chosen automatically.
    graph: Option<PathBuf>,
    #[arg(long, value_enum)]
    family: Option<Family>,
    /// Vertex count for path, cycle, clique and empty.
    #[arg(long)]
    size: Option<usize>,
    /// Root vertex for the tree construction.
    #[arg(long)]
    root: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Path,
    Cycle,
    Tree,
    Clique,
    Empty,
    Permutation,
    General,
}

#[derive(Clone, Copy, ValueEnum)]
enum Problem {
    Deletion,
    Partition,
}

#[derive(Subcommand)]
enum Gen {
    /// Votes drawn uniformly at random.
    RandomElection {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Each pair an edge with probability P.
    RandomGraph {
        #[arg(long)]
        v: usize,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn read_input(path: &Path) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text)?;
        return Ok(text);
    }
    std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn read_election(path: &Path) -> Result<Election> {
    Election::parse(&read_input(path)?).with_context(|| format!("{}", path.display()))
}

fn read_graph(path: &Path) -> Result<UndirectedGraph> {
    UndirectedGraph::parse(&read_input(path)?).with_context(|| format!("{}", path.display()))
}

fn print_json(value: &Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("json values serialize")
    );
}

fn check(path: &Path) -> Result<Status> {
    let e = read_election(path)?;
    match e.single_crossing() {
        SingleCrossing::Holds => {
            println!("single-crossing");
            Ok(Status::Yes)
        }
        SingleCrossing::Violated(v) => {
            let [i, j, k] = v.voters;
            println!(
                "not single-crossing: {} and {} swap between voters {i}, {j} and {k}",
                e.name(v.a),
                e.name(v.b)
            );
            Ok(Status::No)
        }
    }
}

fn gamma(path: &Path, dot: bool, edges: bool) -> Result<Status> {
    let g = read_election(path)?.multicrossing_graph();
    if dot {
        print!("{}", emit_dot(&g, "gamma"));
    } else if edges {
        print!("{}", g.edge_lines());
    } else {
        print!("{}", g.to_file_string());
    }
    Ok(Status::Yes)
}

fn sized(size: Option<usize>, family: &str) -> Result<usize> {
    size.with_context(|| format!("--family {family} needs --size"))
}

fn implement(args: ImplementArgs) -> Result<Status> {
    let graph = args.graph.as_deref().map(read_graph).transpose()?;
    let need_graph = |name: &str| {
        graph
            .as_ref()
            .with_context(|| format!("--family {name} needs a graph file"))
    };
    let result: ImplementationResult = match args.family {
        Some(Family::Path) => implement_path(sized(args.size, "path")?)?,
        Some(Family::Cycle) => implement_even_cycle(sized(args.size, "cycle")?)?,
        Some(Family::Clique) => implement_clique(numbered_names(sized(args.size, "clique")?))?,
        Some(Family::Empty) => implement_empty(numbered_names(sized(args.size, "empty")?))?,
        Some(Family::Tree) => match &args.root {
            Some(root) => implement_tree_rooted(need_graph("tree")?, root)?,
            None => implement_tree(need_graph("tree")?)?,
        },
        Some(Family::Permutation) => {
            let g = need_graph("permutation")?;
            let Some(d) = recognize_permutation(g).diagram() else {
                bail!("graph is not a permutation graph");
            };
            implement_permutation_graph(&d)?
        }
        Some(Family::General) => implement_general(need_graph("general")?)?,
        None => {
            let Some(g) = graph.as_ref() else {
                bail!("give a graph file or --family");
            };
            if let Some(d) = recognize_permutation(g).diagram() {
                implement_permutation_graph(&d)?
            } else if g.is_tree() {
                implement_tree(g)?
            } else {
                implement_general(g)?
            }
        }
    };
    println!("# voters_used {}", result.voters_used);
    print!("{}", result.election.to_file_string());
    Ok(Status::Yes)
}

fn analyze(
    problem: Problem,
    path: &Path,
    k: usize,
    budget: u64,
    force_general: bool,
) -> Result<Status> {
    let e = read_election(path)?;
    let opts = AnalysisOptions {
        node_budget: budget,
        force_general,
        cancel: None,
    };
    let r: AnalysisResult = match problem {
        Problem::Deletion => candidate_deletion(&e, k, &opts),
        Problem::Partition => candidate_partition(&e, k, &opts),
    };
    let mut value = serde_json::to_value(&r)?;
    value["schema"] = json!(SCHEMA);
    print_json(&value);
    Ok(if r.feasible {
        Status::Yes
    } else if r.budget_exceeded {
        Status::Budget
    } else {
        Status::No
    })
}

fn recognize(path: &Path) -> Result<Status> {
    let g = read_graph(path)?;
    let orientation = transitive_orientation(&g).orientation();
    let diagram = recognize_permutation(&g).diagram();
    let mut value = json!({
        "schema": SCHEMA,
        "vertices": g.num_vertices(),
        "edges": g.num_edges(),
        "comparability": orientation.is_some(),
        "permutation": diagram.is_some(),
    });
    if let Some(o) = &orientation {
        let arcs: Vec<[&str; 2]> = o
            .arcs()
            .iter()
            .map(|&(u, v)| [g.name(u), g.name(v)])
            .collect();
        value["orientation"] = json!(arcs);
    }
    if let Some(d) = &diagram {
        value["diagram"] = json!({ "pi1": d.pi1_names(), "pi2": d.pi2_names() });
    }
    print_json(&value);
    Ok(if diagram.is_some() {
        Status::Yes
    } else {
        Status::No
    })
}

fn ramsey(path: &Path) -> Result<Status> {
    let e = read_election(path)?;
    let r = ramsey_extract(&e);
    let members: Vec<&str> = r.members.iter().map(|&c| e.name(c)).collect();
    print_json(&json!({
        "schema": SCHEMA,
        "kind": r.kind,
        "size": members.len(),
        "bound": ramsey_bound(e.num_candidates(), e.num_voters()),
        "members": members,
    }));
    Ok(Status::Yes)
}

fn generate(cmd: Gen) -> Result<Status> {
    match cmd {
        Gen::RandomElection { m, n, seed } => {
            if m == 0 || n == 0 {
                bail!("--m and --n must be positive");
            }
            let e = random_election(m, n, &mut ChaCha8Rng::seed_from_u64(seed));
            print!("{}", e.to_file_string());
        }
        Gen::RandomGraph { v, p, seed } => {
            if !(0.0..=1.0).contains(&p) {
                bail!("--p must lie in [0, 1]");
            }
            let g = random_graph(v, p, &mut ChaCha8Rng::seed_from_u64(seed));
            print!("{}", g.to_file_string());
        }
    }
    Ok(Status::Yes)
}

fn run_oracle(path: &Path) -> Result<Status> {
    let g = read_graph(path)?;
    let or_refused =
        |r: Result<Value, oracle::TooLarge>| r.unwrap_or_else(|e| json!(e.to_string()));
    print_json(&json!({
        "schema": SCHEMA,
        "independent_set": or_refused(oracle::bf_independent_set(&g).map(|(size, _)| json!(size))),
        "chromatic_number": or_refused(oracle::bf_chromatic(&g).map(|(chi, _)| json!(chi))),
        "comparability": or_refused(oracle::bf_transitive_orientation(&g).map(Value::from)),
        "permutation": or_refused(oracle::bf_permutation_diagram(&g).map(Value::from)),
        "three_implementable": or_refused(oracle::bf_is_3_implementable(&g).map(Value::from)),
    }));
    Ok(Status::Yes)
}

fn run(cli: Cli) -> Result<Status> {
    match cli.command {
        Command::Check { election } => check(&election),
        Command::Gamma {
            election,
            dot,
            edges,
        } => gamma(&election, dot, edges),
        Command::Implement(args) => implement(args),
        Command::Fullsc { m } => {
            print!("{}", fully_single_crossing(m)?.to_file_string());
            Ok(Status::Yes)
        }
        Command::Analyze {
            problem,
            election,
            k,
            budget,
            force_general,
        } => analyze(problem, &election, k, budget, force_general),
        Command::Recognize { graph } => recognize(&graph),
        Command::Ramsey { election } => ramsey(&election),
        Command::Gen(cmd) => generate(cmd),
        Command::Oracle { graph } => run_oracle(&graph),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(status) => ExitCode::from(status as u8),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
