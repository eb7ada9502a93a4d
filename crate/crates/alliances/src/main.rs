//! Command-line front end: predicate checks, the three solvers, partition
//! inspection, reduction generation and verification, instance generators
//! and a small benchmark harness.
//!
//! Exit codes: 0 = found / yes, 1 = none / no, 2 = input or capacity
//! error.

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use alliances::alliance::{
    certify_sufficient_minimality, is_globally_minimal_within, is_locally_minimal,
    protection_report,
};
use alliances::diversity::{build_type_graph, compute_type_partition};
use alliances::exact::{
    annotated_max_gmda, max_gmda_bruteforce, mmo_bruteforce, rooted_exists_bruteforce,
};
use alliances::gen;
use alliances::graph::{parse_graph, Graph, VertexSet};
use alliances::nd::solve_nd;
use alliances::reduce::{
    extract_orientation, lift_clique_witness, lift_mmo_witness, reduce_clique_to_rooted,
    reduce_mmo_chain,
};
use alliances::report::{
    ChainRecord, CheckRecord, MinimalityMethod, ResultRecord, RootedRecord, VertexProtection,
};
use alliances::tree::{compute_dp, root_tree, solve_tree};
use alliances::weighted::parse_weighted_graph;
use alliances::Limits;

#[derive(Parser)]
#[command(name = "alliances", version, about = "Globally minimal defensive alliance toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the alliance predicates for one vertex set.
    Check(CheckArgs),
    /// Exact search by connected-subset enumeration.
    SolveBrute(SolveBruteArgs),
    /// Tree dynamic program.
    SolveTree(SolveTreeArgs),
    /// Neighbourhood-diversity class search.
    SolveNd(SolveNdArgs),
    /// Print the type partition and type graph.
    NdPartition(GraphArg),
    /// Generate a hardness-reduction instance.
    Reduce(ReduceArgs),
    /// Generate a reduction and verify it against the exact oracles.
    VerifyReduction(ReduceArgs),
    /// Generate a random instance file.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Time a solver over a batch of seeded instances.
    Bench(BenchArgs),
}

#[derive(Args)]
struct GraphArg {
    /// Plain-text graph file.
    #[arg(long)]
    graph: String,
}

#[derive(Args)]
struct CheckArgs {
    #[command(flatten)]
    graph: GraphArg,
    /// Comma-separated vertex list, e.g. 0,1,4.
    #[arg(long)]
    set: String,
}

#[derive(Args)]
struct SolveBruteArgs {
    #[command(flatten)]
    graph: GraphArg,
    /// Smallest solution size that counts as found.
    #[arg(long, default_value_t = 2)]
    kmin: usize,
    /// Ask for a minimal alliance containing this vertex instead of a
    /// maximum one.
    #[arg(long)]
    root: Option<usize>,
    /// Vertices every solution must contain.
    #[arg(long)]
    necessary: Option<String>,
    /// Degree-one vertices no solution may touch.
    #[arg(long)]
    forbidden: Option<String>,
}

#[derive(Args)]
struct SolveTreeArgs {
    #[command(flatten)]
    graph: GraphArg,
    #[arg(long, default_value_t = 2)]
    kmin: usize,
    /// Attach the per-vertex dynamic-programming table to the output.
    #[arg(long)]
    dump_dp: bool,
}

#[derive(Args)]
struct SolveNdArgs {
    #[command(flatten)]
    graph: GraphArg,
    #[arg(long, default_value_t = 2)]
    kmin: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReductionKind {
    /// Clique on a regular graph -> rooted minimal alliance.
    CliqueRooted,
    /// Weighted orientation -> annotated and plain alliance instances.
    MmoChain,
}

#[derive(Args)]
struct ReduceArgs {
    #[arg(long, value_enum)]
    kind: ReductionKind,
    /// Source graph file (weighted "u v w" lines for mmo-chain).
    #[arg(long)]
    graph: String,
    /// Clique size (clique-rooted only).
    #[arg(long)]
    k: Option<usize>,
    /// Outdegree bound (mmo-chain only).
    #[arg(long)]
    r: Option<u64>,
}

#[derive(Subcommand)]
enum GenCommand {
    /// Uniform random labelled tree.
    Tree(GenTreeArgs),
    /// Erdos-Renyi random graph.
    Gnp(GenGnpArgs),
    /// Random s-regular graph.
    Regular(GenRegularArgs),
    /// Random weighted graph.
    Weighted(GenWeightedArgs),
}

#[derive(Args)]
struct GenTreeArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    seed: u64,
}

#[derive(Args)]
struct GenGnpArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    p: f64,
    #[arg(long)]
    seed: u64,
}

#[derive(Args)]
struct GenRegularArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    s: usize,
    #[arg(long)]
    seed: u64,
}

#[derive(Args)]
struct GenWeightedArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: usize,
    #[arg(long, default_value_t = 3)]
    max_w: u64,
    #[arg(long)]
    seed: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum BenchKind {
    Tree,
    Gnp,
}

#[derive(Clone, Copy, ValueEnum)]
enum BenchSolver {
    Tree,
    Brute,
    Nd,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, value_enum)]
    kind: BenchKind,
    #[arg(long)]
    n: usize,
    /// Edge probability for gnp instances.
    #[arg(long, default_value_t = 0.4)]
    p: f64,
    #[arg(long, default_value_t = 5)]
    reps: u64,
    #[arg(long)]
    seed: u64,
    #[arg(long, value_enum)]
    solver: Option<BenchSolver>,
    #[arg(long, default_value_t = 2)]
    kmin: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> alliances::Result<u8> {
    let limits = Limits::from_env();
    match command {
        Command::Check(args) => check(&args, &limits),
        Command::SolveBrute(args) => solve_brute(&args, &limits),
        Command::SolveTree(args) => solve_tree_cmd(&args),
        Command::SolveNd(args) => solve_nd_cmd(&args, &limits),
        Command::NdPartition(args) => nd_partition(&args),
        Command::Reduce(args) => reduce(&args, false, &limits),
        Command::VerifyReduction(args) => reduce(&args, true, &limits),
        Command::Gen(cmd) => generate(cmd),
        Command::Bench(args) => bench(&args, &limits),
    }
}

fn load_graph(path: &str) -> alliances::Result<Graph> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| alliances::Error::InvalidInstance(format!("{path}: {e}")))?;
    parse_graph(&text)
}

fn parse_set(list: &str) -> alliances::Result<VertexSet> {
    let mut members = Vec::new();
    for part in list.split(',').filter(|p| !p.trim().is_empty()) {
        members.push(part.trim().parse().map_err(|_| {
            alliances::Error::InvalidInstance(format!("bad vertex index {part:?}"))
        })?);
    }
    Ok(VertexSet::new(members))
}

fn emit<T: serde::Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

fn check(args: &CheckArgs, limits: &Limits) -> alliances::Result<u8> {
    let start = Instant::now();
    let g = load_graph(&args.graph.graph)?;
    let s = parse_set(&args.set)?;
    let report = protection_report(&g, &s)?;
    let locally = is_locally_minimal(&g, &s)?;
    let globally = if s.len() <= limits.subset_members {
        Some(is_globally_minimal_within(&g, &s, limits.subset_members)?)
    } else {
        None
    };
    let certificate = certify_sufficient_minimality(&g, &s)?;
    let record = CheckRecord {
        alliance: report.is_alliance,
        connected: report.connected,
        certificate,
        per_vertex: report
            .statuses
            .into_iter()
            .map(|(vertex, status)| VertexProtection { vertex, status })
            .collect(),
        locally_minimal: locally,
        globally_minimal: globally,
        time_ms: start.elapsed().as_millis() as u64,
    };
    emit(&record);
    Ok(if record.alliance { 0 } else { 1 })
}

fn emit_result(
    g: &Graph,
    result: &alliances::exact::SolveResult,
    method: MinimalityMethod,
    class_counts: Option<Vec<usize>>,
    start: Instant,
) -> alliances::Result<u8> {
    let elapsed = start.elapsed().as_millis() as u64;
    match &result.witness {
        Some(w) => {
            let mut record = ResultRecord::found(g, w, method, elapsed)?;
            record.class_counts = class_counts;
            emit(&record);
            Ok(0)
        }
        None => {
            emit(&ResultRecord::none(elapsed));
            Ok(1)
        }
    }
}

fn solve_brute(args: &SolveBruteArgs, limits: &Limits) -> alliances::Result<u8> {
    let start = Instant::now();
    let g = load_graph(&args.graph.graph)?;
    let result = if let Some(root) = args.root {
        rooted_exists_bruteforce(&g, root, limits)?
    } else if args.necessary.is_some() || args.forbidden.is_some() {
        let necessary = parse_set(args.necessary.as_deref().unwrap_or(""))?;
        let forbidden = parse_set(args.forbidden.as_deref().unwrap_or(""))?;
        annotated_max_gmda(&g, &necessary, &forbidden, args.kmin, limits)?
    } else {
        max_gmda_bruteforce(&g, args.kmin, limits)?
    };
    emit_result(&g, &result, MinimalityMethod::Enumeration, None, start)
}

fn solve_tree_cmd(args: &SolveTreeArgs) -> alliances::Result<u8> {
    let start = Instant::now();
    let g = load_graph(&args.graph.graph)?;
    let result = solve_tree(&g, args.kmin)?;
    if args.dump_dp {
        let t = root_tree(&g)?;
        let dp = compute_dp(&g, &t);
        let table: std::collections::BTreeMap<usize, serde_json::Value> = (0..g.vertex_count())
            .map(|v| {
                (
                    v,
                    serde_json::json!({
                        "out": dp.out[v],
                        "in_without_parent": dp.in_without_parent[v],
                        "in_with_parent": dp.in_with_parent[v],
                    }),
                )
            })
            .collect();
        emit(&serde_json::json!({ "dp": table }));
    }
    emit_result(&g, &result, MinimalityMethod::MarginalCertificate, None, start)
}

fn solve_nd_cmd(args: &SolveNdArgs, limits: &Limits) -> alliances::Result<u8> {
    let start = Instant::now();
    let g = load_graph(&args.graph.graph)?;
    let nd = solve_nd(&g, args.kmin, limits)?;
    let method = if nd.enumerated {
        MinimalityMethod::Enumeration
    } else {
        MinimalityMethod::ClassCertificate
    };
    emit_result(&g, &nd.result, method, nd.counts, start)
}

fn nd_partition(args: &GraphArg) -> alliances::Result<u8> {
    let g = load_graph(&args.graph)?;
    let p = compute_type_partition(&g)?;
    let tg = build_type_graph(&g, &p)?;
    emit(&serde_json::json!({
        "classes": p.classes,
        "kinds": p.kinds,
        "sizes": p.sizes(),
        "type_graph_edges": tg.edges(),
    }));
    Ok(0)
}

fn reduce(args: &ReduceArgs, verify: bool, limits: &Limits) -> alliances::Result<u8> {
    match args.kind {
        ReductionKind::CliqueRooted => {
            let k = args.k.ok_or_else(|| {
                alliances::Error::InvalidInstance("--k is required for clique-rooted".into())
            })?;
            let g = load_graph(&args.graph)?;
            let inst = reduce_clique_to_rooted(&g, k)?;
            if !verify {
                emit(&RootedRecord::from(&inst));
                return Ok(0);
            }
            let clique = find_clique(&g, k, limits)?;
            let rooted = rooted_exists_bruteforce(&inst.graph, inst.root, limits)?;
            let witness_ok = match &clique {
                Some(c) => {
                    let lifted = lift_clique_witness(&inst, c)?;
                    certify_sufficient_minimality(&inst.graph, &lifted)?
                        && rooted.witness.as_ref().is_some_and(|w| w.contains(inst.root))
                }
                None => true,
            };
            let agree = clique.is_some() == rooted.is_found();
            emit(&serde_json::json!({
                "kind": "clique-rooted",
                "clique_side": clique.is_some(),
                "rooted_side": rooted.is_found(),
                "witness_verified": witness_ok,
                "match": agree && witness_ok,
            }));
            Ok(u8::from(!(agree && witness_ok)))
        }
        ReductionKind::MmoChain => {
            let r = args.r.ok_or_else(|| {
                alliances::Error::InvalidInstance("--r is required for mmo-chain".into())
            })?;
            let text = std::fs::read_to_string(&args.graph)
                .map_err(|e| alliances::Error::InvalidInstance(format!("{}: {e}", args.graph)))?;
            let gw = parse_weighted_graph(&text)?;
            let chain = reduce_mmo_chain(&gw, r)?;
            if !verify {
                emit(&ChainRecord::from(&chain));
                return Ok(0);
            }
            let orientation = mmo_bruteforce(&gw, r, limits)?;
            let report = match &orientation {
                Some(o) => {
                    let s = lift_mmo_witness(&chain.fn_instance, &gw, o, r)?;
                    let certified = certify_sufficient_minimality(&chain.fn_instance.graph, &s)?;
                    let round_trip = extract_orientation(&chain.fn_instance, &s)? == *o;
                    serde_json::json!({
                        "kind": "mmo-chain",
                        "orientation_found": true,
                        "k": chain.fn_instance.k,
                        "lifted_size": s.len(),
                        "certified": certified,
                        "round_trip": round_trip,
                        "verified": certified && round_trip && s.len() == chain.fn_instance.k,
                    })
                }
                None => serde_json::json!({
                    "kind": "mmo-chain",
                    "orientation_found": false,
                    "k": chain.fn_instance.k,
                    "verified": true,
                }),
            };
            let ok = report["verified"].as_bool().unwrap_or(false);
            emit(&report);
            Ok(u8::from(!ok))
        }
    }
}

/// Smallest-index `k`-clique of `g`, by bitmask sweep.
fn find_clique(g: &Graph, k: usize, limits: &Limits) -> alliances::Result<Option<VertexSet>> {
    let n = g.vertex_count();
    if n > limits.brute_vertices {
        return Err(alliances::Error::Capacity {
            what: "clique enumeration",
            limit: limits.brute_vertices,
            actual: n,
        });
    }
    for mask in 0u64..(1 << n) {
        if mask.count_ones() as usize != k {
            continue;
        }
        let members: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let is_clique = members
            .iter()
            .enumerate()
            .all(|(i, &u)| members[i + 1..].iter().all(|&v| g.has_edge(u, v)));
        if is_clique {
            return Ok(Some(VertexSet::new(members)));
        }
    }
    Ok(None)
}

fn generate(cmd: GenCommand) -> alliances::Result<u8> {
    let text = match cmd {
        GenCommand::Tree(a) => {
            if a.n == 0 {
                return Err(alliances::Error::InfeasibleParams("tree needs n >= 1".into()));
            }
            gen::random_tree(a.n, a.seed).to_text()
        }
        GenCommand::Gnp(a) => gen::random_gnp(a.n, a.p, a.seed)?.to_text(),
        GenCommand::Regular(a) => gen::random_regular(a.n, a.s, a.seed)?.to_text(),
        GenCommand::Weighted(a) => gen::random_weighted(a.n, a.m, a.max_w, a.seed)?.to_text(),
    };
    print!("{text}");
    Ok(0)
}

fn bench(args: &BenchArgs, limits: &Limits) -> alliances::Result<u8> {
    let solver = args.solver.unwrap_or(match args.kind {
        BenchKind::Tree => BenchSolver::Tree,
        BenchKind::Gnp => BenchSolver::Brute,
    });
    let mut runs = Vec::new();
    let mut total_ms = 0u64;
    for rep in 0..args.reps {
        let seed = args.seed.wrapping_add(rep);
        let g = match args.kind {
            BenchKind::Tree => gen::random_tree(args.n, seed),
            BenchKind::Gnp => gen::random_gnp(args.n, args.p, seed)?,
        };
        let start = Instant::now();
        let size = match solver {
            BenchSolver::Tree => solve_tree(&g, args.kmin)?.size(),
            BenchSolver::Brute => max_gmda_bruteforce(&g, args.kmin, limits)?.size(),
            BenchSolver::Nd => solve_nd(&g, args.kmin, limits)?.result.size(),
        };
        let ms = start.elapsed().as_millis() as u64;
        total_ms += ms;
        runs.push(serde_json::json!({
            "seed": seed,
            "n": g.vertex_count(),
            "m": g.edge_count(),
            "size": size,
            "time_ms": ms,
        }));
    }
    emit(&serde_json::json!({
        "runs": runs,
        "total_ms": total_ms,
        "mean_ms": total_ms as f64 / args.reps.max(1) as f64,
    }));
    Ok(0)
}
