use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use tempsep::core_fpt::{padded_core, solve_core_fpt, CoreFptOptions, DEFAULT_MAX_CORE};
use tempsep::exact::{brute_force_decide, brute_force_lbs, brute_force_min_separator, branch_min_separator, branch_solve};
use tempsep::generators::{
    gen_from_vertex_cover, gen_lbs_stack, gen_planar_lbs, gen_random_sparse, gen_random_temporal, PlanarLbcInstance,
};
use tempsep::io::{parse_instance, parse_static_graph, parse_traversal_graph, write_instance, write_static_graph};
use tempsep::pathfinding::{is_separator, ssstp, ssstp_traversal, StrictStaticExpansion};
use tempsep::preprocess::{normalize_instance, normalize_time_labels, reduce_instance, ReduceOutcome};
use tempsep::tau4::{build_dpcg, solve_strict_tau4};
use tempsep::{PathModel, Query, SeparatorInstance, SeparatorResult, SolveError, TemporalGraph, Vertex};

#[derive(Parser)]
#[command(name = "tempsep", version, about = "Minimum temporal (s, z)-separators")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether at most k vertices separate s from z.
    Solve(SolveArgs),
    /// Apply the strict reduction rules.
    Reduce(QueryArgs),
    /// Compress time labels to 1..tau.
    Normalize {
        input: PathBuf,
    },
    /// Shortest strict temporal path lengths from one vertex.
    Ssstp {
        input: PathBuf,
        #[arg(long)]
        source: Vertex,
        #[arg(long, value_enum, default_value_t = SsstpModel::Strict)]
        model: SsstpModel,
    },
    /// Dump the strict static expansion as `from to weight kind` lines.
    Expansion {
        input: PathBuf,
        #[arg(long)]
        source: Vertex,
        #[arg(long)]
        sink: Option<Vertex>,
    },
    /// Print the temporal core.
    Core {
        input: PathBuf,
    },
    /// Emit an instance from one of the generator families.
    #[command(subcommand)]
    Generate(Generate),
    /// Check a proposed separator.
    Verify {
        #[command(flatten)]
        query: QueryArgs,
        /// Comma-separated vertex list.
        #[arg(long, allow_hyphen_values = true)]
        separator: String,
    },
    /// Minimum length-bounded separator of a static graph by enumeration.
    OracleLbs {
        input: PathBuf,
        #[arg(long)]
        s: Vertex,
        #[arg(long)]
        z: Vertex,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Timing harness.
    #[command(subcommand)]
    Bench(Bench),
}

#[derive(Args)]
struct QueryArgs {
    /// Instance file, or `-` for standard input.
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = ModelArg::Strict)]
    model: ModelArg,
    /// Overrides the query line.
    #[arg(long)]
    s: Option<Vertex>,
    #[arg(long)]
    z: Option<Vertex>,
    #[arg(long)]
    k: Option<usize>,
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    query: QueryArgs,
    #[arg(long, value_enum, default_value_t = Algo::Auto)]
    algo: Algo,
    #[arg(long)]
    json: bool,
    /// Worker threads for core enumeration.
    #[arg(long, env = "TEMPSEP_THREADS", default_value_t = 1)]
    threads: usize,
    #[arg(long, default_value_t = DEFAULT_MAX_CORE)]
    max_core: usize,
    /// Print the directed path cover graph (tau4 only).
    #[arg(long)]
    emit_dpcg: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModelArg {
    Strict,
    Nonstrict,
}

impl From<ModelArg> for PathModel {
    fn from(m: ModelArg) -> Self {
        match m {
            ModelArg::Strict => PathModel::Strict,
            ModelArg::Nonstrict => PathModel::NonStrict,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SsstpModel {
    Strict,
    Traversal,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algo {
    Auto,
    Tau4,
    Brute,
    Branch,
    CoreFpt,
}

impl Algo {
    fn name(self) -> &'static str {
        match self {
            Algo::Auto => "auto",
            Algo::Tau4 => "tau4",
            Algo::Brute => "brute",
            Algo::Branch => "branch",
            Algo::CoreFpt => "core-fpt",
        }
    }
}

#[derive(Subcommand)]
enum Generate {
    /// Non-strict tau = 2 instance from a vertex cover instance.
    Vc {
        /// Static graph file.
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        with_optimum: bool,
    },
    /// Strict instance with every layer a copy of the static graph.
    LbsStack {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        s: Vertex,
        #[arg(long)]
        z: Vertex,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        with_optimum: bool,
    },
    /// Static length-bounded instance from an embedded cost graph (JSON).
    PlanarLbs {
        #[arg(long)]
        input: PathBuf,
        /// Feed the output through lbs-stack and emit a temporal instance.
        #[arg(long)]
        stack: bool,
    },
    /// Seeded random temporal graph.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        tau: u64,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        s: Option<Vertex>,
        #[arg(long)]
        z: Option<Vertex>,
        #[arg(long, default_value_t = 0)]
        k: usize,
        /// Never put an edge between s and z.
        #[arg(long)]
        forbid_sz: bool,
        #[arg(long, value_enum, default_value_t = ModelArg::Strict)]
        model: ModelArg,
        #[arg(long)]
        with_optimum: bool,
    },
}

#[derive(Subcommand)]
enum Bench {
    /// Time single-source shortest strict paths at several edge counts.
    Ssstp {
        /// Comma-separated edge counts; `K` and `M` suffixes allowed.
        #[arg(long, default_value = "1M,2M")]
        scale: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn read_input(path: &Path) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn load_query(q: &QueryArgs) -> Result<SeparatorInstance> {
    load_query_with(q, true)
}

/// Without `need_k` a missing budget defaults to `n`.
fn load_query_with(q: &QueryArgs, need_k: bool) -> Result<SeparatorInstance> {
    let file = parse_instance(&read_input(&q.input)?)?;
    let base = file.query;
    let pick = |flag: Option<usize>, field: Option<usize>, name: &str| {
        flag.or(field).ok_or_else(|| anyhow!("no {name} given: pass --{name} or add a query line"))
    };
    let s = pick(q.s, base.map(|b| b.s), "s")?;
    let z = pick(q.z, base.map(|b| b.z), "z")?;
    let k = match pick(q.k, base.map(|b| b.k), "k") {
        Err(_) if !need_k => file.graph.n(),
        r => r?,
    };
    Ok(SeparatorInstance::new(file.graph, s, z, k, q.model.into())?)
}

fn vertex_list(v: &[Vertex]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Solve(args) => solve(args),
        Command::Reduce(q) => {
            let inst = load_query(&q)?;
            match reduce_instance(&inst)? {
                ReduceOutcome::Decided(r) if r.feasible => {
                    println!("DECIDED yes");
                    println!("{}", vertex_list(&r.separator));
                    Ok(0)
                }
                ReduceOutcome::Decided(r) => {
                    println!("DECIDED no");
                    println!("{}", r.witness.map(|p| vertex_list(&p.vertices())).unwrap_or_default());
                    Ok(1)
                }
                ReduceOutcome::Reduced { instance, removed } => {
                    println!("REDUCED {}", instance.k);
                    println!("# removed {}", vertex_list(&removed));
                    print!("{}", write_instance(&instance.graph, Some(&instance.query())));
                    Ok(0)
                }
            }
        }
        Command::Normalize { input } => {
            let file = parse_instance(&read_input(&input)?)?;
            print!("{}", write_instance(&normalize_time_labels(&file.graph), file.query.as_ref()));
            Ok(0)
        }
        Command::Ssstp { input, source, model } => {
            let text = read_input(&input)?;
            let dist: Vec<Option<u64>> = match model {
                SsstpModel::Strict => {
                    let g = parse_instance(&text)?.graph;
                    check_vertex(source, g.n())?;
                    let d = ssstp(&g, source);
                    (0..g.n()).map(|v| d.get(v).map(|x| x as u64)).collect()
                }
                SsstpModel::Traversal => {
                    let d = parse_traversal_graph(&text)?;
                    check_vertex(source, d.n())?;
                    ssstp_traversal(&d, source)
                }
            };
            for (v, d) in dist.iter().enumerate() {
                match d {
                    Some(x) => println!("{v} {x}"),
                    None => println!("{v} inf"),
                }
            }
            Ok(0)
        }
        Command::Expansion { input, source, sink } => {
            let g = parse_instance(&read_input(&input)?)?.graph;
            check_vertex(source, g.n())?;
            let h = match sink {
                Some(z) => {
                    check_vertex(z, g.n())?;
                    StrictStaticExpansion::build(&g, source, z)
                }
                None => StrictStaticExpansion::build_from_source(&g, source),
            };
            for a in h.arcs() {
                println!("{} {} {} {}", a.from, a.to, a.weight, a.kind.name());
            }
            Ok(0)
        }
        Command::Core { input } => {
            let g = parse_instance(&read_input(&input)?)?.graph;
            let core = g.temporal_core();
            println!("core {} {}", core.len(), vertex_list(&core));
            Ok(0)
        }
        Command::Generate(g) => generate(g),
        Command::Verify { query, separator } => {
            let inst = load_query_with(&query, false)?;
            let sep = parse_vertex_list(&separator)?;
            for &v in &sep {
                check_vertex(v, inst.graph.n())?;
            }
            if is_separator(&inst.graph, inst.s, inst.z, &sep, inst.model) {
                println!("VALID");
                Ok(0)
            } else {
                println!("INVALID");
                Ok(1)
            }
        }
        Command::OracleLbs { input, s, z, l, k } => {
            let g = parse_static_graph(&read_input(&input)?)?;
            let k = k.unwrap_or(g.n());
            match brute_force_lbs(&g, s, z, k, l)? {
                Some(sep) => {
                    println!("YES {} {}", sep.len(), vertex_list(&sep));
                    Ok(0)
                }
                None => {
                    println!("NO");
                    Ok(1)
                }
            }
        }
        Command::Bench(Bench::Ssstp { scale, seed }) => bench_ssstp(&scale, seed),
    }
}

fn check_vertex(v: Vertex, n: usize) -> Result<()> {
    if v >= n {
        bail!("vertex {v} out of range for n = {n}");
    }
    Ok(())
}

fn parse_vertex_list(s: &str) -> Result<Vec<Vertex>> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<Vertex>().with_context(|| format!("bad vertex `{t}`")))
        .collect()
}

fn auto_algo(inst: &SeparatorInstance, max_core: usize) -> Algo {
    match inst.model {
        PathModel::Strict if normalize_instance(inst).graph.tau() <= 4 => Algo::Tau4,
        PathModel::NonStrict if padded_core(&inst.graph, inst.s, inst.z).len() <= max_core => Algo::CoreFpt,
        _ => Algo::Branch,
    }
}

fn solve(args: SolveArgs) -> Result<u8> {
    let inst = load_query(&args.query)?;
    let algo = match args.algo {
        Algo::Auto => auto_algo(&inst, args.max_core),
        a => a,
    };
    let start = Instant::now();
    if args.emit_dpcg {
        if algo != Algo::Tau4 {
            bail!("--emit-dpcg needs the tau4 algorithm");
        }
        emit_dpcg(&inst)?;
    }
    let result = match algo {
        Algo::Tau4 => solve_strict_tau4(&inst)?,
        Algo::Brute => brute_force_decide(&inst)?,
        Algo::Branch => branch_solve(&inst)?,
        Algo::CoreFpt => {
            let opts = CoreFptOptions { max_core: args.max_core, parallel: args.threads > 1 };
            let pool = rayon::ThreadPoolBuilder::new().num_threads(args.threads.max(1)).build()?;
            match pool.install(|| solve_core_fpt(&inst, opts)) {
                Err(SolveError::CoreTooLarge { size, limit }) => {
                    bail!("temporal core plus terminals has {size} vertices, above --max-core {limit}")
                }
                r => r?,
            }
        }
        Algo::Auto => unreachable!("resolved above"),
    };
    let wall_ms = start.elapsed().as_secs_f64() * 1000.0;
    if result.feasible
        && (result.separator.len() > inst.k || !is_separator(&inst.graph, inst.s, inst.z, &result.separator, inst.model))
    {
        bail!("solver {} returned an invalid separator {:?}", algo.name(), result.separator);
    }
    report(&args, algo, &inst, &result, wall_ms);
    Ok(if result.feasible { 0 } else { 1 })
}

fn report(args: &SolveArgs, algo: Algo, inst: &SeparatorInstance, r: &SeparatorResult, wall_ms: f64) {
    let witness = r.witness.as_ref().map(|p| p.to_string());
    if args.json {
        let v = json!({
            "algo": algo.name(),
            "decision": if r.feasible { "yes" } else { "no" },
            "k": inst.k,
            "separator": r.separator,
            "witness": witness,
            "wall_ms": (wall_ms * 1000.0).round() / 1000.0,
        });
        println!("{v}");
        return;
    }
    println!("algo {}", algo.name());
    if r.feasible {
        println!("YES {} {}", r.separator.len(), vertex_list(&r.separator));
    } else {
        println!("NO");
        if let Some(w) = witness {
            println!("witness {w}");
        }
    }
    println!("wall_ms {wall_ms:.3}");
}

fn emit_dpcg(inst: &SeparatorInstance) -> Result<()> {
    let norm = normalize_instance(inst);
    let ReduceOutcome::Reduced { instance, .. } = reduce_instance(&norm)? else {
        println!("# dpcg: decided during reduction");
        return Ok(());
    };
    let d = build_dpcg(&instance.graph, instance.s, instance.z)?;
    for (v, c) in d.classes.iter().enumerate() {
        if let Some(c) = c {
            println!("# class {v} {c}");
        }
    }
    let mut arcs: Vec<_> = d.digraph.arcs().collect();
    arcs.sort_unstable();
    for (a, b) in arcs {
        println!("# arc {a} {b}");
    }
    Ok(())
}

fn print_optimum(result: Result<Option<Vec<Vertex>>, SolveError>) {
    match result {
        Ok(Some(sep)) => println!("# optimum {} {}", sep.len(), vertex_list(&sep)),
        Ok(None) => println!("# optimum none"),
        Err(SolveError::TooLarge { n, limit }) => println!("# optimum skipped n={n} limit={limit}"),
        Err(e) => println!("# optimum error {e}"),
    }
}

fn generate(g: Generate) -> Result<u8> {
    match g {
        Generate::Vc { graph, k, with_optimum } => {
            let sg = parse_static_graph(&read_input(&graph)?)?;
            let inst = gen_from_vertex_cover(&sg, k);
            print!("{}", write_instance(&inst.graph, Some(&inst.query())));
            if with_optimum {
                print_optimum(brute_force_min_separator(&inst.graph, inst.s, inst.z, inst.model).or_else(|e| match e {
                    SolveError::TooLarge { .. } => branch_min_separator(&inst.graph, inst.s, inst.z, inst.model),
                    e => Err(e),
                }));
            }
        }
        Generate::LbsStack { graph, s, z, k, l, with_optimum } => {
            let sg = parse_static_graph(&read_input(&graph)?)?;
            let inst = gen_lbs_stack(&sg, s, z, k, l)?;
            print!("{}", write_instance(&inst.graph, Some(&inst.query())));
            if with_optimum {
                print_optimum(brute_force_min_separator(&inst.graph, s, z, PathModel::Strict));
            }
        }
        Generate::PlanarLbs { input, stack } => {
            let src = parse_planar_json(&read_input(&input)?)?;
            let out = gen_planar_lbs(&src)?;
            if stack {
                let inst = gen_lbs_stack(&out.graph, out.s, out.z, out.k, out.l)?;
                print!("{}", write_instance(&inst.graph, Some(&inst.query())));
            } else {
                println!("# s {} z {} l {} k {} k_prime {}", out.s, out.z, out.l, out.k, out.k_prime);
                print!("{}", write_static_graph(&out.graph));
            }
        }
        Generate::Random { n, tau, p, seed, s, z, k, forbid_sz, model, with_optimum } => {
            let (s, z) = (s.unwrap_or(0), z.unwrap_or(n.saturating_sub(1)));
            let forbid = forbid_sz.then_some((s, z));
            let g = gen_random_temporal(n, tau, p, seed, forbid)?;
            println!("# seed {seed}");
            print!("{}", write_instance(&g, Some(&Query { s, z, k })));
            if with_optimum {
                print_optimum(brute_force_min_separator(&g, s, z, model.into()));
            }
        }
    }
    Ok(0)
}

fn parse_planar_json(text: &str) -> Result<PlanarLbcInstance> {
    let v: serde_json::Value = serde_json::from_str(text)?;
    let num = |key: &str| -> Result<usize> {
        v[key].as_u64().map(|x| x as usize).ok_or_else(|| anyhow!("missing integer field `{key}`"))
    };
    let mut edges = Vec::new();
    let mut costs = Vec::new();
    for e in v["edges"].as_array().ok_or_else(|| anyhow!("missing array `edges`"))? {
        let t: Vec<usize> = e
            .as_array()
            .map(|a| a.iter().filter_map(|x| x.as_u64().map(|x| x as usize)).collect())
            .unwrap_or_default();
        let [a, b, c] = t[..] else {
            bail!("edge entries are [u, v, cost]");
        };
        edges.push((a, b));
        costs.push(c);
    }
    let rotation = v["rotation"]
        .as_array()
        .ok_or_else(|| anyhow!("missing array `rotation`"))?
        .iter()
        .map(|r| {
            r.as_array()
                .map(|a| a.iter().filter_map(|x| x.as_u64().map(|x| x as usize)).collect())
                .ok_or_else(|| anyhow!("rotation entries are vertex lists"))
        })
        .collect::<Result<Vec<Vec<usize>>>>()?;
    Ok(PlanarLbcInstance { n: num("n")?, edges, costs, rotation, s: num("s")?, z: num("z")?, l: num("l")?, k: num("k")? })
}

fn parse_scale(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|t| {
            let t = t.trim();
            let (digits, mult) = match t.chars().last() {
                Some('k' | 'K') => (&t[..t.len() - 1], 1_000),
                Some('m' | 'M') => (&t[..t.len() - 1], 1_000_000),
                _ => (t, 1),
            };
            Ok(digits.parse::<usize>().with_context(|| format!("bad scale `{t}`"))? * mult)
        })
        .collect()
}

fn bench_ssstp(scale: &str, seed: u64) -> Result<u8> {
    let sizes = parse_scale(scale)?;
    let mut times = Vec::new();
    for &m in &sizes {
        let g: TemporalGraph = gen_random_sparse((m / 8).max(2), m, 64, seed)?;
        let start = Instant::now();
        let d = ssstp(&g, 0);
        let ms = start.elapsed().as_secs_f64() * 1000.0;
        let reached = (0..g.n()).filter(|&v| d.is_reachable(v)).count();
        println!("edges {} ms {ms:.1} reached {reached} seed {seed}", g.num_edges());
        times.push(ms);
    }
    if times.len() >= 2 {
        println!("ratio {:.3}", times[times.len() - 1] / times[0]);
    }
    Ok(0)
}
