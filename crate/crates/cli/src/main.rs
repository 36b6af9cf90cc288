use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use rst_core::algo::{pr_rst, AlgoConfig, Registry};
use rst_core::bench::{bench_row, write_csv};
use rst_core::source::GraphSource;
use rst_core::{build_csr, forest_depth, generate, validate_rooted_forest, Graph, GraphKind, RootedForest};

#[derive(Parser)]
#[command(name = "rst", version, about = "Rooted spanning forest construction and benchmarking")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct AlgoOpts {
    /// Vertex the forest is rooted at (its component only).
    #[arg(long, default_value_t = 0)]
    root: usize,
    /// Seed for `gen:random` / `gen:tree` sources without an explicit seed.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// PR-RST pointer-jump rounds per barrier.
    #[arg(long, default_value_t = pr_rst::DEFAULT_JUMP_BATCH)]
    jump_batch: usize,
    /// Worker threads per step.
    #[arg(long, default_value_t = 1)]
    workers: usize,
}

impl AlgoOpts {
    fn config(&self) -> AlgoConfig {
        AlgoConfig { jump_batch: self.jump_batch, workers: self.workers }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run one algorithm on one graph and validate the result.
    Run {
        /// Edge-list file or generator spec such as `gen:path:1024`.
        source: String,
        /// Algorithm name (alternative to --algo).
        algorithm: Option<String>,
        #[arg(long)]
        algo: Option<String>,
        #[command(flatten)]
        opts: AlgoOpts,
        /// Write the parent array, one entry per line.
        #[arg(long)]
        dump_parents: Option<PathBuf>,
    },
    /// Benchmark algorithms: one warm-up and five timed runs per row.
    Bench {
        #[arg(required = true)]
        sources: Vec<String>,
        /// Algorithms to run; defaults to all registered ones.
        #[arg(long, value_delimiter = ',')]
        algo: Vec<String>,
        #[command(flatten)]
        opts: AlgoOpts,
        /// CSV output path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Vertex, edge and component counts plus BFS-tree depth from vertex 0.
    Stats {
        source: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Write a synthetic graph in edge-list format.
    Gen {
        /// path | star | grid | random | complete | tree
        kind: String,
        params: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a parent-array dump against a graph.
    Validate {
        source: String,
        parents: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn load_graph(spec: &str, seed: u64) -> Result<Graph> {
    let source = GraphSource::parse(spec, seed)?;
    if let GraphSource::File(path) = &source {
        if !path.exists() {
            bail!("file not found: {}", path.display());
        }
    }
    let el = source.load().with_context(|| format!("loading {spec}"))?;
    Ok(build_csr(&el))
}

fn output(path: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p).with_context(|| format!("creating {}", p.display()))?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn read_parents(path: &Path) -> Result<Vec<usize>> {
    let file = File::open(path).with_context(|| format!("file not found: {}", path.display()))?;
    let mut parent = Vec::new();
    for (i, line) in BufReader::new(file).lines().enumerate() {
        let line = line?;
        let t = line.trim();
        if t.is_empty() {
            continue;
        }
        parent.push(t.parse().with_context(|| format!("{}:{}: bad parent `{t}`", path.display(), i + 1))?);
    }
    Ok(parent)
}

fn run(source: &str, algo: &str, opts: AlgoOpts, dump: Option<&Path>) -> Result<bool> {
    let g = load_graph(source, opts.seed)?;
    let alg = Registry::default().create(algo, &opts.config())?;
    let (forest, report) = alg.run(&g, opts.root)?;
    let v = validate_rooted_forest(&g, &forest)?;
    println!(
        "algorithm={} n={} m={} root={} steps={} work={} depth={} components={} valid={} time_ms={:.3}",
        alg.name(),
        g.num_vertices(),
        g.num_edges(),
        opts.root,
        report.steps,
        report.work,
        v.max_depth(),
        forest.roots.len(),
        v.ok,
        report.wall_time.as_secs_f64() * 1e3,
    );
    for violation in v.violations.iter().take(10) {
        eprintln!("violation [{}] at {}: {}", violation.rule, violation.at, violation.message);
    }
    if let Some(path) = dump {
        let mut w = output(Some(path))?;
        for p in &forest.parent {
            writeln!(w, "{p}")?;
        }
        w.flush()?;
    }
    Ok(v.ok)
}

fn bench(sources: &[String], algos: &[String], opts: AlgoOpts, out: Option<&Path>) -> Result<bool> {
    let registry = Registry::default();
    let names: Vec<String> =
        if algos.is_empty() { registry.names().map(str::to_string).collect() } else { algos.to_vec() };
    let algs = names.iter().map(|a| registry.create(a, &opts.config())).collect::<Result<Vec<_>, _>>()?;
    let mut rows = Vec::new();
    for source in sources {
        let g = load_graph(source, opts.seed)?;
        for alg in &algs {
            rows.push(bench_row(source, &g, alg.as_ref(), opts.root, &mut |_| {}));
        }
    }
    write_csv(&rows, output(out)?)?;
    Ok(rows.iter().all(|r| r.valid))
}

fn stats(source: &str, seed: u64) -> Result<()> {
    let g = load_graph(source, seed)?;
    let (forest, _) = Registry::default().create("bfs", &AlgoConfig::default())?.run(&g, 0)?;
    let depth = forest_depth(&forest)?;
    println!("n={}", g.num_vertices());
    println!("m={}", g.num_edges());
    println!("components={}", forest.roots.len());
    println!("depth={}", depth.per_root.get(&0).copied().unwrap_or(0));
    Ok(())
}

fn gen(kind: &str, params: &[String], seed: u64, out: Option<&Path>) -> Result<()> {
    let parts: Vec<&str> = std::iter::once(kind).chain(params.iter().map(String::as_str)).collect();
    let kind = GraphKind::from_parts(&parts, seed)?;
    let mut w = output(out)?;
    generate(&kind)?.write_to(&mut w)?;
    w.flush()?;
    Ok(())
}

fn validate(source: &str, parents: &Path, seed: u64) -> Result<bool> {
    let g = load_graph(source, seed)?;
    let forest = RootedForest::from_parents(read_parents(parents)?);
    let v = validate_rooted_forest(&g, &forest)?;
    println!("valid={} components={} depth={} violations={}", v.ok, v.components_found, v.max_depth(), v.violations.len());
    for violation in &v.violations {
        println!("[{}] at {}: {}", violation.rule, violation.at, violation.message);
    }
    Ok(v.ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Run { source, algorithm, algo, opts, dump_parents } => {
            let name = algo.or(algorithm).unwrap_or_else(|| "bfs".to_string());
            run(&source, &name, opts, dump_parents.as_deref())
        }
        Command::Bench { sources, algo, opts, out } => bench(&sources, &algo, opts, out.as_deref()),
        Command::Stats { source, seed } => stats(&source, seed).map(|_| true),
        Command::Gen { kind, params, seed, out } => gen(&kind, &params, seed, out.as_deref()).map(|_| true),
        Command::Validate { source, parents, seed } => validate(&source, &parents, seed),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
