use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use bkcolor::oracles::Oracle;
use bkcolor::{corpus, Graph, Rational};
use bkcolor_cli::commands::{self, Output, TransversalMode};
use bkcolor_cli::formats::{self, Format};
use bkcolor_cli::suites::{generate_corpus, resolve, CorpusSpec, Filters, Source};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "bkcolor", version, about = "Graph-coloring algorithms and theorem verification on small graphs")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Input format for graphs.
    #[arg(long, value_enum, default_value = "graph6", global = true)]
    format: Format,
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for random corpora and partition sampling.
    #[arg(long, default_value_t = 7, global = true)]
    seed: u64,
    /// Largest order for exhaustive corpora, and the oracle bound's floor.
    #[arg(long, default_value_t = 8, global = true)]
    max_n: usize,
    /// Print stage trace lines as JSON, one per line, before the result.
    #[arg(long, global = true)]
    trace: bool,
    /// Worker threads (0 = all cores).
    #[arg(long, default_value_t = 0, global = true)]
    jobs: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants of one graph.
    Oracle { graph: String },
    /// f-choosability or d_k-choosability.
    Choosable {
        graph: String,
        #[arg(long, allow_negative_numbers = true)]
        k: Option<i64>,
        /// Demand per vertex, comma separated.
        #[arg(long, value_delimiter = ',')]
        demand: Option<Vec<usize>>,
    },
    /// Independent transversals of a vertex partition.
    Transversal {
        graph: String,
        /// Blocks separated by `|`, vertices by spaces or commas.
        #[arg(long)]
        partition: String,
        /// Vertex set S to avoid (with --t).
        #[arg(long)]
        avoid: Option<String>,
        #[arg(long, value_parser = parse_rational)]
        t: Option<Rational>,
        /// Neighbours of an anchor vertex outside the graph.
        #[arg(long)]
        anchor: Option<String>,
    },
    /// Strong coloring of a partitioned graph.
    StrongColor {
        graph: String,
        #[arg(long)]
        partition: String,
        /// Number of colors; defaults to 3Δ.
        #[arg(long)]
        r: Option<usize>,
    },
    /// Big-clique decomposition.
    Decompose {
        graph: String,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long, value_parser = parse_rational)]
        t: Rational,
        /// Assert that the graph has no induced d_k-choosable subgraph.
        #[arg(long)]
        assume_dk: bool,
    },
    /// Recoloring: (γ-1)-coloring by default, (γ-k) with --k.
    Color {
        graph: String,
        #[arg(long)]
        k: Option<usize>,
        /// Target degree bound γ; defaults to Δ.
        #[arg(long)]
        gamma: Option<usize>,
    },
    /// Verify a theorem (or `all`, or `dense`) over a corpus.
    Verify {
        theorem: String,
        #[arg(long, value_enum, default_value = "exhaustive")]
        corpus: CorpusKind,
        /// graph6 file for `--corpus file`.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Family names for `--corpus named`, comma separated.
        #[arg(long, value_delimiter = ',')]
        names: Vec<String>,
        #[arg(long, default_value_t = 10)]
        n: usize,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[command(flatten)]
        filters: FilterArgs,
    },
    /// Print a corpus as graph6 lines.
    Corpus {
        #[arg(long, value_enum, default_value = "exhaustive")]
        corpus: CorpusKind,
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, value_delimiter = ',')]
        names: Vec<String>,
        #[arg(long, default_value_t = 10)]
        n: usize,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[command(flatten)]
        filters: FilterArgs,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CorpusKind {
    Exhaustive,
    Random,
    File,
    Named,
    Synthesized,
}

#[derive(Args)]
struct FilterArgs {
    #[arg(long)]
    min_delta: Option<usize>,
    #[arg(long)]
    max_delta: Option<usize>,
    #[arg(long)]
    min_omega: Option<usize>,
    #[arg(long)]
    max_omega: Option<usize>,
    #[arg(long)]
    connected: bool,
}

impl FilterArgs {
    fn filters(&self) -> Filters {
        let range = |a: Option<usize>, b: Option<usize>| (a.is_some() || b.is_some()).then(|| (a.unwrap_or(0), b.unwrap_or(usize::MAX)));
        Filters {
            delta: range(self.min_delta, self.max_delta),
            omega: range(self.min_omega, self.max_omega),
            connected: self.connected,
        }
    }
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    let bad = || format!("not a rational: {s}");
    match s.split_once('/') {
        Some((a, b)) => {
            let (a, b): (i64, i64) = (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
            if b == 0 {
                return Err(bad());
            }
            Ok(Rational::new(a, b))
        }
        None => s.trim().parse::<i64>().map(Rational::from_integer).map_err(|_| bad()),
    }
}

/// A graph argument: `named:<family>`, `-` for stdin, a file path, or the
/// graph text itself.
fn load_graph(arg: &str, format: Format) -> Result<Graph, String> {
    if let Some(name) = arg.strip_prefix("named:") {
        return corpus::named(name).map_err(|e| e.to_string());
    }
    let text = if arg == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| e.to_string())?;
        s
    } else if std::path::Path::new(arg).is_file() {
        std::fs::read_to_string(arg).map_err(|e| format!("{arg}: {e}"))?
    } else {
        arg.to_string()
    };
    formats::parse(format, &text).map_err(|e| e.to_string())
}

fn corpus_spec(
    kind: CorpusKind,
    max_n: usize,
    seed: u64,
    input: Option<PathBuf>,
    names: Vec<String>,
    (n, p, count): (usize, f64, usize),
    filters: &FilterArgs,
) -> Result<CorpusSpec, String> {
    let source = match kind {
        CorpusKind::Exhaustive => Source::Exhaustive { max_n },
        CorpusKind::Random => Source::Random { n, p, count, seed },
        CorpusKind::File => Source::File(input.ok_or("--corpus file needs --input")?),
        CorpusKind::Named => Source::Named(names),
        CorpusKind::Synthesized => Source::Synthesized { seed },
    };
    Ok(CorpusSpec { source, filters: filters.filters() })
}

fn run(cli: Cli) -> Result<Output, String> {
    let g = &cli.global;
    let oracle = Oracle::new(g.max_n.max(bkcolor::oracles::DEFAULT_EXHAUSTIVE_BOUND));
    match cli.command {
        Command::Oracle { graph } => commands::oracle(&load_graph(&graph, g.format)?, &oracle),
        Command::Choosable { graph, k, demand } => commands::choosable(&load_graph(&graph, g.format)?, k, demand),
        Command::Transversal { graph, partition, avoid, t, anchor } => {
            let h = load_graph(&graph, g.format)?;
            let p = formats::parse_partition(h.order(), &partition).map_err(|e| e.to_string())?;
            let mode = match (avoid, t, anchor) {
                (Some(s), Some(t), None) => {
                    TransversalMode::Avoid { s: formats::parse_vertex_set(&s).map_err(|e| e.to_string())?, t }
                }
                (None, None, Some(a)) => {
                    TransversalMode::Anchor { x_neighbors: formats::parse_vertex_set(&a).map_err(|e| e.to_string())? }
                }
                (None, None, None) => TransversalMode::Plain,
                _ => return Err("use either --avoid with --t, or --anchor".into()),
            };
            commands::transversal(&h, &p, mode)
        }
        Command::StrongColor { graph, partition, r } => {
            let h = load_graph(&graph, g.format)?;
            let p = formats::parse_partition(h.order(), &partition).map_err(|e| e.to_string())?;
            commands::strong(&h, &p, r)
        }
        Command::Decompose { graph, k, t, assume_dk } => commands::decompose(&load_graph(&graph, g.format)?, k, t, assume_dk),
        Command::Color { graph, k, gamma } => commands::color(&load_graph(&graph, g.format)?, k, gamma),
        Command::Verify { theorem, corpus, input, names, n, p, count, filters } => {
            let theorems = resolve(&theorem).ok_or(format!("unknown theorem {theorem}"))?;
            let spec = corpus_spec(corpus, g.max_n, g.seed, input, names, (n, p, count), &filters)?;
            let graphs = generate_corpus(&spec).map_err(|e| e.to_string())?;
            Ok(commands::verify_all(&theorems, &spec.describe(), &graphs, &oracle, g.seed))
        }
        Command::Corpus { corpus, input, names, n, p, count, filters } => {
            let spec = corpus_spec(corpus, g.max_n, g.seed, input, names, (n, p, count), &filters)?;
            let graphs = generate_corpus(&spec).map_err(|e| e.to_string())?;
            let text: String = graphs.iter().map(|h| formats::serialize(g.format, h)).collect();
            let json = serde_json::json!(graphs.iter().map(formats::to_graph6).collect::<Vec<_>>());
            Ok(Output { json, text, trace: Vec::new(), red: false })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (json, trace, jobs) = (cli.global.json, cli.global.trace, cli.global.jobs);
    if jobs > 0 {
        rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global().expect("pool is built once");
    }
    match run(cli) {
        Ok(out) => {
            if trace {
                for line in &out.trace {
                    println!("{line}");
                }
            }
            if json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("values serialize"));
            } else {
                print!("{}", out.text);
            }
            if out.red {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
