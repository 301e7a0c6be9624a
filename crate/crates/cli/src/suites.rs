//! Corpora and theorem-verification suites.

use std::collections::BTreeMap;
use std::path::PathBuf;

use bkcolor::corpus::{self, exhaustive_up_to, gnp_stream, near_clique_union, random_partition_capped, rng};
use bkcolor::oracles::{clique_number, for_each_bounded_partition, Oracle};
use bkcolor::strong::{strong_color_fitting, verify_strong_coloring};
use bkcolor::theorems::{check_graph, TheoremCheck, TheoremId};
use bkcolor::transversal::VertexPartition;
use bkcolor::{families, Graph, Rational, VertexSet};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::formats::{parse_graph6_stream, to_graph6, FormatError};

#[derive(Debug, Error)]
pub enum SuiteError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("line {0}: {1}")]
    Stream(usize, FormatError),
    #[error(transparent)]
    Graph(#[from] bkcolor::GraphError),
    #[error("exhaustive generator self-check failed at n = {n}: {found} classes, expected {expected}")]
    SelfCheck { n: usize, found: usize, expected: usize },
}

#[derive(Clone, Debug, PartialEq)]
pub enum Source {
    Exhaustive { max_n: usize },
    Random { n: usize, p: f64, count: usize, seed: u64 },
    File(PathBuf),
    Named(Vec<String>),
    /// Clique joins, blown-up cycles and near-clique unions with `Δ >= 9`.
    Synthesized { seed: u64 },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Filters {
    pub delta: Option<(usize, usize)>,
    pub omega: Option<(usize, usize)>,
    pub connected: bool,
}

impl Filters {
    fn keep(&self, g: &Graph) -> bool {
        let within = |r: Option<(usize, usize)>, x: usize| r.is_none_or(|(a, b)| a <= x && x <= b);
        within(self.delta, g.max_degree())
            && (self.omega.is_none() || within(self.omega, clique_number(g)))
            && (!self.connected || g.is_connected())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CorpusSpec {
    pub source: Source,
    pub filters: Filters,
}

impl CorpusSpec {
    pub fn describe(&self) -> String {
        let mut s = match &self.source {
            Source::Exhaustive { max_n } => format!("exhaustive n<={max_n}"),
            Source::Random { n, p, count, seed } => format!("gnp n={n} p={p} count={count} seed={seed}"),
            Source::File(p) => format!("file {}", p.display()),
            Source::Named(names) => format!("named {}", names.join(",")),
            Source::Synthesized { seed } => format!("synthesized seed={seed}"),
        };
        let f = &self.filters;
        if let Some((a, b)) = f.delta {
            s += &format!(" delta={a}..{b}");
        }
        if let Some((a, b)) = f.omega {
            s += &format!(" omega={a}..{b}");
        }
        if f.connected {
            s += " connected";
        }
        s
    }
}

/// The synthesized dense family: `K_m ∨ H` for every `H` on at most five
/// vertices with `n <= 14` and `Δ >= 9`, blown-up cycles, and near-clique
/// unions meeting the `(Δ-1)` recoloring hypotheses.
pub fn synthesized(seed: u64) -> Vec<Graph> {
    let mut out = Vec::new();
    for h in exhaustive_up_to(5).into_iter().flatten() {
        for m in 1..=14 - h.order() {
            let g = families::complete(m).join(&h).expect("order at most 14");
            if g.max_degree() >= 9 {
                out.push(g);
            }
        }
    }
    for (c, s) in [(5, 2), (5, 3), (7, 2), (6, 2), (5, 4), (4, 3)] {
        out.push(families::blowup_cycle(c, s).expect("valid parameters"));
    }
    let mut r = rng(seed);
    for i in 0..20 {
        let (sizes, d) = if i % 2 == 0 { ([9, 9], 9) } else { ([10, 10], 10) };
        out.push(near_clique_union(&sizes, 1, d, &mut r));
    }
    out
}

/// Generates the corpus. Exhaustive mode runs the class-count self-check.
pub fn generate_corpus(spec: &CorpusSpec) -> Result<Vec<Graph>, SuiteError> {
    let graphs = match &spec.source {
        Source::Exhaustive { max_n } => {
            let levels = exhaustive_up_to(*max_n);
            corpus::self_check(&levels).map_err(|(n, found, expected)| SuiteError::SelfCheck { n, found, expected })?;
            levels.into_iter().skip(1).flatten().collect()
        }
        Source::Random { n, p, count, seed } => gnp_stream(*n, *p, *count, *seed),
        Source::File(path) => {
            let text = std::fs::read_to_string(path).map_err(|source| SuiteError::Io { path: path.clone(), source })?;
            parse_graph6_stream(&text).map_err(|(l, e)| SuiteError::Stream(l, e))?
        }
        Source::Named(names) => names.iter().map(|n| corpus::named(n)).collect::<Result<_, _>>()?,
        Source::Synthesized { seed } => synthesized(*seed),
    };
    Ok(graphs.into_iter().filter(|g| spec.filters.keep(g)).collect())
}

#[derive(Clone, Debug, Default, Serialize, PartialEq, Eq)]
pub struct Counts {
    pub checked: usize,
    pub vacuous: usize,
    pub holds: usize,
    /// Graphs the oracles refused (order above the bound).
    pub skipped: usize,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Alert {
    pub graph_id: usize,
    pub graph6: String,
    pub parameter: Option<usize>,
    pub margins: BTreeMap<String, String>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Tightest {
    pub margin: String,
    pub value: String,
    pub graph_id: usize,
    pub graph6: String,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Report {
    pub theorem: String,
    pub corpus: String,
    pub counts: Counts,
    pub alerts: Vec<Alert>,
    /// Smallest value of each margin over checks whose hypotheses held.
    pub tightest: Vec<Tightest>,
    /// Suite-specific totals.
    pub extra: BTreeMap<String, u64>,
}

impl Report {
    pub fn red(&self) -> bool {
        !self.alerts.is_empty()
    }
}

pub fn rational_string(q: Rational) -> String {
    if *q.denom() == 1 {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Outcome of one graph in a suite.
enum Outcome {
    Checked(TheoremCheck, BTreeMap<String, u64>),
    Skipped,
}

fn fold(theorem: TheoremId, corpus: &str, graphs: &[Graph], outcomes: Vec<Outcome>) -> Report {
    let mut r = Report {
        theorem: theorem.name().to_string(),
        corpus: corpus.to_string(),
        counts: Counts::default(),
        alerts: Vec::new(),
        tightest: Vec::new(),
        extra: BTreeMap::new(),
    };
    let mut tight: BTreeMap<&'static str, (Rational, usize)> = BTreeMap::new();
    let mut order: Vec<&'static str> = Vec::new();
    for (id, o) in outcomes.into_iter().enumerate() {
        let (c, extra) = match o {
            Outcome::Skipped => {
                r.counts.skipped += 1;
                continue;
            }
            Outcome::Checked(c, e) => (c, e),
        };
        for (k, v) in extra {
            *r.extra.entry(k).or_default() += v;
        }
        r.counts.checked += 1;
        if c.vacuous() {
            r.counts.vacuous += 1;
            continue;
        }
        if c.conclusion_holds {
            r.counts.holds += 1;
        } else {
            r.alerts.push(Alert {
                graph_id: id,
                graph6: to_graph6(&graphs[id]),
                parameter: c.parameter,
                margins: c.margins.iter().map(|(k, v)| (k.to_string(), rational_string(*v))).collect(),
            });
        }
        for &(name, v) in &c.margins {
            match tight.get(name) {
                Some(&(best, _)) if best <= v => {}
                _ => {
                    if !order.contains(&name) {
                        order.push(name);
                    }
                    tight.insert(name, (v, id));
                }
            }
        }
    }
    r.tightest = order
        .into_iter()
        .map(|name| {
            let (v, id) = tight[name];
            Tightest { margin: name.to_string(), value: rational_string(v), graph_id: id, graph6: to_graph6(&graphs[id]) }
        })
        .collect();
    r
}

/// Per-graph partition cap for the strong-coloring suite.
pub const PARTITION_CAP: usize = 10_000;

/// Runs `strong_color` with `r = 3Δ` on every partition into blocks of at
/// most `r` vertices, or on `PARTITION_CAP` random ones when there are more.
fn strong_suite_graph(g: &Graph, id: usize, seed: u64) -> Outcome {
    let n = g.order();
    let d = g.max_degree();
    let mut extra = BTreeMap::new();
    if d == 0 {
        let c = TheoremCheck {
            theorem: TheoremId::StrongColorBound,
            graph_id: id,
            hypotheses_hold: false,
            conclusion_holds: true,
            parameter: Some(0),
            margins: Vec::new(),
        };
        return Outcome::Checked(c, extra);
    }
    let r = 3 * d;
    let (mut parts, mut coarse, mut failed) = (0u64, 0u64, 0u64);
    let mut run = |blocks: &[VertexSet]| {
        let p = VertexPartition::new(n, blocks.to_vec()).expect("generated partitions are valid");
        parts += 1;
        match strong_color_fitting(g, &p, r) {
            Ok((s, c)) => {
                coarse += c as u64;
                failed += !verify_strong_coloring(g, &p, r, &s.original()) as u64;
            }
            Err(_) => failed += 1,
        }
    };
    let mut count = 0;
    for_each_bounded_partition(n, n, r, |_| {
        count += 1;
        count <= PARTITION_CAP
    });
    if count <= PARTITION_CAP {
        for_each_bounded_partition(n, n, r, |b| {
            run(b);
            true
        });
    } else {
        extra.insert("capped_graphs".to_string(), 1);
        let mut rg = rng(seed ^ id as u64);
        for _ in 0..PARTITION_CAP {
            run(&random_partition_capped(n, r, &mut rg));
        }
    }
    extra.insert("partitions".to_string(), parts);
    extra.insert("coarsened".to_string(), coarse);
    extra.insert("repair_failures".to_string(), failed);
    let c = TheoremCheck {
        theorem: TheoremId::StrongColorBound,
        graph_id: id,
        hypotheses_hold: true,
        conclusion_holds: failed == 0,
        parameter: Some(r),
        margins: vec![("failures", Rational::from_integer(-(failed as i64)))],
    };
    Outcome::Checked(c, extra)
}

/// Verifies one theorem over a corpus; graphs run in parallel on the
/// current rayon pool and results are merged by index.
pub fn verify(theorem: TheoremId, corpus: &str, graphs: &[Graph], oracle: &Oracle, seed: u64) -> Report {
    let outcomes: Vec<Outcome> = graphs
        .par_iter()
        .enumerate()
        .map(|(id, g)| {
            if g.order() > oracle.bound {
                return Outcome::Skipped;
            }
            if theorem == TheoremId::StrongColorBound {
                return strong_suite_graph(g, id, seed);
            }
            match check_graph(g, oracle, &[theorem]) {
                Ok(mut cs) => {
                    let mut c = cs.pop().expect("one theorem requested");
                    c.graph_id = id;
                    Outcome::Checked(c, BTreeMap::new())
                }
                Err(_) => Outcome::Skipped,
            }
        })
        .collect();
    fold(theorem, corpus, graphs, outcomes)
}

/// The four dense-neighbourhood statements.
pub const DENSE: [TheoremId; 4] =
    [TheoremId::BkDense, TheoremId::MainResult, TheoremId::TwoThirdsCliqueCor, TheoremId::MainSimpleCorollary];

/// Resolves a theorem argument: a single id, `dense`, or `all`.
pub fn resolve(arg: &str) -> Option<Vec<TheoremId>> {
    match arg {
        "all" => Some(TheoremId::ALL.to_vec()),
        "dense" => Some(DENSE.to_vec()),
        _ => TheoremId::parse(arg).map(|t| vec![t]),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn synthesized_family_is_dense() {
        let gs = synthesized(1);
        assert!(gs.iter().filter(|g| g.max_degree() >= 9).count() >= 50);
        assert!(gs.iter().all(|g| g.order() <= 24));
    }

    #[test]
    fn exhaustive_four_has_eleven_graphs() {
        let spec = CorpusSpec { source: Source::Exhaustive { max_n: 4 }, filters: Filters::default() };
        assert_eq!(generate_corpus(&spec).unwrap().len(), 1 + 2 + 4 + 11);
    }

    #[test]
    fn m8_alpha_bound_is_tight() {
        let g = vec![families::m8()];
        let r = verify(TheoremId::AlphaBound, "m8", &g, &Oracle::default(), 0);
        assert_eq!(r.counts.holds, 1);
        assert_eq!(r.tightest[0].value, "0");
    }

    #[test]
    fn onesies_literal_red_on_k5() {
        let g = vec![families::complete(5)];
        let r = verify(TheoremId::Onesies, "k5", &g, &Oracle::default(), 0);
        assert!(r.red());
        assert_eq!(r.alerts[0].graph6, to_graph6(&families::complete(5)));
    }
}
