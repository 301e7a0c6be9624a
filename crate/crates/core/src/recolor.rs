//! Recoloring through independent transversals.
//!
//! Given a coloring `π` of `G - xw` with `π(x) = 1`, let `Z` be the rest of
//! color class 1. Each `z ∈ Z` is paired with a vertex `v_z` whose color is
//! unique around `z`. If `{x} ∪ {v_z}` is independent, then giving `z` the
//! color of `v_z` and coloring `x` and every `v_z` with 1 is proper. The
//! procedures below build the candidate sets for `v_z` from big-clique
//! decompositions, look for the transversal, and fall back to the exact
//! oracle when any step fails. Every fallback names the stage it left from.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::decomposition::{
    decompose_general_with, decompose_k1_with, threshold_u_prime, CliqueDecomposition, DkPolicy,
};
use crate::error::{GraphError, OracleError};
use crate::graph::{Graph, Subgraph};
use crate::oracles::{
    chromatic_number, clique_number, find_k_coloring, independence_number, maximum_clique_within, omega_at, rho,
    Coloring, Oracle,
};
use crate::set::VertexSet;
use crate::transversal::{find_transversal_avoiding, find_transversal_with_anchor, VertexPartition};
use crate::{ceil, Rational};

fn q(n: usize) -> Rational {
    Rational::from_integer(n as i64)
}

/// `O_z`: neighbours of `z` whose color no other neighbour of `z` has.
/// Uncolored neighbours are ignored.
pub fn compute_oz(g: &Graph, pi: &Coloring, z: usize) -> VertexSet {
    let nz: VertexSet = g.neighbors(z).iter().filter(|&v| pi.get(v).is_some()).collect();
    nz.iter()
        .filter(|&v| {
            let c = pi.get(v).unwrap() as usize;
            !pi.colors_on(nz.without(v)).contains(c)
        })
        .collect()
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Stage {
    Hypotheses,
    Brooks,
    Reduction,
    Decomposition,
    CriticalEdge,
    Normalization,
    Construction,
    Transversal,
    Swap,
}

impl Stage {
    pub fn name(self) -> &'static str {
        match self {
            Stage::Hypotheses => "hypotheses",
            Stage::Brooks => "brooks",
            Stage::Reduction => "reduction",
            Stage::Decomposition => "decomposition",
            Stage::CriticalEdge => "critical-edge",
            Stage::Normalization => "normalization",
            Stage::Construction => "construction",
            Stage::Transversal => "transversal",
            Stage::Swap => "swap",
        }
    }
}

/// One trace line: a stage and the named vertex lists it produced.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TraceEvent {
    pub stage: Stage,
    pub data: Vec<(&'static str, Vec<usize>)>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Path {
    Constructive,
    Fallback { stage: Stage, reason: &'static str },
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct RecolorHypotheses {
    pub range: bool,
    pub delta: bool,
    pub omega: bool,
    pub rho: bool,
}

impl RecolorHypotheses {
    pub fn hold(&self) -> bool {
        self.range && self.delta && self.omega && self.rho
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RecolorReport {
    /// Number of colors aimed for.
    pub colors: usize,
    pub coloring: Option<Coloring>,
    pub hypotheses: RecolorHypotheses,
    pub path: Path,
    /// Whether the transversal lemma's own hypotheses held, when reached.
    pub transversal_hypotheses: Option<bool>,
    pub trace: Vec<TraceEvent>,
}

impl RecolorReport {
    pub fn constructive(&self) -> bool {
        self.path == Path::Constructive
    }
}

struct Run {
    trace: Vec<TraceEvent>,
    transversal_hypotheses: Option<bool>,
}

type Step<T> = Result<T, (Stage, &'static str)>;

impl Run {
    fn log(&mut self, stage: Stage, data: Vec<(&'static str, Vec<usize>)>) {
        self.trace.push(TraceEvent { stage, data });
    }
}

fn finish(g: &Graph, colors: usize, hypotheses: RecolorHypotheses, run: Run, result: Step<Coloring>) -> RecolorReport {
    let (coloring, path) = match result {
        Ok(c) => (Some(c), Path::Constructive),
        Err((stage, reason)) => (find_k_coloring(g, colors, &[]), Path::Fallback { stage, reason }),
    };
    RecolorReport {
        colors,
        coloring,
        hypotheses,
        path,
        transversal_hypotheses: run.transversal_hypotheses,
        trace: run.trace,
    }
}

/// A coloring of `G - xw` with `colors` colors and `π(x) = 1`, with class 1
/// shrunk to a local minimum by moving vertices to free colors.
fn normalized_coloring(g: &Graph, x: usize, w: usize, colors: usize) -> Step<Coloring> {
    let h = g.without_edge(x, w);
    let mut pi = find_k_coloring(&h, colors, &[(x, 1)]).ok_or((Stage::CriticalEdge, "G - xw has no coloring with x colored 1"))?;
    let all = crate::ColorSet::full(colors + 1).without(0);
    loop {
        let mut changed = false;
        for z in (pi.class(1).without(x)).iter() {
            let free = all.without(1) - pi.colors_on(h.neighbors(z));
            if let Some(c) = free.first() {
                pi.set(z, c as u32);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    Ok(pi)
}

/// A core vertex with a neighbour outside its block, and that neighbour;
/// blocks, cores and neighbours are scanned in increasing order.
fn pick_x(g: &Graph, dec: &CliqueDecomposition) -> Option<(usize, usize, usize)> {
    dec.blocks.iter().enumerate().find_map(|(i, b)| {
        b.k.iter().find_map(|x| (g.neighbors(x) - b.d).first().map(|w| (i, x, w)))
    })
}

/// Common part of both procedures: normalization, the every-class check and
/// grouping of `Z` by block.
fn prepare(
    g: &Graph,
    dec: &CliqueDecomposition,
    colors: usize,
    run: &mut Run,
) -> Step<(usize, Coloring, BTreeMap<usize, Vec<usize>>)> {
    let cover = dec.blocks.iter().fold(VertexSet::EMPTY, |a, b| a | b.d);
    if cover != g.vertices() {
        return Err((Stage::Construction, "some vertex lies in no big clique"));
    }
    let (b1, x, w) = pick_x(g, dec).ok_or((Stage::CriticalEdge, "no core vertex has a neighbour outside its block"))?;
    run.log(Stage::CriticalEdge, vec![("x", vec![x]), ("w", vec![w]), ("D_1", dec.blocks[b1].d.to_vec())]);
    let mut pi = normalized_coloring(g, x, w, colors)?;
    pi.clear(x);
    let z = pi.class(1);
    run.log(Stage::Normalization, vec![("Z", z.to_vec())]);
    if z.intersects(dec.blocks[b1].d) {
        return Err((Stage::Normalization, "a vertex of D_1 - x is colored 1"));
    }
    let others = crate::ColorSet::full(colors + 1).without(0).without(1);
    for v in z.iter() {
        if !others.is_subset(pi.colors_on(g.neighbors(v))) {
            return Err((Stage::Normalization, "some z misses a color class"));
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in z.iter() {
        let a = dec.blocks.iter().position(|b| b.d.contains(v)).unwrap();
        groups.entry(a).or_default().push(v);
    }
    Ok((x, pi, groups))
}

/// `G[∪ V_a]` with the `V_a` as a partition, in local labels, plus the map
/// back to `g`.
fn transversal_instance(g: &Graph, sets: &[VertexSet]) -> Step<(Subgraph, VertexPartition, [usize; crate::MAX_ORDER])> {
    if sets.iter().any(|s| s.is_empty()) {
        return Err((Stage::Construction, "some candidate set is empty"));
    }
    let span = sets.iter().fold(VertexSet::EMPTY, |a, &s| a | s);
    let sub = g.induced_subgraph(span);
    let mut pos = [usize::MAX; crate::MAX_ORDER];
    for (j, &v) in sub.map.iter().enumerate() {
        pos[v] = j;
    }
    let local: Vec<VertexSet> = sets.iter().map(|s| s.iter().map(|v| pos[v]).collect()).collect();
    let part = VertexPartition::new(sub.graph.order(), local).map_err(|_| (Stage::Construction, "candidate sets overlap"))?;
    Ok((sub, part, pos))
}

fn swap(g: &Graph, pi: &Coloring, x: usize, picks: &[(usize, Vec<usize>)], colors: usize, run: &mut Run) -> Step<Coloring> {
    let mut out = pi.clone();
    for (v, zs) in picks {
        let c = pi.get(*v).unwrap();
        for &z in zs {
            out.set(z, c);
        }
        out.set(*v, 1);
    }
    out.set(x, 1);
    run.log(Stage::Swap, vec![("recolored", picks.iter().flat_map(|(_, zs)| zs.iter().copied()).collect())]);
    if out.is_proper_k_coloring(g, colors) {
        Ok(out)
    } else {
        Err((Stage::Swap, "swap produced an improper coloring"))
    }
}

/// A `(k-1)`-coloring of `g` with `k = Δ(g)`; see
/// [`color_delta_minus_1_with`].
pub fn color_delta_minus_1(g: &Graph) -> RecolorReport {
    color_delta_minus_1_with(g, g.max_degree())
}

/// A `(k-1)`-coloring built from the `k = 1` decomposition with
/// `t = 2Δ/3 + 1` and the avoiding transversal with parameter `Δ/3 - 1`.
/// Hypotheses: `k >= 9`, `Δ <= k`, `ω < k`, `ρ <= k/3 - 2`.
pub fn color_delta_minus_1_with(g: &Graph, k: usize) -> RecolorReport {
    let delta = g.max_degree();
    let hypotheses = RecolorHypotheses {
        range: k >= 9,
        delta: delta <= k,
        omega: clique_number(g) < k,
        rho: g.order() > 0 && Rational::from_integer(rho(g).unwrap_or(0)) <= q(k) / 3 - 2,
    };
    let colors = k.saturating_sub(1);
    let mut run = Run { trace: Vec::new(), transversal_hypotheses: None };
    let result = if k == 0 || g.order() == 0 {
        Err((Stage::Hypotheses, "empty graph or k = 0"))
    } else if delta < k {
        Err((Stage::Brooks, "Δ < k"))
    } else if delta > k {
        Err((Stage::Hypotheses, "Δ > k"))
    } else {
        delta_minus_1(g, colors, &mut run)
    };
    finish(g, colors, hypotheses, run, result)
}

fn delta_minus_1(g: &Graph, colors: usize, run: &mut Run) -> Step<Coloring> {
    let delta = g.max_degree();
    let t = ceil(Rational::new(2, 3) * q(delta) + 1) as usize;
    let dec = decompose_k1_with(g, t, DkPolicy::Skip).map_err(|_| (Stage::Decomposition, "k = 1 decomposition failed"))?;
    run.log(Stage::Decomposition, dec.blocks.iter().map(|b| ("D", b.d.to_vec())).collect());
    let (x, pi, groups) = prepare(g, &dec, colors, run)?;

    let mut sets = Vec::new();
    let mut owners = Vec::new();
    for (&a, zs) in &groups {
        let b = dec.blocks[a];
        let v = match zs[..] {
            [z] => compute_oz(g, &pi, z) & b.c,
            [z, z2] => compute_oz(g, &pi, z) & compute_oz(g, &pi, z2) & b.k,
            _ => return Err((Stage::Construction, "three or more vertices of Z share a block")),
        };
        sets.push(v);
        owners.push(zs.clone());
    }
    run.log(Stage::Construction, sets.iter().map(|s| ("V", s.to_vec())).collect());
    let picks = if sets.is_empty() {
        Vec::new()
    } else {
        let (sub, part, pos) = transversal_instance(g, &sets)?;
        let s: VertexSet = (g.neighbors(x) & sub.parent_set()).iter().map(|v| pos[v]).collect();
        let out = find_transversal_avoiding(&sub.graph, &part, s, q(delta) / 3 - 1);
        run.transversal_hypotheses = Some(out.hypotheses.any());
        let t = out.transversal.ok_or((Stage::Transversal, "no transversal avoiding N(x)"))?;
        let lifted: Vec<usize> = t.iter().map(|&v| sub.map[v]).collect();
        run.log(Stage::Transversal, vec![("v", lifted.clone())]);
        lifted.into_iter().zip(owners).collect()
    };
    swap(g, &pi, x, &picks, colors, run)
}

/// A `(γ-k)`-coloring built from the general decomposition with
/// `t = U'(k, ω, Δ)` and the anchored transversal. Hypotheses: `k >= 1`,
/// `Δ <= γ`, `ω <= γ - 2k`, `ρ <= γ - k - U'(k, ω, γ)`. When `Δ < γ` and
/// `k >= 2` the call is reduced to `(k-1, γ-1)`.
pub fn color_delta_minus_k(g: &Graph, k: usize, gamma: usize) -> RecolorReport {
    let omega = clique_number(g);
    let delta = g.max_degree();
    let hypotheses = RecolorHypotheses {
        range: k >= 1,
        delta: delta <= gamma,
        omega: omega + 2 * k <= gamma,
        rho: k >= 1
            && g.order() > 0
            && threshold_u_prime(k, omega, gamma)
                .map(|u| Rational::from_integer(rho(g).unwrap_or(0)) <= q(gamma) - q(k) - u)
                .unwrap_or(false),
    };
    let colors = gamma.saturating_sub(k);
    let mut run = Run { trace: Vec::new(), transversal_hypotheses: None };
    let result = if k == 0 || g.order() == 0 || gamma < k {
        Err((Stage::Hypotheses, "k = 0, γ < k or empty graph"))
    } else if delta > gamma {
        Err((Stage::Hypotheses, "Δ > γ"))
    } else if delta < gamma {
        if k >= 2 {
            run.log(Stage::Reduction, vec![("k_gamma", vec![k - 1, gamma - 1])]);
            let inner = color_delta_minus_k(g, k - 1, gamma - 1);
            run.trace.extend(inner.trace);
            run.transversal_hypotheses = inner.transversal_hypotheses;
            match inner.path {
                Path::Constructive => Ok(inner.coloring.unwrap()),
                Path::Fallback { stage, reason } => Err((stage, reason)),
            }
        } else {
            Err((Stage::Brooks, "Δ < γ with k = 1"))
        }
    } else {
        delta_minus_k(g, k, colors, &mut run)
    };
    finish(g, colors, hypotheses, run, result)
}

fn delta_minus_k(g: &Graph, k: usize, colors: usize, run: &mut Run) -> Step<Coloring> {
    let delta = g.max_degree();
    let t = threshold_u_prime(k, clique_number(g), delta).map_err(|_| (Stage::Hypotheses, "k = 0"))?;
    let dec = decompose_general_with(g, k, t, DkPolicy::Skip).map_err(|_| (Stage::Decomposition, "general decomposition failed"))?;
    run.log(Stage::Decomposition, dec.blocks.iter().map(|b| ("D", b.d.to_vec())).collect());
    let (x, pi, groups) = prepare(g, &dec, colors, run)?;

    let mut sets = Vec::new();
    let mut owners = Vec::new();
    for (&a, zs) in &groups {
        let l = maximum_clique_within(g, dec.blocks[a].d);
        sets.push(zs.iter().fold(l, |acc, &z| acc & compute_oz(g, &pi, z)));
        owners.push(zs.clone());
    }
    run.log(Stage::Construction, sets.iter().map(|s| ("V", s.to_vec())).collect());
    let picks = if sets.is_empty() {
        Vec::new()
    } else {
        let (sub, part, pos) = transversal_instance(g, &sets)?;
        let anchor: VertexSet = (g.neighbors(x) & sub.parent_set()).iter().map(|v| pos[v]).collect();
        let out = find_transversal_with_anchor(&sub.graph, &part, anchor);
        run.transversal_hypotheses = Some(out.hypotheses_hold);
        let t = out.transversal.ok_or((Stage::Transversal, "no transversal independent of x"))?;
        let lifted: Vec<usize> = t.iter().map(|&v| sub.map[v]).collect();
        run.log(Stage::Transversal, vec![("v", lifted.clone())]);
        lifted.into_iter().zip(owners).collect()
    };
    swap(g, &pi, x, &picks, colors, run)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecolorError {
    #[error("graph is not vertex-critical with χ = Δ + 1 - k")]
    NotCritical,
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// `H_v` and the margins of its three bounds. Every margin is the left side
/// minus the right side, so a bound holds iff its margin is nonnegative.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OnesiesReport {
    pub v: usize,
    pub k: usize,
    /// Vertex set of `H_v` in `g`.
    pub h: VertexSet,
    pub order: usize,
    pub min_degree: usize,
    pub size: usize,
    pub alpha: usize,
    /// `|H_v| - (Δ - 2k)`.
    pub order_margin: i64,
    /// `δ(H_v) - (|H_v| - (k+1)(α - 1) - 1)`.
    pub degree_margin: i64,
    /// `‖H_v‖ - (|H_v|(|H_v| - (k+2)) - (k+1)(n + 2k - (Δ+1)))`.
    pub edge_margin: i64,
    /// The same bound with `2‖H_v‖`, the degree sum, on the left.
    pub degree_sum_margin: i64,
}

impl OnesiesReport {
    pub fn holds(&self) -> [bool; 3] {
        [self.order_margin >= 0, self.degree_margin >= 0, self.edge_margin >= 0]
    }
}

/// The subgraph of `G_v` on neighbours of `v` with a color unique in
/// `N(v)` under a `(Δ-k)`-coloring of `g - v`.
pub fn onesies_subgraph(g: &Graph, v: usize, k: usize) -> Result<(Subgraph, OnesiesReport), RecolorError> {
    let n = g.order();
    if v >= n {
        return Err(GraphError::VertexOutOfRange { vertex: v, order: n }.into());
    }
    let delta = g.max_degree();
    let oracle = Oracle::default();
    if delta + 1 < k || oracle.chromatic_number(g)? != delta + 1 - k || !oracle.is_vertex_critical(g)? {
        return Err(RecolorError::NotCritical);
    }
    let gv = g.without_vertex(v);
    let local = find_k_coloring(&gv.graph, delta - k, &[]).ok_or(RecolorError::NotCritical)?;
    let mut pi = Coloring::uncolored(n);
    for (i, &u) in gv.map.iter().enumerate() {
        pi.set(u, local.get(i).unwrap());
    }
    let h = compute_oz(g, &pi, v);
    let sub = g.induced_subgraph(h);
    let ho = h.len() as i64;
    let (kk, d, nn) = (k as i64, delta as i64, n as i64);
    let alpha = independence_number(g);
    let size = sub.graph.size() as i64;
    let min_degree = if ho == 0 { 0 } else { sub.graph.min_degree() };
    let edge_bound = ho * (ho - (kk + 2)) - (kk + 1) * (nn + 2 * kk - (d + 1));
    let report = OnesiesReport {
        v,
        k,
        h,
        order: h.len(),
        min_degree,
        size: size as usize,
        alpha,
        order_margin: ho - (d - 2 * kk),
        degree_margin: min_degree as i64 - (ho - (kk + 1) * (alpha as i64 - 1) - 1),
        edge_margin: size - edge_bound,
        degree_sum_margin: 2 * size - edge_bound,
    };
    Ok((sub, report))
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum IrregularOutcome {
    /// A `K_k` in `g`.
    Clique(VertexSet),
    /// An irregular vertex-critical subgraph with `χ = Δ = k - 1`, given by
    /// its vertex set in `g` and the edges it keeps.
    Irregular { vertices: VertexSet, subgraph: Graph },
    /// Every vertex of the critical subgraph lies in a `(k-1)`-clique.
    AllInLargeCliques,
    /// The construction ran but its result failed a check.
    Unverified { reason: &'static str },
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IrregularReport {
    /// `χ(g) >= Δ(g) = k`.
    pub precondition: bool,
    /// `k >= 9`.
    pub in_range: bool,
    pub outcome: IrregularOutcome,
}

/// Either a `K_k`, or an irregular critical subgraph with `χ = Δ = k - 1`,
/// following the removal of a large color class `T` of `G' - v` for a
/// vertex `v` of a `k`-critical subgraph `G'` lying in no `(k-1)`-clique.
pub fn irregular_reduction(g: &Graph, k: usize) -> Result<IrregularReport, RecolorError> {
    let oracle = Oracle::default();
    let chi = oracle.chromatic_number(g)?;
    let precondition = g.max_degree() == k && chi >= k;
    let in_range = k >= 9;
    let report = |outcome| Ok(IrregularReport { precondition, in_range, outcome });
    let big = maximum_clique_within(g, g.vertices());
    if k > 0 && big.len() >= k {
        return report(IrregularOutcome::Clique(big.iter().take(k).collect()));
    }
    if k < 2 || chi < k {
        return report(IrregularOutcome::Unverified { reason: "χ < k" });
    }
    // a k-critical subgraph
    let crit = if chi == k { oracle.vertex_critical_subgraph(g)? } else {
        return report(IrregularOutcome::Unverified { reason: "χ > k without K_k" });
    };
    let gc = &crit.graph;
    let Some(v) = (0..gc.order()).find(|&u| omega_at(gc, u) < k - 1) else {
        return report(IrregularOutcome::AllInLargeCliques);
    };
    let gv = gc.without_vertex(v);
    let Some(pi) = find_k_coloring(&gv.graph, k - 1, &[]) else {
        return report(IrregularOutcome::Unverified { reason: "G' - v is not (k-1)-colorable" });
    };
    let mut pi_full = Coloring::uncolored(gc.order());
    for (i, &u) in gv.map.iter().enumerate() {
        pi_full.set(u, pi.get(i).unwrap());
    }
    let high = gc.degree(v) >= k;
    let nv = gc.neighbors(v);
    // candidate classes: where v has two neighbours if high, any otherwise
    let mut best: Option<VertexSet> = None;
    for c in 1..=(k - 1) as u32 {
        let mut t = pi_full.class(c);
        if high && (t & nv).len() < 2 {
            continue;
        }
        // grow T while it stays independent and avoids v
        for u in (gc.vertices().without(v) - t).iter() {
            if !gc.neighbors(u).intersects(t) {
                t = t.with(u);
            }
        }
        if best.is_none_or(|b| t.len() > b.len()) {
            best = Some(t);
        }
    }
    let Some(t) = best else {
        return report(IrregularOutcome::Unverified { reason: "no color class meets N(v) twice" });
    };
    let h = gc.induced_subgraph(gc.vertices() - t);
    let hc = oracle.vertex_critical_subgraph(&h.graph)?;
    let hg = &hc.graph;
    let ok = chromatic_number(hg)? == k - 1 && hg.max_degree() == k - 1 && !hg.is_regular();
    if !ok {
        return report(IrregularOutcome::Unverified { reason: "critical subgraph of G' - T is not irregular with χ = Δ = k - 1" });
    }
    let vertices: VertexSet = hc.map.iter().map(|&i| crit.map[h.map[i]]).collect();
    report(IrregularOutcome::Irregular { vertices, subgraph: hg.clone() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn oz_on_stars() {
        let g = star(3);
        let pi = Coloring::from_colors(vec![0, 1, 2, 3]);
        assert_eq!(compute_oz(&g, &pi, 0), VertexSet(0b1110));
        let pi = Coloring::from_colors(vec![0, 1, 1, 2]);
        assert_eq!(compute_oz(&g, &pi, 0), VertexSet(0b1000));
    }

    #[test]
    fn big_clique_flags() {
        let r = color_delta_minus_1(&complete(6));
        assert!(!r.hypotheses.omega);
        assert!(r.coloring.is_none());
        assert!(matches!(r.path, Path::Fallback { .. }));
    }

    #[test]
    fn small_instances_fall_back() {
        let g = cycle(5).join(&complete(4)).unwrap();
        let r = color_delta_minus_1(&g);
        assert!(!r.hypotheses.hold());
        if let Some(c) = &r.coloring {
            assert!(c.is_proper_k_coloring(&g, r.colors));
        }
    }

    #[test]
    fn onesies_examples() {
        let (_, r) = onesies_subgraph(&cycle(5), 0, 0).unwrap();
        assert_eq!(r.order, 2);
        assert_eq!(r.holds(), [true, true, true]);
        // K_5: H_v = K_4, the literal edge bound asks for 8 edges
        let (h, r) = onesies_subgraph(&complete(5), 0, 0).unwrap();
        assert_eq!(h.graph, complete(4));
        assert_eq!(r.edge_margin, -2);
        assert_eq!(r.degree_sum_margin, 4);
        assert!(onesies_subgraph(&cycle(6), 0, 0).is_err());
    }

    #[test]
    fn irregular_cliques() {
        let r = irregular_reduction(&complete(9), 9).unwrap();
        assert_eq!(r.outcome, IrregularOutcome::Clique(VertexSet::full(9)));
        assert!(!r.precondition);
        let r = irregular_reduction(&complete(5), 5).unwrap();
        assert_eq!(r.outcome, IrregularOutcome::Clique(VertexSet::full(5)));
    }
}
