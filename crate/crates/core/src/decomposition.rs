//! Big-clique decompositions.
//!
//! `𝒞_t` is the set of maximal cliques on at least `t` vertices and `X_t`
//! its intersection graph. Both decompositions cut `∪𝒞_t` into blocks
//! `D_i`, each carrying a clique `C_i`, a core `K_i` and possibly one extra
//! vertex `x_i`. Every decomposition is checked against all of its
//! conclusions before it is returned.

use alloc::boxed::Box;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use thiserror::Error;

use crate::choosability::{has_induced_dk_choosable_subgraph, is_f_choosable, DEFAULT_CHOOSABILITY_BOUND};
use crate::error::{GraphError, OracleError};
use crate::graph::{families, Graph, Subgraph};
use crate::oracles::{clique_number, clique_number_within, lex_cmp, maximal_cliques_at_least, maximum_clique_within};
use crate::set::{subsets_of_size, VertexSet};
use crate::{ceil, Rational};

/// Largest order on which membership in `𝒟_k` is decided by exhaustive
/// scan.
pub const DK_SCAN_BOUND: usize = 8;

fn q(n: usize) -> Rational {
    Rational::from_integer(n as i64)
}

/// `U(k, ω, Δ)`.
pub fn threshold_u(k: usize, omega: usize, delta: usize) -> Result<Rational, GraphError> {
    if k == 0 {
        return Err(GraphError::BadParameter("k must be at least 1"));
    }
    let (k, w, d) = (q(k), q(omega), q(delta));
    let one = Rational::from_integer(1);
    let two = Rational::from_integer(2);
    let terms = [
        Rational::new(2, 3) * (d + one),
        (d + Rational::from_integer(3) * k + two) / two,
        two * k / (two * k + one) * (w + k) - one,
        (k + one) / (k + two) * w + two * k + one,
    ];
    Ok(terms.into_iter().max().unwrap())
}

/// `U'(k, ω, Δ) = max{(k+2)/(k+3) Δ + 1, U(k, ω, Δ)}`.
pub fn threshold_u_prime(k: usize, omega: usize, delta: usize) -> Result<Rational, GraphError> {
    let u = threshold_u(k, omega, delta)?;
    let lead = q(k + 2) / q(k + 3) * q(delta) + Rational::from_integer(1);
    Ok(u.max(lead))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ThresholdParams {
    pub k: usize,
    pub omega: usize,
    pub delta: usize,
    pub u: Rational,
    pub u_prime: Rational,
}

impl ThresholdParams {
    pub fn new(k: usize, omega: usize, delta: usize) -> Result<Self, GraphError> {
        Ok(ThresholdParams {
            k,
            omega,
            delta,
            u: threshold_u(k, omega, delta)?,
            u_prime: threshold_u_prime(k, omega, delta)?,
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DecompBlock {
    pub d: VertexSet,
    pub c: VertexSet,
    pub k: VertexSet,
    pub x: Option<usize>,
}

/// How membership of the input in `𝒟_k` was settled.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Membership {
    /// Exhaustive scan for induced `d_k`-choosable subgraphs.
    Checked(bool),
    /// Asserted by the caller.
    Assumed,
    /// Too large to scan and not asserted.
    Unknown,
}

impl Membership {
    pub fn holds(self) -> bool {
        matches!(self, Membership::Checked(true) | Membership::Assumed)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Hypotheses {
    /// `Δ >= 8` in the `k = 1` form; always true otherwise.
    pub delta: bool,
    /// No `K_Δ` in the `k = 1` form; always true otherwise.
    pub no_big_clique: bool,
    /// `(Δ+5)/2 <= t <= Δ-1`, or `t >= U(k, ω, Δ)`.
    pub t_range: bool,
    pub membership: Membership,
}

impl Hypotheses {
    pub fn hold(&self) -> bool {
        self.delta && self.no_big_clique && self.t_range && self.membership.holds()
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CliqueDecomposition {
    pub t: Rational,
    pub k: usize,
    pub blocks: Vec<DecompBlock>,
    pub hypotheses: Hypotheses,
    /// Whether every component of `X_t` is complete.
    pub xt_complete: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecompError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    /// A component of `X_t` does not have the shape the construction needs.
    #[error("component {component} of X_t has no admissible block")]
    Shape { component: usize, hypotheses: Hypotheses },
    /// A stated conclusion fails on the constructed decomposition.
    #[error("conclusion {conclusion} fails on block {block}")]
    Conclusion { conclusion: &'static str, block: usize, decomposition: Box<CliqueDecomposition> },
    /// `t > 2(Δ+1)/3` and yet `X_t` has a non-complete component.
    #[error("X_t has a non-complete component although t > 2(Δ+1)/3")]
    IntersectionGraph { decomposition: Box<CliqueDecomposition> },
}

/// Components of the intersection graph of `cliques`, each as a list of
/// clique indices in increasing order, plus whether all are complete.
pub fn intersection_components(cliques: &[VertexSet]) -> (Vec<Vec<usize>>, bool) {
    let m = cliques.len();
    let mut seen = vec![false; m];
    let mut out = Vec::new();
    let mut complete = true;
    for s in 0..m {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            let a = comp[i];
            for b in 0..m {
                if !seen[b] && cliques[a].intersects(cliques[b]) {
                    seen[b] = true;
                    comp.push(b);
                }
            }
            i += 1;
        }
        comp.sort_unstable();
        complete &= comp.iter().all(|&a| comp.iter().all(|&b| cliques[a].intersects(cliques[b])));
        out.push(comp);
    }
    (out, complete)
}

/// How a decomposition settles membership of its input in `𝒟_k`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DkPolicy {
    /// Scan when the order is at most [`DK_SCAN_BOUND`].
    Scan,
    Assume,
    Skip,
}

fn membership(g: &Graph, k: usize, policy: DkPolicy) -> Result<Membership, OracleError> {
    match policy {
        DkPolicy::Assume => Ok(Membership::Assumed),
        DkPolicy::Scan if g.order() <= DK_SCAN_BOUND => {
            Ok(Membership::Checked(has_induced_dk_choosable_subgraph(g, k as i64)?.is_none()))
        }
        _ => Ok(Membership::Unknown),
    }
}

fn threshold_size(t: Rational) -> usize {
    ceil(t).max(0) as usize
}

/// The `k = 1` partition: each block is a clique of `𝒞_t`, or such a clique
/// plus one vertex with at least `t - 1` neighbours in it. Membership in
/// `𝒟_1` is scanned on small inputs.
pub fn decompose_k1(g: &Graph, t: usize) -> Result<CliqueDecomposition, DecompError> {
    decompose_k1_with(g, t, DkPolicy::Scan)
}

/// As [`decompose_k1`] with an explicit membership policy.
pub fn decompose_k1_with(g: &Graph, t: usize, policy: DkPolicy) -> Result<CliqueDecomposition, DecompError> {
    let delta = g.max_degree();
    let hyp = Hypotheses {
        delta: delta >= 8,
        no_big_clique: clique_number(g) < delta,
        t_range: 2 * t >= delta + 5 && t < delta,
        membership: membership(g, 1, policy)?,
    };
    let cliques = maximal_cliques_at_least(g, t);
    let (comps, xt_complete) = intersection_components(&cliques);
    let mut blocks = Vec::with_capacity(comps.len());
    for (ci, comp) in comps.iter().enumerate() {
        let block = match comp[..] {
            [a] => DecompBlock { d: cliques[a], c: cliques[a], k: cliques[a], x: None },
            [a, b] => {
                // C is the clique the other one leaves by a single vertex
                let fits = |c: VertexSet, o: VertexSet| (o - c).len() == 1;
                let mut options: Vec<VertexSet> =
                    [(cliques[a], cliques[b]), (cliques[b], cliques[a])].into_iter().filter(|&(c, o)| fits(c, o)).map(|(c, _)| c).collect();
                options.sort_by(|x, y| y.len().cmp(&x.len()).then(lex_cmp(*x, *y)));
                let Some(&c) = options.first() else {
                    return Err(DecompError::Shape { component: ci, hypotheses: hyp });
                };
                let d = cliques[a] | cliques[b];
                let x = (d - c).first().unwrap();
                DecompBlock { d, c, k: g.neighbors(x) & c, x: Some(x) }
            }
            _ => return Err(DecompError::Shape { component: ci, hypotheses: hyp }),
        };
        blocks.push(block);
    }
    let dec = CliqueDecomposition { t: q(t), k: 1, blocks, hypotheses: hyp, xt_complete };
    verify_k1(g, &cliques, &dec)?;
    Ok(dec)
}

fn fail(conclusion: &'static str, block: usize, dec: &CliqueDecomposition) -> DecompError {
    DecompError::Conclusion { conclusion, block, decomposition: Box::new(dec.clone()) }
}

fn check_partition(cliques: &[VertexSet], dec: &CliqueDecomposition) -> Result<(), DecompError> {
    let cover = cliques.iter().fold(VertexSet::EMPTY, |a, &c| a | c);
    let mut seen = VertexSet::EMPTY;
    for (i, b) in dec.blocks.iter().enumerate() {
        if b.d.intersects(seen) {
            return Err(fail("blocks are disjoint", i, dec));
        }
        seen |= b.d;
    }
    if seen != cover {
        return Err(fail("blocks cover the union of the cliques", 0, dec));
    }
    Ok(())
}

/// Checks the partition, both block forms and the bound on outside
/// neighbours in each `C_i`.
pub fn verify_k1(g: &Graph, cliques: &[VertexSet], dec: &CliqueDecomposition) -> Result<(), DecompError> {
    check_partition(cliques, dec)?;
    let t = dec.t.to_integer() as usize;
    for (i, b) in dec.blocks.iter().enumerate() {
        if !cliques.contains(&b.c) {
            return Err(fail("C_i is a clique of the family", i, dec));
        }
        match b.x {
            None => {
                if b.d != b.c || b.k != b.c {
                    return Err(fail("D_i = C_i", i, dec));
                }
            }
            Some(x) => {
                let nx = g.neighbors(x) & b.c;
                if b.c.contains(x) || b.d != b.c.with(x) || nx.len() + 1 < t || b.k != nx {
                    return Err(fail("D_i = C_i + x_i with x_i seeing t-1 of C_i", i, dec));
                }
            }
        }
        for v in (g.vertices() - b.d).iter() {
            if (g.neighbors(v) & b.c).len() + 2 > t {
                return Err(fail("outside vertices see at most t-2 of C_i", i, dec));
            }
        }
    }
    Ok(())
}

/// The general partition: `D_i` is the union of one component of `X_t`,
/// `C_i` a maximum clique of `G[D_i]` and `K_i` the universal vertices of
/// `G[D_i]`. Membership in `𝒟_k` is scanned on small inputs.
pub fn decompose_general(g: &Graph, k: usize, t: Rational) -> Result<CliqueDecomposition, DecompError> {
    decompose_general_with(g, k, t, DkPolicy::Scan)
}

/// As [`decompose_general`] with an explicit membership policy.
pub fn decompose_general_with(g: &Graph, k: usize, t: Rational, policy: DkPolicy) -> Result<CliqueDecomposition, DecompError> {
    let delta = g.max_degree();
    let u = threshold_u(k, clique_number(g), delta)?;
    let hyp = Hypotheses { delta: true, no_big_clique: true, t_range: t >= u, membership: membership(g, k, policy)? };
    let cliques = maximal_cliques_at_least(g, threshold_size(t));
    let (comps, xt_complete) = intersection_components(&cliques);
    let blocks = comps
        .iter()
        .map(|comp| {
            let d = comp.iter().fold(VertexSet::EMPTY, |a, &i| a | cliques[i]);
            DecompBlock { d, c: maximum_clique_within(g, d), k: g.universal_in(d), x: None }
        })
        .collect();
    let dec = CliqueDecomposition { t, k, blocks, hypotheses: hyp, xt_complete };
    if !xt_complete && t * 3 > q(2 * (delta + 1)) {
        return Err(DecompError::IntersectionGraph { decomposition: Box::new(dec) });
    }
    check_partition(&cliques, &dec)?;
    verify_general(g, &dec)?;
    Ok(dec)
}

/// Checks the four conclusions of the general partition on every block.
/// The clique-intersection bound is checked for independent sets of size
/// at most `k + 1`.
pub fn verify_general(g: &Graph, dec: &CliqueDecomposition) -> Result<(), DecompError> {
    let k = dec.k;
    for (i, b) in dec.blocks.iter().enumerate() {
        let omega = clique_number_within(g, b.d);
        if b.d.len() > omega + 2 * k {
            return Err(fail("|D_i| <= ω(G[D_i]) + 2k", i, dec));
        }
        if g.universal_in(b.d).len() < 3 * k + 1 {
            return Err(fail("G[D_i] has at least 3k+1 universal vertices", i, dec));
        }
        let l = maximum_clique_within(g, b.d);
        let lq = q(l.len());
        for size in 1..=k + 1 {
            for set in subsets_of_size(b.d, size) {
                if !g.is_independent(set) {
                    continue;
                }
                let common = set.iter().fold(l, |a, v| a & g.neighbors(v));
                if q(common.len()) < lq - q(size) * (lq + q(k) - dec.t) {
                    return Err(fail("max clique meets common neighbourhoods", i, dec));
                }
            }
        }
        if subsets_of_size(b.d, k + 2).any(|s| g.is_independent(s)) {
            return Err(fail("α(G[D_i]) <= k+1", i, dec));
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MaderError {
    #[error("average degree {average} is below 4k = {}", 4 * .k)]
    Hypothesis { average: Rational, k: usize },
    #[error("no (k+1)-connected induced subgraph with the required average degree")]
    Exhausted,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// An induced `(k+1)`-connected subgraph `H` with `d(H) > d(G) - 2k`,
/// requiring `d(G) >= 4k`.
///
/// Sets are explored from largest to smallest: a set is tested for
/// connectivity, and otherwise split along a separator of at most `k`
/// vertices or shrunk by one vertex, keeping only sets whose average degree
/// stays above the target.
pub fn mader_dense_subgraph(g: &Graph, k: usize) -> Result<Subgraph, MaderError> {
    let avg = g.average_degree()?;
    if k == 0 || avg < q(4 * k) {
        return Err(MaderError::Hypothesis { average: avg, k });
    }
    let target = avg - q(2 * k);
    let dense = |s: VertexSet| !s.is_empty() && q(2 * g.size_within(s)) > target * q(s.len());
    let mut level: alloc::collections::BTreeSet<u64> = alloc::collections::BTreeSet::new();
    level.insert(g.vertices().bits());
    while !level.is_empty() {
        // visit in decreasing size, lexicographically within a size
        let mut sets: Vec<VertexSet> = level.iter().map(|&b| VertexSet(b)).collect();
        sets.sort_by(|a, b| lex_cmp(*a, *b));
        for &s in &sets {
            if g.is_k_connected_within(s, k + 1) {
                return Ok(g.induced_subgraph(s));
            }
        }
        let mut next = alloc::collections::BTreeSet::new();
        for &s in &sets {
            if let Some(sep) = g.small_separator_within(s, k) {
                for comp in g.components_within(s - sep) {
                    let part = comp | sep;
                    if dense(part) && part.len() < s.len() {
                        next.insert(part.bits());
                    }
                }
            }
            for v in s.iter() {
                let part = s.without(v);
                if dense(part) {
                    next.insert(part.bits());
                }
            }
        }
        // keep only the largest sets of the new layer so sizes fall by one
        let top = next.iter().map(|&b| VertexSet(b).len()).max().unwrap_or(0);
        level = next.into_iter().filter(|&b| VertexSet(b).len() == top).collect();
        if level.is_empty() && top == 0 {
            break;
        }
    }
    Err(MaderError::Exhausted)
}

/// Outcome of one dense-neighbourhood lemma on a graph `B`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct LemmaOutcome {
    pub hypothesis: bool,
    /// Vertex set of `H` in `B`, when one was found.
    pub witness: Option<VertexSet>,
    /// `None` when the hypothesis fails and nothing was searched.
    pub conclusion: Option<bool>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DenseNeighborhoodReport {
    pub average_degree: Rational,
    pub omega: usize,
    /// `d(B) >= ω(B) + 2`: some induced `H` with `K_1 ∨ H` choosable from
    /// lists of size `|H|` on the apex and `d_H(x)` on `H`.
    pub low_vertex: LemmaOutcome,
    /// `d(B) >= ω(B) + 3`: some induced `H` with `K_1 ∨ H` `d_1`-choosable.
    pub vertex_high: LemmaOutcome,
    /// `δ(B) >= (2k+1)/(2k+2)|B| + k - 1`: `K_1 ∨ B` is `d_k`-choosable or
    /// `ω(B) >= |B| - 2k`. The witness is `B` itself when the join is
    /// choosable.
    pub high_min_degree: LemmaOutcome,
}

fn apex_join(b: &Graph, s: VertexSet) -> Graph {
    families::complete(1).join(&b.induced_subgraph(s).graph).expect("orders are small")
}

fn apex_low_choosable(b: &Graph, s: VertexSet) -> Result<bool, OracleError> {
    let j = apex_join(b, s);
    let f: Vec<usize> = (0..j.order()).map(|v| if v == 0 { j.degree(0) } else { j.degree(v) - 1 }).collect();
    Ok(is_f_choosable(&j, &f)?.choosable)
}

fn apex_d1_choosable(b: &Graph, s: VertexSet) -> Result<bool, OracleError> {
    let j = apex_join(b, s);
    if (0..j.order()).any(|v| j.degree(v) == 0) {
        return Ok(false);
    }
    let f: Vec<usize> = (0..j.order()).map(|v| j.degree(v) - 1).collect();
    Ok(is_f_choosable(&j, &f)?.choosable)
}

/// Induced `H` satisfying `test`, trying the Mader subgraph first and then
/// every nonempty vertex set by decreasing size.
fn find_witness(b: &Graph, test: impl Fn(&Graph, VertexSet) -> Result<bool, OracleError>) -> Result<Option<VertexSet>, OracleError> {
    if let Ok(h) = mader_dense_subgraph(b, 1) {
        let s = h.parent_set();
        if test(b, s)? {
            return Ok(Some(s));
        }
    }
    for size in (1..=b.order()).rev() {
        let mut sets: Vec<VertexSet> = subsets_of_size(b.vertices(), size).collect();
        sets.sort_by(|x, y| lex_cmp(*x, *y));
        for s in sets {
            if test(b, s)? {
                return Ok(Some(s));
            }
        }
    }
    Ok(None)
}

/// Evaluates the three dense-neighbourhood lemmas on `b`, with parameter
/// `k` for the minimum-degree lemma.
pub fn clique_from_dense_neighborhood(b: &Graph, k: usize) -> Result<DenseNeighborhoodReport, OracleError> {
    let n = b.order();
    if n + 1 > DEFAULT_CHOOSABILITY_BOUND || n > DK_SCAN_BOUND {
        return Err(OracleError::BoundExceeded { order: n, bound: DK_SCAN_BOUND });
    }
    let avg = b.average_degree()?;
    let omega = clique_number(b);

    let run = |needed: usize, test: fn(&Graph, VertexSet) -> Result<bool, OracleError>| -> Result<LemmaOutcome, OracleError> {
        let hypothesis = avg >= q(omega + needed);
        if !hypothesis {
            return Ok(LemmaOutcome { hypothesis, witness: None, conclusion: None });
        }
        let witness = find_witness(b, test)?;
        Ok(LemmaOutcome { hypothesis, witness, conclusion: Some(witness.is_some()) })
    };
    let low_vertex = run(2, apex_low_choosable)?;
    let vertex_high = run(3, apex_d1_choosable)?;

    let kq = q(k);
    let hypothesis = k >= 1 && q(b.min_degree()) >= q(2 * k + 1) / q(2 * k + 2) * q(n) + kq - Rational::from_integer(1);
    let high_min_degree = if hypothesis {
        let j = apex_join(b, b.vertices());
        let choosable = crate::choosability::is_dk_choosable(&j, k as i64)?.choosable;
        LemmaOutcome {
            hypothesis,
            witness: choosable.then_some(b.vertices()),
            conclusion: Some(choosable || omega + 2 * k >= n),
        }
    } else {
        LemmaOutcome { hypothesis, witness: None, conclusion: None }
    };
    Ok(DenseNeighborhoodReport { average_degree: avg, omega, low_vertex, vertex_high, high_min_degree })
}

/// Orders decompositions' blocks canonically, by least vertex of `D_i`.
pub fn block_order(a: &DecompBlock, b: &DecompBlock) -> Ordering {
    lex_cmp(a.d, b.d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn thresholds() {
        assert_eq!(threshold_u(1, 7, 9).unwrap(), Rational::new(23, 3));
        assert_eq!(threshold_u(1, 0, 0).unwrap(), Rational::from_integer(3));
        assert_eq!(threshold_u_prime(1, 7, 9).unwrap(), Rational::new(31, 4));
        assert!(threshold_u(0, 7, 9).is_err());
        let p = ThresholdParams::new(2, 10, 14).unwrap();
        assert!(p.u_prime >= p.u);
    }

    #[test]
    fn k1_disjoint_cliques_flagged() {
        let g = complete(7).disjoint_union(&complete(7)).unwrap();
        let dec = decompose_k1_with(&g, 6, DkPolicy::Assume).unwrap();
        assert!(!dec.hypotheses.delta);
        assert_eq!(dec.blocks.len(), 2);
        assert!(dec.blocks.iter().all(|b| b.x.is_none() && b.d.len() == 7));
    }

    #[test]
    fn k1_near_complete() {
        let mut g = complete(9);
        g.remove_edge(0, 1);
        let dec = decompose_k1_with(&g, 7, DkPolicy::Assume).unwrap();
        assert_eq!(dec.blocks.len(), 1);
        let b = dec.blocks[0];
        assert_eq!(b.d, g.vertices());
        // C = {0, 2, ..., 8} is lexicographically least, x = 1
        assert_eq!(b.x, Some(1));
        assert_eq!(b.k, b.c.without(0));
        assert!(!dec.hypotheses.no_big_clique);
    }

    #[test]
    fn k1_empty_family() {
        let dec = decompose_k1_with(&cycle(9), 7, DkPolicy::Assume).unwrap();
        assert!(dec.blocks.is_empty());
    }

    #[test]
    fn general_single_clique() {
        let g = complete(8);
        let dec = decompose_general_with(&g, 1, Rational::from_integer(8), DkPolicy::Assume).unwrap();
        assert_eq!(dec.blocks.len(), 1);
        assert_eq!(dec.blocks[0].k, g.vertices());
        let two = complete(8).disjoint_union(&complete(9)).unwrap();
        let dec = decompose_general_with(&two, 1, Rational::from_integer(8), DkPolicy::Assume).unwrap();
        assert_eq!(dec.blocks.len(), 2);
    }

    #[test]
    fn intersection_graph_boundary() {
        // P_4 with t = 2 = 2(Δ+1)/3: the three edges form a path in X_t
        let (comps, complete) = intersection_components(&maximal_cliques_at_least(&path(4), 2));
        assert_eq!(comps.len(), 1);
        assert!(!complete);
    }

    #[test]
    fn mader_examples() {
        let h = mader_dense_subgraph(&complete(6), 1).unwrap();
        assert_eq!(h.graph, complete(6));
        let wheel = cycle(5).join(&edgeless(1)).unwrap();
        assert!(matches!(mader_dense_subgraph(&wheel, 1), Err(MaderError::Hypothesis { .. })));
        // K_5 with a pendant path: the clique is what survives
        let mut g = complete(5).disjoint_union(&path(3)).unwrap();
        g.add_edge(4, 5);
        let avg = g.average_degree().unwrap();
        if avg >= Rational::from_integer(4) {
            let h = mader_dense_subgraph(&g, 1).unwrap();
            assert!(h.graph.is_k_connected(2));
        }
    }

    #[test]
    fn dense_neighborhood_reports() {
        let r = clique_from_dense_neighborhood(&complete(5), 1).unwrap();
        assert!(!r.low_vertex.hypothesis && !r.vertex_high.hypothesis);
        // K_{3,3} has d = 3 = ω + 1
        let r = clique_from_dense_neighborhood(&complete_bipartite(3, 3), 1).unwrap();
        assert!(!r.low_vertex.hypothesis);
    }
}
