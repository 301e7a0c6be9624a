//! Exact, exhaustive computations of the graph invariants every other module
//! is checked against.
//!
//! Two independent chromatic-number routines live here: a DSATUR-guided
//! branch and bound ([`chromatic_number`]) and plain enumeration of all
//! `r^n` assignments ([`chromatic_number_naive`]).

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{GraphError, OracleError};
use crate::graph::{Graph, Subgraph};
use crate::set::{ColorSet, VertexSet};

/// Default largest order accepted by exhaustive routines.
pub const DEFAULT_EXHAUSTIVE_BOUND: usize = 32;

/// Vertex colors `1..=r`; 0 marks an uncolored vertex.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Coloring {
    colors: Vec<u32>,
}

impl Coloring {
    pub fn uncolored(n: usize) -> Self {
        Coloring { colors: vec![0; n] }
    }

    pub fn from_colors(colors: Vec<u32>) -> Self {
        Coloring { colors }
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.colors
    }

    #[inline]
    pub fn get(&self, v: usize) -> Option<u32> {
        match self.colors[v] {
            0 => None,
            c => Some(c),
        }
    }

    #[inline]
    pub fn set(&mut self, v: usize, c: u32) {
        self.colors[v] = c;
    }

    #[inline]
    pub fn clear(&mut self, v: usize) {
        self.colors[v] = 0;
    }

    /// Largest color in use.
    pub fn max_color(&self) -> u32 {
        self.colors.iter().copied().max().unwrap_or(0)
    }

    /// Number of distinct colors in use.
    pub fn distinct_colors(&self) -> usize {
        let mut seen: Vec<u32> = self.colors.iter().copied().filter(|&c| c > 0).collect();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    pub fn is_total(&self) -> bool {
        self.colors.iter().all(|&c| c > 0)
    }

    /// The vertices colored `c`.
    pub fn class(&self, c: u32) -> VertexSet {
        self.colors.iter().enumerate().filter(|&(_, &x)| x == c && c > 0).map(|(v, _)| v).collect()
    }

    /// Colors (as a bitset indexed by color value) appearing on `s`.
    pub fn colors_on(&self, s: VertexSet) -> ColorSet {
        s.iter().filter_map(|v| self.get(v)).map(|c| c as usize).collect()
    }

    /// No edge joins two vertices of the same color; uncolored vertices are
    /// ignored.
    pub fn is_proper(&self, g: &Graph) -> bool {
        g.edges().iter().all(|&(u, v)| self.colors[u] == 0 || self.colors[u] != self.colors[v])
    }

    /// Total, proper, and every color in `1..=k`.
    pub fn is_proper_k_coloring(&self, g: &Graph, k: usize) -> bool {
        self.colors.len() == g.order()
            && self.colors.iter().all(|&c| c >= 1 && c as usize <= k)
            && self.is_proper(g)
    }

    /// Restricts a coloring of a parent graph to an induced subgraph.
    pub fn restrict(&self, sub: &Subgraph) -> Coloring {
        Coloring { colors: sub.map.iter().map(|&v| self.colors[v]).collect() }
    }

    /// Swaps two color names everywhere.
    pub fn swap_colors(&mut self, a: u32, b: u32) {
        for c in self.colors.iter_mut() {
            if *c == a {
                *c = b;
            } else if *c == b {
                *c = a;
            }
        }
    }
}

/// Chromatic number with an optimal coloring certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chromatic {
    pub chi: usize,
    pub coloring: Coloring,
}

/// Per-graph invariants consumed by the verification harness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    pub order: usize,
    pub size: usize,
    pub chi: usize,
    pub omega: usize,
    pub alpha: usize,
    pub delta_max: usize,
    pub delta_min: usize,
    pub rho: i64,
    pub omega_v: Vec<usize>,
}

/// Exhaustive oracles with a configurable order bound.
#[derive(Clone, Copy, Debug)]
pub struct Oracle {
    pub bound: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle { bound: DEFAULT_EXHAUSTIVE_BOUND }
    }
}

impl Oracle {
    pub fn new(bound: usize) -> Self {
        Oracle { bound }
    }

    fn check(&self, n: usize) -> Result<(), OracleError> {
        if n > self.bound {
            Err(OracleError::BoundExceeded { order: n, bound: self.bound })
        } else {
            Ok(())
        }
    }

    pub fn chromatic(&self, g: &Graph) -> Result<Chromatic, OracleError> {
        self.check(g.order())?;
        Ok(branch_and_bound(g))
    }

    pub fn chromatic_number(&self, g: &Graph) -> Result<usize, OracleError> {
        Ok(self.chromatic(g)?.chi)
    }

    pub fn vertex_critical_subgraph(&self, g: &Graph) -> Result<Subgraph, OracleError> {
        self.check(g.order())?;
        let chi = branch_and_bound(g).chi;
        let mut keep = g.vertices();
        for v in g.vertices().iter() {
            let trial = keep.without(v);
            if branch_and_bound(&g.induced_subgraph(trial).graph).chi == chi {
                keep = trial;
            }
        }
        Ok(g.induced_subgraph(keep))
    }

    /// Every vertex deletion lowers the chromatic number.
    pub fn is_vertex_critical(&self, g: &Graph) -> Result<bool, OracleError> {
        self.check(g.order())?;
        let chi = branch_and_bound(g).chi;
        Ok(g.vertices().iter().all(|v| branch_and_bound(&g.without_vertex(v).graph).chi < chi))
    }

    pub fn is_critical_edge(&self, g: &Graph, u: usize, v: usize) -> Result<bool, OracleError> {
        self.check(g.order())?;
        if u >= g.order() || v >= g.order() || !g.has_edge(u, v) {
            return Err(GraphError::NotAnEdge(u, v).into());
        }
        Ok(branch_and_bound(&g.without_edge(u, v)).chi < branch_and_bound(g).chi)
    }

    /// Whether `g` is strongly `r`-colorable: after padding to a multiple of
    /// `r` with isolated vertices, every partition into parts of size `r`
    /// admits a proper coloring using all `r` colors on each part.
    pub fn strong_chromatic_check(&self, g: &Graph, r: usize) -> Result<bool, OracleError> {
        if r == 0 {
            return Err(GraphError::BadParameter("strong coloring needs r >= 1").into());
        }
        let n = g.order();
        let padded = r * n.div_ceil(r);
        self.check(padded)?;
        // Padding vertices are interchangeable, so partitions of the padded
        // set correspond to partitions of V(g) into at most padded/r blocks
        // of size at most r.
        let mut ok = true;
        for_each_bounded_partition(n, padded / r, r, |blocks| {
            if strong_coloring_for(g, blocks, r).is_none() {
                ok = false;
            }
            ok
        });
        Ok(ok)
    }
}

pub fn chromatic_number(g: &Graph) -> Result<usize, OracleError> {
    Oracle::default().chromatic_number(g)
}

pub fn chromatic(g: &Graph) -> Result<Chromatic, OracleError> {
    Oracle::default().chromatic(g)
}

/// Chromatic number by enumerating all `r^n` assignments for `r = 0, 1, ...`.
/// Exponential; intended as a cross-check for small graphs only.
pub fn chromatic_number_naive(g: &Graph) -> usize {
    let n = g.order();
    if n == 0 {
        return 0;
    }
    let edges = g.edges();
    for r in 1..=n as u32 {
        let mut assign = vec![0u32; n];
        loop {
            if edges.iter().all(|&(u, v)| assign[u] != assign[v]) {
                return r as usize;
            }
            // odometer
            let mut i = 0;
            while i < n {
                assign[i] += 1;
                if assign[i] < r {
                    break;
                }
                assign[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
        }
    }
    n
}

/// Greedy DSATUR: an upper bound on the chromatic number.
pub fn dsatur_greedy(g: &Graph) -> Coloring {
    let n = g.order();
    let mut col = Coloring::uncolored(n);
    let mut forbidden = vec![ColorSet::EMPTY; n];
    let mut uncolored = g.vertices();
    while let Some(v) = pick_saturated(g, &forbidden, uncolored) {
        let c = (1..).find(|&c| !forbidden[v].contains(c)).unwrap();
        col.set(v, c as u32);
        uncolored.remove(v);
        for u in g.neighbors(v).iter() {
            forbidden[u].insert(c);
        }
    }
    col
}

fn pick_saturated(g: &Graph, forbidden: &[ColorSet], uncolored: VertexSet) -> Option<usize> {
    uncolored.iter().max_by(|&a, &b| {
        forbidden[a]
            .len()
            .cmp(&forbidden[b].len())
            .then((g.neighbors(a) & uncolored).len().cmp(&(g.neighbors(b) & uncolored).len()))
            .then(b.cmp(&a))
    })
}

fn branch_and_bound(g: &Graph) -> Chromatic {
    let n = g.order();
    if n == 0 {
        return Chromatic { chi: 0, coloring: Coloring::uncolored(0) };
    }
    let greedy = dsatur_greedy(g);
    let lower = clique_number(g);
    let mut best = Chromatic { chi: greedy.max_color() as usize, coloring: greedy };
    if best.chi > lower {
        let mut state = Search {
            g,
            colors: vec![0; n],
            forbidden: vec![ColorSet::EMPTY; n],
            uncolored: g.vertices(),
        };
        state.bnb(0, lower, &mut best);
    }
    best
}

struct Search<'a> {
    g: &'a Graph,
    colors: Vec<u32>,
    // forbidden[v] holds colors of v's colored neighbours, with multiplicity
    // tracked through `counts` would be faster; recomputation is fine here.
    forbidden: Vec<ColorSet>,
    uncolored: VertexSet,
}

impl Search<'_> {
    fn assign(&mut self, v: usize, c: u32) {
        self.colors[v] = c;
        self.uncolored.remove(v);
    }

    fn unassign(&mut self, v: usize) {
        self.colors[v] = 0;
        self.uncolored.insert(v);
    }

    fn refresh(&mut self, v: usize) {
        for u in self.g.neighbors(v).iter() {
            let mut f = ColorSet::EMPTY;
            for w in self.g.neighbors(u).iter() {
                if self.colors[w] > 0 {
                    f.insert(self.colors[w] as usize);
                }
            }
            self.forbidden[u] = f;
        }
    }

    fn bnb(&mut self, used: usize, lower: usize, best: &mut Chromatic) {
        let Some(v) = pick_saturated(self.g, &self.forbidden, self.uncolored) else {
            best.chi = used;
            best.coloring = Coloring::from_colors(self.colors.clone());
            return;
        };
        let top = (used + 1).min(best.chi - 1);
        for c in 1..=top {
            if self.forbidden[v].contains(c) {
                continue;
            }
            self.assign(v, c as u32);
            self.refresh(v);
            self.bnb(used.max(c), lower, best);
            self.unassign(v);
            self.refresh(v);
            if best.chi <= lower || best.chi <= used.max(1) {
                return;
            }
        }
    }
}

/// A proper coloring with colors `1..=k` extending the fixed assignments, if
/// one exists.
pub fn find_k_coloring(g: &Graph, k: usize, fixed: &[(usize, u32)]) -> Option<Coloring> {
    let n = g.order();
    let mut colors = vec![0u32; n];
    let mut uncolored = g.vertices();
    let mut top_fixed = 0u32;
    for &(v, c) in fixed {
        if c == 0 || c as usize > k || (colors[v] != 0 && colors[v] != c) {
            return None;
        }
        colors[v] = c;
        uncolored.remove(v);
        top_fixed = top_fixed.max(c);
    }
    for &(v, _) in fixed {
        if g.neighbors(v).iter().any(|u| colors[u] == colors[v]) {
            return None;
        }
    }
    fn rec(g: &Graph, k: usize, colors: &mut [u32], uncolored: VertexSet, top: u32) -> bool {
        // most constrained uncolored vertex
        let mut pick = None;
        let mut pick_free = usize::MAX;
        for v in uncolored.iter() {
            let mut f = ColorSet::EMPTY;
            for u in g.neighbors(v).iter() {
                if colors[u] > 0 {
                    f.insert(colors[u] as usize);
                }
            }
            let free = k - (f & ColorSet::full(k + 1).without(0)).len();
            if free < pick_free {
                pick_free = free;
                pick = Some((v, f));
                if free == 0 {
                    return false;
                }
            }
        }
        let Some((v, f)) = pick else { return true };
        let limit = (top as usize + 1).min(k);
        for c in 1..=limit {
            if f.contains(c) {
                continue;
            }
            colors[v] = c as u32;
            if rec(g, k, colors, uncolored.without(v), top.max(c as u32)) {
                return true;
            }
            colors[v] = 0;
        }
        false
    }
    if rec(g, k, &mut colors, uncolored, top_fixed) {
        Some(Coloring::from_colors(colors))
    } else {
        None
    }
}

/// Bron–Kerbosch with pivoting over `G[s]`; calls `out` on every maximal
/// clique.
pub fn for_each_maximal_clique_within(g: &Graph, s: VertexSet, out: &mut impl FnMut(VertexSet)) {
    fn rec(g: &Graph, r: VertexSet, mut p: VertexSet, mut x: VertexSet, out: &mut impl FnMut(VertexSet)) {
        if p.is_empty() {
            if x.is_empty() {
                out(r);
            }
            return;
        }
        let pivot = (p | x).iter().max_by_key(|&u| (p & g.neighbors(u)).len()).unwrap();
        for v in (p - g.neighbors(pivot)).iter() {
            let nv = g.neighbors(v);
            rec(g, r.with(v), p & nv, x & nv, out);
            p.remove(v);
            x.insert(v);
        }
    }
    rec(g, VertexSet::EMPTY, s, VertexSet::EMPTY, out);
}

/// Lexicographic order on sorted vertex lists.
pub fn lex_cmp(a: VertexSet, b: VertexSet) -> Ordering {
    a.iter().cmp(b.iter())
}

pub fn maximal_cliques(g: &Graph) -> Vec<VertexSet> {
    maximal_cliques_at_least(g, 0)
}

/// The maximal cliques with at least `t` vertices, in lexicographic order.
pub fn maximal_cliques_at_least(g: &Graph, t: usize) -> Vec<VertexSet> {
    let mut out = Vec::new();
    for_each_maximal_clique_within(g, g.vertices(), &mut |c| {
        if c.len() >= t {
            out.push(c);
        }
    });
    out.sort_by(|a, b| lex_cmp(*a, *b));
    out
}

/// A maximum clique of `G[s]`, lexicographically least among maximum ones.
pub fn maximum_clique_within(g: &Graph, s: VertexSet) -> VertexSet {
    let mut best = VertexSet::EMPTY;
    for_each_maximal_clique_within(g, s, &mut |c| {
        if c.len() > best.len() || (c.len() == best.len() && lex_cmp(c, best) == Ordering::Less) {
            best = c;
        }
    });
    best
}

pub fn clique_number(g: &Graph) -> usize {
    maximum_clique_within(g, g.vertices()).len()
}

pub fn clique_number_within(g: &Graph, s: VertexSet) -> usize {
    maximum_clique_within(g, s).len()
}

/// Size of a largest clique containing `v`.
pub fn omega_at(g: &Graph, v: usize) -> usize {
    1 + clique_number_within(g, g.neighbors(v))
}

pub fn omega_per_vertex(g: &Graph) -> Vec<usize> {
    (0..g.order()).map(|v| omega_at(g, v)).collect()
}

pub fn independence_number(g: &Graph) -> usize {
    clique_number(&g.complement())
}

pub fn maximum_independent_set(g: &Graph) -> VertexSet {
    maximum_clique_within(&g.complement(), g.vertices())
}

/// `max_v d(v) - omega(v)`, unclamped.
pub fn rho(g: &Graph) -> Result<i64, GraphError> {
    if g.order() == 0 {
        return Err(GraphError::Empty);
    }
    Ok((0..g.order()).map(|v| g.degree(v) as i64 - omega_at(g, v) as i64).max().unwrap())
}

/// The component containing `x` of the subgraph induced by the color
/// classes of `x` and `y`.
pub fn kempe_component(g: &Graph, coloring: &Coloring, x: usize, y: usize) -> Result<VertexSet, OracleError> {
    if !coloring.is_proper(g) {
        return Err(OracleError::ImproperColoring);
    }
    let cx = coloring.get(x).ok_or(OracleError::Uncolored(x))?;
    let cy = coloring.get(y).ok_or(OracleError::Uncolored(y))?;
    let span = coloring.class(cx) | coloring.class(cy);
    Ok(g.components_within(span).into_iter().find(|c| c.contains(x)).unwrap())
}

pub fn invariant_report(g: &Graph, oracle: &Oracle) -> Result<InvariantReport, OracleError> {
    let chi = oracle.chromatic_number(g)?;
    let omega_v = omega_per_vertex(g);
    Ok(InvariantReport {
        order: g.order(),
        size: g.size(),
        chi,
        omega: clique_number(g),
        alpha: independence_number(g),
        delta_max: g.max_degree(),
        delta_min: g.min_degree(),
        rho: rho(g).unwrap_or(0),
        omega_v,
    })
}

/// Calls `f` on each set partition of `0..n` into at most `max_blocks`
/// blocks of size at most `max_size`, each partition once (blocks ordered by
/// least element). Stops early when `f` returns `false`.
pub fn for_each_bounded_partition(
    n: usize,
    max_blocks: usize,
    max_size: usize,
    mut f: impl FnMut(&[VertexSet]) -> bool,
) {
    fn rec(
        v: usize,
        n: usize,
        max_blocks: usize,
        max_size: usize,
        blocks: &mut Vec<VertexSet>,
        f: &mut impl FnMut(&[VertexSet]) -> bool,
    ) -> bool {
        if v == n {
            return f(blocks);
        }
        // prune: remaining vertices must fit
        let room: usize = blocks.iter().map(|b| max_size - b.len()).sum::<usize>()
            + (max_blocks - blocks.len()) * max_size;
        if room < n - v {
            return true;
        }
        for i in 0..blocks.len() {
            if blocks[i].len() < max_size {
                blocks[i].insert(v);
                let go = rec(v + 1, n, max_blocks, max_size, blocks, f);
                blocks[i].remove(v);
                if !go {
                    return false;
                }
            }
        }
        if blocks.len() < max_blocks && max_size > 0 {
            blocks.push(VertexSet::singleton(v));
            let go = rec(v + 1, n, max_blocks, max_size, blocks, f);
            blocks.pop();
            if !go {
                return false;
            }
        }
        true
    }
    let mut blocks = Vec::new();
    rec(0, n, max_blocks, max_size, &mut blocks, &mut f);
}

/// A proper `r`-coloring giving distinct colors to the vertices of each
/// block, if one exists. Blocks of size below `r` are implicitly padded.
pub fn strong_coloring_for(g: &Graph, blocks: &[VertexSet], r: usize) -> Option<Coloring> {
    let mut aug = g.clone();
    for b in blocks {
        for u in b.iter() {
            for v in b.iter().filter(|&v| v > u) {
                if !aug.has_edge(u, v) {
                    aug.add_edge(u, v);
                }
            }
        }
    }
    find_k_coloring(&aug, r, &[])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn chromatic_fixtures() {
        assert_eq!(chromatic_number(&complete(5)).unwrap(), 5);
        assert_eq!(chromatic_number(&cycle(5)).unwrap(), 3);
        assert_eq!(chromatic_number(&cycle(6)).unwrap(), 2);
        assert_eq!(chromatic_number(&petersen()).unwrap(), 3);
        assert_eq!(chromatic_number(&Graph::new(0)).unwrap(), 0);
        assert_eq!(chromatic_number(&Graph::new(3)).unwrap(), 1);
        let c = chromatic(&m8()).unwrap();
        assert_eq!(c.chi, 8);
        assert!(c.coloring.is_proper_k_coloring(&m8(), 8));
    }

    #[test]
    fn m8_chi_matches_naive_decision() {
        // 15 vertices is too many for full naive enumeration; check the
        // decision at 7 and 8 colors with the independent backtracking search
        assert!(find_k_coloring(&m8(), 7, &[]).is_none());
        assert!(find_k_coloring(&m8(), 8, &[]).is_some());
    }

    #[test]
    fn bound_is_enforced() {
        let o = Oracle::new(4);
        assert!(matches!(o.chromatic_number(&cycle(5)), Err(OracleError::BoundExceeded { .. })));
    }

    #[test]
    fn cliques() {
        assert_eq!(clique_number(&m8()), 6);
        assert_eq!(maximal_cliques_at_least(&complete(7), 7), [VertexSet::full(7)]);
        assert!(maximal_cliques_at_least(&cycle(5), 3).is_empty());
        assert_eq!(maximal_cliques(&cycle(5)).len(), 5);
        assert_eq!(independence_number(&m8()), 2);
        assert_eq!(independence_number(&edgeless(6)), 6);
        assert_eq!(independence_number(&petersen()), 4);
    }

    #[test]
    fn rho_values() {
        assert_eq!(rho(&complete(6)).unwrap(), -1);
        assert_eq!(rho(&cycle(5)).unwrap(), 0);
        assert_eq!(rho(&petersen()).unwrap(), 1);
        assert!(rho(&Graph::new(0)).is_err());
    }

    fn k4_plus_pendant() -> Graph {
        let mut g = Graph::new(5);
        for (u, v) in complete(4).edges() {
            g.add_edge(u, v);
        }
        g.add_edge(3, 4);
        g
    }

    #[test]
    fn critical_subgraphs() {
        let o = Oracle::default();
        assert_eq!(o.vertex_critical_subgraph(&cycle(5)).unwrap().graph, cycle(5));
        let h = o.vertex_critical_subgraph(&k4_plus_pendant()).unwrap();
        assert_eq!(h.graph, complete(4));
        assert_eq!(h.map, [0, 1, 2, 3]);
        let p = o.vertex_critical_subgraph(&path(4)).unwrap();
        assert_eq!(p.graph, complete(2));
        assert!(o.is_vertex_critical(&m8()).unwrap());
    }

    #[test]
    fn critical_edges() {
        let o = Oracle::default();
        assert!(o.is_critical_edge(&cycle(5), 0, 1).unwrap());
        assert!(!o.is_critical_edge(&k4_plus_pendant(), 3, 4).unwrap());
        assert!(o.is_critical_edge(&complete(3), 1, 2).unwrap());
        assert!(o.is_critical_edge(&cycle(5), 0, 2).is_err());
    }

    #[test]
    fn kempe_chains() {
        let p3 = path(3);
        let col = Coloring::from_colors(vec![1, 2, 1]);
        assert_eq!(kempe_component(&p3, &col, 0, 1).unwrap(), VertexSet::full(3));
        // same color on both ends: the chain is a single class
        assert_eq!(kempe_component(&p3, &col, 0, 2).unwrap(), VertexSet::singleton(0));
        let two_edges = complete(2).disjoint_union(&complete(2)).unwrap();
        let col = Coloring::from_colors(vec![1, 2, 1, 2]);
        assert_eq!(kempe_component(&two_edges, &col, 0, 3).unwrap(), VertexSet::full(2));
        let c6 = cycle(6);
        let col = Coloring::from_colors(vec![1, 2, 1, 2, 3, 3]);
        // not proper: 4 and 5 are adjacent and share color 3
        assert!(kempe_component(&c6, &col, 0, 1).is_err());
        let col = Coloring::from_colors(vec![1, 2, 1, 2, 3, 4]);
        assert_eq!(kempe_component(&c6, &col, 0, 1).unwrap(), VertexSet::full(4));
        let col = Coloring::from_colors(vec![1, 2, 1, 2, 3, 2]);
        assert_eq!(kempe_component(&c6, &col, 0, 1).unwrap(), [0, 1, 2, 3, 5].into_iter().collect());
    }

    #[test]
    fn strong_chromatic_fixtures() {
        let o = Oracle::default();
        assert!(o.strong_chromatic_check(&complete(2), 2).unwrap());
        assert!(!o.strong_chromatic_check(&cycle(4), 2).unwrap());
        assert!(o.strong_chromatic_check(&edgeless(4), 2).unwrap());
    }

    #[test]
    fn partition_counts() {
        // Bell-type counts: partitions of 4 elements into blocks of size <= 2
        let mut count = 0;
        for_each_bounded_partition(4, 4, 2, |_| {
            count += 1;
            true
        });
        assert_eq!(count, 10);
        // perfect matchings of 6 points
        let mut count = 0;
        for_each_bounded_partition(6, 3, 2, |_| {
            count += 1;
            true
        });
        assert_eq!(count, 15);
    }
}
