//! Dense simple graphs on at most [`MAX_ORDER`] vertices.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::GraphError;
use crate::set::{subsets_of_size, VertexSet, MAX_ORDER};
use crate::Rational;

/// A finite simple graph with vertices `0..n`, stored as adjacency rows.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

/// An induced subgraph together with the map from its vertices back to the
/// parent graph: vertex `i` of `graph` is vertex `map[i]` of the parent.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subgraph {
    pub graph: Graph,
    pub map: Vec<usize>,
}

impl Subgraph {
    /// The parent-graph vertex set covered by this subgraph.
    pub fn parent_set(&self) -> VertexSet {
        self.map.iter().copied().collect()
    }

    /// Translates a set of subgraph vertices into parent vertices.
    pub fn lift(&self, s: VertexSet) -> VertexSet {
        s.iter().map(|i| self.map[i]).collect()
    }
}

/// Validated list of unordered edges `(u, v)` with `u < v`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct EdgeList {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl EdgeList {
    pub fn new(n: usize, pairs: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut seen = Graph::try_new(n)?;
        let mut edges = Vec::with_capacity(pairs.len());
        for &(a, b) in pairs {
            if a >= n || b >= n {
                return Err(GraphError::VertexOutOfRange { vertex: a.max(b), order: n });
            }
            if a == b {
                return Err(GraphError::Loop(a));
            }
            if seen.has_edge(a, b) {
                return Err(GraphError::DuplicateEdge(a.min(b), a.max(b)));
            }
            seen.add_edge(a, b);
            edges.push((a.min(b), a.max(b)));
        }
        Ok(EdgeList { n, edges })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn as_slice(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    ///
    /// # Panics
    /// If `n` exceeds [`MAX_ORDER`].
    pub fn new(n: usize) -> Self {
        Self::try_new(n).expect("graph order exceeds MAX_ORDER")
    }

    pub fn try_new(n: usize) -> Result<Self, GraphError> {
        if n > MAX_ORDER {
            return Err(GraphError::TooLarge { order: n, max: MAX_ORDER });
        }
        Ok(Graph { n, adj: vec![VertexSet::EMPTY; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let list = EdgeList::new(n, edges)?;
        Ok(Self::from_edge_list(&list))
    }

    pub fn from_edge_list(list: &EdgeList) -> Self {
        let mut g = Graph::new(list.order());
        for &(a, b) in list.as_slice() {
            g.add_edge(a, b);
        }
        g
    }

    /// Builds a graph from symmetric adjacency rows. Loops are dropped and
    /// asymmetric entries rejected.
    pub fn from_rows(rows: Vec<VertexSet>) -> Result<Self, GraphError> {
        let n = rows.len();
        let mut g = Graph::try_new(n)?;
        for (v, row) in rows.iter().enumerate() {
            if row.contains(v) {
                return Err(GraphError::Loop(v));
            }
            if !row.is_subset(VertexSet::full(n)) {
                return Err(GraphError::VertexOutOfRange { vertex: row.last().unwrap_or(0), order: n });
            }
            for u in row.iter() {
                if !rows[u].contains(v) {
                    return Err(GraphError::Asymmetric(v, u));
                }
            }
            g.adj[v] = *row;
        }
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.n && v < self.n, "invalid edge {u}-{v}");
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u].remove(v);
        self.adj[v].remove(u);
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.remove_edge(u, v);
        g
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.n {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn edge_list(&self) -> EdgeList {
        EdgeList { n: self.n, edges: self.edges() }
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Maximum degree; 0 for the empty graph.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|r| r.len()).max().unwrap_or(0)
    }

    /// Minimum degree; 0 for the empty graph.
    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(|r| r.len()).min().unwrap_or(0)
    }

    pub fn is_regular(&self) -> bool {
        self.max_degree() == self.min_degree()
    }

    /// `2|E| / |V|` as an exact rational.
    pub fn average_degree(&self) -> Result<Rational, GraphError> {
        if self.n == 0 {
            return Err(GraphError::Empty);
        }
        Ok(Rational::new(2 * self.size() as i64, self.n as i64))
    }

    /// Edges inside `s`.
    pub fn size_within(&self, s: VertexSet) -> usize {
        s.iter().map(|v| (self.adj[v] & s).len()).sum::<usize>() / 2
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| (s.without(v)).is_subset(self.adj[v]))
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| !self.adj[v].intersects(s))
    }

    /// Vertices adjacent to every other vertex of `s`, restricted to `s`.
    pub fn universal_in(&self, s: VertexSet) -> VertexSet {
        s.iter().filter(|&v| s.without(v).is_subset(self.adj[v])).collect()
    }

    /// Induced subgraph on `s`, relabelled to `0..|s|` in increasing order.
    pub fn induced_subgraph(&self, s: VertexSet) -> Subgraph {
        let map: Vec<usize> = s.iter().filter(|&v| v < self.n).collect();
        let mut pos = [usize::MAX; MAX_ORDER];
        for (i, &v) in map.iter().enumerate() {
            pos[v] = i;
        }
        let mut g = Graph::new(map.len());
        for (i, &v) in map.iter().enumerate() {
            g.adj[i] = (self.adj[v] & s).iter().map(|u| pos[u]).collect();
        }
        Subgraph { graph: g, map }
    }

    /// `G - v` with the relabelling map.
    pub fn without_vertex(&self, v: usize) -> Subgraph {
        self.induced_subgraph(self.vertices().without(v))
    }

    /// The subgraph induced on the neighbourhood of `v`.
    pub fn neighborhood_graph(&self, v: usize) -> Result<Subgraph, GraphError> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: v, order: self.n });
        }
        Ok(self.induced_subgraph(self.adj[v]))
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        let adj = (0..self.n).map(|v| (all - self.adj[v]).without(v)).collect();
        Graph { n: self.n, adj }
    }

    /// Vertex-disjoint union; `b`'s vertices are shifted by `|a|`.
    pub fn disjoint_union(&self, b: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + b.n;
        let mut g = Graph::try_new(n)?;
        for v in 0..self.n {
            g.adj[v] = self.adj[v];
        }
        for v in 0..b.n {
            g.adj[self.n + v] = VertexSet(b.adj[v].0 << self.n);
        }
        Ok(g)
    }

    /// Disjoint union plus every edge between the two parts.
    pub fn join(&self, b: &Graph) -> Result<Graph, GraphError> {
        let mut g = self.disjoint_union(b)?;
        let left = VertexSet::full(self.n);
        let right = VertexSet::full(g.n) - left;
        for v in left.iter() {
            g.adj[v] |= right;
        }
        for v in right.iter() {
            g.adj[v] |= left;
        }
        Ok(g)
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let mut g = Graph::new(self.n);
        for v in 0..self.n {
            g.adj[perm[v]] = self.adj[v].iter().map(|u| perm[u]).collect();
        }
        g
    }

    /// Vertex sets of the connected components of `G[s]`, ordered by least
    /// vertex.
    pub fn components_within(&self, s: VertexSet) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let mut left = s;
        while let Some(start) = left.first() {
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier.iter() {
                    next |= self.adj[v] & s;
                }
                frontier = next - comp;
                comp |= frontier;
            }
            left = left - comp;
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Whether `G[s]` is `k`-connected, by enumerating every candidate
    /// separator of fewer than `k` vertices.
    ///
    /// A graph is `k`-connected when it has more than `k` vertices and no
    /// set of fewer than `k` vertices disconnects it.
    pub fn is_k_connected_within(&self, s: VertexSet, k: usize) -> bool {
        if s.len() <= k {
            return false;
        }
        k == 0 || self.small_separator_within(s, k - 1).is_none()
    }

    pub fn is_k_connected(&self, k: usize) -> bool {
        self.is_k_connected_within(self.vertices(), k)
    }

    /// A smallest set `X` of at most `max_size` vertices of `s` such that
    /// `G[s - X]` is disconnected, if one exists.
    pub fn small_separator_within(&self, s: VertexSet, max_size: usize) -> Option<VertexSet> {
        for size in 0..=max_size.min(s.len().saturating_sub(2)) {
            for x in subsets_of_size(s, size) {
                if self.components_within(s - x).len() > 1 {
                    return Some(x);
                }
            }
        }
        None
    }

    /// Vertex connectivity computed from maximum flows (Menger), independent
    /// of [`Graph::is_k_connected`].
    pub fn vertex_connectivity(&self) -> usize {
        let n = self.n;
        if n <= 1 {
            return 0;
        }
        let mut best = n - 1;
        for s in 0..n {
            for t in s + 1..n {
                if !self.has_edge(s, t) {
                    best = best.min(self.local_connectivity(s, t, best));
                }
            }
        }
        best
    }

    /// Maximum number of internally disjoint `s`-`t` paths, capped at `cap`.
    fn local_connectivity(&self, s: usize, t: usize, cap: usize) -> usize {
        // split every vertex v into v_in = 2v and v_out = 2v+1
        let m = 2 * self.n;
        let mut cap_m = vec![vec![0i32; m]; m];
        for v in 0..self.n {
            cap_m[2 * v][2 * v + 1] = if v == s || v == t { i32::MAX / 4 } else { 1 };
            for u in self.adj[v].iter() {
                cap_m[2 * v + 1][2 * u] = i32::MAX / 4;
            }
        }
        let (src, snk) = (2 * s + 1, 2 * t);
        let mut flow = 0;
        while flow < cap {
            let mut prev = vec![usize::MAX; m];
            prev[src] = src;
            let mut queue = VecDeque::from([src]);
            while let Some(a) = queue.pop_front() {
                if a == snk {
                    break;
                }
                for b in 0..m {
                    if prev[b] == usize::MAX && cap_m[a][b] > 0 {
                        prev[b] = a;
                        queue.push_back(b);
                    }
                }
            }
            if prev[snk] == usize::MAX {
                break;
            }
            let mut b = snk;
            while b != src {
                let a = prev[b];
                cap_m[a][b] -= 1;
                cap_m[b][a] += 1;
                b = a;
            }
            flow += 1;
        }
        flow
    }
}

/// Named constructions used throughout the tests and the corpus.
pub mod families {
    use super::*;

    /// `K_n`.
    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for v in 0..n {
            g.adj[v] = VertexSet::full(n).without(v);
        }
        g
    }

    /// `E_n`, the edgeless graph.
    pub fn edgeless(n: usize) -> Graph {
        Graph::new(n)
    }

    /// `C_n` for `n >= 3`.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut g = Graph::new(n);
        for v in 0..n {
            g.add_edge(v, (v + 1) % n);
        }
        g
    }

    /// `P_n`, the path on `n` vertices.
    pub fn path(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        g
    }

    /// `K_{1,leaves}` with the centre at vertex 0.
    pub fn star(leaves: usize) -> Graph {
        let mut g = Graph::new(leaves + 1);
        for v in 1..=leaves {
            g.add_edge(0, v);
        }
        g
    }

    /// `K_{a,b}`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        edgeless(a).join(&edgeless(b)).expect("order within bounds")
    }

    pub fn petersen() -> Graph {
        let mut g = Graph::new(10);
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(i, i + 5);
            g.add_edge(5 + i, 5 + (i + 2) % 5);
        }
        g
    }

    /// `C_cycle_len` with every vertex replaced by `K_clique_size` and
    /// consecutive cliques completely joined. Vertex `i * clique_size + j`
    /// is the `j`-th member of the `i`-th clique.
    pub fn blowup_cycle(cycle_len: usize, clique_size: usize) -> Result<Graph, GraphError> {
        if cycle_len < 3 || clique_size < 1 {
            return Err(GraphError::BadParameter("blowup_cycle needs cycle_len >= 3 and clique_size >= 1"));
        }
        let n = cycle_len * clique_size;
        let mut g = Graph::try_new(n)?;
        let part = |i: usize| (0..clique_size).map(move |j| (i % cycle_len) * clique_size + j);
        for i in 0..cycle_len {
            for a in part(i) {
                for b in part(i) {
                    if a < b {
                        g.add_edge(a, b);
                    }
                }
                for b in part(i + 1) {
                    if !g.has_edge(a, b) {
                        g.add_edge(a, b);
                    }
                }
            }
        }
        Ok(g)
    }

    /// The 15-vertex, 8-regular blow-up of `C_5` by triangles.
    pub fn m8() -> Graph {
        blowup_cycle(5, 3).expect("fixed parameters")
    }
}
