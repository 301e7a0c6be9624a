//! Independent transversals of vertex partitions.
//!
//! When a partition has no independent transversal the solver returns a
//! domination certificate: a set `J` of blocks and an induced matching `M`
//! whose vertices totally dominate the blocks of `J`, with the matching
//! edges forming a tree on `J`. It is extracted from an edge-minimal
//! subgraph `Q` by the usual merge-two-blocks recursion, and `Q` is carried
//! in the certificate because inducedness only holds there.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::GraphError;
use crate::graph::Graph;
use crate::set::VertexSet;
use crate::Rational;

/// Blocks `V_1, ..., V_r` partitioning the vertices of a graph.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VertexPartition {
    blocks: Vec<VertexSet>,
    block_of: Vec<usize>,
}

impl VertexPartition {
    /// Blocks must be nonempty, disjoint and cover `0..n`.
    pub fn new(n: usize, blocks: Vec<VertexSet>) -> Result<Self, GraphError> {
        let mut block_of = vec![usize::MAX; n];
        for (i, b) in blocks.iter().enumerate() {
            if b.is_empty() {
                return Err(GraphError::BadParameter("empty block"));
            }
            for v in b.iter() {
                if v >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: v, order: n });
                }
                if block_of[v] != usize::MAX {
                    return Err(GraphError::BadParameter("blocks overlap"));
                }
                block_of[v] = i;
            }
        }
        if block_of.contains(&usize::MAX) {
            return Err(GraphError::BadParameter("blocks do not cover every vertex"));
        }
        Ok(VertexPartition { blocks, block_of })
    }

    /// Builds the partition from a block index per vertex; indices must be
    /// `0..r` with every index used.
    pub fn from_block_of(block_of: &[usize]) -> Result<Self, GraphError> {
        let r = block_of.iter().map(|&b| b + 1).max().unwrap_or(0);
        let mut blocks = vec![VertexSet::EMPTY; r];
        for (v, &b) in block_of.iter().enumerate() {
            blocks[b].insert(v);
        }
        Self::new(block_of.len(), blocks)
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }

    pub fn block(&self, i: usize) -> VertexSet {
        self.blocks[i]
    }

    pub fn block_of(&self, v: usize) -> usize {
        self.block_of[v]
    }

    pub fn union_of(&self, ids: &[usize]) -> VertexSet {
        ids.iter().fold(VertexSet::EMPTY, |acc, &i| acc | self.blocks[i])
    }

    pub fn order(&self) -> usize {
        self.block_of.len()
    }
}

/// Proof that a partition has no independent transversal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DominationCertificate {
    /// Block indices, ascending.
    pub blocks: Vec<usize>,
    /// Matching edges `(u, v)` with `u < v`.
    pub matching: Vec<(usize, usize)>,
    pub root: (usize, usize),
    /// Edge set of the edge-minimal subgraph the certificate lives in.
    pub reduced_edges: Vec<(usize, usize)>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum TransversalOutcome {
    /// One vertex per block, in block order.
    Transversal(Vec<usize>),
    Certificate(DominationCertificate),
}

/// Lexicographically least independent transversal of `blocks` using only
/// vertices of `allowed`, by depth-first search over blocks in index order
/// with forward checking.
pub fn search(g: &Graph, blocks: &[VertexSet], allowed: VertexSet) -> Option<Vec<usize>> {
    fn rec(g: &Graph, blocks: &[VertexSet], i: usize, avail: VertexSet, out: &mut Vec<usize>) -> bool {
        if i == blocks.len() {
            return true;
        }
        for v in (blocks[i] & avail).iter() {
            let next = avail - g.neighbors(v);
            if blocks[i + 1..].iter().any(|b| !b.intersects(next)) {
                continue;
            }
            out.push(v);
            if rec(g, blocks, i + 1, next, out) {
                return true;
            }
            out.pop();
        }
        false
    }
    if blocks.iter().any(|b| !b.intersects(allowed)) {
        return None;
    }
    let mut out = Vec::with_capacity(blocks.len());
    rec(g, blocks, 0, allowed, &mut out).then_some(out)
}

/// Whether `t` (one vertex per block, in block order) is an independent
/// transversal.
pub fn is_independent_transversal(g: &Graph, blocks: &[VertexSet], t: &[usize]) -> bool {
    t.len() == blocks.len()
        && t.iter().zip(blocks).all(|(&v, b)| b.contains(v))
        && g.is_independent(t.iter().copied().collect())
        && t.iter().collect::<alloc::collections::BTreeSet<_>>().len() == t.len()
}

/// Removes edges in lexicographic order while no transversal appears.
fn edge_minimize(g: &Graph, blocks: &[VertexSet]) -> Graph {
    let mut q = g.clone();
    for (u, v) in g.edges() {
        q.remove_edge(u, v);
        if search(&q, blocks, q.vertices()).is_some() {
            q.add_edge(u, v);
        }
    }
    q
}

/// A block in the recursion: the original block indices merged into it and
/// its current vertices.
#[derive(Clone)]
struct Block {
    ids: Vec<usize>,
    verts: VertexSet,
}

/// Follows the merge recursion on an edge-minimal `q`.
fn extract(q: &Graph, blocks: &[Block], x: usize, y: usize) -> (Vec<usize>, Vec<(usize, usize)>) {
    let sets: Vec<VertexSet> = blocks.iter().map(|b| b.verts).collect();
    let a = sets.iter().position(|b| b.contains(x)).expect("x lies in a block");
    let b = sets.iter().position(|s| s.contains(y)).expect("y lies in a block");
    let root = (x.min(y), x.max(y));

    // H = Q - N({x, y}) - E(X, Y), with X and Y merged
    let keep = q.vertices() - q.neighbors(x) - q.neighbors(y);
    let mut h = q.clone();
    for v in q.vertices().iter() {
        if !keep.contains(v) {
            for u in h.neighbors(v).iter() {
                h.remove_edge(u, v);
            }
        }
    }
    for u in (sets[a] & keep).iter() {
        for v in (h.neighbors(u) & sets[b]).iter() {
            h.remove_edge(u, v);
        }
    }
    let z = (sets[a] | sets[b]) & keep;
    let mut ids = blocks[a].ids.clone();
    ids.extend_from_slice(&blocks[b].ids);
    if z.is_empty() {
        ids.sort_unstable();
        return (ids, vec![root]);
    }
    let mut merged: Vec<Block> = Vec::with_capacity(blocks.len() - 1);
    for (i, blk) in blocks.iter().enumerate() {
        if i == a {
            merged.push(Block { ids: ids.clone(), verts: z });
        } else if i != b {
            merged.push(Block { ids: blk.ids.clone(), verts: blk.verts & keep });
        }
    }
    // restrict H to the surviving vertices, keeping labels
    let msets: Vec<VertexSet> = merged.iter().map(|b| b.verts).collect();
    debug_assert!(search(&h, &msets, keep).is_none());
    let hq = edge_minimize_within(&h, &msets, keep);
    let (zz, w) = hq
        .edges()
        .into_iter()
        .find(|&(u, v)| z.contains(u) || z.contains(v))
        .expect("every vertex of Z has a neighbour in the minimal graph");
    let (mut j, mut m) = extract(&hq, &merged, zz, w);
    m.push(root);
    m.sort_unstable();
    j.sort_unstable();
    j.dedup();
    (j, m)
}

/// Edge minimization restricted to the vertices `within`; other vertices
/// are isolated.
fn edge_minimize_within(g: &Graph, blocks: &[VertexSet], within: VertexSet) -> Graph {
    let mut q = g.clone();
    for (u, v) in g.edges() {
        q.remove_edge(u, v);
        if search(&q, blocks, within).is_some() {
            q.add_edge(u, v);
        }
    }
    q
}

/// An independent transversal of `p`, or a domination certificate proving
/// none exists.
pub fn find_independent_transversal(g: &Graph, p: &VertexPartition) -> TransversalOutcome {
    if let Some(t) = search(g, p.blocks(), g.vertices()) {
        return TransversalOutcome::Transversal(t);
    }
    TransversalOutcome::Certificate(certificate(g, p.blocks()))
}

fn certificate(g: &Graph, sets: &[VertexSet]) -> DominationCertificate {
    let q = edge_minimize(g, sets);
    let (x, y) = q.edges()[0];
    let blocks: Vec<Block> = sets.iter().enumerate().map(|(i, &verts)| Block { ids: vec![i], verts }).collect();
    let (j, m) = extract(&q, &blocks, x, y);
    DominationCertificate { blocks: j, matching: m, root: (x, y), reduced_edges: q.edges() }
}

/// Checks every certificate condition; see [`DominationCertificate`].
pub fn verify_certificate(g: &Graph, p: &VertexPartition, cert: &DominationCertificate) -> bool {
    let n = g.order();
    if p.order() != n || cert.blocks.is_empty() {
        return false;
    }
    let mut q = Graph::new(n);
    for &(u, v) in &cert.reduced_edges {
        if u >= n || v >= n || u == v || !g.has_edge(u, v) || q.has_edge(u, v) {
            return false;
        }
        q.add_edge(u, v);
    }
    let j = &cert.blocks;
    if j.windows(2).any(|w| w[0] >= w[1]) || j.iter().any(|&i| i >= p.len()) {
        return false;
    }
    let span = p.union_of(j);
    let m = &cert.matching;
    let norm = |(u, v): (usize, usize)| (u.min(v), u.max(v));
    if !m.iter().any(|&e| norm(e) == norm(cert.root)) {
        return false;
    }
    let mut ends = VertexSet::EMPTY;
    for &(u, v) in m {
        if u >= n || v >= n || !q.has_edge(u, v) || !span.contains(u) || !span.contains(v) {
            return false;
        }
        if ends.contains(u) || ends.contains(v) {
            return false;
        }
        ends.insert(u);
        ends.insert(v);
    }
    // induced: the only Q-edges among matched vertices are the matching
    if q.size_within(ends) != m.len() {
        return false;
    }
    // total domination of Q[span]
    if span.iter().any(|v| !q.neighbors(v).intersects(ends)) {
        return false;
    }
    // block contraction is a simple tree on J
    if m.len() + 1 != j.len() {
        return false;
    }
    let idx = |b: usize| j.iter().position(|&i| i == b).unwrap();
    let mut tree = Graph::new(j.len());
    for &(u, v) in m {
        let (a, b) = (idx(p.block_of(u)), idx(p.block_of(v)));
        if a == b || tree.has_edge(a, b) {
            return false;
        }
        tree.add_edge(a, b);
    }
    tree.is_connected()
}

/// Which hypotheses of the avoidance lemmas hold for an instance.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct AvoidHypotheses {
    /// `d(v) <= min(t, |V_i| - t)` for every `v` in every `V_i`.
    pub degree: bool,
    /// `|S|` below the smallest block size.
    pub small_s: bool,
    /// The weakened condition: `|S|` below the second smallest block size
    /// and some smallest block not inside `S`.
    pub weakened_s: bool,
}

impl AvoidHypotheses {
    pub fn lopsided(&self) -> bool {
        self.degree && self.small_s
    }

    pub fn weakened(&self) -> bool {
        self.degree && self.weakened_s
    }

    pub fn any(&self) -> bool {
        self.lopsided() || self.weakened()
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AvoidOutcome {
    pub transversal: Option<Vec<usize>>,
    pub hypotheses: AvoidHypotheses,
}

pub fn avoid_hypotheses(g: &Graph, p: &VertexPartition, s: VertexSet, t: Rational) -> AvoidHypotheses {
    let degree = t >= Rational::from_integer(1)
        && p.blocks().iter().all(|b| {
            let cap = t.min(Rational::from_integer(b.len() as i64) - t);
            b.iter().all(|v| Rational::from_integer(g.degree(v) as i64) <= cap)
        });
    let mut sizes: Vec<usize> = p.blocks().iter().map(|b| b.len()).collect();
    sizes.sort_unstable();
    let small_s = sizes.first().is_some_and(|&m| s.len() < m);
    let weakened_s = match sizes.get(1) {
        Some(&second) => {
            let min = sizes[0];
            s.len() < second && p.blocks().iter().any(|b| b.len() == min && !b.is_subset(s))
        }
        None => small_s,
    };
    AvoidHypotheses { degree, small_s, weakened_s }
}

/// An independent transversal disjoint from `s`. Hypotheses are evaluated
/// and reported; the search runs either way.
pub fn find_transversal_avoiding(g: &Graph, p: &VertexPartition, s: VertexSet, t: Rational) -> AvoidOutcome {
    AvoidOutcome {
        transversal: search(g, p.blocks(), g.vertices() - s),
        hypotheses: avoid_hypotheses(g, p, s, t),
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AnchorOutcome {
    /// One vertex per block, none adjacent to the anchor.
    pub transversal: Option<Vec<usize>>,
    /// Blocks of size at least `2D` and fewer than `2D` anchor neighbours.
    pub hypotheses_hold: bool,
}

/// A transversal of `p` avoiding `x_neighbors`, i.e. an independent set
/// together with an implicit anchor vertex adjacent to exactly
/// `x_neighbors`. Hypotheses are measured against `D = Δ(h)`.
pub fn find_transversal_with_anchor(h: &Graph, p: &VertexPartition, x_neighbors: VertexSet) -> AnchorOutcome {
    find_transversal_with_anchor_bounded(h, p, x_neighbors, h.max_degree())
}

/// As [`find_transversal_with_anchor`] with an explicit `D >= Δ(h)`.
pub fn find_transversal_with_anchor_bounded(
    h: &Graph,
    p: &VertexPartition,
    x_neighbors: VertexSet,
    d: usize,
) -> AnchorOutcome {
    let hypotheses_hold = d >= h.max_degree()
        && d >= 1
        && p.blocks().iter().all(|b| b.len() >= 2 * d)
        && x_neighbors.len() < 2 * d;
    AnchorOutcome { transversal: search(h, p.blocks(), h.vertices() - x_neighbors), hypotheses_hold }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    fn part(n: usize, blocks: &[&[usize]]) -> VertexPartition {
        VertexPartition::new(n, blocks.iter().map(|b| b.iter().copied().collect()).collect()).unwrap()
    }

    #[test]
    fn k2_certificate() {
        let g = complete(2);
        let p = part(2, &[&[0], &[1]]);
        let TransversalOutcome::Certificate(c) = find_independent_transversal(&g, &p) else { panic!() };
        assert_eq!(c.blocks, [0, 1]);
        assert_eq!(c.matching, [(0, 1)]);
        assert!(verify_certificate(&g, &p, &c));
        let bad = DominationCertificate { matching: vec![], ..c };
        assert!(!verify_certificate(&g, &p, &bad));
    }

    #[test]
    fn edgeless_and_c4() {
        let p = part(4, &[&[0, 1], &[2, 3]]);
        assert_eq!(find_independent_transversal(&edgeless(4), &p), TransversalOutcome::Transversal(vec![0, 2]));
        // C_4 as x1 y1 x2 y2 with blocks {x1, x2}, {y1, y2}: every cross
        // pair is adjacent
        let c4 = cycle(4);
        let p = part(4, &[&[0, 2], &[1, 3]]);
        let TransversalOutcome::Certificate(c) = find_independent_transversal(&c4, &p) else { panic!() };
        assert!(verify_certificate(&c4, &p, &c));
    }

    #[test]
    fn deeper_certificate() {
        // three blocks where the middle block is dominated in two steps
        let g = Graph::from_edges(6, &[(0, 2), (1, 3), (2, 4), (3, 5), (0, 3), (1, 2)]).unwrap();
        let p = part(6, &[&[0, 1], &[2, 3], &[4, 5]]);
        match find_independent_transversal(&g, &p) {
            TransversalOutcome::Transversal(t) => assert!(is_independent_transversal(&g, p.blocks(), &t)),
            TransversalOutcome::Certificate(c) => assert!(verify_certificate(&g, &p, &c)),
        }
    }

    #[test]
    fn avoidance() {
        let e6 = edgeless(6);
        let p = part(6, &[&[0, 1, 2], &[3, 4, 5]]);
        let s: VertexSet = [0, 3].into_iter().collect();
        let out = find_transversal_avoiding(&e6, &p, s, Rational::from_integer(1));
        assert_eq!(out.transversal, Some(vec![1, 4]));
        assert!(out.hypotheses.lopsided());
    }

    #[test]
    fn anchored() {
        let m = Graph::from_edges(4, &[(0, 2), (1, 3)]).unwrap();
        let p = part(4, &[&[0, 1], &[2, 3]]);
        let out = find_transversal_with_anchor(&m, &p, VertexSet::singleton(0));
        assert!(out.hypotheses_hold);
        assert_eq!(out.transversal, Some(vec![1, 2]));
        let k2 = complete(2);
        let p = part(2, &[&[0], &[1]]);
        let out = find_transversal_with_anchor(&k2, &p, VertexSet::EMPTY);
        assert!(!out.hypotheses_hold);
        assert_eq!(out.transversal, None);
    }

    #[test]
    fn partition_validation() {
        assert!(VertexPartition::new(3, vec![VertexSet(0b011), VertexSet(0b110)]).is_err());
        assert!(VertexPartition::new(3, vec![VertexSet(0b011)]).is_err());
        assert!(VertexPartition::new(2, vec![VertexSet(0b11), VertexSet::EMPTY]).is_err());
        assert_eq!(VertexPartition::from_block_of(&[1, 0, 1]).unwrap().block(1), VertexSet(0b101));
    }
}
