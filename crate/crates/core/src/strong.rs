//! Strong colorings with `r >= 3Δ` colors.
//!
//! The coloring is built by inserting the edges of `g` one at a time into an
//! edgeless graph that starts with a bijective coloring of every block. An
//! inserted edge `xy` with both ends colored `c` is repaired by swapping
//! color names so `c` becomes 1, finding an independent transversal of
//! `{x}, W_2, ..., W_k` and exchanging colors along it.

use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::error::GraphError;
use crate::graph::Graph;
use crate::oracles::Coloring;
use crate::set::VertexSet;
use crate::transversal::{find_transversal_with_anchor_bounded, VertexPartition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StrongError {
    #[error("r = {r} is below 3Δ = {}", 3 * .delta)]
    TooFewColors { r: usize, delta: usize },
    #[error("block {block} has {size} vertices, more than r = {r}")]
    BlockTooLarge { block: usize, size: usize, r: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    /// A repair could not be completed; the state is kept for inspection.
    #[error("repair of edge {:?} failed: {reason}", .state.edge)]
    RepairFailed { reason: &'static str, state: alloc::boxed::Box<RepairState> },
}

/// Snapshot of a repair step.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RepairState {
    pub edge: (usize, usize),
    /// Color of both endpoints before the repair.
    pub color: u32,
    /// `z_i` per block; the block of `x` holds `x`.
    pub z: Vec<usize>,
    pub w_sizes: Vec<usize>,
    /// Transversal vertices per block, empty if the search failed.
    pub transversal: Vec<usize>,
    /// Coloring of the padded graph before the repair.
    pub coloring: Vec<u32>,
}

/// A strong coloring of the padded graph.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StrongColoring {
    /// Colors of the padded vertices `0..padded_order`; the first
    /// `order` are the original vertices.
    pub coloring: Coloring,
    pub blocks: Vec<VertexSet>,
    pub order: usize,
    pub repairs: Vec<RepairState>,
}

impl StrongColoring {
    /// The coloring restricted to the original vertices.
    pub fn original(&self) -> Coloring {
        Coloring::from_colors(self.coloring.as_slice()[..self.order].to_vec())
    }
}

/// Pads each block to size `r` with fresh isolated vertices `n, n+1, ...`,
/// dealt round-robin to the blocks that are still short.
pub fn pad_blocks(n: usize, blocks: &[VertexSet], r: usize) -> Result<Vec<VertexSet>, StrongError> {
    for (i, b) in blocks.iter().enumerate() {
        if b.len() > r {
            return Err(StrongError::BlockTooLarge { block: i, size: b.len(), r });
        }
    }
    let total = r * blocks.len();
    if total > crate::MAX_ORDER {
        return Err(GraphError::TooLarge { order: total, max: crate::MAX_ORDER }.into());
    }
    let mut out = blocks.to_vec();
    let mut next = n;
    while next < total {
        for b in out.iter_mut() {
            if b.len() < r && next < total {
                b.insert(next);
                next += 1;
            }
        }
    }
    Ok(out)
}

/// A proper coloring of `g` with colors `1..=r` that is bijective on every
/// block of `p` once the blocks are padded to size `r`.
pub fn strong_color(g: &Graph, p: &VertexPartition, r: usize) -> Result<StrongColoring, StrongError> {
    strong_color_traced(g, p, r, |_| {})
}

/// As [`strong_color`], calling `trace` after every repair.
pub fn strong_color_traced(
    g: &Graph,
    p: &VertexPartition,
    r: usize,
    mut trace: impl FnMut(&RepairState),
) -> Result<StrongColoring, StrongError> {
    let n = g.order();
    let delta = g.max_degree();
    if r < 3 * delta {
        return Err(StrongError::TooFewColors { r, delta });
    }
    if p.order() != n {
        return Err(GraphError::BadParameter("partition order differs from graph order").into());
    }
    let blocks = pad_blocks(n, p.blocks(), r)?;
    let total = r * blocks.len();
    let mut block_of = vec![0; total];
    let mut colors = vec![0u32; total];
    for (i, b) in blocks.iter().enumerate() {
        for (c, v) in b.iter().enumerate() {
            block_of[v] = i;
            colors[v] = c as u32 + 1;
        }
    }
    let mut pi = Coloring::from_colors(colors);
    let mut h = Graph::new(total);
    let mut repairs = Vec::new();
    for (x, y) in g.edges() {
        h.add_edge(x, y);
        let c = pi.get(x).unwrap();
        if pi.get(y) != Some(c) {
            continue;
        }
        let state = repair(&mut h, &mut pi, &blocks, &block_of, x, y, delta)?;
        trace(&state);
        repairs.push(state);
    }
    Ok(StrongColoring { coloring: pi, blocks, order: n, repairs })
}

fn repair(
    h: &mut Graph,
    pi: &mut Coloring,
    blocks: &[VertexSet],
    block_of: &[usize],
    x: usize,
    y: usize,
    delta: usize,
) -> Result<RepairState, StrongError> {
    let c = pi.get(x).unwrap();
    let before = pi.as_slice().to_vec();
    pi.swap_colors(1, c);
    let bx = block_of[x];
    let mut state = RepairState {
        edge: (x, y),
        color: c,
        z: Vec::with_capacity(blocks.len()),
        w_sizes: Vec::with_capacity(blocks.len()),
        transversal: Vec::new(),
        coloring: before,
    };
    let fail = |reason, state: RepairState| StrongError::RepairFailed { reason, state: alloc::boxed::Box::new(state) };

    // W_i for every block but x's, which contributes {x}
    let mut w = Vec::with_capacity(blocks.len());
    for (i, &b) in blocks.iter().enumerate() {
        if i == bx {
            state.z.push(x);
            state.w_sizes.push(1);
            w.push(VertexSet::singleton(x));
            continue;
        }
        let z = (b & pi.class(1)).first().expect("blocks are bijectively colored");
        let seen = pi.colors_on(h.neighbors(z));
        let wi: VertexSet = b.iter().filter(|&v| !seen.contains(pi.get(v).unwrap() as usize)).collect();
        state.z.push(z);
        state.w_sizes.push(wi.len());
        w.push(wi);
    }
    if state.w_sizes.iter().enumerate().any(|(i, &s)| i != bx && s < 2 * delta) {
        return Err(fail("some W_i has fewer than 2Δ vertices", state));
    }

    let others: Vec<usize> = (0..blocks.len()).filter(|&i| i != bx).collect();
    let mut transversal = vec![x; blocks.len()];
    if !others.is_empty() {
        let span = others.iter().fold(VertexSet::EMPTY, |a, &i| a | w[i]);
        let sub = h.induced_subgraph(span);
        let mut pos = [usize::MAX; crate::MAX_ORDER];
        for (j, &v) in sub.map.iter().enumerate() {
            pos[v] = j;
        }
        let local = |s: VertexSet| -> VertexSet { s.iter().map(|v| pos[v]).collect() };
        let part = VertexPartition::new(sub.graph.order(), others.iter().map(|&i| local(w[i])).collect())?;
        let anchor = local(h.neighbors(x) & span);
        let out = find_transversal_with_anchor_bounded(&sub.graph, &part, anchor, delta);
        let Some(t) = out.transversal else {
            return Err(fail("no transversal of {x}, W_2, ..., W_k", state));
        };
        for (&i, &v) in others.iter().zip(&t) {
            transversal[i] = sub.map[v];
        }
    }
    state.transversal = transversal.clone();

    // zeta: w_i -> 1, z_i -> pi(w_i)
    for (i, &wi) in transversal.iter().enumerate() {
        if i == bx {
            continue;
        }
        let zi = state.z[i];
        let cw = pi.get(wi).unwrap();
        pi.set(zi, cw);
        pi.set(wi, 1);
    }
    if !pi.is_proper(h) {
        return Err(fail("swap left an improper coloring", state));
    }
    Ok(state)
}

/// Merges blocks first-fit by decreasing size into blocks of at most `r`
/// vertices, so that `r` times the block count fits in `MAX_ORDER`.
pub fn coarsen_blocks(blocks: &[VertexSet], r: usize) -> Option<Vec<VertexSet>> {
    let mut sorted = blocks.to_vec();
    sorted.sort_by_key(|b| (core::cmp::Reverse(b.len()), b.first()));
    let mut out: Vec<VertexSet> = Vec::new();
    for b in sorted {
        match out.iter_mut().find(|o| o.len() + b.len() <= r) {
            Some(o) => *o |= b,
            None => out.push(b),
        }
    }
    out.sort_by_key(|b| b.first());
    (r * out.len() <= crate::MAX_ORDER).then_some(out)
}

/// [`strong_color`] on `p` when its padding fits in `MAX_ORDER`, otherwise
/// on a first-fit coarsening of `p`. A coloring that is bijective on the
/// coarser padded blocks is injective on every block of `p`. The flag says
/// whether coarsening was used.
pub fn strong_color_fitting(g: &Graph, p: &VertexPartition, r: usize) -> Result<(StrongColoring, bool), StrongError> {
    if r * p.len() <= crate::MAX_ORDER {
        return strong_color(g, p, r).map(|s| (s, false));
    }
    let blocks = coarsen_blocks(p.blocks(), r).ok_or(GraphError::TooLarge { order: r * p.len(), max: crate::MAX_ORDER })?;
    let coarse = VertexPartition::new(g.order(), blocks)?;
    strong_color(g, &coarse, r).map(|s| (s, true))
}

/// Whether `c` is proper on `g` and uses every color `1..=r` on each block
/// of `p` after padding.
pub fn verify_strong_coloring(g: &Graph, p: &VertexPartition, r: usize, c: &Coloring) -> bool {
    let n = g.order();
    if p.order() != n || c.len() < n {
        return false;
    }
    let orig = Coloring::from_colors(c.as_slice()[..n].to_vec());
    if !orig.is_proper_k_coloring(g, r) {
        return false;
    }
    if c.len() == n {
        // distinct colors on each block leave room for padding
        return p.blocks().iter().all(|&b| b.len() <= r && c.colors_on(b).len() == b.len());
    }
    let Ok(padded) = pad_blocks(n, p.blocks(), r) else { return false };
    let full = crate::ColorSet::full(r + 1).without(0);
    c.len() == r * padded.len() && c.as_slice().iter().all(|&x| x >= 1 && x as usize <= r) && padded.iter().all(|&b| c.colors_on(b) == full)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    fn part(n: usize, blocks: &[&[usize]]) -> VertexPartition {
        VertexPartition::new(n, blocks.iter().map(|b| b.iter().copied().collect()).collect()).unwrap()
    }

    #[test]
    fn edgeless_is_bijective() {
        let p = part(5, &[&[0, 2, 4], &[1, 3]]);
        let s = strong_color(&edgeless(5), &p, 3).unwrap();
        assert!(s.repairs.is_empty());
        assert!(verify_strong_coloring(&edgeless(5), &p, 3, &s.coloring));
    }

    #[test]
    fn matching_two_blocks() {
        let g = Graph::from_edges(6, &[(0, 3), (1, 4), (2, 5)]).unwrap();
        let p = part(6, &[&[0, 1, 2], &[3, 4, 5]]);
        let s = strong_color(&g, &p, 3).unwrap();
        assert!(!s.repairs.is_empty());
        assert!(verify_strong_coloring(&g, &p, 3, &s.coloring));
        assert!(crate::oracles::strong_coloring_for(&g, p.blocks(), 3).is_some());
        // hand-built: 1,2,3 and 2,3,1
        let hand = Coloring::from_colors(vec![1, 2, 3, 2, 3, 1]);
        assert!(verify_strong_coloring(&g, &p, 3, &hand));
    }

    #[test]
    fn c6_padded_to_six() {
        let g = cycle(6);
        let p = part(6, &[&[0, 1, 2], &[3, 4, 5]]);
        let s = strong_color(&g, &p, 6).unwrap();
        assert_eq!(s.coloring.len(), 12);
        assert!(verify_strong_coloring(&g, &p, 6, &s.coloring));
        assert!(verify_strong_coloring(&g, &p, 6, &s.original()));
    }

    #[test]
    fn rejects_repeats_and_small_r() {
        let g = Graph::from_edges(4, &[(0, 2)]).unwrap();
        let p = part(4, &[&[0, 1], &[2, 3]]);
        assert!(!verify_strong_coloring(&g, &p, 2, &Coloring::from_colors(vec![1, 1, 2, 1])));
        assert!(matches!(strong_color(&cycle(5), &part(5, &[&[0, 1, 2, 3, 4]]), 5), Err(StrongError::TooFewColors { .. })));
        assert!(matches!(
            strong_color(&edgeless(4), &part(4, &[&[0, 1, 2], &[3]]), 2),
            Err(StrongError::BlockTooLarge { .. })
        ));
    }

    #[test]
    fn padding_is_round_robin() {
        let b = pad_blocks(3, &[VertexSet(0b001), VertexSet(0b110)], 3).unwrap();
        assert_eq!(b, vec![VertexSet(0b10_1001), VertexSet(0b01_0110)]);
    }
}
