//! Graph corpora: every graph up to isomorphism on a few vertices, seeded
//! random graphs, named families and the synthesized clique-join families
//! used where hypotheses are vacuous on small exhaustive corpora.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::canonical::canonical_code;
use crate::error::GraphError;
use crate::graph::{families, Graph};
use crate::set::VertexSet;

/// Number of unlabeled graphs on `n` vertices, `n = 0..=10`.
pub const KNOWN_COUNTS: [usize; 11] = [1, 1, 2, 4, 11, 34, 156, 1044, 12346, 274668, 12005168];

/// Deterministic generator for every seeded stream in the crate.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// One representative of each isomorphism class on exactly `n` vertices,
/// ordered by canonical code.
pub fn exhaustive(n: usize) -> Vec<Graph> {
    let mut level = alloc::vec![Graph::new(0)];
    for m in 1..=n {
        level = extend(&level, m);
    }
    level
}

/// Every isomorphism class on `0..=n` vertices, grouped by order.
pub fn exhaustive_up_to(n: usize) -> Vec<Vec<Graph>> {
    let mut out = alloc::vec![alloc::vec![Graph::new(0)]];
    for m in 1..=n {
        let next = extend(out.last().unwrap(), m);
        out.push(next);
    }
    out
}

/// Adds a vertex with every possible neighbourhood to each graph of order
/// `m - 1` and keeps one graph per canonical code.
fn extend(prev: &[Graph], m: usize) -> Vec<Graph> {
    let mut seen: BTreeMap<Vec<u64>, Graph> = BTreeMap::new();
    for g in prev {
        for bits in 0u64..(1u64 << (m - 1)) {
            let mut h = Graph::new(m);
            for (u, v) in g.edges() {
                h.add_edge(u, v);
            }
            for u in VertexSet(bits).iter() {
                h.add_edge(u, m - 1);
            }
            seen.entry(canonical_code(&h)).or_insert(h);
        }
    }
    seen.into_values().collect()
}

/// Compares generated class counts against [`KNOWN_COUNTS`].
pub fn self_check(levels: &[Vec<Graph>]) -> Result<(), (usize, usize, usize)> {
    for (n, level) in levels.iter().enumerate() {
        if let Some(&want) = KNOWN_COUNTS.get(n) {
            if level.len() != want {
                return Err((n, level.len(), want));
            }
        }
    }
    Ok(())
}

/// Erdős–Rényi `G(n, p)`.
pub fn gnp(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// `count` graphs `G(n, p)` from one seed.
pub fn gnp_stream(n: usize, p: f64, count: usize, seed: u64) -> Vec<Graph> {
    let mut r = rng(seed);
    (0..count).map(|_| gnp(n, p, &mut r)).collect()
}

/// Looks up a named family: `M8`, `petersen`, `K<n>`, `E<n>`, `C<n>`,
/// `P<n>`, `S<leaves>`, `blowup<m>x<s>`.
pub fn named(name: &str) -> Result<Graph, GraphError> {
    let bad = GraphError::BadParameter("unknown family name");
    let num = |s: &str| s.parse::<usize>().map_err(|_| GraphError::BadParameter("bad family size"));
    match name {
        "M8" | "m8" => return Ok(families::m8()),
        "petersen" | "Petersen" => return Ok(families::petersen()),
        _ => {}
    }
    if let Some(rest) = name.strip_prefix("blowup") {
        let (m, s) = rest.split_once('x').ok_or(bad)?;
        return families::blowup_cycle(num(m)?, num(s)?);
    }
    let (head, tail) = name.split_at(name.char_indices().nth(1).map_or(name.len(), |(i, _)| i));
    let n = num(tail)?;
    if n > crate::MAX_ORDER {
        return Err(GraphError::TooLarge { order: n, max: crate::MAX_ORDER });
    }
    match head {
        "K" => Ok(families::complete(n)),
        "E" => Ok(families::edgeless(n)),
        "C" if n >= 3 => Ok(families::cycle(n)),
        "P" => Ok(families::path(n)),
        "S" => Ok(families::star(n)),
        _ => Err(bad),
    }
}

/// Two disjoint cliques `K_a`, `K_b` joined by a random bipartite graph in
/// which every vertex has at most `cross` neighbours across.
pub fn two_cliques_sparse_cross(a: usize, b: usize, cross: usize, rng: &mut impl Rng) -> Graph {
    let mut g = families::complete(a).disjoint_union(&families::complete(b)).expect("orders checked by caller");
    let mut pairs: Vec<(usize, usize)> = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect();
    pairs.shuffle(rng);
    let mut used = alloc::vec![0usize; a + b];
    for (u, v) in pairs {
        if used[u] < cross && used[v] < cross {
            g.add_edge(u, v);
            used[u] += 1;
            used[v] += 1;
        }
    }
    g
}

/// Disjoint cliques of the given sizes, each missing `holes` disjoint
/// edges, plus random edges between different cliques added while both ends
/// stay below degree `delta`.
pub fn near_clique_union(sizes: &[usize], holes: usize, delta: usize, rng: &mut impl Rng) -> Graph {
    let n: usize = sizes.iter().sum();
    let mut g = Graph::new(n);
    let mut owner = alloc::vec![0; n];
    let mut start = 0;
    for (i, &s) in sizes.iter().enumerate() {
        let mut members: Vec<usize> = (start..start + s).collect();
        for &u in &members {
            owner[u] = i;
            for v in u + 1..start + s {
                g.add_edge(u, v);
            }
        }
        members.shuffle(rng);
        for pair in members.chunks(2).take(holes) {
            if let [u, v] = *pair {
                g.remove_edge(u, v);
            }
        }
        start += s;
    }
    let mut pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| owner[u] != owner[v]).collect();
    pairs.shuffle(rng);
    for (u, v) in pairs {
        if g.degree(u) < delta && g.degree(v) < delta {
            g.add_edge(u, v);
        }
    }
    g
}

/// A union of `count` random cliques of sizes in `sizes` placed on `n`
/// vertices, so that cliques overlap, plus sparse noise edges.
pub fn overlapping_cliques(
    n: usize,
    count: usize,
    sizes: core::ops::RangeInclusive<usize>,
    noise: f64,
    rng: &mut impl Rng,
) -> Graph {
    let mut g = Graph::new(n);
    let verts: Vec<usize> = (0..n).collect();
    for _ in 0..count {
        let s = rng.gen_range(sizes.clone()).min(n);
        let members: Vec<usize> = verts.choose_multiple(rng, s).copied().collect();
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                if !g.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
    }
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) && rng.gen_bool(noise) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Random partition of `0..n` into between 1 and `max_blocks` nonempty
/// blocks.
pub fn random_partition(n: usize, max_blocks: usize, rng: &mut impl Rng) -> Vec<VertexSet> {
    let k = rng.gen_range(1..=max_blocks.min(n).max(1));
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut blocks = alloc::vec![VertexSet::EMPTY; k];
    // every block gets one vertex, the rest land uniformly
    for (i, &v) in order.iter().enumerate() {
        let b = if i < k { i } else { rng.gen_range(0..k) };
        blocks[b].insert(v);
    }
    blocks
}

/// Random partition of `0..n` into blocks of size at most `size`, as few
/// blocks as possible.
pub fn random_partition_capped(n: usize, size: usize, rng: &mut impl Rng) -> Vec<VertexSet> {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    order.chunks(size.max(1)).map(|c| c.iter().copied().collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts_up_to_six() {
        let levels = exhaustive_up_to(6);
        assert_eq!(self_check(&levels), Ok(()));
        assert_eq!(exhaustive(4).len(), 11);
    }

    #[test]
    fn random_streams_repeat() {
        assert_eq!(gnp_stream(8, 0.4, 100, 7), gnp_stream(8, 0.4, 100, 7));
        assert_ne!(gnp_stream(8, 0.4, 100, 7), gnp_stream(8, 0.4, 100, 8));
    }

    #[test]
    fn named_families() {
        assert_eq!(named("M8").unwrap(), families::m8());
        assert_eq!(named("K5").unwrap(), families::complete(5));
        assert_eq!(named("C7").unwrap().size(), 7);
        assert_eq!(named("blowup5x3").unwrap(), families::m8());
        assert!(named("Q3").is_err());
        assert!(named("C2").is_err());
    }

    #[test]
    fn sparse_cross_degree_cap() {
        let mut r = rng(1);
        for _ in 0..20 {
            let g = two_cliques_sparse_cross(8, 8, 2, &mut r);
            assert!(g.max_degree() <= 9);
            assert!(g.is_clique(VertexSet::full(8)));
        }
    }
}
