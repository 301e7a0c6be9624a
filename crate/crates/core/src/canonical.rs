//! Canonical labeling by individualization and refinement.
//!
//! The canonical form of `g` is the relabeling whose adjacency rows are
//! lexicographically greatest among the leaves of the search tree. Only one
//! vertex per twin class is individualized at each node, since swapping two
//! twins is an automorphism fixing the current partition.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;
use crate::set::VertexSet;

/// Adjacency rows of the canonically relabeled graph. Two graphs are
/// isomorphic iff their codes are equal.
pub type Code = Vec<u64>;

/// Canonical relabeling: vertex `v` receives label `perm[v]`.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let mut best: Option<(Code, Vec<usize>)> = None;
    let cells = vec![g.vertices().to_vec()];
    search(g, cells, &mut best);
    best.map(|(_, perm)| perm).unwrap_or_default()
}

pub fn canonical_code(g: &Graph) -> Code {
    code_for(g, &canonical_labeling(g))
}

pub fn canonical_form(g: &Graph) -> Graph {
    g.permuted(&canonical_labeling(g))
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    let sorted = |g: &Graph| {
        let mut d = g.degrees();
        d.sort_unstable();
        d
    };
    a.order() == b.order() && a.size() == b.size() && sorted(a) == sorted(b) && canonical_code(a) == canonical_code(b)
}

fn code_for(g: &Graph, perm: &[usize]) -> Code {
    let mut rows = vec![0u64; g.order()];
    for v in 0..g.order() {
        rows[perm[v]] = g.neighbors(v).iter().map(|u| 1u64 << (63 - perm[u])).fold(0, |a, b| a | b);
    }
    rows
}

fn refine(g: &Graph, cells: &mut Vec<Vec<usize>>) {
    loop {
        let masks: Vec<VertexSet> = cells.iter().map(|c| c.iter().copied().collect()).collect();
        let mut next = Vec::with_capacity(cells.len());
        for cell in cells.iter() {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u8>, usize)> = cell
                .iter()
                .map(|&v| (masks.iter().map(|&m| (g.neighbors(v) & m).len() as u8).collect(), v))
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                    start = i;
                }
            }
        }
        let stable = next.len() == cells.len();
        *cells = next;
        if stable {
            return;
        }
    }
}

fn search(g: &Graph, mut cells: Vec<Vec<usize>>, best: &mut Option<(Code, Vec<usize>)>) {
    refine(g, &mut cells);
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let mut perm = vec![0; g.order()];
        for (label, cell) in cells.iter().enumerate() {
            perm[cell[0]] = label;
        }
        let code = code_for(g, &perm);
        if best.as_ref().is_none_or(|(b, _)| code > *b) {
            *best = Some((code, perm));
        }
        return;
    };
    let cell = &cells[target];
    let mut tried: Vec<usize> = Vec::new();
    for &v in cell {
        if tried.iter().any(|&u| g.neighbors(u).without(v) == g.neighbors(v).without(u)) {
            continue;
        }
        tried.push(v);
        let mut split = Vec::with_capacity(cells.len() + 1);
        split.extend_from_slice(&cells[..target]);
        split.push(vec![v]);
        split.push(cell.iter().copied().filter(|&u| u != v).collect());
        split.extend_from_slice(&cells[target + 1..]);
        search(g, split, best);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn relabelings_share_a_code() {
        let p = petersen();
        let perm = [3, 7, 1, 0, 9, 2, 8, 5, 4, 6];
        assert_eq!(canonical_code(&p), canonical_code(&p.permuted(&perm)));
        assert!(are_isomorphic(&m8(), &m8().permuted(&[14, 13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 0])));
    }

    #[test]
    fn distinguishes_small_graphs() {
        assert!(!are_isomorphic(&path(4), &star(3)));
        assert!(are_isomorphic(&edgeless(2).join(&edgeless(2)).unwrap(), &cycle(4)));
        // same degree sequence, not isomorphic
        let two_triangles = complete(3).disjoint_union(&complete(3)).unwrap();
        assert!(!are_isomorphic(&two_triangles, &cycle(6)));
    }

    #[test]
    fn canonical_form_is_idempotent() {
        let g = blowup_cycle(4, 2).unwrap();
        let c = canonical_form(&g);
        assert_eq!(canonical_form(&c), c);
    }
}
