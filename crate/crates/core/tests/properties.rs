use bkcolor::choosability::{is_colorable_from_lists, is_f_choosable, ListAssignment};
use bkcolor::corpus::{exhaustive_up_to, random_partition_capped, rng};
use bkcolor::oracles::{find_k_coloring, Oracle};
use bkcolor::set::subsets_of_size;
use bkcolor::strong::{strong_color, verify_strong_coloring};
use bkcolor::transversal::VertexPartition;
use bkcolor::{families, ColorSet, Graph, VertexSet};
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::new(n);
            let mut it = bits.into_iter();
            for u in 0..n {
                for v in u + 1..n {
                    if it.next().unwrap() {
                        g.add_edge(u, v);
                    }
                }
            }
            g
        })
    })
}

proptest! {
    #[test]
    fn degree_sum_is_twice_size(g in graph(12)) {
        prop_assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.size());
    }

    #[test]
    fn complement_is_an_involution(g in graph(12)) {
        let c = g.complement();
        prop_assert_eq!(c.size() + g.size(), g.order() * (g.order() - 1) / 2);
        prop_assert_eq!(c.complement(), g);
    }

    #[test]
    fn join_sizes_and_degrees(a in graph(8), b in graph(8)) {
        let j = a.join(&b).unwrap();
        prop_assert_eq!(j.order(), a.order() + b.order());
        prop_assert_eq!(j.size(), a.size() + b.size() + a.order() * b.order());
        for v in 0..a.order() {
            prop_assert_eq!(j.degree(v), a.degree(v) + b.order());
        }
        for v in 0..b.order() {
            prop_assert_eq!(j.degree(a.order() + v), b.degree(v) + a.order());
        }
    }

    #[test]
    fn neighborhoods_have_order_degree(g in graph(12)) {
        for v in 0..g.order() {
            if g.degree(v) > 0 {
                prop_assert_eq!(g.neighborhood_graph(v).unwrap().graph.order(), g.degree(v));
            }
        }
    }

    #[test]
    fn optimal_colorings_are_proper(g in graph(10)) {
        let chi = Oracle::default().chromatic_number(&g).unwrap();
        let c = find_k_coloring(&g, chi, &[]).unwrap();
        prop_assert!(c.is_proper_k_coloring(&g, chi));
        if chi > 1 {
            prop_assert!(find_k_coloring(&g, chi - 1, &[]).is_none());
        }
    }

    #[test]
    fn strong_color_with_three_delta(g in graph(8), seed in any::<u64>()) {
        let d = g.max_degree();
        prop_assume!(d >= 1);
        let r = 3 * d;
        let blocks = random_partition_capped(g.order(), r, &mut rng(seed));
        let p = VertexPartition::new(g.order(), blocks).unwrap();
        let s = strong_color(&g, &p, r).unwrap();
        prop_assert!(verify_strong_coloring(&g, &p, r, &s.coloring));
    }

    // |S_i| >= r for all i and sum |S_i| >= (m-1)|T| + r force |∩ S_i| >= r
    #[test]
    fn basic_finite_sets(t in 1usize..12, sets in proptest::collection::vec(any::<u16>(), 1..6), r in 1usize..12) {
        let universe = VertexSet::full(t);
        let sets: Vec<VertexSet> = sets.into_iter().map(|s| VertexSet(s as u64) & universe).collect();
        let m = sets.len();
        let sum: usize = sets.iter().map(|s| s.len()).sum();
        if sets.iter().all(|s| s.len() >= r) && sum >= (m - 1) * t + r {
            let meet = sets.iter().fold(universe, |a, &s| a & s);
            prop_assert!(meet.len() >= r);
        }
    }
}

/// Bad `f`-assignment by brute force over lists of size exactly `f(v)`
/// drawn from `1..=Σf`.
fn naive_bad_exists(g: &Graph, f: &[usize]) -> bool {
    let pot: usize = f.iter().sum();
    let choices: Vec<Vec<ColorSet>> = f
        .iter()
        .map(|&k| subsets_of_size(VertexSet::full(pot), k).map(|s| ColorSet(s.0 << 1)).collect())
        .collect();
    let n = g.order();
    let mut idx = vec![0; n];
    loop {
        let lists: Vec<ColorSet> = (0..n).map(|v| choices[v][idx[v]]).collect();
        if is_colorable_from_lists(g, &ListAssignment::new(lists).unwrap()).is_none() {
            return true;
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            idx[i] += 1;
            if idx[i] < choices[i].len() {
                break;
            }
            idx[i] = 0;
            i += 1;
        }
    }
}

#[test]
fn choosability_matches_brute_force() {
    for level in exhaustive_up_to(4).into_iter().skip(1) {
        for g in level {
            let n = g.order();
            for mask in 0..(1u32 << n) {
                let f: Vec<usize> = (0..n).map(|v| 1 + (mask >> v & 1) as usize).collect();
                let v = is_f_choosable(&g, &f).unwrap();
                assert_eq!(v.choosable, !naive_bad_exists(&g, &f), "{:?} f = {f:?}", g.edges());
                if let Some(w) = v.witness {
                    assert!(w.is_f_assignment(&f));
                    assert!(is_colorable_from_lists(&g, &w).is_none());
                }
            }
        }
    }
    // the smallest graph that is not 2-choosable with a small pot
    let k33 = families::complete_bipartite(3, 3);
    assert!(!is_f_choosable(&k33, &[2; 6]).unwrap().choosable);
}
