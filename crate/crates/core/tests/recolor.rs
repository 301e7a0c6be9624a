use bkcolor::corpus::{near_clique_union, rng};
use bkcolor::oracles::{chromatic_number, Coloring};
use bkcolor::recolor::{color_delta_minus_1, color_delta_minus_k, compute_oz, onesies_subgraph, Path, Stage};
use bkcolor::{families, VertexSet};

#[test]
fn delta_minus_one_family() {
    let mut r = rng(3);
    let mut constructive = 0;
    for i in 0..40 {
        let (sizes, d) = if i % 2 == 0 { ([9, 9], 9) } else { ([10, 10], 10) };
        let g = near_clique_union(&sizes, 1, d, &mut r);
        let rep = color_delta_minus_1(&g);
        assert!(rep.hypotheses.hold());
        let c = rep.coloring.as_ref().unwrap();
        assert!(c.is_proper_k_coloring(&g, g.max_degree() - 1));
        assert!(chromatic_number(&g).unwrap() < g.max_degree());
        constructive += rep.constructive() as usize;
    }
    assert_eq!(constructive, 40);
}

#[test]
fn delta_minus_k_family_and_reduction() {
    let mut r = rng(4);
    for _ in 0..10 {
        let g = near_clique_union(&[15, 15], 1, 16, &mut r);
        let a = color_delta_minus_k(&g, 1, 16);
        assert!(a.hypotheses.hold());
        assert!(a.coloring.unwrap().is_proper_k_coloring(&g, 15));
        let b = color_delta_minus_k(&g, 2, 17);
        assert_eq!(b.trace[0].stage, Stage::Reduction);
        assert!(b.coloring.unwrap().is_proper_k_coloring(&g, 15));
    }
}

#[test]
fn both_procedures_agree_on_properness() {
    let mut r = rng(5);
    for _ in 0..10 {
        let g = near_clique_union(&[10, 10], 1, 10, &mut r);
        for rep in [color_delta_minus_1(&g), color_delta_minus_k(&g, 1, 10)] {
            assert!(rep.coloring.unwrap().is_proper_k_coloring(&g, 9));
        }
    }
}

#[test]
fn hypothesis_violations_fall_back() {
    let g = families::complete(5).join(&families::cycle(5)).unwrap();
    let rep = color_delta_minus_k(&g, 1, g.max_degree());
    assert!(!rep.hypotheses.hold());
    assert!(matches!(rep.path, Path::Fallback { .. }) || rep.coloring.is_some());
    if let Some(c) = rep.coloring {
        assert!(c.is_proper_k_coloring(&g, rep.colors));
    }
}

#[test]
fn oz_on_m8_matches_definition() {
    let g = families::m8();
    let gv = g.without_vertex(0);
    let local = bkcolor::oracles::find_k_coloring(&gv.graph, 7, &[]).unwrap();
    let mut pi = Coloring::uncolored(g.order());
    for (i, &u) in gv.map.iter().enumerate() {
        pi.set(u, local.get(i).unwrap());
    }
    let oz = compute_oz(&g, &pi, 0);
    let direct: VertexSet = g
        .neighbors(0)
        .iter()
        .filter(|&v| g.neighbors(0).iter().filter(|&u| u != v).all(|u| pi.get(u) != pi.get(v)))
        .collect();
    assert_eq!(oz, direct);
    assert!(oz.len() >= 6);
}

#[test]
fn onesies_on_m8() {
    let (_, r) = onesies_subgraph(&families::m8(), 0, 1).unwrap();
    assert_eq!(r.holds(), [true, true, true]);
}
