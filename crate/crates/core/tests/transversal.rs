use bkcolor::corpus::{gnp, random_partition, rng};
use bkcolor::transversal::{
    find_independent_transversal, is_independent_transversal, verify_certificate, TransversalOutcome,
    VertexPartition,
};
use bkcolor::{Graph, VertexSet};

fn naive_exists(g: &Graph, blocks: &[VertexSet]) -> bool {
    fn rec(g: &Graph, blocks: &[VertexSet], chosen: &mut Vec<usize>) -> bool {
        let i = chosen.len();
        if i == blocks.len() {
            return true;
        }
        for v in blocks[i].iter() {
            if chosen.iter().all(|&u| !g.has_edge(u, v)) {
                chosen.push(v);
                if rec(g, blocks, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    rec(g, blocks, &mut Vec::new())
}

#[test]
fn outcomes_agree_with_enumeration() {
    let mut r = rng(11);
    let mut certs = 0;
    for round in 0..1500 {
        let n = 3 + round % 9;
        let g = gnp(n, 0.25 + 0.05 * (round % 8) as f64, &mut r);
        let p = VertexPartition::new(n, random_partition(n, n, &mut r)).unwrap();
        let exists = naive_exists(&g, p.blocks());
        match find_independent_transversal(&g, &p) {
            TransversalOutcome::Transversal(t) => {
                assert!(exists);
                assert!(is_independent_transversal(&g, p.blocks(), &t));
            }
            TransversalOutcome::Certificate(c) => {
                assert!(!exists);
                assert!(verify_certificate(&g, &p, &c), "{g:?} {p:?} {c:?}");
                certs += 1;
            }
        }
    }
    assert!(certs > 100, "only {certs} certificates");
}
