use bkcolor::decomposition::clique_from_dense_neighborhood;
use bkcolor::families::complete_bipartite;
use bkcolor::Rational;

#[test]
fn k44_has_low_vertex_witness() {
    // d = 4 = ω + 2, the smallest graph meeting the hypothesis
    let r = clique_from_dense_neighborhood(&complete_bipartite(4, 4), 1).unwrap();
    assert_eq!(r.average_degree, Rational::from_integer(4));
    assert!(r.low_vertex.hypothesis);
    assert_eq!(r.low_vertex.conclusion, Some(true));
    assert!(!r.vertex_high.hypothesis);
}
