//! Per-graph theorem checks.
//!
//! Each check evaluates a theorem's hypotheses on one graph and, when they
//! hold, tests its conclusion against the exact oracles. A check whose
//! hypotheses hold and whose conclusion fails is a red alert.

use alloc::vec;
use alloc::vec::Vec;

use crate::decomposition::threshold_u_prime;
use crate::error::OracleError;
use crate::graph::Graph;
use crate::oracles::{invariant_report, InvariantReport, Oracle};
use crate::recolor::{irregular_reduction, onesies_subgraph, IrregularOutcome, RecolorError};
use crate::strong::{strong_color, verify_strong_coloring};
use crate::transversal::VertexPartition;
use crate::Rational;

#[derive(Clone, Copy, PartialEq, Eq, Debug, PartialOrd, Ord, Hash)]
pub enum TheoremId {
    AlphaBound,
    OrderBound,
    BkDense,
    MainResult,
    TwoThirdsCliqueCor,
    MainSimpleCorollary,
    MainCorollary,
    MainBkLemma,
    IrregularReduction,
    Onesies,
    StrongColorBound,
}

impl TheoremId {
    pub const ALL: [TheoremId; 11] = [
        TheoremId::AlphaBound,
        TheoremId::OrderBound,
        TheoremId::BkDense,
        TheoremId::MainResult,
        TheoremId::TwoThirdsCliqueCor,
        TheoremId::MainSimpleCorollary,
        TheoremId::MainCorollary,
        TheoremId::MainBkLemma,
        TheoremId::IrregularReduction,
        TheoremId::Onesies,
        TheoremId::StrongColorBound,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::AlphaBound => "alpha-bound",
            TheoremId::OrderBound => "order-bound",
            TheoremId::BkDense => "bk-dense",
            TheoremId::MainResult => "main-result",
            TheoremId::TwoThirdsCliqueCor => "two-thirds-clique",
            TheoremId::MainSimpleCorollary => "main-simple-corollary",
            TheoremId::MainCorollary => "main-corollary",
            TheoremId::MainBkLemma => "main-bk-lemma",
            TheoremId::IrregularReduction => "irregular-reduction",
            TheoremId::Onesies => "onesies",
            TheoremId::StrongColorBound => "strong-color-bound",
        }
    }

    pub fn parse(s: &str) -> Option<TheoremId> {
        TheoremId::ALL.into_iter().find(|t| t.name() == s)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TheoremCheck {
    pub theorem: TheoremId,
    pub graph_id: usize,
    pub hypotheses_hold: bool,
    pub conclusion_holds: bool,
    /// The `k` the check was run at, for parametrized statements.
    pub parameter: Option<usize>,
    pub margins: Vec<(&'static str, Rational)>,
}

impl TheoremCheck {
    pub fn red_alert(&self) -> bool {
        self.hypotheses_hold && !self.conclusion_holds
    }

    pub fn vacuous(&self) -> bool {
        !self.hypotheses_hold
    }
}

fn q(n: usize) -> Rational {
    Rational::from_integer(n as i64)
}

fn qi(n: i64) -> Rational {
    Rational::from_integer(n)
}

/// Invariants shared by every check on one graph.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GraphFacts {
    pub inv: InvariantReport,
    /// `min_v d(G_v)`; a vertex with empty neighbourhood counts as 0.
    pub min_nbhd_degree: Rational,
}

impl GraphFacts {
    pub fn compute(g: &Graph, oracle: &Oracle) -> Result<Self, OracleError> {
        let inv = invariant_report(g, oracle)?;
        Ok(GraphFacts { inv, min_nbhd_degree: min_neighborhood_average_degree(g) })
    }
}

/// `min_v d(G_v)` over all vertices, with `d` of the empty graph taken as 0.
pub fn min_neighborhood_average_degree(g: &Graph) -> Rational {
    (0..g.order())
        .map(|v| g.neighborhood_graph(v).ok().and_then(|h| h.graph.average_degree().ok()).unwrap_or_else(|| qi(0)))
        .min()
        .unwrap_or_else(|| qi(0))
}

/// `⌈(15 + √(48n + 73)) / 4⌉`: the least `m` with `4m - 15 >= 0` and
/// `(4m - 15)^2 >= 48n + 73`.
pub fn order_bound_term(n: usize) -> usize {
    let target = 48 * n as u64 + 73;
    let mut m = 4u64;
    while (4 * m - 15).pow(2) < target {
        m += 1;
    }
    m as usize
}

fn check(theorem: TheoremId, hyp: bool, concl: bool, parameter: Option<usize>, margins: Vec<(&'static str, Rational)>) -> TheoremCheck {
    TheoremCheck { theorem, graph_id: 0, hypotheses_hold: hyp, conclusion_holds: concl, parameter, margins }
}

/// `χ <= max{ω, Δ - 1, 4α}`.
pub fn alpha_bound(f: &GraphFacts) -> TheoremCheck {
    let i = &f.inv;
    let bound = i.omega.max(i.delta_max.saturating_sub(1)).max(4 * i.alpha);
    check(TheoremId::AlphaBound, true, i.chi <= bound, None, vec![("bound-chi", qi(bound as i64 - i.chi as i64))])
}

/// `χ <= max{ω, Δ - 1, ⌈(15 + √(48n + 73)) / 4⌉}`.
pub fn order_bound(f: &GraphFacts) -> TheoremCheck {
    let i = &f.inv;
    let third = order_bound_term(i.order);
    let bound = i.omega.max(i.delta_max.saturating_sub(1)).max(third);
    check(
        TheoremId::OrderBound,
        true,
        i.chi <= bound,
        None,
        vec![("order-term", q(third)), ("bound-chi", qi(bound as i64 - i.chi as i64))],
    )
}

/// `ω < Δ` and `d(G_v) >= 2Δ/3 + 4` everywhere give `χ <= Δ - 1`.
pub fn bk_dense(f: &GraphFacts) -> TheoremCheck {
    let i = &f.inv;
    let need = Rational::new(2, 3) * q(i.delta_max) + 4;
    let hyp = i.order > 0 && i.omega < i.delta_max && f.min_nbhd_degree >= need;
    check(
        TheoremId::BkDense,
        hyp,
        i.chi + 1 <= i.delta_max,
        Some(1),
        vec![("density", f.min_nbhd_degree - need), ("delta-1-chi", qi(i.delta_max as i64 - 1 - i.chi as i64))],
    )
}

/// Largest `k` (from `first`) for which `hyp(k)` holds; hypotheses of every
/// parametrized statement here get harder as `k` grows.
fn largest_k(first: usize, delta: usize, hyp: impl Fn(usize) -> bool) -> Option<usize> {
    (first..=delta / 2).take_while(|&k| hyp(k)).last()
}

fn at_k(theorem: TheoremId, i: &InvariantReport, k: Option<usize>, first: usize, slack: impl Fn(usize) -> Rational) -> TheoremCheck {
    let kk = k.unwrap_or(first);
    let target = i.delta_max as i64 - kk as i64;
    check(
        theorem,
        k.is_some(),
        i.chi as i64 <= target,
        Some(kk),
        vec![("hypothesis", slack(kk)), ("delta-k-chi", qi(target - i.chi as i64))],
    )
}

/// `ω <= Δ - 2k` and `d(G_v) >= 6k²/(6k²+1)Δ + k + 6` give `χ <= Δ - k`,
/// checked at the largest `k >= 0` meeting the hypotheses.
pub fn main_result(f: &GraphFacts) -> TheoremCheck {
    let i = &f.inv;
    let need = |k: usize| {
        let s = 6 * (k * k) as i64;
        Rational::new(s, s + 1) * q(i.delta_max) + q(k) + 6
    };
    let hyp = |k: usize| i.order > 0 && i.omega + 2 * k <= i.delta_max && f.min_nbhd_degree >= need(k);
    at_k(TheoremId::MainResult, i, largest_k(0, i.delta_max, hyp), 0, |k| f.min_nbhd_degree - need(k))
}

/// `χ >= Δ >= 9` and `ω(v) >= 2Δ/3 + 2` everywhere give `K_Δ`.
pub fn two_thirds_clique(f: &GraphFacts) -> TheoremCheck {
    let i = &f.inv;
    let need = Rational::new(2, 3) * q(i.delta_max) + 2;
    let min_omega = i.omega_v.iter().copied().min().unwrap_or(0);
    let hyp = i.chi >= i.delta_max && i.delta_max >= 9 && q(min_omega) >= need;
    check(
        TheoremId::TwoThirdsCliqueCor,
        hyp,
        i.omega >= i.delta_max,
        None,
        vec![("clique-size", q(min_omega) - need), ("omega-delta", qi(i.omega as i64 - i.delta_max as i64))],
    )
}

/// `ω <= Δ - 2k` and `ω(v) >= 2k/(2k+1)Δ + 2k + 1` everywhere give
/// `χ <= Δ - k`, checked at the largest `k >= 1` meeting the hypotheses.
pub fn main_simple_corollary(f: &GraphFacts) -> TheoremCheck {
    let i = &f.inv;
    let min_omega = q(i.omega_v.iter().copied().min().unwrap_or(0));
    let need = |k: usize| Rational::new(2 * k as i64, 2 * k as i64 + 1) * q(i.delta_max) + q(2 * k + 1);
    let hyp = |k: usize| i.order > 0 && i.omega + 2 * k <= i.delta_max && min_omega >= need(k);
    at_k(TheoremId::MainSimpleCorollary, i, largest_k(1, i.delta_max, hyp), 1, |k| min_omega - need(k))
}

/// With `γ = Δ`: `ω <= γ - 2k` and `ρ <= γ/(2k+1) - (2k+1)` give
/// `χ <= γ - k`, at the largest `k >= 1` meeting the hypotheses.
pub fn main_corollary(f: &GraphFacts) -> TheoremCheck {
    let i = &f.inv;
    let cap = |k: usize| Rational::new(i.delta_max as i64, 2 * k as i64 + 1) - q(2 * k + 1);
    let hyp = |k: usize| i.order > 0 && i.omega + 2 * k <= i.delta_max && qi(i.rho) <= cap(k);
    at_k(TheoremId::MainCorollary, i, largest_k(1, i.delta_max, hyp), 1, |k| cap(k) - qi(i.rho))
}

/// With `k = Δ`: `ω < k` and `ρ <= k/3 - 2` give `χ <= k - 1`.
pub fn main_bk_lemma(f: &GraphFacts) -> TheoremCheck {
    let i = &f.inv;
    let cap = q(i.delta_max) / 3 - 2;
    let hyp = i.order > 0 && i.omega < i.delta_max && qi(i.rho) <= cap;
    check(
        TheoremId::MainBkLemma,
        hyp,
        i.chi + 1 <= i.delta_max,
        Some(i.delta_max),
        vec![("rho-cap", cap - qi(i.rho)), ("delta-1-chi", qi(i.delta_max as i64 - 1 - i.chi as i64))],
    )
}

/// The `(Δ - k)` recoloring lemma with `γ = Δ`, at the largest `k >= 1`
/// with `ρ <= γ - k - U'(k, ω, γ)`.
pub fn general_recoloring_k(f: &GraphFacts) -> Option<usize> {
    let i = &f.inv;
    let hyp = |k: usize| {
        i.omega + 2 * k <= i.delta_max
            && threshold_u_prime(k, i.omega, i.delta_max).map(|u| qi(i.rho) <= q(i.delta_max) - q(k) - u).unwrap_or(false)
    };
    largest_k(1, i.delta_max, hyp)
}

/// `χ >= Δ = k >= 9` gives a `K_k` or an irregular critical subgraph with
/// `χ = Δ = k - 1`. The construction only runs when the hypotheses hold.
pub fn irregular_reduction_check(g: &Graph, f: &GraphFacts) -> Result<TheoremCheck, RecolorError> {
    let i = &f.inv;
    let hyp = i.chi >= i.delta_max && i.delta_max >= 9;
    let concl = if hyp {
        matches!(
            irregular_reduction(g, i.delta_max)?.outcome,
            IrregularOutcome::Clique(_) | IrregularOutcome::Irregular { .. }
        )
    } else {
        true
    };
    Ok(check(TheoremId::IrregularReduction, hyp, concl, Some(i.delta_max), Vec::new()))
}

/// The three `H_v` bounds at every vertex of a vertex-critical graph, with
/// `k = Δ + 1 - χ`. Margins are minima over vertices; the degree-sum form of
/// the edge bound is reported alongside the literal one.
pub fn onesies(g: &Graph, f: &GraphFacts, oracle: &Oracle) -> Result<TheoremCheck, RecolorError> {
    let i = &f.inv;
    let hyp = i.order > 0 && oracle.is_vertex_critical(g)?;
    if !hyp {
        return Ok(check(TheoremId::Onesies, false, true, None, Vec::new()));
    }
    let k = i.delta_max + 1 - i.chi;
    let mut m = [i64::MAX; 4];
    for v in 0..i.order {
        let (_, r) = onesies_subgraph(g, v, k)?;
        for (slot, x) in m.iter_mut().zip([r.order_margin, r.degree_margin, r.edge_margin, r.degree_sum_margin]) {
            *slot = (*slot).min(x);
        }
    }
    Ok(check(
        TheoremId::Onesies,
        true,
        m[..3].iter().all(|&x| x >= 0),
        Some(k),
        vec![
            ("order", qi(m[0])),
            ("min-degree", qi(m[1])),
            ("edges", qi(m[2])),
            ("edges-degree-sum", qi(m[3])),
        ],
    ))
}

/// `strong_color` with `r = 3Δ` on one partition, verified.
pub fn strong_color_bound(g: &Graph, p: &VertexPartition) -> TheoremCheck {
    let r = 3 * g.max_degree();
    let hyp = r >= 1 && p.blocks().iter().all(|b| b.len() <= r);
    let ok = hyp && strong_color(g, p, r).is_ok_and(|s| verify_strong_coloring(g, p, r, &s.coloring));
    check(TheoremId::StrongColorBound, hyp, ok, Some(r), Vec::new())
}

/// Every check that needs only the graph. `Onesies` and
/// `IrregularReduction` run the oracle further.
pub fn check_graph(g: &Graph, oracle: &Oracle, theorems: &[TheoremId]) -> Result<Vec<TheoremCheck>, RecolorError> {
    let f = GraphFacts::compute(g, oracle)?;
    let mut out = Vec::new();
    for &t in theorems {
        let c = match t {
            TheoremId::AlphaBound => alpha_bound(&f),
            TheoremId::OrderBound => order_bound(&f),
            TheoremId::BkDense => bk_dense(&f),
            TheoremId::MainResult => main_result(&f),
            TheoremId::TwoThirdsCliqueCor => two_thirds_clique(&f),
            TheoremId::MainSimpleCorollary => main_simple_corollary(&f),
            TheoremId::MainCorollary => main_corollary(&f),
            TheoremId::MainBkLemma => main_bk_lemma(&f),
            TheoremId::IrregularReduction => irregular_reduction_check(g, &f)?,
            TheoremId::Onesies => onesies(g, &f, oracle)?,
            TheoremId::StrongColorBound => continue,
        };
        out.push(c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    fn facts(g: &Graph) -> GraphFacts {
        GraphFacts::compute(g, &Oracle::default()).unwrap()
    }

    #[test]
    fn order_term() {
        assert_eq!(order_bound_term(15), 11);
        assert_eq!(order_bound_term(1), 7);
        for n in 0..200 {
            let m = order_bound_term(n) as f64;
            let exact = (15.0 + ((48 * n + 73) as f64).sqrt()) / 4.0;
            assert!(m >= exact && m - 1.0 < exact, "n = {n}");
        }
    }

    #[test]
    fn m8_alpha_bound_tight() {
        let f = facts(&m8());
        let c = alpha_bound(&f);
        assert!(c.conclusion_holds);
        assert_eq!(c.margins[0].1, qi(0));
        let c = order_bound(&f);
        assert_eq!(c.margins[0].1, qi(11));
        assert!(!two_thirds_clique(&f).hypotheses_hold);
    }

    #[test]
    fn complete_graphs_hit_omega() {
        for n in 1..7 {
            let f = facts(&complete(n));
            assert!(alpha_bound(&f).conclusion_holds);
            assert!(!bk_dense(&f).hypotheses_hold);
        }
    }

    #[test]
    fn onesies_literal_fails_on_k5() {
        let g = complete(5);
        let c = onesies(&g, &facts(&g), &Oracle::default()).unwrap();
        assert!(c.red_alert());
        assert_eq!(c.margins[2].1, qi(-2));
        assert_eq!(c.margins[3].1, qi(4));
        let g = cycle(5);
        assert!(onesies(&g, &facts(&g), &Oracle::default()).unwrap().conclusion_holds);
        let g = cycle(6);
        assert!(onesies(&g, &facts(&g), &Oracle::default()).unwrap().vacuous());
    }

    #[test]
    fn strong_on_c6() {
        let p = VertexPartition::new(6, vec![crate::VertexSet(0b111), crate::VertexSet(0b111000)]).unwrap();
        assert!(strong_color_bound(&cycle(6), &p).conclusion_holds);
    }

    #[test]
    fn names_round_trip() {
        for t in TheoremId::ALL {
            assert_eq!(TheoremId::parse(t.name()), Some(t));
        }
    }
}
