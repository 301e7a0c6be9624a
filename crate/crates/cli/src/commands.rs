//! Subcommand handlers. Each returns an [`Output`]: a JSON value, a text
//! rendering, optional trace lines, and whether a red alert was raised.

use bkcolor::choosability::{dk_demand, ListAssignment, Plan, Verdict, DEFAULT_CHOOSABILITY_BOUND};
use bkcolor::decomposition::{decompose_general_with, decompose_k1_with, CliqueDecomposition, DecompError, DkPolicy, Membership};
use bkcolor::oracles::{invariant_report, Coloring, Oracle};
use bkcolor::recolor::{color_delta_minus_1_with, color_delta_minus_k, Path, RecolorReport};
use bkcolor::strong::{strong_color_traced, verify_strong_coloring, StrongError};
use bkcolor::theorems::{min_neighborhood_average_degree, TheoremId};
use bkcolor::transversal::{
    find_independent_transversal, find_transversal_avoiding, find_transversal_with_anchor, verify_certificate,
    TransversalOutcome, VertexPartition,
};
use bkcolor::{Graph, Rational, VertexSet};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::formats::{partition_to_string, to_graph6};
use crate::suites::{rational_string, verify, Report};

pub struct Output {
    pub json: Value,
    pub text: String,
    pub trace: Vec<Value>,
    pub red: bool,
}

impl Output {
    fn plain(json: Value, text: String) -> Self {
        Output { json, text, trace: Vec::new(), red: false }
    }
}

fn set(s: VertexSet) -> Vec<usize> {
    s.to_vec()
}

fn colors(c: &Coloring) -> Vec<u32> {
    c.as_slice().to_vec()
}

fn lists(l: &ListAssignment) -> Vec<Vec<usize>> {
    l.lists().iter().map(|c| c.to_vec()).collect()
}

pub fn oracle(g: &Graph, oracle: &Oracle) -> Result<Output, String> {
    let inv = invariant_report(g, oracle).map_err(|e| e.to_string())?;
    let chi = oracle.chromatic(g).map_err(|e| e.to_string())?;
    let critical = oracle.is_vertex_critical(g).map_err(|e| e.to_string())?;
    let avg = g.average_degree().map(rational_string).unwrap_or_else(|_| "undefined".into());
    let nbhd = rational_string(min_neighborhood_average_degree(g));
    let json = json!({
        "graph": to_graph6(g),
        "order": inv.order,
        "size": inv.size,
        "chi": inv.chi,
        "coloring": colors(&chi.coloring),
        "omega": inv.omega,
        "alpha": inv.alpha,
        "max_degree": inv.delta_max,
        "min_degree": inv.delta_min,
        "average_degree": avg,
        "min_neighborhood_average_degree": nbhd,
        "rho": inv.rho,
        "omega_per_vertex": inv.omega_v,
        "vertex_critical": critical,
    });
    let text = format!(
        "n = {}, m = {}\nchi = {}, omega = {}, alpha = {}\nmax degree = {}, min degree = {}, average degree = {}\nrho = {}, min d(G_v) = {}\nvertex-critical: {}\ncoloring: {:?}\n",
        inv.order, inv.size, inv.chi, inv.omega, inv.alpha, inv.delta_max, inv.delta_min, avg, inv.rho, nbhd, critical,
        colors(&chi.coloring)
    );
    Ok(Output::plain(json, text))
}

/// Runs the choosability plan with its branches spread over the rayon pool;
/// the reported witness is the one from the earliest branch.
pub fn choosability_verdict(g: &Graph, f: &[usize]) -> Result<Verdict, String> {
    let plan = Plan::new(g, f, DEFAULT_CHOOSABILITY_BOUND).map_err(|e| e.to_string())?;
    if let Some(v) = plan.trivial() {
        return Ok(v.clone());
    }
    let runs: Vec<(Option<ListAssignment>, u64)> = plan.branches().par_iter().map(|b| plan.run(b)).collect();
    let examined = runs.iter().map(|r| r.1).sum();
    let witness = runs.into_iter().find_map(|r| r.0);
    Ok(Verdict { choosable: witness.is_none(), witness, examined })
}

pub fn choosable(g: &Graph, k: Option<i64>, f: Option<Vec<usize>>) -> Result<Output, String> {
    let (f, label) = match (k, f) {
        (_, Some(f)) => (f, "f".to_string()),
        (Some(k), None) => (dk_demand(g, k), format!("d_{k}")),
        (None, None) => return Err("give --k or --demand".into()),
    };
    if f.len() != g.order() {
        return Err(format!("demand has {} entries for {} vertices", f.len(), g.order()));
    }
    let v = choosability_verdict(g, &f)?;
    let json = json!({
        "graph": to_graph6(g),
        "demand": f,
        "verdict": v.choosable,
        "lists": v.witness.as_ref().map(lists),
        "examined": v.examined,
    });
    let mut text = format!("{label}-choosable: {}\n", v.choosable);
    if let Some(w) = &v.witness {
        text += &format!("bad assignment: {:?}\n", lists(w));
    }
    Ok(Output::plain(json, text))
}

pub enum TransversalMode {
    Plain,
    Avoid { s: VertexSet, t: Rational },
    Anchor { x_neighbors: VertexSet },
}

pub fn transversal(g: &Graph, p: &VertexPartition, mode: TransversalMode) -> Result<Output, String> {
    if p.order() != g.order() {
        return Err("partition order differs from graph order".into());
    }
    let base = json!({ "graph": to_graph6(g), "partition": partition_to_string(p) });
    let (json, text) = match mode {
        TransversalMode::Plain => match find_independent_transversal(g, p) {
            TransversalOutcome::Transversal(t) => {
                (json!({ "base": base, "transversal": t }), format!("independent transversal: {t:?}\n"))
            }
            TransversalOutcome::Certificate(c) => {
                let ok = verify_certificate(g, p, &c);
                (
                    json!({ "base": base, "certificate": {
                        "blocks": c.blocks, "matching": c.matching, "root": c.root,
                        "reduced_edges": c.reduced_edges, "verified": ok } }),
                    format!(
                        "no independent transversal\ncertificate blocks {:?}, matching {:?}, root {:?}, verified: {ok}\n",
                        c.blocks, c.matching, c.root
                    ),
                )
            }
        },
        TransversalMode::Avoid { s, t } => {
            let out = find_transversal_avoiding(g, p, s, t);
            let h = out.hypotheses;
            (
                json!({ "base": base, "avoid": set(s), "t": rational_string(t), "transversal": out.transversal,
                        "hypotheses": { "degree": h.degree, "small_s": h.small_s, "weakened_s": h.weakened_s } }),
                format!("transversal avoiding {:?}: {:?}\nhypotheses: {:?}\n", set(s), out.transversal, h),
            )
        }
        TransversalMode::Anchor { x_neighbors } => {
            let out = find_transversal_with_anchor(g, p, x_neighbors);
            (
                json!({ "base": base, "anchor_neighbors": set(x_neighbors), "transversal": out.transversal,
                        "hypotheses_hold": out.hypotheses_hold }),
                format!("transversal with anchor: {:?}\nhypotheses hold: {}\n", out.transversal, out.hypotheses_hold),
            )
        }
    };
    Ok(Output::plain(json, text))
}

pub fn strong(g: &Graph, p: &VertexPartition, r: Option<usize>) -> Result<Output, String> {
    let r = r.unwrap_or(3 * g.max_degree());
    let mut trace = Vec::new();
    let res = strong_color_traced(g, p, r, |s| {
        trace.push(json!({ "stage": "repair", "edge": s.edge, "color": s.color, "z": s.z,
                           "w_sizes": s.w_sizes, "transversal": s.transversal }));
    });
    match res {
        Ok(s) => {
            let ok = verify_strong_coloring(g, p, r, &s.coloring);
            let json = json!({ "graph": to_graph6(g), "partition": partition_to_string(p), "r": r,
                               "coloring": colors(&s.original()), "padded": colors(&s.coloring),
                               "repairs": s.repairs.len(), "verified": ok });
            let text = format!(
                "strong {r}-coloring: {:?}\nrepairs: {}, verified: {ok}\n",
                colors(&s.original()),
                s.repairs.len()
            );
            Ok(Output { json, text, trace, red: !ok })
        }
        Err(StrongError::RepairFailed { reason, state }) => {
            let json = json!({ "graph": to_graph6(g), "partition": partition_to_string(p), "r": r,
                               "error": reason, "edge": state.edge, "w_sizes": state.w_sizes });
            Ok(Output { json, text: format!("repair of edge {:?} failed: {reason}\n", state.edge), trace, red: true })
        }
        Err(e) => Err(e.to_string()),
    }
}

fn membership(m: Membership) -> Value {
    match m {
        Membership::Checked(b) => json!({ "checked": b }),
        Membership::Assumed => json!("assumed"),
        Membership::Unknown => json!("unknown"),
    }
}

fn decomposition_json(d: &CliqueDecomposition) -> Value {
    let h = d.hypotheses;
    json!({
        "t": rational_string(d.t),
        "k": d.k,
        "xt_complete": d.xt_complete,
        "hypotheses": { "delta": h.delta, "no_big_clique": h.no_big_clique, "t_range": h.t_range,
                        "membership": membership(h.membership), "hold": h.hold() },
        "blocks": d.blocks.iter().map(|b| json!({ "d": set(b.d), "c": set(b.c), "k": set(b.k), "x": b.x }))
            .collect::<Vec<_>>(),
    })
}

pub fn decompose(g: &Graph, k: usize, t: Rational, assume: bool) -> Result<Output, String> {
    let policy = if assume { DkPolicy::Assume } else { DkPolicy::Scan };
    let res = if k == 1 && t.is_integer() && t >= Rational::from_integer(0) {
        decompose_k1_with(g, t.to_integer() as usize, policy)
    } else {
        decompose_general_with(g, k, t, policy)
    };
    match res {
        Ok(d) => {
            let mut text = format!("{} blocks, t = {}, X_t complete: {}\n", d.blocks.len(), rational_string(d.t), d.xt_complete);
            for (i, b) in d.blocks.iter().enumerate() {
                text += &format!("D_{i} = {:?}, C = {:?}, K = {:?}, x = {:?}\n", set(b.d), set(b.c), set(b.k), b.x);
            }
            text += &format!("hypotheses hold: {}\n", d.hypotheses.hold());
            Ok(Output::plain(json!({ "graph": to_graph6(g), "decomposition": decomposition_json(&d) }), text))
        }
        Err(e) => {
            // a failed conclusion with the hypotheses holding is a falsification
            let red = match &e {
                DecompError::Conclusion { decomposition, .. } | DecompError::IntersectionGraph { decomposition } => {
                    decomposition.hypotheses.hold()
                }
                _ => false,
            };
            Ok(Output { json: json!({ "graph": to_graph6(g), "error": e.to_string() }), text: format!("{e}\n"), trace: Vec::new(), red })
        }
    }
}

fn recolor_json(g: &Graph, r: &RecolorReport) -> Value {
    let (path, stage, reason) = match r.path {
        Path::Constructive => ("constructive", None, None),
        Path::Fallback { stage, reason } => ("fallback", Some(stage.name()), Some(reason)),
    };
    let h = r.hypotheses;
    json!({
        "graph": to_graph6(g),
        "colors": r.colors,
        "coloring": r.coloring.as_ref().map(colors),
        "proper": r.coloring.as_ref().map(|c| c.is_proper_k_coloring(g, r.colors)),
        "hypotheses": { "range": h.range, "delta": h.delta, "omega": h.omega, "rho": h.rho, "hold": h.hold() },
        "path": path,
        "stage": stage,
        "reason": reason,
        "transversal_hypotheses": r.transversal_hypotheses,
    })
}

pub fn color(g: &Graph, k: Option<usize>, gamma: Option<usize>) -> Result<Output, String> {
    let r = match k {
        None => color_delta_minus_1_with(g, gamma.unwrap_or(g.max_degree())),
        Some(k) => color_delta_minus_k(g, k, gamma.unwrap_or(g.max_degree())),
    };
    let json = recolor_json(g, &r);
    let trace = r
        .trace
        .iter()
        .map(|e| {
            let data: serde_json::Map<String, Value> = e.data.iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
            json!({ "stage": e.stage.name(), "data": data })
        })
        .collect();
    let proper = r.coloring.as_ref().is_some_and(|c| c.is_proper_k_coloring(g, r.colors));
    let mut text = match r.path {
        Path::Constructive => format!("{}-coloring built constructively\n", r.colors),
        Path::Fallback { stage, reason } => format!("fallback at stage {}: {reason}\n", stage.name()),
    };
    match &r.coloring {
        Some(c) => text += &format!("coloring: {:?}\n", colors(c)),
        None => text += &format!("no {}-coloring exists\n", r.colors),
    }
    text += &format!("hypotheses hold: {}\n", r.hypotheses.hold());
    // an improper emitted coloring, or no coloring although the hypotheses hold
    let red = (r.coloring.is_some() && !proper) || (r.hypotheses.hold() && r.coloring.is_none());
    Ok(Output { json, text, trace, red })
}

pub fn report_text(r: &Report) -> String {
    let c = &r.counts;
    let mut s = format!(
        "{} on {}: checked {}, vacuous {}, holds {}, skipped {}, alerts {}\n",
        r.theorem,
        r.corpus,
        c.checked,
        c.vacuous,
        c.holds,
        c.skipped,
        r.alerts.len()
    );
    for t in &r.tightest {
        s += &format!("  tightest {} = {} on graph {} ({})\n", t.margin, t.value, t.graph_id, t.graph6);
    }
    for (k, v) in &r.extra {
        s += &format!("  {k}: {v}\n");
    }
    for a in &r.alerts {
        s += &format!("  RED graph {} {} k={:?} margins {:?}\n", a.graph_id, a.graph6, a.parameter, a.margins);
    }
    s
}

pub fn verify_all(theorems: &[TheoremId], corpus: &str, graphs: &[Graph], oracle: &Oracle, seed: u64) -> Output {
    let reports: Vec<Report> = theorems.iter().map(|&t| verify(t, corpus, graphs, oracle, seed)).collect();
    let red = reports.iter().any(Report::red);
    let text = reports.iter().map(report_text).collect::<String>();
    let json = if reports.len() == 1 {
        serde_json::to_value(&reports[0]).expect("reports serialize")
    } else {
        serde_json::to_value(&reports).expect("reports serialize")
    };
    Output { json, text, trace: Vec::new(), red }
}
