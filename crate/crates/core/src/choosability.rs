//! Exact list-coloring decisions on small graphs.
//!
//! [`is_f_choosable`] enumerates `f`-assignments as 0/1 matrices (rows are
//! vertices, columns are colors) with exact pot size `p`, for `p` from
//! `max f` up to the small-pot bound. Two symmetries are broken:
//!
//! * columns are kept lexicographically nonincreasing, so every row takes a
//!   prefix of each class of still-identical colors;
//! * rows of twin vertices with equal demand are kept lexicographically
//!   nonincreasing.
//!
//! The last vertex `u` is never enumerated. For a fixed assignment `L` on
//! `G - u`, `L` extends to a bad assignment iff the list of `u` fits inside
//! `R`, the set of colors that every `L`-coloring of `G - u` puts on `N(u)`.
//! Pot sizes are tried in increasing order, so the first bad assignment
//! found has minimum pot.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{GraphError, OracleError};
use crate::graph::Graph;
use crate::oracles::Coloring;
use crate::set::{subsets_of_size, ColorSet, VertexSet, MAX_ORDER};

/// Default largest order accepted by the choosability search.
pub const DEFAULT_CHOOSABILITY_BOUND: usize = 10;

/// Lists of colors per vertex. Colors are naturals `1..=63`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ListAssignment {
    lists: Vec<ColorSet>,
}

impl ListAssignment {
    pub fn new(lists: Vec<ColorSet>) -> Result<Self, GraphError> {
        if lists.iter().any(|l| l.contains(0)) {
            return Err(GraphError::BadParameter("list colors start at 1"));
        }
        Ok(ListAssignment { lists })
    }

    pub fn from_slices(lists: &[&[usize]]) -> Result<Self, GraphError> {
        if lists.iter().flat_map(|l| l.iter()).any(|&c| c >= 64) {
            return Err(GraphError::BadParameter("list colors must be below 64"));
        }
        Self::new(lists.iter().map(|l| l.iter().copied().collect()).collect())
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }

    pub fn list(&self, v: usize) -> ColorSet {
        self.lists[v]
    }

    pub fn lists(&self) -> &[ColorSet] {
        &self.lists
    }

    pub fn pot(&self) -> ColorSet {
        self.pot_within(VertexSet::full(self.lists.len()))
    }

    /// `Pot_H(L)` for `H` induced on `s`.
    pub fn pot_within(&self, s: VertexSet) -> ColorSet {
        s.iter().fold(ColorSet::EMPTY, |acc, v| acc | self.lists[v])
    }

    /// Vertices of `G_S`: those whose list meets `s`.
    pub fn meeting(&self, s: ColorSet) -> VertexSet {
        (0..self.lists.len()).filter(|&v| self.lists[v].intersects(s)).collect()
    }

    /// Whether `|L(v)| = f(v)` for every `v`.
    pub fn is_f_assignment(&self, f: &[usize]) -> bool {
        f.len() == self.lists.len() && self.lists.iter().zip(f).all(|(l, &d)| l.len() == d)
    }
}

/// Outcome of a choosability decision.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Verdict {
    pub choosable: bool,
    /// A bad assignment of minimum pot when not choosable.
    pub witness: Option<ListAssignment>,
    /// Number of assignments on `G - u` examined.
    pub examined: u64,
}

/// A coloring `c` with `c(v)` in `L(v)` for every `v`, if one exists.
pub fn is_colorable_from_lists(g: &Graph, l: &ListAssignment) -> Option<Coloring> {
    assert_eq!(g.order(), l.len(), "one list per vertex");
    let mut colors = [NONE; MAX_ORDER];
    if color_from(g, l.lists(), &mut colors) {
        Some(Coloring::from_colors(colors[..g.order()].iter().map(|&c| c as u32).collect()))
    } else {
        None
    }
}

const NONE: u8 = u8::MAX;

fn colorable(g: &Graph, lists: &[ColorSet]) -> bool {
    let mut colors = [NONE; MAX_ORDER];
    color_from(g, lists, &mut colors)
}

fn color_from(g: &Graph, lists: &[ColorSet], colors: &mut [u8; MAX_ORDER]) -> bool {
    let n = lists.len();
    let mut avail = [ColorSet::EMPTY; MAX_ORDER];
    avail[..n].copy_from_slice(lists);
    solve(g, &avail, VertexSet::full(n), colors)
}

/// Vertices with more available colors than open neighbours are set aside
/// and colored last, in reverse order.
fn solve(g: &Graph, avail: &[ColorSet; MAX_ORDER], mut open: VertexSet, colors: &mut [u8; MAX_ORDER]) -> bool {
    let mut deferred = [0usize; MAX_ORDER];
    let mut nd = 0;
    loop {
        let before = nd;
        for v in open.iter() {
            if avail[v].len() > (g.neighbors(v) & open).len() {
                open.remove(v);
                deferred[nd] = v;
                nd += 1;
            }
        }
        if nd == before {
            break;
        }
    }
    if !search(g, avail, open, colors) {
        return false;
    }
    for &v in deferred[..nd].iter().rev() {
        let taken: ColorSet =
            g.neighbors(v).iter().filter(|&u| colors[u] != NONE).map(|u| colors[u] as usize).collect();
        colors[v] = (avail[v] - taken).first().expect("deferred vertex keeps a free color") as u8;
    }
    true
}

fn search(g: &Graph, avail: &[ColorSet; MAX_ORDER], open: VertexSet, colors: &mut [u8; MAX_ORDER]) -> bool {
    let Some(v) = open.iter().min_by_key(|&v| avail[v].len()) else {
        return true;
    };
    let rest = open.without(v);
    let nbrs = g.neighbors(v) & rest;
    'colors: for c in avail[v].iter() {
        let mut next = *avail;
        for u in nbrs.iter() {
            next[u].remove(c);
            if next[u].is_empty() {
                continue 'colors;
            }
        }
        colors[v] = c as u8;
        if solve(g, &next, rest, colors) {
            return true;
        }
    }
    colors[v] = NONE;
    false
}

/// `f(v) = max(0, d(v) - k)`.
pub fn dk_demand(g: &Graph, k: i64) -> Vec<usize> {
    (0..g.order()).map(|v| (g.degree(v) as i64 - k).max(0) as usize).collect()
}

/// One independent unit of the enumeration: a pot size and, when the graph
/// has at least three vertices, the second row of the matrix.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Branch {
    pub pot: usize,
    pub second: Option<ColorSet>,
}

/// Precomputed search plan for one `(g, f)` pair.
#[derive(Clone, Debug)]
pub struct Plan {
    /// The graph after peeling, with demands and the map to the input.
    g: Graph,
    f: Vec<usize>,
    map: Vec<usize>,
    peeled: Vec<usize>,
    input_f: Vec<usize>,
    rows: Vec<usize>,
    last: usize,
    twin_prev: Vec<bool>,
    /// Sum of demands of rows `i..` plus the last vertex.
    tail_demand: Vec<usize>,
    trivial: Option<Verdict>,
    branches: Vec<Branch>,
}

impl Plan {
    pub fn new(g: &Graph, f: &[usize], bound: usize) -> Result<Plan, OracleError> {
        let n = g.order();
        if n > bound {
            return Err(OracleError::BoundExceeded { order: n, bound });
        }
        if f.len() != n {
            return Err(GraphError::BadParameter("demand needs one entry per vertex").into());
        }
        let mut plan = Plan {
            g: g.clone(),
            f: f.to_vec(),
            input_f: f.to_vec(),
            map: Vec::new(),
            peeled: Vec::new(),
            rows: Vec::new(),
            last: 0,
            twin_prev: Vec::new(),
            tail_demand: Vec::new(),
            trivial: None,
            branches: Vec::new(),
        };
        if let Some(v) = (0..n).find(|&v| f[v] == 0) {
            let lists = (0..n).map(|u| if u == v { ColorSet::EMPTY } else { ColorSet::full(f[u] + 1).without(0) }).collect();
            plan.trivial = Some(Verdict { choosable: false, witness: Some(ListAssignment { lists }), examined: 0 });
            return Ok(plan);
        }
        // a vertex with more colors than neighbours can be colored last
        let mut keep = g.vertices();
        loop {
            let Some(v) = keep.iter().find(|&v| f[v] > (g.neighbors(v) & keep).len()) else { break };
            keep.remove(v);
            plan.peeled.push(v);
        }
        if keep.is_empty() {
            plan.trivial = Some(Verdict { choosable: true, witness: None, examined: 0 });
            return Ok(plan);
        }
        let sub = g.induced_subgraph(keep);
        let g = &sub.graph;
        let f: Vec<usize> = sub.map.iter().map(|&v| f[v]).collect();
        let f = &f[..];
        let n = g.order();
        plan.g = sub.graph.clone();
        plan.f = f.to_vec();
        plan.map = sub.map.clone();
        // every remaining vertex has f(v) <= d(v) < n
        let max_f = *f.iter().max().unwrap();
        let top = n - 1;

        // the vertex with the most list choices is eliminated, not enumerated
        let binom = |k: usize| -> u128 { (0..k).fold(1u128, |acc, i| acc * (top - i) as u128 / (i + 1) as u128) };
        plan.last = (0..n).max_by_key(|&v| (binom(f[v].min(top)), core::cmp::Reverse(v))).unwrap();
        let mut rest: Vec<usize> = (0..n).filter(|&v| v != plan.last).collect();
        rest.sort_by_key(|&v| (f[v], g.degree(v), v));
        // group pairwise twins with equal demand
        let twins = |a: usize, b: usize| f[a] == f[b] && g.neighbors(a).without(b) == g.neighbors(b).without(a);
        let mut groups: Vec<Vec<usize>> = Vec::new();
        for v in rest {
            match groups.iter_mut().find(|grp| grp.iter().all(|&u| twins(u, v))) {
                Some(grp) => grp.push(v),
                None => groups.push(vec![v]),
            }
        }
        for grp in groups {
            for (i, v) in grp.into_iter().enumerate() {
                plan.twin_prev.push(i > 0);
                plan.rows.push(v);
            }
        }
        let m = plan.rows.len();
        plan.tail_demand = vec![0; m + 1];
        plan.tail_demand[m] = f[plan.last];
        for i in (0..m).rev() {
            plan.tail_demand[i] = plan.tail_demand[i + 1] + f[plan.rows[i]];
        }

        for p in max_f..=top {
            let first = ColorSet::full(f[plan.rows[0]].min(p));
            if f[plan.rows[0]] > p {
                continue;
            }
            if m == 1 {
                plan.branches.push(Branch { pot: p, second: None });
                continue;
            }
            let ranges = split(&[(0, p)], first);
            let mut seconds = Vec::new();
            row_choices(&ranges, f[plan.rows[1]], &mut seconds);
            for s in seconds {
                if plan.twin_prev[1] && !lex_le(s, first) {
                    continue;
                }
                plan.branches.push(Branch { pot: p, second: Some(s) });
            }
        }
        Ok(plan)
    }

    /// Set when the answer needs no search.
    pub fn trivial(&self) -> Option<&Verdict> {
        self.trivial.as_ref()
    }

    pub fn branches(&self) -> &[Branch] {
        &self.branches
    }

    /// Searches one branch; returns a bad assignment (colors `1..=pot`) if
    /// the branch contains one, and the number of assignments examined.
    pub fn run(&self, branch: &Branch) -> (Option<ListAssignment>, u64) {
        let p = branch.pot;
        let mut st = State { plan: self, p, lists: vec![ColorSet::EMPTY; self.g.order()], examined: 0 };
        let first = ColorSet::full(self.f[self.rows[0]]);
        st.lists[self.rows[0]] = first;
        let mut ranges = split(&[(0, p)], first);
        let mut union = first;
        let mut start = 1;
        if let Some(s) = branch.second {
            st.lists[self.rows[1]] = s;
            ranges = split(&ranges, s);
            union |= s;
            start = 2;
        }
        let found = st.rows(start, &ranges, union);
        let witness = found.map(|last| {
            st.lists[self.last] = last;
            self.lift(&st.lists)
        });
        (witness, st.examined)
    }

    /// Maps a bad assignment on the peeled graph (colors `0..p`) back to the
    /// input graph with colors starting at 1. Peeled vertices get
    /// `{1, ..., f(v)}`.
    fn lift(&self, lists: &[ColorSet]) -> ListAssignment {
        let mut out = vec![ColorSet::EMPTY; self.input_f.len()];
        for (i, &v) in self.map.iter().enumerate() {
            out[v] = ColorSet(lists[i].0 << 1);
        }
        for &v in &self.peeled {
            out[v] = ColorSet::full(self.input_f[v] + 1).without(0);
        }
        ListAssignment { lists: out }
    }

    /// Runs every branch in order and stops at the first bad assignment.
    pub fn run_all(&self) -> Verdict {
        if let Some(v) = &self.trivial {
            return v.clone();
        }
        let mut examined = 0;
        for b in &self.branches {
            let (w, e) = self.run(b);
            examined += e;
            if w.is_some() {
                return Verdict { choosable: false, witness: w, examined };
            }
        }
        Verdict { choosable: true, witness: None, examined }
    }
}

/// `a <= b` where the membership vector is read from color 0 and a member
/// beats a non-member.
fn lex_le(a: ColorSet, b: ColorSet) -> bool {
    let d = a.0 ^ b.0;
    d == 0 || b.0 >> d.trailing_zeros() & 1 == 1
}

/// Splits each color class by membership in `row`.
fn split(ranges: &[(usize, usize)], row: ColorSet) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(ranges.len() * 2);
    for &(s, e) in ranges {
        let j = (row & ColorSet::full(e) & !ColorSet::full(s)).len();
        if j > 0 {
            out.push((s, s + j));
        }
        if s + j < e {
            out.push((s + j, e));
        }
    }
    out
}

/// Every row of size `d` taking a prefix of each class.
fn row_choices(ranges: &[(usize, usize)], d: usize, out: &mut Vec<ColorSet>) {
    fn rec(ranges: &[(usize, usize)], k: usize, d: usize, room: usize, acc: ColorSet, out: &mut Vec<ColorSet>) {
        if k == ranges.len() {
            if d == 0 {
                out.push(acc);
            }
            return;
        }
        let (s, e) = ranges[k];
        let len = e - s;
        let after = room - len;
        let lo = d.saturating_sub(after);
        for j in (lo..=len.min(d)).rev() {
            let part = ColorSet::full(s + j) & !ColorSet::full(s);
            rec(ranges, k + 1, d - j, after, acc | part, out);
        }
    }
    let room = ranges.iter().map(|&(s, e)| e - s).sum();
    if d <= room {
        rec(ranges, 0, d, room, ColorSet::EMPTY, out);
    }
}

struct State<'a> {
    plan: &'a Plan,
    p: usize,
    lists: Vec<ColorSet>,
    examined: u64,
}

impl State<'_> {
    fn rows(&mut self, i: usize, ranges: &[(usize, usize)], union: ColorSet) -> Option<ColorSet> {
        let plan = self.plan;
        if self.p - union.len() > plan.tail_demand[i] {
            return None;
        }
        if i == plan.rows.len() {
            return self.leaf(union);
        }
        let v = plan.rows[i];
        let mut choices = Vec::new();
        row_choices(ranges, plan.f[v], &mut choices);
        for row in choices {
            if plan.twin_prev[i] && !lex_le(row, self.lists[plan.rows[i - 1]]) {
                continue;
            }
            self.lists[v] = row;
            let next = split(ranges, row);
            if let Some(w) = self.rows(i + 1, &next, union | row) {
                return Some(w);
            }
        }
        self.lists[v] = ColorSet::EMPTY;
        None
    }

    /// Decides whether some list for the last vertex makes the current
    /// assignment bad with pot exactly `p`.
    fn leaf(&mut self, union: ColorSet) -> Option<ColorSet> {
        self.examined += 1;
        let plan = self.plan;
        let u = plan.last;
        let need = plan.f[u];
        let pot = ColorSet::full(self.p);
        let unused = pot - union;
        if unused.len() > need || need > self.p {
            return None;
        }
        let mut lists = self.lists.clone();
        lists[u] = ColorSet(u64::MAX);
        if !colorable(&plan.g, &lists) {
            let extra = (pot - unused).iter().take(need - unused.len());
            return Some(unused | extra.collect());
        }
        let nbrs = plan.g.neighbors(u);
        let forced = |c: usize| {
            let mut trial = lists.clone();
            for w in nbrs.iter() {
                trial[w].remove(c);
            }
            !colorable(&plan.g, &trial)
        };
        if !unused.iter().all(forced) {
            return None;
        }
        let mut r = unused;
        let mut left = (pot - unused).len();
        for c in (pot - unused).iter() {
            if r.len() >= need {
                break;
            }
            if r.len() + left < need {
                return None;
            }
            left -= 1;
            if forced(c) {
                r.insert(c);
            }
        }
        (r.len() >= need).then_some(r)
    }
}

/// Decides `f`-choosability; `bound` caps the order.
pub fn is_f_choosable_bounded(g: &Graph, f: &[usize], bound: usize) -> Result<Verdict, OracleError> {
    Ok(Plan::new(g, f, bound)?.run_all())
}

pub fn is_f_choosable(g: &Graph, f: &[usize]) -> Result<Verdict, OracleError> {
    is_f_choosable_bounded(g, f, DEFAULT_CHOOSABILITY_BOUND)
}

pub fn is_dk_choosable(g: &Graph, k: i64) -> Result<Verdict, OracleError> {
    is_f_choosable(g, &dk_demand(g, k))
}

/// A vertex set inducing a `d_k`-choosable subgraph, searched by increasing
/// size and then lexicographically; `None` certifies that `g` has none.
pub fn has_induced_dk_choosable_subgraph(g: &Graph, k: i64) -> Result<Option<VertexSet>, OracleError> {
    if g.order() > DEFAULT_CHOOSABILITY_BOUND {
        return Err(OracleError::BoundExceeded { order: g.order(), bound: DEFAULT_CHOOSABILITY_BOUND });
    }
    for size in 1..=g.order() {
        for s in subsets_of_size(g.vertices(), size) {
            // a vertex with demand 0 gets an empty list
            if s.iter().any(|v| (g.neighbors(v) & s).len() as i64 <= k) {
                continue;
            }
            let h = g.induced_subgraph(s).graph;
            if is_dk_choosable(&h, k)?.choosable {
                return Ok(Some(s));
            }
        }
    }
    Ok(None)
}

/// Whether every coloring of `G_S` from `L` uses a color outside `s`.
pub fn check_pot_colorability_closure(g: &Graph, l: &ListAssignment, s: ColorSet) -> bool {
    let verts = l.meeting(s);
    let sub = g.induced_subgraph(verts);
    let lists: Vec<ColorSet> = sub.map.iter().map(|&v| l.list(v) & s).collect();
    !colorable(&sub.graph, &lists)
}

/// First nonempty `S` within the pot violating the closure property, if any.
pub fn pot_closure_violation(g: &Graph, l: &ListAssignment) -> Option<ColorSet> {
    let pot = l.pot();
    let colors = pot.to_vec();
    (1u64..(1u64 << colors.len()))
        .map(|mask| VertexSet(mask).iter().map(|i| colors[i]).collect::<ColorSet>())
        .find(|&s| !check_pot_colorability_closure(g, l, s))
}

/// Whether the list of `u` has nonempty intersection with the list of `v`
/// for a nonadjacent pair, reported as the first such pair.
pub fn intersecting_nonadjacent_pair(g: &Graph, l: &ListAssignment, within: VertexSet) -> Option<(usize, usize)> {
    for u in within.iter() {
        for v in (within - g.neighbors(u)).iter().filter(|&v| v > u) {
            if l.list(u).intersects(l.list(v)) {
                return Some((u, v));
            }
        }
    }
    None
}

/// Whether `G[s]` can be colored from `L` with at most `colors` distinct
/// colors.
pub fn colorable_with_few_colors(g: &Graph, l: &ListAssignment, s: VertexSet, colors: usize) -> bool {
    let sub = g.induced_subgraph(s);
    let pot = l.pot_within(s);
    let all = pot.to_vec();
    if colors >= all.len() {
        return colorable(&sub.graph, &sub.map.iter().map(|&v| l.list(v)).collect::<Vec<_>>());
    }
    subsets_of_size(VertexSet::full(all.len()), colors).any(|pick| {
        let t: ColorSet = pick.iter().map(|i| all[i]).collect();
        colorable(&sub.graph, &sub.map.iter().map(|&v| l.list(v) & t).collect::<Vec<_>>())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    fn la(lists: &[&[usize]]) -> ListAssignment {
        ListAssignment::from_slices(lists).unwrap()
    }

    #[test]
    fn list_coloring_fixtures() {
        let k3 = complete(3);
        assert!(is_colorable_from_lists(&k3, &la(&[&[1, 2], &[1, 2], &[1, 2]])).is_none());
        let c = is_colorable_from_lists(&k3, &la(&[&[1, 2], &[1, 2], &[3]])).unwrap();
        assert!(c.is_proper(&k3));
        assert_eq!(c.get(2), Some(3));
        let c4 = cycle(4);
        let c = is_colorable_from_lists(&c4, &la(&[&[1, 2], &[1, 2], &[1, 2], &[1, 2]])).unwrap();
        assert!(c.is_proper(&c4));
        assert!(ListAssignment::from_slices(&[&[0]]).is_err());
    }

    #[test]
    fn choosability_fixtures() {
        assert!(is_dk_choosable(&cycle(4), 0).unwrap().choosable);
        assert!(!is_dk_choosable(&cycle(5), 0).unwrap().choosable);
        let k4e3 = complete(4).join(&edgeless(3)).unwrap();
        let v = is_dk_choosable(&k4e3, 1).unwrap();
        assert!(!v.choosable);
        let w = v.witness.unwrap();
        assert!(w.is_f_assignment(&dk_demand(&k4e3, 1)));
        assert!(is_colorable_from_lists(&k4e3, &w).is_none());
        assert!(is_dk_choosable(&complete(6).join(&edgeless(3)).unwrap(), 1).unwrap().choosable);
        assert!(!is_dk_choosable(&complete(5).join(&edgeless(3)).unwrap(), 1).unwrap().choosable);
        let e3k4 = edgeless(3).join(&complete(4)).unwrap();
        assert!(!is_dk_choosable(&complete(1).join(&e3k4).unwrap(), 1).unwrap().choosable);
    }

    #[test]
    fn complete_graphs_need_n_colors() {
        for n in 1..=6 {
            let g = complete(n);
            assert!(is_f_choosable(&g, &vec![n; n]).unwrap().choosable);
            let v = is_f_choosable(&g, &vec![n - 1; n]).unwrap();
            assert!(!v.choosable);
            assert_eq!(v.witness.unwrap().pot().len(), n - 1);
        }
    }

    #[test]
    fn k33_is_not_two_choosable() {
        let k33 = complete_bipartite(3, 3);
        let v = is_f_choosable(&k33, &[2; 6]).unwrap();
        assert!(!v.choosable);
        assert_eq!(v.witness.unwrap().pot().len(), 3);
        // K_{2,3} is 2-choosable
        assert!(is_f_choosable(&complete_bipartite(2, 3), &[2; 5]).unwrap().choosable);
    }

    #[test]
    fn zero_demand_is_trivially_bad() {
        let v = is_dk_choosable(&path(3), 1).unwrap();
        assert!(!v.choosable);
        assert!(v.witness.unwrap().lists().iter().any(|l| l.is_empty()));
    }

    #[test]
    fn induced_scan() {
        assert_eq!(has_induced_dk_choosable_subgraph(&complete(7), 1).unwrap(), None);
        assert_eq!(has_induced_dk_choosable_subgraph(&cycle(6), 0).unwrap(), Some(VertexSet::full(6)));
        assert_eq!(has_induced_dk_choosable_subgraph(&cycle(5), 0).unwrap(), None);
    }

    #[test]
    fn pot_closure() {
        let k3 = complete(3);
        let l = la(&[&[1, 2], &[1, 2], &[1, 2]]);
        assert!(check_pot_colorability_closure(&k3, &l, ColorSet::singleton(1)));
        assert!(check_pot_colorability_closure(&k3, &l, l.pot()));
    }

    #[test]
    fn lex_order() {
        assert!(lex_le(ColorSet(0b110), ColorSet(0b011)));
        assert!(!lex_le(ColorSet(0b011), ColorSet(0b110)));
        assert!(lex_le(ColorSet(0b101), ColorSet(0b101)));
    }
}
