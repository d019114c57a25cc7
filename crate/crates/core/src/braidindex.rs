//! Circle-count decisions, weight-one merges and braid-index reports.
//!
//! A merge removes the single crossing between two Seifert circles and
//! sends the over-strand around through other faces of the diagram, staying
//! above every strand it meets. That is an isotopy whatever the route, so the
//! search only has to find a route after which the two circles have fused.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::diagram::{Arc, Crossing, LinkDiagram, Sign, Strand};
use crate::error::MergeError;
use crate::seifert::{seifert_graph, SeifertGraph, SeifertStructure};
use crate::skein::{homfly, mfw_lower_bound};

/// Routes tried before a merge gives up.
const ROUTE_LIMIT: usize = 100_000;

/// Weight-one edges examined exhaustively; beyond this the set is greedy.
pub const EXHAUSTIVE_LIMIT: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MergeablePair {
    pub u: usize,
    pub v: usize,
    pub crossing: usize,
}

/// Weight-one edges of the graph, by ascending crossing id.
pub fn mergeable_pairs(g: &SeifertGraph) -> Vec<MergeablePair> {
    let mut out: Vec<MergeablePair> = g
        .edges
        .iter()
        .filter(|e| e.weight == 1)
        .map(|e| MergeablePair { u: e.u, v: e.v, crossing: e.crossings[0] })
        .collect();
    out.sort_by_key(|p| p.crossing);
    out
}

/// Length of a shortest path between an endpoint of `p` and one of `q`.
pub fn pair_distance(g: &SeifertGraph, p: &MergeablePair, q: &MergeablePair) -> usize {
    let du = g.distances(p.u);
    let dv = g.distances(p.v);
    [q.u, q.v].iter().map(|&x| du[x].min(dv[x])).min().unwrap_or(usize::MAX)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Theorem1Verdict {
    /// Reduced, alternating and free of weight-one edges.
    Equal { braid_index: usize },
    /// Some edge has weight one.
    LessThan { circles: usize, pair: MergeablePair },
    Inapplicable { reduced: bool, alternating: bool },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Theorem1Decision {
    pub circles: usize,
    pub reduced: bool,
    pub alternating: bool,
    pub weight_one_edges: usize,
    #[serde(flatten)]
    pub verdict: Theorem1Verdict,
}

pub fn theorem1_decision(d: &LinkDiagram) -> Theorem1Decision {
    let g = seifert_graph(d);
    let pairs = mergeable_pairs(&g);
    let (reduced, alternating) = (d.is_reduced(), d.is_alternating());
    let verdict = if let Some(&pair) = pairs.first() {
        Theorem1Verdict::LessThan { circles: g.vertices, pair }
    } else if reduced && alternating {
        Theorem1Verdict::Equal { braid_index: g.vertices }
    } else {
        Theorem1Verdict::Inapplicable { reduced, alternating }
    };
    Theorem1Decision { circles: g.vertices, reduced, alternating, weight_one_edges: pairs.len(), verdict }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum MergeKind {
    /// The crossing was nugatory and has been untwisted.
    Nugatory,
    Rerouted { new_crossings: usize },
}

#[derive(Clone, Debug)]
pub struct Merge {
    pub diagram: LinkDiagram,
    pub kind: MergeKind,
}

/// Fuse the two circles of a weight-one edge. A nugatory crossing is
/// untwisted; otherwise the over-strand is rerouted.
pub fn merge_pair(d: &LinkDiagram, pair: MergeablePair) -> Result<Merge, MergeError> {
    let st = SeifertStructure::new(d);
    let g = st.graph(d);
    let fresh = g.edge(pair.u, pair.v).is_some_and(|e| e.weight == 1 && e.crossings == [pair.crossing]);
    if !fresh {
        return Err(MergeError::StalePair(pair.u, pair.v));
    }
    let x = pair.crossing;
    if d.is_nugatory(x)? {
        let c = d.crossings()[x];
        let join = |mut a: Arc| {
            for _ in 0..3 {
                if a == c.under_out {
                    a = c.under_in;
                } else if a == c.over_out {
                    a = c.over_in;
                } else {
                    break;
                }
            }
            a
        };
        let rest: Vec<Crossing> =
            d.crossings().iter().enumerate().filter(|&(i, _)| i != x).map(|(_, k)| k.map_arcs(join)).collect();
        let loops = d.free_loops() + closed_loops(&c);
        let diagram = if rest.is_empty() { LinkDiagram::unlink(loops) } else { LinkDiagram::from_raw_checked(rest, loops)? };
        return Ok(Merge { diagram, kind: MergeKind::Nugatory });
    }
    let target = st.circle_count() - 1;
    let mut found = None;
    let mut tried = 0;
    Router::new(d, x).search(|route| {
        tried += 1;
        let Some(cand) = reroute(d, x, route) else { return tried >= ROUTE_LIMIT };
        if SeifertStructure::new(&cand).circle_count() == target {
            found = Some((cand, route.len()));
            return true;
        }
        tried >= ROUTE_LIMIT
    });
    match found {
        Some((diagram, k)) => Ok(Merge { diagram, kind: MergeKind::Rerouted { new_crossings: k } }),
        None => Err(MergeError::NoRerouting(pair.u, pair.v)),
    }
}

/// Closed curves created by untwisting a nugatory crossing whose strands
/// loop straight back to it.
fn closed_loops(c: &Crossing) -> usize {
    usize::from(c.under_out == c.over_in && c.over_out == c.under_in)
        + usize::from(c.under_out == c.under_in)
        + usize::from(c.over_out == c.over_in)
}

/// Simple paths in the dual graph from the face behind the over-strand to
/// the face ahead of it, once the crossing is removed.
struct Router {
    /// Per face: (arc crossed, face reached, whether it crosses left to right).
    adj: Vec<Vec<(Arc, usize, bool)>>,
    from: usize,
    to: usize,
}

impl Router {
    fn new(d: &LinkDiagram, x: usize) -> Self {
        let c = d.crossings()[x];
        let corner = d.corner_faces()[x];
        let pi = c.slot_of(Strand::Over, true);
        let po = c.slot_of(Strand::Over, false);
        let (from, alias_from) = (corner[pi], corner[(pi + 3) % 4]);
        let (to, alias_to) = (corner[po], corner[(po + 3) % 4]);
        let rep = |f: usize| {
            if f == alias_from {
                from
            } else if f == alias_to {
                to
            } else {
                f
            }
        };
        let faces = d.corner_faces().iter().flatten().copied().max().map_or(0, |m| m + 1);
        let mut adj = vec![Vec::new(); faces];
        let skip = [c.under_in, c.under_out, c.over_in, c.over_out];
        for (k, &(l, r)) in d.arc_faces().iter().enumerate() {
            let a = k as Arc + 1;
            let (l, r) = (rep(l), rep(r));
            if skip.contains(&a) || l == r {
                continue;
            }
            adj[l].push((a, r, true));
            adj[r].push((a, l, false));
        }
        Router { adj, from, to }
    }

    /// Calls `visit` on routes by increasing length until it returns true.
    fn search(&self, mut visit: impl FnMut(&[(Arc, bool)]) -> bool) {
        for len in 1..self.adj.len() {
            let mut on = vec![false; self.adj.len()];
            on[self.from] = true;
            let mut route = Vec::new();
            if self.dfs(self.from, len, &mut on, &mut route, &mut visit) {
                return;
            }
        }
    }

    fn dfs(
        &self,
        f: usize,
        left: usize,
        on: &mut Vec<bool>,
        route: &mut Vec<(Arc, bool)>,
        visit: &mut impl FnMut(&[(Arc, bool)]) -> bool,
    ) -> bool {
        if left == 0 {
            return f == self.to && visit(route);
        }
        for &(a, g, ltr) in &self.adj[f] {
            if on[g] || (g == self.to) != (left == 1) {
                continue;
            }
            on[g] = true;
            route.push((a, ltr));
            let stop = self.dfs(g, left - 1, on, route, visit);
            route.pop();
            on[g] = false;
            if stop {
                return true;
            }
        }
        false
    }
}

/// The diagram with crossing `x` removed and its over-strand crossing the
/// listed arcs instead, above each of them.
fn reroute(d: &LinkDiagram, x: usize, route: &[(Arc, bool)]) -> Option<LinkDiagram> {
    let c = d.crossings()[x];
    let mut next = d.arc_count() as Arc + 1;
    let mut fresh = || {
        next += 1;
        next - 1
    };
    let mut tail_of: BTreeMap<Arc, Arc> = BTreeMap::new();
    let mut added = Vec::new();
    let mut strand = c.over_in;
    for (k, &(a, ltr)) in route.iter().enumerate() {
        let rest = fresh();
        tail_of.insert(a, rest);
        let out = if k + 1 == route.len() { c.over_out } else { fresh() };
        let sign = if ltr { Sign::Positive } else { Sign::Negative };
        added.push(Crossing::from_strands((a, rest), (strand, out), sign));
        strand = out;
    }
    let mut crossings: Vec<Crossing> = d
        .crossings()
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != x)
        .map(|(_, k)| {
            let mut k = k.map_arcs(|a| if a == c.under_out { c.under_in } else { a });
            if let Some(&r) = tail_of.get(&k.under_in) {
                k.under_in = r;
            }
            if let Some(&r) = tail_of.get(&k.over_in) {
                k.over_in = r;
            }
            k
        })
        .collect();
    crossings.extend(added);
    LinkDiagram::from_raw_checked(crossings, d.free_loops()).ok()
}

/// Largest set of mergeable pairs at pairwise distance at least 2.
pub fn independent_mergeable_set(g: &SeifertGraph) -> (usize, Vec<MergeablePair>) {
    independent_mergeable_set_capped(g, EXHAUSTIVE_LIMIT)
}

/// As [`independent_mergeable_set`], exhaustive up to `cap` weight-one
/// edges and greedy (by crossing id) above it.
pub fn independent_mergeable_set_capped(g: &SeifertGraph, cap: usize) -> (usize, Vec<MergeablePair>) {
    let pairs = mergeable_pairs(g);
    let k = pairs.len();
    let clash: Vec<Vec<bool>> =
        (0..k).map(|i| (0..k).map(|j| i != j && pair_distance(g, &pairs[i], &pairs[j]) < 2).collect()).collect();
    let chosen = if k > cap {
        let mut chosen: Vec<usize> = Vec::new();
        for i in 0..k {
            if chosen.iter().all(|&j| !clash[i][j]) {
                chosen.push(i);
            }
        }
        chosen
    } else {
        let mut best = Vec::new();
        grow(&clash, 0, &mut Vec::new(), &mut best);
        best
    };
    let out: Vec<MergeablePair> = chosen.into_iter().map(|i| pairs[i]).collect();
    (out.len(), out)
}

fn grow(clash: &[Vec<bool>], i: usize, cur: &mut Vec<usize>, best: &mut Vec<usize>) {
    if cur.len() + (clash.len() - i) <= best.len() {
        return;
    }
    if i == clash.len() {
        *best = cur.clone();
        return;
    }
    if cur.iter().all(|&j| !clash[i][j]) {
        cur.push(i);
        grow(clash, i + 1, cur, best);
        cur.pop();
    }
    grow(clash, i + 1, cur, best);
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MergeStep {
    #[serde(flatten)]
    pub pair: MergeablePair,
    #[serde(flatten)]
    pub kind: MergeKind,
    pub circles_after: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Certificate {
    #[serde(rename = "theorem-1")]
    Theorem1 { circles: usize },
    Mfw { a_span: i32, bound: usize },
    MergeSequence { steps: Vec<MergeStep>, bound: usize },
    IndependentSet { pairs: Vec<MergeablePair>, bound: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BraidIndexReport {
    pub n: usize,
    pub lower: usize,
    pub upper: usize,
    pub exact: Option<usize>,
    pub certificates: Vec<Certificate>,
    pub homfly: String,
}

/// Brackets the braid index between the MFW bound and the best of `n`,
/// `n - m` and repeated merging.
pub fn braid_index_report(d: &LinkDiagram) -> BraidIndexReport {
    let g = seifert_graph(d);
    let n = g.vertices;
    let p = homfly(d);
    let (hi, lo) = (p.max_a().unwrap_or(0), p.min_a().unwrap_or(0));
    let lower = mfw_lower_bound(&p).map_or(1, |b| b.max(1) as usize);
    let mut certificates = vec![Certificate::Mfw { a_span: hi - lo, bound: lower }];
    let mut upper = n;

    let decision = theorem1_decision(d);
    if let Theorem1Verdict::Equal { braid_index } = decision.verdict {
        certificates.push(Certificate::Theorem1 { circles: braid_index });
    }

    let (m, pairs) = independent_mergeable_set(&g);
    if m > 0 {
        upper = upper.min(n - m);
        certificates.push(Certificate::IndependentSet { pairs, bound: n - m });
    }

    let mut cur = d.clone();
    let mut steps = Vec::new();
    while let Some(&pair) = mergeable_pairs(&seifert_graph(&cur)).first() {
        let Ok(merge) = merge_pair(&cur, pair) else { break };
        cur = merge.diagram;
        let circles_after = SeifertStructure::new(&cur).circle_count();
        steps.push(MergeStep { pair, kind: merge.kind, circles_after });
    }
    if let Some(last) = steps.last() {
        let bound = last.circles_after;
        upper = upper.min(bound);
        certificates.push(Certificate::MergeSequence { steps, bound });
    }

    BraidIndexReport { n, lower, upper, exact: (lower == upper).then_some(upper), certificates, homfly: p.to_string() }
}
