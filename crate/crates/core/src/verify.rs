//! Property suites over the bundled corpus, runnable from tests and the CLI.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::braidindex::{braid_index_report, independent_mergeable_set, merge_pair, mergeable_pairs};
use crate::castle::{find_trap_free_castle, is_decomposition, resolve_tree, smoothing_curves, Variant};
use crate::corpus;
use crate::diagram::{add_curl, r3_triangles, reidemeister2, reidemeister3, LinkDiagram, Sign};
use crate::seifert::{seifert_graph, seifert_stats, SeifertStructure};
use crate::skein::{homfly, mfw_lower_bound, HomflyEngine};

pub const SUITES: &[&str] = &[
    "skein",
    "morton",
    "extreme-powers",
    "flips",
    "reidemeister",
    "trees",
    "is-decompositions",
    "castles",
    "merge",
];

const MAX_FAILURES: usize = 20;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub passed: usize,
    pub failed: usize,
    /// The first few failures.
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            if self.failures.len() < MAX_FAILURES {
                self.failures.push(what());
            }
        }
    }
}

pub fn run_suite(name: &str) -> Option<SuiteReport> {
    let mut r = SuiteReport { name: name.to_string(), ..Default::default() };
    match name {
        "skein" => skein(&mut r),
        "morton" => morton(&mut r),
        "extreme-powers" => extreme_powers(&mut r),
        "flips" => flips(&mut r),
        "reidemeister" => reidemeister(&mut r),
        "trees" => trees(&mut r),
        "is-decompositions" => is_decompositions(&mut r, 1000, 0x5eed),
        "castles" => castles(&mut r),
        "merge" => merge(&mut r),
        _ => return None,
    }
    Some(r)
}

pub fn run_all() -> Vec<SuiteReport> {
    SUITES.iter().filter_map(|s| run_suite(s)).collect()
}

fn circles(d: &LinkDiagram) -> usize {
    SeifertStructure::new(d).circle_count()
}

/// Reduced, alternating and free of weight-one edges.
pub fn theorem1_applies(d: &LinkDiagram) -> bool {
    d.is_reduced() && d.is_alternating() && !seifert_graph(d).has_weight_one_edge()
}

fn skein(r: &mut SuiteReport) {
    for (name, d) in corpus::diagrams() {
        for i in 0..d.crossing_count() {
            let flipped = d.flip_crossing(i).expect("in range");
            let smoothed = d.smooth_crossing(i).expect("in range");
            let (plus, minus) = match d.crossings()[i].sign {
                Sign::Positive => (&d, &flipped),
                Sign::Negative => (&flipped, &d),
            };
            let p = HomflyEngine::new().homfly(plus);
            let m = HomflyEngine::new().homfly(minus);
            let s = HomflyEngine::new().homfly(&smoothed);
            let lhs = p.shift(1, 1, 0) - m.shift(1, -1, 0) - s.shift(1, 0, 1);
            r.check(lhs.is_zero(), || format!("{name}: skein identity fails at crossing {i}"));
        }
    }
}

fn morton(r: &mut SuiteReport) {
    for (name, d) in corpus::diagrams() {
        let p = homfly(&d);
        let (n, w) = (circles(&d) as i32, d.writhe());
        let (hi, lo) = (p.max_a().unwrap_or(0), p.min_a().unwrap_or(0));
        r.check(hi <= n - w - 1, || format!("{name}: E = {hi} > n - w - 1 = {}", n - w - 1));
        r.check(lo >= -n - w + 1, || format!("{name}: e = {lo} < -n - w + 1 = {}", -n - w + 1));
        let mfw = mfw_lower_bound(&p).unwrap_or(i32::MAX);
        r.check(mfw <= n, || format!("{name}: mfw {mfw} > n {n}"));
    }
}

fn extreme_powers(r: &mut SuiteReport) {
    for (name, d) in corpus::diagrams() {
        if !theorem1_applies(&d) {
            continue;
        }
        let p = homfly(&d);
        let (n, w) = (circles(&d) as i32, d.writhe());
        let (hi, lo) = (p.max_a().unwrap_or(0), p.min_a().unwrap_or(0));
        r.check(hi == n - w - 1, || format!("{name}: E = {hi}, expected {}", n - w - 1));
        r.check(lo == -n - w + 1, || format!("{name}: e = {lo}, expected {}", -n - w + 1));
        let s = seifert_stats(&d);
        let want = (s.tau_plus + s.tau_minus) as i32 - 2 * s.sigma_minus as i32 - (n - 1);
        let top = p.a_coefficient(hi).max_z();
        r.check(top == Some(want), || format!("{name}: top z power {top:?}, expected {want}"));
    }
}

fn flips(r: &mut SuiteReport) {
    for (name, d) in corpus::diagrams() {
        let base = homfly(&d);
        for i in 0..d.crossing_count() {
            let twice = d.flip_crossing(i).and_then(|e| e.flip_crossing(i)).expect("in range");
            r.check(twice == d, || format!("{name}: flipping crossing {i} twice changes the diagram"));
        }
        let shifted = relabel(&d);
        r.check(homfly(&shifted) == base, || format!("{name}: relabelling changes HOMFLY"));
    }
}

/// The same diagram with every component's labels rotated by one.
fn relabel(d: &LinkDiagram) -> LinkDiagram {
    let shift = |a: u32| {
        let &(lo, hi) = d.component_blocks().iter().find(|&&(lo, hi)| lo <= a && a <= hi).expect("arc in a block");
        if a == hi {
            lo
        } else {
            a + 1
        }
    };
    let crossings = d.crossings().iter().map(|c| c.map_arcs(shift)).collect();
    LinkDiagram::from_raw_checked(crossings, d.free_loops()).expect("relabelling keeps the diagram valid")
}

/// R1, R2 and R3 rewrites of `d`, tagged by move.
pub fn reidemeister_variants(d: &LinkDiagram) -> Vec<(&'static str, LinkDiagram)> {
    let mut out = Vec::new();
    for arc in d.arcs() {
        for sign in [Sign::Positive, Sign::Negative] {
            for under_first in [true, false] {
                if let Ok(e) = add_curl(d, arc, sign, under_first) {
                    out.push(("R1", e));
                }
            }
        }
    }
    let mut r2 = Vec::new();
    for f in d.trace_faces() {
        for x in d.arcs() {
            for y in d.arcs() {
                for over in [true, false] {
                    if let Ok(e) = reidemeister2(d, f.id, x, y, over) {
                        r2.push(e);
                    }
                }
            }
        }
    }
    for e in &r2 {
        for site in r3_triangles(e) {
            if let Ok(t) = reidemeister3(e, &site) {
                out.push(("R3", t));
            }
        }
    }
    out.extend(r2.into_iter().map(|e| ("R2", e)));
    out
}

fn reidemeister(r: &mut SuiteReport) {
    for name in ["trefoil_left", "trefoil_right", "figure_eight"] {
        let d = corpus::diagram(name).expect("bundled");
        let base = homfly(&d);
        let variants = reidemeister_variants(&d);
        for kind in ["R1", "R2", "R3"] {
            r.check(variants.iter().any(|(k, _)| *k == kind), || format!("{name}: no {kind} rewrite applied"));
        }
        for (kind, e) in variants {
            r.check(homfly(&e) == base, || format!("{name}: {kind} rewrite {} changes HOMFLY", e.to_pd_string()));
        }
    }
}

fn trees(r: &mut SuiteReport) {
    for (name, d) in corpus::diagrams() {
        let p = homfly(&d);
        let n = circles(&d);
        let special = theorem1_applies(&d);
        for v in [Variant::P, Variant::N, Variant::Generic] {
            let t = match resolve_tree(&d, v) {
                Ok(t) => t,
                Err(e) => {
                    r.check(false, || format!("{name}: tree {v:?} failed: {e}"));
                    continue;
                }
            };
            r.check(t.polynomial() == p, || format!("{name}: tree {v:?} disagrees with the skein recursion"));
            if v == Variant::Generic {
                continue;
            }
            for leaf in &t.leaves {
                let bound = leaf.gamma as i32 + leaf.w.abs() <= n as i32;
                r.check(bound, || format!("{name}: tree {v:?} leaf {leaf:?} exceeds n = {n}"));
            }
            if !special {
                continue;
            }
            let top = v == Variant::P;
            for leaf in &t.leaves {
                let g = leaf.gamma as i32;
                let extreme = if top { g + leaf.w == n as i32 } else { g - leaf.w == n as i32 };
                if extreme {
                    let simple = leaf.loop_counts.iter().all(|&k| k == 0);
                    r.check(simple, || format!("{name}: tree {v:?} extreme leaf {leaf:?} has loop crossings"));
                }
            }
            let s = seifert_stats(&d);
            let (t_want, tm_want) = if top {
                (s.tau_plus + s.tau_minus - 2 * s.sigma_minus, s.tau_minus - 2 * s.sigma_minus)
            } else {
                (s.tau_plus + s.tau_minus - 2 * s.sigma_plus, s.tau_minus)
            };
            let found = t.leaves.iter().any(|l| l.gamma == n && l.t == t_want && l.t_minus == tm_want);
            r.check(found, || format!("{name}: tree {v:?} has no leaf with gamma = {n}, t = {t_want}, t- = {tm_want}"));
        }
    }
}

/// Random IS decompositions: at most `n` circles, and never fewer circles
/// after smoothing further crossings while staying simple.
pub fn is_decompositions(r: &mut SuiteReport, rounds: usize, seed: u64) {
    let pool: Vec<(&str, LinkDiagram)> =
        corpus::diagrams().into_iter().filter(|(_, d)| d.crossing_count() > 0).collect();
    let mut rng = StdRng::seed_from_u64(seed);
    for _ in 0..rounds {
        let (name, d) = &pool[rng.gen_range(0..pool.len())];
        let starts: Vec<u32> = d.component_blocks().iter().map(|&(lo, hi)| rng.gen_range(lo..=hi)).collect();
        let Ok(dec) = is_decomposition(d, &starts) else {
            r.check(false, || format!("{name}: no IS decomposition from {starts:?}"));
            continue;
        };
        let n = circles(d);
        let count = dec.circles.len();
        r.check(count <= n, || format!("{name}: {count} IS circles from {starts:?} exceed n = {n}"));
        let mut omega = dec.omega.clone();
        for i in 0..d.crossing_count() {
            if !omega.contains(&i) && rng.gen_bool(0.5) {
                omega.push(i);
            }
        }
        let (curves, simple) = smoothing_curves(d, &omega);
        if simple {
            let finer = curves.len();
            r.check(finer >= count, || format!("{name}: refining {count} IS circles gave {finer}"));
        }
    }
}

fn castles(r: &mut SuiteReport) {
    for (name, d) in corpus::diagrams() {
        let n = circles(&d);
        let search = match find_trap_free_castle(&d) {
            Ok(s) => s,
            Err(e) => {
                r.check(false, || format!("{name}: trap-free search failed: {e}"));
                continue;
            }
        };
        let c = &search.castle;
        r.check(c.trapped.is_empty(), || format!("{name}: castle still traps {:?}", c.trapped));
        r.check(search.steps <= n, || format!("{name}: {} rebasing steps for n = {n}", search.steps));
        r.check(c.height() <= n, || format!("{name}: tower height {} exceeds n = {n}", c.height()));
        r.check(c.floors[0].level == 0 && c.floors[0].circle == c.base, || format!("{name}: bad ground floor"));
        let levels = c.ladders.iter().all(|l| c.floors[l.upper].level == c.floors[l.lower].level + 1);
        r.check(levels, || format!("{name}: a ladder skips a level"));
    }
}

fn merge(r: &mut SuiteReport) {
    for (name, d) in corpus::diagrams() {
        let g = seifert_graph(&d);
        let report = braid_index_report(&d);
        r.check(report.lower <= report.upper, || format!("{name}: lower {} > upper {}", report.lower, report.upper));
        if theorem1_applies(&d) {
            let n = g.vertices;
            r.check(report.lower == n && report.upper == n, || format!("{name}: bounds are not both n = {n}"));
        }
        let (m, _) = independent_mergeable_set(&g);
        let mfw = mfw_lower_bound(&homfly(&d)).unwrap_or(i32::MAX);
        r.check(mfw <= (g.vertices - m) as i32, || format!("{name}: mfw {mfw} > n - m = {}", g.vertices - m));
        let mut cur = d.clone();
        while let Some(&pair) = mergeable_pairs(&seifert_graph(&cur)).first() {
            let before = circles(&cur);
            match merge_pair(&cur, pair) {
                Ok(step) => {
                    r.check(circles(&step.diagram) + 1 == before, || format!("{name}: merge at {pair:?} kept {before} circles"));
                    r.check(homfly(&step.diagram) == homfly(&cur), || format!("{name}: merge at {pair:?} changed HOMFLY"));
                    cur = step.diagram;
                }
                Err(e) => {
                    r.check(false, || format!("{name}: merge at {pair:?} failed: {e}"));
                    break;
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_suite_passes() {
        for s in run_all() {
            assert!(s.ok(), "{}: {:?}", s.name, s.failures);
            assert!(s.passed > 0, "{} checked nothing", s.name);
        }
        assert!(run_suite("nope").is_none());
    }
}
