use serde::Serialize;

use crate::diagram::{Arc, LinkDiagram, Sign, State, Work};
use crate::error::CastleError;
use crate::seifert::SeifertStructure;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ISDecomposition {
    /// IS circles as arc cycles; a free loop appears as an empty cycle.
    pub circles: Vec<Vec<Arc>>,
    /// Smoothed crossings, ascending.
    pub omega: Vec<usize>,
    /// Loop crossings of each component in the order they were found.
    pub loop_crossings: Vec<Vec<(usize, Sign)>>,
}

/// Crossings whose two strands both lie on `curve`.
fn self_crossings(work: &Work, curve: &[Arc]) -> Vec<bool> {
    let mut hits = vec![0u8; work.crossings.len()];
    for &a in curve {
        let (i, _) = work.head(a);
        hits[i] += 1;
    }
    hits.into_iter().map(|h| h == 2).collect()
}

/// Loop crossings met walking from `start`, smoothing each one as it is
/// found; `work` is left with them smoothed.
pub(crate) fn loop_crossings_in(work: &mut Work, start: Arc) -> Vec<usize> {
    let mut found = Vec::new();
    'restart: loop {
        let curve = work.curve(start);
        let selfs = self_crossings(work, &curve);
        let mut seen = vec![false; work.crossings.len()];
        for &a in &curve {
            let (i, _) = work.head(a);
            if work.state[i] != State::Active || !selfs[i] {
                continue;
            }
            if seen[i] {
                work.smooth(i);
                found.push(i);
                continue 'restart;
            }
            seen[i] = true;
        }
        return found;
    }
}

/// Loop crossings of the component through `start`, in the order found.
pub fn loop_crossings(d: &LinkDiagram, start: Arc) -> Vec<usize> {
    loop_crossings_in(&mut Work::new(d), start)
}

/// The IS decomposition obtained from one starting arc per component
/// (in component order) by smoothing loop crossings.
pub fn is_decomposition(d: &LinkDiagram, starts: &[Arc]) -> Result<ISDecomposition, CastleError> {
    let blocks = d.component_blocks();
    if starts.len() != blocks.len() {
        return Err(CastleError::BadStart(starts.first().copied().unwrap_or(0)));
    }
    for (&s, &(lo, hi)) in starts.iter().zip(blocks) {
        if s < lo || s > hi {
            return Err(CastleError::BadStart(s));
        }
    }
    let mut work = Work::new(d);
    let mut loops = Vec::new();
    for &s in starts {
        let found = loop_crossings_in(&mut work, s);
        loops.push(found.iter().map(|&i| (i, d.crossings()[i].sign)).collect());
    }
    let mut omega: Vec<usize> = loops.iter().flatten().map(|&(i, _): &(usize, Sign)| i).collect();
    omega.sort_unstable();
    let mut circles = work.curves();
    circles.extend(std::iter::repeat_n(Vec::new(), d.free_loops()));
    Ok(ISDecomposition { circles, omega, loop_crossings: loops })
}

/// Curves left after smoothing `omega`, and whether they are all simple
/// (so that they form an IS decomposition).
pub fn smoothing_curves(d: &LinkDiagram, omega: &[usize]) -> (Vec<Vec<Arc>>, bool) {
    let mut work = Work::new(d);
    for &i in omega {
        work.smooth(i);
    }
    let curves = work.curves();
    let simple = curves.iter().all(|c| {
        let selfs = self_crossings(&work, c);
        (0..selfs.len()).all(|i| !selfs[i] || work.state[i] != State::Active)
    });
    let mut all = curves;
    all.extend(std::iter::repeat_n(Vec::new(), d.free_loops()));
    (all, simple)
}

/// The closed walk in the Seifert graph traced by an IS circle, given as
/// its arcs in order. A Seifert circle gives a single vertex.
pub fn seifert_walk(d: &LinkDiagram, circle: &[Arc]) -> Result<Vec<usize>, CastleError> {
    let bad = |why: &str| CastleError::NotIsCircle(why.to_string());
    if circle.is_empty() {
        return Err(bad("empty curve"));
    }
    if circle.iter().any(|&a| a == 0 || a as usize > d.arc_count()) {
        return Err(bad("unknown arc"));
    }
    let mut straight = vec![0u8; d.crossing_count()];
    for (k, &a) in circle.iter().enumerate() {
        let b = circle[(k + 1) % circle.len()];
        let (i, s) = d.ends(a).head;
        let c = &d.crossings()[i];
        if c.strand(s).1 == b {
            straight[i] += 1;
        } else if c.strand(s.other()).1 != b {
            return Err(bad("consecutive arcs do not meet at a crossing"));
        }
    }
    let mut used = vec![0u8; d.crossing_count()];
    for &a in circle {
        used[d.ends(a).head.0] += 1;
    }
    if (0..d.crossing_count()).any(|i| used[i] == 2 && straight[i] > 0) {
        return Err(bad("curve crosses itself"));
    }
    let mut seen = vec![false; d.arc_count()];
    for &a in circle {
        if std::mem::replace(&mut seen[a as usize - 1], true) {
            return Err(bad("arc repeated"));
        }
    }
    let st = SeifertStructure::new(d);
    let mut walk: Vec<usize> = Vec::new();
    for &a in circle {
        let c = st.circle_of_arc[a as usize - 1];
        if walk.last() != Some(&c) {
            walk.push(c);
        }
    }
    while walk.len() > 1 && walk.first() == walk.last() {
        walk.pop();
    }
    Ok(walk)
}

/// A simple cycle of length at least 3 made of consecutive vertices of the
/// closed walk, if there is one.
pub fn find_cycle(walk: &[usize]) -> Option<Vec<usize>> {
    if walk.len() < 3 {
        return None;
    }
    let mut path: Vec<usize> = Vec::new();
    for &v in walk.iter().chain(walk.iter()) {
        if let Some(p) = path.iter().position(|&u| u == v) {
            if path.len() - p >= 3 {
                return Some(path[p..].to_vec());
            }
            path.truncate(p + 1);
        } else {
            path.push(v);
        }
    }
    None
}
