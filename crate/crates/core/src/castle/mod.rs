//! Castles over innermost Seifert circles, the trap-free search, IS
//! decompositions and the castle-guided resolving trees.

mod decomposition;
mod tree;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::diagram::{Arc, LinkDiagram, Side};
use crate::error::CastleError;
use crate::seifert::SeifertStructure;

pub use decomposition::{find_cycle, is_decomposition, loop_crossings, seifert_walk, smoothing_curves, ISDecomposition};
pub use tree::{resolve_tree, NodeOp, ResolvingTree, TreeNode, Variant};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Floor {
    pub level: usize,
    pub circle: usize,
    /// Crossings on the floor in orientation order, first ladder to last.
    pub crossings: Vec<usize>,
    /// Arc entering the first crossing and arc leaving the last one; the
    /// floor's start and end points lie on them.
    pub start_arc: Arc,
    pub end_arc: Arc,
    /// Index of the floor below, `None` for the ground floor.
    pub below: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Ladder {
    pub crossing: usize,
    pub lower: usize,
    pub upper: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Castle {
    pub base: usize,
    /// The base runs clockwise: the castle lies on its left.
    pub clockwise: bool,
    /// Arc of the base circle carrying the starting point.
    pub start_arc: Arc,
    pub floors: Vec<Floor>,
    pub ladders: Vec<Ladder>,
    pub trapped: Vec<usize>,
    /// Floor indices from the ground up to each top floor.
    pub towers: Vec<Vec<usize>>,
}

impl Castle {
    pub fn height(&self) -> usize {
        self.towers.iter().map(Vec::len).max().unwrap_or(1)
    }
}

/// Castle on an innermost circle, starting just before the first crossing
/// after the circle's smallest arc label.
pub fn build_castle(d: &LinkDiagram, base: usize) -> Result<Castle, CastleError> {
    let st = SeifertStructure::new(d);
    let start = st.circles.get(base).and_then(|c| c.arcs.first().copied()).unwrap_or(0);
    castle_on(d, &st, base, start)
}

pub(crate) fn castle_on(d: &LinkDiagram, st: &SeifertStructure, base: usize, start: Arc) -> Result<Castle, CastleError> {
    let circle = st.circles.get(base).ok_or(CastleError::UnknownCircle(base))?;
    if !st.forest.is_innermost(base) {
        return Err(CastleError::NotInnermost(base));
    }
    let up = if circle.clockwise { Side::Left } else { Side::Right };
    let mut castle = Castle {
        base,
        clockwise: circle.clockwise,
        start_arc: start,
        floors: Vec::new(),
        ladders: Vec::new(),
        trapped: Vec::new(),
        towers: Vec::new(),
    };
    if circle.arcs.is_empty() {
        castle.floors.push(Floor { level: 0, circle: base, crossings: Vec::new(), start_arc: 0, end_arc: 0, below: None });
        castle.towers.push(vec![0]);
        return Ok(castle);
    }
    let k0 = circle.arcs.iter().position(|&a| a == start).ok_or(CastleError::BadStart(start))?;
    let m = circle.arcs.len();
    let ground: Vec<Arc> = (0..m).map(|j| circle.arcs[(k0 + j) % m]).collect();
    castle.floors.push(Floor {
        level: 0,
        circle: base,
        crossings: ground.iter().map(|&a| d.ends(a).head.0).collect(),
        start_arc: ground[0],
        end_arc: ground[0],
        below: None,
    });

    let mut hosted = vec![false; st.circle_count()];
    hosted[base] = true;
    let mut ups = vec![up];
    let mut f = 0;
    while f < castle.floors.len() {
        let floor = castle.floors[f].clone();
        let lower = floor.below.map(|b| castle.floors[b].circle);
        let mut groups: BTreeMap<usize, (usize, Vec<usize>)> = BTreeMap::new();
        for (order, &x) in floor.crossings.iter().enumerate() {
            let other = st.other_circle(x, floor.circle);
            if st.side_at(floor.circle, x) == ups[f] {
                groups.entry(other).or_insert((order, Vec::new())).1.push(x);
            } else if Some(other) != lower && !castle.trapped.contains(&other) {
                castle.trapped.push(other);
            }
        }
        let mut groups: Vec<(usize, usize, Vec<usize>)> = groups.into_iter().map(|(c, (o, xs))| (o, c, xs)).collect();
        groups.sort_unstable();
        for (_, c, xs) in groups {
            if hosted[c] {
                continue;
            }
            hosted[c] = true;
            let arcs = &st.circles[c].arcs;
            let pos = |x: usize| arcs.iter().position(|&a| d.ends(a).head.0 == x).expect("ladder lies on the circle");
            let (first, last) = (pos(xs[0]), pos(*xs.last().expect("nonempty group")));
            let len = (last + arcs.len() - first) % arcs.len() + 1;
            let seg: Vec<Arc> = (0..len).map(|j| arcs[(first + j) % arcs.len()]).collect();
            let upper = castle.floors.len();
            castle.floors.push(Floor {
                level: floor.level + 1,
                circle: c,
                crossings: seg.iter().map(|&a| d.ends(a).head.0).collect(),
                start_arc: seg[0],
                end_arc: arcs[(last + 1) % arcs.len()],
                below: Some(f),
            });
            let down = st.side_at(c, xs[0]);
            ups.push(match down {
                Side::Left => Side::Right,
                Side::Right => Side::Left,
            });
            for &x in &xs {
                castle.ladders.push(Ladder { crossing: x, lower: f, upper });
            }
        }
        f += 1;
    }
    castle.trapped.sort_unstable();
    for top in 0..castle.floors.len() {
        if castle.floors.iter().any(|fl| fl.below == Some(top)) {
            continue;
        }
        let mut tower = vec![top];
        while let Some(b) = castle.floors[*tower.last().expect("nonempty")].below {
            tower.push(b);
        }
        tower.reverse();
        castle.towers.push(tower);
    }
    Ok(castle)
}

/// Result of the trap-free search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TrapFreeSearch {
    pub castle: Castle,
    /// Bases tried before the trap-free one.
    pub steps: usize,
}

/// Start from the smallest innermost circle carrying crossings; while the
/// castle traps a circle, rebase to the smallest innermost circle inside the
/// first trapped one. On every new base the default starting point is tried
/// first, then the others in orientation order, keeping the first
/// trap-free castle.
pub fn find_trap_free_castle(d: &LinkDiagram) -> Result<TrapFreeSearch, CastleError> {
    let st = SeifertStructure::new(d);
    find_trap_free_in(d, &st)
}

pub(crate) fn find_trap_free_in(d: &LinkDiagram, st: &SeifertStructure) -> Result<TrapFreeSearch, CastleError> {
    let has_crossings = |c: usize| !st.circles[c].arcs.is_empty();
    let innermost = st.forest.innermost();
    let Some(mut base) = innermost.iter().copied().find(|&c| has_crossings(c)) else {
        let base = *innermost.first().ok_or(CastleError::NoCrossings)?;
        let castle = castle_on(d, st, base, 0)?;
        return Ok(TrapFreeSearch { castle, steps: 0 });
    };
    let n = st.circle_count();
    let mut steps = 0;
    let mut castle = castle_on(d, st, base, st.circles[base].arcs[0])?;
    loop {
        if castle.trapped.is_empty() {
            return Ok(TrapFreeSearch { castle, steps });
        }
        steps += 1;
        if steps > n {
            return Err(CastleError::NoProgress(steps));
        }
        let trapped = castle.trapped[0];
        let inside: Vec<usize> = st
            .forest
            .descendants(trapped)
            .into_iter()
            .filter(|&c| st.forest.is_innermost(c) && has_crossings(c))
            .collect();
        base = inside.first().copied().unwrap_or(trapped);
        castle = best_start(d, st, base)?;
    }
}

fn best_start(d: &LinkDiagram, st: &SeifertStructure, base: usize) -> Result<Castle, CastleError> {
    let arcs = &st.circles[base].arcs;
    let default = castle_on(d, st, base, arcs[0])?;
    if default.trapped.is_empty() {
        return Ok(default);
    }
    for &a in &arcs[1..] {
        let c = castle_on(d, st, base, a)?;
        if c.trapped.is_empty() {
            return Ok(c);
        }
    }
    Ok(default)
}

#[cfg(test)]
mod tests;
