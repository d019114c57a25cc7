//! Reidemeister moves and the mirror image, as PD rewrites.

use super::{Arc, Crossing, LinkDiagram, Side, Sign, Strand};
use crate::error::DiagramError;

/// All crossings switched.
pub fn mirror(d: &LinkDiagram) -> LinkDiagram {
    let crossings = d.crossings.iter().map(Crossing::flipped).collect();
    LinkDiagram::from_parts(crossings, d.components.clone(), d.free_loops)
}

fn next_id(d: &LinkDiagram) -> Arc {
    d.arc_count() as Arc + 1
}

/// Redirect the head of `arc` to the new id `to`.
fn retarget_head(crossings: &mut [Crossing], d: &LinkDiagram, arc: Arc, to: Arc) {
    let (i, s) = d.ends(arc).head;
    match s {
        Strand::Under => crossings[i].under_in = to,
        Strand::Over => crossings[i].over_in = to,
    }
}

/// Reidemeister I: a kink of the given sign inserted on `arc`. When
/// `under_first` the strand passes the new crossing first as the under-strand.
pub fn add_curl(d: &LinkDiagram, arc: Arc, sign: Sign, under_first: bool) -> Result<LinkDiagram, DiagramError> {
    if arc == 0 || arc as usize > d.arc_count() {
        return Err(DiagramError::Orientation(format!("no arc {arc}")));
    }
    let (loop_arc, exit) = (next_id(d), next_id(d) + 1);
    let mut crossings = d.crossings.clone();
    retarget_head(&mut crossings, d, arc, exit);
    let (first, second) = ((arc, loop_arc), (loop_arc, exit));
    let kink = if under_first {
        Crossing::from_strands(first, second, sign)
    } else {
        Crossing::from_strands(second, first, sign)
    };
    crossings.push(kink);
    LinkDiagram::from_raw_checked(crossings, d.free_loops)
}

fn side_on_face(d: &LinkDiagram, face: usize, arc: Arc) -> Option<Side> {
    let (l, r) = d.arc_faces()[arc as usize - 1];
    match (l == face, r == face) {
        (true, false) => Some(Side::Left),
        (false, true) => Some(Side::Right),
        _ => None,
    }
}

/// Reidemeister II: push a finger of `x` across face `face` so that it
/// passes over (`x_over`) or under `y` twice.
pub fn reidemeister2(d: &LinkDiagram, face: usize, x: Arc, y: Arc, x_over: bool) -> Result<LinkDiagram, DiagramError> {
    let bad = |why: &str| DiagramError::Orientation(format!("R2 on arcs {x}, {y}: {why}"));
    if x == y {
        return Err(bad("arcs must differ"));
    }
    let sx = side_on_face(d, face, x).ok_or_else(|| bad("first arc not on exactly one side of the face"))?;
    let sy = side_on_face(d, face, y).ok_or_else(|| bad("second arc not on exactly one side of the face"))?;

    let base = next_id(d);
    let (x2, x3, y2, y3) = (base, base + 1, base + 2, base + 3);
    let mut crossings = d.crossings.clone();
    retarget_head(&mut crossings, d, x, x3);
    retarget_head(&mut crossings, d, y, y3);

    // P is the first crossing along x. With x over, P is positive iff the
    // face lies left of y; y meets P first iff x and y see the face on
    // different sides.
    let mut p_sign = if sy == Side::Left { Sign::Positive } else { Sign::Negative };
    if !x_over {
        p_sign = p_sign.flipped();
    }
    let y_meets_p_first = sx != sy;
    let (y_at_p, y_at_q) = if y_meets_p_first { ((y, y2), (y2, y3)) } else { ((y2, y3), (y, y2)) };
    let (x_at_p, x_at_q) = ((x, x2), (x2, x3));
    let make = |xs: (Arc, Arc), ys: (Arc, Arc), sign: Sign| {
        if x_over {
            Crossing::from_strands(ys, xs, sign)
        } else {
            Crossing::from_strands(xs, ys, sign)
        }
    };
    crossings.push(make(x_at_p, y_at_p, p_sign));
    crossings.push(make(x_at_q, y_at_q, p_sign.flipped()));
    LinkDiagram::from_raw_checked(crossings, d.free_loops)
}

/// A triangular face on which a Reidemeister III move applies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct R3Site {
    pub face: usize,
    pub edges: [Arc; 3],
}

/// Triangular faces with three distinct crossings where some boundary edge
/// is over (or under) at both of its ends.
pub fn r3_triangles(d: &LinkDiagram) -> Vec<R3Site> {
    let mut out = Vec::new();
    for f in d.trace_faces() {
        if f.corners.len() != 3 {
            continue;
        }
        let mut cs: Vec<usize> = f.corners.iter().map(|c| c.crossing).collect();
        cs.sort_unstable();
        cs.dedup();
        if cs.len() != 3 {
            continue;
        }
        let edges: Vec<Arc> = f
            .corners
            .iter()
            .map(|c| d.crossings[c.crossing].pd()[(c.slot + 1) % 4])
            .collect();
        let movable = edges.iter().any(|&e| {
            let ends = d.ends(e);
            ends.tail.1 == ends.head.1
        });
        let mut sorted = edges.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if movable && sorted.len() == 3 {
            out.push(R3Site { face: f.id, edges: [edges[0], edges[1], edges[2]] });
        }
    }
    out
}

fn set_strand(c: &mut Crossing, s: Strand, arcs: (Arc, Arc)) {
    match s {
        Strand::Under => {
            c.under_in = arcs.0;
            c.under_out = arcs.1;
        }
        Strand::Over => {
            c.over_in = arcs.0;
            c.over_out = arcs.1;
        }
    }
}

/// Reidemeister III across a triangle: every strand meets its two triangle
/// crossings in the opposite order; over/under roles and signs are kept.
pub fn reidemeister3(d: &LinkDiagram, site: &R3Site) -> Result<LinkDiagram, DiagramError> {
    let mut crossings = d.crossings.clone();
    for &e in &site.edges {
        let ends = d.ends(e);
        let (first, r_first) = ends.tail;
        let (second, r_second) = ends.head;
        let alpha = d.crossings[first].strand(r_first).0;
        let omega = d.crossings[second].strand(r_second).1;
        set_strand(&mut crossings[second], r_second, (alpha, e));
        set_strand(&mut crossings[first], r_first, (e, omega));
    }
    LinkDiagram::from_raw_checked(crossings, d.free_loops)
}

/// Connected sum along arc `a` of `d1` and arc `b` of `d2`: the strand
/// leaving `a` continues into the head of `b` and vice versa.
pub fn connected_sum(d1: &LinkDiagram, a: Arc, d2: &LinkDiagram, b: Arc) -> Result<LinkDiagram, DiagramError> {
    if a == 0 || a as usize > d1.arc_count() || b == 0 || b as usize > d2.arc_count() {
        return Err(DiagramError::Orientation(format!("no arcs {a} and {b} to join")));
    }
    let shift = d1.arc_count() as Arc;
    let b = b + shift;
    let mut crossings = d1.crossings.clone();
    crossings.extend(d2.crossings.iter().map(|c| c.map_arcs(|x| x + shift)));
    let (i, s) = d1.ends(a).head;
    let (j, t) = d2.ends(b - shift).head;
    let j = j + d1.crossings.len();
    match s {
        Strand::Under => crossings[i].under_in = b,
        Strand::Over => crossings[i].over_in = b,
    }
    match t {
        Strand::Under => crossings[j].under_in = a,
        Strand::Over => crossings[j].over_in = a,
    }
    LinkDiagram::from_raw_checked(crossings, d1.free_loops + d2.free_loops)
}
