//! Diagrams of closed braids.

use crate::diagram::{Arc, Crossing, LinkDiagram, Sign};
use crate::error::DiagramError;

/// Closure of a braid on `strands` strands. Generator `i` (1-based) crosses
/// strands `i` and `i + 1` positively; `-i` is its inverse.
pub fn closure(strands: usize, word: &[i32]) -> Result<LinkDiagram, DiagramError> {
    let mut position_arc: Vec<Arc> = (1..=strands as Arc).collect();
    let mut next: Arc = strands as Arc + 1;
    let mut crossings = Vec::new();
    for &g in word {
        let i = g.unsigned_abs() as usize;
        if g == 0 || i >= strands {
            return Err(DiagramError::Orientation(format!("generator {g} out of range")));
        }
        let (left, right) = (position_arc[i - 1], position_arc[i]);
        let (to_left, to_right) = (next, next + 1);
        next += 2;
        // strands move up; the left strand ends on the right and vice versa
        let c = if g > 0 {
            Crossing::from_strands((right, to_left), (left, to_right), Sign::Positive)
        } else {
            Crossing::from_strands((left, to_right), (right, to_left), Sign::Negative)
        };
        crossings.push(c);
        position_arc[i - 1] = to_left;
        position_arc[i] = to_right;
    }
    // close up: the top arc at each position continues as the bottom one
    let mut free_loops = 0;
    for (p, &top) in position_arc.iter().enumerate() {
        let bottom = p as Arc + 1;
        if top == bottom {
            free_loops += 1;
            continue;
        }
        for c in crossings.iter_mut() {
            *c = c.map_arcs(|a| if a == top { bottom } else { a });
        }
    }
    LinkDiagram::from_raw_checked(crossings, free_loops)
}

/// The standard diagram of the `(2, k)` torus link, `k >= 1`.
pub fn torus_2k(k: usize) -> LinkDiagram {
    closure(2, &vec![1; k]).expect("torus braid closes up")
}
