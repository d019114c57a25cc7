use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use super::decomposition::loop_crossings_in;
use super::find_trap_free_castle;
use crate::diagram::{Arc, LinkDiagram, Sign, State, Strand, Work};
use crate::error::CastleError;
use crate::poly::LaurentPoly2;
use crate::seifert::SeifertStructure;
use crate::skein::{flip_weight, leaf_contribution, smooth_weight, LeafRecord};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Variant {
    /// Base point on a trap-free castle; descending on clockwise bases.
    P,
    /// As `P` with descending and ascending exchanged.
    N,
    /// Base point at the smallest label of the first component; always descending.
    Generic,
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "P" | "p" => Ok(Variant::P),
            "N" | "n" => Ok(Variant::N),
            "generic" | "G" | "g" => Ok(Variant::Generic),
            _ => Err(format!("unknown tree variant `{s}` (expected P, N or generic)")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum NodeOp {
    Flip,
    Smooth,
}

/// One edge of the tree: the child obtained from its parent by `op` at
/// `crossing` (an id of the root diagram), weighted by `monomial`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TreeNode {
    pub depth: usize,
    pub crossing: usize,
    pub op: NodeOp,
    #[serde(serialize_with = "crate::poly::serialize_display")]
    pub monomial: LaurentPoly2,
}

#[derive(Clone, Debug, Serialize)]
pub struct ResolvingTree {
    pub variant: Variant,
    pub base_writhe: i32,
    pub seifert_circles: usize,
    /// Edges in preorder; the flip child of a node precedes its smooth child.
    pub nodes: Vec<TreeNode>,
    pub leaves: Vec<LeafRecord>,
}

impl ResolvingTree {
    pub fn polynomial(&self) -> LaurentPoly2 {
        let mut p = LaurentPoly2::zero();
        for leaf in &self.leaves {
            p += &leaf_contribution(leaf, self.base_writhe);
        }
        p
    }

    /// One line per edge, indented two spaces per level.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        for n in &self.nodes {
            let op = match n.op {
                NodeOp::Flip => "flip",
                NodeOp::Smooth => "smooth",
            };
            let _ = writeln!(s, "{}crossing={} op={} monomial={}", "  ".repeat(n.depth), n.crossing, op, n.monomial);
        }
        s
    }
}

#[derive(Clone, Debug)]
struct Acc {
    w: i32,
    t: usize,
    t_minus: usize,
    loop_counts: Vec<usize>,
}

struct Builder {
    variant: Variant,
    nodes: Vec<TreeNode>,
    leaves: Vec<LeafRecord>,
}

struct Walk {
    work: Work,
    visited: Vec<bool>,
    base: Arc,
    descending: bool,
}

/// Phase-structured resolving tree. Each phase fixes a base point, walks its
/// component keeping crossings of the phase's kind and branching (flip, then
/// smooth) on the others, and removes the finished component.
pub fn resolve_tree(d: &LinkDiagram, variant: Variant) -> Result<ResolvingTree, CastleError> {
    let mut b = Builder { variant, nodes: Vec::new(), leaves: Vec::new() };
    let acc = Acc { w: d.writhe(), t: 0, t_minus: 0, loop_counts: Vec::new() };
    b.phase(d.clone(), (0..d.crossing_count()).collect(), acc, 0)?;
    Ok(ResolvingTree {
        variant,
        base_writhe: d.writhe(),
        seifert_circles: SeifertStructure::new(d).circle_count(),
        nodes: b.nodes,
        leaves: b.leaves,
    })
}

impl Builder {
    fn phase(&mut self, d: LinkDiagram, ids: Vec<usize>, mut acc: Acc, depth: usize) -> Result<(), CastleError> {
        acc.loop_counts.extend(std::iter::repeat_n(0, d.free_loops()));
        if d.crossing_count() == 0 {
            self.leaves.push(LeafRecord {
                gamma: acc.loop_counts.len(),
                w: acc.w,
                t: acc.t,
                t_minus: acc.t_minus,
                loop_counts: acc.loop_counts,
            });
            return Ok(());
        }
        let d = d.with_free_loops(0);
        let (base, descending) = match self.variant {
            Variant::Generic => (d.component_blocks()[0].0, true),
            Variant::P | Variant::N => {
                let castle = find_trap_free_castle(&d)?.castle;
                (castle.start_arc, castle.clockwise == (self.variant == Variant::P))
            }
        };
        let walk = Walk { work: Work::new(&d), visited: vec![false; d.crossing_count()], base, descending };
        self.walk(&ids, walk, base, acc, depth)
    }

    fn walk(&mut self, ids: &[usize], mut w: Walk, mut cur: Arc, mut acc: Acc, depth: usize) -> Result<(), CastleError> {
        loop {
            let (i, s) = w.work.head(cur);
            if w.work.state[i] == State::Active && !w.visited[i] {
                w.visited[i] = true;
                if (s == Strand::Over) != w.descending {
                    let sign = w.work.crossings[i].sign;
                    let mut flipped = Walk { work: w.work.clone(), visited: w.visited.clone(), ..w };
                    flipped.work.flip(i);
                    self.nodes.push(TreeNode { depth, crossing: ids[i], op: NodeOp::Flip, monomial: flip_weight(sign) });
                    let mut fa = acc.clone();
                    fa.w -= 2 * sign.value();
                    self.walk(ids, flipped, cur, fa, depth + 1)?;

                    w.work.smooth(i);
                    self.nodes.push(TreeNode { depth, crossing: ids[i], op: NodeOp::Smooth, monomial: smooth_weight(sign) });
                    acc.w -= sign.value();
                    acc.t += 1;
                    if sign == Sign::Negative {
                        acc.t_minus += 1;
                    }
                    return self.walk(ids, w, cur, acc, depth + 1);
                }
            }
            cur = w.work.next(cur);
            if cur == w.base {
                break;
            }
        }
        let curve = w.work.curve(w.base);
        let mut probe = w.work.clone();
        acc.loop_counts.push(loop_crossings_in(&mut probe, w.base).len());
        let (next, origins) = w.work.materialize(Some(&curve));
        let next_ids = origins.iter().map(|&o| ids[o]).collect();
        self.phase(next, next_ids, acc, depth)
    }
}
