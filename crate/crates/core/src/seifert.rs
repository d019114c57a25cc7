//! Seifert circles, the weighted Seifert graph and the nesting of circles
//! in the plane.

use std::collections::{BTreeMap, VecDeque};
use std::fmt::Write as _;

use serde::Serialize;

use crate::diagram::{Arc, LinkDiagram, Side, Sign, Work};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeifertCircle {
    pub id: usize,
    /// Arcs in orientation order, starting at the smallest label. Empty for
    /// a free loop.
    pub arcs: Vec<Arc>,
    /// Whether the circle runs clockwise, i.e. its inner side (away from the
    /// outer face) lies on its right.
    pub clockwise: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeifertEdge {
    pub u: usize,
    pub v: usize,
    pub weight: usize,
    pub pos: usize,
    pub neg: usize,
    /// Crossing ids realizing the edge, ascending.
    pub crossings: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeifertGraph {
    pub vertices: usize,
    /// Sorted by `(u, v)` with `u < v`.
    pub edges: Vec<SeifertEdge>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SeifertStats {
    pub tau_plus: usize,
    pub tau_minus: usize,
    pub sigma_plus: usize,
    pub sigma_minus: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NestingForest {
    pub parent: Vec<Option<usize>>,
    pub clockwise: Vec<bool>,
}

impl NestingForest {
    pub fn children(&self, c: usize) -> Vec<usize> {
        (0..self.parent.len()).filter(|&k| self.parent[k] == Some(c)).collect()
    }

    pub fn is_innermost(&self, c: usize) -> bool {
        !self.parent.contains(&Some(c))
    }

    pub fn innermost(&self) -> Vec<usize> {
        (0..self.parent.len()).filter(|&c| self.is_innermost(c)).collect()
    }

    /// Circles strictly inside `c`.
    pub fn descendants(&self, c: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = self.children(c);
        while let Some(x) = stack.pop() {
            out.push(x);
            stack.extend(self.children(x));
        }
        out.sort_unstable();
        out
    }
}

/// Everything about the Seifert smoothing of a diagram, computed once.
#[derive(Clone, Debug)]
pub struct SeifertStructure {
    pub circles: Vec<SeifertCircle>,
    /// Circle of every arc, indexed by label - 1.
    pub circle_of_arc: Vec<usize>,
    /// `(circle through the under-strand's incoming arc, circle through the
    /// over-strand's incoming arc)` per crossing.
    pub crossing_circles: Vec<(usize, usize)>,
    /// Region left and right of every circle. Regions are the components of
    /// the plane minus all circles, numbered per connected piece.
    pub sides: Vec<(usize, usize)>,
    /// Region between the two circles at each crossing.
    pub between: Vec<usize>,
    pub region_count: usize,
    /// Region holding the outer face, per piece.
    pub roots: Vec<usize>,
    pub forest: NestingForest,
}

fn find(p: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while p[r] != r {
        r = p[r];
    }
    let mut y = x;
    while p[y] != r {
        let n = p[y];
        p[y] = r;
        y = n;
    }
    r
}

impl SeifertStructure {
    pub fn new(d: &LinkDiagram) -> Self {
        let mut work = Work::new(d);
        for i in 0..d.crossing_count() {
            work.smooth(i);
        }
        let curves = work.curves();
        let mut circle_of_arc = vec![0; d.arc_count()];
        for (k, c) in curves.iter().enumerate() {
            for &a in c {
                circle_of_arc[a as usize - 1] = k;
            }
        }
        let crossing_circles: Vec<(usize, usize)> = d
            .crossings()
            .iter()
            .map(|c| (circle_of_arc[c.under_in as usize - 1], circle_of_arc[c.over_in as usize - 1]))
            .collect();

        let corner = d.corner_faces();
        let face_count = corner.iter().flatten().max().map_or(0, |&m| m + 1);
        let mut uf: Vec<usize> = (0..face_count).collect();
        for (i, c) in d.crossings().iter().enumerate() {
            let (x, y) = match c.sign {
                Sign::Positive => (corner[i][1], corner[i][3]),
                Sign::Negative => (corner[i][0], corner[i][2]),
            };
            let (rx, ry) = (find(&mut uf, x), find(&mut uf, y));
            if rx != ry {
                uf[rx.max(ry)] = rx.min(ry);
            }
        }
        let mut region_id = vec![usize::MAX; face_count];
        let mut region_count = 0;
        let mut region_of_face = vec![0; face_count];
        for f in 0..face_count {
            let r = find(&mut uf, f);
            if region_id[r] == usize::MAX {
                region_id[r] = region_count;
                region_count += 1;
            }
            region_of_face[f] = region_id[r];
        }

        let arc_faces = d.arc_faces();
        let mut sides: Vec<(usize, usize)> = curves
            .iter()
            .map(|c| {
                let (l, r) = arc_faces[c[0] as usize - 1];
                (region_of_face[l], region_of_face[r])
            })
            .collect();
        let between = d
            .crossings()
            .iter()
            .enumerate()
            .map(|(i, c)| match c.sign {
                Sign::Positive => region_of_face[corner[i][1]],
                Sign::Negative => region_of_face[corner[i][0]],
            })
            .collect();

        let mut roots: Vec<usize> = match d.outer_face() {
            Some(f) => {
                let pieces = d.pieces();
                let defaults = d.default_outer_faces();
                pieces
                    .iter()
                    .zip(defaults)
                    .map(|(p, def)| {
                        let owns = p.iter().any(|&i| corner[i].contains(&f));
                        region_of_face[if owns { f } else { def }]
                    })
                    .collect()
            }
            None => d.default_outer_faces().into_iter().map(|f| region_of_face[f]).collect(),
        };
        let mut circles: Vec<SeifertCircle> = curves
            .into_iter()
            .enumerate()
            .map(|(id, arcs)| SeifertCircle { id, arcs, clockwise: false })
            .collect();
        for _ in 0..d.free_loops() {
            let id = circles.len();
            circles.push(SeifertCircle { id, arcs: Vec::new(), clockwise: false });
            sides.push((region_count, region_count + 1));
            roots.push(region_count + 1);
            region_count += 2;
        }

        let forest = nest(&sides, region_count, &roots);
        for c in &mut circles {
            c.clockwise = forest.clockwise[c.id];
        }
        SeifertStructure { circles, circle_of_arc, crossing_circles, sides, between, region_count, roots, forest }
    }

    pub fn circle_count(&self) -> usize {
        self.circles.len()
    }

    /// The circle across crossing `i` from circle `c`.
    pub fn other_circle(&self, i: usize, c: usize) -> usize {
        let (u, o) = self.crossing_circles[i];
        if u == c {
            o
        } else {
            u
        }
    }

    /// Side of circle `c` on which its neighbour at crossing `i` lies.
    pub fn side_at(&self, c: usize, i: usize) -> Side {
        if self.sides[c].0 == self.between[i] {
            Side::Left
        } else {
            Side::Right
        }
    }

    pub fn region_on(&self, c: usize, side: Side) -> usize {
        match side {
            Side::Left => self.sides[c].0,
            Side::Right => self.sides[c].1,
        }
    }

    /// Crossings met along circle `c`, in orientation order from its first arc.
    pub fn crossings_along(&self, d: &LinkDiagram, c: usize) -> Vec<usize> {
        self.circles[c].arcs.iter().map(|&a| d.ends(a).head.0).collect()
    }

    pub fn graph(&self, d: &LinkDiagram) -> SeifertGraph {
        let mut edges: BTreeMap<(usize, usize), SeifertEdge> = BTreeMap::new();
        for (i, c) in d.crossings().iter().enumerate() {
            let (x, y) = self.crossing_circles[i];
            let (u, v) = (x.min(y), x.max(y));
            let e = edges.entry((u, v)).or_insert(SeifertEdge { u, v, weight: 0, pos: 0, neg: 0, crossings: Vec::new() });
            e.weight += 1;
            match c.sign {
                Sign::Positive => e.pos += 1,
                Sign::Negative => e.neg += 1,
            }
            e.crossings.push(i);
        }
        SeifertGraph { vertices: self.circles.len(), edges: edges.into_values().collect() }
    }
}

/// Root each piece's region tree at its outer region; a circle's parent is
/// the circle crossed when leaving its outer region towards the root.
fn nest(sides: &[(usize, usize)], region_count: usize, roots: &[usize]) -> NestingForest {
    let mut bounding: Vec<Vec<usize>> = vec![Vec::new(); region_count];
    for (c, &(l, r)) in sides.iter().enumerate() {
        bounding[l].push(c);
        bounding[r].push(c);
    }
    // entry[r] = circle crossed to reach region r (None for roots)
    let mut entry: Vec<Option<Option<usize>>> = vec![None; region_count];
    let mut outer = vec![usize::MAX; sides.len()];
    let mut queue = VecDeque::new();
    for &r in roots {
        if entry[r].is_none() {
            entry[r] = Some(None);
            queue.push_back(r);
        }
    }
    while let Some(r) = queue.pop_front() {
        for &c in &bounding[r] {
            if outer[c] != usize::MAX {
                continue;
            }
            outer[c] = r;
            let (l, rr) = sides[c];
            let inner = if l == r { rr } else { l };
            if entry[inner].is_none() {
                entry[inner] = Some(Some(c));
                queue.push_back(inner);
            }
        }
    }
    let parent = outer.iter().map(|&r| entry[r].flatten()).collect();
    let clockwise = sides.iter().zip(&outer).map(|(&(l, _), &o)| l == o).collect();
    NestingForest { parent, clockwise }
}

pub fn seifert_circles(d: &LinkDiagram) -> Vec<SeifertCircle> {
    SeifertStructure::new(d).circles
}

pub fn seifert_graph(d: &LinkDiagram) -> SeifertGraph {
    SeifertStructure::new(d).graph(d)
}

pub fn nesting_forest(d: &LinkDiagram) -> NestingForest {
    SeifertStructure::new(d).forest
}

pub fn seifert_stats(d: &LinkDiagram) -> SeifertStats {
    let g = seifert_graph(d);
    let tau_plus = d.crossings().iter().filter(|c| c.sign == Sign::Positive).count();
    SeifertStats {
        tau_plus,
        tau_minus: d.crossing_count() - tau_plus,
        sigma_plus: g.edges.iter().filter(|e| e.pos > 0).count(),
        sigma_minus: g.edges.iter().filter(|e| e.neg > 0).count(),
    }
}

impl SeifertGraph {
    pub fn edge(&self, u: usize, v: usize) -> Option<&SeifertEdge> {
        let (u, v) = (u.min(v), u.max(v));
        self.edges.iter().find(|e| e.u == u && e.v == v)
    }

    pub fn neighbours(&self, c: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|e| {
                if e.u == c {
                    Some(e.v)
                } else if e.v == c {
                    Some(e.u)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn has_weight_one_edge(&self) -> bool {
        self.edges.iter().any(|e| e.weight == 1)
    }

    /// Shortest-path distances from `src`, `usize::MAX` when unreachable.
    pub fn distances(&self, src: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.vertices];
        dist[src] = 0;
        let mut queue = VecDeque::from([src]);
        while let Some(x) = queue.pop_front() {
            for y in self.neighbours(x) {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph seifert {\n");
        for v in 0..self.vertices {
            let _ = writeln!(s, "  {v};");
        }
        for e in &self.edges {
            let _ = writeln!(s, "  {} -- {} [label=\"{}:+{}/-{}\"];", e.u, e.v, e.weight, e.pos, e.neg);
        }
        s.push_str("}\n");
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid;
    use crate::diagram::tests::{FIGURE_EIGHT, HOPF, LEFT_TREFOIL};

    const FIVE_TWO: &str = "X[1,4,2,5] X[3,8,4,9] X[5,10,6,1] X[9,6,10,7] X[7,2,8,3]";

    fn pd(s: &str) -> LinkDiagram {
        LinkDiagram::parse(s).unwrap()
    }

    #[test]
    fn circle_counts() {
        assert_eq!(seifert_circles(&pd(LEFT_TREFOIL)).len(), 2);
        assert_eq!(seifert_circles(&pd(FIGURE_EIGHT)).len(), 3);
        assert_eq!(seifert_circles(&pd(FIVE_TWO)).len(), 4);
        assert_eq!(seifert_circles(&pd("O")).len(), 1);
        assert_eq!(seifert_circles(&pd("O O O")).len(), 3);
    }

    #[test]
    fn graphs() {
        let g = seifert_graph(&pd(LEFT_TREFOIL));
        assert_eq!(g.vertices, 2);
        assert_eq!(g.edges.len(), 1);
        assert_eq!((g.edges[0].weight, g.edges[0].pos, g.edges[0].neg), (3, 0, 3));
        for k in 2..=6 {
            let g = seifert_graph(&braid::torus_2k(k));
            assert_eq!(g.vertices, 2);
            assert_eq!(g.edges[0].weight, k);
        }
        let g = seifert_graph(&pd(FIVE_TWO));
        assert_eq!(g.vertices, 4);
        let mut w: Vec<usize> = g.edges.iter().map(|e| e.weight).collect();
        w.sort_unstable();
        assert_eq!(w, vec![1, 1, 1, 2]);
        assert!(g.has_weight_one_edge());
    }

    #[test]
    fn stats() {
        let s = seifert_stats(&pd(LEFT_TREFOIL));
        assert_eq!((s.tau_plus, s.tau_minus, s.sigma_plus, s.sigma_minus), (0, 3, 0, 1));
        let s = seifert_stats(&pd(FIGURE_EIGHT));
        assert_eq!((s.tau_plus, s.tau_minus, s.sigma_plus, s.sigma_minus), (2, 2, 1, 1));
        assert_eq!(seifert_stats(&pd("O")), SeifertStats::default());
    }

    #[test]
    fn nesting() {
        let f = nesting_forest(&pd(LEFT_TREFOIL));
        assert_eq!(f.innermost().len(), 1);
        assert_eq!(f.parent.iter().filter(|p| p.is_none()).count(), 1);
        let f = nesting_forest(&pd("O"));
        assert_eq!(f.parent, vec![None]);
        // the two circles of a (2,k) diagram nest or sit side by side
        // depending on the outer face
        let d = braid::torus_2k(3);
        let mut shapes = Vec::new();
        for face in 0..d.trace_faces().len() {
            let f = nesting_forest(&d.clone().with_outer_face(face));
            shapes.push(f.parent.iter().filter(|p| p.is_some()).count());
        }
        assert!(shapes.contains(&0) && shapes.contains(&1));
    }

    #[test]
    fn orientation_coherence() {
        for s in [LEFT_TREFOIL, FIGURE_EIGHT, FIVE_TWO, HOPF] {
            let d = pd(s);
            for face in 0..d.trace_faces().len() {
                let st = SeifertStructure::new(&d.clone().with_outer_face(face));
                for e in &st.graph(&d).edges {
                    let f = &st.forest;
                    let nested = f.parent[e.u] == Some(e.v) || f.parent[e.v] == Some(e.u);
                    assert_eq!(f.clockwise[e.u] == f.clockwise[e.v], nested, "{s} face {face}");
                }
            }
        }
    }

    #[test]
    fn alternating_edges_are_sign_pure() {
        for s in [LEFT_TREFOIL, FIGURE_EIGHT, FIVE_TWO] {
            for e in seifert_graph(&pd(s)).edges {
                assert!(e.pos == 0 || e.neg == 0);
            }
        }
    }

    #[test]
    fn flip_keeps_circles() {
        let d = pd(FIGURE_EIGHT);
        for i in 0..d.crossing_count() {
            let a: Vec<Vec<Arc>> = seifert_circles(&d).into_iter().map(|c| c.arcs).collect();
            let b: Vec<Vec<Arc>> = seifert_circles(&d.flip_crossing(i).unwrap()).into_iter().map(|c| c.arcs).collect();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn dot_output() {
        let dot = seifert_graph(&pd(LEFT_TREFOIL)).to_dot();
        assert_eq!(dot, "graph seifert {\n  0;\n  1;\n  0 -- 1 [label=\"3:+0/-3\"];\n}\n");
    }
}
