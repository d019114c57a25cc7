//! Oriented link diagrams in PD form.
//!
//! A crossing is written `X[a,b,c,d]`: the four arc labels read
//! counterclockwise starting from the incoming under-strand `a`. The
//! under-strand runs `a -> c`; the crossing is positive iff the over-strand
//! runs `d -> b`. Arc labels of a component form a consecutive block ordered
//! along its orientation.

mod faces;
mod moves;
mod parse;
mod raw;

pub use faces::{Corner, Face, Side};
pub use moves::{add_curl, connected_sum, mirror, reidemeister2, reidemeister3, r3_triangles, R3Site};
pub(crate) use raw::{State, Work};

use std::fmt;

use serde::Serialize;

use crate::error::DiagramError;

/// An arc label. Labels are positive.
pub type Arc = u32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i32 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flipped(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

/// Which of the two strands through a crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Strand {
    Under,
    Over,
}

impl Strand {
    pub fn other(self) -> Strand {
        match self {
            Strand::Under => Strand::Over,
            Strand::Over => Strand::Under,
        }
    }
}

/// One crossing, stored by strand roles. The PD tuple is derived from the
/// roles and the sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Crossing {
    pub under_in: Arc,
    pub under_out: Arc,
    pub over_in: Arc,
    pub over_out: Arc,
    pub sign: Sign,
}

impl Crossing {
    pub fn from_strands(under: (Arc, Arc), over: (Arc, Arc), sign: Sign) -> Self {
        Crossing {
            under_in: under.0,
            under_out: under.1,
            over_in: over.0,
            over_out: over.1,
            sign,
        }
    }

    /// Counterclockwise tuple starting at the incoming under-strand.
    pub fn pd(&self) -> [Arc; 4] {
        match self.sign {
            Sign::Positive => [self.under_in, self.over_out, self.under_out, self.over_in],
            Sign::Negative => [self.under_in, self.over_in, self.under_out, self.over_out],
        }
    }

    pub fn strand(&self, s: Strand) -> (Arc, Arc) {
        match s {
            Strand::Under => (self.under_in, self.under_out),
            Strand::Over => (self.over_in, self.over_out),
        }
    }

    /// Over and under exchanged; the sign negates.
    pub fn flipped(&self) -> Crossing {
        Crossing::from_strands(self.strand(Strand::Over), self.strand(Strand::Under), self.sign.flipped())
    }

    /// Slot index (0..4) of each strand end in the PD tuple.
    pub(crate) fn slot_of(&self, strand: Strand, incoming: bool) -> usize {
        match (strand, incoming, self.sign) {
            (Strand::Under, true, _) => 0,
            (Strand::Under, false, _) => 2,
            (Strand::Over, true, Sign::Positive) => 3,
            (Strand::Over, false, Sign::Positive) => 1,
            (Strand::Over, true, Sign::Negative) => 1,
            (Strand::Over, false, Sign::Negative) => 3,
        }
    }

    pub(crate) fn map_arcs(&self, f: impl Fn(Arc) -> Arc) -> Crossing {
        Crossing::from_strands(
            (f(self.under_in), f(self.under_out)),
            (f(self.over_in), f(self.over_out)),
            self.sign,
        )
    }
}

impl fmt::Display for Crossing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.pd();
        write!(f, "X[{a},{b},{c},{d}]")
    }
}

/// Where an arc starts and ends.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ArcEnds {
    pub tail: (usize, Strand),
    pub head: (usize, Strand),
}

/// An oriented link diagram. Immutable; every rewrite returns a new value
/// with labels renormalized to consecutive per-component blocks.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinkDiagram {
    crossings: Vec<Crossing>,
    components: Vec<(Arc, Arc)>,
    free_loops: usize,
    outer_face: Option<usize>,
    ends: Vec<ArcEnds>,
}

impl LinkDiagram {
    pub fn parse(text: &str) -> Result<Self, DiagramError> {
        parse::parse_pd(text)
    }

    /// The crossingless unlink with `n` components.
    pub fn unlink(n: usize) -> Self {
        LinkDiagram {
            crossings: Vec::new(),
            components: Vec::new(),
            free_loops: n,
            outer_face: None,
            ends: Vec::new(),
        }
    }

    /// Build from crossings whose arcs carry arbitrary distinct ids, then
    /// relabel. Checks arc incidence but not planarity.
    pub fn from_raw(crossings: Vec<Crossing>, free_loops: usize) -> Result<Self, DiagramError> {
        raw::renormalize(crossings, free_loops)
    }

    /// Like [`LinkDiagram::from_raw`], additionally requiring that face tracing closes up.
    pub fn from_raw_checked(crossings: Vec<Crossing>, free_loops: usize) -> Result<Self, DiagramError> {
        let d = raw::renormalize(crossings, free_loops)?;
        d.check_planar()?;
        Ok(d)
    }

    pub(crate) fn from_parts(crossings: Vec<Crossing>, components: Vec<(Arc, Arc)>, free_loops: usize) -> Self {
        let arc_count = components.iter().map(|&(lo, hi)| (hi - lo + 1) as usize).sum::<usize>();
        let mut tails = vec![None; arc_count];
        let mut heads = vec![None; arc_count];
        for (i, c) in crossings.iter().enumerate() {
            for s in [Strand::Under, Strand::Over] {
                let (inc, out) = c.strand(s);
                heads[inc as usize - 1] = Some((i, s));
                tails[out as usize - 1] = Some((i, s));
            }
        }
        let ends = tails
            .into_iter()
            .zip(heads)
            .map(|(t, h)| ArcEnds {
                tail: t.expect("every arc has a tail"),
                head: h.expect("every arc has a head"),
            })
            .collect();
        LinkDiagram { crossings, components, free_loops, outer_face: None, ends }
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing(&self, id: usize) -> Result<&Crossing, DiagramError> {
        self.crossings.get(id).ok_or(DiagramError::UnknownCrossing(id))
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    /// Label blocks of the components that have crossings.
    pub fn component_blocks(&self) -> &[(Arc, Arc)] {
        &self.components
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    /// The same diagram with its free loops replaced by `n` of them.
    pub fn with_free_loops(mut self, n: usize) -> Self {
        self.free_loops = n;
        self
    }

    /// Number of link components, free loops included.
    pub fn component_count(&self) -> usize {
        self.components.len() + self.free_loops
    }

    pub fn arc_count(&self) -> usize {
        self.ends.len()
    }

    pub fn arcs(&self) -> impl Iterator<Item = Arc> {
        1..=self.ends.len() as Arc
    }

    pub fn ends(&self, arc: Arc) -> ArcEnds {
        self.ends[arc as usize - 1]
    }

    pub fn component_of(&self, arc: Arc) -> usize {
        self.components
            .iter()
            .position(|&(lo, hi)| lo <= arc && arc <= hi)
            .expect("arc label out of range")
    }

    pub fn succ(&self, arc: Arc) -> Arc {
        let (lo, hi) = self.components[self.component_of(arc)];
        if arc == hi {
            lo
        } else {
            arc + 1
        }
    }

    /// Arcs of component `k` in orientation order.
    pub fn component_arcs(&self, k: usize) -> impl Iterator<Item = Arc> {
        let (lo, hi) = self.components[k];
        lo..=hi
    }

    pub fn outer_face(&self) -> Option<usize> {
        self.outer_face
    }

    /// Pin the face used as the unbounded region.
    pub fn with_outer_face(mut self, face: usize) -> Self {
        self.outer_face = Some(face);
        self
    }

    pub fn crossing_sign(&self, id: usize) -> Result<Sign, DiagramError> {
        Ok(self.crossing(id)?.sign)
    }

    pub fn writhe(&self) -> i32 {
        self.crossings.iter().map(|c| c.sign.value()).sum()
    }

    /// Oriented smoothing of one crossing.
    pub fn smooth_crossing(&self, id: usize) -> Result<LinkDiagram, DiagramError> {
        self.crossing(id)?;
        let mut w = Work::new(self);
        w.smooth(id);
        Ok(w.materialize(None).0)
    }

    /// Exchange over and under at one crossing. Labels are unchanged.
    pub fn flip_crossing(&self, id: usize) -> Result<LinkDiagram, DiagramError> {
        self.crossing(id)?;
        let mut crossings = self.crossings.clone();
        crossings[id] = crossings[id].flipped();
        let mut out = LinkDiagram::from_parts(crossings, self.components.clone(), self.free_loops);
        out.outer_face = self.outer_face;
        Ok(out)
    }

    /// True iff the crossings met along every component alternate over/under.
    pub fn is_alternating(&self) -> bool {
        self.ends.iter().all(|e| e.tail.1 != e.head.1)
    }

    /// True iff no crossing is nugatory, i.e. no crossing sees the same face
    /// at two opposite corners.
    pub fn is_reduced(&self) -> bool {
        let corner_face = self.corner_faces();
        (0..self.crossings.len()).all(|i| {
            let f = &corner_face[i];
            f[0] != f[2] && f[1] != f[3]
        })
    }

    pub fn is_nugatory(&self, id: usize) -> Result<bool, DiagramError> {
        self.crossing(id)?;
        let f = self.corner_faces()[id];
        Ok(f[0] == f[2] || f[1] == f[3])
    }

    /// The next arc along the orientation.
    pub fn next_arc(&self, arc: Arc) -> Arc {
        let (i, s) = self.ends(arc).head;
        self.crossings[i].strand(s).1
    }

    /// Connected pieces of the crossing graph, as sorted crossing-id lists.
    pub fn pieces(&self) -> Vec<Vec<usize>> {
        let n = self.crossings.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let nx = p[y];
                p[y] = r;
                y = nx;
            }
            r
        }
        for e in &self.ends {
            let (a, b) = (find(&mut parent, e.tail.0), find(&mut parent, e.head.0));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut groups: Vec<Vec<usize>> = Vec::new();
        let mut root_index = vec![usize::MAX; n];
        for i in 0..n {
            let r = find(&mut parent, i);
            if root_index[r] == usize::MAX {
                root_index[r] = groups.len();
                groups.push(Vec::new());
            }
            groups[root_index[r]].push(i);
        }
        groups
    }

    /// PD text, one token per crossing, `O` per free loop.
    pub fn to_pd_string(&self) -> String {
        let mut parts: Vec<String> = self.crossings.iter().map(|c| c.to_string()).collect();
        parts.extend(std::iter::repeat_n("O".to_string(), self.free_loops));
        parts.join(" ")
    }

    /// Relabel-invariant-enough key used for memoization: sorted PD tuples,
    /// component sizes and the free-loop count.
    pub fn canonical_key(&self) -> (Vec<[Arc; 4]>, Vec<Arc>, usize) {
        let mut tuples: Vec<[Arc; 4]> = self.crossings.iter().map(|c| c.pd()).collect();
        tuples.sort_unstable();
        let sizes = self.components.iter().map(|&(lo, hi)| hi - lo + 1).collect();
        (tuples, sizes, self.free_loops)
    }

    /// Copy with a component (by block index) deleted; crossings it takes
    /// part in disappear and the other strand runs straight through.
    pub fn remove_component(&self, k: usize) -> LinkDiagram {
        let arcs: Vec<Arc> = self.component_arcs(k).collect();
        Work::new(self).materialize(Some(&arcs)).0
    }
}

impl fmt::Display for LinkDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_pd_string())
    }
}
