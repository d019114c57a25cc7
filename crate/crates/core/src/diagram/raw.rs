use std::collections::{BTreeMap, HashMap};

use super::{Arc, Crossing, LinkDiagram, Strand};
use crate::error::DiagramError;

/// Relabel a crossing list with arbitrary distinct arc ids into consecutive
/// per-component blocks. Components are discovered in ascending order of
/// their smallest old id and labelled from that arc onwards.
pub(super) fn renormalize(crossings: Vec<Crossing>, free_loops: usize) -> Result<LinkDiagram, DiagramError> {
    let mut heads: HashMap<Arc, (usize, Strand)> = HashMap::new();
    let mut tails: HashMap<Arc, (usize, Strand)> = HashMap::new();
    for (i, c) in crossings.iter().enumerate() {
        for s in [Strand::Under, Strand::Over] {
            let (inc, out) = c.strand(s);
            if heads.insert(inc, (i, s)).is_some() {
                return Err(DiagramError::Orientation(format!("arc {inc} enters two crossings")));
            }
            if tails.insert(out, (i, s)).is_some() {
                return Err(DiagramError::Orientation(format!("arc {out} leaves two crossings")));
            }
        }
    }
    if let Some(a) = heads.keys().find(|a| !tails.contains_key(a)) {
        return Err(DiagramError::Orientation(format!("arc {a} never leaves a crossing")));
    }
    if let Some(a) = tails.keys().find(|a| !heads.contains_key(a)) {
        return Err(DiagramError::Orientation(format!("arc {a} never enters a crossing")));
    }

    let mut ids: Vec<Arc> = heads.keys().copied().collect();
    ids.sort_unstable();
    let mut relabel: BTreeMap<Arc, Arc> = BTreeMap::new();
    let mut components = Vec::new();
    let mut next_label: Arc = 1;
    for &start in &ids {
        if relabel.contains_key(&start) {
            continue;
        }
        let lo = next_label;
        let mut cur = start;
        loop {
            relabel.insert(cur, next_label);
            next_label += 1;
            let (i, s) = heads[&cur];
            cur = crossings[i].strand(s).1;
            if cur == start {
                break;
            }
        }
        components.push((lo, next_label - 1));
    }
    let mapped = crossings.iter().map(|c| c.map_arcs(|a| relabel[&a])).collect();
    Ok(LinkDiagram::from_parts(mapped, components, free_loops))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum State {
    Active,
    Smoothed,
}

/// Mutable scratch copy of a diagram with stable arc labels, used while
/// rewriting several crossings before relabelling once.
#[derive(Clone, Debug)]
pub(crate) struct Work {
    pub crossings: Vec<Crossing>,
    pub state: Vec<State>,
    head: Vec<usize>,
    free_loops: usize,
}

impl Work {
    pub fn new(d: &LinkDiagram) -> Self {
        Work {
            crossings: d.crossings.clone(),
            state: vec![State::Active; d.crossings.len()],
            head: d.ends.iter().map(|e| e.head.0).collect(),
            free_loops: d.free_loops,
        }
    }

    pub fn arc_count(&self) -> usize {
        self.head.len()
    }

    pub fn head(&self, arc: Arc) -> (usize, Strand) {
        let i = self.head[arc as usize - 1];
        let c = &self.crossings[i];
        let s = if c.under_in == arc { Strand::Under } else { Strand::Over };
        (i, s)
    }

    pub fn smooth(&mut self, i: usize) {
        self.state[i] = State::Smoothed;
    }

    pub fn flip(&mut self, i: usize) {
        self.crossings[i] = self.crossings[i].flipped();
    }

    /// Arc reached after passing the head of `arc`.
    pub fn next(&self, arc: Arc) -> Arc {
        let (i, s) = self.head(arc);
        let c = &self.crossings[i];
        match self.state[i] {
            State::Smoothed => c.strand(s.other()).1,
            State::Active => c.strand(s).1,
        }
    }

    /// The closed curve through `start`, as arcs in traversal order.
    pub fn curve(&self, start: Arc) -> Vec<Arc> {
        let mut out = vec![start];
        let mut cur = self.next(start);
        while cur != start {
            out.push(cur);
            cur = self.next(cur);
        }
        out
    }

    /// All closed curves of the current state, each starting at its smallest arc.
    pub fn curves(&self) -> Vec<Vec<Arc>> {
        let mut seen = vec![false; self.arc_count()];
        let mut out = Vec::new();
        for a in 1..=self.arc_count() as Arc {
            if seen[a as usize - 1] {
                continue;
            }
            let c = self.curve(a);
            for &x in &c {
                seen[x as usize - 1] = true;
            }
            out.push(c);
        }
        out
    }

    /// Relabel into a fresh diagram, optionally deleting the arcs in `remove`
    /// (which must form whole curves). Returns the diagram and, for each of
    /// its crossings, the index of the crossing it came from.
    pub fn materialize(&self, remove: Option<&[Arc]>) -> (LinkDiagram, Vec<usize>) {
        let n_arcs = self.arc_count();
        let mut removed = vec![false; n_arcs];
        if let Some(r) = remove {
            for &a in r {
                removed[a as usize - 1] = true;
            }
        }
        let keep: Vec<bool> = self
            .crossings
            .iter()
            .zip(&self.state)
            .map(|(c, st)| {
                *st == State::Active && !removed[c.under_in as usize - 1] && !removed[c.over_in as usize - 1]
            })
            .collect();
        let pass = |arc: Arc| -> Arc {
            let (i, s) = self.head(arc);
            let c = &self.crossings[i];
            match self.state[i] {
                State::Smoothed => c.strand(s.other()).1,
                State::Active => c.strand(s).1,
            }
        };

        let mut visited = removed.clone();
        let mut new_in: HashMap<(usize, Strand), Arc> = HashMap::new();
        for (i, c) in self.crossings.iter().enumerate() {
            if !keep[i] {
                continue;
            }
            for s in [Strand::Under, Strand::Over] {
                let start = c.strand(s).1;
                let mut cur = start;
                loop {
                    visited[cur as usize - 1] = true;
                    let (j, t) = self.head(cur);
                    if keep[j] {
                        new_in.insert((j, t), start);
                        break;
                    }
                    cur = pass(cur);
                }
            }
        }
        let mut loops = 0;
        for a in 1..=n_arcs as Arc {
            if visited[a as usize - 1] {
                continue;
            }
            let mut cur = a;
            loop {
                visited[cur as usize - 1] = true;
                cur = pass(cur);
                if cur == a {
                    break;
                }
            }
            loops += 1;
        }

        let mut origins = Vec::new();
        let mut raw = Vec::new();
        for (i, c) in self.crossings.iter().enumerate() {
            if !keep[i] {
                continue;
            }
            origins.push(i);
            raw.push(Crossing::from_strands(
                (new_in[&(i, Strand::Under)], c.under_out),
                (new_in[&(i, Strand::Over)], c.over_out),
                c.sign,
            ));
        }
        let d = renormalize(raw, self.free_loops + loops).expect("materialized arcs are consistent");
        (d, origins)
    }
}
