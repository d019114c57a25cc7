use serde::Serialize;

use super::{Arc, LinkDiagram};
use crate::error::DiagramError;

/// The corner of crossing `crossing` between PD slot `slot` and the next
/// slot counterclockwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Corner {
    pub crossing: usize,
    pub slot: usize,
}

/// Side of an arc, relative to its orientation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Face {
    pub id: usize,
    /// Corners in boundary order. Empty for the two faces of a free loop.
    pub corners: Vec<Corner>,
    /// Boundary arcs and the side of each arc the face lies on.
    pub edges: Vec<(Arc, Side)>,
}

impl LinkDiagram {
    fn dart_partner(&self) -> Vec<[(usize, usize); 4]> {
        let mut occ: Vec<Vec<(usize, usize)>> = vec![Vec::new(); self.arc_count()];
        for (i, c) in self.crossings.iter().enumerate() {
            for (s, &x) in c.pd().iter().enumerate() {
                occ[x as usize - 1].push((i, s));
            }
        }
        let mut partner = vec![[(0, 0); 4]; self.crossings.len()];
        for o in &occ {
            partner[o[0].0][o[0].1] = o[1];
            partner[o[1].0][o[1].1] = o[0];
        }
        partner
    }

    /// Face id of every corner, faces numbered in order of first corner.
    pub(crate) fn corner_faces(&self) -> Vec<[usize; 4]> {
        let partner = self.dart_partner();
        let mut face = vec![[usize::MAX; 4]; self.crossings.len()];
        let mut next_id = 0;
        for i in 0..self.crossings.len() {
            for s in 0..4 {
                if face[i][s] != usize::MAX {
                    continue;
                }
                let (mut ci, mut cs) = (i, s);
                while face[ci][cs] == usize::MAX {
                    face[ci][cs] = next_id;
                    let (j, t) = partner[ci][(cs + 1) % 4];
                    ci = j;
                    cs = t;
                }
                next_id += 1;
            }
        }
        face
    }

    /// Number of faces traced from corners (free loops excluded).
    fn corner_face_count(&self) -> usize {
        self.corner_faces().iter().flatten().max().map_or(0, |&m| m + 1)
    }

    /// `(left face, right face)` of every arc, indexed by label - 1.
    pub(crate) fn arc_faces(&self) -> Vec<(usize, usize)> {
        let corner = self.corner_faces();
        self.arcs()
            .map(|x| {
                let (i, s) = self.ends(x).tail;
                let slot = self.crossings[i].slot_of(s, false);
                (corner[i][slot], corner[i][(slot + 3) % 4])
            })
            .collect()
    }

    /// Faces of the underlying 4-valent plane graph; each free loop adds two.
    pub fn trace_faces(&self) -> Vec<Face> {
        let partner = self.dart_partner();
        let corner_face = self.corner_faces();
        let count = self.corner_face_count();
        let mut faces: Vec<Face> = (0..count)
            .map(|id| Face { id, corners: Vec::new(), edges: Vec::new() })
            .collect();
        let mut done = vec![[false; 4]; self.crossings.len()];
        for i in 0..self.crossings.len() {
            for s in 0..4 {
                let (mut ci, mut cs) = (i, s);
                while !done[ci][cs] {
                    done[ci][cs] = true;
                    faces[corner_face[ci][cs]].corners.push(Corner { crossing: ci, slot: cs });
                    let (j, t) = partner[ci][(cs + 1) % 4];
                    ci = j;
                    cs = t;
                }
            }
        }
        for (k, (l, r)) in self.arc_faces().into_iter().enumerate() {
            faces[l].edges.push((k as Arc + 1, Side::Left));
            faces[r].edges.push((k as Arc + 1, Side::Right));
        }
        for _ in 0..2 * self.free_loops {
            let id = faces.len();
            faces.push(Face { id, corners: Vec::new(), edges: Vec::new() });
        }
        faces
    }

    /// Euler check: every connected piece with `C` crossings has `C + 2` faces.
    pub fn check_planar(&self) -> Result<(), DiagramError> {
        let pieces = self.pieces().len();
        let faces = self.corner_face_count();
        let crossings = self.crossings.len();
        if faces != crossings + 2 * pieces {
            return Err(DiagramError::NotPlanar { faces, crossings, pieces });
        }
        Ok(())
    }

    /// Default unbounded face of each piece: the face with the most corners,
    /// ties to the smallest incident arc label. Indexed like [`LinkDiagram::pieces`].
    pub fn default_outer_faces(&self) -> Vec<usize> {
        let faces = self.trace_faces();
        let corner_face = self.corner_faces();
        self.pieces()
            .iter()
            .map(|piece| {
                let mut candidates: Vec<usize> = piece.iter().flat_map(|&i| corner_face[i]).collect();
                candidates.sort_unstable();
                candidates.dedup();
                *candidates
                    .iter()
                    .min_by_key(|&&f| {
                        let min_arc = faces[f].edges.iter().map(|e| e.0).min().unwrap_or(Arc::MAX);
                        (std::cmp::Reverse(faces[f].corners.len()), min_arc)
                    })
                    .expect("a piece has faces")
            })
            .collect()
    }
}
