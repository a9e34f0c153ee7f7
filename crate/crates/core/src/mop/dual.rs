use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{Chord, Mop};

/// An inner face, as a sorted vertex triple.
pub type Face = [usize; 3];

/// Weak dual of a triangulation: one node per inner face, linked across
/// shared chords.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualTree {
    pub faces: Vec<Face>,
    /// `(i, j, chord)` with `i < j` face indices sharing `chord`.
    pub links: Vec<(usize, usize, Chord)>,
}

pub(crate) fn face_edges(f: &Face) -> [Chord; 3] {
    [(f[0], f[1]), (f[0], f[2]), (f[1], f[2])]
}

impl DualTree {
    pub fn of(m: &Mop) -> DualTree {
        let faces = m.faces();
        let mut by_edge: BTreeMap<Chord, Vec<usize>> = BTreeMap::new();
        for (i, f) in faces.iter().enumerate() {
            for e in face_edges(f) {
                by_edge.entry(e).or_default().push(i);
            }
        }
        let mut links: Vec<(usize, usize, Chord)> = by_edge
            .into_iter()
            .filter_map(|(e, fs)| match fs[..] {
                [a, b] => Some((a.min(b), a.max(b), e)),
                _ => None,
            })
            .collect();
        links.sort_unstable();
        DualTree { faces, links }
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn neighbors(&self, face: usize) -> Vec<(usize, Chord)> {
        self.links
            .iter()
            .filter_map(|&(a, b, e)| {
                if a == face {
                    Some((b, e))
                } else if b == face {
                    Some((a, e))
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn adjacency(&self) -> Vec<Vec<(usize, Chord)>> {
        let mut adj = vec![Vec::new(); self.faces.len()];
        for &(a, b, e) in &self.links {
            adj[a].push((b, e));
            adj[b].push((a, e));
        }
        adj
    }

    pub fn degree(&self, face: usize) -> usize {
        self.links.iter().filter(|&&(a, b, _)| a == face || b == face).count()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency().iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Connected and acyclic.
    pub fn is_tree(&self) -> bool {
        let n = self.faces.len();
        if n == 0 || self.links.len() != n - 1 {
            return false;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(f) = stack.pop() {
            for &(g, _) in &adj[f] {
                if !seen[g] {
                    seen[g] = true;
                    stack.push(g);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Faces whose dual node has degree at most one.
    pub fn end_faces(&self) -> Vec<usize> {
        let adj = self.adjacency();
        (0..self.faces.len()).filter(|&f| adj[f].len() <= 1).collect()
    }

    /// Common edge of two faces if they are linked.
    pub fn shared_edge(&self, f: usize, g: usize) -> Option<Chord> {
        let key = (f.min(g), f.max(g));
        self.links.iter().find(|&&(a, b, _)| (a, b) == key).map(|&(_, _, e)| e)
    }
}
