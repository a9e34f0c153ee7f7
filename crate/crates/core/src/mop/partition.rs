use serde::{Deserialize, Serialize};

use super::{Chord, Mop};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// One piece of a MOP-partition: either a triangulation with the split edge
/// on its outer cycle, or the bare split edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Side {
    /// `labels[local] = global` label in the parent triangulation.
    pub labels: Vec<usize>,
    /// `None` when the side is the bare edge.
    pub mop: Option<Mop>,
    /// Local labels of the partition's `(u, v)`.
    pub boundary: (usize, usize),
}

impl Side {
    pub fn bare_edge() -> Side {
        Side {
            labels: vec![0, 1],
            mop: None,
            boundary: (0, 1),
        }
    }

    /// A whole triangulation viewed as a side with boundary `(u, v)`, which
    /// must be an outer edge.
    pub fn from_mop(mop: Mop, u: usize, v: usize) -> Result<Side> {
        if !mop.is_outer_edge(u, v) {
            return Err(Error::InvalidMop(format!("{u}-{v} is not an outer edge")));
        }
        Ok(Side {
            labels: (0..mop.n()).collect(),
            mop: Some(mop),
            boundary: (u, v),
        })
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn is_bare(&self) -> bool {
        self.mop.is_none()
    }

    pub fn graph(&self) -> Result<Graph> {
        match &self.mop {
            Some(m) => m.graph(),
            None => Graph::complete(2),
        }
    }

    /// Faces in local labels.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        self.mop.as_ref().map(Mop::faces).unwrap_or_default()
    }

    /// The same side with `u` and `v` swapped.
    pub fn flipped(&self) -> Side {
        Side {
            boundary: (self.boundary.1, self.boundary.0),
            ..self.clone()
        }
    }
}

/// Split of a triangulation along an edge `uv` into the two maximal pieces
/// meeting exactly in `uv`. `left` walks the polygon forward from `u` to `v`,
/// `right` forward from `v` back to `u`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MopPartition {
    pub edge: (usize, usize),
    pub left: Side,
    pub right: Side,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SideSel {
    Left,
    Right,
}

impl MopPartition {
    pub fn side(&self, which: SideSel) -> &Side {
        match which {
            SideSel::Left => &self.left,
            SideSel::Right => &self.right,
        }
    }
}

fn arc_side(m: &Mop, from: usize, to: usize, u: usize, v: usize) -> Side {
    let n = m.n();
    let mut labels = vec![from];
    let mut x = from;
    while x != to {
        x = (x + 1) % n;
        labels.push(x);
    }
    let local_of = |g: usize| labels.iter().position(|&l| l == g);
    let boundary = (local_of(u).unwrap(), local_of(v).unwrap());
    if labels.len() == 2 {
        return Side {
            labels,
            mop: None,
            boundary,
        };
    }
    let key = (u.min(v), u.max(v));
    let mut chords: Vec<Chord> = m
        .chords()
        .iter()
        .filter(|&&c| c != key)
        .filter_map(|&(a, b)| Some((local_of(a)?, local_of(b)?)))
        .map(|(a, b)| (a.min(b), a.max(b)))
        .collect();
    chords.sort_unstable();
    let mop = Mop::new(labels.len(), &chords).expect("arc of a triangulation is a triangulation");
    Side {
        labels,
        mop: Some(mop),
        boundary,
    }
}

impl Mop {
    pub fn split_at_edge(&self, u: usize, v: usize) -> Result<MopPartition> {
        if u >= self.n() || v >= self.n() || !self.has_edge(u, v) {
            return Err(Error::MissingEdge(u, v));
        }
        Ok(MopPartition {
            edge: (u, v),
            left: arc_side(self, u, v, u, v),
            right: arc_side(self, v, u, u, v),
        })
    }

    /// `G[f; f']`: the maximal piece containing face `f` but not the adjacent
    /// face `g` (indices into [`Mop::faces`]), with their common edge as
    /// boundary. The boundary is oriented `(min, max)` of the shared edge.
    pub fn subgraph_between_faces(&self, f: usize, g: usize) -> Result<Side> {
        let faces = self.faces();
        let (ff, gg) = match (faces.get(f), faces.get(g)) {
            (Some(a), Some(b)) => (a, b),
            _ => return Err(Error::FacesNotAdjacent(f, g)),
        };
        let shared: Vec<usize> = ff.iter().copied().filter(|x| gg.contains(x)).collect();
        if f == g || shared.len() != 2 {
            return Err(Error::FacesNotAdjacent(f, g));
        }
        let (u, v) = (shared[0], shared[1]);
        let apex = ff.iter().copied().find(|x| !shared.contains(x)).unwrap();
        let p = self.split_at_edge(u, v)?;
        Ok(if p.left.labels.contains(&apex) { p.left } else { p.right })
    }
}

/// Glues two sides along their boundaries (`left.u ~ right.u`,
/// `left.v ~ right.v`). Returns the glued triangulation and, for each side,
/// the glued label of every local vertex.
pub fn glue(left: &Side, right: &Side) -> Result<(Mop, Vec<usize>, Vec<usize>)> {
    let nl = left.n();
    let mut right_map = vec![usize::MAX; right.n()];
    right_map[right.boundary.0] = left.boundary.0;
    right_map[right.boundary.1] = left.boundary.1;
    let mut next = nl;
    for slot in right_map.iter_mut().filter(|s| **s == usize::MAX) {
        *slot = next;
        next += 1;
    }
    let mut tris = left.triangles();
    tris.extend(right.triangles().into_iter().map(|t| t.map(|x| right_map[x])));
    let (mop, pos) = Mop::from_triangles(next, &tris)?;
    let left_map = (0..nl).map(|x| pos[x]).collect();
    let right_map = right_map.into_iter().map(|x| pos[x]).collect();
    Ok((mop, left_map, right_map))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn split_examples() {
        let fan = Mop::fan(5).unwrap();
        let p = fan.split_at_edge(0, 2).unwrap();
        assert_eq!(p.left.labels, vec![0, 1, 2]);
        assert_eq!(p.right.labels, vec![2, 3, 4, 0]);
        assert_eq!(p.left.n() + p.right.n(), 5 + 2);

        let t = Mop::triangle();
        let p = t.split_at_edge(0, 1).unwrap();
        assert!(p.left.is_bare());
        assert_eq!(p.right.n(), 3);
        assert_eq!(p.right.labels[p.right.boundary.0], 0);
        assert_eq!(p.right.labels[p.right.boundary.1], 1);

        assert_eq!(fan.split_at_edge(1, 3), Err(Error::MissingEdge(1, 3)));
    }

    #[test]
    fn faces_between() {
        let fan = Mop::fan(5).unwrap();
        // faces: [0,1,2], [0,2,3], [0,3,4]
        let s = fan.subgraph_between_faces(0, 1).unwrap();
        assert_eq!(s.labels, vec![0, 1, 2]);
        assert!(s.mop.is_some());
        let s2 = fan.subgraph_between_faces(1, 0).unwrap();
        assert_eq!(s2.labels, vec![2, 3, 4, 0]);
        assert_eq!(fan.subgraph_between_faces(0, 2), Err(Error::FacesNotAdjacent(0, 2)));
    }

    #[test]
    fn glue_reassembles() {
        let m: Mop = "9;0-2,0-3,3-8,4-8,4-6,6-8".parse().unwrap();
        for (u, v) in m.edges() {
            let p = m.split_at_edge(u, v).unwrap();
            if p.left.is_bare() && p.right.is_bare() {
                continue;
            }
            let (g, lm, rm) = glue(&p.left, &p.right).unwrap();
            assert_eq!(g.n(), m.n());
            // map glued labels back to the original ones and compare edge sets
            let mut back = vec![0; g.n()];
            for (l, &x) in lm.iter().enumerate() {
                back[x] = p.left.labels[l];
            }
            for (l, &x) in rm.iter().enumerate() {
                back[x] = p.right.labels[l];
            }
            let mut edges: Vec<_> = g
                .edges()
                .into_iter()
                .map(|(a, b)| (back[a].min(back[b]), back[a].max(back[b])))
                .collect();
            edges.sort_unstable();
            assert_eq!(edges, m.edges());
        }
    }
}
