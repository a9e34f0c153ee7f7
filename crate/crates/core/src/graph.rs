//! Simple undirected graphs on dense labels `0..n`, stored as fixed-width
//! neighbor bitsets.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[cfg(not(feature = "wide-sets"))]
pub type VertexSet = u64;
#[cfg(feature = "wide-sets")]
pub type VertexSet = u128;

/// Largest vertex count a [`Graph`] can hold.
pub const MAX_VERTICES: usize = VertexSet::BITS as usize;

#[inline]
pub(crate) fn bit(v: usize) -> VertexSet {
    (1 as VertexSet) << v
}

#[inline]
pub(crate) fn full_set(n: usize) -> VertexSet {
    if n >= MAX_VERTICES {
        VertexSet::MAX
    } else {
        bit(n) - 1
    }
}

/// Iterate the members of a vertex set in increasing order.
pub fn members(mut set: VertexSet) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if set == 0 {
            None
        } else {
            let v = set.trailing_zeros() as usize;
            set &= set - 1;
            Some(v)
        }
    })
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge { n, limit: MAX_VERTICES });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::new(n)?;
        for v in 0..n {
            g.adj[v] = full_set(n) & !bit(v);
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        if n >= 3 {
            edges.push((n - 1, 0));
        }
        Graph::from_edges(n, &edges)
    }

    /// Star with center 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> Result<Self> {
        let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        Graph::from_edges(leaves + 1, &edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn adjacency(&self) -> &[VertexSet] {
        &self.adj
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, in upper-triangle column order
    /// (0,1),(0,2),(1,2),(0,3),...
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for v in 0..self.n {
            for u in members(self.adj[v] & (bit(v) - 1)) {
                out.push((u, v));
            }
        }
        out
    }

    /// All vertex pairs that are not edges, `u < v`.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for v in 0..self.n {
            for u in 0..v {
                if self.adj[v] & bit(u) == 0 {
                    out.push((u, v));
                }
            }
        }
        out
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange(w, self.n));
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        Ok(())
    }

    fn insert_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_pair(u, v)?;
        if self.has_edge(u, v) {
            return Err(Error::DuplicateEdge(u, v));
        }
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
        Ok(())
    }

    /// Copy of `self` with edge `uv` added. The edge must be absent.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let mut g = self.clone();
        g.insert_edge(u, v)?;
        Ok(g)
    }

    /// Copy of `self` with edge `uv` removed. The edge must be present.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_pair(u, v)?;
        if !self.has_edge(u, v) {
            return Err(Error::MissingEdge(u, v));
        }
        let mut g = self.clone();
        g.adj[u] &= !bit(v);
        g.adj[v] &= !bit(u);
        Ok(g)
    }

    /// Subgraph induced by `keep`. Returns the subgraph and the old labels
    /// in new-label order (`labels[new] = old`). Out-of-range and repeated
    /// entries of `keep` are ignored.
    pub fn induced_subgraph(&self, keep: &[usize]) -> (Graph, Vec<usize>) {
        let mut set: VertexSet = 0;
        for &v in keep {
            if v < self.n {
                set |= bit(v);
            }
        }
        self.induced_by_set(set)
    }

    pub fn induced_by_set(&self, set: VertexSet) -> (Graph, Vec<usize>) {
        let set = set & full_set(self.n);
        let labels: Vec<usize> = members(set).collect();
        let mut new_of = vec![usize::MAX; self.n];
        for (new, &old) in labels.iter().enumerate() {
            new_of[old] = new;
        }
        let adj = labels
            .iter()
            .map(|&old| members(self.adj[old] & set).fold(0, |acc, w| acc | bit(new_of[w])))
            .collect();
        (Graph { n: labels.len(), adj }, labels)
    }

    /// `self` with the vertices in `remove` deleted (`G \ U`).
    pub fn without(&self, remove: &[usize]) -> (Graph, Vec<usize>) {
        let mut set = full_set(self.n);
        for &v in remove {
            if v < self.n {
                set &= !bit(v);
            }
        }
        self.induced_by_set(set)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = bit(0);
        let mut frontier = bit(0);
        while frontier != 0 {
            let mut next = 0;
            for v in members(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == full_set(self.n)
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edge_count() == self.n - 1 && self.is_connected()
    }

    pub fn is_regular(&self, k: usize) -> bool {
        (0..self.n).all(|v| self.degree(v) == k)
    }

    /// Checks adjacency symmetry and absence of loops.
    pub fn is_well_formed(&self) -> bool {
        (0..self.n).all(|v| {
            self.adj[v] & bit(v) == 0
                && self.adj[v] & !full_set(self.n) == 0
                && members(self.adj[v]).all(|u| self.adj[u] & bit(v) != 0)
        })
    }

    pub fn to_graph6(&self) -> Result<String> {
        crate::graph6::encode(self)
    }

    pub fn from_graph6(text: &str) -> Result<Graph> {
        crate::graph6::decode(text)
    }

    pub(crate) fn from_raw(n: usize, adj: Vec<VertexSet>) -> Graph {
        Graph { n, adj }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Membership {
    In,
    Out,
}

/// Partial assignment of vertices to "forced in" / "forced out".
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VertexConstraint {
    assignments: BTreeMap<usize, Membership>,
}

impl VertexConstraint {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, v: usize, m: Membership) -> Result<Self> {
        self.set(v, m)?;
        Ok(self)
    }

    pub fn forced_in(v: usize) -> Self {
        Self::new().with(v, Membership::In).expect("fresh constraint")
    }

    /// Constraint fixing both `u` and `v`.
    pub fn pair(u: usize, mu: Membership, v: usize, mv: Membership) -> Result<Self> {
        Self::new().with(u, mu)?.with(v, mv)
    }

    pub fn set(&mut self, v: usize, m: Membership) -> Result<()> {
        match self.assignments.get(&v) {
            Some(&old) if old != m => Err(Error::ConflictingConstraint(v)),
            _ => {
                self.assignments.insert(v, m);
                Ok(())
            }
        }
    }

    pub fn get(&self, v: usize) -> Option<Membership> {
        self.assignments.get(&v).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, Membership)> + '_ {
        self.assignments.iter().map(|(&v, &m)| (v, m))
    }

    pub fn is_empty(&self) -> bool {
        self.assignments.is_empty()
    }

    /// Validates labels against a graph and returns `(forced_in, forced_out)` masks.
    pub fn masks(&self, n: usize) -> Result<(VertexSet, VertexSet)> {
        let mut fin = 0;
        let mut fout = 0;
        for (v, m) in self.iter() {
            if v >= n {
                return Err(Error::VertexOutOfRange(v, n));
            }
            match m {
                Membership::In => fin |= bit(v),
                Membership::Out => fout |= bit(v),
            }
        }
        Ok((fin, fout))
    }
}

/// Parses `v+:3,v-:5` (vertex 3 forced in, vertex 5 forced out).
impl FromStr for VertexConstraint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut c = VertexConstraint::new();
        for item in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (tag, label) = item
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("bad constraint item {item:?}")))?;
            let m = match tag {
                "v+" | "+" => Membership::In,
                "v-" | "-" => Membership::Out,
                _ => return Err(Error::Parse(format!("bad constraint tag {tag:?}"))),
            };
            let v = label
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad vertex label {label:?}")))?;
            c.set(v, m)?;
        }
        Ok(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn induced_subgraph_examples() {
        let k3 = Graph::complete(3).unwrap();
        let (k2, labels) = k3.induced_subgraph(&[0, 1]);
        assert_eq!(k2, Graph::complete(2).unwrap());
        assert_eq!(labels, vec![0, 1]);

        let p3 = Graph::path(3).unwrap();
        let (two, labels) = p3.induced_subgraph(&[0, 2]);
        assert_eq!(two.edge_count(), 0);
        assert_eq!(two.n(), 2);
        assert_eq!(labels, vec![0, 2]);

        let diamond = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        let (tri, _) = diamond.induced_subgraph(&[0, 1, 2]);
        assert_eq!(tri, k3);

        let (null, labels) = k3.induced_subgraph(&[]);
        assert_eq!(null.n(), 0);
        assert!(labels.is_empty());
    }

    #[test]
    fn edge_mutation() {
        let k2 = Graph::complete(2).unwrap();
        let e = k2.delete_edge(0, 1).unwrap();
        assert_eq!(e.edge_count(), 0);
        assert_eq!(e.delete_edge(0, 1), Err(Error::MissingEdge(0, 1)));

        let p3 = Graph::path(3).unwrap();
        assert_eq!(p3.add_edge(0, 2).unwrap(), Graph::complete(3).unwrap());
        assert_eq!(p3.add_edge(0, 1), Err(Error::DuplicateEdge(0, 1)));
        assert_eq!(p3.add_edge(1, 1), Err(Error::SelfLoop(1)));
        assert_eq!(p3.add_edge(1, 7), Err(Error::VertexOutOfRange(7, 3)));
    }

    #[test]
    fn ceiling() {
        assert!(Graph::new(MAX_VERTICES).is_ok());
        assert!(matches!(Graph::new(MAX_VERTICES + 1), Err(Error::TooLarge { .. })));
        let k = Graph::complete(MAX_VERTICES).unwrap();
        assert_eq!(k.degree(MAX_VERTICES - 1), MAX_VERTICES - 1);
    }

    #[test]
    fn constraint_parsing() {
        let c: VertexConstraint = "v+:3,v-:5".parse().unwrap();
        assert_eq!(c.get(3), Some(Membership::In));
        assert_eq!(c.get(5), Some(Membership::Out));
        assert!("v+:3,v-:3".parse::<VertexConstraint>().is_err());
        assert!("x:3".parse::<VertexConstraint>().is_err());
        assert_eq!(c.masks(4), Err(Error::VertexOutOfRange(5, 4)));
    }

    #[test]
    fn tree_and_connectivity() {
        assert!(Graph::path(5).unwrap().is_tree());
        assert!(Graph::star(4).unwrap().is_tree());
        assert!(!Graph::cycle(5).unwrap().is_tree());
        assert!(Graph::new(1).unwrap().is_tree());
        assert!(!Graph::new(2).unwrap().is_connected());
    }
}
