//! Maximal outerplanar graphs represented as triangulations of a convex
//! polygon with outer cycle `0-1-...-(n-1)-0`.

mod dual;
pub mod gadgets;
mod partition;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub use dual::{DualTree, Face};
pub use partition::{glue, MopPartition, Side, SideSel};

pub type Chord = (usize, usize);

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Mop {
    n: usize,
    /// Normalized `(min, max)`, sorted.
    chords: Vec<Chord>,
}

fn is_cycle_edge(n: usize, a: usize, b: usize) -> bool {
    let d = a.abs_diff(b);
    d == 1 || d == n - 1
}

/// Diagonals `(a, b)` and `(c, d)` of a convex polygon (both normalized) cross
/// iff their endpoints strictly interleave.
pub(crate) fn crosses(x: Chord, y: Chord) -> bool {
    let ((a, b), (c, d)) = (x, y);
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

fn normalize(c: Chord) -> Chord {
    (c.0.min(c.1), c.0.max(c.1))
}

impl Mop {
    pub fn new(n: usize, chords: &[Chord]) -> Result<Mop> {
        if n < 3 {
            return Err(Error::InvalidMop(format!("polygon needs at least 3 vertices, got {n}")));
        }
        let mut seen = BTreeSet::new();
        for &c in chords {
            let (a, b) = normalize(c);
            if b >= n {
                return Err(Error::VertexOutOfRange(b, n));
            }
            if a == b || is_cycle_edge(n, a, b) {
                return Err(Error::InvalidMop(format!("{a}-{b} is not a diagonal")));
            }
            if !seen.insert((a, b)) {
                return Err(Error::InvalidMop(format!("chord {a}-{b} repeated")));
            }
        }
        if seen.len() != n - 3 {
            return Err(Error::InvalidMop(format!(
                "a triangulated {n}-gon has {} chords, got {}",
                n - 3,
                seen.len()
            )));
        }
        let chords: Vec<Chord> = seen.into_iter().collect();
        for (i, &x) in chords.iter().enumerate() {
            for &y in &chords[i + 1..] {
                if crosses(x, y) {
                    return Err(Error::InvalidMop(format!(
                        "chords {}-{} and {}-{} cross",
                        x.0, x.1, y.0, y.1
                    )));
                }
            }
        }
        Ok(Mop { n, chords })
    }

    /// Chord list already normalized, sorted and validated by the caller.
    pub(crate) fn from_sorted_unchecked(n: usize, chords: Vec<Chord>) -> Mop {
        debug_assert!(chords.windows(2).all(|w| w[0] < w[1]));
        debug_assert_eq!(chords.len(), n - 3);
        Mop { n, chords }
    }

    pub fn triangle() -> Mop {
        Mop {
            n: 3,
            chords: Vec::new(),
        }
    }

    /// Fan triangulation: every chord incident to vertex 0.
    pub fn fan(n: usize) -> Result<Mop> {
        let chords: Vec<Chord> = (2..n.saturating_sub(1)).map(|v| (0, v)).collect();
        Mop::new(n, &chords)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn chords(&self) -> &[Chord] {
        &self.chords
    }

    pub fn outer_edges(&self) -> Vec<Chord> {
        (0..self.n).map(|i| normalize((i, (i + 1) % self.n))).collect()
    }

    pub fn is_outer_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && u != v && is_cycle_edge(self.n, u, v)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.is_outer_edge(u, v) || self.chords.binary_search(&normalize((u, v))).is_ok()
    }

    /// All `2n - 3` edges, normalized and sorted.
    pub fn edges(&self) -> Vec<Chord> {
        let mut e = self.outer_edges();
        e.extend_from_slice(&self.chords);
        e.sort_unstable();
        e
    }

    /// Sorted neighbor lists; works for any `n`.
    pub fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for (a, b) in self.edges() {
            adj[a].push(b);
            adj[b].push(a);
        }
        for l in &mut adj {
            l.sort_unstable();
        }
        adj
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![2; self.n];
        for &(a, b) in &self.chords {
            d[a] += 1;
            d[b] += 1;
        }
        d
    }

    pub fn graph(&self) -> Result<Graph> {
        Graph::from_edges(self.n, &self.edges())
    }

    /// Inner faces, each as a sorted vertex triple; the list is sorted.
    pub fn faces(&self) -> Vec<Face> {
        let adj = self.adjacency_lists();
        let mut faces = Vec::with_capacity(self.n - 2);
        for a in 0..self.n {
            for &b in adj[a].iter().filter(|&&b| b > a) {
                for &c in adj[b].iter().filter(|&&c| c > b) {
                    if adj[a].binary_search(&c).is_ok() {
                        faces.push([a, b, c]);
                    }
                }
            }
        }
        faces
    }

    pub fn weak_dual(&self) -> DualTree {
        DualTree::of(self)
    }

    fn image(&self, rotate: usize, reflect: bool) -> Vec<Chord> {
        let n = self.n;
        let map = |x: usize| {
            if reflect {
                (rotate + n - x) % n
            } else {
                (x + rotate) % n
            }
        };
        let mut out: Vec<Chord> = self.chords.iter().map(|&(a, b)| normalize((map(a), map(b)))).collect();
        out.sort_unstable();
        out
    }

    fn dihedral_images(&self) -> impl Iterator<Item = Vec<Chord>> + '_ {
        (0..self.n).flat_map(move |r| [self.image(r, false), self.image(r, true)])
    }

    /// Lexicographically least chord list over all rotations and reflections.
    pub fn canonical(&self) -> Mop {
        let best = self.dihedral_images().min().expect("dihedral group is nonempty");
        Mop {
            n: self.n,
            chords: best,
        }
    }

    pub fn is_canonical(&self) -> bool {
        self.dihedral_images().all(|img| img >= self.chords)
    }

    /// Number of distinct labeled triangulations in the dihedral orbit.
    pub fn orbit_size(&self) -> usize {
        self.dihedral_images().collect::<BTreeSet<_>>().len()
    }

    /// Rebuilds a triangulation from an arbitrary list of triangles on labels
    /// `0..n`. The outer cycle is recovered from the edges lying on exactly
    /// one triangle. Returns the Mop and `position[label]`, the polygon index
    /// of each input label.
    pub fn from_triangles(n: usize, triangles: &[[usize; 3]]) -> Result<(Mop, Vec<usize>)> {
        if n < 3 {
            return Err(Error::InvalidMop(format!("{n} vertices")));
        }
        if triangles.len() != n - 2 {
            return Err(Error::InvalidMop(format!(
                "{n} vertices need {} triangles, got {}",
                n - 2,
                triangles.len()
            )));
        }
        let mut uses: BTreeMap<Chord, usize> = BTreeMap::new();
        for t in triangles {
            for &v in t {
                if v >= n {
                    return Err(Error::VertexOutOfRange(v, n));
                }
            }
            if t[0] == t[1] || t[1] == t[2] || t[0] == t[2] {
                return Err(Error::InvalidMop(format!("degenerate triangle {t:?}")));
            }
            for (x, y) in [(t[0], t[1]), (t[1], t[2]), (t[0], t[2])] {
                *uses.entry(normalize((x, y))).or_default() += 1;
            }
        }
        let mut outer = vec![Vec::new(); n];
        for (&(a, b), &k) in &uses {
            match k {
                1 => {
                    outer[a].push(b);
                    outer[b].push(a);
                }
                2 => {}
                _ => return Err(Error::InvalidMop(format!("edge {a}-{b} on {k} triangles"))),
            }
        }
        if outer.iter().any(|o| o.len() != 2) {
            return Err(Error::InvalidMop("boundary is not a single cycle".into()));
        }
        let mut order = vec![0usize];
        let mut prev = usize::MAX;
        let mut cur = 0;
        loop {
            let next = if outer[cur][0] != prev {
                outer[cur][0]
            } else {
                outer[cur][1]
            };
            if next == 0 {
                break;
            }
            if order.len() == n {
                return Err(Error::InvalidMop("boundary is not a single cycle".into()));
            }
            order.push(next);
            prev = cur;
            cur = next;
        }
        if order.len() != n {
            return Err(Error::InvalidMop("boundary cycle misses vertices".into()));
        }
        let mut position = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        let chords: Vec<Chord> = uses
            .iter()
            .filter(|&(_, &k)| k == 2)
            .map(|(&(a, b), _)| normalize((position[a], position[b])))
            .collect();
        Ok((Mop::new(n, &chords)?, position))
    }
}

impl fmt::Display for Mop {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};", self.n)?;
        for (i, (a, b)) in self.chords.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}-{b}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Mop {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mop({self})")
    }
}

/// Parses the `n;a-b,c-d,...` text form, e.g. `5;0-2,0-3`.
impl FromStr for Mop {
    type Err = Error;

    fn from_str(s: &str) -> Result<Mop> {
        let s = s.trim();
        let (n, rest) = s
            .split_once(';')
            .ok_or_else(|| Error::Parse(format!("missing ';' in {s:?}")))?;
        let n: usize = n
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad polygon size {n:?}")))?;
        let mut chords = Vec::new();
        for item in rest.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (a, b) = item
                .split_once('-')
                .ok_or_else(|| Error::Parse(format!("bad chord {item:?}")))?;
            let parse = |t: &str| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad chord {item:?}")))
            };
            chords.push((parse(a)?, parse(b)?));
        }
        Mop::new(n, &chords)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_examples() {
        let t = Mop::new(3, &[]).unwrap();
        assert_eq!(t.faces(), vec![[0, 1, 2]]);
        let fan = Mop::new(5, &[(0, 2), (0, 3)]).unwrap();
        assert_eq!(fan, Mop::fan(5).unwrap());
        assert!(matches!(
            Mop::new(5, &[(0, 2), (1, 3)]),
            Err(Error::InvalidMop(m)) if m.contains("cross")
        ));
        assert!(Mop::new(5, &[(0, 2)]).is_err());
        assert!(Mop::new(5, &[(0, 1), (0, 2)]).is_err());
        assert!(Mop::new(5, &[(0, 4), (0, 2)]).is_err());
        assert!(Mop::new(2, &[]).is_err());
    }

    #[test]
    fn text_format() {
        let m: Mop = "5;0-2,0-3".parse().unwrap();
        assert_eq!(m.to_string(), "5;0-2,0-3");
        assert_eq!("3;".parse::<Mop>().unwrap(), Mop::triangle());
        assert_eq!("5; 3-0 , 2-0".parse::<Mop>().unwrap(), m);
        assert!("5;0-2".parse::<Mop>().is_err());
        assert!("five;".parse::<Mop>().is_err());
    }

    #[test]
    fn graph_shape() {
        let m: Mop = "8;0-2,0-3,3-7,4-7,4-6".parse().unwrap();
        let g = m.graph().unwrap();
        assert_eq!(g.edge_count(), 2 * 8 - 3);
        assert!(m.degrees().iter().filter(|&&d| d == 2).count() >= 2);
        assert_eq!(g.degrees(), m.degrees());
        assert_eq!(m.faces().len(), 6);
    }

    #[test]
    fn canonical_form() {
        let a = Mop::new(4, &[(0, 2)]).unwrap();
        let b = Mop::new(4, &[(1, 3)]).unwrap();
        assert_eq!(a.canonical(), b.canonical());
        assert_eq!(a.orbit_size(), 2);
        let fan = Mop::fan(6).unwrap();
        assert_eq!(fan.orbit_size(), 6);
        assert!(fan.canonical().is_canonical());
    }

    #[test]
    fn from_triangles_relabels_along_boundary() {
        // diamond with labels scrambled: triangles {0,2,3} and {0,1,2}... as 3-1-2 / 3-2-0
        let (m, pos) = Mop::from_triangles(4, &[[3, 1, 2], [3, 2, 0]]).unwrap();
        assert_eq!(m.n(), 4);
        assert!(m.has_edge(pos[3], pos[2]));
        assert!(!m.has_edge(pos[1], pos[0]));
        let (d, pos) = Mop::from_triangles(4, &[[0, 1, 2], [0, 1, 3]]).unwrap();
        assert_eq!(d.chords(), &[(pos[0].min(pos[1]), pos[0].max(pos[1]))]);
        // three triangles on a shared edge is not outerplanar
        assert!(Mop::from_triangles(5, &[[0, 1, 2], [0, 1, 3], [0, 1, 4]]).is_err());
    }
}
