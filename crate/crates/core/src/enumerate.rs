//! Exhaustive and random generators: labeled polygon triangulations,
//! dihedral orbit representatives, free trees, edge-deleted subgraphs of a
//! triangulation, and random sparse or regular graphs.

use rand::seq::index::sample;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::mop::{Chord, Mop};

pub const MOP_MIN: usize = 3;
pub const MOP_MAX: usize = 18;
pub const TREE_MIN: usize = 1;
pub const TREE_MAX: usize = 18;

/// Identifier of the generator recorded in reports.
pub const PRNG_ALGORITHM: &str = "ChaCha8 (rand_chacha 0.3), seed_from_u64 + set_stream";

/// Independent, reproducible stream `stream` of the generator seeded by `seed`.
pub fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn check_range(family: &'static str, n: usize, min: usize, max: usize) -> Result<()> {
    if n < min || n > max {
        return Err(Error::OutOfRange { family, n, min, max });
    }
    Ok(())
}

/// All triangulations of the labeled `n`-gon. The polygon is walked as
/// `1, 2, ..., n-1, 0`; the face on edge `0-1` is chosen first, then the
/// two sub-polygons recursively.
#[derive(Clone, Debug)]
pub struct MopIter {
    n: usize,
    seq: Vec<usize>,
    stack: Vec<Partial>,
}

#[derive(Clone, Debug)]
struct Partial {
    chords: Vec<Chord>,
    /// Open sub-polygons as index ranges into `seq`.
    pending: Vec<(usize, usize)>,
}

impl MopIter {
    pub fn new(n: usize) -> Result<MopIter> {
        check_range("mops", n, MOP_MIN, MOP_MAX)?;
        let mut it = MopIter::empty(n);
        it.stack.push(Partial {
            chords: Vec::with_capacity(n - 3),
            pending: vec![(0, n - 1)],
        });
        Ok(it)
    }

    /// Number of shards of [`MopIter::shard`]: one per apex of the face on
    /// edge `0-1`.
    pub fn shard_count(n: usize) -> usize {
        n.saturating_sub(2)
    }

    /// Only the triangulations whose face on edge `0-1` has apex
    /// `seq[apex + 1]`. Shards `0..shard_count(n)` partition [`MopIter::new`]
    /// and concatenate to it in order.
    pub fn shard(n: usize, shard: usize) -> Result<MopIter> {
        check_range("mops", n, MOP_MIN, MOP_MAX)?;
        let mut it = MopIter::empty(n);
        if shard < MopIter::shard_count(n) {
            let mut p = Partial {
                chords: Vec::with_capacity(n - 3),
                pending: Vec::new(),
            };
            it.place(&mut p, 0, n - 1, shard + 1);
            it.stack.push(p);
        }
        Ok(it)
    }

    fn empty(n: usize) -> MopIter {
        MopIter {
            n,
            seq: (1..n).chain([0]).collect(),
            stack: Vec::new(),
        }
    }

    fn place(&self, p: &mut Partial, a: usize, b: usize, j: usize) {
        for (x, y) in [(a, j), (j, b)] {
            if y - x >= 2 {
                let (s, t) = (self.seq[x], self.seq[y]);
                p.chords.push((s.min(t), s.max(t)));
            }
        }
        // right part first on the stack so the left part is expanded first
        p.pending.push((j, b));
        p.pending.push((a, j));
    }
}

impl Iterator for MopIter {
    type Item = Mop;

    fn next(&mut self) -> Option<Mop> {
        while let Some(mut p) = self.stack.pop() {
            let Some((a, b)) = p.pending.pop() else {
                let mut chords = p.chords;
                chords.sort_unstable();
                return Some(Mop::from_sorted_unchecked(self.n, chords));
            };
            if b - a < 2 {
                self.stack.push(p);
                continue;
            }
            for j in (a + 1..b).rev() {
                let mut q = p.clone();
                self.place(&mut q, a, b, j);
                self.stack.push(q);
            }
        }
        None
    }
}

pub fn enumerate_mops(n: usize) -> Result<MopIter> {
    MopIter::new(n)
}

/// One triangulation per dihedral orbit, each in canonical form.
pub fn enumerate_mops_canonical(n: usize) -> Result<impl Iterator<Item = Mop>> {
    Ok(MopIter::new(n)?.filter(Mop::is_canonical))
}

pub fn catalan(m: usize) -> u128 {
    let mut c: u128 = 1;
    for i in 0..m as u128 {
        c = c * 2 * (2 * i + 1) / (i + 2);
    }
    c
}

/// Free trees on `n` vertices up to isomorphism, generated from canonical
/// level sequences (Wright, Richmond, Odlyzko and McKay).
#[derive(Clone, Debug)]
pub struct FreeTreeIter {
    layout: Option<Vec<usize>>,
    single: bool,
}

impl FreeTreeIter {
    pub fn new(n: usize) -> Result<FreeTreeIter> {
        check_range("freeTrees", n, TREE_MIN, TREE_MAX)?;
        if n == 1 {
            return Ok(FreeTreeIter {
                layout: None,
                single: true,
            });
        }
        let layout = (0..=n / 2).chain(1..n.div_ceil(2)).collect();
        Ok(FreeTreeIter {
            layout: Some(layout),
            single: false,
        })
    }
}

fn next_rooted_tree(pred: &[usize], p: Option<usize>) -> Option<Vec<usize>> {
    let p = match p {
        Some(p) => p,
        None => {
            let mut p = pred.len() - 1;
            while pred[p] == 1 {
                p -= 1;
            }
            p
        }
    };
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while pred[q] != pred[p] - 1 {
        q -= 1;
    }
    let mut out = pred.to_vec();
    for i in p..out.len() {
        out[i] = out[i - p + q];
    }
    Some(out)
}

fn split_tree(layout: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let m = layout
        .iter()
        .enumerate()
        .filter(|&(_, &l)| l == 1)
        .nth(1)
        .map_or(layout.len(), |(i, _)| i);
    let left = layout[1..m].iter().map(|&l| l - 1).collect();
    let rest = std::iter::once(0).chain(layout[m..].iter().copied()).collect();
    (left, rest)
}

fn next_tree(candidate: Vec<usize>) -> Option<Vec<usize>> {
    let (left, rest) = split_tree(&candidate);
    let lh = left.iter().max().copied().unwrap_or(0);
    let rh = rest.iter().max().copied().unwrap_or(0);
    let mut valid = rh >= lh;
    if valid && rh == lh && (left.len() > rest.len() || (left.len() == rest.len() && left > rest)) {
        valid = false;
    }
    if valid {
        return Some(candidate);
    }
    let p = left.len();
    let mut next = next_rooted_tree(&candidate, Some(p))?;
    if candidate[p] > 2 {
        let (new_left, _) = split_tree(&next);
        let h = new_left.iter().max().copied().unwrap_or(0);
        let len = next.len();
        for (i, x) in (1..h + 2).enumerate() {
            next[len - (h + 1) + i] = x;
        }
    }
    Some(next)
}

/// Level sequence to edges: each vertex hangs off the nearest earlier
/// vertex one level up.
fn layout_to_graph(layout: &[usize]) -> Graph {
    let mut edges = Vec::with_capacity(layout.len() - 1);
    let mut stack: Vec<usize> = Vec::new();
    for (i, &level) in layout.iter().enumerate() {
        while let Some(&j) = stack.last() {
            if layout[j] >= level {
                stack.pop();
            } else {
                edges.push((j, i));
                break;
            }
        }
        stack.push(i);
    }
    Graph::from_edges(layout.len(), &edges).expect("level sequence gives a tree")
}

impl Iterator for FreeTreeIter {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.single {
            self.single = false;
            return Some(Graph::new(1).expect("one vertex"));
        }
        let layout = next_tree(self.layout.take()?)?;
        let g = layout_to_graph(&layout);
        self.layout = next_rooted_tree(&layout, None);
        Some(g)
    }
}

pub fn enumerate_free_trees(n: usize) -> Result<FreeTreeIter> {
    FreeTreeIter::new(n)
}

/// A uniformly chosen apex at every step of the ear recursion. Not uniform
/// over triangulations.
pub fn random_mop<R: Rng>(n: usize, rng: &mut R) -> Result<Mop> {
    if n < MOP_MIN {
        return Err(Error::OutOfRange {
            family: "mops",
            n,
            min: MOP_MIN,
            max: usize::MAX,
        });
    }
    let mut chords = Vec::with_capacity(n - 3);
    let mut pending = vec![(0usize, n - 1)];
    while let Some((a, b)) = pending.pop() {
        if b - a < 2 {
            continue;
        }
        let j = rng.gen_range(a + 1..b);
        for (x, y) in [(a, j), (j, b)] {
            if y - x >= 2 {
                chords.push((x, y));
                pending.push((x, y));
            }
        }
    }
    // indices along 0..n-1 are already polygon labels here
    chords.sort_unstable();
    Ok(Mop::from_sorted_unchecked(n, chords))
}

/// Deletes each edge independently with probability `delete_prob`.
pub fn random_outerplanar_from_mop(m: &Mop, delete_prob: f64, seed: u64) -> Result<Graph> {
    random_outerplanar_with(m, delete_prob, &mut rng_for(seed, 0))
}

pub fn random_outerplanar_with<R: Rng>(m: &Mop, delete_prob: f64, rng: &mut R) -> Result<Graph> {
    if !(0.0..=1.0).contains(&delete_prob) {
        return Err(Error::Infeasible(format!("delete probability {delete_prob}")));
    }
    let kept: Vec<Chord> = m.edges().into_iter().filter(|_| !rng.gen_bool(delete_prob)).collect();
    Graph::from_edges(m.n(), &kept)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum Family {
    Mops,
    MopsCanonical,
    FreeTrees,
    RandomOuterplanar,
    RandomAvgDegree,
    RandomRegular,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct GenSpec {
    pub family: Family,
    pub n: usize,
    pub k: usize,
    pub seed: u64,
    pub sample_count: usize,
}

/// Sample number `index` of a random family; a pure function of
/// `(spec, index)`.
pub fn random_graph(spec: &GenSpec, index: u64) -> Result<Graph> {
    let mut rng = rng_for(spec.seed, index);
    match spec.family {
        Family::RandomAvgDegree => random_avg_degree(spec.n, spec.k, &mut rng),
        Family::RandomRegular => random_regular(spec.n, spec.k, &mut rng),
        Family::RandomOuterplanar => {
            let m = random_mop(spec.n, &mut rng)?;
            random_outerplanar_with(&m, 0.3, &mut rng)
        }
        f => Err(Error::Infeasible(format!("{f:?} is not a random family"))),
    }
}

/// Between half the budget and the full budget `floor(k n / 2)` of edges,
/// placed uniformly. Average degree is at most `k`.
pub fn random_avg_degree<R: Rng>(n: usize, k: usize, rng: &mut R) -> Result<Graph> {
    if n == 0 {
        return Err(Error::Infeasible("no vertices".into()));
    }
    let pairs: Vec<Chord> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let budget = (k * n / 2).min(pairs.len());
    let m = rng.gen_range(budget.div_ceil(2)..=budget);
    let mut chosen: Vec<Chord> = sample(rng, pairs.len(), m).into_iter().map(|i| pairs[i]).collect();
    chosen.sort_unstable();
    Graph::from_edges(n, &chosen)
}

const PAIRING_ATTEMPTS: usize = 100_000;

/// Simple k-regular graph from the pairing model, rejecting loops and
/// repeated edges.
pub fn random_regular<R: Rng>(n: usize, k: usize, rng: &mut R) -> Result<Graph> {
    if (k * n) % 2 == 1 || (k >= n && k > 0) || n == 0 {
        return Err(Error::Infeasible(format!(
            "no simple {k}-regular graph on {n} vertices"
        )));
    }
    let mut points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, k)).collect();
    'attempt: for _ in 0..PAIRING_ATTEMPTS {
        points.shuffle(rng);
        let mut edges: Vec<Chord> = points.chunks(2).map(|p| (p[0].min(p[1]), p[0].max(p[1]))).collect();
        edges.sort_unstable();
        for w in edges.windows(2) {
            if w[0] == w[1] {
                continue 'attempt;
            }
        }
        if edges.iter().any(|&(a, b)| a == b) {
            continue;
        }
        return Graph::from_edges(n, &edges);
    }
    Err(Error::Infeasible(format!("pairing model gave up on k={k}, n={n}")))
}
