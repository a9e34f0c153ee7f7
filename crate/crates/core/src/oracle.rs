//! Exhaustive counting of independent sets and k-dominating sets. This is
//! the ground truth that the dynamic programs and the lemma harnesses are
//! checked against.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::graph::{bit, full_set, members, Graph, VertexConstraint, VertexSet};

/// Exact, arbitrary-precision count.
pub type Count = BigUint;

pub const DEFAULT_CEILING: usize = 30;
pub const CEILING_ENV: &str = "OPCOUNT_ORACLE_CEILING";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Oracle {
    ceiling: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle {
            ceiling: DEFAULT_CEILING,
        }
    }
}

impl Oracle {
    pub fn with_ceiling(ceiling: usize) -> Self {
        Oracle { ceiling }
    }

    /// Default ceiling, overridden by `OPCOUNT_ORACLE_CEILING` when set.
    pub fn from_env() -> Result<Self> {
        match std::env::var(CEILING_ENV) {
            Ok(s) => s
                .trim()
                .parse()
                .map(Oracle::with_ceiling)
                .map_err(|_| Error::Parse(format!("{CEILING_ENV}={s:?}"))),
            Err(_) => Ok(Oracle::default()),
        }
    }

    pub fn ceiling(&self) -> usize {
        self.ceiling
    }

    fn admit(&self, g: &Graph) -> Result<()> {
        if g.n() > self.ceiling {
            return Err(Error::TooLarge {
                n: g.n(),
                limit: self.ceiling,
            });
        }
        Ok(())
    }

    pub fn count_is(&self, g: &Graph) -> Result<Count> {
        self.count_is_conditioned(g, &VertexConstraint::new())
    }

    pub fn count_is_conditioned(&self, g: &Graph, c: &VertexConstraint) -> Result<Count> {
        self.admit(g)?;
        let (fin, fout) = c.masks(g.n())?;
        Ok(Count::from(is_count_masked(g.adjacency(), fin, fout)))
    }

    pub fn count_kds(&self, g: &Graph, k: usize) -> Result<Count> {
        self.count_kds_conditioned(g, k, &VertexConstraint::new())
    }

    pub fn count_kds_conditioned(&self, g: &Graph, k: usize, c: &VertexConstraint) -> Result<Count> {
        if k < 1 {
            return Err(Error::BadThreshold(k));
        }
        self.admit(g)?;
        let (fin, fout) = c.masks(g.n())?;
        Ok(Count::from(kds_count_masked(g.adjacency(), k, fin, fout)))
    }
}

/// Number of independent sets containing `fin` and avoiding `fout`.
pub(crate) fn is_count_masked(adj: &[VertexSet], fin: VertexSet, fout: VertexSet) -> u128 {
    if members(fin).any(|v| adj[v] & fin != 0) {
        return 0;
    }
    let blocked = members(fin).fold(fin | fout, |acc, v| acc | adj[v]);
    let free = full_set(adj.len()) & !blocked;
    count_free(adj, free)
}

fn count_free(adj: &[VertexSet], free: VertexSet) -> u128 {
    if free == 0 {
        return 1;
    }
    let v = free.trailing_zeros() as usize;
    let rest = free & !bit(v);
    if adj[v] & rest == 0 {
        2 * count_free(adj, rest)
    } else {
        count_free(adj, rest) + count_free(adj, rest & !adj[v])
    }
}

/// Number of k-dominating sets `D` with `fin ⊆ D` and `D ∩ fout = ∅`, by
/// backtracking over vertices in label order. An excluded vertex is checked
/// as soon as its last neighbor has been decided.
pub(crate) fn kds_count_masked(adj: &[VertexSet], k: usize, fin: VertexSet, fout: VertexSet) -> u128 {
    let n = adj.len();
    if fin & fout != 0 {
        return 0;
    }
    let mut settle_at = vec![0 as VertexSet; n];
    for (w, &a) in adj.iter().enumerate() {
        let last = members(a).last().map_or(w, |x| x.max(w));
        settle_at[last] |= bit(w);
    }
    struct Ctx<'a> {
        adj: &'a [VertexSet],
        k: u32,
        fin: VertexSet,
        fout: VertexSet,
        settle_at: Vec<VertexSet>,
    }
    fn rec(c: &Ctx, i: usize, chosen: VertexSet) -> u128 {
        if i == c.adj.len() {
            return 1;
        }
        let mut total = 0;
        for take in [false, true] {
            if (take && c.fout & bit(i) != 0) || (!take && c.fin & bit(i) != 0) {
                continue;
            }
            if !take && c.adj[i].count_ones() < c.k {
                continue;
            }
            let chosen = if take { chosen | bit(i) } else { chosen };
            let ok = members(c.settle_at[i] & !chosen).all(|w| (c.adj[w] & chosen).count_ones() >= c.k);
            if ok {
                total += rec(c, i + 1, chosen);
            }
        }
        total
    }
    let ctx = Ctx {
        adj,
        k: k as u32,
        fin,
        fout,
        settle_at,
    };
    rec(&ctx, 0, 0)
}

pub fn is_independent(g: &Graph, set: VertexSet) -> bool {
    members(set).all(|v| g.neighbors(v) & set == 0)
}

pub fn is_k_dominating(g: &Graph, set: VertexSet, k: usize) -> bool {
    members(full_set(g.n()) & !set).all(|v| (g.neighbors(v) & set).count_ones() as usize >= k)
}
