//! Boundary profiles of one side of a MOP-partition.
//!
//! For a side with boundary `(u, v)`, [`IsProfile`] holds the independent set
//! counts conditioned on the boundary, and [`DomProfile`] tabulates the
//! "almost dominating" sets: every interior vertex is t-dominated inside the
//! side, and each boundary vertex is either selected or records how many
//! selected side-neighbours it has (other than the opposite boundary vertex).

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bit, members, Graph, Membership, VertexConstraint, VertexSet};
use crate::mop::{MopPartition, Side, SideSel};
use crate::oracle::{Count, Oracle};

pub const DEFAULT_THRESHOLD: usize = 4;

/// `(i00, i01, i10)`: neither boundary vertex in, only `v` in, only `u` in.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsProfile {
    pub i00: Count,
    pub i01: Count,
    pub i10: Count,
}

impl IsProfile {
    pub fn total(&self) -> Count {
        &self.i00 + &self.i01 + &self.i10
    }

    /// `c00 * i00 + c01 * i01 + c10 * i10`.
    pub fn weigh(&self, c: &IsProfile) -> Count {
        &c.i00 * &self.i00 + &c.i01 * &self.i01 + &c.i10 * &self.i10
    }

    pub fn as_u64(&self) -> Option<[u64; 3]> {
        Some([
            u64::try_from(&self.i00).ok()?,
            u64::try_from(&self.i01).ok()?,
            u64::try_from(&self.i10).ok()?,
        ])
    }

    pub fn from_u64(t: [u64; 3]) -> IsProfile {
        IsProfile {
            i00: t[0].into(),
            i01: t[1].into(),
            i10: t[2].into(),
        }
    }
}

pub fn is_profile_of(o: &Oracle, g: &Graph, u: usize, v: usize) -> Result<IsProfile> {
    use Membership::{In, Out};
    let c = |mu, mv| VertexConstraint::pair(u, mu, v, mv);
    Ok(IsProfile {
        i00: o.count_is_conditioned(g, &c(Out, Out)?)?,
        i01: o.count_is_conditioned(g, &c(Out, In)?)?,
        i10: o.count_is_conditioned(g, &c(In, Out)?)?,
    })
}

pub fn is_profile(o: &Oracle, p: &MopPartition, which: SideSel) -> Result<IsProfile> {
    side_is_profile(o, p.side(which))
}

pub fn side_is_profile(o: &Oracle, s: &Side) -> Result<IsProfile> {
    is_profile_of(o, &s.graph()?, s.boundary.0, s.boundary.1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum BoundaryState {
    In,
    /// Not selected, with this many selected side-neighbours (capped).
    Out(usize),
}

/// A term of a deficit expansion. Superscripts follow the printed convention:
/// `D01(k)` counts sets with `u` out needing `max(0, t - k)` more selected
/// neighbours and `v` in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum DTerm {
    D11,
    D10(usize),
    D01(usize),
    D00(usize, usize),
}

impl fmt::Display for DTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DTerm::D11 => write!(f, "D11"),
            DTerm::D10(k) => write!(f, "D10^{k}"),
            DTerm::D01(k) => write!(f, "D01^{k}"),
            DTerm::D00(k, l) => write!(f, "D00^{k}{l}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DomProfile {
    threshold: usize,
    /// Indexed by `state_index(u) * (t + 2) + state_index(v)`.
    table: Vec<Count>,
}

impl DomProfile {
    fn width(&self) -> usize {
        self.threshold + 2
    }

    fn index(&self, s: BoundaryState) -> usize {
        match s {
            BoundaryState::Out(c) => c.min(self.threshold),
            BoundaryState::In => self.threshold + 1,
        }
    }

    fn state(&self, i: usize) -> BoundaryState {
        if i == self.threshold + 1 {
            BoundaryState::In
        } else {
            BoundaryState::Out(i)
        }
    }

    pub fn threshold(&self) -> usize {
        self.threshold
    }

    pub fn get(&self, su: BoundaryState, sv: BoundaryState) -> &Count {
        &self.table[self.index(su) * self.width() + self.index(sv)]
    }

    /// Nonzero entries in table order.
    pub fn entries(&self) -> Vec<((BoundaryState, BoundaryState), Count)> {
        let w = self.width();
        self.table
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| ((self.state(i / w), self.state(i % w)), c.clone()))
            .collect()
    }

    fn need(&self, k: usize) -> usize {
        self.threshold.saturating_sub(k)
    }

    fn sum_out(&self, fix: impl Fn(usize) -> (BoundaryState, BoundaryState), from: usize) -> Count {
        (from..=self.threshold)
            .map(|c| self.get(fix(c).0, fix(c).1).clone())
            .sum()
    }

    pub fn d11(&self) -> Count {
        self.get(BoundaryState::In, BoundaryState::In).clone()
    }

    pub fn d01(&self, k: usize) -> Count {
        self.sum_out(|c| (BoundaryState::Out(c), BoundaryState::In), self.need(k))
    }

    pub fn d10(&self, k: usize) -> Count {
        self.sum_out(|c| (BoundaryState::In, BoundaryState::Out(c)), self.need(k))
    }

    pub fn d00(&self, k: usize, l: usize) -> Count {
        let mut total = Count::zero();
        for cu in self.need(k)..=self.threshold {
            for cv in self.need(l)..=self.threshold {
                total += self.get(BoundaryState::Out(cu), BoundaryState::Out(cv));
            }
        }
        total
    }

    pub fn term(&self, t: DTerm) -> Count {
        match t {
            DTerm::D11 => self.d11(),
            DTerm::D10(k) => self.d10(k),
            DTerm::D01(k) => self.d01(k),
            DTerm::D00(k, l) => self.d00(k, l),
        }
    }

    /// Number of t-dominating sets of the whole side graph.
    pub fn dominating_total(&self) -> Count {
        self.entries()
            .into_iter()
            .filter(|((su, sv), _)| {
                let ok = |s: &BoundaryState, other: &BoundaryState| match s {
                    BoundaryState::In => true,
                    BoundaryState::Out(c) => c + (*other == BoundaryState::In) as usize >= self.threshold,
                };
                ok(su, sv) && ok(sv, su)
            })
            .map(|(_, c)| c)
            .sum()
    }

    /// Rewrites this profile, taken as the left side, as a combination of
    /// right-side accessors. Evaluating the result on the right profile
    /// gives the same value as [`convolve`].
    pub fn expansion(&self) -> Vec<(Count, DTerm)> {
        let t = self.threshold;
        let mut terms: Vec<(Count, DTerm)> = Vec::new();
        for ((su, sv), c) in self.entries() {
            let term = match (su, sv) {
                (BoundaryState::In, BoundaryState::In) => DTerm::D11,
                (BoundaryState::In, BoundaryState::Out(cv)) => DTerm::D10((cv + 1).min(t)),
                (BoundaryState::Out(cu), BoundaryState::In) => DTerm::D01((cu + 1).min(t)),
                (BoundaryState::Out(cu), BoundaryState::Out(cv)) => DTerm::D00(cu, cv),
            };
            match terms.iter_mut().find(|(_, x)| *x == term) {
                Some((acc, _)) => *acc += c,
                None => terms.push((c, term)),
            }
        }
        terms.sort_by_key(|a| a.1);
        terms
    }
}

/// Evaluates `sum coeff * term` against a right-side profile.
pub fn evaluate(terms: &[(Count, DTerm)], right: &DomProfile) -> Count {
    terms.iter().map(|(c, t)| c * right.term(*t)).sum()
}

/// Number of t-dominating sets of the glued graph, from the two side tables.
/// Both profiles must share the boundary orientation and threshold.
pub fn convolve(left: &DomProfile, right: &DomProfile) -> Result<Count> {
    if left.threshold != right.threshold {
        return Err(Error::BadThreshold(right.threshold));
    }
    let t = left.threshold;
    let l = left.entries();
    let r = right.entries();
    let mut total = Count::zero();
    let out_ok = |a: usize, b: usize, other_in: bool| a + b + other_in as usize >= t;
    for ((lu, lv), lc) in &l {
        for ((ru, rv), rc) in &r {
            let ok = |ls: &BoundaryState, rs: &BoundaryState, other: &BoundaryState| match (ls, rs) {
                (BoundaryState::In, BoundaryState::In) => true,
                (BoundaryState::Out(a), BoundaryState::Out(b)) => out_ok(*a, *b, *other == BoundaryState::In),
                _ => false,
            };
            if ok(lu, ru, lv) && ok(lv, rv, lu) {
                total += lc * rc;
            }
        }
    }
    Ok(total)
}

/// Full deficit table of `g` with boundary `(u, v)`, where `u` and `v` are
/// adjacent. Interior vertices must be `t`-dominated.
pub fn dom_profile_of(o: &Oracle, g: &Graph, u: usize, v: usize, t: usize) -> Result<DomProfile> {
    if t < 1 {
        return Err(Error::BadThreshold(t));
    }
    if g.n() > o.ceiling() {
        return Err(Error::TooLarge {
            n: g.n(),
            limit: o.ceiling(),
        });
    }
    if u >= g.n() || v >= g.n() {
        return Err(Error::VertexOutOfRange(u.max(v), g.n()));
    }
    let mut table = vec![0u128; (t + 2) * (t + 2)];
    let adj = g.adjacency();
    let others = |x: usize, y: usize| adj[x] & !bit(y);
    let exempt = bit(u) | bit(v);
    for_each_dominating(adj, t, exempt, |set| {
        let st = |x: usize, y: usize| {
            if set & bit(x) != 0 {
                t + 1
            } else {
                ((others(x, y) & set).count_ones() as usize).min(t)
            }
        };
        table[st(u, v) * (t + 2) + st(v, u)] += 1;
    });
    Ok(DomProfile {
        threshold: t,
        table: table.into_iter().map(Count::from).collect(),
    })
}

pub fn dom_profile(o: &Oracle, p: &MopPartition, which: SideSel, t: usize) -> Result<DomProfile> {
    side_dom_profile(o, p.side(which), t)
}

pub fn side_dom_profile(o: &Oracle, s: &Side, t: usize) -> Result<DomProfile> {
    dom_profile_of(o, &s.graph()?, s.boundary.0, s.boundary.1, t)
}

/// Calls `f` on every vertex set in which each non-selected vertex outside
/// `exempt` has at least `k` selected neighbours.
pub(crate) fn for_each_dominating(adj: &[VertexSet], k: usize, exempt: VertexSet, mut f: impl FnMut(VertexSet)) {
    let n = adj.len();
    let mut settle_at = vec![0 as VertexSet; n];
    for (w, &a) in adj.iter().enumerate() {
        if exempt & bit(w) == 0 {
            let last = members(a).last().map_or(w, |x| x.max(w));
            settle_at[last] |= bit(w);
        }
    }
    fn rec(
        adj: &[VertexSet],
        k: u32,
        exempt: VertexSet,
        settle_at: &[VertexSet],
        i: usize,
        chosen: VertexSet,
        f: &mut dyn FnMut(VertexSet),
    ) {
        if i == adj.len() {
            f(chosen);
            return;
        }
        for take in [false, true] {
            if !take && exempt & bit(i) == 0 && adj[i].count_ones() < k {
                continue;
            }
            let chosen = if take { chosen | bit(i) } else { chosen };
            if members(settle_at[i] & !chosen).all(|w| (adj[w] & chosen).count_ones() >= k) {
                rec(adj, k, exempt, settle_at, i + 1, chosen, f);
            }
        }
    }
    rec(adj, k as u32, exempt, &settle_at, 0, 0, &mut f);
}
