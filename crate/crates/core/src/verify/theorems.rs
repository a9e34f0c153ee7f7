use std::time::Instant;

use rand::Rng;

use super::{CriticalCandidate, Partial, RunOptions, VerifyReport, Violation, Witness};
use crate::dp::{count_is_fast, count_kds_fast, count_on_tree, Mode};
use crate::enumerate::{enumerate_free_trees, random_mop, random_outerplanar_with, rng_for, MopIter};
use crate::error::{Error, Result};
use crate::graph::{members, Graph};
use crate::mop::Mop;

pub const THEOREM1_MAX: usize = 16;
pub const THEOREM2_MAX: usize = 16;
pub const SPOT_CHECKS: u64 = 200;
pub const SPOT_DELETE_PROB: f64 = 0.3;
const CROSS_CHECK_EVERY: u64 = 1000;

fn out_of_range(family: &'static str, n: usize, min: usize, max: usize) -> Error {
    Error::OutOfRange { family, n, min, max }
}

/// `i(G) > d4(G)` for every canonical triangulation with `3 <= n <= n_max`,
/// by DP, with every 1000th one per shard recounted by the oracle. Then
/// `SPOT_CHECKS` random edge-deleted subgraphs are checked by the oracle.
pub fn check_theorem1(n_max: usize, seed: u64, opts: &RunOptions) -> Result<VerifyReport> {
    if !(3..=THEOREM1_MAX).contains(&n_max) {
        return Err(out_of_range("theorem1", n_max, 3, THEOREM1_MAX));
    }
    let started = Instant::now();
    let mut report = VerifyReport::new("verify.theorem1")
        .param("nMax", n_max)
        .param("spotChecks", SPOT_CHECKS)
        .param("spotDeleteProb", SPOT_DELETE_PROB)
        .param("crossCheckEvery", CROSS_CHECK_EVERY)
        .seeded(seed);
    let shards: Vec<(usize, usize)> = (3..=n_max)
        .flat_map(|n| (0..MopIter::shard_count(n)).map(move |s| (n, s)))
        .collect();
    let oracle = opts.oracle;
    let parts = opts.map(shards, |(n, s)| -> Result<Partial> {
        let mut part = Partial::default();
        let key = format!("canonicalMops.n{n:02}");
        let mut idx = 0u64;
        for m in MopIter::shard(n, s)?.filter(Mop::is_canonical) {
            let i = count_is_fast(&m);
            let d4 = count_kds_fast(&m, 4)?;
            if idx.is_multiple_of(CROSS_CHECK_EVERY) && n <= oracle.ceiling() {
                let g = m.graph()?;
                let (oi, od) = (oracle.count_is(&g)?, oracle.count_kds(&g, 4)?);
                part.add("oracleCrossChecks", 1);
                if oi != i || od != d4 {
                    part.fail(Violation::new(
                        Witness::of_mop(&m),
                        "dp counts equal oracle counts",
                        &[("iDp", &i), ("iOracle", &oi), ("d4Dp", &d4), ("d4Oracle", &od)],
                    ));
                }
            }
            if i <= d4 {
                part.critical.push(CriticalCandidate::new(&m, &i, &d4));
                part.fail(Violation::new(
                    Witness::of_mop(&m),
                    "i(G) > d4(G)",
                    &[("i", &i), ("d4", &d4)],
                ));
            }
            idx += 1;
        }
        part.add(&key, idx);
        part.add("canonicalMops", idx);
        log::info!("theorem1: n={n} shard {s} done, {idx} canonical");
        Ok(part)
    })?;
    for p in parts {
        report.absorb(p?);
    }

    let lo = 3.max(n_max.min(4));
    let spots = opts.map((0..SPOT_CHECKS).collect(), |s| -> Result<Partial> {
        let mut part = Partial::default();
        let mut rng = rng_for(seed, s);
        let n = rng.gen_range(lo..=n_max);
        let m = random_mop(n, &mut rng)?;
        let g = m.graph()?;
        let g0 = random_outerplanar_with(&m, SPOT_DELETE_PROB, &mut rng)?;
        let deleted = g.edge_count() - g0.edge_count();
        let (i, d4) = (oracle.count_is(&g)?, oracle.count_kds(&g, 4)?);
        let (i0, d40) = (oracle.count_is(&g0)?, oracle.count_kds(&g0, 4)?);
        let w = || Witness {
            mop: Some(m.to_string()),
            ..Witness::of_graph(&g0)
        };
        let vals = [("i0", &i0), ("d4_0", &d40), ("i", &i), ("d4", &d4)];
        if i0 <= d40 {
            part.fail(Violation::new(w(), "i(G0) > d4(G0)", &vals));
        }
        if i0 < i || (deleted > 0 && i0 == i) {
            part.fail(Violation::new(
                w(),
                "i(G0) >= i(G), strict when an edge was deleted",
                &vals,
            ));
        }
        if d40 > d4 {
            part.fail(Violation::new(w(), "d4(G0) <= d4(G)", &vals));
        }
        part.add("spotChecks", 1);
        part.add("spotDeletedEdges", deleted as u64);
        Ok(part)
    })?;
    for p in spots {
        report.absorb(p?);
    }
    Ok(report.finish(started))
}

/// A longest path, from one leaf to another.
pub(crate) fn diametral_path(t: &Graph) -> Vec<usize> {
    let bfs = |src: usize| {
        let mut up = vec![usize::MAX; t.n()];
        up[src] = src;
        let mut order = vec![src];
        let mut i = 0;
        while i < order.len() {
            let v = order[i];
            for w in members(t.neighbors(v)) {
                if up[w] == usize::MAX {
                    up[w] = v;
                    order.push(w);
                }
            }
            i += 1;
        }
        (*order.last().unwrap(), up)
    };
    let (a, _) = bfs(0);
    let (b, up) = bfs(a);
    let mut path = vec![b];
    while *path.last().unwrap() != a {
        path.push(up[*path.last().unwrap()]);
    }
    path
}

/// The two subtrees of the recurrence along a diametral path `x1 x2 x3 x4 ...`:
/// `T2` drops every neighbor of `x2` except `x3`; `T3` keeps `x3` and the
/// component of `T - x3` holding `x4`.
pub(crate) fn recurrence_subtrees(t: &Graph, path: &[usize]) -> (Graph, Graph) {
    let (x2, x3, x4) = (path[1], path[2], path[3]);
    let drop: Vec<usize> = members(t.neighbors(x2)).filter(|&w| w != x3).collect();
    let (t2, _) = t.without(&drop);
    let mut keep = vec![x3, x4];
    let mut i = 1;
    while i < keep.len() {
        let v = keep[i];
        for w in members(t.neighbors(v)) {
            if !keep.contains(&w) {
                keep.push(w);
            }
        }
        i += 1;
    }
    keep.sort_unstable();
    let (t3, _) = t.induced_subgraph(&keep);
    (t2, t3)
}

/// `i(T) > d2(T)` for every free tree with `1 <= n <= n_max`, and on trees
/// of diameter at least 3 the two recurrence inequalities.
pub fn check_theorem2(n_max: usize, opts: &RunOptions) -> Result<VerifyReport> {
    if !(1..=THEOREM2_MAX).contains(&n_max) {
        return Err(out_of_range("theorem2", n_max, 1, THEOREM2_MAX));
    }
    let started = Instant::now();
    let mut report = VerifyReport::new("verify.theorem2").param("nMax", n_max);
    let parts = opts.map((1..=n_max).collect(), |n| -> Result<Partial> {
        let mut part = Partial::default();
        let mut trees = 0u64;
        for t in enumerate_free_trees(n)? {
            trees += 1;
            let i = count_on_tree(&t, Mode::Is)?;
            let d2 = count_on_tree(&t, Mode::Kds(2))?;
            if i <= d2 {
                part.add("theoremFailures", 1);
                part.fail(Violation::new(
                    Witness::of_graph(&t),
                    "i(T) > d2(T)",
                    &[("i", &i), ("d2", &d2)],
                ));
            }
            let path = diametral_path(&t);
            if path.len() < 4 {
                continue;
            }
            let (t2, t3) = recurrence_subtrees(&t, &path);
            let (i2, i3) = (count_on_tree(&t2, Mode::Is)?, count_on_tree(&t3, Mode::Is)?);
            let (d22, d23) = (count_on_tree(&t2, Mode::Kds(2))?, count_on_tree(&t3, Mode::Kds(2))?);
            let vals = [
                ("i", &i),
                ("d2", &d2),
                ("iT2", &i2),
                ("iT3", &i3),
                ("d2T2", &d22),
                ("d2T3", &d23),
            ];
            if d2 > &d22 + &d23 {
                part.add("recurrenceD2Failures", 1);
                part.fail(Violation::new(Witness::of_graph(&t), "d2(T) <= d2(T2) + d2(T3)", &vals));
            }
            if i < &i2 + &i3 {
                part.add("recurrenceIFailures", 1);
                part.fail(Violation::new(Witness::of_graph(&t), "i(T) >= i(T2) + i(T3)", &vals));
            }
            part.add("recurrenceChecks", 1);
        }
        part.add(&format!("freeTrees.n{n:02}"), trees);
        part.add("freeTrees", trees);
        log::info!("theorem2: n={n} done, {trees} trees");
        Ok(part)
    })?;
    for p in parts {
        report.absorb(p?);
    }
    Ok(report.finish(started))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiny_sweeps_pass() {
        let opts = RunOptions::with_workers(2);
        let r = check_theorem1(6, 1, &opts).unwrap();
        assert!(r.pass, "{:?}", &r.violations[..r.violations.len().min(3)]);
        assert_eq!(r.count("canonicalMops"), 1 + 1 + 1 + 3);
        assert_eq!(r.count("spotChecks"), SPOT_CHECKS);
        assert!(r.critical_candidates.is_empty());
        let r = check_theorem2(5, &opts).unwrap();
        assert!(r.pass, "{:?}", r.violations);
        assert_eq!(r.count("freeTrees"), 1 + 1 + 1 + 2 + 3);
        assert!(check_theorem1(2, 0, &opts).is_err());
        assert!(check_theorem2(17, &opts).is_err());
    }

    #[test]
    fn double_star_breaks_d2_recurrence() {
        // S(2,2): d2 = 4 but T2 is a claw (2) and T3 a single edge (1)
        let r = check_theorem2(6, &RunOptions::with_workers(1)).unwrap();
        assert_eq!(r.count("theoremFailures"), 0);
        assert_eq!(r.count("recurrenceIFailures"), 0);
        assert_eq!(r.violations.len(), 1);
        let v = &r.violations[0];
        assert_eq!(v.witness.graph6, "Eia?");
        assert_eq!(
            (
                v.values["d2"].as_str(),
                v.values["d2T2"].as_str(),
                v.values["d2T3"].as_str()
            ),
            ("4", "2", "1")
        );
    }

    #[test]
    fn recurrence_pieces() {
        // spider: path 0-1-2-3-4 with an extra leaf 5 on 1
        let t = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (1, 5)]).unwrap();
        let path = diametral_path(&t);
        assert_eq!(path, vec![5, 1, 2, 3, 4]);
        let (t2, t3) = recurrence_subtrees(&t, &path);
        // T2 = 1-2-3-4, T3 = 2-3-4
        assert_eq!((t2.n(), t2.edge_count()), (4, 3));
        assert_eq!((t3.n(), t3.edge_count()), (3, 2));
    }
}
