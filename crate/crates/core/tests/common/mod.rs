//! Reference values computed without the library's algorithms.
#![allow(dead_code)]

use std::collections::BTreeSet;

use opcount::Mop;

/// C(2m, m) / (m + 1).
pub fn catalan_binomial(m: u64) -> u128 {
    let mut c: u128 = 1;
    for i in 0..m as u128 {
        c = c * (2 * m as u128 - i) / (i + 1);
    }
    c / (m as u128 + 1)
}

/// Number of dihedral classes among the given triangulations of the n-gon.
pub fn dihedral_classes(n: usize, mops: &[Mop]) -> usize {
    let key = |m: &Mop| -> Vec<(usize, usize)> {
        let mut best: Option<Vec<(usize, usize)>> = None;
        for r in 0..n {
            for flip in [false, true] {
                let map = |x: usize| if flip { (n - x + r) % n } else { (x + r) % n };
                let mut cs: Vec<(usize, usize)> = m
                    .chords()
                    .iter()
                    .map(|&(a, b)| (map(a).min(map(b)), map(a).max(map(b))))
                    .collect();
                cs.sort_unstable();
                if best.as_ref().is_none_or(|b| cs < *b) {
                    best = Some(cs);
                }
            }
        }
        best.unwrap_or_default()
    };
    mops.iter().map(key).collect::<BTreeSet<_>>().len()
}

fn ahu(adj: &[Vec<usize>], v: usize, from: usize) -> String {
    let mut kids: Vec<String> = adj[v].iter().filter(|&&w| w != from).map(|&w| ahu(adj, w, v)).collect();
    kids.sort();
    format!("({})", kids.concat())
}

fn centers(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    let mut left = n;
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &w in &adj[v] {
                deg[w] -= 1;
                if deg[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer
}

/// Canonical string of an unlabeled tree: least AHU code over its centers.
pub fn tree_code(n: usize, edges: &[(usize, usize)]) -> String {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    centers(&adj)
        .into_iter()
        .map(|c| ahu(&adj, c, usize::MAX))
        .min()
        .unwrap_or_default()
}

/// Free trees on n vertices by brute force: every parent array with
/// `parent[i] < i` (every shape occurs), bucketed by canonical code.
pub fn free_tree_count(n: usize) -> usize {
    if n <= 1 {
        return n;
    }
    let mut seen = BTreeSet::new();
    let mut parent = vec![0usize; n];
    loop {
        let edges: Vec<(usize, usize)> = (1..n).map(|i| (parent[i], i)).collect();
        seen.insert(tree_code(n, &edges));
        let mut i = n - 1;
        loop {
            if i == 0 {
                return seen.len();
            }
            if parent[i] + 1 < i {
                parent[i] += 1;
                break;
            }
            parent[i] = 0;
            i -= 1;
        }
    }
}

/// Independent sets and k-dominating sets by subset scan over an edge list.
pub fn brute_counts(n: usize, edges: &[(usize, usize)], k: usize) -> (u64, u64) {
    let mut nb = vec![0u64; n];
    for &(a, b) in edges {
        nb[a] |= 1 << b;
        nb[b] |= 1 << a;
    }
    let (mut is, mut ds) = (0, 0);
    for s in 0u64..1 << n {
        if (0..n).all(|v| s >> v & 1 == 0 || nb[v] & s == 0) {
            is += 1;
        }
        if (0..n).all(|v| s >> v & 1 == 1 || (nb[v] & s).count_ones() as usize >= k) {
            ds += 1;
        }
    }
    (is, ds)
}

/// Lucas numbers L_3.. by the recurrence L_n = L_{n-1} + L_{n-2}.
pub fn lucas_from_3(count: usize) -> Vec<u64> {
    let (mut a, mut b) = (1u64, 3u64);
    let mut out = Vec::new();
    while out.len() < count {
        (a, b) = (b, a + b);
        out.push(b);
    }
    out
}

#[test]
fn oracle_self_checks() {
    assert_eq!(
        (3..=10).map(|m| catalan_binomial(m - 2)).collect::<Vec<_>>(),
        [1, 2, 5, 14, 42, 132, 429, 1430]
    );
    assert_eq!(
        (1..=8).map(free_tree_count).collect::<Vec<_>>(),
        [1, 1, 1, 2, 3, 6, 11, 23]
    );
    assert_eq!(lucas_from_3(4), [4, 7, 11, 18]);
    assert_eq!(brute_counts(3, &[(0, 1), (1, 2), (0, 2)], 2), (4, 4));
}
