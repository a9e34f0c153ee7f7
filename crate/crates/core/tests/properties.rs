mod common;

use std::collections::BTreeSet;

use opcount::dp::{count_kds_fast_with_cap, decomposition_of_mop};
use opcount::enumerate::{random_graph, Family, GenSpec};
use opcount::mop::glue;
use opcount::oracle::is_k_dominating;
use opcount::profile::{convolve, side_dom_profile, side_is_profile};
use opcount::verify::{check_theorem1, RunOptions};
use opcount::{count_is_fast, count_kds_fast, random_mop, rng_for, Count, Graph, Mop, Oracle, VertexSet};
use proptest::prelude::*;

fn mop_of(n: usize, seed: u64) -> Mop {
    random_mop(n, &mut rng_for(seed, 0)).unwrap()
}

fn graph_of(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut i = 0;
    for a in 0..n {
        for b in a + 1..n {
            if bits[i % bits.len()] {
                edges.push((a, b));
            }
            i += 1;
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

fn small_graph() -> impl Strategy<Value = Graph> {
    (1usize..=10, prop::collection::vec(any::<bool>(), 1..64)).prop_map(|(n, bits)| graph_of(n, &bits))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn graph6_round_trip(n in 0usize..=62, bits in prop::collection::vec(any::<bool>(), 1..200)) {
        let g = graph_of(n, &bits);
        let text = g.to_graph6().unwrap();
        prop_assert_eq!(Graph::from_graph6(&text).unwrap(), g);
    }

    #[test]
    fn mutations_keep_adjacency_sound(g in small_graph(), pick in any::<prop::sample::Index>()) {
        let non = g.non_edges();
        if !non.is_empty() {
            let (u, v) = non[pick.index(non.len())];
            let h = g.add_edge(u, v).unwrap();
            prop_assert!(h.is_well_formed() && h.has_edge(v, u));
            let back = h.delete_edge(v, u).unwrap();
            prop_assert!(back.is_well_formed());
            prop_assert_eq!(back, g);
        }
    }

    #[test]
    fn oracle_matches_reference(g in small_graph(), k in 1usize..=4) {
        let o = Oracle::default();
        let (is, ds) = common::brute_counts(g.n(), &g.edges(), k);
        prop_assert_eq!(o.count_is(&g).unwrap(), Count::from(is));
        prop_assert_eq!(o.count_kds(&g, k).unwrap(), Count::from(ds));
    }

    #[test]
    fn adding_an_edge(g in small_graph(), pick in any::<prop::sample::Index>(), k in 1usize..=4) {
        let non = g.non_edges();
        if !non.is_empty() {
            let (u, v) = non[pick.index(non.len())];
            let h = g.add_edge(u, v).unwrap();
            let o = Oracle::default();
            prop_assert!(o.count_kds(&g, k).unwrap() <= o.count_kds(&h, k).unwrap());
            prop_assert!(o.count_is(&h).unwrap() <= o.count_is(&g).unwrap());
        }
    }

    #[test]
    fn k_dominating_sets_are_upward_closed(g in small_graph(), set in any::<u64>(), k in 1usize..=4, x in 0usize..10) {
        let n = g.n();
        let d = set & ((1u64 << n) - 1);
        if is_k_dominating(&g, VertexSet::from(d), k) {
            prop_assert!(is_k_dominating(&g, VertexSet::from(d | 1 << (x % n)), k));
        }
    }

    #[test]
    fn triangulation_shape(n in 3usize..=20, seed in any::<u64>()) {
        let m = mop_of(n, seed);
        let g = m.graph().unwrap();
        prop_assert_eq!(g.edge_count(), 2 * n - 3);
        prop_assert!(g.degrees().iter().filter(|&&d| d == 2).count() >= 2);
        let d = m.weak_dual();
        prop_assert!(d.is_tree() && d.len() == n - 2 && d.max_degree() <= 3);
        let deg = m.degrees();
        for (f, face) in d.faces.iter().enumerate() {
            let has_ear_tip = face.iter().any(|&v| deg[v] == 2);
            prop_assert_eq!(d.degree(f) <= 1, has_ear_tip, "face {:?}", face);
        }
        prop_assert_eq!(m.to_string().parse::<Mop>().unwrap(), m.clone());
        decomposition_of_mop(&m).validate(n, &g.edges()).unwrap();
    }

    #[test]
    fn split_and_glue(n in 4usize..=14, seed in any::<u64>(), pick in any::<prop::sample::Index>()) {
        let m = mop_of(n, seed);
        let edges = m.edges();
        let (u, v) = edges[pick.index(edges.len())];
        let p = m.split_at_edge(u, v).unwrap();
        let (whole, lmap, rmap) = glue(&p.left, &p.right).unwrap();
        let mut back = vec![usize::MAX; n];
        for (i, &x) in lmap.iter().enumerate() {
            back[x] = p.left.labels[i];
        }
        for (i, &x) in rmap.iter().enumerate() {
            back[x] = p.right.labels[i];
        }
        let glued: BTreeSet<(usize, usize)> = whole
            .edges()
            .into_iter()
            .map(|(a, b)| (back[a].min(back[b]), back[a].max(back[b])))
            .collect();
        prop_assert_eq!(glued, edges.into_iter().collect::<BTreeSet<_>>());

        let o = Oracle::default();
        let (li, ri) = (side_is_profile(&o, &p.left).unwrap(), side_is_profile(&o, &p.right).unwrap());
        prop_assert_eq!(ri.weigh(&li), count_is_fast(&m));
        let (ld, rd) = (side_dom_profile(&o, &p.left, 4).unwrap(), side_dom_profile(&o, &p.right, 4).unwrap());
        prop_assert_eq!(convolve(&ld, &rd).unwrap(), count_kds_fast(&m, 4).unwrap());
    }

    #[test]
    fn some_edge_splits_into_two_real_sides(n in 4usize..=16, seed in any::<u64>()) {
        let m = mop_of(n, seed);
        let found = m.chords().iter().any(|&(u, v)| {
            let p = m.split_at_edge(u, v).unwrap();
            p.left.n() >= 3 && p.right.n() >= 3
        });
        prop_assert!(found);
    }

    #[test]
    fn dp_matches_oracle(n in 3usize..=14, seed in any::<u64>()) {
        let m = mop_of(n, seed);
        let g = m.graph().unwrap();
        let o = Oracle::default();
        prop_assert_eq!(count_is_fast(&m), o.count_is(&g).unwrap());
        for k in 1..=5 {
            prop_assert_eq!(count_kds_fast(&m, k).unwrap(), o.count_kds(&g, k).unwrap());
        }
    }

    #[test]
    fn cap_above_k_changes_nothing(n in 3usize..=30, seed in any::<u64>(), k in 2usize..=4, extra in 1usize..=3) {
        let m = mop_of(n, seed);
        prop_assert_eq!(count_kds_fast_with_cap(&m, k, k + extra).unwrap(), count_kds_fast(&m, k).unwrap());
    }

    #[test]
    fn counts_survive_relabeling(n in 3usize..=16, seed in any::<u64>()) {
        let m = mop_of(n, seed);
        let c = m.canonical();
        prop_assert!(c.is_canonical());
        prop_assert_eq!(count_is_fast(&m), count_is_fast(&c));
        prop_assert_eq!(count_kds_fast(&m, 4).unwrap(), count_kds_fast(&c, 4).unwrap());
        prop_assert_eq!((2 * n) % m.orbit_size(), 0);
    }

    #[test]
    fn generators_are_pure(seed in any::<u64>(), index in 0u64..1000, n in 4usize..=14) {
        for (family, k) in [(Family::RandomAvgDegree, 4), (Family::RandomRegular, 2), (Family::RandomOuterplanar, 0)] {
            let spec = GenSpec { family, n, k, seed, sample_count: 1 };
            prop_assert_eq!(random_graph(&spec, index).unwrap(), random_graph(&spec, index).unwrap());
        }
        prop_assert_eq!(mop_of(n, seed), mop_of(n, seed));
    }
}

#[test]
fn edgeless_graphs() {
    let o = Oracle::default();
    for n in 0..=12 {
        let g = Graph::new(n).unwrap();
        assert_eq!(o.count_is(&g).unwrap(), Count::from(1u64 << n));
        assert_eq!(o.count_kds(&g, 1).unwrap(), Count::from(1u8));
    }
}

#[test]
fn theorem1_sweeps_nest() {
    let opts = RunOptions::with_workers(2);
    let a = check_theorem1(9, 4, &opts).unwrap();
    let b = check_theorem1(10, 4, &opts).unwrap();
    for n in 3..=9 {
        let key = format!("canonicalMops.n{n:02}");
        assert_eq!(a.count(&key), b.count(&key), "{key}");
    }
    assert!(a.pass && b.pass);
}

#[test]
fn witnesses_replay() {
    let r = opcount::verify::check_theorem2(8, &RunOptions::with_workers(1)).unwrap();
    assert!(!r.violations.is_empty());
    for v in &r.violations {
        let t = v.witness.graph().unwrap();
        let i = opcount::count_on_tree(&t, opcount::Mode::Is).unwrap();
        let d2 = opcount::count_on_tree(&t, opcount::Mode::Kds(2)).unwrap();
        assert_eq!(v.values["i"], i.to_string());
        assert_eq!(v.values["d2"], d2.to_string());
        let (is, ds) = common::brute_counts(t.n(), &t.edges(), 2);
        assert_eq!(
            (v.values["i"].as_str(), v.values["d2"].as_str()),
            (is.to_string().as_str(), ds.to_string().as_str())
        );
    }
}
