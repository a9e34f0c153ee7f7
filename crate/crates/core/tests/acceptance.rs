//! The ten acceptance criteria, one line each.
//!
//! Built with `harness = false` so the lines always print. The process
//! fails on any unexpected FAIL. Criterion 2 has a known failure: the
//! tree recurrence `d2(T) <= d2(T2) + d2(T3)` is false for the stated
//! subtrees (the double star S(2,2) is the smallest case). It is reported
//! as FAIL and only tolerated while the theorem itself and the other
//! recurrence hold and every violation is of that one relation.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use opcount::dp::count_on_cycle;
use opcount::enumerate::{random_graph, Family, GenSpec};
use opcount::verify::{
    audit_gadgets, check_decomposition_identities, check_lemma1, check_theorem1, check_theorem2, scan_conjecture,
    RunOptions, AUDIT_SEED,
};
use opcount::{
    count_is_fast, count_kds_fast, enumerate_free_trees, enumerate_mops, enumerate_mops_canonical, Graph, Mode, Oracle,
};

type Criterion = (&'static str, fn() -> Outcome);

const D2_RECURRENCE: &str = "d2(T) <= d2(T2) + d2(T3)";

struct Outcome {
    pass: bool,
    detail: String,
    /// Set when a failure is understood and documented.
    known: Option<String>,
}

fn pass(detail: String) -> Outcome {
    Outcome {
        pass: true,
        detail,
        known: None,
    }
}

fn check(ok: bool, detail: String) -> Outcome {
    Outcome {
        pass: ok,
        detail,
        known: None,
    }
}

fn opts() -> RunOptions {
    RunOptions::default()
}

fn c1() -> Outcome {
    let r = check_theorem1(12, 1, &opts()).unwrap();
    let classes = r.count("canonicalMops");
    check(
        r.pass && classes == 1092 && r.count("canonicalMops.n12") == 733 && r.critical_candidates.is_empty(),
        format!(
            "{classes} canonical triangulations n<=12, {} spot checks, {} violations",
            r.count("spotChecks"),
            r.violations.len()
        ),
    )
}

fn c2() -> Outcome {
    let r = check_theorem2(14, &opts()).unwrap();
    let detail = format!(
        "{} trees ({} at n=14), theorem failures {}, i-recurrence failures {}, d2-recurrence failures {} of {}",
        r.count("freeTrees"),
        r.count("freeTrees.n14"),
        r.count("theoremFailures"),
        r.count("recurrenceIFailures"),
        r.count("recurrenceD2Failures"),
        r.count("recurrenceChecks"),
    );
    let counts_ok = r.count("freeTrees.n14") == 3159 && r.count("freeTrees") == 5447;
    if r.pass {
        return check(counts_ok, detail);
    }
    let understood = counts_ok
        && r.count("theoremFailures") == 0
        && r.count("recurrenceIFailures") == 0
        && r.violations.iter().all(|v| v.relation == D2_RECURRENCE)
        && r.violations.iter().any(|v| v.witness.graph6 == "Eia?");
    Outcome {
        pass: false,
        detail,
        known: understood.then(|| "d2 recurrence is false for the stated T3; i(T) > d2(T) holds on every tree".into()),
    }
}

fn c3() -> Outcome {
    let o = Oracle::default();
    let mut mops = 0;
    for n in 3..=10 {
        for m in enumerate_mops(n).unwrap() {
            let g = m.graph().unwrap();
            assert_eq!(count_is_fast(&m), o.count_is(&g).unwrap(), "{m}");
            for k in 1..=5 {
                assert_eq!(count_kds_fast(&m, k).unwrap(), o.count_kds(&g, k).unwrap(), "{m} k={k}");
            }
            mops += 1;
        }
    }
    pass(format!("{mops} labeled triangulations, k=1..5, all equal"))
}

fn c4() -> Outcome {
    let mut ok = true;
    let mut labeled = Vec::new();
    for n in 4..=10 {
        let all: Vec<_> = enumerate_mops(n).unwrap().collect();
        let distinct: BTreeSet<String> = all.iter().map(|m| m.to_string()).collect();
        ok &= all.len() as u128 == common::catalan_binomial(n as u64 - 2) && distinct.len() == all.len();
        labeled.push(all.len());
    }
    ok &= labeled == [2, 5, 14, 42, 132, 429, 1430];
    let mut classes = Vec::new();
    for n in 4..=6 {
        let all: Vec<_> = enumerate_mops(n).unwrap().collect();
        let c = enumerate_mops_canonical(n).unwrap().count();
        ok &= c == common::dihedral_classes(n, &all);
        classes.push(c);
    }
    ok &= classes == [1, 1, 3];
    let trees: Vec<usize> = (1..=10).map(|n| enumerate_free_trees(n).unwrap().count()).collect();
    let brute: Vec<usize> = (1..=10).map(common::free_tree_count).collect();
    ok &= trees == brute && trees == [1, 1, 1, 2, 3, 6, 11, 23, 47, 106];
    check(ok, format!("labeled {labeled:?}, classes {classes:?}, trees {trees:?}"))
}

fn c5() -> Outcome {
    let r = check_lemma1(10_000, 42, &opts()).unwrap();
    check(
        r.pass && r.count("samples") == 10_000,
        format!(
            "{} sides, statement 1 {} checks, statement 2 {} applicable, statement 3 {} applicable, {} violations",
            r.count("sides"),
            r.count("statement1Checks"),
            r.count("statement2Checked"),
            r.count("statement3Checked"),
            r.violations.len()
        ),
    )
}

fn c6() -> Outcome {
    let r = check_decomposition_identities(10_000, 42, &opts()).unwrap();
    check(
        r.pass && r.count("samples") == 10_000,
        format!("{} partitions, {} violations", r.count("samples"), r.violations.len()),
    )
}

fn c7() -> Outcome {
    let r = audit_gadgets(AUDIT_SEED, &opts()).unwrap();
    let mismatches: Vec<String> = r
        .findings
        .iter()
        .filter(|f| f.kind == "iCoefficients" && f.matches == Some(false))
        .map(|f| format!("{} printed {} computed {}", f.id, f.printed, f.computed))
        .collect();
    for m in &mismatches {
        println!("    coefficient mismatch: {m}");
    }
    let exact = r.count("exactGadgets");
    check(
        r.pass && r.count("identitySamplesHeld") == r.count("gluedSamples") && exact > 0,
        format!(
            "{} gadgets ({exact} exact), {} identity samples held, {} findings, {} coefficient mismatches",
            r.count("gadgets"),
            r.count("identitySamplesHeld"),
            r.findings.len(),
            mismatches.len()
        ),
    )
}

fn c8() -> Outcome {
    let o = Oracle::default();
    let lucas = common::lucas_from_3(10);
    let mut got = Vec::new();
    for n in 3..=12 {
        let c = Graph::cycle(n).unwrap();
        let i = o.count_is(&c).unwrap();
        assert_eq!(i, o.count_kds(&c, 2).unwrap());
        assert_eq!(i, count_on_cycle(n, Mode::Is).unwrap());
        assert_eq!(i, count_on_cycle(n, Mode::Kds(2)).unwrap());
        got.push(u64::try_from(i).unwrap());
    }
    let mut cubic = 0;
    for idx in 0..100u64 {
        let spec = GenSpec {
            family: Family::RandomRegular,
            n: 4 + 2 * (idx as usize % 7),
            k: 3,
            seed: 8,
            sample_count: 100,
        };
        let g = random_graph(&spec, idx).unwrap();
        assert!(g.is_regular(3) && g.n() <= 16);
        assert_eq!(
            o.count_is(&g).unwrap(),
            o.count_kds(&g, 3).unwrap(),
            "{}",
            g.to_graph6().unwrap()
        );
        cubic += 1;
    }
    check(
        got == lucas,
        format!("cycles {got:?}, {cubic} cubic graphs with i = d3"),
    )
}

fn c9() -> Outcome {
    let r = scan_conjecture(4, 14, 1000, 9, &opts()).unwrap();
    check(
        r.pass && r.count("avgDegreeSamples") == 1000,
        format!(
            "{} samples, {} violations",
            r.count("avgDegreeSamples"),
            r.violations.len()
        ),
    )
}

fn c10() -> Outcome {
    let same = |a: String, b: String, what: &str| assert_eq!(a, b, "{what} differs");
    let w = |n| RunOptions::with_workers(n);
    same(
        check_lemma1(500, 7, &w(1)).unwrap().stable_json(),
        check_lemma1(500, 7, &w(4)).unwrap().stable_json(),
        "lemma1",
    );
    same(
        check_decomposition_identities(500, 7, &w(3)).unwrap().stable_json(),
        check_decomposition_identities(500, 7, &w(3)).unwrap().stable_json(),
        "identities",
    );
    same(
        scan_conjecture(4, 12, 300, 5, &w(1)).unwrap().stable_json(),
        scan_conjecture(4, 12, 300, 5, &w(5)).unwrap().stable_json(),
        "scan",
    );
    same(
        check_theorem1(10, 3, &w(1)).unwrap().stable_json(),
        check_theorem1(10, 3, &w(6)).unwrap().stable_json(),
        "theorem1",
    );
    same(
        check_theorem2(10, &w(1)).unwrap().stable_json(),
        check_theorem2(10, &w(4)).unwrap().stable_json(),
        "theorem2",
    );
    same(
        audit_gadgets(11, &w(1)).unwrap().stable_json(),
        audit_gadgets(11, &w(4)).unwrap().stable_json(),
        "gadgets",
    );
    let a = check_lemma1(200, 1, &w(2)).unwrap().stable_json();
    let b = check_lemma1(200, 2, &w(2)).unwrap().stable_json();
    check(
        a != b,
        "same seed byte-identical across 1..6 workers; different seeds differ".into(),
    )
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("theorem 1 sweep, n <= 12", c1),
        ("theorem 2 sweep, n <= 14", c2),
        ("dp equals oracle, n <= 10, k = 1..5", c3),
        ("enumeration counts", c4),
        ("lemma 1, 10^4 partitions", c5),
        ("decomposition identities, 10^4 partitions", c6),
        ("gadget audit", c7),
        ("k-regular equality", c8),
        ("conjecture scan smoke test", c9),
        ("reproducibility", c10),
    ];
    let mut unexpected = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let out = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            check(false, format!("panicked: {msg}"))
        });
        let verdict = match (&out.pass, &out.known) {
            (true, _) => "PASS".to_string(),
            (false, Some(why)) => format!("FAIL (known: {why})"),
            (false, None) => {
                unexpected += 1;
                "FAIL".to_string()
            }
        };
        println!(
            "criterion {:>2} {verdict} {name}: {} [{:.1}s]",
            i + 1,
            out.detail,
            t.elapsed().as_secs_f64()
        );
    }
    if unexpected > 0 {
        eprintln!("{unexpected} criteria failed unexpectedly");
        std::process::exit(1);
    }
}
