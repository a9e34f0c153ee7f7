use std::time::Instant;

use rand::seq::SliceRandom;
use rand::Rng;

use super::{Finding, Partial, RunOptions, VerifyReport, Violation, Witness};
use crate::dp::{count_is_fast, count_kds_fast};
use crate::enumerate::{random_mop, rng_for};
use crate::error::Result;
use crate::graph::{Membership, VertexConstraint};
use crate::mop::Mop;
use crate::oracle::{Count, Oracle};
use crate::profile::{convolve, side_dom_profile, side_is_profile, DomProfile};

pub const LEMMA1_SIZES: (usize, usize) = (6, 12);
pub const IDENTITY_SIZES: (usize, usize) = (4, 14);
pub const LEMMA2_SIZES: (usize, usize) = (5, 14);
const LEMMA2_ATTEMPTS: usize = 64;

fn random_partition<R: Rng>(lo: usize, hi: usize, rng: &mut R) -> Result<(Mop, (usize, usize))> {
    let n = rng.gen_range(lo..=hi);
    let m = random_mop(n, rng)?;
    let edges = m.edges();
    let e = edges[rng.gen_range(0..edges.len())];
    Ok((m, e))
}

struct Lemma1Tally {
    literal_failures: u64,
    first_literal: Option<String>,
}

fn lemma1_side(
    part: &mut Partial,
    tally: &mut Lemma1Tally,
    p: &DomProfile,
    deg_u: usize,
    witness: &Witness,
    label: &str,
) {
    let d11 = p.d11();
    let fail = |part: &mut Partial, rel: String, vals: &[(&str, &Count)]| {
        let mut w = witness.clone();
        w.detail = Some(label.to_string());
        part.fail(Violation::new(w, &rel, vals));
    };
    for k in 0..=4 {
        let (d10, d01) = (p.d10(k), p.d01(k));
        if d11 < d10 || d11 < d01 {
            fail(
                part,
                format!("D11 >= max(D10^{k}, D01^{k})"),
                &[("D11", &d11), ("D10", &d10), ("D01", &d01)],
            );
        }
        part.add("statement1Checks", 1);
        for l in 0..=4 {
            let d00 = p.d00(k, l);
            let d10l = p.d10(l);
            if d10l.clone().min(d01.clone()) < d00 {
                fail(
                    part,
                    format!("min(D10^{l}, D01^{k}) >= D00^{k}{l}"),
                    &[("D10", &d10l), ("D01", &d01), ("D00", &d00)],
                );
            }
            part.add("statement1Checks", 1);
            if d10.clone().min(d01.clone()) < d00 {
                tally.literal_failures += 1;
                tally.first_literal.get_or_insert_with(|| {
                    format!(
                        "{} side {label} k={k} l={l}: D10^k={d10} D01^k={d01} D00^kl={d00}",
                        witness.mop.clone().unwrap_or_default()
                    )
                });
            }
            part.add("statement1LiteralChecks", 1);
        }
    }
    if deg_u >= 2 {
        for (name, three, four) in [("D10", p.d10(3), p.d10(4)), ("D01", p.d01(3), p.d01(4))] {
            if Count::from(2u32) * &three < four {
                fail(
                    part,
                    format!("2 {name}^3 >= {name}^4"),
                    &[("three", &three), ("four", &four)],
                );
            }
        }
        part.add("statement2Checked", 1);
    } else {
        part.add("statement2Vacuous", 1);
    }
    let factor = match deg_u {
        3 => Some(3u32),
        d if d >= 4 => Some(2u32),
        _ => None,
    };
    match factor {
        Some(c) => {
            let (two, three) = (p.d01(2), p.d01(3));
            if Count::from(c) * &two < three {
                fail(
                    part,
                    format!("{c} D01^2 >= D01^3 (deg u = {deg_u})"),
                    &[("two", &two), ("three", &three)],
                );
            }
            part.add("statement3Checked", 1);
        }
        None => part.add("statement3Vacuous", 1),
    }
}

/// Lemma 1 on random partitions: both sides of each split, in both
/// boundary orientations, with 4-domination profiles from the oracle.
pub fn check_lemma1(samples: u64, seed: u64, opts: &RunOptions) -> Result<VerifyReport> {
    let started = Instant::now();
    let mut report = VerifyReport::new("verify.lemma1")
        .param("samples", samples)
        .param("nMin", LEMMA1_SIZES.0)
        .param("nMax", LEMMA1_SIZES.1)
        .seeded(seed);
    let oracle = opts.oracle;
    let parts = opts.map((0..samples).collect(), |s| -> Result<(Partial, Lemma1Tally)> {
        let mut part = Partial::default();
        let mut tally = Lemma1Tally {
            literal_failures: 0,
            first_literal: None,
        };
        let mut rng = rng_for(seed, s);
        let (m, (u, v)) = random_partition(LEMMA1_SIZES.0, LEMMA1_SIZES.1, &mut rng)?;
        let split = m.split_at_edge(u, v)?;
        let witness = Witness::of_mop(&m).with_edge((u, v));
        for (name, side) in [("left", &split.left), ("right", &split.right)] {
            for (orient, s) in [("uv", side.clone()), ("vu", side.flipped())] {
                let p = side_dom_profile(&oracle, &s, 4)?;
                let deg_u = s.graph()?.degree(s.boundary.0);
                lemma1_side(&mut part, &mut tally, &p, deg_u, &witness, &format!("{name}/{orient}"));
                part.add("sides", 1);
            }
        }
        part.add("samples", 1);
        Ok((part, tally))
    })?;
    let mut literal = 0;
    let mut first = None;
    for r in parts {
        let (p, t) = r?;
        report.absorb(p);
        literal += t.literal_failures;
        if first.is_none() {
            first = t.first_literal;
        }
    }
    report.add("statement1LiteralFailures", literal);
    report.findings.push(Finding {
        id: "lemma1.statement1.literal".into(),
        kind: "readingCheck".into(),
        printed: "min(D10^k, D01^k) >= D00^kl for all k, l".into(),
        computed: format!(
            "fails on {literal} of {} (side, k, l) cases",
            report.count("statement1LiteralChecks")
        ),
        matches: Some(literal == 0),
        note: first.map(|f| format!("first failure: {f}; the checked form is min(D10^l, D01^k) >= D00^kl")),
    });
    Ok(report.finish(started))
}

/// Conditioned IS identity and the 4-domination convolution on random
/// partitions, plus how often the unconditioned `i(G_L)` convention would
/// reproduce `i(G)`.
pub fn check_decomposition_identities(samples: u64, seed: u64, opts: &RunOptions) -> Result<VerifyReport> {
    let started = Instant::now();
    let mut report = VerifyReport::new("verify.identities")
        .param("samples", samples)
        .param("nMin", IDENTITY_SIZES.0)
        .param("nMax", IDENTITY_SIZES.1)
        .seeded(seed);
    let oracle = opts.oracle;
    let parts = opts.map((0..samples).collect(), |s| -> Result<Partial> {
        let mut part = Partial::default();
        let mut rng = rng_for(seed, s);
        let (m, (u, v)) = random_partition(IDENTITY_SIZES.0, IDENTITY_SIZES.1, &mut rng)?;
        identity_sample(&oracle, &m, (u, v), &mut part)?;
        Ok(part)
    })?;
    for p in parts {
        report.absorb(p?);
    }
    let hits = report.count("unconditionedConventionHolds");
    report.findings.push(Finding {
        id: "identities.leftFactorConvention".into(),
        kind: "convention".into(),
        printed: "i(G) = i(G_L) I00 + i(G_L, v+) I01 + i(G_L, u+) I10".into(),
        computed: format!("holds on {hits} of {} samples", report.count("samples")),
        matches: Some(hits == report.count("samples")),
        note: Some("the exact identity uses i(G_L, u-, v-) as the first factor".into()),
    });
    Ok(report.finish(started))
}

pub(crate) fn identity_sample(o: &Oracle, m: &Mop, (u, v): (usize, usize), part: &mut Partial) -> Result<()> {
    let split = m.split_at_edge(u, v)?;
    let (l, r) = (&split.left, &split.right);
    let i = count_is_fast(m);
    let d4 = count_kds_fast(m, 4)?;
    let (li, ri) = (side_is_profile(o, l)?, side_is_profile(o, r)?);
    let w = || Witness::of_mop(m).with_edge((u, v));
    let via = ri.weigh(&li);
    if via != i {
        part.fail(Violation::new(
            w(),
            "i(G) = sum i(G_L, ..) I..",
            &[("i", &i), ("identity", &via)],
        ));
    }
    let (ld, rd) = (side_dom_profile(o, l, 4)?, side_dom_profile(o, r, 4)?);
    let conv = convolve(&ld, &rd)?;
    if conv != d4 {
        part.fail(Violation::new(
            w(),
            "d4(G) = convolution of side profiles",
            &[("d4", &d4), ("convolution", &conv)],
        ));
    }
    let unconditioned = o.count_is(&l.graph()?)?;
    let printed = &unconditioned * &ri.i00 + &li.i01 * &ri.i01 + &li.i10 * &ri.i10;
    if printed == i {
        part.add("unconditionedConventionHolds", 1);
    }
    part.add("samples", 1);
    Ok(())
}

/// Lemma 2 surgery on random triangulations with an edge `uv`,
/// `deg(u) = 2`, `deg(v) = 3`, `a` the common neighbor.
pub fn check_lemma2_surgery(samples: u64, seed: u64, opts: &RunOptions) -> Result<VerifyReport> {
    let started = Instant::now();
    let mut report = VerifyReport::new("verify.lemma2")
        .param("samples", samples)
        .param("nMin", LEMMA2_SIZES.0)
        .param("nMax", LEMMA2_SIZES.1)
        .seeded(seed);
    let oracle = opts.oracle;
    let parts = opts.map((0..samples).collect(), |s| -> Result<Partial> {
        let mut part = Partial::default();
        let mut rng = rng_for(seed, s);
        for _ in 0..LEMMA2_ATTEMPTS {
            let n = rng.gen_range(LEMMA2_SIZES.0..=LEMMA2_SIZES.1);
            let m = random_mop(n, &mut rng)?;
            let deg = m.degrees();
            let adj = m.adjacency_lists();
            let cands: Vec<(usize, usize)> = (0..n)
                .filter(|&u| deg[u] == 2)
                .flat_map(|u| adj[u].iter().map(move |&v| (u, v)))
                .filter(|&(_, v)| deg[v] == 3)
                .collect();
            part.add("attempts", 1);
            let Some(&(u, v)) = cands.choose(&mut rng) else {
                continue;
            };
            let a = *adj[u].iter().find(|&&x| x != v).expect("degree two");
            lemma2_instance(&oracle, &m, u, v, a, &mut part)?;
            break;
        }
        Ok(part)
    })?;
    for p in parts {
        report.absorb(p?);
    }
    Ok(report.finish(started))
}

pub(crate) fn lemma2_instance(o: &Oracle, m: &Mop, u: usize, v: usize, a: usize, part: &mut Partial) -> Result<()> {
    let g = m.graph()?;
    let (g1, _) = g.without(&[u]);
    let (g3, _) = g.without(&[u, a, v]);
    let i = o.count_is(&g)?;
    let (i1, i3) = (o.count_is(&g1)?, o.count_is(&g3)?);
    let out = o.count_is_conditioned(&g, &VertexConstraint::new().with(u, Membership::Out)?)?;
    let inn = o.count_is_conditioned(&g, &VertexConstraint::forced_in(u))?;
    let d = o.count_kds(&g, 4)?;
    let (d1, d3) = (o.count_kds(&g1, 4)?, o.count_kds(&g3, 4)?);
    let w = || Witness::of_mop(m).with_edge((u, v));
    let vals = [
        ("i", &i),
        ("iG1", &i1),
        ("iG3", &i3),
        ("d4", &d),
        ("d4G1", &d1),
        ("d4G3", &d3),
    ];
    if &out + &inn != i || out != i1 || inn != i3 {
        part.fail(Violation::new(w(), "i(G) = i(G,u-) + i(G,u+) = i(G1) + i(G3)", &vals));
    }
    if d > &d1 + &d3 {
        part.fail(Violation::new(w(), "d4(G) <= d4(G1) + d4(G3)", &vals));
    }
    part.add("instances", 1);
    Ok(())
}
