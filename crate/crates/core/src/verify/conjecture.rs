use std::time::Instant;

use super::{Finding, Partial, RunOptions, VerifyReport, Violation, Witness};
use crate::enumerate::{random_graph, Family, GenSpec};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Regular samples use streams from here on, so they never share a stream
/// with the average-degree samples.
const REGULAR_STREAM_BASE: u64 = 1 << 32;
const EQUALITY_WITNESS_CAP: usize = 20;

fn regular_degree(g: &Graph) -> Option<usize> {
    let d = g.degrees();
    d.first().copied().filter(|&k| d.iter().all(|&x| x == k))
}

/// `i(G) >= dk(G)` on random graphs of average degree at most `k`, and
/// `i(G) = dk(G)` on random k-regular graphs. Stops at the first violation
/// in sample order. Equality on a graph that is not k-regular is logged
/// as a finding.
pub fn scan_conjecture(k: usize, n: usize, samples: u64, seed: u64, opts: &RunOptions) -> Result<VerifyReport> {
    if k < 1 {
        return Err(Error::BadThreshold(k));
    }
    let oracle = opts.oracle;
    if n == 0 || n > oracle.ceiling() {
        return Err(Error::OutOfRange {
            family: "conjecture",
            n,
            min: 1,
            max: oracle.ceiling(),
        });
    }
    if (k * n) % 2 == 1 || k >= n {
        return Err(Error::Infeasible(format!(
            "no simple {k}-regular graph on {n} vertices"
        )));
    }
    let started = Instant::now();
    let mut report = VerifyReport::new("scan.conjecture")
        .param("k", k)
        .param("n", n)
        .param("samples", samples)
        .seeded(seed);
    let avg = GenSpec {
        family: Family::RandomAvgDegree,
        n,
        k,
        seed,
        sample_count: samples as usize,
    };
    let reg = GenSpec {
        family: Family::RandomRegular,
        ..avg
    };
    let jobs: Vec<(bool, u64)> = (0..samples)
        .map(|i| (false, i))
        .chain((0..samples).map(|i| (true, REGULAR_STREAM_BASE + i)))
        .collect();
    let results = opts.map(jobs, |(regular, idx)| -> Result<(Partial, Option<Finding>)> {
        let mut part = Partial::default();
        let g = random_graph(if regular { &reg } else { &avg }, idx)?;
        let (i, dk) = (oracle.count_is(&g)?, oracle.count_kds(&g, k)?);
        let vals = [("i", &i), ("dk", &dk)];
        let mut eq_finding = None;
        if regular {
            part.add("regularSamples", 1);
            if i != dk {
                part.fail(Violation::new(
                    Witness::of_graph(&g),
                    &format!("i(G) = d{k}(G) for {k}-regular G"),
                    &vals,
                ));
            }
        } else {
            part.add("avgDegreeSamples", 1);
            if i < dk {
                part.fail(Violation::new(
                    Witness::of_graph(&g),
                    &format!("i(G) >= d{k}(G)"),
                    &vals,
                ));
            } else if i == dk && regular_degree(&g) != Some(k) {
                part.add("equalityNotRegular", 1);
                eq_finding = Some(Finding {
                    id: format!("conjecture.equality.{idx}"),
                    kind: "equalityNotRegular".into(),
                    printed: format!("i(G) = d{k}(G) only if G is {k}-regular"),
                    computed: format!("{} i = d{k} = {i}", g.to_graph6()?),
                    matches: Some(false),
                    note: None,
                });
            }
        }
        Ok((part, eq_finding))
    })?;
    let mut witnesses = 0;
    for r in results {
        let (part, f) = r?;
        let stop = !part.violations.is_empty();
        report.absorb(part);
        if let Some(f) = f {
            if witnesses < EQUALITY_WITNESS_CAP {
                report.findings.push(f);
                witnesses += 1;
            }
        }
        if stop {
            report.add("haltedEarly", 1);
            break;
        }
    }
    Ok(report.finish(started))
}
