//! Verification harnesses and their reports.
//!
//! Every task returns a [`VerifyReport`]. Work is split into fixed shards
//! (enumeration prefixes or sample indices), run on a rayon pool and merged
//! in shard order, so the report does not depend on the worker count.

mod conjecture;
mod gadgets;
mod lemmas;
mod theorems;

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::enumerate::PRNG_ALGORITHM;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::mop::Mop;
use crate::oracle::{Count, Oracle};

pub use conjecture::scan_conjecture;
pub use gadgets::{audit_gadgets, AUDIT_SEED, RIGHT_SIDES};
pub use lemmas::{check_decomposition_identities, check_lemma1, check_lemma2_surgery};
pub use theorems::{check_theorem1, check_theorem2, SPOT_CHECKS, SPOT_DELETE_PROB, THEOREM1_MAX, THEOREM2_MAX};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct RunOptions {
    /// Worker threads; 0 picks the machine's parallelism.
    pub workers: usize,
    pub oracle: Oracle,
}

impl RunOptions {
    pub fn with_workers(workers: usize) -> Self {
        RunOptions {
            workers,
            ..Default::default()
        }
    }

    /// Runs `f` over `items` in parallel, returning results in item order.
    pub(crate) fn map<T, R, F>(&self, items: Vec<T>, f: F) -> Result<Vec<R>>
    where
        T: Send,
        R: Send,
        F: Fn(T) -> R + Sync + Send,
    {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(self.workers)
            .build()
            .map_err(|e| Error::Infeasible(format!("thread pool: {e}")))?;
        Ok(pool.install(|| items.into_par_iter().map(f).collect()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct PrngInfo {
    pub algorithm: String,
    pub seed: u64,
}

/// Enough to rebuild the counterexample: the graph, and for triangulations
/// also the polygon form and the split edge.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Witness {
    pub graph6: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mop: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edge: Option<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Witness {
    pub fn of_graph(g: &Graph) -> Witness {
        Witness {
            graph6: g.to_graph6().unwrap_or_default(),
            ..Default::default()
        }
    }

    pub fn of_mop(m: &Mop) -> Witness {
        Witness {
            mop: Some(m.to_string()),
            ..Witness::of_graph(&m.graph().expect("mop graph"))
        }
    }

    pub fn with_edge(mut self, e: (usize, usize)) -> Witness {
        self.edge = Some(e);
        self
    }

    pub fn graph(&self) -> Result<Graph> {
        Graph::from_graph6(&self.graph6)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Violation {
    pub witness: Witness,
    /// The relation that failed, e.g. `i(G) > d4(G)`.
    pub relation: String,
    /// Computed quantities, as decimal strings.
    pub values: BTreeMap<String, String>,
}

impl Violation {
    pub fn new(witness: Witness, relation: &str, values: &[(&str, &Count)]) -> Violation {
        Violation {
            witness,
            relation: relation.to_string(),
            values: values.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect(),
        }
    }
}

/// A printed-versus-computed comparison that never fails a run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Finding {
    pub id: String,
    pub kind: String,
    pub printed: String,
    pub computed: String,
    /// `None` when there is nothing to compare against.
    pub matches: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CriticalCandidate {
    pub mop: String,
    pub i_count: String,
    pub d4_count: String,
}

impl CriticalCandidate {
    pub fn new(m: &Mop, i: &Count, d4: &Count) -> CriticalCandidate {
        CriticalCandidate {
            mop: m.to_string(),
            i_count: i.to_string(),
            d4_count: d4.to_string(),
        }
    }

    pub fn is_critical(&self) -> bool {
        match (self.i_count.parse::<Count>(), self.d4_count.parse::<Count>()) {
            (Ok(i), Ok(d)) => i <= d,
            _ => false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct VerifyReport {
    pub task_id: String,
    pub params: BTreeMap<String, Value>,
    pub counts: BTreeMap<String, u64>,
    pub violations: Vec<Violation>,
    pub findings: Vec<Finding>,
    #[serde(default)]
    pub critical_candidates: Vec<CriticalCandidate>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub prng: Option<PrngInfo>,
    pub wall_time_ms: u64,
    pub pass: bool,
}

impl VerifyReport {
    pub fn new(task_id: &str) -> VerifyReport {
        VerifyReport {
            task_id: task_id.to_string(),
            params: BTreeMap::new(),
            counts: BTreeMap::new(),
            violations: Vec::new(),
            findings: Vec::new(),
            critical_candidates: Vec::new(),
            prng: None,
            wall_time_ms: 0,
            pass: true,
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    pub fn seeded(mut self, seed: u64) -> Self {
        self.prng = Some(PrngInfo {
            algorithm: PRNG_ALGORITHM.to_string(),
            seed,
        });
        self.param("seed", seed)
    }

    pub fn add(&mut self, key: &str, by: u64) {
        *self.counts.entry(key.to_string()).or_default() += by;
    }

    pub fn count(&self, key: &str) -> u64 {
        self.counts.get(key).copied().unwrap_or(0)
    }

    /// Folds a shard's partial report into this one.
    pub fn absorb(&mut self, part: Partial) {
        for (k, v) in part.counts {
            self.add(&k, v);
        }
        self.violations.extend(part.violations);
        self.findings.extend(part.findings);
        self.critical_candidates.extend(part.critical);
    }

    pub(crate) fn finish(mut self, started: Instant) -> Self {
        self.wall_time_ms = started.elapsed().as_millis() as u64;
        self.pass = self.violations.is_empty();
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// JSON with the wall time zeroed, for byte comparison of reruns.
    pub fn stable_json(&self) -> String {
        VerifyReport {
            wall_time_ms: 0,
            ..self.clone()
        }
        .to_json()
    }

    pub fn from_json(s: &str) -> Result<VerifyReport> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// What one shard contributes.
#[derive(Clone, Debug, Default)]
pub struct Partial {
    pub counts: BTreeMap<String, u64>,
    pub violations: Vec<Violation>,
    pub findings: Vec<Finding>,
    pub critical: Vec<CriticalCandidate>,
}

impl Partial {
    pub fn add(&mut self, key: &str, by: u64) {
        *self.counts.entry(key.to_string()).or_default() += by;
    }

    pub fn fail(&mut self, v: Violation) {
        self.violations.push(v);
    }
}
