//! Seeded batch suites, parallel over instances.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::linalg::RingSpec;
use crate::model::{path_complex_of_digraph, PathComplex};
use crate::par::Execution;
use crate::product::{verify_kunneth_with, KunnethMode};
use crate::random::random_small_digraph;
use crate::realization::verify_realization_isomorphism_with;
use crate::report::ComparisonReport;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub seed: u64,
    pub count: usize,
    pub max_vertices: usize,
    pub density: f64,
    pub top_dim: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { seed: 2024, count: 200, max_vertices: 6, density: 0.3, top_dim: 3 }
    }
}

impl SuiteConfig {
    /// Seed of instance `i`.
    pub fn instance_seed(&self, i: usize) -> u64 {
        self.seed.wrapping_mul(1_000_003).wrapping_add(i as u64)
    }

    /// The path complex of instance `i`, expanded to `top_dim`.
    pub fn instance(&self, i: usize) -> PathComplex {
        let g = random_small_digraph(self.instance_seed(i), self.max_vertices, self.density);
        path_complex_of_digraph(&g, self.top_dim).expect("small digraphs stay under the path cap")
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteOutcome {
    pub instance: usize,
    pub seed: u64,
    pub report: ComparisonReport,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteResult {
    pub config: SuiteConfig,
    pub outcomes: Vec<SuiteOutcome>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.report.passed())
    }

    pub fn failures(&self) -> Vec<&SuiteOutcome> {
        self.outcomes.iter().filter(|o| !o.report.passed()).collect()
    }

    /// Instances whose realization needed closure cells or pruning notes.
    pub fn with_notes(&self) -> usize {
        self.outcomes.iter().filter(|o| !o.report.notes.is_empty()).count()
    }
}

/// Realization isomorphism on `count` random digraphs, once per ring.
pub fn realization_suite(config: &SuiteConfig, rings: &[RingSpec], exec: Execution) -> Result<SuiteResult> {
    let jobs: Vec<(usize, RingSpec)> = (0..config.count).flat_map(|i| rings.iter().map(move |&r| (i, r))).collect();
    let outcomes = exec.map(&jobs, |&(i, ring)| {
        let pc = config.instance(i);
        // Instances run in parallel; each pipeline stays sequential.
        verify_realization_isomorphism_with(&pc, ring, config.top_dim, Execution::Sequential).map(|report| SuiteOutcome {
            instance: i,
            seed: config.instance_seed(i),
            report,
        })
    });
    Ok(SuiteResult { config: config.clone(), outcomes: outcomes.into_iter().collect::<Result<_>>()? })
}

/// Künneth on `count` random pairs; the second factor's labels get a `'`.
pub fn kunneth_suite(config: &SuiteConfig, mode: KunnethMode, rings: &[RingSpec], exec: Execution) -> Result<SuiteResult> {
    let jobs: Vec<(usize, RingSpec)> = (0..config.count).flat_map(|i| rings.iter().map(move |&r| (i, r))).collect();
    let outcomes = exec.map(&jobs, |&(i, ring)| {
        let px = config.instance(2 * i);
        let py = config.instance(2 * i + 1).relabel(|l| format!("{l}'"))?;
        verify_kunneth_with(&px, &py, ring, config.top_dim, mode, Execution::Sequential).map(|report| SuiteOutcome {
            instance: i,
            seed: config.instance_seed(2 * i),
            report,
        })
    });
    Ok(SuiteResult { config: config.clone(), outcomes: outcomes.into_iter().collect::<Result<_>>()? })
}
