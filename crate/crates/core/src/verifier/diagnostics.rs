//! Walk-correspondence diagnostics for certified identities.
//!
//! For a pair in the identities of the max-plus monoid and any matrix pair
//! `(A, B)`, the maximum-weight `u`-walks between two nodes correspond to
//! `v`-walks: a walk whose configuration is a hull vertex has a `v`-walk
//! with the very same configuration; a non-vertex (quasi-essential)
//! configuration forces at least two `v`-walks of that weight with other
//! configurations; and two non-equivalent maximum `u`-walks force two
//! non-equivalent `v`-walks. These checks run by full enumeration (no
//! pruning) and compare weights after the ghost projection, which on
//! ghost-free inputs is plain weight equality.

use std::collections::BTreeSet;

use crate::digraph::{Config, LwDigraph, Walk};
use crate::error::{Limits, Result};
use crate::matrix::Matrix;
use crate::polytope::VertexReport;
use crate::semiring::SupScalar;
use crate::words::Identity;

use super::config_sets;

/// One failed correspondence, with the walks that witnessed the failure.
#[derive(Debug, Clone)]
pub enum CorrespondenceFailure {
    /// A vertex-configuration maximum `u`-walk has no `v`-walk with the same
    /// configuration.
    MissingEqualConfig { u_walk: Walk },
    /// A quasi-configuration maximum `u`-walk needs at least two `v`-walks of
    /// the same nu-weight with configurations different from its own.
    MissingTwoOtherWalks { u_walk: Walk, found: usize },
    /// Two non-equivalent maximum `u`-walks need two non-equivalent `v`-walks
    /// of the same nu-weight.
    MissingTwoDistinctConfigs { found: usize },
}

impl std::fmt::Display for CorrespondenceFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CorrespondenceFailure::MissingEqualConfig { u_walk } => write!(
                f,
                "no v-walk shares the configuration of the vertex u-walk {}",
                u_walk.pretty()
            ),
            CorrespondenceFailure::MissingTwoOtherWalks { u_walk, found } => write!(
                f,
                "quasi u-walk {} needs two differently-configured v-walks, found {found}",
                u_walk.pretty()
            ),
            CorrespondenceFailure::MissingTwoDistinctConfigs { found } => write!(
                f,
                "two non-equivalent maximum u-walks need two non-equivalent v-walks, \
                 found {found} distinct v-configurations"
            ),
        }
    }
}

/// Result of the correspondence checks at one entry.
#[derive(Debug, Clone)]
pub struct CorrespondenceReport {
    /// 0-based entry.
    pub entry: (usize, usize),
    /// Ghost projection of the maximum walk weight, if any `u`-walk exists.
    pub max_nu_weight: Option<SupScalar>,
    /// Maximum-weight walks on each side.
    pub u_walks_at_max: Vec<Walk>,
    pub v_walks_at_max: Vec<Walk>,
    pub failures: Vec<CorrespondenceFailure>,
    /// Interpretation flags for the checks performed.
    pub notes: Vec<String>,
}

impl CorrespondenceReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Precomputed hull geometry of the `u`-side configuration sets, reusable
/// across many matrix pairs.
pub struct WalkDiagnostics {
    n: usize,
    id: Identity,
    u_reports: Vec<Vec<VertexReport>>,
}

impl WalkDiagnostics {
    /// Builds the generic (unpruned) configuration sets of the `u` word and
    /// identifies their hull vertices once.
    pub fn new(n: usize, id: &Identity, limits: &Limits) -> Result<Self> {
        let omega_u = config_sets(n, id.u(), false, limits)?;
        let u_reports = omega_u
            .iter()
            .map(|row| row.iter().map(|set| set.vertices()).collect())
            .collect();
        Ok(WalkDiagnostics {
            n,
            id: id.clone(),
            u_reports,
        })
    }

    /// Runs the three correspondence checks at one entry of one matrix pair.
    pub fn check(
        &self,
        a: &Matrix<SupScalar>,
        b: &Matrix<SupScalar>,
        i: usize,
        j: usize,
        limits: &Limits,
    ) -> Result<CorrespondenceReport> {
        let g = LwDigraph::of_pair(a, b)?;
        let notes = vec![
            "weights are compared after the ghost projection".to_string(),
            "the third check reads: two non-equivalent maximum u-walks require at least \
             two mutually non-equivalent v-walks of that weight"
                .to_string(),
        ];

        let u_walks = g.enumerate_walks(self.id.u(), i, j, limits)?;
        if u_walks.is_empty() {
            return Ok(CorrespondenceReport {
                entry: (i, j),
                max_nu_weight: None,
                u_walks_at_max: Vec::new(),
                v_walks_at_max: Vec::new(),
                failures: Vec::new(),
                notes,
            });
        }
        let u_weights: Vec<SupScalar> = u_walks
            .iter()
            .map(|w| g.walk_weight(w))
            .collect::<Result<_>>()?;
        let top = u_weights
            .iter()
            .map(SupScalar::nu)
            .max()
            .expect("nonempty");
        let u_at_max: Vec<&Walk> = u_walks
            .iter()
            .zip(&u_weights)
            .filter(|(_, w)| w.nu() == top)
            .map(|(walk, _)| walk)
            .collect();

        let v_walks = g.enumerate_walks(self.id.v(), i, j, limits)?;
        let mut v_at_max: Vec<&Walk> = Vec::new();
        for walk in &v_walks {
            if g.walk_weight(walk)?.nu() == top {
                v_at_max.push(walk);
            }
        }
        let v_configs: Vec<Config> = v_at_max
            .iter()
            .map(|w| w.config(self.n))
            .collect::<Result<_>>()?;

        let mut failures = Vec::new();
        let report = &self.u_reports[i][j];
        let mut seen: BTreeSet<Config> = BTreeSet::new();
        for walk in &u_at_max {
            let cfg = walk.config(self.n)?;
            if !seen.insert(cfg.clone()) {
                continue;
            }
            if report.is_vertex(&cfg) {
                if !v_configs.contains(&cfg) {
                    failures.push(CorrespondenceFailure::MissingEqualConfig {
                        u_walk: (*walk).clone(),
                    });
                }
            } else {
                let other = v_at_max
                    .iter()
                    .zip(&v_configs)
                    .filter(|(_, vc)| **vc != cfg)
                    .count();
                if other < 2 {
                    failures.push(CorrespondenceFailure::MissingTwoOtherWalks {
                        u_walk: (*walk).clone(),
                        found: other,
                    });
                }
            }
        }
        if seen.len() >= 2 {
            let distinct_v: BTreeSet<&Config> = v_configs.iter().collect();
            if distinct_v.len() < 2 {
                failures.push(CorrespondenceFailure::MissingTwoDistinctConfigs {
                    found: distinct_v.len(),
                });
            }
        }

        Ok(CorrespondenceReport {
            entry: (i, j),
            max_nu_weight: Some(top),
            u_walks_at_max: u_at_max.into_iter().cloned().collect(),
            v_walks_at_max: v_at_max.into_iter().cloned().collect(),
            failures,
            notes,
        })
    }
}

/// One-shot form of the correspondence check; for many pairs against the
/// same identity, build [`WalkDiagnostics`] once instead.
pub fn walk_correspondence(
    a: &Matrix<SupScalar>,
    b: &Matrix<SupScalar>,
    id: &Identity,
    i: usize,
    j: usize,
    limits: &Limits,
) -> Result<CorrespondenceReport> {
    let n = a.n();
    WalkDiagnostics::new(n, id, limits)?.check(a, b, i, j, limits)
}
