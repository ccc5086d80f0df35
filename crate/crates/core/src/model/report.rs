use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::model::clustering::{clustering_cost, validate_clustering, Clustering, Objective};
use crate::model::instance::Instance;
use crate::scalar::Scalar;

/// Which solver produced a clustering.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Algorithm {
    Greedy,
    LineCenter,
    LineDiameter,
    TreeDp,
    TreeAssign,
    DisjointGeneral,
    DisjointLp,
    DisjointDoubling,
    TwoCenter,
    Assignment,
    Oracle,
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).ok().and_then(|v| v.as_str().map(str::to_owned));
        f.write_str(s.as_deref().unwrap_or("?"))
    }
}

/// Summary of a solve: achieved objective, how many clusters, which algorithm,
/// and the a-priori guarantee when the algorithm provides one.
#[derive(Clone, Debug, PartialEq)]
pub struct SolveReport<S> {
    pub objective: Objective,
    pub value: S,
    pub clusters_used: usize,
    pub algorithm: Algorithm,
    /// Radius `r` at which the search stopped.
    pub search_radius: Option<S>,
    pub bound: Option<S>,
    pub feasible: bool,
}

impl<S: Scalar> SolveReport<S> {
    /// Recomputes cost and feasibility of `c` against `inst`.
    pub fn measure(
        inst: &Instance<S>,
        c: &Clustering,
        objective: Objective,
        algorithm: Algorithm,
        search_radius: Option<S>,
        bound: Option<S>,
    ) -> Result<Self> {
        Ok(Self {
            objective,
            value: clustering_cost(inst, c, objective)?,
            clusters_used: c.len(),
            algorithm,
            search_radius,
            bound,
            feasible: validate_clustering(inst, c).is_feasible(),
        })
    }
}
