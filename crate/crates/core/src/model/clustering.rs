use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::instance::{Instance, Metric};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Disjoint,
    NonDisjoint,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Objective {
    Center,
    Diameter,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Disjoint => "disjoint",
            Mode::NonDisjoint => "non_disjoint",
        })
    }
}

impl fmt::Display for Objective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Objective::Center => "center",
            Objective::Diameter => "diameter",
        })
    }
}

/// A list of clusters with optional centers. Each cluster is kept sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Clustering {
    clusters: Vec<Vec<usize>>,
    centers: Option<Vec<usize>>,
    mode: Mode,
}

impl Clustering {
    /// Checks that clusters are nonempty, duplicate-free and contain their centers.
    pub fn new(clusters: Vec<Vec<usize>>, centers: Option<Vec<usize>>, mode: Mode) -> Result<Self> {
        let mut clusters = clusters;
        for (i, c) in clusters.iter_mut().enumerate() {
            c.sort_unstable();
            if c.is_empty() {
                return Err(Error::InvalidInput(format!("cluster {i} is empty")));
            }
            if c.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidInput(format!("cluster {i} lists a point twice")));
            }
        }
        if let Some(cs) = &centers {
            if cs.len() != clusters.len() {
                return Err(Error::InvalidInput(format!("{} centers for {} clusters", cs.len(), clusters.len())));
            }
            for (i, (&c, cl)) in cs.iter().zip(&clusters).enumerate() {
                if cl.binary_search(&c).is_err() {
                    return Err(Error::InvalidInput(format!("center {c} is not in cluster {i}")));
                }
            }
        }
        Ok(Self { clusters, centers, mode })
    }

    pub fn singletons(n: usize, mode: Mode) -> Self {
        Self { clusters: (0..n).map(|v| vec![v]).collect(), centers: Some((0..n).collect()), mode }
    }

    pub fn clusters(&self) -> &[Vec<usize>] {
        &self.clusters
    }

    pub fn centers(&self) -> Option<&[usize]> {
        self.centers.as_deref()
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn len(&self) -> usize {
        self.clusters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.clusters.is_empty()
    }

    pub fn into_parts(self) -> (Vec<Vec<usize>>, Option<Vec<usize>>, Mode) {
        (self.clusters, self.centers, self.mode)
    }

    /// Deterministic ordering: clusters sorted by their smallest point (then lexicographically).
    pub fn canonical(mut self) -> Self {
        let mut idx: Vec<usize> = (0..self.clusters.len()).collect();
        idx.sort_by(|&a, &b| self.clusters[a].cmp(&self.clusters[b]));
        let clusters = idx.iter().map(|&i| std::mem::take(&mut self.clusters[i])).collect();
        let centers = self.centers.map(|cs| idx.iter().map(|&i| cs[i]).collect());
        Self { clusters, centers, mode: self.mode }
    }
}

/// A reason a clustering is infeasible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    PointOutOfRange(usize),
    Uncovered(Vec<usize>),
    Disconnected(usize),
    Overlap { point: usize, first: usize, second: usize },
    TooManyClusters { used: usize, k: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::PointOutOfRange(v) => write!(f, "point {v} out of range"),
            Violation::Uncovered(vs) => write!(f, "points {vs:?} are not covered"),
            Violation::Disconnected(i) => write!(f, "cluster {i} is not connected"),
            Violation::Overlap { point, first, second } => {
                write!(f, "point {point} lies in clusters {first} and {second}")
            }
            Violation::TooManyClusters { used, k } => write!(f, "{used} clusters exceed k = {k}"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Verdict {
    pub violations: Vec<Violation>,
}

impl Verdict {
    pub fn is_feasible(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Coverage, connectivity, disjointness (in disjoint mode) and the cluster budget.
pub fn validate_clustering<S: Scalar>(inst: &Instance<S>, c: &Clustering) -> Verdict {
    let n = inst.len();
    let mut violations = Vec::new();
    let mut owner = vec![usize::MAX; n];
    let mut mask = vec![false; n];
    for (i, cluster) in c.clusters().iter().enumerate() {
        if let Some(&bad) = cluster.iter().find(|&&v| v >= n) {
            violations.push(Violation::PointOutOfRange(bad));
            continue;
        }
        for &v in cluster {
            if owner[v] == usize::MAX {
                owner[v] = i;
            } else if c.mode() == Mode::Disjoint {
                violations.push(Violation::Overlap { point: v, first: owner[v], second: i });
            }
            mask[v] = true;
        }
        if !inst.graph().induces_connected_masked(cluster, &mut mask) {
            violations.push(Violation::Disconnected(i));
        }
    }
    let uncovered: Vec<usize> = (0..n).filter(|&v| owner[v] == usize::MAX).collect();
    if !uncovered.is_empty() {
        violations.push(Violation::Uncovered(uncovered));
    }
    if c.len() > inst.k() {
        violations.push(Violation::TooManyClusters { used: c.len(), k: inst.k() });
    }
    Verdict { violations }
}

/// Radius of one cluster around `center`.
pub fn cluster_radius<S: Scalar, M: Metric<S>>(m: &M, cluster: &[usize], center: usize) -> S {
    cluster.iter().fold(S::zero(), |acc, &x| acc.max_of(m.dist(x, center)))
}

/// Largest pairwise distance inside one cluster.
pub fn cluster_diameter<S: Scalar, M: Metric<S>>(m: &M, cluster: &[usize]) -> S {
    let mut best = S::zero();
    for (i, &a) in cluster.iter().enumerate() {
        for &b in &cluster[i + 1..] {
            best = best.max_of(m.dist(a, b));
        }
    }
    best
}

/// Best radius achievable by choosing the center inside the cluster.
pub fn best_center<S: Scalar, M: Metric<S>>(m: &M, cluster: &[usize]) -> (usize, S) {
    let mut best = (cluster[0], cluster_radius(m, cluster, cluster[0]));
    for &c in &cluster[1..] {
        let r = cluster_radius(m, cluster, c);
        if r < best.1 {
            best = (c, r);
        }
    }
    best
}

pub fn clustering_cost<S: Scalar>(inst: &Instance<S>, c: &Clustering, objective: Objective) -> Result<S> {
    let m = inst.matrix();
    let n = inst.len();
    if let Some(&bad) = c.clusters().iter().flatten().find(|&&v| v >= n) {
        return Err(Error::PointOutOfRange(bad));
    }
    match objective {
        Objective::Center => {
            let centers = c.centers().ok_or(Error::MissingCenters)?;
            Ok(c.clusters()
                .iter()
                .zip(centers)
                .fold(S::zero(), |acc, (cl, &ctr)| acc.max_of(cluster_radius(m, cl, ctr))))
        }
        Objective::Diameter => Ok(c.clusters().iter().fold(S::zero(), |acc, cl| acc.max_of(cluster_diameter(m, cl)))),
    }
}
