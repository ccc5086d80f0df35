//! Bounded-radius cluster growth and greedy covering.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::model::{
    binary_search_min_feasible, candidate_radii, Algorithm, Clustering, Graph, Instance, Metric, Mode, Objective,
    SearchStrategy, SolveReport,
};
use crate::scalar::Scalar;

/// Centers in selection order with their grown clusters.
#[derive(Clone, Debug, PartialEq)]
pub struct GreedyOutput<S> {
    pub centers: Vec<usize>,
    /// `clusters[i]` is the sorted cluster grown around `centers[i]`.
    pub clusters: Vec<Vec<usize>>,
    pub radius: S,
}

impl<S: Scalar> GreedyOutput<S> {
    pub fn to_clustering(&self) -> Clustering {
        Clustering::new(self.clusters.clone(), Some(self.centers.clone()), Mode::NonDisjoint)
            .expect("grown clusters contain their centers")
    }
}

/// How greedy picks the next center among uncovered points.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum CenterOrder {
    #[default]
    SmallestId,
    Seeded(u64),
}

impl CenterOrder {
    fn sequence(self, n: usize) -> Vec<usize> {
        let mut order: Vec<usize> = (0..n).collect();
        if let CenterOrder::Seeded(seed) = self {
            order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        }
        order
    }
}

/// Reusable BFS state so repeated growth does not reallocate.
pub(crate) struct Grower {
    mark: Vec<u32>,
    stamp: u32,
}

impl Grower {
    pub(crate) fn new(n: usize) -> Self {
        Self { mark: vec![0; n], stamp: 0 }
    }

    /// All points reachable from `c` through points within `radius` of `c`, sorted.
    pub(crate) fn grow<S: Scalar, M: Metric<S>>(&mut self, g: &Graph, m: &M, radius: S, c: usize) -> Vec<usize> {
        self.stamp = self.stamp.wrapping_add(1);
        if self.stamp == 0 {
            self.mark.fill(0);
            self.stamp = 1;
        }
        let stamp = self.stamp;
        let mut out = vec![c];
        self.mark[c] = stamp;
        let mut i = 0;
        while i < out.len() {
            let u = out[i];
            i += 1;
            for &v in g.neighbors(u) {
                if self.mark[v] != stamp && m.dist(v, c).approx_le(radius) {
                    self.mark[v] = stamp;
                    out.push(v);
                }
            }
        }
        out.sort_unstable();
        out
    }
}

pub fn compute_cluster<S: Scalar>(inst: &Instance<S>, radius: S, c: usize) -> Vec<usize> {
    Grower::new(inst.len()).grow(inst.graph(), inst.matrix(), radius, c)
}

pub fn greedy_clustering<S: Scalar>(inst: &Instance<S>, radius: S, order: CenterOrder) -> GreedyOutput<S> {
    greedy_clustering_limited(inst, radius, order, usize::MAX).expect("unlimited greedy always finishes")
}

/// Greedy covering that gives up as soon as more than `limit` centers are needed.
pub fn greedy_clustering_limited<S: Scalar>(
    inst: &Instance<S>,
    radius: S,
    order: CenterOrder,
    limit: usize,
) -> Option<GreedyOutput<S>> {
    let n = inst.len();
    let mut covered = vec![false; n];
    let mut grower = Grower::new(n);
    let mut out = GreedyOutput { centers: Vec::new(), clusters: Vec::new(), radius };
    for c in order.sequence(n) {
        if covered[c] {
            continue;
        }
        if out.centers.len() == limit {
            return None;
        }
        let t = grower.grow(inst.graph(), inst.matrix(), radius, c);
        for &v in &t {
            covered[v] = true;
        }
        out.centers.push(c);
        out.clusters.push(t);
    }
    Some(out)
}

/// Grows one cluster per given center; `None` if their union misses a point.
pub fn greedy_with_given_centers<S: Scalar>(
    inst: &Instance<S>,
    centers: &[usize],
    growth: S,
) -> Option<GreedyOutput<S>> {
    let n = inst.len();
    let mut covered = vec![false; n];
    let mut left = n;
    let mut grower = Grower::new(n);
    let mut clusters = Vec::with_capacity(centers.len());
    for &c in centers {
        let t = grower.grow(inst.graph(), inst.matrix(), growth, c);
        for &v in &t {
            if !covered[v] {
                covered[v] = true;
                left -= 1;
            }
        }
        clusters.push(t);
    }
    (left == 0).then(|| GreedyOutput { centers: centers.to_vec(), clusters, radius: growth })
}

/// Growth radius used by the non-disjoint probe at search radius `r`.
pub fn growth_radius<S: Scalar>(objective: Objective, r: S) -> S {
    match objective {
        Objective::Center => r + r,
        Objective::Diameter => r,
    }
}

/// Non-disjoint 2-approximation for both objectives.
pub fn solve_nondisjoint<S: Scalar>(
    inst: &Instance<S>,
    objective: Objective,
    order: CenterOrder,
    search: SearchStrategy,
) -> Result<(SolveReport<S>, Clustering)> {
    let k = inst.k();
    let candidates = candidate_radii(inst.matrix());
    let (r, out) = binary_search_min_feasible(
        &candidates,
        |r| greedy_clustering_limited(inst, growth_radius(objective, r), order, k),
        search,
    )
    .ok_or_else(|| Error::Infeasible(format!("connectivity graph has more than {k} components")))?;
    let c = out.to_clustering();
    let report = SolveReport::measure(inst, &c, objective, Algorithm::Greedy, Some(r), Some(r + r))?;
    Ok((report, c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{DistanceMatrix, Graph};

    // x=0, u=1, z=2, c=3, e=4
    fn spider() -> Instance<f64> {
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (2, 3), (2, 4)]).unwrap();
        Instance::from_graph_metric(vec![(0, 1, 1.0), (0, 2, 2.0), (2, 3, 1.0), (2, 4, 1.0)], g, 2).unwrap()
    }

    fn path6() -> Instance<f64> {
        let ones = [(0, 3), (1, 3), (2, 3), (2, 4), (2, 5)];
        let m = DistanceMatrix::from_fn(6, |i, j| if ones.contains(&(i, j)) { 1.0 } else { 2.0 });
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]).unwrap();
        Instance::new(m, g, 2).unwrap()
    }

    #[test]
    fn growth_on_small_examples() {
        assert_eq!(compute_cluster(&spider(), 2.0, 0), vec![0, 1, 2]);
        assert_eq!(compute_cluster(&spider(), 0.0, 0), vec![0]);
        assert_eq!(compute_cluster(&path6(), 1.0, 3), vec![0, 1, 2, 3]);
    }

    #[test]
    fn greedy_order_and_cover() {
        let out = greedy_clustering(&spider(), 2.0, CenterOrder::SmallestId);
        assert_eq!(out.centers, vec![0, 3]);
        assert_eq!(out.clusters[1], vec![2, 3, 4]);
        assert_eq!(out.clusters[0], vec![0, 1, 2]);
        let out = greedy_clustering(&path6(), 2.0, CenterOrder::SmallestId);
        assert_eq!(out.centers, vec![0]);
        assert_eq!(out.clusters[0].len(), 6);
        let seeded = greedy_clustering(&path6(), 0.0, CenterOrder::Seeded(3));
        assert_eq!(seeded.centers.len(), 6);
        assert!(greedy_clustering_limited(&path6(), 0.0, CenterOrder::SmallestId, 5).is_none());
    }

    #[test]
    fn given_centers() {
        let out = greedy_with_given_centers(&spider(), &[0, 2], 1.0).unwrap();
        assert_eq!(out.clusters, vec![vec![0, 1], vec![2, 3, 4]]);
        assert!(greedy_with_given_centers(&spider(), &[0], 1.0).is_none());
        let all: Vec<usize> = (0..5).collect();
        let out = greedy_with_given_centers(&spider(), &all, 0.0).unwrap();
        assert!(out.clusters.iter().all(|c| c.len() == 1));
    }

    #[test]
    fn nondisjoint_path6() {
        let (rep, c) =
            solve_nondisjoint(&path6(), Objective::Center, CenterOrder::SmallestId, SearchStrategy::Binary).unwrap();
        assert_eq!(rep.search_radius, Some(1.0));
        assert_eq!(c.len(), 1);
        assert!(rep.value <= 2.0);
        assert!(rep.feasible);
        let (rep, _) =
            solve_nondisjoint(&spider(), Objective::Center, CenterOrder::SmallestId, SearchStrategy::Binary).unwrap();
        assert!(rep.value <= 2.0);
    }

    #[test]
    fn k_equals_n_gives_zero() {
        let inst = path6().with_k(6).unwrap();
        for obj in [Objective::Center, Objective::Diameter] {
            let (rep, c) = solve_nondisjoint(&inst, obj, CenterOrder::SmallestId, SearchStrategy::Binary).unwrap();
            assert_eq!(rep.value, 0.0);
            assert_eq!(c.len(), 6);
        }
    }
}
