use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::model::{DistanceMatrix, Graph, Instance, Metric};
use crate::scalar::{LpNorm, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RandomFamily {
    /// A path through the points in random order.
    Line,
    /// A random recursive tree.
    Tree,
    /// A random spanning tree plus extra edges.
    General,
    /// Unit-cube coordinates under an Lp norm, connected by their MST plus extra edges.
    Lp { dim: usize, norm: LpNorm },
}

#[derive(Clone, Debug, PartialEq)]
pub struct RandomOptions {
    /// Matrix entries are drawn uniformly from `1..=max_distance`.
    pub max_distance: u32,
    /// Replace the matrix by its shortest-path closure, making it a metric.
    pub metric_closure: bool,
    /// Probability of each non-tree edge (general and lp families).
    pub extra_edge_prob: f64,
}

impl Default for RandomOptions {
    fn default() -> Self {
        Self { max_distance: 10, metric_closure: false, extra_edge_prob: 0.2 }
    }
}

// lp coordinates are multiples of 1/GRID so that exact scalars stay small
const GRID: usize = 1000;

fn spanning_tree(rng: &mut ChaCha8Rng, n: usize) -> Vec<(usize, usize)> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    (1..n).map(|i| (perm[rng.gen_range(0..i)], perm[i])).collect()
}

fn add_extra(rng: &mut ChaCha8Rng, n: usize, p: f64, edges: &mut Vec<(usize, usize)>) {
    if p <= 0.0 {
        return;
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p.min(1.0)) {
                edges.push((u, v));
            }
        }
    }
}

/// Prim's algorithm on the complete graph of a metric.
fn mst<S: Scalar, M: Metric<S>>(m: &M) -> Vec<(usize, usize)> {
    let n = m.size();
    let mut inside = vec![false; n];
    let mut best: Vec<Option<(S, usize)>> = vec![None; n];
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    let mut u = 0;
    for _ in 1..n {
        inside[u] = true;
        for v in 0..n {
            let d = m.dist(u, v);
            if !inside[v] && best[v].is_none_or(|(b, _)| d < b) {
                best[v] = Some((d, u));
            }
        }
        let next = (0..n)
            .filter(|&v| !inside[v])
            .min_by(|&a, &b| best[a].unwrap().0.partial_cmp(&best[b].unwrap().0).expect("distances are ordered"))
            .expect("a point remains outside");
        edges.push((best[next].unwrap().1, next));
        u = next;
    }
    edges
}

/// A seeded random instance; `n ≥ k ≥ 1`.
pub fn gen_random<S: Scalar>(
    family: RandomFamily,
    n: usize,
    k: usize,
    seed: u64,
    opts: &RandomOptions,
) -> Result<Instance<S>> {
    if k < 1 || n < k {
        return Err(Error::InvalidInput(format!("need n ≥ k ≥ 1, got n = {n}, k = {k}")));
    }
    if opts.max_distance < 1 {
        return Err(Error::InvalidInput("max_distance must be at least 1".into()));
    }
    if !(0.0..=1.0).contains(&opts.extra_edge_prob) {
        return Err(Error::InvalidInput("extra_edge_prob must lie in [0, 1]".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if let RandomFamily::Lp { dim, norm } = family {
        if dim < 1 {
            return Err(Error::InvalidInput("dimension must be at least 1".into()));
        }
        let coords: Vec<Vec<S>> = (0..n)
            .map(|_| (0..dim).map(|_| S::from_count(rng.gen_range(0..=GRID)) / S::from_count(GRID)).collect())
            .collect();
        let probe = Instance::from_lp(coords.clone(), norm, Graph::empty(n), k)?;
        let mut edges = mst(probe.matrix());
        add_extra(&mut rng, n, opts.extra_edge_prob, &mut edges);
        return Instance::from_lp(coords, norm, Graph::from_edges_dedup(n, &edges)?, k);
    }
    let mut edges = match family {
        RandomFamily::Line => {
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            perm.windows(2).map(|w| (w[0], w[1])).collect()
        }
        _ => spanning_tree(&mut rng, n),
    };
    if family == RandomFamily::General {
        add_extra(&mut rng, n, opts.extra_edge_prob, &mut edges);
    }
    let mut rows = vec![vec![S::zero(); n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let d = S::from_count(rng.gen_range(1..=opts.max_distance) as usize);
            rows[i][j] = d;
            rows[j][i] = d;
        }
    }
    let mut matrix = DistanceMatrix::from_rows(rows)?;
    if opts.metric_closure {
        matrix = matrix.metric_closure();
    }
    Instance::new(matrix, Graph::from_edges_dedup(n, &edges)?, k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic() {
        let o = RandomOptions::default();
        let a = gen_random::<f64>(RandomFamily::Line, 5, 2, 7, &o).unwrap();
        let b = gen_random::<f64>(RandomFamily::Line, 5, 2, 7, &o).unwrap();
        assert_eq!(a, b);
        assert!(a.graph().path_order().is_some());
        let c = gen_random::<f64>(RandomFamily::Line, 5, 2, 8, &o).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn structure() {
        let o = RandomOptions { metric_closure: true, ..RandomOptions::default() };
        for seed in 0..10 {
            let t = gen_random::<f64>(RandomFamily::Tree, 12, 3, seed, &o).unwrap();
            assert!(t.graph().is_connected() && t.graph().edge_count() == 11);
            assert!(t.matrix().triangle_violations().is_empty());
            let g = gen_random::<f64>(RandomFamily::General, 12, 3, seed, &o).unwrap();
            assert!(g.graph().is_connected());
            let lp = gen_random::<f64>(RandomFamily::Lp { dim: 2, norm: LpNorm::Finite(2) }, 9, 3, seed, &o).unwrap();
            assert!(lp.graph().is_connected());
            assert!(lp.matrix().triangle_violations().is_empty());
        }
    }

    #[test]
    fn rejects_bad_sizes() {
        let o = RandomOptions::default();
        assert!(gen_random::<f64>(RandomFamily::Tree, 3, 4, 0, &o).is_err());
        assert!(gen_random::<f64>(RandomFamily::Tree, 3, 0, 0, &o).is_err());
        let one = gen_random::<f64>(RandomFamily::General, 1, 1, 0, &o).unwrap();
        assert_eq!(one.len(), 1);
    }

    #[test]
    fn exact_scalars() {
        let lp = gen_random::<crate::Rational>(
            RandomFamily::Lp { dim: 3, norm: LpNorm::Finite(1) },
            6,
            2,
            3,
            &RandomOptions::default(),
        )
        .unwrap();
        assert!(lp.matrix().triangle_violations().is_empty());
    }
}
