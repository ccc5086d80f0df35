use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::model::graph::Graph;
use crate::scalar::{LpNorm, Scalar};

/// Anything that can report a distance between two point ids.
pub trait Metric<S: Scalar> {
    fn size(&self) -> usize;
    fn dist(&self, a: usize, b: usize) -> S;
}

/// Dense symmetric distance matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct DistanceMatrix<S> {
    n: usize,
    data: Vec<S>,
}

impl<S: Scalar> DistanceMatrix<S> {
    /// Builds a matrix from `f(i, j)` for `i < j`, mirroring it and zeroing the diagonal.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = vec![S::zero(); n * n];
        for i in 0..n {
            for j in i + 1..n {
                let d = f(i, j);
                data[i * n + j] = d;
                data[j * n + i] = d;
            }
        }
        Self { n, data }
    }

    /// Validates symmetry, zero diagonal and nonnegativity.
    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Schema(format!("matrix row {i} has length {}, expected {n}", row.len())));
            }
            data.extend_from_slice(row);
        }
        for i in 0..n {
            if !data[i * n + i].is_zero() {
                return Err(Error::InvalidDistance(i, i, "diagonal must be 0".into()));
            }
            for j in 0..n {
                let d = data[i * n + j];
                if d < S::zero() {
                    return Err(Error::InvalidDistance(i, j, format!("negative value {d}")));
                }
                if d != data[j * n + i] {
                    return Err(Error::Asymmetric(i, j));
                }
            }
        }
        Ok(Self { n, data })
    }

    pub fn rows(&self) -> Vec<Vec<S>> {
        self.data.chunks(self.n.max(1)).take(self.n).map(<[S]>::to_vec).collect()
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    /// Largest pairwise distance (0 for `n ≤ 1`).
    pub fn max_distance(&self) -> S {
        self.data.iter().fold(S::zero(), |acc, &d| acc.max_of(d))
    }

    /// Triples `(x, y, z)` with `d(x, z) > d(x, y) + d(y, z)` beyond tolerance.
    pub fn triangle_violations(&self) -> Vec<(usize, usize, usize)> {
        let n = self.n;
        let mut out = Vec::new();
        for x in 0..n {
            for z in x + 1..n {
                let dxz = self.data[x * n + z];
                for y in 0..n {
                    if y != x && y != z && dxz.approx_gt(self.data[x * n + y] + self.data[y * n + z]) {
                        out.push((x, y, z));
                    }
                }
            }
        }
        out
    }

    /// Shortest-path closure, turning any nonnegative matrix into a metric.
    pub fn metric_closure(&self) -> Self {
        let n = self.n;
        let mut data = self.data.clone();
        for m in 0..n {
            for i in 0..n {
                let dim = data[i * n + m];
                for j in 0..n {
                    let via = dim + data[m * n + j];
                    if via < data[i * n + j] {
                        data[i * n + j] = via;
                    }
                }
            }
        }
        Self { n, data }
    }

    /// The sub-matrix on the given point ids, in that order.
    pub fn restrict(&self, ids: &[usize]) -> Self {
        Self::from_fn(ids.len(), |i, j| self.dist(ids[i], ids[j]))
    }
}

impl<S: Scalar> Metric<S> for DistanceMatrix<S> {
    fn size(&self) -> usize {
        self.n
    }

    fn dist(&self, a: usize, b: usize) -> S {
        self.data[a * self.n + b]
    }
}

/// How the distances of an instance were specified.
#[derive(Clone, Debug, PartialEq)]
pub enum MetricSpec<S> {
    Explicit,
    Lp { coords: Vec<Vec<S>>, norm: LpNorm },
    Graph { edges: Vec<(usize, usize, S)> },
}

/// A connected clustering instance: points `0..n`, distances, connectivity graph and budget `k`.
#[derive(Clone, Debug, PartialEq)]
pub struct Instance<S> {
    k: usize,
    graph: Graph,
    matrix: DistanceMatrix<S>,
    spec: MetricSpec<S>,
    labels: Option<Vec<String>>,
}

impl<S: Scalar> Instance<S> {
    pub fn new(matrix: DistanceMatrix<S>, graph: Graph, k: usize) -> Result<Self> {
        Self::assemble(matrix, MetricSpec::Explicit, graph, k)
    }

    pub fn from_lp(coords: Vec<Vec<S>>, norm: LpNorm, graph: Graph, k: usize) -> Result<Self> {
        if let LpNorm::Finite(0) = norm {
            return Err(Error::Schema("norm exponent must be at least 1".into()));
        }
        let dim = coords.first().map_or(0, Vec::len);
        if let Some(i) = coords.iter().position(|c| c.len() != dim) {
            return Err(Error::Schema(format!("coordinate {i} has wrong dimension")));
        }
        let matrix = DistanceMatrix::from_fn(coords.len(), |i, j| {
            S::lp_norm(coords[i].iter().zip(&coords[j]).map(|(&a, &b)| a - b), norm)
        });
        Self::assemble(matrix, MetricSpec::Lp { coords, norm }, graph, k)
    }

    /// Expands a weighted graph into its shortest-path metric.
    pub fn from_graph_metric(edges: Vec<(usize, usize, S)>, graph: Graph, k: usize) -> Result<Self> {
        let n = graph.len();
        let mut adj: Vec<Vec<(usize, S)>> = vec![Vec::new(); n];
        for &(u, v, w) in &edges {
            if u >= n || v >= n {
                return Err(Error::PointOutOfRange(u.max(v)));
            }
            if w < S::zero() {
                return Err(Error::InvalidDistance(u, v, format!("negative weight {w}")));
            }
            adj[u].push((v, w));
            adj[v].push((u, w));
        }
        let mut data = vec![S::zero(); n * n];
        for s in 0..n {
            let dist = dijkstra(&adj, s).ok_or(Error::DisconnectedGraphMetric)?;
            data[s * n..(s + 1) * n].copy_from_slice(&dist);
        }
        let matrix = DistanceMatrix { n, data };
        Self::assemble(matrix, MetricSpec::Graph { edges }, graph, k)
    }

    fn assemble(matrix: DistanceMatrix<S>, spec: MetricSpec<S>, graph: Graph, k: usize) -> Result<Self> {
        let n = matrix.size();
        if graph.len() != n {
            return Err(Error::Schema(format!("graph has {} points, metric has {n}", graph.len())));
        }
        if k < 1 || k > n {
            return Err(Error::KOutOfRange { k, n });
        }
        Ok(Self { k, graph, matrix, spec, labels: None })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.len() {
            return Err(Error::Schema(format!("{} labels for {} points", labels.len(), self.len())));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    /// Same points and metric with a different budget.
    pub fn with_k(&self, k: usize) -> Result<Self> {
        if k < 1 || k > self.len() {
            return Err(Error::KOutOfRange { k, n: self.len() });
        }
        Ok(Self { k, ..self.clone() })
    }

    pub fn len(&self) -> usize {
        self.matrix.size()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn matrix(&self) -> &DistanceMatrix<S> {
        &self.matrix
    }

    pub fn spec(&self) -> &MetricSpec<S> {
        &self.spec
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Label of a point, falling back to its id.
    pub fn label(&self, v: usize) -> String {
        self.labels.as_ref().map_or_else(|| v.to_string(), |l| l[v].clone())
    }

    /// Coordinates and norm if the metric is an Lp metric.
    pub fn coords(&self) -> Option<(&[Vec<S>], LpNorm)> {
        match &self.spec {
            MetricSpec::Lp { coords, norm } => Some((coords, *norm)),
            _ => None,
        }
    }
}

impl<S: Scalar> Metric<S> for Instance<S> {
    fn size(&self) -> usize {
        self.len()
    }

    fn dist(&self, a: usize, b: usize) -> S {
        self.matrix.dist(a, b)
    }
}

impl<S: Scalar, M: Metric<S> + ?Sized> Metric<S> for &M {
    fn size(&self) -> usize {
        (**self).size()
    }

    fn dist(&self, a: usize, b: usize) -> S {
        (**self).dist(a, b)
    }
}

struct HeapItem<S>(S, usize);

impl<S: PartialOrd> PartialEq for HeapItem<S> {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl<S: PartialOrd> Eq for HeapItem<S> {}

impl<S: PartialOrd> PartialOrd for HeapItem<S> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<S: PartialOrd> Ord for HeapItem<S> {
    // reversed so that BinaryHeap pops the smallest distance
    fn cmp(&self, other: &Self) -> Ordering {
        other.0.partial_cmp(&self.0).unwrap_or(Ordering::Equal).then(other.1.cmp(&self.1))
    }
}

/// Single-source shortest paths; `None` if some point is unreachable.
fn dijkstra<S: Scalar>(adj: &[Vec<(usize, S)>], s: usize) -> Option<Vec<S>> {
    let n = adj.len();
    let mut dist: Vec<Option<S>> = vec![None; n];
    let mut done = vec![false; n];
    let mut heap = BinaryHeap::new();
    dist[s] = Some(S::zero());
    heap.push(HeapItem(S::zero(), s));
    while let Some(HeapItem(d, u)) = heap.pop() {
        if done[u] {
            continue;
        }
        done[u] = true;
        for &(v, w) in &adj[u] {
            let nd = d + w;
            if dist[v].is_none_or(|cur| nd < cur) {
                dist[v] = Some(nd);
                heap.push(HeapItem(nd, v));
            }
        }
    }
    dist.into_iter().collect()
}
