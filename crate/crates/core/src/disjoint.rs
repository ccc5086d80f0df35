//! Turning an overlapping greedy cover into disjoint connected clusters, and
//! the disjoint solvers built on it.

use crate::error::{Error, Result};
use crate::greedy::{greedy_clustering_limited, greedy_with_given_centers, CenterOrder, GreedyOutput};
use crate::model::{
    binary_search_min_feasible, candidate_radii, candidate_radii_from, cluster_diameter, cluster_radius, Algorithm,
    Clustering, Instance, Mode, Objective, SearchStrategy, SolveReport,
};
use crate::scalar::Scalar;
use crate::wsp::{
    partition_doubling, partition_general_metric, partition_lp, partition_two_centers, WellSeparatedPartition,
};

const NONE: usize = usize::MAX;

/// State of the finalized clusters after one layer has been processed.
#[derive(Clone, Debug, PartialEq)]
pub struct LayerTrace<S> {
    pub max_radius: S,
    pub max_diameter: S,
    /// `(2i−1)r + Σ_{j≤i} h_j` for this layer `i` (1-based).
    pub radius_bound: S,
    /// `(4i−2)r + h_1 + 2Σ_{2≤j≤i} h_j`.
    pub diameter_bound: S,
    /// Finalized clusters are pairwise disjoint and each is connected.
    pub disjoint_connected: bool,
    /// The clusters of this layer did not overlap each other after the group merge.
    pub layer_internally_disjoint: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DisjointOutput<S> {
    pub clustering: Clustering,
    pub trace: Vec<LayerTrace<S>>,
}

/// Center-objective bound `(2ℓ−1)r + Σ h_i` of a partition.
pub fn radius_bound<S: Scalar>(p: &WellSeparatedPartition<S>) -> S {
    prefix_radius_bound(p.r, &p.h)
}

/// Diameter-objective bound `(4ℓ−2)r + h_1 + 2Σ_{i≥2} h_i` of a partition.
pub fn diameter_bound<S: Scalar>(p: &WellSeparatedPartition<S>) -> S {
    prefix_diameter_bound(p.r, &p.h)
}

fn prefix_radius_bound<S: Scalar>(r: S, h: &[S]) -> S {
    let i = S::from_count(h.len());
    let sum = h.iter().fold(S::zero(), |a, &x| a + x);
    if h.is_empty() {
        return S::zero();
    }
    (i + i - S::one()) * r + sum
}

fn prefix_diameter_bound<S: Scalar>(r: S, h: &[S]) -> S {
    let Some((&h1, rest)) = h.split_first() else {
        return S::zero();
    };
    let i = S::from_count(h.len());
    let four = S::from_count(4);
    let tail = rest.iter().fold(S::zero(), |a, &x| a + x);
    (four * i - S::from_count(2)) * r + h1 + tail + tail
}

pub fn bound_for<S: Scalar>(objective: Objective, p: &WellSeparatedPartition<S>) -> S {
    match objective {
        Objective::Center => radius_bound(p),
        Objective::Diameter => diameter_bound(p),
    }
}

struct Finalized {
    center: usize,
    members: Vec<usize>,
}

/// Makes the clusters of `g` disjoint using the layers of `p`.
///
/// Overlapping clusters inside one group are merged first (the smaller center
/// id survives). Layers are then added in order: a cluster that meets no
/// finalized cluster is finalized, one that meets a single finalized point is
/// absorbed by its owner, and otherwise its BFS tree is cut above every shared
/// point and each piece is absorbed by the owner of its shared point.
pub fn make_disjoint<S: Scalar>(
    inst: &Instance<S>,
    g: &GreedyOutput<S>,
    p: &WellSeparatedPartition<S>,
) -> Result<DisjointOutput<S>> {
    let n = inst.len();
    let mut index_of = vec![NONE; n];
    for (i, &c) in g.centers.iter().enumerate() {
        index_of[c] = i;
    }
    let mut seen = vec![false; g.centers.len()];
    for (_, group) in p.groups() {
        for &c in group {
            if c >= n || index_of[c] == NONE || seen[index_of[c]] {
                return Err(Error::PartitionMismatch);
            }
            seen[index_of[c]] = true;
        }
    }
    if seen.iter().any(|s| !s) {
        return Err(Error::PartitionMismatch);
    }

    let mut owner = vec![NONE; n];
    let mut finals: Vec<Finalized> = Vec::new();
    let mut trace = Vec::with_capacity(p.layers.len());
    let mut in_set = vec![false; n];

    for (li, layer) in p.layers.iter().enumerate() {
        let mut pending: Vec<(usize, Vec<usize>)> =
            layer.iter().flat_map(|group| merge_group(g, &index_of, group, n)).collect();
        pending.sort_by_key(|t| t.0);
        let layer_internally_disjoint = pairwise_disjoint(pending.iter().map(|t| t.1.as_slice()), n);

        for (root, tree) in pending {
            let shared: Vec<usize> = tree.iter().copied().filter(|&v| owner[v] != NONE).collect();
            match shared.len() {
                0 => {
                    let id = finals.len();
                    for &v in &tree {
                        owner[v] = id;
                    }
                    finals.push(Finalized { center: root, members: tree });
                }
                1 => {
                    let id = owner[shared[0]];
                    absorb(&mut finals, &mut owner, id, &tree);
                }
                _ => {
                    for &v in &tree {
                        in_set[v] = true;
                    }
                    let (order, parent) = inst.graph().bfs_tree(root, &in_set);
                    for &v in &tree {
                        in_set[v] = false;
                    }
                    debug_assert_eq!(order.len(), tree.len());
                    // a piece is named by its topmost point: the root or a shared point whose parent edge is cut
                    let mut piece = vec![NONE; n];
                    let mut pieces: Vec<(usize, Vec<usize>)> = Vec::new();
                    let mut piece_index = vec![NONE; n];
                    for &v in &order {
                        let top = if v == root || owner[v] != NONE { v } else { piece[parent[v]] };
                        piece[v] = top;
                        if piece_index[top] == NONE {
                            piece_index[top] = pieces.len();
                            pieces.push((top, Vec::new()));
                        }
                        pieces[piece_index[top]].1.push(v);
                    }
                    for (top, members) in pieces {
                        if owner[top] != NONE {
                            let id = owner[top];
                            absorb(&mut finals, &mut owner, id, &members);
                        } else {
                            let id = finals.len();
                            for &v in &members {
                                owner[v] = id;
                            }
                            finals.push(Finalized { center: top, members });
                        }
                    }
                }
            }
        }

        let mut max_radius = S::zero();
        let mut max_diameter = S::zero();
        let mut ok = pairwise_disjoint(finals.iter().map(|f| f.members.as_slice()), n);
        for f in &finals {
            max_radius = max_radius.max_of(cluster_radius(inst.matrix(), &f.members, f.center));
            max_diameter = max_diameter.max_of(cluster_diameter(inst.matrix(), &f.members));
            ok &= inst.graph().induces_connected(&f.members);
        }
        trace.push(LayerTrace {
            max_radius,
            max_diameter,
            radius_bound: prefix_radius_bound(p.r, &p.h[..=li]),
            diameter_bound: prefix_diameter_bound(p.r, &p.h[..=li]),
            disjoint_connected: ok,
            layer_internally_disjoint,
        });
    }

    let (clusters, centers): (Vec<Vec<usize>>, Vec<usize>) = finals.into_iter().map(|f| (f.members, f.center)).unzip();
    let clustering = Clustering::new(clusters, Some(centers), Mode::Disjoint)?;
    Ok(DisjointOutput { clustering, trace })
}

/// Merges overlapping clusters of one group; returns `(center, sorted members)` pairs.
fn merge_group<S: Scalar>(
    g: &GreedyOutput<S>,
    index_of: &[usize],
    group: &[usize],
    n: usize,
) -> Vec<(usize, Vec<usize>)> {
    let mut sets: Vec<(usize, Vec<usize>)> = group.iter().map(|&c| (c, g.clusters[index_of[c]].clone())).collect();
    sets.sort_by_key(|s| s.0);
    let mut mark = vec![NONE; n];
    loop {
        let mut merged = false;
        'scan: for i in 0..sets.len() {
            for &v in &sets[i].1 {
                mark[v] = i;
            }
            for j in i + 1..sets.len() {
                if sets[j].1.iter().any(|&v| mark[v] == i) {
                    let (_, other) = sets.remove(j);
                    let target = &mut sets[i].1;
                    target.extend(other);
                    target.sort_unstable();
                    target.dedup();
                    merged = true;
                    break 'scan;
                }
            }
        }
        mark.fill(NONE);
        if !merged {
            return sets;
        }
    }
}

fn absorb(finals: &mut [Finalized], owner: &mut [usize], id: usize, points: &[usize]) {
    for &v in points {
        if owner[v] == NONE {
            owner[v] = id;
            finals[id].members.push(v);
        }
    }
    finals[id].members.sort_unstable();
}

fn pairwise_disjoint<'a>(sets: impl Iterator<Item = &'a [usize]>, n: usize) -> bool {
    let mut seen = vec![false; n];
    for s in sets {
        for &v in s {
            if seen[v] {
                return false;
            }
            seen[v] = true;
        }
    }
    true
}

/// Which well-separated partition the disjoint pipeline uses.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum PartitionStrategy {
    General,
    Lp,
    /// Constructive doubling partition for the given (trusted) doubling dimension.
    Doubling(u32),
    /// Grid partition when the instance has coordinates, general otherwise.
    #[default]
    Auto,
}

fn build_partition<S: Scalar>(
    inst: &Instance<S>,
    centers: &[usize],
    r: S,
    strategy: PartitionStrategy,
) -> Result<(WellSeparatedPartition<S>, Algorithm)> {
    Ok(match strategy {
        PartitionStrategy::General => (partition_general_metric(inst.matrix(), centers, r), Algorithm::DisjointGeneral),
        PartitionStrategy::Lp => {
            let (coords, norm) =
                inst.coords().ok_or_else(|| Error::Precondition("grid partition needs an lp metric".into()))?;
            (partition_lp(coords, norm, centers, r), Algorithm::DisjointLp)
        }
        PartitionStrategy::Doubling(dim) => {
            (partition_doubling(inst.matrix(), centers, r, dim), Algorithm::DisjointDoubling)
        }
        PartitionStrategy::Auto => match inst.coords() {
            Some(_) => build_partition(inst, centers, r, PartitionStrategy::Lp)?,
            None => build_partition(inst, centers, r, PartitionStrategy::General)?,
        },
    })
}

/// Everything the disjoint pipeline computed.
#[derive(Clone, Debug, PartialEq)]
pub struct DisjointSolve<S> {
    pub report: SolveReport<S>,
    pub clustering: Clustering,
    pub greedy: GreedyOutput<S>,
    pub partition: WellSeparatedPartition<S>,
    pub trace: Vec<LayerTrace<S>>,
}

pub fn solve_disjoint<S: Scalar>(
    inst: &Instance<S>,
    objective: Objective,
    strategy: PartitionStrategy,
) -> Result<(SolveReport<S>, Clustering)> {
    let s = solve_disjoint_detailed(inst, objective, strategy, SearchStrategy::Binary)?;
    Ok((s.report, s.clustering))
}

/// Smallest candidate `r` at which greedy growth with radius `r` needs at most
/// `k` centers, then partition and disjointify those centers.
pub fn solve_disjoint_detailed<S: Scalar>(
    inst: &Instance<S>,
    objective: Objective,
    strategy: PartitionStrategy,
    search: SearchStrategy,
) -> Result<DisjointSolve<S>> {
    let k = inst.k();
    let candidates = candidate_radii(inst.matrix());
    let (r, greedy) = binary_search_min_feasible(
        &candidates,
        |r| greedy_clustering_limited(inst, r, CenterOrder::SmallestId, k),
        search,
    )
    .ok_or_else(|| Error::Infeasible(format!("connectivity graph has more than {k} components")))?;
    let (partition, algorithm) = build_partition(inst, &greedy.centers, r, strategy)?;
    let out = make_disjoint(inst, &greedy, &partition)?;
    let bound = bound_for(objective, &partition);
    let report = SolveReport::measure(inst, &out.clustering, objective, algorithm, Some(r), Some(bound))?;
    Ok(DisjointSolve { report, clustering: out.clustering, greedy, partition, trace: out.trace })
}

/// Options for the two-center solver.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TwoCenterOptions {
    /// Only try this many seeded random center pairs instead of all of them.
    pub sampled_pairs: Option<(usize, u64)>,
}

/// Disjoint 2-approximation for `k = 2`: the best pair of grown clusters, merged
/// around a common point if they overlap.
pub fn solve_two_center_disjoint<S: Scalar>(
    inst: &Instance<S>,
    options: TwoCenterOptions,
) -> Result<(SolveReport<S>, Clustering)> {
    if inst.k() != 2 {
        return Err(Error::Precondition(format!("two-center solver needs k = 2, got {}", inst.k())));
    }
    let n = inst.len();
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    if let Some((count, seed)) = options.sampled_pairs {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        pairs.shuffle(&mut rng);
        pairs.truncate(count.max(1));
        pairs.sort_unstable();
    }
    let candidates = candidate_radii(inst.matrix());
    let (r, out) = binary_search_min_feasible(
        &candidates,
        |r| pairs.iter().find_map(|&(a, b)| greedy_with_given_centers(inst, &[a, b], r)),
        SearchStrategy::Binary,
    )
    .ok_or_else(|| Error::Infeasible("no pair of centers covers the instance".into()))?;
    let (a, b) = (&out.clusters[0], &out.clusters[1]);
    let common: Vec<usize> = a.iter().copied().filter(|v| b.binary_search(v).is_ok()).collect();
    let clustering = if common.is_empty() {
        Clustering::new(out.clusters.clone(), Some(out.centers.clone()), Mode::Disjoint)?
    } else {
        let mut all = a.clone();
        all.extend_from_slice(b);
        all.sort_unstable();
        all.dedup();
        Clustering::new(vec![all], Some(vec![common[0]]), Mode::Disjoint)?
    };
    let report =
        SolveReport::measure(inst, &clustering, Objective::Center, Algorithm::TwoCenter, Some(r), Some(r + r))?;
    Ok((report, clustering))
}

pub(crate) fn check_centers<S: Scalar>(inst: &Instance<S>, centers: &[usize]) -> Result<()> {
    if centers.is_empty() {
        return Err(Error::MissingCenters);
    }
    let mut seen = vec![false; inst.len()];
    for &c in centers {
        if c >= inst.len() {
            return Err(Error::PointOutOfRange(c));
        }
        if seen[c] {
            return Err(Error::InvalidInput(format!("center {c} listed twice")));
        }
        seen[c] = true;
    }
    if centers.len() > inst.k() {
        return Err(Error::Precondition(format!("{} centers exceed k = {}", centers.len(), inst.k())));
    }
    Ok(())
}

/// Disjoint clustering around the given centers: grow each at the smallest
/// covering radius, partition the centers, disjointify.
pub fn solve_assignment_given_centers<S: Scalar>(
    inst: &Instance<S>,
    centers: &[usize],
    objective: Objective,
) -> Result<(SolveReport<S>, Clustering)> {
    let s = solve_assignment_detailed(inst, centers, objective)?;
    Ok((s.report, s.clustering))
}

pub fn solve_assignment_detailed<S: Scalar>(
    inst: &Instance<S>,
    centers: &[usize],
    objective: Objective,
) -> Result<DisjointSolve<S>> {
    check_centers(inst, centers)?;
    let candidates = candidate_radii_from(inst.matrix(), centers);
    let (r, greedy) = binary_search_min_feasible(
        &candidates,
        |r| greedy_with_given_centers(inst, centers, r),
        SearchStrategy::Binary,
    )
    .ok_or_else(|| Error::Infeasible("the centers cannot reach every point".into()))?;
    let partition = if centers.len() <= 2 {
        partition_two_centers(inst.matrix(), centers, r)?
    } else {
        partition_general_metric(inst.matrix(), centers, r)
    };
    let out = make_disjoint(inst, &greedy, &partition)?;
    let bound = bound_for(objective, &partition);
    let report = SolveReport::measure(inst, &out.clustering, objective, Algorithm::Assignment, Some(r), Some(bound))?;
    Ok(DisjointSolve { report, clustering: out.clustering, greedy, partition, trace: out.trace })
}

/// Splits off spanning-tree leaves from the largest clusters until there are exactly `k`.
pub fn pad_to_k<S: Scalar>(inst: &Instance<S>, c: &Clustering) -> Result<Clustering> {
    if c.mode() != Mode::Disjoint {
        return Err(Error::Precondition("padding needs a disjoint clustering".into()));
    }
    let k = inst.k();
    if c.len() > k {
        return Err(Error::Precondition(format!("{} clusters already exceed k = {k}", c.len())));
    }
    let (mut clusters, mut centers, mode) = c.clone().into_parts();
    let n = inst.len();
    let mut in_set = vec![false; n];
    while clusters.len() < k {
        let (idx, _) = clusters
            .iter()
            .enumerate()
            .filter(|(_, cl)| cl.len() >= 2)
            .max_by(|a, b| a.1.len().cmp(&b.1.len()).then(b.0.cmp(&a.0)))
            .ok_or(Error::KOutOfRange { k, n })?;
        let root = centers.as_ref().map_or(clusters[idx][0], |cs| cs[idx]);
        for &v in &clusters[idx] {
            in_set[v] = true;
        }
        let (order, parent) = inst.graph().bfs_tree(root, &in_set);
        for &v in &clusters[idx] {
            in_set[v] = false;
        }
        let mut has_child = vec![false; n];
        for &v in &order {
            if parent[v] != NONE {
                has_child[parent[v]] = true;
            }
        }
        let leaf = order
            .iter()
            .copied()
            .filter(|&v| v != root && !has_child[v])
            .max()
            .ok_or_else(|| Error::Precondition("cluster is not connected".into()))?;
        clusters[idx].retain(|&v| v != leaf);
        clusters.push(vec![leaf]);
        if let Some(cs) = centers.as_mut() {
            cs.push(leaf);
        }
    }
    Clustering::new(clusters, centers, mode)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::greedy::greedy_clustering;
    use crate::model::{validate_clustering, DistanceMatrix, Graph};

    fn path6() -> Instance<f64> {
        let ones = [(0, 3), (1, 3), (2, 3), (2, 4), (2, 5)];
        let m = DistanceMatrix::from_fn(6, |i, j| if ones.contains(&(i, j)) { 1.0 } else { 2.0 });
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]).unwrap();
        Instance::new(m, g, 2).unwrap()
    }

    fn path(n: usize, k: usize) -> Instance<f64> {
        let m = DistanceMatrix::from_fn(n, |i, j| (j - i) as f64);
        let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        Instance::new(m, Graph::from_edges(n, &edges).unwrap(), k).unwrap()
    }

    #[test]
    fn already_disjoint_is_unchanged() {
        let inst = path(4, 4);
        let g = greedy_clustering(&inst, 0.0, CenterOrder::SmallestId);
        let p = WellSeparatedPartition::from_layers(inst.matrix(), 0.0, vec![vec![vec![0], vec![1], vec![2], vec![3]]]);
        let out = make_disjoint(&inst, &g, &p).unwrap();
        assert_eq!(out.clustering.clusters(), &[vec![0], vec![1], vec![2], vec![3]]);
    }

    #[test]
    fn path6_two_center_merge() {
        let inst = path6();
        let g = greedy_with_given_centers(&inst, &[2, 3], 1.0).unwrap();
        assert_eq!(g.clusters, vec![vec![2, 3, 4, 5], vec![0, 1, 2, 3]]);
        let p = partition_two_centers(inst.matrix(), &[2, 3], 1.0).unwrap();
        let out = make_disjoint(&inst, &g, &p).unwrap();
        assert_eq!(out.clustering.clusters(), &[vec![0, 1, 2, 3, 4, 5]]);
        assert_eq!(out.clustering.centers(), Some(&[2][..]));
        assert!(out.trace[0].max_radius <= radius_bound(&p));
        assert_eq!(radius_bound(&p), 2.0);
    }

    #[test]
    fn tree_split_across_two_owners() {
        // path 0..6; layer 1 owns {0,1} around 0 and {5,6} around 6, layer 2 grows {1..5} around 3
        let inst = path(7, 3);
        let g = GreedyOutput {
            centers: vec![0, 6, 3],
            clusters: vec![vec![0, 1], vec![5, 6], vec![1, 2, 3, 4, 5]],
            radius: 2.0,
        };
        let p = WellSeparatedPartition::from_layers(inst.matrix(), 2.0, vec![vec![vec![0], vec![6]], vec![vec![3]]]);
        let out = make_disjoint(&inst, &g, &p).unwrap();
        // cutting above 1 and 5 leaves pieces {1}, {5}, {2,3,4}; the root piece stays on its own
        assert_eq!(out.clustering.clusters(), &[vec![0, 1], vec![5, 6], vec![2, 3, 4]]);
        assert_eq!(out.clustering.centers(), Some(&[0, 6, 3][..]));
        assert!(out.trace.iter().all(|t| t.disjoint_connected));
        assert!(validate_clustering(&inst, &out.clustering).is_feasible());
    }

    #[test]
    fn mismatched_partition_is_rejected() {
        let inst = path(3, 3);
        let g = greedy_clustering(&inst, 0.0, CenterOrder::SmallestId);
        let p = WellSeparatedPartition::from_layers(inst.matrix(), 0.0, vec![vec![vec![0], vec![1]]]);
        assert!(matches!(make_disjoint(&inst, &g, &p), Err(Error::PartitionMismatch)));
    }

    #[test]
    fn disjoint_pipeline_on_path6() {
        let (rep, c) = solve_disjoint(&path6(), Objective::Center, PartitionStrategy::General).unwrap();
        assert!(rep.feasible);
        assert!(rep.value <= rep.bound.unwrap());
        assert!(c.len() <= 2);
        let all = path6().with_k(6).unwrap();
        let (rep, c) = solve_disjoint(&all, Objective::Center, PartitionStrategy::Auto).unwrap();
        assert_eq!(rep.value, 0.0);
        assert_eq!(c.len(), 6);
    }

    #[test]
    fn two_center_solver() {
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (2, 3), (2, 4)]).unwrap();
        let spider =
            Instance::from_graph_metric(vec![(0, 1, 1.0), (0, 2, 2.0), (2, 3, 1.0), (2, 4, 1.0)], g, 2).unwrap();
        let (rep, c) = solve_two_center_disjoint(&spider, TwoCenterOptions::default()).unwrap();
        assert_eq!(rep.value, 1.0);
        assert_eq!(c.clusters(), &[vec![0, 1], vec![2, 3, 4]]);
        assert!(solve_two_center_disjoint(&spider.with_k(3).unwrap(), TwoCenterOptions::default()).is_err());
    }

    #[test]
    fn two_far_cliques() {
        let m = DistanceMatrix::from_fn(6, |i, j| if i / 3 == j / 3 { 1.0 } else { 10.0 });
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]).unwrap();
        let inst = Instance::new(m, g, 2).unwrap();
        let (rep, c) = solve_two_center_disjoint(&inst, TwoCenterOptions::default()).unwrap();
        assert_eq!(rep.value, 1.0);
        assert_eq!(c.clusters(), &[vec![0, 1, 2], vec![3, 4, 5]]);
    }

    #[test]
    fn assignment_pipeline() {
        let inst = path6();
        let (rep, c) = solve_assignment_given_centers(&inst, &[2, 3], Objective::Center).unwrap();
        assert!(rep.feasible);
        assert!(rep.value <= 3.0 * 2.0);
        assert!(rep.value <= rep.bound.unwrap());
        assert!(c.centers().unwrap().iter().all(|x| [2, 3].contains(x)));
        let all: Vec<usize> = (0..6).collect();
        let (rep, _) = solve_assignment_given_centers(&inst.with_k(6).unwrap(), &all, Objective::Center).unwrap();
        assert_eq!(rep.value, 0.0);
        assert!(matches!(solve_assignment_given_centers(&inst, &[], Objective::Center), Err(Error::MissingCenters)));
    }

    #[test]
    fn padding() {
        let inst = path(3, 3);
        let one = Clustering::new(vec![vec![0, 1, 2]], Some(vec![1]), Mode::Disjoint).unwrap();
        let padded = pad_to_k(&inst, &one).unwrap();
        assert_eq!(padded.len(), 3);
        assert!(validate_clustering(&inst, &padded).is_feasible());
        let same = pad_to_k(&inst.with_k(1).unwrap(), &one).unwrap();
        assert_eq!(same, one);
        let inst = path6();
        let merged = Clustering::new(vec![(0..6).collect()], Some(vec![3]), Mode::Disjoint).unwrap();
        let padded = pad_to_k(&inst, &merged).unwrap();
        assert_eq!(padded.clusters(), &[vec![0, 1, 2, 3, 4], vec![5]]);
        let nd = Clustering::new(vec![vec![0, 1, 2]], None, Mode::NonDisjoint).unwrap();
        assert!(pad_to_k(&inst, &nd).is_err());
    }
}
