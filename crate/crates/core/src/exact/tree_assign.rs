use crate::disjoint::check_centers;
use crate::error::{Error, Result};
use crate::model::{
    binary_search_min_feasible, candidate_radii_from, Algorithm, Clustering, Instance, Metric, Mode, Objective,
    SearchStrategy, SolveReport,
};
use crate::scalar::Scalar;

const NONE: usize = usize::MAX;

/// A center reachable from a node, and the child it was passed up from
/// (`NONE` when the center hangs directly off the node).
#[derive(Clone, Copy, Debug)]
struct Reach {
    center: usize,
    via: usize,
}

/// Disjoint connected assignment to the fixed `centers` with radius at most `r`,
/// or `None` if there is none.
///
/// Every center is split into one leaf copy per incident edge, so each component
/// of non-center points is solved on its own with the copies as leaves. The
/// `n(v)` sets are points forced to share `v`'s center; `z(v)` are centers below `v`
/// that all of `n(v)` can reach.
pub fn tree_assignment<S: Scalar>(inst: &Instance<S>, centers: &[usize], r: S) -> Result<Option<Clustering>> {
    let g = inst.graph();
    if !g.is_tree() {
        return Err(Error::NotATree);
    }
    check_centers(inst, centers)?;
    let n = inst.len();
    let m = inst.matrix();
    let mut is_center = vec![false; n];
    for &c in centers {
        is_center[c] = true;
    }
    let mut owner = vec![NONE; n];
    for &c in centers {
        owner[c] = c;
    }
    let open: Vec<bool> = is_center.iter().map(|&c| !c).collect();
    let mut seen = vec![false; n];
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut z: Vec<Vec<Reach>> = vec![Vec::new(); n];
    // ascending ids make each component's root its smallest point
    for root in 0..n {
        if is_center[root] || seen[root] {
            continue;
        }
        let (order, parent) = g.bfs_tree(root, &open);
        for &v in &order {
            seen[v] = true;
            members[v] = vec![v];
        }
        for &v in order.iter().rev() {
            let reach_all = |c: usize, group: &[usize]| group.iter().all(|&x| m.dist(x, c).approx_le(r));
            let mut zv: Vec<Reach> = Vec::new();
            for &u in g.neighbors(v) {
                if is_center[u] {
                    if reach_all(u, &members[v]) {
                        zv.push(Reach { center: u, via: NONE });
                    }
                } else if u != parent[v] {
                    for zr in &z[u] {
                        if reach_all(zr.center, &members[v]) {
                            zv.push(Reach { center: zr.center, via: u });
                        }
                    }
                }
            }
            zv.sort_by_key(|x| x.center);
            if zv.is_empty() {
                if v == root {
                    return Ok(None);
                }
                let folded = std::mem::take(&mut members[v]);
                members[parent[v]].extend(folded);
            }
            z[v] = zv;
        }
        for &v in &order {
            if owner[v] != NONE {
                continue;
            }
            let mut pick = *z[v].first().expect("unassigned points keep a reachable center");
            let c = pick.center;
            let mut x = v;
            loop {
                for &y in &members[x] {
                    owner[y] = c;
                }
                if pick.via == NONE {
                    break;
                }
                x = pick.via;
                pick = *z[x].iter().find(|e| e.center == c).expect("centers are passed up along the path");
            }
        }
    }
    let mut clusters: Vec<Vec<usize>> = centers.iter().map(|_| Vec::new()).collect();
    let mut index = vec![NONE; n];
    for (i, &c) in centers.iter().enumerate() {
        index[c] = i;
    }
    for v in 0..n {
        clusters[index[owner[v]]].push(v);
    }
    Ok(Some(Clustering::new(clusters, Some(centers.to_vec()), Mode::Disjoint)?))
}

/// Smallest radius at which the fixed centers admit a disjoint connected assignment on a tree.
pub fn solve_tree_assignment<S: Scalar>(
    inst: &Instance<S>,
    centers: &[usize],
    search: SearchStrategy,
) -> Result<(SolveReport<S>, Clustering)> {
    tree_assignment(inst, centers, S::zero())?;
    let candidates = candidate_radii_from(inst.matrix(), centers);
    let (r, c) = binary_search_min_feasible(&candidates, |r| tree_assignment(inst, centers, r).ok().flatten(), search)
        .ok_or_else(|| Error::Infeasible("the centers cannot reach every point".into()))?;
    let report = SolveReport::measure(inst, &c, Objective::Center, Algorithm::TreeAssign, Some(r), Some(r))?;
    Ok((report, c))
}
