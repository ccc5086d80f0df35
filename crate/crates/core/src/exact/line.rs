use crate::error::{Error, Result};
use crate::model::{
    binary_search_min_feasible, candidate_radii, Algorithm, Clustering, Instance, Metric, Mode, Objective,
    SearchStrategy, SolveReport,
};
use crate::scalar::Scalar;

/// How far a cluster centered at a path position may stretch.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ReachRule {
    /// Every point of the stretch is within `r` of the center.
    #[default]
    CenterDistance,
    /// Every pair of points in each half-stretch (including the center) is within `r`.
    Pairwise,
}

/// Reach intervals in path positions: a center at position `i` can cover `a[i]..=b[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineReach {
    /// `order[p]` is the point at position `p`.
    pub order: Vec<usize>,
    pub a: Vec<usize>,
    pub b: Vec<usize>,
}

fn path_order<S: Scalar>(inst: &Instance<S>) -> Result<Vec<usize>> {
    inst.graph().path_order().ok_or(Error::NotAPath)
}

/// Smallest `l` such that every `j` in `l..=i` passes `ok(j, i)`, scanning towards position 0.
fn stretch(i: usize, mut ok: impl FnMut(usize) -> bool) -> usize {
    let mut l = i;
    while l > 0 && ok(l - 1) {
        l -= 1;
    }
    l
}

pub fn line_reach<S: Scalar>(inst: &Instance<S>, r: S, rule: ReachRule) -> Result<LineReach> {
    let order = path_order(inst)?;
    let n = order.len();
    let d = |p: usize, q: usize| inst.matrix().dist(order[p], order[q]);
    let mut a = vec![0; n];
    let mut b = vec![0; n];
    for i in 0..n {
        a[i] = stretch(i, |j| d(j, i).approx_le(r));
        let right = stretch(n - 1 - i, |j| d(n - 1 - j, i).approx_le(r));
        b[i] = n - 1 - right;
    }
    if rule == ReachRule::Pairwise {
        // a pairwise-close stretch ending at i is a center-close one that is also pairwise-close up to i - 1
        for i in 1..n {
            a[i] = a[i].max(a[i - 1]);
        }
        for i in (0..n.saturating_sub(1)).rev() {
            b[i] = b[i].min(b[i + 1]);
        }
    }
    Ok(LineReach { order, a, b })
}

/// Fewest overlapping path segments of radius `r`: cover the first uncovered
/// position by the reach interval that extends furthest right.
pub fn line_center_cover<S: Scalar>(inst: &Instance<S>, r: S, rule: ReachRule) -> Result<Clustering> {
    let LineReach { order, a, b } = line_reach(inst, r, rule)?;
    let n = order.len();
    let mut clusters = Vec::new();
    let mut centers = Vec::new();
    let mut u = 0;
    while u < n {
        let i = (0..n)
            .filter(|&i| a[i] <= u && u <= b[i])
            .max_by(|&x, &y| b[x].cmp(&b[y]).then(y.cmp(&x)))
            .expect("position u reaches itself");
        clusters.push(order[i.min(u)..=b[i]].to_vec());
        centers.push(order[i]);
        u = b[i] + 1;
    }
    Clustering::new(clusters, Some(centers), Mode::NonDisjoint)
}

/// `None` when more than `k` segments are needed at radius `r`.
pub fn line_center_nondisjoint<S: Scalar>(inst: &Instance<S>, r: S, rule: ReachRule) -> Result<Option<Clustering>> {
    let c = line_center_cover(inst, r, rule)?;
    Ok((c.len() <= inst.k()).then_some(c))
}

/// Left-to-right cut into maximal segments whose pairwise distances are at most `r`.
pub fn line_diameter_segments<S: Scalar>(inst: &Instance<S>, r: S) -> Result<Clustering> {
    let order = path_order(inst)?;
    let m = inst.matrix();
    let mut clusters: Vec<Vec<usize>> = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    for &v in &order {
        if !current.iter().all(|&w| m.dist(v, w).approx_le(r)) {
            clusters.push(std::mem::take(&mut current));
        }
        current.push(v);
    }
    if !current.is_empty() {
        clusters.push(current);
    }
    Clustering::new(clusters, None, Mode::Disjoint)
}

pub fn line_diameter<S: Scalar>(inst: &Instance<S>, r: S) -> Result<Option<Clustering>> {
    let c = line_diameter_segments(inst, r)?;
    Ok((c.len() <= inst.k()).then_some(c))
}

fn solve_with<S: Scalar>(
    inst: &Instance<S>,
    objective: Objective,
    algorithm: Algorithm,
    search: SearchStrategy,
    mut probe: impl FnMut(S) -> Result<Option<Clustering>>,
) -> Result<(SolveReport<S>, Clustering)> {
    path_order(inst)?;
    let candidates = candidate_radii(inst.matrix());
    let (r, c) = binary_search_min_feasible(&candidates, |r| probe(r).ok().flatten(), search)
        .ok_or_else(|| Error::Infeasible("no segmentation into k pieces".into()))?;
    let report = SolveReport::measure(inst, &c, objective, algorithm, Some(r), Some(r))?;
    Ok((report, c))
}

/// Optimal non-disjoint connected k-center on a path.
pub fn solve_line_center<S: Scalar>(
    inst: &Instance<S>,
    rule: ReachRule,
    search: SearchStrategy,
) -> Result<(SolveReport<S>, Clustering)> {
    solve_with(inst, Objective::Center, Algorithm::LineCenter, search, |r| line_center_nondisjoint(inst, r, rule))
}

/// Optimal connected k-diameter on a path; the segments are disjoint, so this
/// is optimal in both modes.
pub fn solve_line_diameter<S: Scalar>(
    inst: &Instance<S>,
    search: SearchStrategy,
) -> Result<(SolveReport<S>, Clustering)> {
    solve_with(inst, Objective::Diameter, Algorithm::LineDiameter, search, |r| line_diameter(inst, r))
}
