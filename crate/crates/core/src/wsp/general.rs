use crate::model::Metric;
use crate::scalar::Scalar;
use crate::wsp::WellSeparatedPartition;

/// Bookkeeping of one run of the general construction, for checking the growth argument.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GeneralTrace {
    /// Per layer: how many centers were still unassigned when it started, and how many it took.
    pub layers: Vec<(usize, usize)>,
    /// Every accepted growth step as `(|N_s|, group size before the step)`.
    pub growth: Vec<(usize, usize)>,
}

pub fn partition_general_metric<S: Scalar, M: Metric<S>>(m: &M, centers: &[usize], r: S) -> WellSeparatedPartition<S> {
    partition_general_metric_traced(m, centers, r).0
}

/// Layer-by-layer group growth: a group absorbs everything within `2r` of its
/// last ring while the ring is at least twice the group; the final ring is
/// deferred to later layers.
pub fn partition_general_metric_traced<S: Scalar, M: Metric<S>>(
    m: &M,
    centers: &[usize],
    r: S,
) -> (WellSeparatedPartition<S>, GeneralTrace) {
    let two_r = r + r;
    let mut sorted = centers.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let mut unassigned = sorted;
    let mut layers = Vec::new();
    let mut trace = GeneralTrace::default();
    while !unassigned.is_empty() {
        let entering = unassigned.len();
        // candidates for this layer, kept sorted so `u` is always the smallest id
        let mut open = unassigned.clone();
        let mut assigned_here = Vec::new();
        let mut groups = Vec::new();
        while let Some(&u) = open.first() {
            open.remove(0);
            let mut group = vec![u];
            let mut ring = vec![u];
            while !open.is_empty() {
                let (next, rest): (Vec<usize>, Vec<usize>) =
                    open.iter().partition(|&&x| ring.iter().any(|&v| m.dist(v, x).approx_le(two_r)));
                open = rest;
                if next.len() >= 2 * group.len() {
                    trace.growth.push((next.len(), group.len()));
                    group.extend_from_slice(&next);
                    ring = next;
                } else {
                    break;
                }
            }
            assigned_here.extend_from_slice(&group);
            groups.push(group);
        }
        assigned_here.sort_unstable();
        unassigned.retain(|x| assigned_here.binary_search(x).is_err());
        trace.layers.push((entering, assigned_here.len()));
        layers.push(groups);
    }
    (WellSeparatedPartition::from_layers(m, r, layers), trace)
}
