//! Well-separated partitions of a center set.
//!
//! An `r`-well-separated partition arranges the centers into layers of groups
//! such that groups on the same layer are more than `2r` apart and every group
//! on layer `i` has diameter at most `h_i`. All constructions take global point
//! ids of the centers and a metric over the whole instance.

mod doubling;
mod general;
mod lp;

use std::fmt;

use serde_json::json;

use crate::error::{Error, Result};
use crate::model::io::number_from_scalar;
use crate::model::{cluster_diameter, Metric};
use crate::scalar::Scalar;

pub use doubling::{doubling_dimension_upper_bound, partition_doubling};
pub use general::{partition_general_metric, partition_general_metric_traced, GeneralTrace};
pub use lp::{lp_color, partition_lp};

#[derive(Clone, Debug, PartialEq)]
pub struct WellSeparatedPartition<S> {
    pub r: S,
    /// `layers[i][j]` is group `j` of layer `i`, a sorted list of center ids.
    pub layers: Vec<Vec<Vec<usize>>>,
    /// Per-layer diameter parameter; constructions store the measured maximum group diameter.
    pub h: Vec<S>,
}

impl<S: Scalar> WellSeparatedPartition<S> {
    /// Builds a partition from layers, dropping empty layers, sorting groups and
    /// measuring `h`.
    pub fn from_layers<M: Metric<S>>(m: &M, r: S, layers: Vec<Vec<Vec<usize>>>) -> Self {
        let layers: Vec<Vec<Vec<usize>>> = layers
            .into_iter()
            .map(|layer| {
                let mut groups: Vec<Vec<usize>> = layer
                    .into_iter()
                    .filter(|g| !g.is_empty())
                    .map(|mut g| {
                        g.sort_unstable();
                        g
                    })
                    .collect();
                groups.sort();
                groups
            })
            .filter(|l| !l.is_empty())
            .collect();
        let h = layers.iter().map(|l| l.iter().fold(S::zero(), |acc, g| acc.max_of(cluster_diameter(m, g)))).collect();
        Self { r, layers, h }
    }

    pub fn layer_count(&self) -> usize {
        self.layers.len()
    }

    pub fn max_h(&self) -> S {
        self.h.iter().fold(S::zero(), |acc, &x| acc.max_of(x))
    }

    pub fn groups(&self) -> impl Iterator<Item = (usize, &[usize])> {
        self.layers.iter().enumerate().flat_map(|(i, l)| l.iter().map(move |g| (i, g.as_slice())))
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "r": number_from_scalar(self.r),
            "layers": self.layers,
            "h": self.h.iter().map(|&x| number_from_scalar(x)).collect::<Vec<_>>(),
        })
    }
}

/// Single layer; the two centers share a group iff they are within `2r`.
pub fn partition_two_centers<S: Scalar, M: Metric<S>>(
    m: &M,
    centers: &[usize],
    r: S,
) -> Result<WellSeparatedPartition<S>> {
    let layer = match *centers {
        [c] => vec![vec![c]],
        [a, b] if m.dist(a, b).approx_gt(r + r) => vec![vec![a], vec![b]],
        [a, b] => vec![vec![a, b]],
        _ => {
            return Err(Error::Precondition(format!(
                "two-center partition needs 1 or 2 centers, got {}",
                centers.len()
            )))
        }
    };
    Ok(WellSeparatedPartition::from_layers(m, r, vec![layer]))
}

#[derive(Clone, Debug, PartialEq)]
pub enum WspViolation<S> {
    NotACenter(usize),
    Missing(usize),
    Repeated(usize),
    EmptyGroup { layer: usize },
    TooClose { layer: usize, a: usize, b: usize, distance: S },
    TooWide { layer: usize, diameter: S, h: S },
    LayerCountMismatch,
}

impl<S: Scalar> fmt::Display for WspViolation<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WspViolation::NotACenter(v) => write!(f, "point {v} is not a center"),
            WspViolation::Missing(v) => write!(f, "center {v} is in no group"),
            WspViolation::Repeated(v) => write!(f, "center {v} is in several groups"),
            WspViolation::EmptyGroup { layer } => write!(f, "empty group on layer {layer}"),
            WspViolation::TooClose { layer, a, b, distance } => {
                write!(f, "layer {layer}: {a} and {b} in different groups at distance {distance}")
            }
            WspViolation::TooWide { layer, diameter, h } => {
                write!(f, "layer {layer}: group diameter {diameter} exceeds h = {h}")
            }
            WspViolation::LayerCountMismatch => write!(f, "h has wrong length"),
        }
    }
}

/// Checks coverage, disjointness, same-layer separation and group diameters.
pub fn verify_wsp<S: Scalar, M: Metric<S>>(
    m: &M,
    centers: &[usize],
    p: &WellSeparatedPartition<S>,
) -> Vec<WspViolation<S>> {
    let mut out = Vec::new();
    if p.h.len() != p.layers.len() {
        out.push(WspViolation::LayerCountMismatch);
        return out;
    }
    let mut is_center = vec![false; m.size()];
    for &c in centers {
        is_center[c] = true;
    }
    let mut seen = vec![false; m.size()];
    for (i, layer) in p.layers.iter().enumerate() {
        for g in layer {
            if g.is_empty() {
                out.push(WspViolation::EmptyGroup { layer: i });
            }
            for &v in g {
                if v >= m.size() || !is_center[v] {
                    out.push(WspViolation::NotACenter(v));
                } else if seen[v] {
                    out.push(WspViolation::Repeated(v));
                } else {
                    seen[v] = true;
                }
            }
            let diameter = cluster_diameter(m, g);
            if diameter.approx_gt(p.h[i]) {
                out.push(WspViolation::TooWide { layer: i, diameter, h: p.h[i] });
            }
        }
        for (gi, a_group) in layer.iter().enumerate() {
            for b_group in &layer[gi + 1..] {
                for &a in a_group {
                    for &b in b_group {
                        let distance = m.dist(a, b);
                        if !distance.approx_gt(p.r + p.r) {
                            out.push(WspViolation::TooClose { layer: i, a, b, distance });
                        }
                    }
                }
            }
        }
    }
    out.extend(centers.iter().filter(|&&c| !seen[c]).map(|&c| WspViolation::Missing(c)));
    out
}

/// `⌊log_3 k⌋`.
pub fn floor_log3(k: usize) -> u32 {
    let mut t = 0;
    let mut pow = 3_usize;
    while pow <= k {
        t += 1;
        pow = pow.saturating_mul(3);
    }
    t
}

/// `⌊log_{3/2} k⌋`, the largest `t` with `3^t ≤ k·2^t`.
pub fn floor_log_three_halves(k: usize) -> u32 {
    let (mut num, mut den) = (1_u128, 1_u128);
    let mut t = 0;
    loop {
        num *= 3;
        den *= 2;
        if num > k as u128 * den {
            return t;
        }
        t += 1;
    }
}

/// Layer bound `1 + ⌊log_{3/2} k⌋` of the general construction.
pub fn general_layer_bound(k: usize) -> usize {
    1 + floor_log_three_halves(k) as usize
}

/// Group diameter bound `4r⌊log_3 k⌋` of the general construction.
pub fn general_diameter_bound<S: Scalar>(k: usize, r: S) -> S {
    S::from_count(4 * floor_log3(k) as usize) * r
}

/// Group diameter bound `2r·d^{1+1/p}` of the grid construction, in floating point.
pub fn lp_diameter_bound(dim: usize, norm: crate::scalar::LpNorm, r: f64) -> f64 {
    2.0 * r * (dim as f64).powf(1.0 + norm.reciprocal())
}

/// Layer bound `2^{4·dim}` of the doubling construction.
pub fn doubling_layer_bound(dim: u32) -> usize {
    1_usize.checked_shl(4 * dim).unwrap_or(usize::MAX)
}
