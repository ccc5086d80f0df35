use std::collections::BTreeMap;

use crate::model::Metric;
use crate::scalar::{LpNorm, Scalar};
use crate::wsp::{partition_general_metric, WellSeparatedPartition};

struct LpPoints<'a, S> {
    coords: &'a [Vec<S>],
    norm: LpNorm,
}

impl<S: Scalar> Metric<S> for LpPoints<'_, S> {
    fn size(&self) -> usize {
        self.coords.len()
    }

    fn dist(&self, a: usize, b: usize) -> S {
        S::lp_norm(self.coords[a].iter().zip(&self.coords[b]).map(|(&x, &y)| x - y), self.norm)
    }
}

/// Color parameters of stack `s` at recursion level `level` (1-based): entry `c`
/// is the color that base color `c` takes in that stack.
fn stack_params(level: usize, s: i64) -> Vec<usize> {
    let len = level + 1;
    // a full pointer round rotates (params, missing) one step to the right
    let q = (s / level as i64) as usize % len;
    let t = (s % level as i64) as usize;
    let mut v: Vec<usize> = (0..len).collect();
    v.rotate_right(q);
    for p in 0..t {
        v.swap(p, level);
    }
    v.truncate(level);
    v
}

/// Color in `0..=d` and glued-block key of the grid cell with nonnegative index `cell`.
///
/// At level `ℓ` the base color `c` changes exactly after stacks `s ≡ c (mod ℓ)`,
/// so consecutive stacks between two such changes glue into one block.
pub fn lp_color(cell: &[i64]) -> (usize, Vec<i64>) {
    let mut color = 0;
    let mut runs = Vec::with_capacity(cell.len());
    for (i, &j) in cell.iter().enumerate() {
        let level = i + 1;
        let l = level as i64;
        runs.push((j + l - 1 - color as i64).div_euclid(l));
        color = stack_params(level, j)[color];
    }
    (color, runs)
}

/// Grid partition: cells of side `2r` anchored at the coordinate-wise minimum,
/// colored with `d+1` colors, one layer per color and one group per glued block.
/// For `r = 0` every cell would be a single point, so the general construction is used.
pub fn partition_lp<S: Scalar>(coords: &[Vec<S>], norm: LpNorm, centers: &[usize], r: S) -> WellSeparatedPartition<S> {
    let metric = LpPoints { coords, norm };
    if r <= S::zero() {
        return partition_general_metric(&metric, centers, r);
    }
    let dim = coords.first().map_or(0, Vec::len);
    let mins: Vec<S> = (0..dim)
        .map(|i| {
            centers
                .iter()
                .map(|&c| coords[c][i])
                .fold(None, |acc: Option<S>, x| Some(acc.map_or(x, |a| if x < a { x } else { a })))
                .unwrap_or_else(S::zero)
        })
        .collect();
    let width = r + r;
    let mut by_color: Vec<BTreeMap<Vec<i64>, Vec<usize>>> = vec![BTreeMap::new(); dim + 1];
    for &c in centers {
        let cell: Vec<i64> = (0..dim).map(|i| (coords[c][i] - mins[i]).floor_div(width).max(0)).collect();
        let (color, key) = lp_color(&cell);
        by_color[color].entry(key).or_default().push(c);
    }
    let layers = by_color.into_iter().map(|m| m.into_values().collect()).collect();
    WellSeparatedPartition::from_layers(&metric, r, layers)
}
