use crate::model::{candidate_radii_from, Metric};
use crate::scalar::Scalar;
use crate::wsp::{doubling_layer_bound, WellSeparatedPartition};

struct Ball {
    center: usize,
    members: Vec<usize>,
}

/// Greedy cover of `points` (sorted) by balls of radius `r` centered at uncovered points.
fn ball_cover<S: Scalar, M: Metric<S>>(m: &M, points: &[usize], r: S) -> Vec<Ball> {
    let mut left: Vec<usize> = points.to_vec();
    let mut out = Vec::new();
    while let Some(&c) = left.first() {
        let (members, rest): (Vec<usize>, Vec<usize>) = left.iter().partition(|&&x| m.dist(c, x).approx_le(r));
        left = rest;
        out.push(Ball { center: c, members });
    }
    out
}

/// Ball cover at radius `r`, improved until no ball center has `2^{4·dim}` or more
/// other centers within `4r` (or re-covering stops helping), then layered by a
/// greedy coloring of the "centers within `4r`" graph.
pub fn partition_doubling<S: Scalar, M: Metric<S>>(
    m: &M,
    centers: &[usize],
    r: S,
    dim: u32,
) -> WellSeparatedPartition<S> {
    let mut sorted = centers.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let four_r = r + r + r + r;
    let threshold = doubling_layer_bound(dim);
    let mut balls = ball_cover(m, &sorted, r);
    let near = |a: &Ball, b: &Ball| m.dist(a.center, b.center).approx_le(four_r);

    let mut improved = true;
    while improved {
        improved = false;
        let mut i = 0;
        while i < balls.len() {
            let neighbors: Vec<usize> = (0..balls.len()).filter(|&j| j != i && near(&balls[i], &balls[j])).collect();
            if neighbors.len() < threshold {
                i += 1;
                continue;
            }
            let mut pool: Vec<usize> = balls[i].members.clone();
            for &j in &neighbors {
                pool.extend_from_slice(&balls[j].members);
            }
            pool.sort_unstable();
            let recover = ball_cover(m, &pool, r);
            if recover.len() < neighbors.len() + 1 {
                let mut drop = neighbors;
                drop.push(i);
                drop.sort_unstable();
                for &j in drop.iter().rev() {
                    balls.swap_remove(j);
                }
                balls.extend(recover);
                balls.sort_by_key(|b| b.center);
                improved = true;
                i = 0;
            } else {
                i += 1;
            }
        }
    }

    let mut color = vec![usize::MAX; balls.len()];
    for i in 0..balls.len() {
        let mut used: Vec<usize> = (0..i).filter(|&j| near(&balls[i], &balls[j])).map(|j| color[j]).collect();
        used.sort_unstable();
        used.dedup();
        color[i] = used.iter().enumerate().find(|(want, &have)| *want != have).map_or(used.len(), |(w, _)| w);
    }
    let layer_count = color.iter().map(|&c| c + 1).max().unwrap_or(0);
    let mut layers = vec![Vec::new(); layer_count];
    for (ball, &c) in balls.into_iter().zip(&color) {
        layers[c].push(ball.members);
    }
    WellSeparatedPartition::from_layers(m, r, layers)
}

/// An upper bound on the doubling dimension of the metric restricted to `points`:
/// `⌈log₂⌉` of the largest greedy cover of any ball `B(x, R)` by balls of radius `R/2`,
/// over all centers `x` and candidate radii `R`.
pub fn doubling_dimension_upper_bound<S: Scalar, M: Metric<S>>(m: &M, points: &[usize]) -> u32 {
    let two = S::one() + S::one();
    let radii = candidate_radii_from(m, points);
    let mut worst = 1;
    for &x in points {
        for &radius in &radii {
            let ball: Vec<usize> = points.iter().copied().filter(|&y| m.dist(x, y).approx_le(radius)).collect();
            worst = worst.max(ball_cover(m, &ball, radius / two).len());
        }
    }
    usize::BITS - (worst - 1).leading_zeros()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::DistanceMatrix;
    use crate::wsp::verify_wsp;

    #[test]
    fn far_apart_is_one_layer() {
        let m = DistanceMatrix::from_fn(4, |_, _| 5.0);
        let p = partition_doubling(&m, &[0, 1, 2, 3], 1.0, 1);
        assert_eq!(p.layers, vec![vec![vec![0], vec![1], vec![2], vec![3]]]);
    }

    #[test]
    fn close_points_share_a_ball() {
        let m = DistanceMatrix::from_fn(3, |_, _| 1.0);
        let p = partition_doubling(&m, &[0, 1, 2], 1.0, 1);
        assert_eq!(p.layers, vec![vec![vec![0, 1, 2]]]);
    }

    #[test]
    fn line_spacing_two_r() {
        // neighbors within 4r are the two nearest on each side, so greedy coloring needs 3 colors
        let m = DistanceMatrix::from_fn(9, |i, j| 2.0 * (j - i) as f64);
        let ids: Vec<usize> = (0..9).collect();
        let p = partition_doubling(&m, &ids, 1.0, 1);
        assert!(p.groups().all(|(_, g)| g.len() == 1));
        assert_eq!(p.layer_count(), 3);
        assert!(verify_wsp(&m, &ids, &p).is_empty());
        assert!(p.max_h() <= 2.0);
    }

    #[test]
    fn improvement_reduces_crowded_covers() {
        // dim = 0 gives threshold 1: any ball with a neighbor gets re-covered if that helps
        let xs = [0.0, 1.5, 3.0, 1.0];
        let m = DistanceMatrix::from_fn(4, |i, j| f64::abs(xs[i] - xs[j]));
        let p = partition_doubling(&m, &[0, 1, 2, 3], 1.0, 0);
        assert!(verify_wsp(&m, &[0, 1, 2, 3], &p).is_empty());
        assert!(p.max_h() <= 2.0);
    }

    #[test]
    fn dimension_bound_of_a_line() {
        let m = DistanceMatrix::from_fn(8, |i, j| (j - i) as f64);
        let ids: Vec<usize> = (0..8).collect();
        let d = doubling_dimension_upper_bound(&m, &ids);
        assert!((1..=2).contains(&d), "{d}");
        let single = DistanceMatrix::<f64>::from_fn(1, |_, _| 0.0);
        assert_eq!(doubling_dimension_upper_bound(&single, &[0]), 0);
    }
}
