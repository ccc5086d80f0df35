use crate::model::instance::Metric;
use crate::scalar::Scalar;

/// All pairwise distances plus 0, ascending and deduplicated under the scalar tolerance.
pub fn candidate_radii<S: Scalar, M: Metric<S>>(m: &M) -> Vec<S> {
    let n = m.size();
    let mut values = Vec::with_capacity(n * n.saturating_sub(1) / 2 + 1);
    values.push(S::zero());
    for i in 0..n {
        for j in i + 1..n {
            values.push(m.dist(i, j));
        }
    }
    sort_dedup(values)
}

/// Distances from the given points to every point, plus 0.
pub fn candidate_radii_from<S: Scalar, M: Metric<S>>(m: &M, sources: &[usize]) -> Vec<S> {
    let mut values = vec![S::zero()];
    for &s in sources {
        values.extend((0..m.size()).map(|v| m.dist(s, v)));
    }
    sort_dedup(values)
}

pub(crate) fn sort_dedup<S: Scalar>(mut values: Vec<S>) -> Vec<S> {
    values.sort_by(|a, b| a.partial_cmp(b).expect("distances are comparable"));
    let mut out: Vec<S> = Vec::with_capacity(values.len());
    for v in values {
        match out.last() {
            Some(&last) if last.approx_eq(v) => {}
            _ => out.push(v),
        }
    }
    out
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SearchStrategy {
    /// Leftmost success boundary by bisection; assumes the success set contains a suffix.
    #[default]
    Binary,
    /// Probe every candidate from the smallest up; returns the first success.
    Linear,
}

/// Finds a candidate where `probe` succeeds and its predecessor fails.
///
/// Returns `None` iff the probe fails at the largest candidate (or the list is empty).
pub fn binary_search_min_feasible<S: Scalar, T>(
    candidates: &[S],
    mut probe: impl FnMut(S) -> Option<T>,
    strategy: SearchStrategy,
) -> Option<(S, T)> {
    match strategy {
        SearchStrategy::Linear => candidates.iter().find_map(|&r| probe(r).map(|t| (r, t))),
        SearchStrategy::Binary => {
            let last = *candidates.last()?;
            let mut best = (candidates.len() - 1, probe(last)?);
            // invariant: probe fails at lo - 1 (or lo = 0) and succeeds at best.0
            let mut lo = 0;
            let mut hi = candidates.len() - 1;
            while lo < hi {
                let mid = lo + (hi - lo) / 2;
                match probe(candidates[mid]) {
                    Some(t) => {
                        best = (mid, t);
                        hi = mid;
                    }
                    None => lo = mid + 1,
                }
            }
            Some((candidates[best.0], best.1))
        }
    }
}
