use crate::error::{Error, Result};
use crate::instances::GadgetMeta;
use crate::model::{Clustering, DistanceMatrix, Graph, Instance, Mode};
use crate::scalar::Scalar;

/// `S(1), ..., S(m)` with `S(1) = 0`, `S(2) = 1` and `S(t+1) = S(t)·(S(t)+1)`.
pub fn s_sequence(m: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(m);
    for t in 1..=m {
        let next = match t {
            1 => 0,
            2 => 1,
            _ => {
                let s: u64 = out[t - 2];
                s.checked_mul(s + 1).expect("S(t) fits in u64 for the supported range")
            }
        };
        out.push(next);
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Entry {
    Val(u64),
    Special(usize),
}

fn coord_distance(a: Entry, b: Entry) -> u64 {
    match (a, b) {
        _ if a == b => 0,
        (Entry::Val(_), Entry::Val(_)) | (Entry::Special(_), Entry::Special(_)) => 2,
        _ => 1,
    }
}

/// Vectors over per-coordinate value ranges with at most one special entry.
/// Points without specials come first, then by special position and value order.
struct Layered {
    points: Vec<Vec<Entry>>,
    centers: Vec<usize>,
}

fn layered(m: usize, specials: usize) -> Layered {
    let s = s_sequence(m + 1);
    // coordinate i (0-based) takes values 1..=S(m−i)+1
    let sizes: Vec<u64> = (0..m).map(|i| s[m - i - 1] + 1).collect();
    let mut plain = vec![vec![]];
    for &size in &sizes {
        plain = plain
            .into_iter()
            .flat_map(|p: Vec<Entry>| {
                (1..=size).map(move |v| {
                    let mut p = p.clone();
                    p.push(Entry::Val(v));
                    p
                })
            })
            .collect();
    }
    let mut points = plain.clone();
    let centers = (0..plain.len()).collect();
    for pos in 0..m {
        let mut seen = std::collections::BTreeSet::new();
        for p in &plain {
            for j in 0..specials {
                let mut q = p.clone();
                q[pos] = Entry::Special(j);
                if seen.insert(q.clone()) {
                    points.push(q);
                }
            }
        }
    }
    Layered { points, centers }
}

/// The instance, its special-free points and each point's special coordinate.
type Built<S> = (Instance<S>, Vec<usize>, Vec<Option<usize>>);

fn build<S: Scalar>(m: usize, specials: usize) -> Result<Built<S>> {
    let Layered { points, centers } = layered(m, specials);
    let n = points.len();
    let index: std::collections::BTreeMap<&[Entry], usize> =
        points.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
    let mut edges = Vec::new();
    for &c in &centers {
        for j in 0..specials {
            let mut q = points[c].clone();
            q[0] = Entry::Special(j);
            edges.push((c, index[q.as_slice()]));
        }
    }
    for (a, p) in points.iter().enumerate() {
        for h in 0..m.saturating_sub(1) {
            let Entry::Special(j) = p[h] else { continue };
            // b agrees with a outside {h, h+1}, has the same special at h+1 and a value at h
            for (b, q) in points.iter().enumerate() {
                let agree = (0..m).all(|i| i == h || i == h + 1 || p[i] == q[i]);
                if agree
                    && q[h + 1] == Entry::Special(j)
                    && matches!(q[h], Entry::Val(_))
                    && matches!(p[h + 1], Entry::Val(_))
                {
                    edges.push((a, b));
                }
            }
        }
    }
    let graph = Graph::from_edges_dedup(n, &edges)?;
    let matrix = DistanceMatrix::from_fn(n, |i, j| {
        S::from_count(points[i].iter().zip(&points[j]).map(|(&a, &b)| coord_distance(a, b)).sum::<u64>() as usize)
    });
    let labels = points
        .iter()
        .map(|p| {
            let parts: Vec<String> = p
                .iter()
                .map(|e| match *e {
                    Entry::Val(v) => v.to_string(),
                    Entry::Special(_) if specials == 1 => "⊥".to_owned(),
                    Entry::Special(j) => format!("⊥{}", j + 1),
                })
                .collect();
            format!("({})", parts.join(","))
        })
        .collect();
    let special_at = points.iter().map(|p| p.iter().position(|e| matches!(e, Entry::Special(_)))).collect();
    let k = centers.len();
    Ok((Instance::new(matrix, graph, k)?.with_labels(labels)?, centers, special_at))
}

/// The layered instance whose greedy centers `C` force radius `2m−1` on any
/// disjoint assignment. Roles: `centers` (= C), `c_prime` (⊥ outside the last coordinate).
pub fn gen_worstcase_i<S: Scalar>(m: usize) -> Result<GadgetMeta<S>> {
    if !(1..=4).contains(&m) {
        return Err(Error::InvalidInput(format!("m = {m} must be in 1..=4")));
    }
    let (inst, centers, special_at) = build::<S>(m, 1)?;
    let c_prime = (0..inst.len()).filter(|&v| special_at[v].is_some_and(|i| i + 1 < m)).collect();
    Ok(GadgetMeta::new(inst).with_role("centers", centers).with_role("c_prime", c_prime))
}

/// The variant with `k+1` distinct specials. Role `A`: the special-free points, `|A| = k`.
pub fn gen_worstcase_iprime<S: Scalar>(m: usize) -> Result<GadgetMeta<S>> {
    if !(2..=3).contains(&m) {
        return Err(Error::InvalidInput(format!("m = {m} must be in 2..=3")));
    }
    let k = s_sequence(m + 1)[m] as usize;
    let (inst, centers, _) = build::<S>(m, k + 1)?;
    Ok(GadgetMeta::new(inst).with_role("A", centers))
}

/// The disjoint radius-2 clustering of the `c_prime` construction: every other
/// point joins a graph neighbor in `c_prime` (for `m = 1`, the original centers).
pub fn radius_two_clustering<S: Scalar>(meta: &GadgetMeta<S>) -> Result<Clustering> {
    let inst = &meta.instance;
    let centers = if meta.role("c_prime").is_empty() { meta.role("centers") } else { meta.role("c_prime") };
    if centers.is_empty() {
        return Err(Error::MissingCenters);
    }
    let n = inst.len();
    let mut index = vec![usize::MAX; n];
    for (i, &c) in centers.iter().enumerate() {
        index[c] = i;
    }
    let mut clusters: Vec<Vec<usize>> = centers.iter().map(|&c| vec![c]).collect();
    for v in 0..n {
        if index[v] != usize::MAX {
            continue;
        }
        let host = inst
            .graph()
            .neighbors(v)
            .iter()
            .copied()
            .find(|&w| index[w] != usize::MAX)
            .ok_or_else(|| Error::InvalidInput(format!("point {v} has no neighboring center")))?;
        clusters[index[host]].push(v);
    }
    Clustering::new(clusters, Some(centers.to_vec()), Mode::Disjoint)
}
