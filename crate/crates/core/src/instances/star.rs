use crate::error::{Error, Result};
use crate::instances::GadgetMeta;
use crate::model::{DistanceMatrix, Graph, Instance};
use crate::scalar::Scalar;

/// Source instances of the star reductions. Vertices, elements and leaves are 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StarKind {
    /// Partition the vertices of a graph into at most `k` cliques.
    CliqueCover { vertices: usize, edges: Vec<(usize, usize)>, k: usize },
    /// Cover `0..elements` with at most `k` of the sets.
    SetCover { elements: usize, sets: Vec<Vec<usize>>, k: usize },
    /// Separate every pair of leaves by deleting at most `k` star edges.
    Multicut { leaves: usize, pairs: Vec<(usize, usize)>, k: usize },
}

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}

fn check_pairs(n: usize, pairs: &[(usize, usize)], what: &str) -> Result<()> {
    match pairs.iter().find(|&&(u, v)| u >= n || v >= n || u == v) {
        Some(&(u, v)) => Err(bad(format!("{what} ({u}, {v}) is invalid for {n} vertices"))),
        None => Ok(()),
    }
}

fn one_two<S: Scalar>(close: bool) -> S {
    if close {
        S::one()
    } else {
        S::one() + S::one()
    }
}

fn star_graph(n: usize, root: usize, leaves: impl Iterator<Item = usize>) -> Result<Graph> {
    Graph::from_edges(n, &leaves.map(|v| (root, v)).collect::<Vec<_>>())
}

/// Star instances whose optimum is 1 on yes-instances and 2 otherwise:
/// clique cover for the non-disjoint diameter, set cover for the non-disjoint
/// center, multicut for the disjoint diameter (with budget `k + 1`).
pub fn gen_star_gadget<S: Scalar>(kind: &StarKind) -> Result<GadgetMeta<S>> {
    match kind {
        StarKind::CliqueCover { vertices, edges, k } => {
            let n = *vertices;
            check_pairs(n, edges, "edge")?;
            let adjacent = |i: usize, j: usize| edges.iter().any(|&(u, v)| (u, v) == (i, j) || (v, u) == (i, j));
            // root 0, vertex i at i + 1
            let m = DistanceMatrix::from_fn(n + 1, |a, b| one_two(a == 0 || b == 0 || adjacent(a - 1, b - 1)));
            let inst = Instance::new(m, star_graph(n + 1, 0, 1..=n)?, *k)?;
            Ok(GadgetMeta::new(inst).with_role("root", vec![0]).with_role("leaves", (1..=n).collect()))
        }
        StarKind::SetCover { elements, sets, k } => {
            let (n, s) = (*elements, sets.len());
            if let Some(e) = sets.iter().flatten().find(|&&e| e >= n) {
                return Err(bad(format!("element {e} outside 0..{n}")));
            }
            if let Some(e) = (0..n).find(|e| !sets.iter().any(|set| set.contains(e))) {
                return Err(bad(format!("element {e} is in no set")));
            }
            // z = 0, element i at 1 + i, set j at 1 + n + j
            let role = |p: usize| {
                if p == 0 {
                    (0, 0)
                } else if p <= n {
                    (1, p - 1)
                } else {
                    (2, p - 1 - n)
                }
            };
            let m = DistanceMatrix::from_fn(1 + n + s, |a, b| {
                one_two(match (role(a), role(b)) {
                    ((0, _), (2, _)) | ((2, _), (0, _)) | ((2, _), (2, _)) => true,
                    ((1, e), (2, j)) | ((2, j), (1, e)) => sets[j].contains(&e),
                    _ => false,
                })
            });
            let inst = Instance::new(m, star_graph(1 + n + s, 0, 1..1 + n + s)?, *k)?;
            Ok(GadgetMeta::new(inst)
                .with_role("root", vec![0])
                .with_role("elements", (1..=n).collect())
                .with_role("sets", (1 + n..1 + n + s).collect()))
        }
        StarKind::Multicut { leaves, pairs, k } => {
            let n = *leaves;
            check_pairs(n, pairs, "pair")?;
            let paired = |i: usize, j: usize| pairs.iter().any(|&(u, v)| (u, v) == (i, j) || (v, u) == (i, j));
            let m = DistanceMatrix::from_fn(n + 1, |a, b| one_two(a == 0 || b == 0 || !paired(a - 1, b - 1)));
            let inst = Instance::new(m, star_graph(n + 1, 0, 1..=n)?, k + 1)?;
            Ok(GadgetMeta::new(inst).with_role("root", vec![0]).with_role("leaves", (1..=n).collect()))
        }
    }
}

fn limit(n: usize, what: &str) -> Result<()> {
    if n > 20 {
        return Err(Error::LimitExceeded(format!("{n} {what}, at most 20")));
    }
    Ok(())
}

/// Whether the vertices split into at most `k` cliques (subset DP, up to 20 vertices).
pub fn clique_cover_brute_force(vertices: usize, edges: &[(usize, usize)], k: usize) -> Result<bool> {
    limit(vertices, "vertices")?;
    check_pairs(vertices, edges, "edge")?;
    let mut adj = vec![0u32; vertices];
    for &(u, v) in edges {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    let full = (1u32 << vertices) - 1;
    let is_clique = |set: u32| (0..vertices).all(|v| set >> v & 1 == 0 || (set & !(1 << v)) & !adj[v] == 0);
    let mut fewest = vec![usize::MAX; 1 << vertices];
    fewest[0] = 0;
    for set in 1..=full {
        // the clique holding the lowest vertex
        let low = set & set.wrapping_neg();
        let rest = set & !low;
        let mut sub = rest;
        loop {
            let clique = sub | low;
            if is_clique(clique) && fewest[(set & !clique) as usize] != usize::MAX {
                fewest[set as usize] = fewest[set as usize].min(fewest[(set & !clique) as usize] + 1);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
    }
    Ok(fewest[full as usize] <= k)
}

fn subsets_up_to(n: usize, k: usize) -> impl Iterator<Item = u32> {
    (0u32..1 << n).filter(move |s| s.count_ones() as usize <= k)
}

/// Whether at most `k` sets cover `0..elements` (up to 20 sets).
pub fn set_cover_brute_force(elements: usize, sets: &[Vec<usize>], k: usize) -> Result<bool> {
    limit(sets.len(), "sets")?;
    Ok(subsets_up_to(sets.len(), k)
        .any(|pick| (0..elements).all(|e| sets.iter().enumerate().any(|(j, s)| pick >> j & 1 == 1 && s.contains(&e)))))
}

/// Whether cutting at most `k` star edges separates every pair: every pair needs
/// a cut endpoint (up to 20 leaves).
pub fn multicut_brute_force(leaves: usize, pairs: &[(usize, usize)], k: usize) -> Result<bool> {
    limit(leaves, "leaves")?;
    check_pairs(leaves, pairs, "pair")?;
    Ok(subsets_up_to(leaves, k).any(|cut| pairs.iter().all(|&(u, v)| (cut >> u | cut >> v) & 1 == 1)))
}
