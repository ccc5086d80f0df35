use crate::error::{Error, Result};
use crate::model::{
    binary_search_min_feasible, candidate_radii, Algorithm, Clustering, Instance, Metric, Mode, Objective,
    SearchStrategy, SolveReport,
};
use crate::scalar::Scalar;

const INF: u32 = u32::MAX;
const NONE: usize = usize::MAX;

/// `d′(u, v)`: the largest distance from `u` to a point on the tree path `u → v`.
#[derive(Clone, Debug)]
pub struct PathMaxTable<S> {
    n: usize,
    d: Vec<S>,
}

impl<S: Scalar> PathMaxTable<S> {
    /// One BFS per source.
    pub fn new<M: Metric<S>>(m: &M, tree: &crate::model::Graph) -> Self {
        let n = tree.len();
        let all = vec![true; n];
        let mut d = vec![S::zero(); n * n];
        for u in 0..n {
            let (order, parent) = tree.bfs_tree(u, &all);
            let row = &mut d[u * n..(u + 1) * n];
            for &w in order.iter().skip(1) {
                let here = m.dist(u, w);
                let up = row[parent[w]];
                row[w] = if here > up { here } else { up };
            }
        }
        Self { n, d }
    }

    pub fn get(&self, u: usize, v: usize) -> S {
        self.d[u * self.n + v]
    }
}

/// Minimum-count disjoint k-center on a tree rooted at point 0.
///
/// For `b` inside the subtree of `a`, `table[a][b]` holds `I(a, b)`: the fewest
/// clusters covering the subtree with `a` served by `b`. For `b` outside it holds
/// `F(a, b)`: the fewest clusters when `a`'s parent is served by `b`.
pub struct TreeDp<'a, S> {
    inst: &'a Instance<S>,
    dprime: PathMaxTable<S>,
    children: Vec<Vec<usize>>,
    pre: Vec<usize>,
    tin: Vec<usize>,
    size: Vec<usize>,
    table: Vec<u32>,
    joins: Vec<bool>,
    best: Vec<usize>,
    radius: Option<S>,
}

impl<'a, S: Scalar> TreeDp<'a, S> {
    pub fn new(inst: &'a Instance<S>) -> Result<Self> {
        let g = inst.graph();
        if !g.is_tree() {
            return Err(Error::NotATree);
        }
        let n = inst.len();
        let (_, parent) = g.bfs_tree(0, &vec![true; n]);
        let mut children = vec![Vec::new(); n];
        for v in 1..n {
            children[parent[v]].push(v);
        }
        let mut pre = Vec::with_capacity(n);
        let mut stack = vec![0];
        while let Some(v) = stack.pop() {
            pre.push(v);
            stack.extend(children[v].iter().rev());
        }
        let mut tin = vec![0; n];
        for (i, &v) in pre.iter().enumerate() {
            tin[v] = i;
        }
        let mut size = vec![1; n];
        for &v in pre.iter().rev() {
            for &c in &children[v] {
                size[v] += size[c];
            }
        }
        Ok(Self {
            inst,
            dprime: PathMaxTable::new(inst.matrix(), g),
            children,
            pre,
            tin,
            size,
            table: vec![0; n * n],
            joins: vec![false; n * n],
            best: vec![NONE; n],
            radius: None,
        })
    }

    pub fn path_max(&self) -> &PathMaxTable<S> {
        &self.dprime
    }

    fn subtree(&self, a: usize) -> &[usize] {
        &self.pre[self.tin[a]..self.tin[a] + self.size[a]]
    }

    fn inside(&self, a: usize, b: usize) -> bool {
        self.tin[a] <= self.tin[b] && self.tin[b] < self.tin[a] + self.size[a]
    }

    fn fill(&mut self, r: S) {
        if self.radius.is_some_and(|x| x == r) {
            return;
        }
        let n = self.inst.len();
        for idx in (0..n).rev() {
            let a = self.pre[idx];
            let at = |table: &Vec<u32>, v: usize, b: usize| table[v * n + b];
            let reach = |b: usize| self.dprime.get(b, a).approx_le(r);
            // for b inside, the child subtree holding b contributes I(child, b) and the others F(child, b)
            let row: Vec<u32> = (0..n)
                .map(|b| {
                    if b == a {
                        self.children[a].iter().fold(1u32, |s, &c| s.saturating_add(at(&self.table, c, a)))
                    } else if self.inside(a, b) {
                        if !reach(b) {
                            return INF;
                        }
                        self.children[a].iter().fold(0u32, |s, &c| s.saturating_add(at(&self.table, c, b)))
                    } else {
                        0
                    }
                })
                .collect();
            let (best, ia) = self
                .subtree(a)
                .iter()
                .map(|&b| (b, row[b]))
                .min_by(|x, y| x.1.cmp(&y.1).then(x.0.cmp(&y.0)))
                .expect("subtree contains a");
            for b in 0..n {
                let v = if self.inside(a, b) {
                    self.joins[a * n + b] = false;
                    row[b]
                } else {
                    let s = self.children[a].iter().fold(0u32, |s, &c| s.saturating_add(at(&self.table, c, b)));
                    let join = reach(b) && s <= ia;
                    self.joins[a * n + b] = join;
                    if join {
                        s
                    } else {
                        ia
                    }
                };
                self.table[a * n + b] = v;
            }
            self.best[a] = best;
        }
        self.radius = Some(r);
    }

    /// Fewest disjoint connected clusters of radius at most `r`.
    pub fn count(&mut self, r: S) -> usize {
        self.fill(r);
        // the root is point 0, so its row starts the table
        self.table[self.best[0]] as usize
    }

    /// A clustering attaining `count(r)`, rebuilt by replaying the recurrence choices top-down.
    pub fn clustering(&mut self, r: S) -> Clustering {
        self.fill(r);
        let n = self.inst.len();
        let mut center_of = vec![NONE; n];
        // (node, serving center, whether the node itself is served by it inside its subtree)
        let mut stack = vec![(0, self.best[0], true)];
        while let Some((a, b, inside)) = stack.pop() {
            let served = inside || self.joins[a * n + b];
            if !served {
                stack.push((a, self.best[a], true));
                continue;
            }
            center_of[a] = b;
            for &c in &self.children[a] {
                let down = b != a && self.inside(c, b);
                stack.push((c, b, down));
            }
        }
        let mut index = vec![NONE; n];
        let mut clusters: Vec<Vec<usize>> = Vec::new();
        let mut centers = Vec::new();
        for v in 0..n {
            let c = center_of[v];
            if index[c] == NONE {
                index[c] = clusters.len();
                clusters.push(Vec::new());
                centers.push(c);
            }
            clusters[index[c]].push(v);
        }
        Clustering::new(clusters, Some(centers), Mode::Disjoint).expect("every center serves itself")
    }
}

pub fn tree_dp_count<S: Scalar>(inst: &Instance<S>, r: S) -> Result<usize> {
    Ok(TreeDp::new(inst)?.count(r))
}

pub fn tree_dp_clustering<S: Scalar>(inst: &Instance<S>, r: S) -> Result<Clustering> {
    Ok(TreeDp::new(inst)?.clustering(r))
}

/// Exact disjoint connected k-center on a tree. For the diameter objective the
/// same clustering is returned with the factor-2 bound `2r`.
pub fn tree_dp_solve<S: Scalar>(
    inst: &Instance<S>,
    objective: Objective,
    search: SearchStrategy,
) -> Result<(SolveReport<S>, Clustering)> {
    let mut dp = TreeDp::new(inst)?;
    let k = inst.k();
    let candidates = candidate_radii(inst.matrix());
    let (r, ()) = binary_search_min_feasible(&candidates, |r| (dp.count(r) <= k).then_some(()), search)
        .expect("one cluster has radius at most the largest distance");
    let c = dp.clustering(r);
    let bound = match objective {
        Objective::Center => r,
        Objective::Diameter => r + r,
    };
    let report = SolveReport::measure(inst, &c, objective, Algorithm::TreeDp, Some(r), Some(bound))?;
    Ok((report, c))
}
