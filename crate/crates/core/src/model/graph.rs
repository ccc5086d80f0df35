use std::collections::VecDeque;

use crate::error::{Error, Result};

/// Undirected simple graph on points `0..n`, stored as sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Self { adj: vec![Vec::new(); n], edge_count: 0 }
    }

    /// Builds a graph, rejecting self-loops, duplicate edges and out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n || u == v {
                return Err(Error::BadEdge(u, v));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                let dup = list.windows(2).find(|w| w[0] == w[1]).map(|w| w[0]).unwrap();
                return Err(Error::BadEdge(u, dup));
            }
        }
        Ok(Self { adj, edge_count: edges.len() })
    }

    /// Like [`Graph::from_edges`] but silently drops duplicates.
    pub fn from_edges_dedup(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut norm: Vec<(usize, usize)> = edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        norm.sort_unstable();
        norm.dedup();
        Self::from_edges(n, &norm)
    }

    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.len() <= 1 || self.components().len() == 1
    }

    pub fn is_tree(&self) -> bool {
        !self.is_empty() && self.edge_count + 1 == self.len() && self.is_connected()
    }

    /// Vertices in path order starting from the smaller-id endpoint, if the graph is a path.
    pub fn path_order(&self) -> Option<Vec<usize>> {
        let n = self.len();
        if n == 0 || !self.is_tree() || self.adj.iter().any(|a| a.len() > 2) {
            return None;
        }
        if n == 1 {
            return Some(vec![0]);
        }
        let start = (0..n).find(|&v| self.adj[v].len() == 1)?;
        let mut order = Vec::with_capacity(n);
        let mut prev = usize::MAX;
        let mut cur = start;
        loop {
            order.push(cur);
            match self.adj[cur].iter().copied().find(|&v| v != prev) {
                Some(next) if order.len() < n => {
                    prev = cur;
                    cur = next;
                }
                _ => break,
            }
        }
        Some(order)
    }

    /// True iff `set` is nonempty and induces a connected subgraph.
    pub fn induces_connected(&self, set: &[usize]) -> bool {
        let mut mask = vec![false; self.len()];
        for &v in set {
            mask[v] = true;
        }
        self.induces_connected_masked(set, &mut mask)
    }

    /// Connectivity check using a caller-provided membership mask, which is
    /// cleared for `set` on return.
    pub(crate) fn induces_connected_masked(&self, set: &[usize], mask: &mut [bool]) -> bool {
        let Some(&first) = set.first() else {
            return false;
        };
        let mut reached = 1;
        let mut queue = VecDeque::from([first]);
        mask[first] = false;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if mask[v] {
                    mask[v] = false;
                    reached += 1;
                    queue.push_back(v);
                }
            }
        }
        let ok = reached == set.len();
        for &v in set {
            mask[v] = false;
        }
        ok
    }

    /// BFS spanning tree of the subgraph induced by `set` (given as a mask),
    /// rooted at `root`, visiting neighbors in ascending id order. Returns the
    /// visit order and a parent array (`usize::MAX` for the root and for
    /// unreached points).
    pub fn bfs_tree(&self, root: usize, in_set: &[bool]) -> (Vec<usize>, Vec<usize>) {
        let mut parent = vec![usize::MAX; self.len()];
        let mut seen = vec![false; self.len()];
        let mut order = vec![root];
        seen[root] = true;
        let mut i = 0;
        while i < order.len() {
            let u = order[i];
            i += 1;
            for &v in &self.adj[u] {
                if in_set[v] && !seen[v] {
                    seen[v] = true;
                    parent[v] = u;
                    order.push(v);
                }
            }
        }
        (order, parent)
    }
}
