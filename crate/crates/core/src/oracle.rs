//! Brute-force exact solvers for small instances.
//!
//! Every entry point refuses inputs beyond its [`OracleLimits`] and gives up
//! with [`Error::LimitExceeded`] when the step or time budget runs out.

use std::time::{Duration, Instant};

use crate::disjoint::check_centers;
use crate::error::{Error, Result};
use crate::greedy::Grower;
use crate::model::{
    best_center, binary_search_min_feasible, candidate_radii, candidate_radii_from, clustering_cost, Algorithm,
    Clustering, Instance, Metric, Mode, Objective, SearchStrategy, SolveReport,
};
use crate::scalar::Scalar;

const NONE: usize = usize::MAX;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleLimits {
    /// Largest `n` for set-partition and subset enumeration.
    pub max_n_partition: usize,
    /// Largest `k` for center-subset search (ignored when `k ≥ n`).
    pub max_k_subsets: usize,
    /// Search nodes per call.
    pub max_steps: u64,
    pub time_budget: Duration,
}

impl Default for OracleLimits {
    fn default() -> Self {
        Self { max_n_partition: 10, max_k_subsets: 4, max_steps: 50_000_000, time_budget: Duration::from_secs(60) }
    }
}

impl OracleLimits {
    fn check_partition_size(&self, n: usize) -> Result<()> {
        if n > self.max_n_partition {
            return Err(Error::LimitExceeded(format!("n = {n} exceeds {}", self.max_n_partition)));
        }
        Ok(())
    }
}

struct Budget {
    start: Instant,
    limit: Duration,
    steps: u64,
    max_steps: u64,
}

impl Budget {
    fn new(limits: &OracleLimits) -> Self {
        Self { start: Instant::now(), limit: limits.time_budget, steps: 0, max_steps: limits.max_steps }
    }

    fn tick(&mut self) -> Result<()> {
        self.steps += 1;
        if self.steps > self.max_steps {
            return Err(Error::LimitExceeded(format!("more than {} search steps", self.max_steps)));
        }
        if self.steps.is_multiple_of(4096) && self.start.elapsed() > self.limit {
            return Err(Error::LimitExceeded(format!("time budget of {:?} spent", self.limit)));
        }
        Ok(())
    }
}

/// Runs `decide` over the candidates by bisection, surfacing the first error.
fn search_radii<S: Scalar, T>(
    candidates: &[S],
    mut decide: impl FnMut(S) -> Result<Option<T>>,
) -> Result<Option<(S, T)>> {
    let mut failure = None;
    let found = binary_search_min_feasible(
        candidates,
        |r| match decide(r) {
            Ok(t) => t,
            Err(e) => {
                failure.get_or_insert(e);
                None
            }
        },
        SearchStrategy::Binary,
    );
    match failure {
        Some(e) => Err(e),
        None => Ok(found),
    }
}

fn block_cost<S: Scalar>(inst: &Instance<S>, block: &[usize], objective: Objective, pool: &[usize]) -> S {
    let m = inst.matrix();
    let spread = |c: usize| block.iter().fold(S::zero(), |acc, &x| acc.max_of(m.dist(x, c)));
    match objective {
        Objective::Diameter => block.iter().fold(S::zero(), |acc, &c| acc.max_of(spread(c))),
        Objective::Center => block
            .iter()
            .chain(pool)
            .map(|&c| spread(c))
            .fold(None, |acc: Option<S>, x| Some(acc.map_or(x, |a| if x < a { x } else { a })))
            .unwrap_or_else(S::zero),
    }
}

struct Partitioner<'a, S> {
    inst: &'a Instance<S>,
    objective: Objective,
    label: Vec<usize>,
    blocks: Vec<Vec<usize>>,
    best: Option<(S, Vec<usize>)>,
    budget: Budget,
}

impl<S: Scalar> Partitioner<'_, S> {
    /// With points `0..next` placed: can every block still become connected?
    fn viable(&self, next: usize) -> bool {
        let g = self.inst.graph();
        let n = self.inst.len();
        let mut seen = vec![false; n];
        for (b, block) in self.blocks.iter().enumerate() {
            let mut parts = 0;
            let mut stranded = false;
            for &s in block {
                if seen[s] {
                    continue;
                }
                parts += 1;
                let mut open_edge = false;
                let mut stack = vec![s];
                seen[s] = true;
                while let Some(u) = stack.pop() {
                    for &w in g.neighbors(u) {
                        if w >= next {
                            open_edge = true;
                        } else if self.label[w] == b && !seen[w] {
                            seen[w] = true;
                            stack.push(w);
                        }
                    }
                }
                stranded |= !open_edge;
            }
            if parts > 1 && (stranded || next == n) {
                return false;
            }
        }
        true
    }

    fn bound(&self, next: usize) -> S {
        let pool: Vec<usize> = (next..self.inst.len()).collect();
        self.blocks.iter().fold(S::zero(), |acc, b| acc.max_of(block_cost(self.inst, b, self.objective, &pool)))
    }

    fn beaten(&self, value: S) -> bool {
        self.best.as_ref().is_some_and(|(b, _)| !b.approx_gt(value))
    }

    fn run(&mut self, v: usize) -> Result<()> {
        self.budget.tick()?;
        let n = self.inst.len();
        if v == n {
            let value = self.bound(n);
            if !self.beaten(value) {
                self.best = Some((value, self.label.clone()));
            }
            return Ok(());
        }
        let open = (self.blocks.len() + 1).min(self.inst.k());
        for b in 0..open {
            if b == self.blocks.len() {
                self.blocks.push(Vec::new());
            }
            self.label[v] = b;
            self.blocks[b].push(v);
            if self.viable(v + 1) && !self.beaten(self.bound(v + 1)) {
                self.run(v + 1)?;
            }
            self.blocks[b].pop();
            self.label[v] = NONE;
            if self.blocks[b].is_empty() {
                self.blocks.pop();
            }
        }
        Ok(())
    }
}

fn clustering_from_labels<S: Scalar>(inst: &Instance<S>, label: &[usize], objective: Objective) -> Result<Clustering> {
    let count = label.iter().map(|&l| l + 1).max().unwrap_or(0);
    let mut blocks = vec![Vec::new(); count];
    for (v, &l) in label.iter().enumerate() {
        blocks[l].push(v);
    }
    let centers =
        (objective == Objective::Center).then(|| blocks.iter().map(|b| best_center(inst.matrix(), b).0).collect());
    Clustering::new(blocks, centers, Mode::Disjoint)
}

/// Optimal disjoint connected clustering by enumerating restricted growth strings.
/// Among optima the lexicographically first labeling wins.
pub fn exact_disjoint<S: Scalar>(
    inst: &Instance<S>,
    objective: Objective,
    limits: &OracleLimits,
) -> Result<(S, Clustering)> {
    let n = inst.len();
    limits.check_partition_size(n)?;
    let mut p = Partitioner {
        inst,
        objective,
        label: vec![NONE; n],
        blocks: Vec::new(),
        best: None,
        budget: Budget::new(limits),
    };
    p.run(0)?;
    let (value, label) =
        p.best.ok_or_else(|| Error::Infeasible(format!("no partition into {} connected blocks", inst.k())))?;
    Ok((value, clustering_from_labels(inst, &label, objective)?))
}

/// Advances `c` to the next `c.len()`-subset of `0..n` in lexicographic order.
fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    for i in (0..k).rev() {
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Disjoint k-center optimum computed independently of [`exact_disjoint`]:
/// the best plain assignment over every set of `min(k, n)` centers.
pub fn exact_disjoint_center_by_centers<S: Scalar>(inst: &Instance<S>, limits: &OracleLimits) -> Result<S> {
    let n = inst.len();
    limits.check_partition_size(n)?;
    let size = inst.k().min(n);
    let mut c: Vec<usize> = (0..size).collect();
    let mut best: Option<S> = None;
    loop {
        match exact_assignment_plain(inst, &c, Objective::Center, limits) {
            Ok((value, _)) => {
                if best.is_none_or(|b| value < b) {
                    best = Some(value);
                }
            }
            Err(Error::Infeasible(_)) => {}
            Err(e) => return Err(e),
        }
        if !next_combination(&mut c, n) {
            break;
        }
    }
    best.ok_or_else(|| Error::Infeasible("no center set admits a connected assignment".into()))
}

type Mask = u128;

fn bit(v: usize) -> Mask {
    1 << v
}

fn members(mut mask: Mask) -> Vec<usize> {
    let mut out = Vec::new();
    while mask != 0 {
        out.push(mask.trailing_zeros() as usize);
        mask &= mask - 1;
    }
    out
}

/// Indices of at most `k` sets whose union is `full`, branching on the lowest uncovered point.
fn cover(sets: &[Mask], full: Mask, k: usize, budget: &mut Budget) -> Result<Option<Vec<usize>>> {
    fn go(
        sets: &[Mask],
        full: Mask,
        left: usize,
        covered: Mask,
        pick: &mut Vec<usize>,
        budget: &mut Budget,
    ) -> Result<bool> {
        budget.tick()?;
        if covered == full {
            return Ok(true);
        }
        if left == 0 {
            return Ok(false);
        }
        let u = (!covered & full).trailing_zeros() as usize;
        for (i, &s) in sets.iter().enumerate() {
            if s & bit(u) != 0 {
                pick.push(i);
                if go(sets, full, left - 1, covered | s, pick, budget)? {
                    return Ok(true);
                }
                pick.pop();
            }
        }
        Ok(false)
    }
    let mut pick = Vec::new();
    Ok(go(sets, full, k, 0, &mut pick, budget)?.then_some(pick))
}

/// Drops sets contained in another one; of equal sets the first is kept.
fn maximal_only(sets: &[(Mask, usize)]) -> Vec<(Mask, usize)> {
    sets.iter()
        .enumerate()
        .filter(|&(i, &(s, _))| !sets.iter().enumerate().any(|(j, &(t, _))| j != i && s & t == s && (s != t || j < i)))
        .map(|(_, &x)| x)
        .collect()
}

fn full_mask(n: usize) -> Mask {
    if n == 0 {
        0
    } else {
        Mask::MAX >> (Mask::BITS as usize - n)
    }
}

/// Optimal non-disjoint connected k-center. A feasible cluster around `c` always
/// fits inside the maximal grown cluster of `c`, so it suffices to cover the
/// points with at most `k` grown clusters.
pub fn exact_nondisjoint_center<S: Scalar>(inst: &Instance<S>, limits: &OracleLimits) -> Result<(S, Clustering)> {
    let n = inst.len();
    let k = inst.k();
    if k >= n {
        return Ok((S::zero(), Clustering::singletons(n, Mode::NonDisjoint)));
    }
    if k > limits.max_k_subsets {
        return Err(Error::LimitExceeded(format!("k = {k} exceeds {}", limits.max_k_subsets)));
    }
    if n > Mask::BITS as usize {
        return Err(Error::LimitExceeded(format!("n = {n} exceeds {}", Mask::BITS)));
    }
    let mut budget = Budget::new(limits);
    let mut grower = Grower::new(n);
    let found = search_radii(&candidate_radii(inst.matrix()), |r| {
        let grown: Vec<(Mask, usize)> = (0..n)
            .map(|c| (grower.grow(inst.graph(), inst.matrix(), r, c).iter().fold(0, |m, &v| m | bit(v)), c))
            .collect();
        let sets = maximal_only(&grown);
        let masks: Vec<Mask> = sets.iter().map(|s| s.0).collect();
        Ok(cover(&masks, full_mask(n), k, &mut budget)?.map(|pick| {
            let clusters = pick.iter().map(|&i| members(sets[i].0)).collect();
            let centers = pick.iter().map(|&i| sets[i].1).collect();
            Clustering::new(clusters, Some(centers), Mode::NonDisjoint).expect("grown clusters hold their centers")
        }))
    })?;
    let (_, c) = found.ok_or_else(|| Error::Infeasible(format!("connectivity graph has more than {k} components")))?;
    Ok((clustering_cost(inst, &c, Objective::Center)?, c))
}

/// Optimal non-disjoint connected k-diameter: minimum cover by maximal connected
/// sets of bounded diameter, over all `2^n` subsets.
pub fn exact_nondisjoint_diameter<S: Scalar>(inst: &Instance<S>, limits: &OracleLimits) -> Result<(S, Clustering)> {
    let n = inst.len();
    limits.check_partition_size(n)?;
    if n > 24 {
        return Err(Error::LimitExceeded(format!("n = {n} is too large for subset enumeration")));
    }
    let k = inst.k();
    let m = inst.matrix();
    let adj: Vec<Mask> = (0..n).map(|v| inst.graph().neighbors(v).iter().fold(0, |a, &w| a | bit(w))).collect();
    let connected = |mask: Mask| {
        let mut reach = mask & mask.wrapping_neg();
        loop {
            let grown = members(reach).iter().fold(reach, |a, &v| a | (adj[v] & mask));
            if grown == reach {
                return reach == mask;
            }
            reach = grown;
        }
    };
    let mut budget = Budget::new(limits);
    let total = 1usize << n;
    let found = search_radii(&candidate_radii(m), |r| {
        let mut ok = vec![false; total];
        ok[0] = true;
        for mask in 1..total {
            let h = usize::BITS as usize - 1 - mask.leading_zeros() as usize;
            let rest = mask & !(1 << h);
            ok[mask] = ok[rest] && members(rest as Mask).iter().all(|&x| m.dist(h, x).approx_le(r));
        }
        let good: Vec<bool> = (0..total).map(|mask| mask != 0 && ok[mask] && connected(mask as Mask)).collect();
        let mut sets = Vec::new();
        for mask in 1..total {
            budget.tick()?;
            if good[mask] && (0..n).all(|p| mask & (1 << p) != 0 || !good[mask | (1 << p)]) {
                sets.push(mask as Mask);
            }
        }
        Ok(cover(&sets, full_mask(n), k, &mut budget)?.map(|pick| {
            let clusters = pick.iter().map(|&i| members(sets[i])).collect();
            Clustering::new(clusters, None, Mode::NonDisjoint).expect("cover sets are nonempty")
        }))
    })?;
    let (_, c) = found.ok_or_else(|| Error::Infeasible(format!("connectivity graph has more than {k} components")))?;
    Ok((clustering_cost(inst, &c, Objective::Diameter)?, c))
}

/// Backtracking search for a connected disjoint assignment to fixed centers
/// within radius (or diameter) `r`, pruning any state in which some point can
/// no longer be joined to a compatible cluster.
struct Assigner<'a, S> {
    inst: &'a Instance<S>,
    centers: &'a [usize],
    objective: Objective,
    r: S,
    owner: Vec<usize>,
    order: Vec<usize>,
    budget: &'a mut Budget,
}

impl<S: Scalar> Assigner<'_, S> {
    fn compatible(&self, v: usize, ci: usize) -> bool {
        let m = self.inst.matrix();
        match self.objective {
            Objective::Center => m.dist(v, self.centers[ci]).approx_le(self.r),
            Objective::Diameter => (0..self.inst.len()).all(|x| self.owner[x] != ci || m.dist(v, x).approx_le(self.r)),
        }
    }

    fn viable(&self) -> bool {
        let n = self.inst.len();
        let g = self.inst.graph();
        let mut claimable = vec![false; n];
        for (ci, &c) in self.centers.iter().enumerate() {
            let mut seen = vec![false; n];
            seen[c] = true;
            let mut stack = vec![c];
            while let Some(u) = stack.pop() {
                for &w in g.neighbors(u) {
                    if !seen[w] && (self.owner[w] == ci || (self.owner[w] == NONE && self.compatible(w, ci))) {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            for v in 0..n {
                if self.owner[v] == ci && !seen[v] {
                    return false;
                }
                claimable[v] |= seen[v];
            }
        }
        (0..n).all(|v| self.owner[v] != NONE || claimable[v])
    }

    fn run(&mut self, idx: usize) -> Result<bool> {
        self.budget.tick()?;
        let Some(&v) = self.order.get(idx) else {
            return Ok(true);
        };
        for ci in 0..self.centers.len() {
            if !self.compatible(v, ci) {
                continue;
            }
            self.owner[v] = ci;
            if self.viable() && self.run(idx + 1)? {
                return Ok(true);
            }
            self.owner[v] = NONE;
        }
        Ok(false)
    }
}

fn assignment_clustering(centers: &[usize], owner: &[usize]) -> Result<Clustering> {
    let mut clusters = vec![Vec::new(); centers.len()];
    for (v, &o) in owner.iter().enumerate() {
        clusters[o].push(v);
    }
    Clustering::new(clusters, Some(centers.to_vec()), Mode::Disjoint)
}

fn assignment_at<S: Scalar>(
    inst: &Instance<S>,
    centers: &[usize],
    objective: Objective,
    r: S,
    budget: &mut Budget,
) -> Result<Option<Clustering>> {
    let n = inst.len();
    let mut owner = vec![NONE; n];
    for (ci, &c) in centers.iter().enumerate() {
        owner[c] = ci;
    }
    // multi-source BFS order from the centers keeps early choices near them
    let mut order = Vec::with_capacity(n);
    let mut seen: Vec<bool> = owner.iter().map(|&o| o != NONE).collect();
    let mut queue: std::collections::VecDeque<usize> = centers.iter().copied().collect();
    while let Some(u) = queue.pop_front() {
        for &w in inst.graph().neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                order.push(w);
                queue.push_back(w);
            }
        }
    }
    if seen.iter().any(|&s| !s) {
        return Ok(None);
    }
    let mut a = Assigner { inst, centers, objective, r, owner, order, budget };
    if !a.viable() || !a.run(0)? {
        return Ok(None);
    }
    Ok(Some(assignment_clustering(centers, &a.owner)?))
}

/// Connected disjoint assignment to the fixed centers with objective at most `r`, if any.
pub fn assignment_feasible<S: Scalar>(
    inst: &Instance<S>,
    centers: &[usize],
    objective: Objective,
    r: S,
    limits: &OracleLimits,
) -> Result<Option<Clustering>> {
    check_centers(inst, centers)?;
    assignment_at(inst, centers, objective, r, &mut Budget::new(limits))
}

/// Optimal connected disjoint assignment to the fixed centers.
pub fn exact_assignment<S: Scalar>(
    inst: &Instance<S>,
    centers: &[usize],
    objective: Objective,
    limits: &OracleLimits,
) -> Result<(S, Clustering)> {
    check_centers(inst, centers)?;
    let candidates = match objective {
        Objective::Center => candidate_radii_from(inst.matrix(), centers),
        Objective::Diameter => candidate_radii(inst.matrix()),
    };
    let mut budget = Budget::new(limits);
    let (_, c) = search_radii(&candidates, |r| assignment_at(inst, centers, objective, r, &mut budget))?
        .ok_or_else(|| Error::Infeasible("no connected assignment to the given centers".into()))?;
    Ok((clustering_cost(inst, &c, objective)?, c))
}

/// [`exact_assignment`] by trying all `|C|^(n−|C|)` assignments.
pub fn exact_assignment_plain<S: Scalar>(
    inst: &Instance<S>,
    centers: &[usize],
    objective: Objective,
    limits: &OracleLimits,
) -> Result<(S, Clustering)> {
    let n = inst.len();
    let mut owner = vec![NONE; n];
    for (ci, &c) in centers.iter().enumerate() {
        if c >= n {
            return Err(Error::PointOutOfRange(c));
        }
        owner[c] = ci;
    }
    let free: Vec<usize> = (0..n).filter(|&v| owner[v] == NONE).collect();
    let total = (centers.len() as u64).checked_pow(free.len() as u32).filter(|&t| t <= limits.max_steps);
    if total.is_none() {
        return Err(Error::LimitExceeded(format!("{}^{} assignments", centers.len(), free.len())));
    }
    let mut budget = Budget::new(limits);
    let mut digits = vec![0; free.len()];
    let mut best: Option<(S, Vec<usize>)> = None;
    let mut blocks = vec![Vec::new(); centers.len()];
    loop {
        budget.tick()?;
        for (&v, &d) in free.iter().zip(&digits) {
            owner[v] = d;
        }
        for b in &mut blocks {
            b.clear();
        }
        for (v, &o) in owner.iter().enumerate() {
            blocks[o].push(v);
        }
        if blocks.iter().all(|b| inst.graph().induces_connected(b)) {
            let m = inst.matrix();
            let value = blocks.iter().zip(centers).fold(S::zero(), |acc, (b, &c)| {
                acc.max_of(match objective {
                    Objective::Center => b.iter().fold(S::zero(), |a, &x| a.max_of(m.dist(x, c))),
                    Objective::Diameter => block_cost(inst, b, Objective::Diameter, &[]),
                })
            });
            if best.as_ref().is_none_or(|(b, _)| b.approx_gt(value)) {
                best = Some((value, owner.clone()));
            }
        }
        let mut i = 0;
        while i < digits.len() {
            digits[i] += 1;
            if digits[i] < centers.len() {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
        if i == digits.len() {
            break;
        }
    }
    let (value, owner) =
        best.ok_or_else(|| Error::Infeasible("no connected assignment to the given centers".into()))?;
    Ok((value, assignment_clustering(centers, &owner)?))
}

/// Oracle solve for the CLI: fixed centers use [`exact_assignment`], otherwise
/// the exact solver of the requested mode.
pub fn solve_oracle<S: Scalar>(
    inst: &Instance<S>,
    objective: Objective,
    mode: Mode,
    centers: Option<&[usize]>,
    limits: &OracleLimits,
) -> Result<(SolveReport<S>, Clustering)> {
    let (value, c) = match (centers, mode, objective) {
        (Some(cs), _, _) => exact_assignment(inst, cs, objective, limits)?,
        (None, Mode::Disjoint, _) => exact_disjoint(inst, objective, limits)?,
        (None, Mode::NonDisjoint, Objective::Center) => exact_nondisjoint_center(inst, limits)?,
        (None, Mode::NonDisjoint, Objective::Diameter) => exact_nondisjoint_diameter(inst, limits)?,
    };
    let report = SolveReport::measure(inst, &c, objective, Algorithm::Oracle, Some(value), Some(value))?;
    Ok((report, c))
}
