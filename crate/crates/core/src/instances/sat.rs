use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::instances::GadgetMeta;
use crate::model::{Clustering, Graph, Instance, Mode};
use crate::scalar::Scalar;

/// A CNF formula over variables `1..=vars`; literal `-i` is the negation of `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cnf {
    pub vars: usize,
    pub clauses: Vec<Vec<i32>>,
}

impl Cnf {
    pub fn new(vars: usize, clauses: Vec<Vec<i32>>) -> Result<Self> {
        let f = Self { vars, clauses };
        f.validate()?;
        Ok(f)
    }

    /// Clauses separated by `,` or `;`, literals by whitespace: `"1 2 3, -2 -3"`.
    /// The variable count is the largest one mentioned.
    pub fn parse(text: &str) -> Result<Self> {
        let clauses = text
            .split([',', ';'])
            .map(str::trim)
            .filter(|c| !c.is_empty())
            .map(|c| {
                c.split_whitespace()
                    .map(|l| l.parse::<i32>().map_err(|_| Error::InvalidInput(format!("bad literal {l:?}"))))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let vars = clauses.iter().flatten().map(|l| l.unsigned_abs() as usize).max().unwrap_or(0);
        Self::new(vars, clauses)
    }

    pub fn validate(&self) -> Result<()> {
        if self.clauses.is_empty() {
            return Err(Error::InvalidInput("formula has no clauses".into()));
        }
        for (j, c) in self.clauses.iter().enumerate() {
            if c.is_empty() || c.len() > 3 {
                return Err(Error::InvalidInput(format!("clause {} has {} literals, expected 1..=3", j + 1, c.len())));
            }
            if let Some(&l) = c.iter().find(|&&l| l == 0 || l.unsigned_abs() as usize > self.vars) {
                return Err(Error::InvalidInput(format!("literal {l} outside 1..={}", self.vars)));
            }
        }
        Ok(())
    }

    pub fn satisfied_by(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().all(|c| c.iter().any(|&l| assignment[l.unsigned_abs() as usize - 1] == (l > 0)))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SatVariant {
    TwoCenter,
    FourCenter,
}

/// Exhaustive search; formulas with more than 20 variables are refused.
pub fn brute_force_sat(f: &Cnf) -> Result<Option<Vec<bool>>> {
    f.validate()?;
    if f.vars > 20 {
        return Err(Error::LimitExceeded(format!("{} variables, at most 20", f.vars)));
    }
    Ok((0u32..1 << f.vars)
        .map(|mask| (0..f.vars).map(|i| mask >> i & 1 == 1).collect::<Vec<_>>())
        .find(|a| f.satisfied_by(a)))
}

/// Ids of one copy: `x_i`, `x̄_i`, `a_i` for each variable, then `b_j` per clause.
struct Copy {
    t: usize,
    f: usize,
    base: usize,
    vars: usize,
}

impl Copy {
    fn lit(&self, i: usize, positive: bool) -> usize {
        self.base + 3 * i + usize::from(!positive)
    }

    fn a(&self, i: usize) -> usize {
        self.base + 3 * i + 2
    }

    fn b(&self, j: usize) -> usize {
        self.base + 3 * self.vars + j
    }

    fn edges(&self, f: &Cnf, graph: &mut Vec<(usize, usize)>, metric: &mut Vec<(usize, usize)>) {
        for i in 0..f.vars {
            for pos in [true, false] {
                let x = self.lit(i, pos);
                graph.extend([(x, self.t), (x, self.f), (x, self.a(i))]);
                metric.extend([(x, self.t), (x, self.f)]);
            }
            metric.push((self.a(i), self.f));
        }
        for (j, c) in f.clauses.iter().enumerate() {
            for &l in c {
                graph.push((self.lit(l.unsigned_abs() as usize - 1, l > 0), self.b(j)));
            }
            metric.push((self.b(j), self.t));
        }
    }

    fn labels(&self, f: &Cnf, suffix: &str, out: &mut [String]) {
        for i in 0..f.vars {
            out[self.lit(i, true)] = format!("x{}{suffix}", i + 1);
            out[self.lit(i, false)] = format!("~x{}{suffix}", i + 1);
            out[self.a(i)] = format!("a{}{suffix}", i + 1);
        }
        for j in 0..f.clauses.len() {
            out[self.b(j)] = format!("b{}{suffix}", j + 1);
        }
    }

    /// The radius-1 split: true literals and clause points with `t`, the rest with `f`.
    fn assign(&self, f: &Cnf, assignment: &[bool], t_side: &mut Vec<usize>, f_side: &mut Vec<usize>) {
        for (i, &value) in assignment.iter().enumerate() {
            t_side.push(self.lit(i, value));
            f_side.extend([self.lit(i, !value), self.a(i)]);
        }
        t_side.extend((0..f.clauses.len()).map(|j| self.b(j)));
    }
}

// copy h of the four-center gadget uses hubs (T_h, F_h)
const HUBS: [(usize, usize); 5] = [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)];

fn copy_len(f: &Cnf) -> usize {
    3 * f.vars + f.clauses.len()
}

fn two_center_copy(f: &Cnf) -> Copy {
    Copy { t: 0, f: 1, base: 2, vars: f.vars }
}

fn four_center_copies(f: &Cnf) -> Vec<Copy> {
    HUBS.iter().enumerate().map(|(h, &(t, fh))| Copy { t, f: fh, base: 4 + h * copy_len(f), vars: f.vars }).collect()
}

/// The 3-SAT reduction gadgets. Two-center: hubs `T = 0`, `F = 1`, roles `T`, `F`
/// and `centers`, `k = 2`. Four-center: five copies glued at hubs `0..4`, `k = 4`.
pub fn gen_sat_gadget<S: Scalar>(f: &Cnf, variant: SatVariant) -> Result<GadgetMeta<S>> {
    f.validate()?;
    let copies = match variant {
        SatVariant::TwoCenter => vec![two_center_copy(f)],
        SatVariant::FourCenter => four_center_copies(f),
    };
    let hubs = if variant == SatVariant::TwoCenter { 2 } else { 4 };
    let n = hubs + copies.len() * copy_len(f);
    let mut graph = Vec::new();
    let mut metric = Vec::new();
    let mut labels = vec![String::new(); n];
    for (h, c) in copies.iter().enumerate() {
        c.edges(f, &mut graph, &mut metric);
        let suffix = if copies.len() == 1 { String::new() } else { format!(".{}", h + 1) };
        c.labels(f, &suffix, &mut labels);
    }
    let hub_names: &[&str] = if hubs == 2 { &["T", "F"] } else { &["A", "B", "C", "D"] };
    for (i, name) in hub_names.iter().enumerate() {
        labels[i] = (*name).to_owned();
    }
    let g = Graph::from_edges_dedup(n, &graph)?;
    let weighted = metric.into_iter().map(|(u, v)| (u, v, S::one())).collect();
    let inst = Instance::from_graph_metric(weighted, g, hubs)?.with_labels(labels)?;
    let meta = GadgetMeta::new(inst).with_role("centers", (0..hubs).collect());
    Ok(match variant {
        SatVariant::TwoCenter => meta.with_role("T", vec![0]).with_role("F", vec![1]),
        SatVariant::FourCenter => meta,
    })
}

fn check_assignment(f: &Cnf, assignment: &[bool]) -> Result<()> {
    f.validate()?;
    if assignment.len() != f.vars {
        return Err(Error::InvalidInput(format!("{} values for {} variables", assignment.len(), f.vars)));
    }
    if !f.satisfied_by(assignment) {
        return Err(Error::Precondition("assignment does not satisfy the formula".into()));
    }
    Ok(())
}

/// The radius-1 disjoint clustering of the two-center gadget induced by a satisfying assignment.
pub fn two_center_clustering(f: &Cnf, assignment: &[bool]) -> Result<Clustering> {
    check_assignment(f, assignment)?;
    let mut t_side = vec![0];
    let mut f_side = vec![1];
    two_center_copy(f).assign(f, assignment, &mut t_side, &mut f_side);
    Clustering::new(vec![t_side, f_side], Some(vec![0, 1]), Mode::Disjoint)
}

/// The radius-1 disjoint 4-clustering of the four-center gadget, one cluster per hub.
pub fn four_center_clustering(f: &Cnf, assignment: &[bool]) -> Result<Clustering> {
    check_assignment(f, assignment)?;
    let mut clusters: Vec<Vec<usize>> = (0..4).map(|h| vec![h]).collect();
    let (mut t_side, mut f_side) = (Vec::new(), Vec::new());
    for c in four_center_copies(f) {
        c.assign(f, assignment, &mut t_side, &mut f_side);
        clusters[c.t].append(&mut t_side);
        clusters[c.f].append(&mut f_side);
    }
    Clustering::new(clusters, Some((0..4).collect()), Mode::Disjoint)
}
