//! JSON documents for instances and clusterings, and Graphviz export.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Number;

use crate::error::{Error, Result};
use crate::model::clustering::{clustering_cost, Clustering, Mode, Objective};
use crate::model::graph::Graph;
use crate::model::instance::{Instance, MetricSpec};
use crate::model::report::{Algorithm, SolveReport};
use crate::scalar::{LpNorm, Scalar};

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceDoc {
    pub n: usize,
    pub k: usize,
    pub metric: MetricDoc,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum MetricDoc {
    Explicit { matrix: Vec<Vec<Number>> },
    Lp { p: NormDoc, coords: Vec<Vec<Number>> },
    Graph { edges: Vec<(usize, usize, Number)> },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum NormDoc {
    Finite(u32),
    Named(String),
}

/// Clustering document; `report` is filled in by solvers and ignored on input.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ClusteringDoc {
    pub mode: Mode,
    pub clusters: Vec<Vec<usize>>,
    pub centers: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub objective: Option<Objective>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<Number>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub report: Option<ReportDoc>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ReportDoc {
    pub objective: Objective,
    pub value: Number,
    pub clusters_used: usize,
    pub algorithm: Algorithm,
    pub search_radius: Option<Number>,
    pub bound: Option<Number>,
    pub feasible: bool,
}

pub fn scalar_from_number<S: Scalar>(x: &Number) -> Result<S> {
    let v = match x.as_i64() {
        Some(i) => S::from_i64(i),
        None => x.as_f64().filter(|f| f.is_finite()).and_then(S::from_f64),
    };
    v.ok_or_else(|| Error::Schema(format!("unrepresentable number {x}")))
}

/// Integral values are written as JSON integers so output does not depend on the scalar type.
pub fn number_from_scalar<S: Scalar>(x: S) -> Number {
    if let Some(i) = x.to_i64() {
        if S::from_i64(i) == Some(x) {
            return Number::from(i);
        }
    }
    Number::from_f64(x.to_f64_lossy()).unwrap_or_else(|| Number::from(0))
}

fn check_id(v: usize, n: usize) -> Result<usize> {
    if v < n {
        Ok(v)
    } else {
        Err(Error::PointOutOfRange(v))
    }
}

impl InstanceDoc {
    pub fn into_instance<S: Scalar>(self) -> Result<Instance<S>> {
        let n = self.n;
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|e| (e[0], e[1])).collect();
        let graph = Graph::from_edges(n, &edges)?;
        let inst = match self.metric {
            MetricDoc::Explicit { matrix } => {
                if matrix.len() != n {
                    return Err(Error::Schema(format!("matrix has {} rows, n = {n}", matrix.len())));
                }
                let rows = matrix
                    .iter()
                    .map(|row| row.iter().map(scalar_from_number).collect::<Result<Vec<S>>>())
                    .collect::<Result<Vec<_>>>()?;
                Instance::new(crate::model::DistanceMatrix::from_rows(rows)?, graph, self.k)?
            }
            MetricDoc::Lp { p, coords } => {
                if coords.len() != n {
                    return Err(Error::Schema(format!("{} coordinates, n = {n}", coords.len())));
                }
                let norm = match p {
                    NormDoc::Finite(p) if p >= 1 => LpNorm::Finite(p),
                    NormDoc::Named(s) if s == "inf" => LpNorm::Infinity,
                    other => return Err(Error::Schema(format!("bad norm exponent {other:?}"))),
                };
                let coords = coords
                    .iter()
                    .map(|c| c.iter().map(scalar_from_number).collect::<Result<Vec<S>>>())
                    .collect::<Result<Vec<_>>>()?;
                Instance::from_lp(coords, norm, graph, self.k)?
            }
            MetricDoc::Graph { edges: wedges } => {
                let wedges = wedges
                    .iter()
                    .map(|(u, v, w)| Ok((check_id(*u, n)?, check_id(*v, n)?, scalar_from_number(w)?)))
                    .collect::<Result<Vec<_>>>()?;
                Instance::from_graph_metric(wedges, graph, self.k)?
            }
        };
        match self.labels {
            Some(l) => inst.with_labels(l),
            None => Ok(inst),
        }
    }

    pub fn from_instance<S: Scalar>(inst: &Instance<S>) -> Self {
        let metric = match inst.spec() {
            MetricSpec::Explicit => MetricDoc::Explicit {
                matrix: inst
                    .matrix()
                    .rows()
                    .into_iter()
                    .map(|r| r.into_iter().map(number_from_scalar).collect())
                    .collect(),
            },
            MetricSpec::Lp { coords, norm } => MetricDoc::Lp {
                p: match norm {
                    LpNorm::Finite(p) => NormDoc::Finite(*p),
                    LpNorm::Infinity => NormDoc::Named("inf".into()),
                },
                coords: coords.iter().map(|c| c.iter().map(|&x| number_from_scalar(x)).collect()).collect(),
            },
            MetricSpec::Graph { edges } => {
                MetricDoc::Graph { edges: edges.iter().map(|&(u, v, w)| (u, v, number_from_scalar(w))).collect() }
            }
        };
        Self {
            n: inst.len(),
            k: inst.k(),
            metric,
            edges: inst.graph().edges().map(|(u, v)| [u, v]).collect(),
            labels: inst.labels().map(<[String]>::to_vec),
        }
    }
}

pub fn load_instance<S: Scalar>(json: &str) -> Result<Instance<S>> {
    let doc: InstanceDoc = serde_json::from_str(json)?;
    doc.into_instance()
}

pub fn instance_to_json<S: Scalar>(inst: &Instance<S>) -> String {
    serde_json::to_string_pretty(&InstanceDoc::from_instance(inst)).expect("instance serializes")
}

impl ClusteringDoc {
    pub fn new<S: Scalar>(inst: &Instance<S>, c: &Clustering, objective: Option<Objective>) -> Result<Self> {
        let value = match objective {
            Some(o) => Some(number_from_scalar(clustering_cost(inst, c, o)?)),
            None => None,
        };
        Ok(Self {
            mode: c.mode(),
            clusters: c.clusters().to_vec(),
            centers: c.centers().map(<[usize]>::to_vec),
            objective,
            value,
            report: None,
        })
    }

    pub fn with_report<S: Scalar>(mut self, r: &SolveReport<S>) -> Self {
        self.report = Some(ReportDoc {
            objective: r.objective,
            value: number_from_scalar(r.value),
            clusters_used: r.clusters_used,
            algorithm: r.algorithm,
            search_radius: r.search_radius.map(number_from_scalar),
            bound: r.bound.map(number_from_scalar),
            feasible: r.feasible,
        });
        self
    }

    pub fn to_clustering(&self) -> Result<Clustering> {
        Clustering::new(self.clusters.clone(), self.centers.clone(), self.mode)
    }
}

pub fn load_clustering(json: &str) -> Result<ClusteringDoc> {
    Ok(serde_json::from_str(json)?)
}

const PALETTE: [&str; 12] = [
    "#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462", "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd",
    "#ccebc5", "#ffed6f",
];

/// Connectivity graph as Graphviz; clusters become fill colors and centers are double circles.
///
/// A point in several clusters gets the colors of all of them (striped).
pub fn to_dot<S: Scalar>(inst: &Instance<S>, c: Option<&Clustering>) -> String {
    let n = inst.len();
    let mut colors: Vec<Vec<&str>> = vec![Vec::new(); n];
    let mut is_center = vec![false; n];
    if let Some(c) = c {
        for (i, cl) in c.clusters().iter().enumerate() {
            for &v in cl.iter().filter(|&&v| v < n) {
                colors[v].push(PALETTE[i % PALETTE.len()]);
            }
        }
        for &v in c.centers().unwrap_or(&[]).iter().filter(|&&v| v < n) {
            is_center[v] = true;
        }
    }
    let mut out = String::from("graph connectivity {\n  node [style=filled, fillcolor=white];\n");
    for v in 0..n {
        let shape = if is_center[v] { "doublecircle" } else { "circle" };
        let fill = match colors[v].len() {
            0 => String::new(),
            1 => format!(", fillcolor=\"{}\"", colors[v][0]),
            _ => format!(", style=striped, fillcolor=\"{}\"", colors[v].join(":")),
        };
        let _ = writeln!(out, "  {v} [label=\"{}\", shape={shape}{fill}];", inst.label(v).replace('"', "\\\""));
    }
    for (u, v) in inst.graph().edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}
