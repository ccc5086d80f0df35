//! Connected k-center and k-diameter clustering.
//!
//! Every cluster must induce a connected subgraph of a connectivity graph that
//! is independent of the metric. The crate provides approximation algorithms
//! for general, Lp and doubling metrics, exact algorithms for path and tree
//! connectivity graphs, brute-force oracles for small instances, and
//! generators for adversarial and gadget instances.

pub mod disjoint;
pub mod error;
pub mod exact;
pub mod greedy;
pub mod instances;
pub mod model;
pub mod oracle;
pub mod scalar;
pub mod wsp;

pub use error::{Error, Result};
pub use model::{Clustering, DistanceMatrix, Graph, Instance, Metric, Mode, Objective, SolveReport};
pub use scalar::{LpNorm, Scalar};

use num_rational::Ratio;

pub type Instance64 = Instance<f64>;
pub type Instance32 = Instance<f32>;
/// Instance with exact rational distances.
pub type ExactInstance = Instance<Ratio<i64>>;
pub type Rational = Ratio<i64>;

pub type Report64 = SolveReport<f64>;
pub type ExactReport = SolveReport<Ratio<i64>>;
