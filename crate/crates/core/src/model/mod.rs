//! Instances, clusterings, validation and the radius search driver.

mod clustering;
mod graph;
mod instance;
pub mod io;
mod radii;
mod report;

pub use clustering::{
    best_center, cluster_diameter, cluster_radius, clustering_cost, validate_clustering, Clustering, Mode, Objective,
    Verdict, Violation,
};
pub use graph::Graph;
pub use instance::{DistanceMatrix, Instance, Metric, MetricSpec};
pub use radii::{binary_search_min_feasible, candidate_radii, candidate_radii_from, SearchStrategy};
pub use report::{Algorithm, SolveReport};
