//! Optimal algorithms for path and tree connectivity graphs.
//!
//! None of these need the triangle inequality.

mod line;
mod tree_assign;
mod tree_dp;

pub use line::{
    line_center_cover, line_center_nondisjoint, line_diameter, line_diameter_segments, line_reach, solve_line_center,
    solve_line_diameter, LineReach, ReachRule,
};
pub use tree_assign::{solve_tree_assignment, tree_assignment};
pub use tree_dp::{tree_dp_clustering, tree_dp_count, tree_dp_solve, PathMaxTable, TreeDp};
