//! Global minimum cuts and shortest cycles in simple directed planar graphs
//! with nonnegative edge weights, via the duality between cuts and
//! non-degenerate dual cycles.
//!
//! The pipeline: bidirect and triangulate the input, reduce minimum cut to a
//! shortest non-degenerate cycle of the dual, reduce shortest cycle to the
//! same problem after a degree-reduction split, and solve that problem by
//! divide and conquer over balanced separating cycles. Cycles crossing the
//! separator reduce to noncrossing shortest-path distances among terminals
//! on the outer face, which are served by either a repeated-Dijkstra
//! baseline or a dense-distance-graph engine.

pub mod cycle_core;
pub mod ddg;
pub mod error;
pub mod ncsp;
pub mod oracle;
pub mod plane_graph;
pub mod reduce;
pub mod separator;
pub mod weight;

pub use error::{Error, Result};
pub use plane_graph::{Dart, EdgeId, EdgeRec, FaceId, NodeId, PlaneGraph, Walk};
pub use weight::Weight;
