//! Dense-distance-graph machinery (placeholder; filled in with
//! r-divisions, Monge decompositions, the fast Dijkstra, and boundary
//! partition queries).

use crate::error::Result;
use crate::plane_graph::{NodeId, PlaneGraph};
use crate::weight::Weight;

pub(crate) fn ddg_distances(
    _g: &PlaneGraph,
    _pairs: &[(NodeId, NodeId)],
    _r_override: Option<usize>,
) -> Result<Vec<Weight>> {
    unimplemented!()
}
