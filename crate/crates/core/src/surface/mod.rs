//! Graphs on closed surfaces, encoded as signed rotation systems.

mod cycles;
mod embedded;
mod faces;
pub mod polygon;
mod region;
mod representativity;
mod srs;

pub use cycles::{cycle_edges, is_essential, walk_sign};
pub use embedded::EmbeddedGraph;
pub use faces::{trace_faces, FaceWalk, Flag, Side};
pub use region::{region_decompose, Region, RegionDecomposition};
pub use representativity::{radial_graph, representativity, RadialGraph};
pub use srs::{Dart, Edge, EdgeId, End, Restriction, Sign, SignedRotationSystem, VertexId};

use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SurfaceError {
    #[error("malformed rotation system: {reason}")]
    MalformedRotation {
        reason: &'static str,
        dart: Option<Dart>,
    },
    #[error("embedded graph is disconnected")]
    Disconnected,
    #[error("vertex sequence is not a cycle of the graph")]
    NotACycle,
    #[error("embedding is not on the projective plane (euler characteristic {euler_char}, orientable {orientable})")]
    NotProjectivePlane { euler_char: i64, orientable: bool },
    #[error("empty subgraph")]
    EmptySubgraph,
}
