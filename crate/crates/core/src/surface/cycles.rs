use alloc::vec::Vec;

use super::embedded::EmbeddedGraph;
use super::srs::{EdgeId, SignedRotationSystem, VertexId};
use super::{Sign, SurfaceError};

/// Edges of the cycle `v0 v1 ... v(k-1) v0`. Fails if a vertex repeats, the
/// sequence is shorter than three, or two consecutive vertices are not
/// joined by exactly one edge.
pub fn cycle_edges(
    srs: &SignedRotationSystem,
    cycle: &[VertexId],
) -> Result<Vec<EdgeId>, SurfaceError> {
    if cycle.len() < 3 {
        return Err(SurfaceError::NotACycle);
    }
    let mut sorted = cycle.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1])
        || sorted.last().is_some_and(|&v| v >= srs.vertex_count())
    {
        return Err(SurfaceError::NotACycle);
    }
    (0..cycle.len())
        .map(|i| {
            srs.edge_between(cycle[i], cycle[(i + 1) % cycle.len()])
                .ok_or(SurfaceError::NotACycle)
        })
        .collect()
}

/// Product of edge signs along a closed walk. Invariant under vertex switching.
pub fn walk_sign(srs: &SignedRotationSystem, edges: &[EdgeId]) -> Sign {
    edges.iter().fold(Sign::Plus, |acc, &e| acc * srs.sign(e))
}

impl EmbeddedGraph {
    pub fn cycle_sign(&self, cycle: &[VertexId]) -> Result<Sign, SurfaceError> {
        let edges = cycle_edges(self.srs(), cycle)?;
        Ok(walk_sign(self.srs(), &edges))
    }
}

/// On the projective plane a cycle is essential exactly when it is
/// one-sided, i.e. its sign product is `-`.
pub fn is_essential(g: &EmbeddedGraph, cycle: &[VertexId]) -> Result<bool, SurfaceError> {
    g.require_projective_plane()?;
    Ok(g.cycle_sign(cycle)? == Sign::Minus)
}
