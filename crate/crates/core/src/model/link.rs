use alloc::vec::Vec;

use super::{faces_at_vertex, ModelError, O1ppg};
use crate::surface::{region_decompose, VertexId};

/// Boundary cycle of the union of the quadrangulation faces at `v`, as a
/// vertex sequence.
pub fn link(g: &O1ppg, v: VertexId) -> Result<Vec<VertexId>, ModelError> {
    let q = g.q();
    let srs = q.srs();
    let mut k: Vec<usize> = faces_at_vertex(q, v)
        .into_iter()
        .flat_map(|f| q.face(f).edges())
        .filter(|&e| srs.edge(e).u != v && srs.edge(e).v != v)
        .collect();
    k.sort_unstable();
    k.dedup();
    let err = ModelError::LinkNotCycle { vertex: v };
    let dec = region_decompose(q, &k).map_err(|_| err.clone())?;
    let region = dec.region_of_vertex(q, v).ok_or(err.clone())?;
    let walk = dec.regions[region].disc_boundary().ok_or(err.clone())?;
    if !walk.is_cycle {
        return Err(err);
    }
    Ok(walk.vertices(srs))
}
