use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::model::O1ppg;
use crate::surface::{region_decompose, EdgeId, EmbeddedGraph, Region, VertexId};

/// A 2-cell region bounded by a closed walk of quadrangulation edges with an
/// odd number of vertices inside.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddWeightedRegion {
    /// boundary walk as a vertex sequence, rotated and reflected to its
    /// lexicographically smallest form
    pub boundary: Vec<VertexId>,
    /// edges of the walk, ascending
    pub edges: Vec<EdgeId>,
    pub region: Region,
    pub interior_vertex_count: usize,
    pub boundary_is_cycle: bool,
}

impl OddWeightedRegion {
    pub fn len(&self) -> usize {
        self.boundary.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boundary.is_empty()
    }

    /// Distinct boundary vertices, ascending.
    pub fn boundary_vertices(&self) -> Vec<VertexId> {
        let mut v = self.boundary.clone();
        v.sort_unstable();
        v.dedup();
        v
    }
}

/// Smallest rotation or reflection of a cyclic sequence.
pub fn canonical_cycle(walk: &[VertexId]) -> Vec<VertexId> {
    let k = walk.len();
    let mut best: Option<Vec<VertexId>> = None;
    for start in 0..k {
        for dir in [false, true] {
            let cand: Vec<VertexId> = (0..k)
                .map(|i| {
                    if dir {
                        walk[(start + k - i) % k]
                    } else {
                        walk[(start + i) % k]
                    }
                })
                .collect();
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.unwrap_or_default()
}

/// Edge sets of all closed walks with `2..=max_len` edges.
fn closed_walk_edge_sets(q: &EmbeddedGraph, max_len: usize) -> BTreeSet<Vec<EdgeId>> {
    let srs = q.srs();
    let mut sets = BTreeSet::new();
    let mut walk: Vec<EdgeId> = Vec::with_capacity(max_len);
    fn extend(
        srs: &crate::surface::SignedRotationSystem,
        start: VertexId,
        at: VertexId,
        max_len: usize,
        walk: &mut Vec<EdgeId>,
        sets: &mut BTreeSet<Vec<EdgeId>>,
    ) {
        if at == start && walk.len() >= 2 {
            let mut k = walk.clone();
            k.sort_unstable();
            k.dedup();
            sets.insert(k);
        }
        if walk.len() == max_len {
            return;
        }
        for &d in srs.rotation(at) {
            let w = srs.dart_target(d);
            // the smallest vertex of the walk is its start
            if w < start {
                continue;
            }
            walk.push(d.edge);
            extend(srs, start, w, max_len, walk, sets);
            walk.pop();
        }
    }
    for s in 0..srs.vertex_count() {
        extend(srs, s, s, max_len, &mut walk, &mut sets);
    }
    sets
}

/// All odd weighted regions of an embedded graph whose boundary walk has at
/// most `max_len` edges, ordered by boundary.
pub fn odd_weighted_regions(q: &EmbeddedGraph, max_len: usize) -> Vec<OddWeightedRegion> {
    let srs = q.srs();
    let mut out = Vec::new();
    for k in closed_walk_edge_sets(q, max_len) {
        let dec = region_decompose(q, &k).expect("walks have edges");
        for region in dec.regions {
            let Some(walk) = region.disc_boundary() else {
                continue;
            };
            if walk.len() > max_len || region.interior_vertices.len() % 2 == 0 {
                continue;
            }
            let mut used = walk.edges();
            used.sort_unstable();
            used.dedup();
            if used != k {
                continue;
            }
            out.push(OddWeightedRegion {
                boundary: canonical_cycle(&walk.vertices(srs)),
                boundary_is_cycle: walk.is_cycle,
                interior_vertex_count: region.interior_vertices.len(),
                edges: k.clone(),
                region,
            });
        }
    }
    out.sort_by(|a, b| {
        (a.boundary.len(), &a.boundary, &a.edges).cmp(&(b.boundary.len(), &b.boundary, &b.edges))
    });
    out
}

pub fn find_odd_weighted_regions(g: &O1ppg, max_boundary_len: usize) -> Vec<OddWeightedRegion> {
    odd_weighted_regions(g.q(), max_boundary_len)
}

/// Barrier cycles of length `len`: odd weighted regions bounded by a cycle.
pub fn barrier_cycles(g: &O1ppg, len: usize) -> Vec<OddWeightedRegion> {
    find_odd_weighted_regions(g, len)
        .into_iter()
        .filter(|r| r.boundary_is_cycle && r.len() == len)
        .collect()
}
