use alloc::vec;
use alloc::vec::Vec;

use super::embedded::EmbeddedGraph;
use super::faces::{trace_faces, FaceWalk, Flag, Side};
use super::srs::{EdgeId, VertexId};
use super::SurfaceError;

/// One connected piece of the surface after cutting along a subgraph `K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Region {
    /// host faces merged into this region, ascending
    pub faces: Vec<usize>,
    /// boundary components, as closed walks over `K` (host darts)
    pub boundary_walks: Vec<FaceWalk>,
    /// Euler characteristic of the region cut open along `K`
    pub euler_char: i64,
    /// host vertices strictly inside the region (not endpoints of `K`)
    pub interior_vertices: Vec<VertexId>,
    pub is_two_cell: bool,
}

impl Region {
    pub fn boundary_length(&self) -> usize {
        self.boundary_walks.iter().map(FaceWalk::len).sum()
    }

    /// The single boundary walk of a 2-cell region.
    pub fn disc_boundary(&self) -> Option<&FaceWalk> {
        if self.is_two_cell {
            self.boundary_walks.first()
        } else {
            None
        }
    }
}

#[derive(Clone, Debug)]
pub struct RegionDecomposition {
    /// edges of `K`, ascending
    pub subgraph_edges: Vec<EdgeId>,
    pub regions: Vec<Region>,
    /// region index of every host face
    pub face_region: Vec<usize>,
}

impl RegionDecomposition {
    pub fn region_of_face(&self, face: usize) -> usize {
        self.face_region[face]
    }

    /// Region containing a vertex that is not an endpoint of `K`.
    pub fn region_of_vertex(&self, host: &EmbeddedGraph, v: VertexId) -> Option<usize> {
        let f = host.faces_at(v).first().copied()?;
        Some(self.face_region[f])
    }

    pub fn region_of_side(&self, host: &EmbeddedGraph, side: Side) -> usize {
        self.face_region[host.face_of_side(side)]
    }
}

/// Cuts the host surface along the edge set `k` and describes the pieces.
///
/// Regions are unions of host faces glued across edges outside `k`; their
/// boundary walks are the faces of the rotation system restricted to `k`.
pub fn region_decompose(
    host: &EmbeddedGraph,
    k: &[EdgeId],
) -> Result<RegionDecomposition, SurfaceError> {
    let srs = host.srs();
    let mut in_k = vec![false; srs.edge_count()];
    for &e in k {
        in_k[e] = true;
    }
    let subgraph_edges: Vec<EdgeId> = (0..srs.edge_count()).filter(|&e| in_k[e]).collect();
    if subgraph_edges.is_empty() {
        return Err(SurfaceError::EmptySubgraph);
    }

    let face_count = host.face_count();
    let mut uf = UnionFind::new(face_count);
    for e in 0..srs.edge_count() {
        if !in_k[e] {
            let [a, b] = host.faces_of_edge(e);
            uf.union(a, b);
        }
    }
    let mut root_region = vec![usize::MAX; face_count];
    let mut face_region = vec![0; face_count];
    let mut regions: Vec<Region> = Vec::new();
    for f in 0..face_count {
        let r = uf.find(f);
        if root_region[r] == usize::MAX {
            root_region[r] = regions.len();
            regions.push(Region {
                faces: Vec::new(),
                boundary_walks: Vec::new(),
                euler_char: 0,
                interior_vertices: Vec::new(),
                is_two_cell: false,
            });
        }
        face_region[f] = root_region[r];
        regions[root_region[r]].faces.push(f);
    }

    // Boundary walks: faces of the restricted system, lifted back to host darts.
    let mut on_k = vec![false; srs.vertex_count()];
    for &e in &subgraph_edges {
        on_k[srs.edge(e).u] = true;
        on_k[srs.edge(e).v] = true;
    }
    let kept: Vec<VertexId> = (0..srs.vertex_count()).filter(|&v| on_k[v]).collect();
    let restriction = srs.restrict(&kept, &subgraph_edges);
    for walk in trace_faces(&restriction.srs) {
        let flags: Vec<Flag> = walk
            .flags
            .iter()
            .map(|f| Flag {
                dart: super::Dart::new(restriction.host_edge(f.dart.edge), f.dart.end),
                orientation: f.orientation,
            })
            .collect();
        let r = face_region[host.face_of_flag(flags[0])];
        debug_assert!(flags
            .iter()
            .all(|&f| face_region[host.face_of_flag(f)] == r));
        let is_cycle = walk.is_cycle;
        regions[r].boundary_walks.push(FaceWalk { flags, is_cycle });
    }

    // Euler characteristic of the cut-open region: corner copies of boundary
    // vertices cancel against boundary edge sides, leaving
    // interior vertices - interior edges + faces.
    let mut interior_edges = vec![0i64; regions.len()];
    for e in 0..srs.edge_count() {
        if !in_k[e] {
            interior_edges[face_region[host.faces_of_edge(e)[0]]] += 1;
        }
    }
    for v in 0..srs.vertex_count() {
        if on_k[v] {
            continue;
        }
        if let Some(&f) = host.faces_at(v).first() {
            regions[face_region[f]].interior_vertices.push(v);
        }
    }
    for (i, region) in regions.iter_mut().enumerate() {
        region.euler_char =
            region.interior_vertices.len() as i64 - interior_edges[i] + region.faces.len() as i64;
        region.is_two_cell = region.euler_char == 1 && region.boundary_walks.len() == 1;
    }

    Ok(RegionDecomposition {
        subgraph_edges,
        regions,
        face_region,
    })
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}
