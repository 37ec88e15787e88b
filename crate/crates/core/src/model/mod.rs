//! Quadrangulations of the projective plane and the optimal 1-embedded
//! graphs built on them.

mod associated;
mod link;

pub use associated::{associated_graph, AssociatedGraph, CrossingPoint};
pub use link::link;

use alloc::vec::Vec;

use thiserror::Error;

use crate::connectivity::graph_connectivity;
use crate::graph::SimpleGraph;
use crate::surface::{representativity, EdgeId, EmbeddedGraph, VertexId};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("not simple: edges {0} and {1} are a loop or parallel pair")]
    NotSimple(EdgeId, EdgeId),
    #[error("not a projective-plane embedding (connected {connected}, euler characteristic {euler_char}, orientable {orientable})")]
    NotP2 {
        connected: bool,
        euler_char: i64,
        orientable: bool,
    },
    #[error("face {face} has length {length}")]
    FaceNot4 { face: usize, length: usize },
    #[error("not polyhedral: connectivity {connectivity} (cut {cut:?}), representativity {representativity}")]
    NotPolyhedral {
        connectivity: usize,
        cut: Option<Vec<VertexId>>,
        representativity: usize,
    },
    #[error("diagonal {diagonal:?} of face {face} is already an edge")]
    NotSimpleResult {
        face: usize,
        diagonal: (VertexId, VertexId),
    },
    #[error("order {n} is below nine")]
    TooSmall { n: usize },
    #[error("link of vertex {vertex} is not a cycle")]
    LinkNotCycle { vertex: VertexId },
}

/// A simple quadrangulation of the projective plane. Polyhedrality
/// (3-connected and 3-representative) is recorded, and required by
/// [`validate_quadrangulation`].
#[derive(Clone, Debug)]
pub struct Quadrangulation {
    embedding: EmbeddedGraph,
    graph: SimpleGraph,
    connectivity: usize,
    cut: Option<Vec<VertexId>>,
    representativity: usize,
    bipartite: bool,
}

impl Quadrangulation {
    /// Checks simplicity, the surface and face lengths; computes the
    /// polyhedrality data without requiring it.
    pub fn check(raw: EmbeddedGraph) -> Result<Self, ModelError> {
        let srs = raw.srs();
        if let Some(e) = srs.edges().iter().position(|e| e.is_loop()) {
            return Err(ModelError::NotSimple(e, e));
        }
        if let Some((a, b)) = srs.parallel_pair() {
            return Err(ModelError::NotSimple(a, b));
        }
        if !raw.is_projective_plane() {
            return Err(ModelError::NotP2 {
                connected: raw.is_connected(),
                euler_char: raw.euler_char(),
                orientable: raw.is_orientable(),
            });
        }
        if let Some((face, f)) = raw.faces().iter().enumerate().find(|(_, f)| f.len() != 4) {
            return Err(ModelError::FaceNot4 {
                face,
                length: f.len(),
            });
        }
        let graph = SimpleGraph::from_srs(srs).expect("checked simple");
        let (connectivity, cut) = graph_connectivity(&graph, 3);
        let representativity = representativity(&raw).expect("checked projective plane");
        let bipartite = graph.is_bipartite();
        Ok(Quadrangulation {
            embedding: raw,
            graph,
            connectivity,
            cut,
            representativity,
            bipartite,
        })
    }

    pub fn embedding(&self) -> &EmbeddedGraph {
        &self.embedding
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.embedding.vertex_count()
    }

    /// Vertex connectivity, truncated at 3.
    pub fn connectivity(&self) -> usize {
        self.connectivity
    }

    pub fn representativity(&self) -> usize {
        self.representativity
    }

    pub fn is_polyhedral(&self) -> bool {
        self.connectivity >= 3 && self.representativity >= 3
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartite
    }

    /// Vertices of face `f` in walk order.
    pub fn face_vertices(&self, f: usize) -> Vec<VertexId> {
        self.embedding.face(f).vertices(self.embedding.srs())
    }
}

pub fn validate_quadrangulation(raw: EmbeddedGraph) -> Result<Quadrangulation, ModelError> {
    let q = Quadrangulation::check(raw)?;
    if !q.is_polyhedral() {
        return Err(ModelError::NotPolyhedral {
            connectivity: q.connectivity,
            cut: q.cut.clone(),
            representativity: q.representativity,
        });
    }
    Ok(q)
}

/// An optimal 1-embedded graph: a quadrangulation plus both diagonals of
/// every face. Edges `0..2n-2` of [`O1ppg::graph`] are the quadrangulation
/// edges (same ids); face `f` contributes diagonals `2n-2+2f` (first and
/// third corner) and `2n-1+2f` (second and fourth corner).
#[derive(Clone, Debug)]
pub struct O1ppg {
    quad: Quadrangulation,
    graph: SimpleGraph,
    // host face of each diagonal, indexed by `e - q edge count`
    diagonal_face: Vec<usize>,
}

pub fn build_o1ppg(q: Quadrangulation) -> Result<O1ppg, ModelError> {
    if q.vertex_count() < 9 {
        return Err(ModelError::TooSmall {
            n: q.vertex_count(),
        });
    }
    build_o1ppg_permissive(q)
}

/// As [`build_o1ppg`] but without the order gate, for probing small cases.
pub fn build_o1ppg_permissive(q: Quadrangulation) -> Result<O1ppg, ModelError> {
    let mut graph = q.graph.clone();
    let mut diagonal_face = Vec::with_capacity(2 * q.embedding.face_count());
    for f in 0..q.embedding.face_count() {
        let c = q.face_vertices(f);
        for (a, b) in [(c[0], c[2]), (c[1], c[3])] {
            if graph.add_edge(a, b).is_none() {
                return Err(ModelError::NotSimpleResult {
                    face: f,
                    diagonal: (a, b),
                });
            }
            diagonal_face.push(f);
        }
    }
    Ok(O1ppg {
        quad: q,
        graph,
        diagonal_face,
    })
}

impl O1ppg {
    /// Wraps an arbitrary embedding without any validation: diagonals are
    /// added only to faces of length four and only where they keep the graph
    /// simple. Intended for mutation tests of the audits.
    pub fn from_embedding_unchecked(raw: EmbeddedGraph) -> Option<O1ppg> {
        let graph = SimpleGraph::from_srs(raw.srs())?;
        let mut g = graph.clone();
        let mut diagonal_face = Vec::new();
        for (f, walk) in raw.faces().iter().enumerate() {
            if walk.len() != 4 {
                continue;
            }
            let c = walk.vertices(raw.srs());
            for (a, b) in [(c[0], c[2]), (c[1], c[3])] {
                if g.add_edge(a, b).is_some() {
                    diagonal_face.push(f);
                }
            }
        }
        let quad = Quadrangulation {
            bipartite: graph.is_bipartite(),
            connectivity: graph_connectivity(&graph, 3).0,
            cut: None,
            representativity: representativity(&raw).unwrap_or(0),
            embedding: raw,
            graph,
        };
        Some(O1ppg {
            quad,
            graph: g,
            diagonal_face,
        })
    }

    pub fn quad(&self) -> &Quadrangulation {
        &self.quad
    }

    /// The embedded quadrangular subgraph.
    pub fn q(&self) -> &EmbeddedGraph {
        &self.quad.embedding
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn order(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn q_edge_count(&self) -> usize {
        self.quad.graph.edge_count()
    }

    pub fn is_crossing_edge(&self, e: EdgeId) -> bool {
        e >= self.q_edge_count()
    }

    /// Host face of a diagonal.
    pub fn diagonal_face(&self, e: EdgeId) -> Option<usize> {
        e.checked_sub(self.q_edge_count())
            .map(|i| self.diagonal_face[i])
    }

    /// The diagonal crossing `e`, for a diagonal `e`.
    pub fn crossing_partner(&self, e: EdgeId) -> Option<EdgeId> {
        let i = e.checked_sub(self.q_edge_count())?;
        let f = self.diagonal_face[i];
        let partner = if i % 2 == 0 { i + 1 } else { i - 1 };
        (self.diagonal_face.get(partner) == Some(&f)).then_some(partner + self.q_edge_count())
    }

    /// Every edge of `G` is either a quadrangulation edge or one of a
    /// crossing pair; the former form `Q(G)` again.
    pub fn non_crossing_edges(&self) -> Vec<(VertexId, VertexId)> {
        (0..self.graph.edge_count())
            .filter(|&e| !self.is_crossing_edge(e))
            .map(|e| self.graph.endpoints(e))
            .collect()
    }

    /// Violated instance invariants (surface, face lengths, edge counts,
    /// degrees, Eulerian, order),
    /// empty on a well-formed instance.
    pub fn invariant_violations(&self) -> Vec<&'static str> {
        let n = self.order();
        let mut out = Vec::new();
        if self.graph.edge_count() != 4 * n - 4 {
            out.push("edge count differs from 4n-4");
        }
        if self.q_edge_count() != 2 * n - 2 {
            out.push("quadrangulation edge count differs from 2n-2");
        }
        if !self.q().is_projective_plane() {
            out.push("quadrangulation is not on the projective plane");
        }
        if self.q().faces().iter().any(|f| f.len() != 4) {
            out.push("quadrangulation has a face of length other than 4");
        }
        if self.q().face_count() != n - 1 {
            out.push("face count differs from n-1");
        }
        if (0..n).any(|v| self.graph.degree(v) != 2 * self.quad.graph.degree(v)) {
            out.push("degree is not twice the quadrangulation degree");
        }
        if self.graph.min_degree() < 6 {
            out.push("minimum degree below 6");
        }
        if !self.graph.is_eulerian() {
            out.push("not Eulerian");
        }
        if n < 9 {
            out.push("order below 9");
        }
        if !(0..n).any(|v| self.graph.degree(v) == 6) {
            out.push("no vertex of degree 6");
        }
        out
    }
}

pub(crate) fn faces_at_vertex(q: &EmbeddedGraph, v: VertexId) -> Vec<usize> {
    let mut fs = q.faces_at(v);
    fs.sort_unstable();
    fs.dedup();
    fs
}
