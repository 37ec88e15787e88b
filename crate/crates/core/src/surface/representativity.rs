use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use super::embedded::EmbeddedGraph;
use super::srs::VertexId;
use super::{Sign, SurfaceError};

/// Vertex-face incidence graph of an embedding. Node `v < vertex_count` is a
/// vertex, node `vertex_count + f` is face `f`. There is one edge per corner,
/// signed by the corner's flag orientation, so that a closed walk is
/// one-sided exactly when its sign product is `-`.
#[derive(Clone, Debug)]
pub struct RadialGraph {
    pub vertex_count: usize,
    pub face_count: usize,
    /// `(vertex, face, sign)` per corner, in face-walk order
    pub corners: Vec<(VertexId, usize, Sign)>,
}

impl RadialGraph {
    pub fn node_count(&self) -> usize {
        self.vertex_count + self.face_count
    }

    /// Adjacency lists: `(neighbour node, sign)`.
    pub fn adjacency(&self) -> Vec<Vec<(usize, Sign)>> {
        let mut adj = vec![Vec::new(); self.node_count()];
        for &(v, f, s) in &self.corners {
            let fnode = self.vertex_count + f;
            adj[v].push((fnode, s));
            adj[fnode].push((v, s));
        }
        adj
    }
}

pub fn radial_graph(g: &EmbeddedGraph) -> RadialGraph {
    let srs = g.srs();
    let mut corners = Vec::with_capacity(g.total_face_length());
    for (i, face) in g.faces().iter().enumerate() {
        for f in &face.flags {
            corners.push((srs.dart_vertex(f.dart), i, f.orientation));
        }
    }
    RadialGraph {
        vertex_count: g.vertex_count(),
        face_count: g.face_count(),
        corners,
    }
}

/// Face-width of a projective-plane embedding: the least number of graph
/// points met by a one-sided closed curve. Computed as half the shortest
/// closed radial walk with sign `-`, via breadth-first search on the sign
/// double cover of the radial graph.
pub fn representativity(g: &EmbeddedGraph) -> Result<usize, SurfaceError> {
    g.require_projective_plane()?;
    let radial = radial_graph(g);
    let adj = radial.adjacency();
    let n = radial.node_count();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; 2 * n];
    let mut queue = VecDeque::new();
    for x in 0..radial.vertex_count {
        dist.fill(usize::MAX);
        queue.clear();
        dist[x] = 0;
        queue.push_back(x);
        while let Some(state) = queue.pop_front() {
            let d = dist[state];
            if d + 1 >= best.saturating_mul(2) {
                break;
            }
            let (node, parity) = (state % n, state / n);
            for &(next, s) in &adj[node] {
                let p = parity ^ usize::from(s == Sign::Minus);
                let t = next + p * n;
                if dist[t] == usize::MAX {
                    dist[t] = d + 1;
                    queue.push_back(t);
                }
            }
        }
        let target = x + n;
        if dist[target] != usize::MAX {
            best = best.min(dist[target] / 2);
        }
    }
    Ok(best)
}
