use alloc::vec;
use alloc::vec::Vec;

use super::{Matching, MatchingError};
use crate::connectivity::graph_connectivity;
use crate::graph::SimpleGraph;
use crate::model::O1ppg;
use crate::surface::{EdgeId, VertexId};

/// Largest order accepted by [`hamiltonian_path`].
pub const HAMILTONIAN_MAX_ORDER: usize = 24;

/// The quadrangulation with one diagonal added in every face.
#[derive(Clone, Debug)]
pub struct SpanningTriangulation {
    pub graph: SimpleGraph,
    /// chosen diagonal per face, as edge ids of `G`
    pub diagonals: Vec<EdgeId>,
    pub four_connected: bool,
    /// true when the default choice was not 4-connected and another was searched
    pub fallback: bool,
}

impl SpanningTriangulation {
    /// The perfect matching of `G` read off a Hamiltonian path of this
    /// triangulation between the ends of `e`, containing `e`.
    pub fn matching_through(&self, g: &O1ppg, e: EdgeId) -> Result<Matching, MatchingError> {
        let n = g.order();
        if n % 2 == 1 {
            return Err(MatchingError::OddOrder { n });
        }
        let (u, v) = g.graph().endpoints(e);
        let path = hamiltonian_path(&self.graph, u, v).ok_or(MatchingError::NoHamPath { u, v })?;
        // path = x1 .. xn with x1 = u, xn = v; take x2x3, x4x5, .., xn x1
        let mut edges: Vec<EdgeId> = (1..n - 1)
            .step_by(2)
            .map(|i| {
                g.graph()
                    .edge_id(path[i], path[i + 1])
                    .expect("path edges lie in G")
            })
            .collect();
        edges.push(e);
        edges.sort_unstable();
        Ok(Matching::from_sorted(edges))
    }
}

fn triangulation_with(g: &O1ppg, choice: impl Fn(usize) -> usize) -> (SimpleGraph, Vec<EdgeId>) {
    let mut t = g.quad().graph().clone();
    let qm = g.q_edge_count();
    let diagonals: Vec<EdgeId> = (0..g.q().face_count())
        .map(|f| qm + 2 * f + choice(f))
        .collect();
    for &d in &diagonals {
        let (a, b) = g.graph().endpoints(d);
        t.add_edge(a, b);
    }
    (t, diagonals)
}

/// Picks the lexicographically smaller diagonal of every face; when that is
/// not 4-connected, the first 4-connected choice in binary order is used.
pub fn spanning_triangulation(g: &O1ppg) -> SpanningTriangulation {
    let key = |e: EdgeId| {
        let (a, b) = g.graph().endpoints(e);
        (a.min(b), a.max(b))
    };
    let qm = g.q_edge_count();
    let smaller = |f: usize| usize::from(key(qm + 2 * f + 1) < key(qm + 2 * f));
    let (graph, diagonals) = triangulation_with(g, smaller);
    if graph_connectivity(&graph, 4).0 >= 4 {
        return SpanningTriangulation {
            graph,
            diagonals,
            four_connected: true,
            fallback: false,
        };
    }
    let faces = g.q().face_count();
    if faces < 31 {
        for mask in 0u32..(1 << faces) {
            let (t, d) = triangulation_with(g, |f| (mask >> f & 1) as usize);
            if graph_connectivity(&t, 4).0 >= 4 {
                return SpanningTriangulation {
                    graph: t,
                    diagonals: d,
                    four_connected: true,
                    fallback: true,
                };
            }
        }
    }
    SpanningTriangulation {
        graph,
        diagonals,
        four_connected: false,
        fallback: true,
    }
}

/// A Hamiltonian path from `u` to `v` by dynamic programming over vertex
/// subsets; `None` if there is none or the order exceeds
/// [`HAMILTONIAN_MAX_ORDER`].
pub fn hamiltonian_path(graph: &SimpleGraph, u: VertexId, v: VertexId) -> Option<Vec<VertexId>> {
    let n = graph.vertex_count();
    if n > HAMILTONIAN_MAX_ORDER || u >= n || v >= n || (u == v && n > 1) {
        return None;
    }
    if n == 1 {
        return Some(vec![u]);
    }
    let adj: Vec<u32> = (0..n)
        .map(|x| graph.neighbors(x).fold(0u32, |m, w| m | 1 << w))
        .collect();
    let full = (1u32 << n) - 1;
    // ends[mask]: vertices w such that some path from u covers exactly mask and ends at w
    let mut ends = vec![0u32; 1 << n];
    ends[1 << u] = 1 << u;
    for mask in 1..=full {
        let e = ends[mask as usize];
        if e == 0 {
            continue;
        }
        let mut rest = e;
        while rest != 0 {
            let w = rest.trailing_zeros();
            rest &= rest - 1;
            let mut next = adj[w as usize] & !mask;
            if mask | 1 << v != full {
                // v must come last
                next &= !(1 << v);
            }
            while next != 0 {
                let x = next.trailing_zeros();
                next &= next - 1;
                ends[(mask | 1 << x) as usize] |= 1 << x;
            }
        }
    }
    if ends[full as usize] & 1 << v == 0 {
        return None;
    }
    let mut path = Vec::with_capacity(n);
    let (mut mask, mut last) = (full, v);
    loop {
        path.push(last);
        if mask == 1 << u {
            break;
        }
        let prev_mask = mask & !(1 << last);
        let candidates = ends[prev_mask as usize] & adj[last];
        last = candidates.trailing_zeros() as usize;
        mask = prev_mask;
    }
    path.reverse();
    Some(path)
}

pub fn matching_via_hamiltonian_path(g: &O1ppg, e: EdgeId) -> Result<Matching, MatchingError> {
    spanning_triangulation(g).matching_through(g, e)
}
