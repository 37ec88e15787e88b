use alloc::vec;
use alloc::vec::Vec;

use super::O1ppg;
use crate::surface::{Dart, Edge, EdgeId, EmbeddedGraph, End, SignedRotationSystem, VertexId};

/// The crossing point of the two diagonals of one quadrangulation face.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CrossingPoint {
    pub vertex: VertexId,
    pub face: usize,
    /// the two diagonals, as edge ids of `G`
    pub diagonals: [EdgeId; 2],
}

/// `G` with every crossing promoted to a degree-4 vertex. Vertices `0..n`
/// are the original ones and `n + f` is the crossing inside face `f`.
#[derive(Clone, Debug)]
pub struct AssociatedGraph {
    pub embedding: EmbeddedGraph,
    pub false_vertices: Vec<CrossingPoint>,
}

pub fn associated_graph(g: &O1ppg) -> AssociatedGraph {
    let q = g.q();
    let srs = q.srs();
    let n = srs.vertex_count();
    let m = srs.edge_count();
    let mut edges: Vec<Edge> = srs.edges().to_vec();
    // new dart to insert right after a host dart, per host dart (edge, end)
    let mut after: Vec<[Option<Dart>; 2]> = vec![[None; 2]; m];
    let mut spokes = Vec::with_capacity(q.face_count());
    for (f, walk) in q.faces().iter().enumerate() {
        let x = n + f;
        let mut at_x = Vec::with_capacity(walk.len());
        for (i, flag) in walk.flags.iter().enumerate() {
            let v = srs.dart_vertex(flag.dart);
            let e = edges.len();
            edges.push(Edge {
                u: x,
                v,
                sign: flag.orientation,
            });
            at_x.push(Dart::new(e, End::A));
            // the walk reaches v along `prev` and leaves along `flag.dart`;
            // the corner lies between them on the side given by the orientation
            let prev = walk.flags[(i + walk.len() - 1) % walk.len()]
                .dart
                .opposite();
            let anchor = if flag.orientation.is_plus() {
                prev
            } else {
                flag.dart
            };
            after[anchor.edge][anchor.end as usize] = Some(Dart::new(e, End::B));
        }
        spokes.push(at_x);
    }

    let mut rotations: Vec<Vec<Dart>> = (0..n)
        .map(|v| {
            let mut rot = Vec::with_capacity(2 * srs.degree(v));
            for &d in srs.rotation(v) {
                rot.push(d);
                if let Some(s) = after[d.edge][d.end as usize] {
                    rot.push(s);
                }
            }
            rot
        })
        .collect();
    rotations.extend(spokes.iter().cloned());

    let build = |rotations: Vec<Vec<Dart>>| {
        EmbeddedGraph::new(
            SignedRotationSystem::new(n + q.face_count(), edges.clone(), rotations)
                .expect("associated rotation system is well-formed"),
        )
    };
    let mut embedding = build(rotations.clone());
    if !embedding.faces().iter().all(|f| f.len() == 3) {
        // the spokes were listed against the local orientation at the crossing
        for r in rotations[n..].iter_mut() {
            r.reverse();
        }
        embedding = build(rotations);
        debug_assert!(embedding.faces().iter().all(|f| f.len() == 3));
    }

    let qm = g.q_edge_count();
    let false_vertices = (0..q.face_count())
        .map(|f| CrossingPoint {
            vertex: n + f,
            face: f,
            diagonals: [qm + 2 * f, qm + 2 * f + 1],
        })
        .collect();
    AssociatedGraph {
        embedding,
        false_vertices,
    }
}
