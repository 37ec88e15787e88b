use alloc::vec::Vec;

use crate::surface::{trace_faces, EmbeddedGraph, VertexId};

/// A projective bowtie: triangles `p1 p2 p3` and `p1 p4 p5` meeting only in
/// `p1`, whose own embedding has two faces of length 6.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Bowtie {
    pub p1: VertexId,
    /// the two opposite pairs, each ascending, in ascending order
    pub pairs: [[VertexId; 2]; 2],
}

impl Bowtie {
    pub fn vertices(&self) -> [VertexId; 5] {
        let [[a, b], [c, d]] = self.pairs;
        [self.p1, a, b, c, d]
    }
}

/// All projective bowties of an embedded simple graph, one per vertex set
/// and centre.
pub fn find_projective_bowties(host: &EmbeddedGraph) -> Vec<Bowtie> {
    let srs = host.srs();
    let mut out = Vec::new();
    for p1 in 0..srs.vertex_count() {
        let mut nbrs: Vec<VertexId> = srs.neighbors(p1).collect();
        nbrs.sort_unstable();
        nbrs.dedup();
        let mut triangles = Vec::new();
        for (i, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[i + 1..] {
                if srs.edge_between(a, b).is_some() {
                    triangles.push([a, b]);
                }
            }
        }
        for (i, &s) in triangles.iter().enumerate() {
            for &t in &triangles[i + 1..] {
                if s.iter().any(|x| t.contains(x)) {
                    continue;
                }
                let vs = [p1, s[0], s[1], t[0], t[1]];
                let pairs = [
                    (p1, s[0]),
                    (p1, s[1]),
                    (s[0], s[1]),
                    (p1, t[0]),
                    (p1, t[1]),
                    (t[0], t[1]),
                ];
                let edges: Vec<usize> = pairs
                    .iter()
                    .map(|&(x, y)| srs.edge_between(x, y).unwrap())
                    .collect();
                let sub = srs.restrict(&vs, &edges);
                let faces = trace_faces(&sub.srs);
                if faces.len() == 2 && faces.iter().all(|f| f.len() == 6) {
                    out.push(Bowtie { p1, pairs: [s, t] });
                }
            }
        }
    }
    out
}
