use alloc::vec;
use alloc::vec::Vec;

use super::faces::{trace_faces, FaceWalk, Flag, Side};
use super::srs::{EdgeId, SignedRotationSystem, VertexId};
use super::{Sign, SurfaceError};

/// A rotation system with its faces traced once at construction.
#[derive(Clone, Debug)]
pub struct EmbeddedGraph {
    srs: SignedRotationSystem,
    faces: Vec<FaceWalk>,
    // face index of each edge side, indexed by `Side::index`
    side_face: Vec<usize>,
    euler_char: i64,
    orientable: bool,
    connected: bool,
}

impl EmbeddedGraph {
    pub fn new(srs: SignedRotationSystem) -> Self {
        let faces = trace_faces(&srs);
        let mut side_face = vec![usize::MAX; 2 * srs.edge_count()];
        for (i, face) in faces.iter().enumerate() {
            for &f in &face.flags {
                side_face[srs.side_of(f).index()] = i;
            }
        }
        let euler_char = srs.vertex_count() as i64 - srs.edge_count() as i64 + faces.len() as i64;
        let connected = srs.is_connected();
        let orientable = switching_to_positive(&srs).is_some();
        EmbeddedGraph {
            srs,
            faces,
            side_face,
            euler_char,
            orientable,
            connected,
        }
    }

    pub fn srs(&self) -> &SignedRotationSystem {
        &self.srs
    }

    pub fn into_srs(self) -> SignedRotationSystem {
        self.srs
    }

    pub fn faces(&self) -> &[FaceWalk] {
        &self.faces
    }

    pub fn face(&self, i: usize) -> &FaceWalk {
        &self.faces[i]
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.srs.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.srs.edge_count()
    }

    pub fn euler_char(&self) -> i64 {
        self.euler_char
    }

    pub fn is_orientable(&self) -> bool {
        self.orientable
    }

    pub fn is_connected(&self) -> bool {
        self.connected
    }

    pub fn is_projective_plane(&self) -> bool {
        self.connected && self.euler_char == 1 && !self.orientable
    }

    /// `(euler characteristic, orientable)` of a connected embedding.
    pub fn euler_and_orientability(&self) -> Result<(i64, bool), SurfaceError> {
        if !self.connected {
            return Err(SurfaceError::Disconnected);
        }
        Ok((self.euler_char, self.orientable))
    }

    pub fn require_projective_plane(&self) -> Result<(), SurfaceError> {
        if self.is_projective_plane() {
            Ok(())
        } else {
            Err(SurfaceError::NotProjectivePlane {
                euler_char: self.euler_char,
                orientable: self.orientable,
            })
        }
    }

    pub fn face_of_side(&self, side: Side) -> usize {
        self.side_face[side.index()]
    }

    pub fn face_of_flag(&self, f: Flag) -> usize {
        self.face_of_side(self.srs.side_of(f))
    }

    /// The two faces along an edge (equal when the edge borders one face twice).
    pub fn faces_of_edge(&self, e: EdgeId) -> [usize; 2] {
        [self.side_face[2 * e], self.side_face[2 * e + 1]]
    }

    /// Corners of every face at vertex `v`, as `(face index, flag)` pairs in
    /// the order the rotation visits them.
    pub fn corners_at(&self, v: VertexId) -> Vec<(usize, Flag)> {
        self.srs
            .rotation(v)
            .iter()
            .map(|&d| {
                let f = Flag {
                    dart: d,
                    orientation: Sign::Plus,
                };
                (self.face_of_flag(f), f)
            })
            .collect()
    }

    /// Faces incident to `v` (with repetition when a face visits `v` more than once).
    pub fn faces_at(&self, v: VertexId) -> Vec<usize> {
        self.corners_at(v).into_iter().map(|(f, _)| f).collect()
    }

    pub fn total_face_length(&self) -> usize {
        self.faces.iter().map(FaceWalk::len).sum()
    }
}

/// Vertex switching (one sign per vertex) that makes every edge positive,
/// if one exists. Exists iff every cycle has sign product `+`, i.e. iff the
/// embedding is orientable.
pub(crate) fn switching_to_positive(srs: &SignedRotationSystem) -> Option<Vec<Sign>> {
    let n = srs.vertex_count();
    let mut lambda: Vec<Option<Sign>> = vec![None; n];
    let mut stack = Vec::new();
    for root in 0..n {
        if lambda[root].is_some() {
            continue;
        }
        lambda[root] = Some(Sign::Plus);
        stack.push(root);
        while let Some(v) = stack.pop() {
            let lv = lambda[v].unwrap();
            for &d in srs.rotation(v) {
                let w = srs.dart_target(d);
                let want = lv * srs.sign(d.edge);
                match lambda[w] {
                    None => {
                        lambda[w] = Some(want);
                        stack.push(w);
                    }
                    Some(lw) if lw != want => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(lambda.into_iter().map(Option::unwrap).collect())
}
