use alloc::vec;
use alloc::vec::Vec;

use super::srs::{Dart, EdgeId, End, SignedRotationSystem, VertexId};
use super::Sign;

/// A dart together with the local orientation a face walk carries when it
/// leaves the dart's vertex along it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Flag {
    pub dart: Dart,
    pub orientation: Sign,
}

/// One of the two sides of an edge, named by the orientation a walk would
/// carry when leaving the edge's `A` end on that side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Side {
    pub edge: EdgeId,
    pub orientation: Sign,
}

impl Side {
    pub fn index(self) -> usize {
        2 * self.edge + usize::from(!self.orientation.is_plus())
    }
}

impl SignedRotationSystem {
    /// One face-tracing step: run along the flag's edge, pick up the edge
    /// sign and turn at the far vertex.
    pub fn face_step(&self, f: Flag) -> Flag {
        let arrive = f.dart.opposite();
        let orientation = f.orientation * self.sign(f.dart.edge);
        Flag {
            dart: self.turn(arrive, orientation),
            orientation,
        }
    }

    pub fn side_of(&self, f: Flag) -> Side {
        match f.dart.end {
            End::A => Side {
                edge: f.dart.edge,
                orientation: f.orientation,
            },
            End::B => Side {
                edge: f.dart.edge,
                orientation: -(f.orientation * self.sign(f.dart.edge)),
            },
        }
    }

    /// The flag that leaves the `A` end of `side.edge` on that side.
    pub fn side_flag(&self, side: Side) -> Flag {
        Flag {
            dart: Dart::new(side.edge, End::A),
            orientation: side.orientation,
        }
    }
}

/// Boundary walk of one face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceWalk {
    pub flags: Vec<Flag>,
    pub is_cycle: bool,
}

impl FaceWalk {
    fn new(srs: &SignedRotationSystem, flags: Vec<Flag>) -> Self {
        let mut seen: Vec<VertexId> = flags.iter().map(|f| srs.dart_vertex(f.dart)).collect();
        seen.sort_unstable();
        let is_cycle = seen.windows(2).all(|w| w[0] != w[1]);
        FaceWalk { flags, is_cycle }
    }

    pub fn len(&self) -> usize {
        self.flags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flags.is_empty()
    }

    pub fn darts(&self) -> impl Iterator<Item = Dart> + '_ {
        self.flags.iter().map(|f| f.dart)
    }

    /// Vertices in walk order (the vertex each dart leaves from).
    pub fn vertices(&self, srs: &SignedRotationSystem) -> Vec<VertexId> {
        self.flags.iter().map(|f| srs.dart_vertex(f.dart)).collect()
    }

    pub fn edges(&self) -> Vec<EdgeId> {
        self.flags.iter().map(|f| f.dart.edge).collect()
    }
}

/// Traces every face of the system. Faces are discovered from the smallest
/// unused `(edge, side)` pair, `Plus` side first, so the output order is
/// deterministic. Each edge side is traversed by exactly one face.
pub fn trace_faces(srs: &SignedRotationSystem) -> Vec<FaceWalk> {
    let mut used = vec![false; 2 * srs.edge_count()];
    let mut faces = Vec::new();
    for e in 0..srs.edge_count() {
        for orientation in [Sign::Plus, Sign::Minus] {
            let side = Side {
                edge: e,
                orientation,
            };
            if used[side.index()] {
                continue;
            }
            let start = srs.side_flag(side);
            let mut flags = Vec::new();
            let mut f = start;
            loop {
                let s = srs.side_of(f).index();
                debug_assert!(!used[s], "edge side traversed twice");
                used[s] = true;
                flags.push(f);
                f = srs.face_step(f);
                if f == start {
                    break;
                }
            }
            faces.push(FaceWalk::new(srs, flags));
        }
    }
    faces
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::srs::Edge;

    #[test]
    fn one_sided_loop_has_a_single_face_of_length_two() {
        let s = SignedRotationSystem::new(
            1,
            vec![Edge {
                u: 0,
                v: 0,
                sign: Sign::Minus,
            }],
            vec![vec![Dart::new(0, End::A), Dart::new(0, End::B)]],
        )
        .unwrap();
        let faces = trace_faces(&s);
        assert_eq!(faces.len(), 1);
        assert_eq!(faces[0].len(), 2);
    }

    #[test]
    fn planar_four_cycle_has_two_square_faces() {
        let edges = (0..4)
            .map(|i| Edge {
                u: i,
                v: (i + 1) % 4,
                sign: Sign::Plus,
            })
            .collect();
        let rot = (0..4)
            .map(|i| vec![Dart::new(i, End::A), Dart::new((i + 3) % 4, End::B)])
            .collect();
        let s = SignedRotationSystem::new(4, edges, rot).unwrap();
        let faces = trace_faces(&s);
        assert_eq!(faces.len(), 2);
        assert!(faces.iter().all(|f| f.len() == 4 && f.is_cycle));
    }
}
