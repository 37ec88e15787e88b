//! Embedded pattern fixtures, built from coordinate drawings.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::surface::polygon::{CrosscapDrawing, CrosscapEdge, Node, Point, PolygonDrawing};
use crate::surface::{EmbeddedGraph, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PatternId {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    I,
    II,
    III,
    IV,
    Bowtie,
    SevenCut1,
    SevenCut2,
    SevenCut3,
    SevenCut4,
}

impl PatternId {
    pub const ALL: [PatternId; 16] = [
        PatternId::A,
        PatternId::B,
        PatternId::C,
        PatternId::D,
        PatternId::E,
        PatternId::F,
        PatternId::G,
        PatternId::I,
        PatternId::II,
        PatternId::III,
        PatternId::IV,
        PatternId::Bowtie,
        PatternId::SevenCut1,
        PatternId::SevenCut2,
        PatternId::SevenCut3,
        PatternId::SevenCut4,
    ];

    /// Certificate configurations for non-extendable 3-matchings.
    pub const CERTIFICATES: [PatternId; 7] = [
        PatternId::A,
        PatternId::B,
        PatternId::C,
        PatternId::D,
        PatternId::E,
        PatternId::F,
        PatternId::G,
    ];

    /// Shapes of the induced subgraph of a minimal 6-cut.
    pub const SIX_CUT_SHAPES: [PatternId; 4] =
        [PatternId::I, PatternId::II, PatternId::III, PatternId::IV];

    pub fn name(self) -> &'static str {
        match self {
            PatternId::A => "a",
            PatternId::B => "b",
            PatternId::C => "c",
            PatternId::D => "d",
            PatternId::E => "e",
            PatternId::F => "f",
            PatternId::G => "g",
            PatternId::I => "I",
            PatternId::II => "II",
            PatternId::III => "III",
            PatternId::IV => "IV",
            PatternId::Bowtie => "bowtie",
            PatternId::SevenCut1 => "seven-1",
            PatternId::SevenCut2 => "seven-2",
            PatternId::SevenCut3 => "seven-3",
            PatternId::SevenCut4 => "seven-4",
        }
    }
}

impl fmt::Display for PatternId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PatternId {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, ()> {
        PatternId::ALL.into_iter().find(|p| p.name() == s).ok_or(())
    }
}

/// An embedded pattern with role marks: `gray` vertices must be exactly the
/// vertices covered by the matching under test, and every face listed in
/// `odd_faces` must land on an odd weighted region of the host.
#[derive(Clone, Debug)]
pub struct ConfigPattern {
    pub id: PatternId,
    pub embedding: EmbeddedGraph,
    pub gray: Vec<VertexId>,
    pub odd_faces: Vec<usize>,
}

// Drawing coordinates are the figure's, with the vertical axis flipped.
fn flip(points: &[(i64, i64)]) -> Vec<Point> {
    points.iter().map(|&(x, y)| (x, -y)).collect()
}

const C: fn(usize) -> Node = Node::Corner;
const P: fn(usize) -> Node = Node::Inner;

// Hexagon with corners top, upper left, lower left, bottom, lower right,
// upper right; opposite corners are one vertex.
fn hexagon(dx: i64, dy: i64) -> Vec<Point> {
    let base = [
        (1745, 1170),
        (1300, 1445),
        (1303, 1898),
        (1745, 2165),
        (2195, 1900),
        (2200, 1450),
    ];
    flip(&base.map(|(x, y)| (x + dx, y + dy)))
}

/// Vertices: 0 top/bottom corner, 1 and 2 the other corner pairs, 3.. inner.
fn shape_ab() -> EmbeddedGraph {
    // vertical path through two inner points, and a path from its lower
    // point to the upper right corner
    let d = PolygonDrawing {
        corners: hexagon(0, 0),
        inner: flip(&[(1745, 1505), (1745, 1840), (1900, 1700), (2045, 1570)]),
        edges: vec![
            (C(0), P(0)),
            (P(0), P(1)),
            (P(1), C(3)),
            (P(1), P(2)),
            (P(2), P(3)),
            (P(3), C(5)),
        ],
    };
    EmbeddedGraph::new(d.build())
}

fn shape_c() -> EmbeddedGraph {
    // two parallel paths from the top corner to the bottom corner
    let d = PolygonDrawing {
        corners: hexagon(2871, -2),
        inner: flip(&[(4616, 1503), (4616, 1838), (4815, 1505), (4815, 1830)]),
        edges: vec![
            (C(0), P(0)),
            (P(0), P(1)),
            (P(1), C(3)),
            (C(0), P(2)),
            (P(2), P(3)),
            (P(3), C(3)),
        ],
    };
    EmbeddedGraph::new(d.build())
}

/// Vertices: 0 top/bottom, 1 upper left/lower right, 2 left/right,
/// 3 lower left/upper right, 4 centre, 5 and 6 inner.
fn shape_de() -> EmbeddedGraph {
    let d = PolygonDrawing {
        corners: flip(&[
            (980, 2424),
            (622, 2577),
            (496, 2931),
            (629, 3291),
            (980, 3434),
            (1342, 3291),
            (1487, 2931),
            (1342, 2577),
        ]),
        inner: flip(&[(982, 2931), (793, 3114), (1172, 3114)]),
        edges: vec![
            (C(0), P(0)),
            (P(0), P(1)),
            (P(1), C(3)),
            (P(0), P(2)),
            (P(2), C(5)),
        ],
    };
    EmbeddedGraph::new(d.build())
}

/// Vertices: 0 top/bottom, 1 and 2 the other corner pairs, 3 upper inner,
/// 4 centre, 5 and 6 lower inner.
fn shape_fg() -> EmbeddedGraph {
    let d = PolygonDrawing {
        corners: flip(&[
            (3846, 2426),
            (3398, 2710),
            (3398, 3158),
            (3846, 3430),
            (4294, 3158),
            (4294, 2710),
        ]),
        inner: flip(&[(3846, 2735), (3844, 2935), (3654, 3017), (4033, 3017)]),
        edges: vec![
            (C(0), P(0)),
            (P(0), P(1)),
            (P(1), P(2)),
            (P(2), C(2)),
            (P(1), P(3)),
            (P(3), C(4)),
        ],
    };
    EmbeddedGraph::new(d.build())
}

// Crosscap drawings: a hexagon in the middle of the disc, vertices top,
// upper right, lower right, bottom, lower left, upper left.
fn six_cycle(chords: &[CrosscapEdge]) -> EmbeddedGraph {
    let points = vec![(0, 10), (9, 5), (9, -5), (0, -10), (-9, -5), (-9, 5)];
    let mut edges: Vec<CrosscapEdge> = (0..6)
        .map(|i| CrosscapEdge {
            u: i,
            v: (i + 1) % 6,
            exit: None,
        })
        .collect();
    edges.extend_from_slice(chords);
    EmbeddedGraph::new(CrosscapDrawing { points, edges }.build())
}

/// Vertices: 0 `p1`, 1 `p3`, 2 `p2`, 3 `p5`, 4 `p4`.
fn bowtie() -> EmbeddedGraph {
    let d = PolygonDrawing {
        corners: vec![(0, 10), (-9, 5), (-9, -5), (0, -10), (9, -5), (9, 5)],
        inner: vec![(0, 3), (0, -3)],
        edges: vec![(C(0), P(0)), (P(0), P(1)), (P(1), C(3))],
    };
    EmbeddedGraph::new(d.build())
}

fn all_faces(g: &EmbeddedGraph) -> Vec<usize> {
    (0..g.face_count()).collect()
}

fn without(n: usize, black: VertexId) -> Vec<VertexId> {
    (0..n).filter(|&v| v != black).collect()
}

pub fn pattern(id: PatternId) -> ConfigPattern {
    let (embedding, gray, odd) = match id {
        PatternId::A => (shape_ab(), without(7, 0), true),
        PatternId::B => (shape_ab(), without(7, 2), true),
        PatternId::C => (shape_c(), without(7, 0), true),
        PatternId::D => (shape_de(), without(7, 0), true),
        PatternId::E => (shape_de(), without(7, 4), true),
        PatternId::F => (shape_fg(), without(7, 4), true),
        PatternId::G => (shape_fg(), without(7, 0), true),
        PatternId::SevenCut1 => (shape_ab(), Vec::new(), true),
        PatternId::SevenCut2 => (shape_c(), Vec::new(), true),
        PatternId::SevenCut3 => (shape_de(), Vec::new(), true),
        PatternId::SevenCut4 => (shape_fg(), Vec::new(), true),
        PatternId::I => (six_cycle(&[]), Vec::new(), false),
        PatternId::II => (
            six_cycle(&[CrosscapEdge {
                u: 0,
                v: 3,
                exit: Some((0, 100)),
            }]),
            Vec::new(),
            false,
        ),
        PatternId::III => (
            six_cycle(&[CrosscapEdge {
                u: 0,
                v: 2,
                exit: Some((0, 100)),
            }]),
            Vec::new(),
            false,
        ),
        PatternId::IV => (
            six_cycle(&[
                CrosscapEdge {
                    u: 0,
                    v: 3,
                    exit: Some((0, 100)),
                },
                CrosscapEdge {
                    u: 1,
                    v: 4,
                    exit: Some((100, 44)),
                },
            ]),
            Vec::new(),
            false,
        ),
        PatternId::Bowtie => (bowtie(), Vec::new(), false),
    };
    let odd_faces = if odd {
        all_faces(&embedding)
    } else {
        Vec::new()
    };
    ConfigPattern {
        id,
        embedding,
        gray,
        odd_faces,
    }
}
