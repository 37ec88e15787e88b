//! Builds signed rotation systems from straight-line drawings in the disc
//! model of the projective plane (a disc whose antipodal boundary points are
//! identified). Used to transcribe drawn figures into fixtures.
//!
//! Coordinates are integers with the y axis pointing up; rotations are read
//! off by exact angular comparison.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use super::srs::{Dart, Edge, End, SignedRotationSystem, VertexId};
use super::Sign;

pub type Point = (i64, i64);

fn sub(a: Point, b: Point) -> Point {
    (a.0 - b.0, a.1 - b.1)
}

fn cross(a: Point, b: Point) -> i64 {
    a.0 * b.1 - a.1 * b.0
}

fn dot(a: Point, b: Point) -> i64 {
    a.0 * b.0 + a.1 * b.1
}

/// Compares two directions by their counter-clockwise angle measured from
/// `reference` (the reference itself comes first).
fn ccw_from(reference: Point, a: Point, b: Point) -> Ordering {
    let half = |v: Point| {
        let c = cross(reference, v);
        if c > 0 || (c == 0 && dot(reference, v) > 0) {
            0
        } else {
            1
        }
    };
    half(a).cmp(&half(b)).then_with(|| 0.cmp(&cross(a, b)))
}

/// An endpoint in a polygon drawing: a boundary corner or an interior point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Node {
    Corner(usize),
    Inner(usize),
}

/// A `2k`-gon with opposite corners identified (corner `c` and `c + k` are
/// one vertex, side `j` runs from corner `j` to `j + 1` and is glued to side
/// `j + k`), plus interior points and straight edges between them.
///
/// Vertices are numbered corners `0..k` first, then interior points. Edges
/// are the `k` polygon sides followed by `edges` in order.
#[derive(Clone, Debug)]
pub struct PolygonDrawing {
    /// counter-clockwise
    pub corners: Vec<Point>,
    pub inner: Vec<Point>,
    pub edges: Vec<(Node, Node)>,
}

impl PolygonDrawing {
    fn half(&self) -> usize {
        self.corners.len() / 2
    }

    fn vertex(&self, n: Node) -> VertexId {
        match n {
            Node::Corner(c) => c % self.half(),
            Node::Inner(i) => self.half() + i,
        }
    }

    fn point(&self, n: Node) -> Point {
        match n {
            Node::Corner(c) => self.corners[c],
            Node::Inner(i) => self.inner[i],
        }
    }

    // Orientation of the chart a node is drawn in: the antipodal gluing
    // reverses orientation, so the second half of the corners reads mirrored.
    fn chart(&self, n: Node) -> Sign {
        match n {
            Node::Corner(c) => Sign::from_bool(c < self.half()),
            Node::Inner(_) => Sign::Plus,
        }
    }

    pub fn build(&self) -> SignedRotationSystem {
        let k = self.half();
        assert!(
            k >= 2 && self.corners.len() == 2 * k,
            "polygon needs an even number of corners"
        );
        let area: i64 = (0..2 * k)
            .map(|i| cross(self.corners[i], self.corners[(i + 1) % (2 * k)]))
            .sum();
        assert!(area > 0, "polygon corners must be listed counter-clockwise");

        let mut edges = Vec::with_capacity(k + self.edges.len());
        for j in 0..k {
            let (a, b) = (Node::Corner(j), Node::Corner(j + 1));
            edges.push(Edge {
                u: self.vertex(a),
                v: self.vertex(b),
                sign: self.chart(a) * self.chart(b),
            });
        }
        for &(a, b) in &self.edges {
            assert!(self.vertex(a) != self.vertex(b), "loops are not drawable");
            edges.push(Edge {
                u: self.vertex(a),
                v: self.vertex(b),
                sign: self.chart(a) * self.chart(b),
            });
        }

        // Interior darts grouped by the node (corner copy or interior point)
        // they are drawn at, with their direction.
        let mut at_corner: Vec<Vec<(Point, Dart)>> = vec![Vec::new(); 2 * k];
        let mut at_inner: Vec<Vec<(Point, Dart)>> = vec![Vec::new(); self.inner.len()];
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            let e = k + i;
            for (from, to, end) in [(a, b, End::A), (b, a, End::B)] {
                let item = (sub(self.point(to), self.point(from)), Dart::new(e, end));
                match from {
                    Node::Corner(c) => at_corner[c].push(item),
                    Node::Inner(p) => at_inner[p].push(item),
                }
            }
        }

        let mut rotations = vec![Vec::new(); k + self.inner.len()];
        for i in 0..k {
            let next = sub(self.corners[i + 1], self.corners[i]);
            let mut near = core::mem::take(&mut at_corner[i]);
            near.sort_by(|x, y| ccw_from(next, x.0, y.0));
            let far_corner = i + k;
            let far_next = sub(
                self.corners[(far_corner + 1) % (2 * k)],
                self.corners[far_corner],
            );
            let mut far = core::mem::take(&mut at_corner[far_corner]);
            far.sort_by(|x, y| ccw_from(far_next, x.0, y.0));

            // side i leaves corner i at its A end; side i-1 arrives at its B end
            let prev_side = (i + k - 1) % k;
            let rot = &mut rotations[i];
            rot.push(Dart::new(i, End::A));
            rot.extend(near.iter().map(|x| x.1));
            rot.push(Dart::new(prev_side, End::B));
            rot.extend(far.iter().rev().map(|x| x.1));
        }
        for (p, mut darts) in at_inner.into_iter().enumerate() {
            darts.sort_by(|x, y| ccw_from((1, 0), x.0, y.0));
            rotations[k + p] = darts.into_iter().map(|x| x.1).collect();
        }
        SignedRotationSystem::new(k + self.inner.len(), edges, rotations)
            .expect("polygon drawing yields a well-formed rotation system")
    }
}

/// A straight edge in a crosscap drawing. With `exit = Some(p)` the edge
/// leaves `u` towards the boundary point `p` and re-enters at `-p` on its
/// way to `v`.
#[derive(Clone, Copy, Debug)]
pub struct CrosscapEdge {
    pub u: VertexId,
    pub v: VertexId,
    pub exit: Option<Point>,
}

/// Points strictly inside the disc (centred at the origin) joined by edges,
/// some of which pass through the identified boundary.
#[derive(Clone, Debug)]
pub struct CrosscapDrawing {
    pub points: Vec<Point>,
    pub edges: Vec<CrosscapEdge>,
}

impl CrosscapDrawing {
    pub fn build(&self) -> SignedRotationSystem {
        let n = self.points.len();
        let mut darts: Vec<Vec<(Point, Dart)>> = vec![Vec::new(); n];
        let mut edges = Vec::with_capacity(self.edges.len());
        for (e, ce) in self.edges.iter().enumerate() {
            assert!(ce.u != ce.v, "loops are not drawable");
            let (pu, pv) = (self.points[ce.u], self.points[ce.v]);
            let (du, dv, sign) = match ce.exit {
                None => (sub(pv, pu), sub(pu, pv), Sign::Plus),
                Some(p) => (sub(p, pu), sub((-p.0, -p.1), pv), Sign::Minus),
            };
            darts[ce.u].push((du, Dart::new(e, End::A)));
            darts[ce.v].push((dv, Dart::new(e, End::B)));
            edges.push(Edge {
                u: ce.u,
                v: ce.v,
                sign,
            });
        }
        let rotations = darts
            .into_iter()
            .map(|mut ds| {
                ds.sort_by(|x, y| ccw_from((1, 0), x.0, y.0));
                ds.into_iter().map(|x| x.1).collect()
            })
            .collect();
        SignedRotationSystem::new(n, edges, rotations)
            .expect("crosscap drawing yields a well-formed rotation system")
    }
}
