use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Mul, Neg};

use super::SurfaceError;

pub type VertexId = usize;
pub type EdgeId = usize;

/// Which endpoint of an edge a dart sits at.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum End {
    A,
    B,
}

impl End {
    pub fn flip(self) -> End {
        match self {
            End::A => End::B,
            End::B => End::A,
        }
    }
}

/// Half of an edge, anchored at one of its endpoints.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dart {
    pub edge: EdgeId,
    pub end: End,
}

impl Dart {
    pub fn new(edge: EdgeId, end: End) -> Self {
        Dart { edge, end }
    }

    pub fn opposite(self) -> Dart {
        Dart {
            edge: self.edge,
            end: self.end.flip(),
        }
    }
}

impl fmt::Display for Dart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let marker = match self.end {
            End::A => 'a',
            End::B => 'b',
        };
        write!(f, "{}{}", self.edge, marker)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_bool(positive: bool) -> Sign {
        if positive {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn is_plus(self) -> bool {
        self == Sign::Plus
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_bool(self == rhs)
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        Sign::from_bool(self == Sign::Minus)
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.is_plus() { "+" } else { "-" })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
    pub sign: Sign,
}

impl Edge {
    pub fn endpoint(&self, end: End) -> VertexId {
        match end {
            End::A => self.u,
            End::B => self.v,
        }
    }

    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }
}

/// A graph together with a cyclic order of darts around every vertex and a
/// sign on every edge. Negative edges reverse the local orientation, which is
/// what lets the encoding describe nonorientable surfaces.
///
/// Loops and parallel edges are representable; the model layer rejects them.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedRotationSystem {
    vertex_count: usize,
    edges: Vec<Edge>,
    rotations: Vec<Vec<Dart>>,
    // (vertex, index in rotation) for the A and B dart of every edge
    position: Vec<[(VertexId, usize); 2]>,
}

impl SignedRotationSystem {
    pub fn new(
        vertex_count: usize,
        edges: Vec<Edge>,
        rotations: Vec<Vec<Dart>>,
    ) -> Result<Self, SurfaceError> {
        if rotations.len() != vertex_count {
            return Err(SurfaceError::MalformedRotation {
                reason: "rotation count differs from vertex count",
                dart: None,
            });
        }
        for e in &edges {
            if e.u >= vertex_count || e.v >= vertex_count {
                return Err(SurfaceError::MalformedRotation {
                    reason: "edge endpoint out of range",
                    dart: None,
                });
            }
        }
        const UNSEEN: (VertexId, usize) = (usize::MAX, usize::MAX);
        let mut position = vec![[UNSEEN; 2]; edges.len()];
        for (v, rot) in rotations.iter().enumerate() {
            for (i, d) in rot.iter().enumerate() {
                if d.edge >= edges.len() {
                    return Err(SurfaceError::MalformedRotation {
                        reason: "dart refers to a missing edge",
                        dart: Some(*d),
                    });
                }
                if edges[d.edge].endpoint(d.end) != v {
                    return Err(SurfaceError::MalformedRotation {
                        reason: "dart listed at a vertex it is not incident to",
                        dart: Some(*d),
                    });
                }
                let slot = &mut position[d.edge][d.end as usize];
                if *slot != UNSEEN {
                    return Err(SurfaceError::MalformedRotation {
                        reason: "dart appears twice",
                        dart: Some(*d),
                    });
                }
                *slot = (v, i);
            }
        }
        for (e, pos) in position.iter().enumerate() {
            for (k, end) in [End::A, End::B].into_iter().enumerate() {
                if pos[k] == UNSEEN {
                    return Err(SurfaceError::MalformedRotation {
                        reason: "dart missing from every rotation",
                        dart: Some(Dart::new(e, end)),
                    });
                }
            }
        }
        Ok(SignedRotationSystem {
            vertex_count,
            edges,
            rotations,
            position,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> &Edge {
        &self.edges[e]
    }

    pub fn sign(&self, e: EdgeId) -> Sign {
        self.edges[e].sign
    }

    pub fn rotation(&self, v: VertexId) -> &[Dart] {
        &self.rotations[v]
    }

    pub fn rotations(&self) -> &[Vec<Dart>] {
        &self.rotations
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.rotations[v].len()
    }

    pub fn dart_vertex(&self, d: Dart) -> VertexId {
        self.edges[d.edge].endpoint(d.end)
    }

    /// Vertex at the far end of the dart's edge.
    pub fn dart_target(&self, d: Dart) -> VertexId {
        self.edges[d.edge].endpoint(d.end.flip())
    }

    pub fn dart_index(&self, d: Dart) -> usize {
        self.position[d.edge][d.end as usize].1
    }

    pub fn succ(&self, d: Dart) -> Dart {
        let (v, i) = self.position[d.edge][d.end as usize];
        let rot = &self.rotations[v];
        rot[(i + 1) % rot.len()]
    }

    pub fn pred(&self, d: Dart) -> Dart {
        let (v, i) = self.position[d.edge][d.end as usize];
        let rot = &self.rotations[v];
        rot[(i + rot.len() - 1) % rot.len()]
    }

    /// Successor for `Plus`, predecessor for `Minus`.
    pub fn turn(&self, d: Dart, orientation: Sign) -> Dart {
        if orientation.is_plus() {
            self.succ(d)
        } else {
            self.pred(d)
        }
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.rotations[v].iter().map(move |&d| self.dart_target(d))
    }

    /// Edge joining `u` and `v`, if exactly one exists.
    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        let mut found = None;
        for &d in &self.rotations[u] {
            if self.dart_target(d) == v {
                if found.is_some() && found != Some(d.edge) {
                    return None;
                }
                found = Some(d.edge);
            }
        }
        found
    }

    pub fn has_loops(&self) -> bool {
        self.edges.iter().any(Edge::is_loop)
    }

    /// First pair of parallel edges, if any.
    pub fn parallel_pair(&self) -> Option<(EdgeId, EdgeId)> {
        let mut keys: Vec<((VertexId, VertexId), EdgeId)> = self
            .edges
            .iter()
            .enumerate()
            .map(|(i, e)| ((e.u.min(e.v), e.u.max(e.v)), i))
            .collect();
        keys.sort();
        keys.windows(2)
            .find(|w| w[0].0 == w[1].0)
            .map(|w| (w[0].1, w[1].1))
    }

    pub fn is_connected(&self) -> bool {
        self.component_labels().1 <= 1
    }

    /// Component index per vertex and the number of components.
    pub fn component_labels(&self) -> (Vec<usize>, usize) {
        let mut label = vec![usize::MAX; self.vertex_count];
        let mut count = 0;
        let mut stack = Vec::new();
        for s in 0..self.vertex_count {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = count;
            stack.push(s);
            while let Some(v) = stack.pop() {
                for w in self.neighbors(v) {
                    if label[w] == usize::MAX {
                        label[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        (label, count)
    }

    /// Switches the local orientation at `v`: its rotation is reversed and the
    /// sign of every non-loop edge at `v` flips. The embedding is unchanged.
    pub fn switch_vertex(&mut self, v: VertexId) {
        self.rotations[v].reverse();
        let len = self.rotations[v].len();
        for i in 0..len {
            let d = self.rotations[v][i];
            self.position[d.edge][d.end as usize] = (v, i);
        }
        for e in self.edges.iter_mut() {
            if (e.u == v) != (e.v == v) {
                e.sign = -e.sign;
            }
        }
    }

    /// Sub-system keeping only the given edges (in the given order, relabelled
    /// densely) and the given vertices (relabelled in the given order). Every
    /// kept edge must have both endpoints among `vertices`.
    pub fn restrict(&self, vertices: &[VertexId], edges: &[EdgeId]) -> Restriction {
        let mut vmap = vec![usize::MAX; self.vertex_count];
        for (i, &v) in vertices.iter().enumerate() {
            vmap[v] = i;
        }
        let mut emap = vec![usize::MAX; self.edges.len()];
        let mut new_edges = Vec::with_capacity(edges.len());
        for (i, &e) in edges.iter().enumerate() {
            emap[e] = i;
            let old = self.edges[e];
            debug_assert!(vmap[old.u] != usize::MAX && vmap[old.v] != usize::MAX);
            new_edges.push(Edge {
                u: vmap[old.u],
                v: vmap[old.v],
                sign: old.sign,
            });
        }
        let rotations = vertices
            .iter()
            .map(|&v| {
                self.rotations[v]
                    .iter()
                    .filter(|d| emap[d.edge] != usize::MAX)
                    .map(|d| Dart::new(emap[d.edge], d.end))
                    .collect()
            })
            .collect();
        let srs = SignedRotationSystem::new(vertices.len(), new_edges, rotations)
            .expect("restriction of a well-formed system is well-formed");
        Restriction {
            srs,
            vertices: vertices.to_vec(),
            edges: edges.to_vec(),
        }
    }

    /// Induced sub-system on a vertex set (vertices kept in the given order,
    /// edges in increasing id order).
    pub fn induced(&self, vertices: &[VertexId]) -> Restriction {
        let mut inside = vec![false; self.vertex_count];
        for &v in vertices {
            inside[v] = true;
        }
        let edges: Vec<EdgeId> = (0..self.edges.len())
            .filter(|&e| inside[self.edges[e].u] && inside[self.edges[e].v])
            .collect();
        self.restrict(vertices, &edges)
    }

    /// Orientation double cover: vertex `(v, s)` is `v + s*V` for
    /// `s in {0 (Plus), 1 (Minus)}`. All lifted edges are positive.
    pub fn orientation_double_cover(&self) -> SignedRotationSystem {
        let n = self.vertex_count;
        let m = self.edges.len();
        let mut edges = Vec::with_capacity(2 * m);
        for sheet in 0..2 {
            for e in &self.edges {
                let u = e.u + sheet * n;
                let same = (e.sign == Sign::Plus) == (sheet == 0);
                let v = e.v + if same { 0 } else { n };
                edges.push(Edge {
                    u,
                    v,
                    sign: Sign::Plus,
                });
            }
        }
        // Lifted edge (e, sheet of its A end) has id e + sheet*m.
        let mut rotations = vec![Vec::new(); 2 * n];
        for v in 0..n {
            for sheet in 0..2 {
                let mut rot: Vec<Dart> = self.rotations[v]
                    .iter()
                    .map(|&d| {
                        let e = &self.edges[d.edge];
                        let a_sheet = match d.end {
                            End::A => sheet,
                            End::B => {
                                if e.sign == Sign::Plus {
                                    sheet
                                } else {
                                    1 - sheet
                                }
                            }
                        };
                        Dart::new(d.edge + a_sheet * m, d.end)
                    })
                    .collect();
                if sheet == 1 {
                    rot.reverse();
                }
                rotations[v + sheet * n] = rot;
            }
        }
        SignedRotationSystem::new(2 * n, edges, rotations)
            .expect("double cover of a well-formed system is well-formed")
    }
}

/// A restricted rotation system with the maps back to the host.
#[derive(Clone, Debug)]
pub struct Restriction {
    pub srs: SignedRotationSystem,
    /// host vertex of every restricted vertex
    pub vertices: Vec<VertexId>,
    /// host edge of every restricted edge
    pub edges: Vec<EdgeId>,
}

impl Restriction {
    pub fn host_vertex(&self, v: VertexId) -> VertexId {
        self.vertices[v]
    }

    pub fn host_edge(&self, e: EdgeId) -> EdgeId {
        self.edges[e]
    }
}
