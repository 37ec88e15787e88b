use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::canonical::{canonical_form, CanonicalForm};
use super::search::search_with_limit;
use super::GeneratorError;
use crate::graph::SimpleGraph;
use crate::model::{build_o1ppg, ModelError, O1ppg, Quadrangulation};
use crate::surface::{Dart, Edge, EmbeddedGraph, End, Sign, SignedRotationSystem, VertexId};

/// Largest order [`enumerate_o1ppg`] accepts.
pub const MAX_ORDER: usize = 14;

/// Splits `v` along the darts at rotation positions `i` and `j`, which lead
/// to `x` and `y`. The old vertex keeps the darts `i..=j` (cyclically); a new
/// vertex takes the rest together with fresh edges to `x` and `y`, so a new
/// face `v x v' y` appears and every old face keeps its length.
///
/// Returns `None` when a chosen dart is a loop or `x == y`.
pub fn vertex_split(
    srs: &SignedRotationSystem,
    v: VertexId,
    i: usize,
    j: usize,
) -> Option<SignedRotationSystem> {
    let deg = srs.degree(v);
    if i == j || i >= deg || j >= deg {
        return None;
    }
    let (di, dj) = (srs.rotation(v)[i], srs.rotation(v)[j]);
    let (x, y) = (srs.dart_target(di), srs.dart_target(dj));
    if x == v || y == v || x == y {
        return None;
    }
    let mut s = srs.clone();
    if s.sign(di.edge) == Sign::Minus {
        s.switch_vertex(x);
    }
    if s.sign(dj.edge) == Sign::Minus {
        s.switch_vertex(y);
    }
    let n = s.vertex_count();
    let m = s.edge_count();
    let mut edges: Vec<Edge> = s.edges().to_vec();
    edges.push(Edge {
        u: n,
        v: x,
        sign: Sign::Plus,
    });
    edges.push(Edge {
        u: n,
        v: y,
        sign: Sign::Plus,
    });
    let (to_x, to_y) = (Dart::new(m, End::A), Dart::new(m + 1, End::A));

    let rot = s.rotation(v);
    let keep: Vec<Dart> = (0..=(j + deg - i) % deg)
        .map(|k| rot[(i + k) % deg])
        .collect();
    let moved: Vec<Dart> = (1..(i + deg - j) % deg)
        .map(|k| rot[(j + k) % deg])
        .collect();
    for d in &moved {
        let e = &mut edges[d.edge];
        match d.end {
            End::A => e.u = n,
            End::B => e.v = n,
        }
    }
    let mut rotations: Vec<Vec<Dart>> = s.rotations().to_vec();
    rotations[v] = keep;
    let mut new_rot = Vec::with_capacity(moved.len() + 2);
    new_rot.push(to_y);
    new_rot.extend(moved);
    new_rot.push(to_x);
    rotations.push(new_rot);
    splice(
        &mut rotations[x],
        di.opposite(),
        &[di.opposite(), to_x.opposite()],
    );
    splice(
        &mut rotations[y],
        dj.opposite(),
        &[to_y.opposite(), dj.opposite()],
    );
    Some(
        SignedRotationSystem::new(n + 1, edges, rotations)
            .expect("vertex split keeps the system well-formed"),
    )
}

fn splice(rot: &mut Vec<Dart>, at: Dart, with: &[Dart]) {
    let p = rot.iter().position(|&d| d == at).expect("dart present");
    rot.splice(p..=p, with.iter().copied());
}

/// Inserts a degree-2 vertex into face `face`, joined to the face's corners
/// `corner` and `corner + 2`; the face becomes two quadrangles.
pub fn face_subdivision(
    g: &EmbeddedGraph,
    face: usize,
    corner: usize,
) -> Option<SignedRotationSystem> {
    let srs = g.srs();
    let walk = g.face(face);
    if walk.len() != 4 {
        return None;
    }
    // Split the corner's successor b between its darts to the corner and to
    // the opposite corner; the part keeping just those two darts is the new
    // degree-2 vertex.
    let leave = walk.flags[(corner + 1) % 4];
    let arrive = walk.flags[corner].dart.opposite();
    let (p, q) = (srs.dart_index(arrive), srs.dart_index(leave.dart));
    let (i, j) = if leave.orientation.is_plus() {
        (p, q)
    } else {
        (q, p)
    };
    vertex_split(srs, srs.dart_vertex(leave.dart), i, j)
}

/// Every simple child of `srs` under vertex splitting (which includes face
/// subdivision as the case of adjacent darts). Splitting at `(i, j)` and at
/// `(j, i)` gives the same halves, so only `i < j` is tried.
pub fn children(srs: &SignedRotationSystem) -> Vec<SignedRotationSystem> {
    let mut out = Vec::new();
    for v in 0..srs.vertex_count() {
        let deg = srs.degree(v);
        for i in 0..deg {
            for j in i + 1..deg {
                if let Some(c) = vertex_split(srs, v, i, j) {
                    if !c.has_loops() && c.parallel_pair().is_none() {
                        out.push(c);
                    }
                }
            }
        }
    }
    out
}

/// A generated quadrangulation with its canonical form.
#[derive(Clone, Debug)]
pub struct CorpusMember {
    pub canonical: CanonicalForm,
    pub quad: Quadrangulation,
}

/// Closure of `seeds` under vertex splitting up to `n_max` vertices, keeping
/// simple quadrangulations, one per isomorphism class. Ordered by order and
/// then canonical form; polyhedrality is recorded, not required.
pub fn grow_quadrangulations(seeds: &[SignedRotationSystem], n_max: usize) -> Vec<CorpusMember> {
    let mut levels: BTreeMap<usize, BTreeMap<CanonicalForm, ()>> = BTreeMap::new();
    for s in seeds {
        if s.vertex_count() <= n_max {
            levels
                .entry(s.vertex_count())
                .or_default()
                .insert(canonical_form(s), ());
        }
    }
    let lowest = levels.keys().next().copied().unwrap_or(n_max + 1);
    for n in lowest..n_max {
        let frontier: Vec<CanonicalForm> = levels
            .get(&n)
            .map(|l| l.keys().cloned().collect())
            .unwrap_or_default();
        for c in frontier {
            for child in children(&c.decode()) {
                levels
                    .entry(n + 1)
                    .or_default()
                    .insert(canonical_form(&child), ());
            }
        }
    }
    levels
        .into_values()
        .flat_map(|l| l.into_keys())
        .map(|canonical| {
            let quad = Quadrangulation::check(EmbeddedGraph::new(canonical.decode()))
                .expect("growth preserves simple quadrangulations of the projective plane");
            CorpusMember { canonical, quad }
        })
        .collect()
}

/// The hemicube: the unique even-faced projective-plane embedding of `K4`.
pub fn hemicube_seed() -> SignedRotationSystem {
    let k4 = SimpleGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
    let found = search_with_limit(&k4, 6, |g| g.faces().iter().all(|f| f.len() == 4)).unwrap();
    found[0].srs().clone()
}

/// Every quadrangular projective-plane embedding of `K_{3,4}`.
pub fn k34_seeds() -> Vec<SignedRotationSystem> {
    let mut edges = Vec::new();
    for a in 0..3 {
        for b in 3..7 {
            edges.push((a, b));
        }
    }
    let k34 = SimpleGraph::from_edges(7, &edges).unwrap();
    search_with_limit(&k34, 12, |g| g.faces().iter().all(|f| f.len() == 4))
        .unwrap()
        .into_iter()
        .map(|g| g.into_srs())
        .collect()
}

pub fn default_seeds() -> Vec<SignedRotationSystem> {
    let mut seeds = alloc::vec![hemicube_seed()];
    seeds.extend(k34_seeds());
    seeds
}

/// Optimal 1-embedded graphs over the polyhedral members of a grown corpus
/// with at least nine vertices, in corpus order.
pub fn o1ppg_from_corpus(corpus: &[CorpusMember], even_only: bool) -> Vec<(CanonicalForm, O1ppg)> {
    corpus
        .iter()
        .filter(|m| m.quad.is_polyhedral() && m.quad.vertex_count() >= 9)
        .filter(|m| !even_only || m.quad.vertex_count() % 2 == 0)
        .filter_map(|m| match build_o1ppg(m.quad.clone()) {
            Ok(g) => Some((m.canonical.clone(), g)),
            Err(ModelError::NotSimpleResult { .. }) => None,
            Err(e) => panic!("unexpected build failure on a polyhedral member: {e}"),
        })
        .collect()
}

pub fn enumerate_o1ppg(
    n_max: usize,
    even_only: bool,
) -> Result<Vec<(CanonicalForm, O1ppg)>, GeneratorError> {
    if n_max > MAX_ORDER {
        return Err(GeneratorError::OrderTooLarge {
            n_max,
            limit: MAX_ORDER,
        });
    }
    let corpus = grow_quadrangulations(&default_seeds(), n_max);
    Ok(o1ppg_from_corpus(&corpus, even_only))
}
