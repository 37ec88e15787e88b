use alloc::vec;
use alloc::vec::Vec;

use super::patterns::ConfigPattern;
use crate::surface::{
    region_decompose, Dart, EdgeId, EmbeddedGraph, End, Flag, Sign, SignedRotationSystem, VertexId,
};

/// One occurrence of a pattern: pattern vertex `i` sits at `vertex_map[i]`,
/// pattern edge `e` at host edge `edge_map[e]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternMatch {
    pub vertex_map: Vec<VertexId>,
    pub edge_map: Vec<EdgeId>,
}

/// Switching that turns `p` into `r`, for two systems on the same labelled
/// simple graph: `lambda[v] = Minus` means the rotation at `v` is read
/// backwards. Each connected component may also be reflected as a whole.
pub fn switching_equivalence(
    p: &SignedRotationSystem,
    r: &SignedRotationSystem,
) -> Option<Vec<Sign>> {
    let n = p.vertex_count();
    if r.vertex_count() != n || r.edge_count() != p.edge_count() {
        return None;
    }
    let mut lambda: Vec<Option<Sign>> = vec![None; n];
    for root in 0..n {
        if lambda[root].is_some() {
            continue;
        }
        lambda[root] = Some(Sign::Plus);
        let mut comp = vec![root];
        let mut head = 0;
        while head < comp.len() {
            let v = comp[head];
            head += 1;
            let lv = lambda[v].unwrap();
            for &d in p.rotation(v) {
                let w = p.dart_target(d);
                let want = lv * p.sign(d.edge) * r.sign(d.edge);
                match lambda[w] {
                    None => {
                        lambda[w] = Some(want);
                        comp.push(w);
                    }
                    Some(s) if s != want => return None,
                    Some(_) => {}
                }
            }
        }
        let fits = |t: Sign| {
            comp.iter()
                .all(|&v| same_cycle(p.rotation(v), r.rotation(v), lambda[v].unwrap() * t))
        };
        let t = if fits(Sign::Plus) {
            Sign::Plus
        } else if fits(Sign::Minus) {
            Sign::Minus
        } else {
            return None;
        };
        for &v in &comp {
            lambda[v] = Some(lambda[v].unwrap() * t);
        }
    }
    Some(lambda.into_iter().map(Option::unwrap).collect())
}

// Equal as cyclic sequences of edge ids, `b` read backwards for `Minus`.
fn same_cycle(a: &[Dart], b: &[Dart], s: Sign) -> bool {
    let k = a.len();
    if b.len() != k {
        return false;
    }
    if k == 0 {
        return true;
    }
    let Some(off) = b.iter().position(|d| d.edge == a[0].edge) else {
        return false;
    };
    (0..k).all(|i| {
        let j = if s.is_plus() {
            (off + i) % k
        } else {
            (off + k - i) % k
        };
        a[i].edge == b[j].edge
    })
}

/// Every placement of `pattern` in `host` as an embedded subgraph: an
/// injective vertex map carrying edges to edges whose restricted host
/// embedding is the pattern's up to switching and reflection.
pub fn embedded_occurrences(
    host: &EmbeddedGraph,
    pattern: &EmbeddedGraph,
) -> Vec<(PatternMatch, Vec<Sign>)> {
    let (hs, ps) = (host.srs(), pattern.srs());
    let np = ps.vertex_count();
    let mut out = Vec::new();
    if np == 0 || np > hs.vertex_count() {
        return out;
    }
    // breadth-first placement order, so that most vertices have a placed neighbour
    let mut order = Vec::with_capacity(np);
    let mut anchor = vec![None; np];
    let mut seen = vec![false; np];
    for root in 0..np {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        order.push(root);
        let mut head = order.len() - 1;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for w in ps.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    anchor[w] = Some(v);
                    order.push(w);
                }
            }
        }
    }
    let mut map = vec![usize::MAX; np];
    let mut used = vec![false; hs.vertex_count()];
    let mut search = Search {
        hs,
        ps,
        order: &order,
        anchor: &anchor,
        map: &mut map,
        used: &mut used,
        out: &mut out,
    };
    search.place(0);
    out
}

struct Search<'a> {
    hs: &'a SignedRotationSystem,
    ps: &'a SignedRotationSystem,
    order: &'a [VertexId],
    anchor: &'a [Option<VertexId>],
    map: &'a mut Vec<VertexId>,
    used: &'a mut Vec<bool>,
    out: &'a mut Vec<(PatternMatch, Vec<Sign>)>,
}

impl Search<'_> {
    fn place(&mut self, depth: usize) {
        if depth == self.order.len() {
            self.finish();
            return;
        }
        let v = self.order[depth];
        let candidates: Vec<VertexId> = match self.anchor[v] {
            Some(a) => self.hs.neighbors(self.map[a]).collect(),
            None => (0..self.hs.vertex_count()).collect(),
        };
        for h in candidates {
            if self.used[h] || self.hs.degree(h) < self.ps.degree(v) {
                continue;
            }
            let adjacent_ok = self.ps.neighbors(v).all(|w| {
                self.map[w] == usize::MAX || self.hs.edge_between(h, self.map[w]).is_some()
            });
            if !adjacent_ok {
                continue;
            }
            self.map[v] = h;
            self.used[h] = true;
            self.place(depth + 1);
            self.used[h] = false;
            self.map[v] = usize::MAX;
        }
    }

    fn finish(&mut self) {
        let edge_map: Vec<EdgeId> = self
            .ps
            .edges()
            .iter()
            .map(|e| {
                self.hs
                    .edge_between(self.map[e.u], self.map[e.v])
                    .expect("adjacency checked")
            })
            .collect();
        let restricted = self.hs.restrict(self.map, &edge_map);
        if let Some(lambda) = switching_equivalence(self.ps, &restricted.srs) {
            self.out.push((
                PatternMatch {
                    vertex_map: self.map.clone(),
                    edge_map,
                },
                lambda,
            ));
        }
    }
}

/// Occurrences of `pat` in `host` whose marked faces are all odd weighted
/// regions of `host`.
pub fn match_pattern(host: &EmbeddedGraph, pat: &ConfigPattern) -> Vec<PatternMatch> {
    embedded_occurrences(host, &pat.embedding)
        .into_iter()
        .filter(|(m, lambda)| pat.odd_faces.is_empty() || faces_are_odd(host, pat, m, lambda))
        .map(|(m, _)| m)
        .collect()
}

fn faces_are_odd(
    host: &EmbeddedGraph,
    pat: &ConfigPattern,
    m: &PatternMatch,
    lambda: &[Sign],
) -> bool {
    let ps = pat.embedding.srs();
    let hs = host.srs();
    let Ok(dec) = region_decompose(host, &m.edge_map) else {
        return false;
    };
    pat.odd_faces.iter().all(|&f| {
        let flag = pat.embedding.face(f).flags[0];
        let u = ps.dart_vertex(flag.dart);
        let he = m.edge_map[flag.dart.edge];
        let end = if hs.edge(he).u == m.vertex_map[u] {
            End::A
        } else {
            End::B
        };
        let host_flag = Flag {
            dart: Dart::new(he, end),
            orientation: flag.orientation * lambda[u],
        };
        let region = &dec.regions[dec.region_of_face(host.face_of_flag(host_flag))];
        region.is_two_cell && region.interior_vertices.len() % 2 == 1
    })
}
