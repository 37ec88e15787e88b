use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;
use core::str::FromStr;

use thiserror::Error;

use crate::surface::{Dart, Edge, End, Sign, SignedRotationSystem, VertexId};

/// Key of an embedding up to vertex relabelling, choice of rotation start,
/// reflection and vertex switching.
///
/// The code lists, for every vertex in breadth-first label order, its degree
/// and then per dart the neighbour's label, the position of the returning
/// dart in the neighbour's reading, and the switched edge sign (0 for `+`).
/// The minimum over all starting flags is taken.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    code: Vec<u32>,
}

impl CanonicalForm {
    pub fn code(&self) -> &[u32] {
        &self.code
    }

    /// Text form: `V,E;` then one `deg:w.i.s,...;` group per vertex.
    pub fn canonical_string(&self) -> String {
        let c = &self.code;
        let mut s = String::new();
        let _ = write!(s, "{},{};", c[0], c[1]);
        let mut i = 2;
        while i < c.len() {
            let deg = c[i] as usize;
            let _ = write!(s, "{}:", deg);
            for k in 0..deg {
                let t = i + 1 + 3 * k;
                let sep = if k + 1 < deg { "," } else { "" };
                let _ = write!(s, "{}.{}.{}{}", c[t], c[t + 1], c[t + 2], sep);
            }
            s.push(';');
            i += 1 + 3 * deg;
        }
        s
    }

    /// The rotation system the code describes, with vertices in label order
    /// and edges in order of first appearance. Isomorphic inputs decode to
    /// identical systems.
    pub fn decode(&self) -> SignedRotationSystem {
        self.try_decode()
            .expect("canonical code decodes to a well-formed system")
    }

    fn try_decode(&self) -> Option<SignedRotationSystem> {
        let c = &self.code;
        let (n, m) = (c[0] as usize, c[1] as usize);
        let mut starts = Vec::with_capacity(n);
        let mut i = 2;
        for _ in 0..n {
            starts.push(i);
            i += 1 + 3 * c[i] as usize;
        }
        let entry = |v: usize, k: usize| {
            let t = starts[v] + 1 + 3 * k;
            (c[t] as usize, c[t + 1] as usize, c[t + 2])
        };
        let mut dart_at: Vec<Vec<Option<Dart>>> =
            (0..n).map(|v| vec![None; c[starts[v]] as usize]).collect();
        let mut edges = Vec::with_capacity(m);
        for v in 0..n {
            for k in 0..dart_at[v].len() {
                if dart_at[v][k].is_some() {
                    continue;
                }
                let (w, back, s) = entry(v, k);
                let e = edges.len();
                edges.push(Edge {
                    u: v,
                    v: w,
                    sign: if s == 0 { Sign::Plus } else { Sign::Minus },
                });
                dart_at[v][k] = Some(Dart::new(e, End::A));
                dart_at[w][back] = Some(Dart::new(e, End::B));
            }
        }
        let rotations = dart_at
            .into_iter()
            .map(|r| r.into_iter().map(Option::unwrap).collect())
            .collect();
        SignedRotationSystem::new(n, edges, rotations).ok()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("malformed canonical string: {0}")]
pub struct ParseCanonicalError(&'static str);

impl FromStr for CanonicalForm {
    type Err = ParseCanonicalError;

    /// Parses [`CanonicalForm::canonical_string`] output, rejecting strings
    /// that are well-formed but not the minimal code of their embedding.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = ParseCanonicalError;
        let num = |t: &str| t.parse::<u32>().map_err(|_| err("expected a number"));
        let mut groups = s
            .trim()
            .strip_suffix(';')
            .ok_or(err("missing final ';'"))?
            .split(';');
        let (n, m) = groups
            .next()
            .and_then(|h| h.split_once(','))
            .ok_or(err("missing 'V,E' header"))?;
        let (n, m) = (num(n)?, num(m)?);
        let mut code = vec![n, m];
        let mut degrees = Vec::new();
        for g in groups {
            let (deg, rest) = g.split_once(':').ok_or(err("vertex group without ':'"))?;
            let deg = num(deg)?;
            let items: Vec<&str> = if rest.is_empty() {
                Vec::new()
            } else {
                rest.split(',').collect()
            };
            if items.len() != deg as usize {
                return Err(err("degree does not match the dart list"));
            }
            code.push(deg);
            degrees.push(deg as usize);
            for item in items {
                let parts: Vec<&str> = item.split('.').collect();
                if parts.len() != 3 {
                    return Err(err("dart entry is not 'w.i.s'"));
                }
                for p in parts {
                    code.push(num(p)?);
                }
            }
        }
        if degrees.len() != n as usize || degrees.iter().sum::<usize>() != 2 * m as usize {
            return Err(err("vertex or edge count does not match the groups"));
        }
        // every dart must be the return dart of the entry it points to
        let mut starts = Vec::with_capacity(degrees.len());
        let mut i = 2;
        for &d in &degrees {
            starts.push(i);
            i += 1 + 3 * d;
        }
        let entry = |v: usize, k: usize| {
            let t = starts[v] + 1 + 3 * k;
            (code[t] as usize, code[t + 1] as usize, code[t + 2])
        };
        for v in 0..degrees.len() {
            for k in 0..degrees[v] {
                let (w, back, sign) = entry(v, k);
                if w >= degrees.len()
                    || back >= degrees[w]
                    || sign > 1
                    || entry(w, back) != (v, k, sign)
                {
                    return Err(err("dart entries are not paired"));
                }
            }
        }
        let form = CanonicalForm { code };
        let srs = form.try_decode().ok_or(err("not a rotation system"))?;
        if !srs.is_connected() || canonical_form(&srs) != form {
            return Err(err("not the canonical code of its embedding"));
        }
        Ok(form)
    }
}

/// Canonical form of a connected rotation system.
pub fn canonical_form(srs: &SignedRotationSystem) -> CanonicalForm {
    assert!(
        srs.is_connected(),
        "canonical form needs a connected system"
    );
    let mut best: Option<Vec<u32>> = None;
    let mut scratch = Scratch::new(srs);
    let mut code = Vec::with_capacity(2 + srs.vertex_count() + 6 * srs.edge_count());
    // the code opens with the root's degree, so only minimum-degree roots matter
    let min_deg = (0..srs.vertex_count())
        .map(|v| srs.degree(v))
        .min()
        .unwrap_or(0);
    for v in (0..srs.vertex_count()).filter(|&v| srs.degree(v) == min_deg) {
        for &d in srs.rotation(v) {
            for o in [Sign::Plus, Sign::Minus] {
                if scratch.encode(srs, d, o, best.as_deref(), &mut code) {
                    best = Some(code.clone());
                }
            }
        }
    }
    let code = best.unwrap_or_else(|| {
        // a single isolated vertex
        let mut c = vec![srs.vertex_count() as u32, 0];
        c.extend((0..srs.vertex_count()).map(|_| 0));
        c
    });
    CanonicalForm { code }
}

struct Scratch {
    label: Vec<usize>,
    order: Vec<VertexId>,
    lambda: Vec<Sign>,
    start: Vec<usize>,
}

impl Scratch {
    fn new(srs: &SignedRotationSystem) -> Self {
        let n = srs.vertex_count();
        Scratch {
            label: vec![usize::MAX; n],
            order: Vec::with_capacity(n),
            lambda: vec![Sign::Plus; n],
            start: vec![0; n],
        }
    }

    /// Position of dart `d` in the reading of its vertex.
    fn reading_index(&self, srs: &SignedRotationSystem, d: Dart) -> usize {
        let v = srs.dart_vertex(d);
        let deg = srs.degree(v);
        let i = srs.dart_index(d);
        if self.lambda[v].is_plus() {
            (i + deg - self.start[v]) % deg
        } else {
            (self.start[v] + deg - i) % deg
        }
    }

    fn reading(&self, srs: &SignedRotationSystem, v: VertexId, k: usize) -> Dart {
        let rot = srs.rotation(v);
        let deg = rot.len();
        if self.lambda[v].is_plus() {
            rot[(self.start[v] + k) % deg]
        } else {
            rot[(self.start[v] + deg - k) % deg]
        }
    }

    /// Writes the code for one starting flag into `code`; false as soon as it
    /// is not smaller than `bound`.
    fn encode(
        &mut self,
        srs: &SignedRotationSystem,
        first: Dart,
        o: Sign,
        bound: Option<&[u32]>,
        code: &mut Vec<u32>,
    ) -> bool {
        self.label.fill(usize::MAX);
        self.order.clear();
        let root = srs.dart_vertex(first);
        self.label[root] = 0;
        self.order.push(root);
        self.lambda[root] = o;
        self.start[root] = srs.dart_index(first);

        code.clear();
        code.push(srs.vertex_count() as u32);
        code.push(srs.edge_count() as u32);
        let mut smaller = false;
        let mut push = |code: &mut Vec<u32>, x: u32| -> bool {
            if let (false, Some(b)) = (smaller, bound) {
                let i = code.len();
                match x.cmp(&b[i]) {
                    core::cmp::Ordering::Less => smaller = true,
                    core::cmp::Ordering::Greater => return false,
                    core::cmp::Ordering::Equal => {}
                }
            }
            code.push(x);
            true
        };
        let mut head = 0;
        while head < self.order.len() {
            let v = self.order[head];
            head += 1;
            let deg = srs.degree(v);
            if !push(code, deg as u32) {
                return false;
            }
            for k in 0..deg {
                let d = self.reading(srs, v, k);
                let back = d.opposite();
                let w = srs.dart_vertex(back);
                if self.label[w] == usize::MAX {
                    self.label[w] = self.order.len();
                    self.order.push(w);
                    self.lambda[w] = self.lambda[v] * srs.sign(d.edge);
                    self.start[w] = srs.dart_index(back);
                }
                let s = self.lambda[v] * self.lambda[w] * srs.sign(d.edge);
                let items = [
                    self.label[w] as u32,
                    self.reading_index(srs, back) as u32,
                    u32::from(!s.is_plus()),
                ];
                for x in items {
                    if !push(code, x) {
                        return false;
                    }
                }
            }
        }
        bound.is_none() || smaller
    }
}
