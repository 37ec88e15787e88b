use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::canonical::{canonical_form, CanonicalForm};
use super::GeneratorError;
use crate::graph::SimpleGraph;
use crate::surface::{Dart, Edge, EmbeddedGraph, End, Sign, SignedRotationSystem};

/// Edge bound of [`exhaustive_small_search`].
pub const SMALL_SEARCH_MAX_EDGES: usize = 10;

/// All projective-plane embeddings of a connected simple graph that satisfy
/// `predicate`, one per isomorphism class, ordered by canonical form.
///
/// Rotations are enumerated with the first dart at every vertex fixed, and
/// signs with a spanning tree switched to `+`, which covers every embedding
/// up to switching.
pub fn exhaustive_small_search<P>(
    graph: &SimpleGraph,
    predicate: P,
) -> Result<Vec<EmbeddedGraph>, GeneratorError>
where
    P: FnMut(&EmbeddedGraph) -> bool,
{
    search_with_limit(graph, SMALL_SEARCH_MAX_EDGES, predicate)
}

pub(crate) fn search_with_limit<P>(
    graph: &SimpleGraph,
    max_edges: usize,
    mut predicate: P,
) -> Result<Vec<EmbeddedGraph>, GeneratorError>
where
    P: FnMut(&EmbeddedGraph) -> bool,
{
    let (n, m) = (graph.vertex_count(), graph.edge_count());
    if m > max_edges {
        return Err(GeneratorError::TooLarge {
            edges: m,
            limit: max_edges,
        });
    }
    if n == 0 || !graph.is_connected() {
        return Err(GeneratorError::Disconnected);
    }

    let mut base: Vec<Vec<Dart>> = vec![Vec::new(); n];
    for (e, &(u, v)) in graph.edges().iter().enumerate() {
        base[u].push(Dart::new(e, End::A));
        base[v].push(Dart::new(e, End::B));
    }
    let tree = spanning_tree(graph);
    let free: Vec<usize> = (0..m).filter(|&e| !tree[e]).collect();

    let mut found: BTreeMap<CanonicalForm, EmbeddedGraph> = BTreeMap::new();
    let mut perms: Vec<Vec<usize>> = base.iter().map(|r| (0..r.len()).collect()).collect();
    loop {
        let rotations: Vec<Vec<Dart>> = base
            .iter()
            .zip(&perms)
            .map(|(r, p)| p.iter().map(|&i| r[i]).collect())
            .collect();
        for mask in 0u64..(1u64 << free.len()) {
            let mut edges: Vec<Edge> = graph
                .edges()
                .iter()
                .map(|&(u, v)| Edge {
                    u,
                    v,
                    sign: Sign::Plus,
                })
                .collect();
            for (bit, &e) in free.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    edges[e].sign = Sign::Minus;
                }
            }
            let srs = SignedRotationSystem::new(n, edges, rotations.clone())
                .expect("well-formed by construction");
            let g = EmbeddedGraph::new(srs);
            if g.is_projective_plane() && predicate(&g) {
                found.entry(canonical_form(g.srs())).or_insert(g);
            }
        }
        if !advance(&mut perms) {
            break;
        }
    }
    Ok(found.into_values().collect())
}

fn spanning_tree(graph: &SimpleGraph) -> Vec<bool> {
    let mut tree = vec![false; graph.edge_count()];
    let mut seen = vec![false; graph.vertex_count()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &(w, e) in graph.incident(v) {
            if !seen[w] {
                seen[w] = true;
                tree[e] = true;
                stack.push(w);
            }
        }
    }
    tree
}

/// Steps the mixed-radix odometer of per-vertex permutations (first entry
/// fixed). Returns false after the last combination.
fn advance(perms: &mut [Vec<usize>]) -> bool {
    for p in perms.iter_mut() {
        if p.len() > 2 && next_permutation(&mut p[1..]) {
            return true;
        }
        if p.len() > 2 {
            p[1..].sort_unstable();
        }
    }
    false
}

fn next_permutation(a: &mut [usize]) -> bool {
    let Some(i) = (1..a.len()).rev().find(|&i| a[i - 1] < a[i]) else {
        return false;
    };
    let j = (i..a.len()).rev().find(|&j| a[j] > a[i - 1]).unwrap();
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}
