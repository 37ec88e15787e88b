use alloc::vec;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use super::{for_each_k_matching, has_perfect_matching_avoiding, Matching, MatchingError};
use crate::graph::SimpleGraph;
use crate::model::O1ppg;
use crate::surface::{EdgeId, VertexId};

/// Whether the matching given by `edges` extends to a perfect matching of `g`.
pub fn extends(g: &SimpleGraph, edges: &[EdgeId]) -> bool {
    let mut removed = vec![false; g.vertex_count()];
    for &e in edges {
        let (u, v) = g.endpoints(e);
        removed[u] = true;
        removed[v] = true;
    }
    has_perfect_matching_avoiding(g, &removed)
}

pub fn is_extendable(g: &O1ppg, m: &Matching) -> Result<bool, MatchingError> {
    let n = g.order();
    if n % 2 == 1 {
        return Err(MatchingError::OddOrder { n });
    }
    Ok(extends(g.graph(), m.edges()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KExtendability {
    pub extendable: bool,
    /// first non-extendable `k`-matching in lexicographic order
    pub witness: Option<Matching>,
}

pub fn k_extendability(g: &O1ppg, k: usize) -> Result<KExtendability, MatchingError> {
    let n = g.order();
    if n % 2 == 1 {
        return Err(MatchingError::OddOrder { n });
    }
    if n < 2 * k + 2 {
        return Err(MatchingError::TooSmall { n, k });
    }
    let mut witness = None;
    let _ = for_each_k_matching(g.graph(), k, |m| {
        if extends(g.graph(), m) {
            ControlFlow::Continue(())
        } else {
            witness = Some(Matching::from_sorted(m.to_vec()));
            ControlFlow::Break(())
        }
    });
    Ok(KExtendability {
        extendable: witness.is_none(),
        witness,
    })
}

/// A vertex set containing `V(M)` whose deletion leaves exactly `|S| - 2k`
/// odd components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockerSet {
    pub s: Vec<VertexId>,
    pub k: usize,
    pub odd_components: usize,
    pub even_components: usize,
}

/// Largest number of vertices added to `V(M)` by [`find_blocker`].
pub const BLOCKER_EXTRA: usize = 6;

/// Smallest `S ⊇ V(m)` with `|S| = C_o(G - S) + 2k`, searched by size and
/// then lexicographically, adding at most [`BLOCKER_EXTRA`] vertices.
pub fn find_blocker(g: &O1ppg, m: &Matching, k: usize) -> Result<BlockerSet, MatchingError> {
    let graph = g.graph();
    if m.k() != k + 1 || extends(graph, m.edges()) {
        return Err(MatchingError::NoBlockerFound);
    }
    let base = m.vertices(graph);
    let n = graph.vertex_count();
    let mut in_base = vec![false; n];
    for &v in &base {
        in_base[v] = true;
    }
    let rest: Vec<VertexId> = (0..n).filter(|&v| !in_base[v]).collect();
    for extra in 0..=BLOCKER_EXTRA.min(rest.len()) {
        let mut pick: Vec<usize> = (0..extra).collect();
        loop {
            let mut removed = in_base.clone();
            for &i in &pick {
                removed[rest[i]] = true;
            }
            let comps = graph.components_avoiding(&removed);
            let odd = comps.iter().filter(|c| c.len() % 2 == 1).count();
            let size = base.len() + extra;
            if size == odd + 2 * k {
                let mut s: Vec<VertexId> = base
                    .iter()
                    .copied()
                    .chain(pick.iter().map(|&i| rest[i]))
                    .collect();
                s.sort_unstable();
                return Ok(BlockerSet {
                    s,
                    k,
                    odd_components: odd,
                    even_components: comps.len() - odd,
                });
            }
            if !next_combination(&mut pick, rest.len()) {
                break;
            }
        }
    }
    Err(MatchingError::NoBlockerFound)
}

/// Advances a sorted `k`-combination of `0..n` lexicographically.
pub(crate) fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    let Some(i) = (0..k).rev().find(|&i| c[i] < n - k + i) else {
        return false;
    };
    c[i] += 1;
    for j in i + 1..k {
        c[j] = c[j - 1] + 1;
    }
    true
}
