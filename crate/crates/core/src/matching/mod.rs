//! Matchings: maximum matchings, extendability, blocker sets and perfect
//! matchings read off Hamiltonian paths.

mod blossom;
mod extend;
mod hamiltonian;

pub use blossom::{has_perfect_matching_avoiding, matching_number_avoiding, maximum_matching};
pub use extend::{
    extends, find_blocker, is_extendable, k_extendability, BlockerSet, KExtendability,
    BLOCKER_EXTRA,
};
pub use hamiltonian::{
    hamiltonian_path, matching_via_hamiltonian_path, spanning_triangulation, SpanningTriangulation,
    HAMILTONIAN_MAX_ORDER,
};

use alloc::vec::Vec;
use core::ops::ControlFlow;
pub(crate) use extend::next_combination;

use thiserror::Error;

use crate::graph::SimpleGraph;
use crate::surface::{EdgeId, VertexId};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum MatchingError {
    #[error("graph has odd order {n}")]
    OddOrder { n: usize },
    #[error("order {n} is too small for {k}-matchings to be tested")]
    TooSmall { n: usize, k: usize },
    #[error("edges do not form a matching")]
    NotAMatching,
    #[error("no blocker set found")]
    NoBlockerFound,
    #[error("no Hamiltonian path between {u} and {v}")]
    NoHamPath { u: VertexId, v: VertexId },
}

/// A set of pairwise disjoint edges, stored as sorted edge ids.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Matching {
    edges: Vec<EdgeId>,
}

impl Matching {
    pub fn new(g: &SimpleGraph, mut edges: Vec<EdgeId>) -> Result<Self, MatchingError> {
        edges.sort_unstable();
        edges.dedup();
        let mut seen = alloc::vec![false; g.vertex_count()];
        for &e in &edges {
            if e >= g.edge_count() {
                return Err(MatchingError::NotAMatching);
            }
            let (u, v) = g.endpoints(e);
            if seen[u] || seen[v] {
                return Err(MatchingError::NotAMatching);
            }
            seen[u] = true;
            seen[v] = true;
        }
        Ok(Matching { edges })
    }

    pub(crate) fn from_sorted(edges: Vec<EdgeId>) -> Self {
        Matching { edges }
    }

    pub fn empty() -> Self {
        Matching { edges: Vec::new() }
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn k(&self) -> usize {
        self.edges.len()
    }

    /// Covered vertices, sorted.
    pub fn vertices(&self, g: &SimpleGraph) -> Vec<VertexId> {
        let mut vs: Vec<VertexId> = self
            .edges
            .iter()
            .flat_map(|&e| {
                let (u, v) = g.endpoints(e);
                [u, v]
            })
            .collect();
        vs.sort_unstable();
        vs
    }
}

/// Calls `f` on every matching with `k` edges, as sorted edge-id lists in
/// lexicographic order, until it breaks.
pub fn for_each_k_matching<F>(g: &SimpleGraph, k: usize, mut f: F) -> ControlFlow<()>
where
    F: FnMut(&[EdgeId]) -> ControlFlow<()>,
{
    fn rec<F: FnMut(&[EdgeId]) -> ControlFlow<()>>(
        g: &SimpleGraph,
        k: usize,
        from: EdgeId,
        used: &mut [bool],
        chosen: &mut Vec<EdgeId>,
        f: &mut F,
    ) -> ControlFlow<()> {
        if chosen.len() == k {
            return f(chosen);
        }
        for e in from..g.edge_count() {
            let (u, v) = g.endpoints(e);
            if used[u] || used[v] {
                continue;
            }
            used[u] = true;
            used[v] = true;
            chosen.push(e);
            let r = rec(g, k, e + 1, used, chosen, f);
            chosen.pop();
            used[u] = false;
            used[v] = false;
            r?;
        }
        ControlFlow::Continue(())
    }
    let mut used = alloc::vec![false; g.vertex_count()];
    rec(g, k, 0, &mut used, &mut Vec::with_capacity(k), &mut f)
}

pub fn count_k_matchings(g: &SimpleGraph, k: usize) -> usize {
    let mut count = 0;
    let _ = for_each_k_matching(g, k, |_| {
        count += 1;
        ControlFlow::Continue(())
    });
    count
}
