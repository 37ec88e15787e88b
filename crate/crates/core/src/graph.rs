//! Simple undirected graphs with stable edge ids.

use alloc::vec;
use alloc::vec::Vec;

use crate::surface::{EdgeId, SignedRotationSystem, VertexId};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    adj: Vec<Vec<(VertexId, EdgeId)>>,
    edges: Vec<(VertexId, VertexId)>,
}

impl SimpleGraph {
    pub fn new(n: usize) -> Self {
        SimpleGraph {
            adj: vec![Vec::new(); n],
            edges: Vec::new(),
        }
    }

    /// Builds from an edge list; `None` if it has a loop or a repeated pair.
    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Option<Self> {
        let mut g = SimpleGraph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Some(g)
    }

    /// Underlying graph of a rotation system; `None` unless simple.
    pub fn from_srs(srs: &SignedRotationSystem) -> Option<Self> {
        let pairs: Vec<_> = srs.edges().iter().map(|e| (e.u, e.v)).collect();
        SimpleGraph::from_edges(srs.vertex_count(), &pairs)
    }

    /// Adds `uv` and returns its id; `None` (and no change) for a loop or an
    /// existing edge.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        if u == v || self.edge_id(u, v).is_some() {
            return None;
        }
        let id = self.edges.len();
        self.edges.push((u, v));
        self.adj[u].push((v, id));
        self.adj[v].push((u, id));
        Some(id)
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adj[v].iter().map(|&(w, _)| w)
    }

    /// `(neighbour, edge id)` pairs at `v`.
    pub fn incident(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        &self.adj[v]
    }

    pub fn edge_id(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        self.adj[u].iter().find(|&&(w, _)| w == v).map(|&(_, e)| e)
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.edge_id(u, v).is_some()
    }

    pub fn is_eulerian(&self) -> bool {
        self.is_connected() && self.adj.iter().all(|a| a.len() % 2 == 0)
    }

    pub fn is_connected(&self) -> bool {
        self.components_avoiding(&vec![false; self.vertex_count()])
            .len()
            <= 1
    }

    /// Connected components of the graph with the `removed` vertices
    /// deleted, each sorted, ordered by smallest vertex.
    pub fn components_avoiding(&self, removed: &[bool]) -> Vec<Vec<VertexId>> {
        let n = self.vertex_count();
        let mut seen = removed.to_vec();
        let mut comps = Vec::new();
        let mut stack = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            stack.push(s);
            let mut comp = Vec::new();
            while let Some(v) = stack.pop() {
                comp.push(v);
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Subgraph on the given vertices, relabelled in the given order.
    pub fn induced(&self, vertices: &[VertexId]) -> SimpleGraph {
        let mut map = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in vertices.iter().enumerate() {
            map[v] = i;
        }
        let mut g = SimpleGraph::new(vertices.len());
        for &(u, v) in &self.edges {
            if map[u] != usize::MAX && map[v] != usize::MAX {
                g.add_edge(map[u], map[v]);
            }
        }
        g
    }

    /// Proper 2-colouring, if the graph is bipartite.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let n = self.vertex_count();
        let mut colour: Vec<Option<bool>> = vec![None; n];
        let mut stack = Vec::new();
        for s in 0..n {
            if colour[s].is_some() {
                continue;
            }
            colour[s] = Some(false);
            stack.push(s);
            while let Some(v) = stack.pop() {
                let c = colour[v].unwrap();
                for w in self.neighbors(v) {
                    match colour[w] {
                        None => {
                            colour[w] = Some(!c);
                            stack.push(w);
                        }
                        Some(d) if d == c => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(colour.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }
}

/// Indicator vector of `vs` over `0..n`.
pub fn vertex_mask(n: usize, vs: &[VertexId]) -> Vec<bool> {
    let mut m = vec![false; n];
    for &v in vs {
        m[v] = true;
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_repeats() {
        assert!(SimpleGraph::from_edges(2, &[(0, 0)]).is_none());
        assert!(SimpleGraph::from_edges(2, &[(0, 1), (1, 0)]).is_none());
        let g = SimpleGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.edge_id(2, 1), Some(1));
        assert!(g.is_bipartite());
    }

    #[test]
    fn components_after_removal() {
        let g = SimpleGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let mut removed = vec![false; 5];
        removed[2] = true;
        assert_eq!(
            g.components_avoiding(&removed),
            vec![vec![0, 1], vec![3, 4]]
        );
    }
}
