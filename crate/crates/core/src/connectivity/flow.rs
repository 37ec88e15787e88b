use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::SimpleGraph;
use crate::surface::VertexId;

const INF: i32 = i32::MAX / 2;

/// Unit vertex-capacity network: vertex `v` becomes `2v -> 2v+1`.
struct SplitNetwork {
    n: usize,
    cap: Vec<i32>,
    adj: Vec<Vec<usize>>,
}

impl SplitNetwork {
    fn new(g: &SimpleGraph, s: VertexId, t: VertexId) -> Self {
        let n = 2 * g.vertex_count();
        let mut net = SplitNetwork {
            n,
            cap: vec![0; n * n],
            adj: vec![Vec::new(); n],
        };
        for v in 0..g.vertex_count() {
            let c = if v == s || v == t { INF } else { 1 };
            net.add(2 * v, 2 * v + 1, c);
        }
        for &(u, v) in g.edges() {
            net.add(2 * u + 1, 2 * v, INF);
            net.add(2 * v + 1, 2 * u, INF);
        }
        net
    }

    fn add(&mut self, a: usize, b: usize, c: i32) {
        if self.cap[a * self.n + b] == 0 && self.cap[b * self.n + a] == 0 {
            self.adj[a].push(b);
            self.adj[b].push(a);
        }
        self.cap[a * self.n + b] += c;
    }

    /// Breadth-first reachability in the residual network.
    fn reach(&self, src: usize) -> Vec<Option<usize>> {
        let mut parent = vec![None; self.n];
        parent[src] = Some(src);
        let mut q = VecDeque::from([src]);
        while let Some(a) = q.pop_front() {
            for &b in &self.adj[a] {
                if parent[b].is_none() && self.cap[a * self.n + b] > 0 {
                    parent[b] = Some(a);
                    q.push_back(b);
                }
            }
        }
        parent
    }

    /// Augments unit paths until `limit` is reached or none is left.
    fn max_flow(&mut self, src: usize, sink: usize, limit: usize) -> usize {
        let mut flow = 0;
        while flow < limit {
            let parent = self.reach(src);
            if parent[sink].is_none() {
                break;
            }
            let mut b = sink;
            while b != src {
                let a = parent[b].unwrap();
                self.cap[a * self.n + b] -= 1;
                self.cap[b * self.n + a] += 1;
                b = a;
            }
            flow += 1;
        }
        flow
    }
}

/// Maximum number of internally disjoint `s`-`t` paths for nonadjacent
/// `s != t`, stopping at `cap`, with a minimum separating set when the
/// value is below `cap`.
pub fn local_connectivity(
    g: &SimpleGraph,
    s: VertexId,
    t: VertexId,
    cap: usize,
) -> (usize, Option<Vec<VertexId>>) {
    debug_assert!(s != t && !g.has_edge(s, t));
    let mut net = SplitNetwork::new(g, s, t);
    let flow = net.max_flow(2 * s + 1, 2 * t, cap);
    if flow >= cap {
        return (flow, None);
    }
    let parent = net.reach(2 * s + 1);
    let cut = (0..g.vertex_count())
        .filter(|&v| parent[2 * v].is_some() && parent[2 * v + 1].is_none())
        .collect();
    (flow, Some(cut))
}

/// Vertex connectivity truncated at `cap`, with a minimum cut when the value
/// is below `cap` and the graph is not complete. A complete graph on `n`
/// vertices has connectivity `n - 1`.
pub fn graph_connectivity(g: &SimpleGraph, cap: usize) -> (usize, Option<Vec<VertexId>>) {
    let n = g.vertex_count();
    let mut best = (cap.min(n.saturating_sub(1)), None);
    // Some vertex among any k+1 lies outside a minimum cut of size k, so the
    // sources can stop once they outnumber the best value found.
    let mut s = 0;
    while s < n && s <= best.0 {
        for t in 0..n {
            if t == s || g.has_edge(s, t) {
                continue;
            }
            let (k, cut) = local_connectivity(g, s, t, best.0);
            if k < best.0 {
                best = (k, cut);
            }
        }
        s += 1;
    }
    best
}
