use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use super::Matching;
use crate::graph::SimpleGraph;

const NONE: usize = usize::MAX;

/// Maximum-cardinality matching by Edmonds' blossom algorithm.
pub fn maximum_matching(g: &SimpleGraph) -> Matching {
    let mate = maximum_mate(g, &vec![false; g.vertex_count()]);
    let mut edges: Vec<usize> = (0..g.vertex_count())
        .filter(|&v| mate[v] != NONE && v < mate[v])
        .map(|v| g.edge_id(v, mate[v]).unwrap())
        .collect();
    edges.sort_unstable();
    Matching::from_sorted(edges)
}

/// Size of a maximum matching of `g` with the `removed` vertices deleted.
pub fn matching_number_avoiding(g: &SimpleGraph, removed: &[bool]) -> usize {
    let mate = maximum_mate(g, removed);
    mate.iter().filter(|&&m| m != NONE).count() / 2
}

/// Whether `g` minus the `removed` vertices has a perfect matching.
pub fn has_perfect_matching_avoiding(g: &SimpleGraph, removed: &[bool]) -> bool {
    let left = removed.iter().filter(|&&r| !r).count();
    left % 2 == 0 && 2 * matching_number_avoiding(g, removed) == left
}

fn maximum_mate(g: &SimpleGraph, removed: &[bool]) -> Vec<usize> {
    let n = g.vertex_count();
    let mut s = Search {
        g,
        removed,
        mate: vec![NONE; n],
        parent: vec![NONE; n],
        base: (0..n).collect(),
        used: vec![false; n],
        blossom: vec![false; n],
        queue: VecDeque::new(),
    };
    // greedy start
    for v in 0..n {
        if removed[v] || s.mate[v] != NONE {
            continue;
        }
        if let Some(w) = g.neighbors(v).find(|&w| !removed[w] && s.mate[w] == NONE) {
            s.mate[v] = w;
            s.mate[w] = v;
        }
    }
    for root in 0..n {
        if removed[root] || s.mate[root] != NONE {
            continue;
        }
        let mut v = s.find_path(root);
        while v != NONE {
            let pv = s.parent[v];
            let ppv = s.mate[pv];
            s.mate[v] = pv;
            s.mate[pv] = v;
            v = ppv;
        }
    }
    s.mate
}

struct Search<'a> {
    g: &'a SimpleGraph,
    removed: &'a [bool],
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl Search<'_> {
    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.mate.len()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.blossom[self.base[v]] = true;
            self.blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Grows an alternating tree from `root`; returns the free vertex that
    /// ends an augmenting path, or `NONE`.
    fn find_path(&mut self, root: usize) -> usize {
        let n = self.mate.len();
        self.used.fill(false);
        self.parent.fill(NONE);
        for i in 0..n {
            self.base[i] = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for to in self.g.neighbors(v) {
                if self.removed[to] || self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.blossom.fill(false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return to;
                    }
                    let m = self.mate[to];
                    self.used[m] = true;
                    self.queue.push_back(m);
                }
            }
        }
        NONE
    }
}
