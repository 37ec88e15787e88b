use o1ppg_core::connectivity::{
    analyze_cut, enumerate_cuts, graph_connectivity, local_connectivity, vertex_connectivity,
    CutShape, InducedQ,
};
use o1ppg_core::generator::enumerate_o1ppg;
use o1ppg_core::graph::SimpleGraph;
use o1ppg_core::model::O1ppg;
use proptest::prelude::*;

/// Smallest vertex set whose removal disconnects, by subset enumeration.
fn connectivity_oracle(adj: &[u32], cap: usize) -> usize {
    let n = adj.len();
    let full = (1u32 << n) - 1;
    let connected = |keep: u32| {
        let start = keep.trailing_zeros();
        let mut seen = 1u32 << start;
        let mut stack = vec![start as usize];
        while let Some(v) = stack.pop() {
            let mut next = adj[v] & keep & !seen;
            seen |= next;
            while next != 0 {
                stack.push(next.trailing_zeros() as usize);
                next &= next - 1;
            }
        }
        seen == keep
    };
    for k in 0..cap.min(n.saturating_sub(1)) {
        for removed in 0..=full {
            if removed.count_ones() as usize == k && (n - k) >= 2 && !connected(full & !removed) {
                return k;
            }
        }
    }
    cap.min(n.saturating_sub(1))
}

fn adjacency(g: &SimpleGraph) -> Vec<u32> {
    (0..g.vertex_count())
        .map(|v| g.neighbors(v).fold(0, |a, w| a | 1 << w))
        .collect()
}

fn corpus(n_max: usize) -> Vec<O1ppg> {
    enumerate_o1ppg(n_max, false)
        .unwrap()
        .into_iter()
        .map(|(_, g)| g)
        .collect()
}

fn removes_into_pieces(g: &SimpleGraph, s: &[usize]) -> bool {
    let mut removed = vec![false; g.vertex_count()];
    for &v in s {
        removed[v] = true;
    }
    g.components_avoiding(&removed).len() >= 2
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2_000))]

    #[test]
    fn flow_agrees_with_subset_enumeration(n in 2usize..11, p in 0.1f64..0.95, seed in any::<u64>()) {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
        let mut g = SimpleGraph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    g.add_edge(u, v);
                }
            }
        }
        let adj = adjacency(&g);
        let (k, cut) = graph_connectivity(&g, 8);
        prop_assert_eq!(k, connectivity_oracle(&adj, 8));
        if let Some(cut) = cut {
            prop_assert_eq!(cut.len(), k);
            if g.is_connected() {
                prop_assert!(removes_into_pieces(&g, &cut));
            }
        }
    }
}

#[test]
fn corpus_connectivity_matches_the_oracle() {
    for g in corpus(12) {
        let expected = connectivity_oracle(&adjacency(g.graph()), 8);
        assert_eq!(vertex_connectivity(&g, 8), expected);
        assert!(expected >= 4);
    }
}

#[test]
fn local_connectivity_separates() {
    let g = &corpus(9)[0];
    let graph = g.graph();
    let (s, t) = (0..9)
        .flat_map(|s| (0..9).map(move |t| (s, t)))
        .find(|&(s, t)| s != t && !graph.has_edge(s, t))
        .unwrap();
    let (k, cut) = local_connectivity(graph, s, t, 20);
    let cut = cut.unwrap();
    assert_eq!(cut.len(), k);
    assert!(!cut.contains(&s) && !cut.contains(&t));
    let mut removed = vec![false; 9];
    for &v in &cut {
        removed[v] = true;
    }
    let comps = graph.components_avoiding(&removed);
    assert!(comps.iter().all(|c| !(c.contains(&s) && c.contains(&t))));
}

#[test]
fn no_cuts_below_the_connectivity() {
    for g in corpus(11) {
        let k = vertex_connectivity(&g, 8);
        for size in 1..k {
            assert!(enumerate_cuts(&g, size, false).is_empty());
        }
        assert!(!enumerate_cuts(&g, k, true).is_empty());
    }
}

#[test]
fn cut_analysis_is_consistent() {
    for g in corpus(11) {
        let n = g.order();
        for size in 1..=6 {
            for ca in enumerate_cuts(&g, size, false) {
                assert!(ca.components.len() >= 2);
                assert_eq!(ca.odd_count + ca.even_count, ca.components.len());
                let covered: usize = ca.components.iter().map(|c| c.len()).sum();
                assert_eq!(covered + size, n);
                assert_eq!(ca.qs.vertex_count(), size);
                let minimal = (0..size).all(|i| {
                    let mut t = ca.s.clone();
                    t.remove(i);
                    !removes_into_pieces(g.graph(), &t)
                });
                // minimality is about every proper subset, which implies this
                assert!(!ca.is_minimal || minimal);
                if ca.is_minimal {
                    assert!(ca.qs.min_degree() >= 2);
                }
            }
        }
    }
}

#[test]
fn five_cuts_are_bowties_and_minimal_six_cuts_have_a_named_shape() {
    let mut five = 0;
    let mut six = 0;
    for g in corpus(12) {
        if vertex_connectivity(&g, 8) < 5 {
            continue;
        }
        for ca in enumerate_cuts(&g, 5, false) {
            five += 1;
            assert_eq!(ca.shape, CutShape::Bowtie);
        }
        for ca in enumerate_cuts(&g, 6, true) {
            six += 1;
            assert!(ca.shape.is_six_cut_shape(), "{}", ca.shape);
        }
    }
    assert!(five > 0 && six > 0);
}

#[test]
fn non_cuts_are_not_analysed() {
    let g = &corpus(9)[0];
    assert!(analyze_cut(g, &[0]).is_none());
    assert!(enumerate_cuts(g, 0, false).is_empty());
    let qs = InducedQ::new(g, &[0]);
    assert_eq!(qs.edge_count(), 0);
    assert_eq!(qs.face_count(), 1);
}
