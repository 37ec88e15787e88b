//! Graphviz export of an instance with an optional highlighted witness.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use o1ppg_core::O1ppg;

/// Vertices and edges to emphasise.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Highlight {
    pub vertices: BTreeSet<usize>,
    pub edges: BTreeSet<(usize, usize)>,
}

impl Highlight {
    /// Reads the vertex lists `[a b c]` and edge tokens `u-v` of a report
    /// witness; edge endpoints count as vertices too.
    pub fn from_witness(w: &str) -> Self {
        let mut h = Highlight::default();
        for tok in w.split(|c: char| c.is_whitespace() || c == '[' || c == ']' || c == '=') {
            if let Some((a, b)) = tok.split_once('-') {
                if let (Ok(a), Ok(b)) = (a.parse::<usize>(), b.parse::<usize>()) {
                    h.edges.insert((a.min(b), a.max(b)));
                    h.vertices.extend([a, b]);
                }
            } else if let Ok(v) = tok.parse() {
                h.vertices.insert(v);
            }
        }
        h
    }
}

/// Undirected graph: quadrangulation edges solid, crossing edges dashed,
/// highlighted elements red.
pub fn to_dot(g: &O1ppg, name: &str, h: &Highlight) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "graph \"{}\" {{", name.replace('"', "'"));
    let _ = writeln!(s, "  node [shape=circle];");
    for v in 0..g.order() {
        let mark = if h.vertices.contains(&v) {
            " [color=red, style=filled, fillcolor=mistyrose]"
        } else {
            ""
        };
        let _ = writeln!(s, "  {v}{mark};");
    }
    let graph = g.graph();
    for e in 0..graph.edge_count() {
        let (u, v) = graph.endpoints(e);
        let mut attrs = Vec::new();
        if g.is_crossing_edge(e) {
            attrs.push("style=dashed");
        }
        if h.edges.contains(&(u.min(v), u.max(v))) {
            attrs.push("color=red, penwidth=2");
        }
        if attrs.is_empty() {
            let _ = writeln!(s, "  {u} -- {v};");
        } else {
            let _ = writeln!(s, "  {u} -- {v} [{}];", attrs.join(", "));
        }
    }
    s.push_str("}\n");
    s
}
