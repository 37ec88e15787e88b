//! Vertex connectivity, cuts and the embedded subgraph a cut induces.

mod cuts;
mod flow;

pub use cuts::{
    analyze_cut, audit_cut_lemmas, classify_cut_shape, enumerate_cuts,
    separating_trivial_four_cycles, vertex_connectivity, ClaimCheck, ClaimOutcome, CutAnalysis,
    CutProperty, CutShape, InducedQ, MAX_CUT_SIZE,
};
pub use flow::{graph_connectivity, local_connectivity};
