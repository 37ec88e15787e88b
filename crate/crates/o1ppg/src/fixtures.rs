//! Shipped fixtures, reproducible from the core crate.

use o1ppg_core::generator::{exhaustive_small_search, CanonicalForm};
use o1ppg_core::graph::SimpleGraph;
use o1ppg_core::model::{build_o1ppg, validate_quadrangulation};
use o1ppg_core::structures::{pattern, PatternId};
use o1ppg_core::{EmbeddedGraph, O1ppg, SignedRotationSystem};

use crate::format::Roles;

/// Order-14 quadrangulation whose `G` is not 2-extendable: a 4-cycle with
/// five vertices on one side.
pub const BARRIER4: &str = "14,26;3:1.0.0,2.0.0,3.0.0;3:0.0.0,4.0.0,5.0.0;3:0.1.0,5.2.0,6.0.0;\
3:0.2.0,6.4.0,4.1.0;6:1.1.0,3.2.0,7.0.0,8.0.0,9.0.0,10.0.0;3:1.2.0,10.3.0,2.1.0;\
5:2.2.0,10.2.0,11.0.0,7.1.0,3.1.0;4:4.2.0,6.3.0,9.2.1,12.0.0;3:4.3.0,12.2.0,11.2.1;\
4:4.4.0,11.3.1,7.2.1,13.0.0;4:4.5.0,13.3.0,6.1.0,5.1.0;4:6.2.0,13.2.0,8.2.1,9.1.1;\
3:7.3.0,13.1.1,8.1.0;4:9.3.0,12.1.1,11.1.0,10.1.0;";

/// `K4` embedded with three quadrangular faces, found by exhaustive search.
pub fn k4() -> SignedRotationSystem {
    let k4 = SimpleGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
        .expect("simple");
    let found = exhaustive_small_search(&k4, |g| g.faces().iter().all(|f| f.len() % 2 == 0))
        .expect("small graph");
    found.into_iter().next().expect("one embedding").into_srs()
}

pub fn bowtie() -> SignedRotationSystem {
    pattern(PatternId::Bowtie).embedding.into_srs()
}

pub fn pattern_fixture(id: PatternId) -> (SignedRotationSystem, Roles) {
    let p = pattern(id);
    (
        p.embedding.into_srs(),
        Roles {
            gray: p.gray,
            odd_faces: p.odd_faces,
        },
    )
}

pub fn barrier4() -> O1ppg {
    let form: CanonicalForm = BARRIER4.parse().expect("valid canonical string");
    let q = validate_quadrangulation(EmbeddedGraph::new(form.decode()))
        .expect("polyhedral quadrangulation");
    build_o1ppg(q).expect("simple diagonals")
}
