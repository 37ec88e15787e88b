//! Optimal 1-embedded graphs on the projective plane.
//!
//! Modules, bottom-up:
//!
//! * [`surface`]: signed rotation systems, face tracing, Euler
//!   characteristic, essential cycles, representativity, region
//!   decompositions.
//! * [`graph`]: a small simple-graph type with stable edge ids.
//! * [`model`]: validated quadrangulations and the graphs obtained by adding
//!   both diagonals to every face.
//! * [`matching`]: maximum matchings, extendability, blocker sets and
//!   perfect matchings from Hamiltonian paths.
//! * [`connectivity`]: vertex connectivity, cut enumeration, the embedded
//!   induced subgraph of a cut and the cut audits.
//! * [`structures`]: odd weighted regions, barrier cycles, projective
//!   bowties and embedded pattern matching.
//! * [`generator`]: canonical forms, exhaustive small searches and corpus
//!   growth.
//! * [`verify`]: per-instance audits and report aggregation.
//!
//! The crate is `no_std` with `alloc`. File formats, parallel campaigns and
//! the command line live in the companion `o1ppg` crate.
#![no_std]

extern crate alloc;

pub mod connectivity;
pub mod generator;
pub mod graph;
pub mod matching;
pub mod model;
pub mod structures;
pub mod surface;
pub mod verify;

pub use graph::SimpleGraph;
pub use model::{O1ppg, Quadrangulation};
pub use surface::{Dart, EmbeddedGraph, End, Sign, SignedRotationSystem};
