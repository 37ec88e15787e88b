//! Certificate structures: odd weighted regions and barrier cycles,
//! projective bowties, embedded configuration patterns and the diagnosis of
//! non-extendable 3-matchings.

mod bowtie;
mod diagnose;
mod matcher;
mod patterns;
mod regions;

pub use bowtie::{find_projective_bowties, Bowtie};
pub use diagnose::{
    diagnose_3matching, Certificate, Diagnosis, DiagnosisError, ThreeMatchingDiagnoser,
};
pub use matcher::{embedded_occurrences, match_pattern, switching_equivalence, PatternMatch};
pub use patterns::{pattern, ConfigPattern, PatternId};
pub use regions::{
    barrier_cycles, canonical_cycle, find_odd_weighted_regions, odd_weighted_regions,
    OddWeightedRegion,
};
