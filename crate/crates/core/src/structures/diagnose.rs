use alloc::vec::Vec;

use thiserror::Error;

use super::matcher::match_pattern;
use super::patterns::{pattern, PatternId};
use super::regions::{find_odd_weighted_regions, OddWeightedRegion};
use crate::connectivity::graph_connectivity;
use crate::matching::{extends, Matching};
use crate::model::O1ppg;
use crate::surface::VertexId;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum DiagnosisError {
    #[error("graph is only {connectivity}-connected")]
    NotFiveConnected { connectivity: usize },
    #[error("graph has odd order {n}")]
    OddOrder { n: usize },
    #[error("matching has {k} edges, expected 3")]
    NotThreeEdges { k: usize },
}

/// Evidence that a 3-matching does not extend.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// an odd weighted region bounded by a closed walk of length 6 through
    /// covered vertices only, with no covered vertex inside
    Region { boundary: Vec<VertexId> },
    /// a configuration occurrence with its gray vertices exactly the
    /// covered ones and all of its faces odd weighted regions
    Configuration {
        pattern: PatternId,
        vertex_map: Vec<VertexId>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Diagnosis {
    ExtendableNoCert,
    Certified(Certificate),
    /// the extendability oracle and the certificate search disagree
    CounterexampleFound {
        extendable: bool,
        certificate: Option<Certificate>,
    },
}

impl Diagnosis {
    pub fn is_counterexample(&self) -> bool {
        matches!(self, Diagnosis::CounterexampleFound { .. })
    }
}

/// Certificate data of one instance, computed once and queried per matching.
#[derive(Clone, Debug)]
pub struct ThreeMatchingDiagnoser<'a> {
    g: &'a O1ppg,
    hexagonal_regions: Vec<OddWeightedRegion>,
    // (pattern, vertex map, gray image ascending)
    configurations: Vec<(PatternId, Vec<VertexId>, Vec<VertexId>)>,
}

impl<'a> ThreeMatchingDiagnoser<'a> {
    pub fn new(g: &'a O1ppg) -> Result<Self, DiagnosisError> {
        let n = g.order();
        if n % 2 == 1 {
            return Err(DiagnosisError::OddOrder { n });
        }
        let connectivity = graph_connectivity(g.graph(), 5).0;
        if connectivity < 5 {
            return Err(DiagnosisError::NotFiveConnected { connectivity });
        }
        let hexagonal_regions = find_odd_weighted_regions(g, 6)
            .into_iter()
            .filter(|r| r.len() == 6)
            .collect();
        let mut configurations = Vec::new();
        for id in PatternId::CERTIFICATES {
            let pat = pattern(id);
            for m in match_pattern(g.q(), &pat) {
                let mut gray: Vec<VertexId> = pat.gray.iter().map(|&v| m.vertex_map[v]).collect();
                gray.sort_unstable();
                configurations.push((id, m.vertex_map, gray));
            }
        }
        Ok(ThreeMatchingDiagnoser {
            g,
            hexagonal_regions,
            configurations,
        })
    }

    pub fn hexagonal_regions(&self) -> &[OddWeightedRegion] {
        &self.hexagonal_regions
    }

    /// First certificate for `m`: regions before configurations, each in
    /// their stored order.
    pub fn certificate(&self, m: &Matching) -> Option<Certificate> {
        let covered = m.vertices(self.g.graph());
        // the disc's interior must avoid V(M) as well, or its vertex count says
        // nothing about the components of G - V(M)
        let region_blocks = |r: &&OddWeightedRegion| {
            r.boundary.iter().all(|v| covered.contains(v))
                && r.region
                    .interior_vertices
                    .iter()
                    .all(|v| !covered.contains(v))
        };
        if let Some(r) = self.hexagonal_regions.iter().find(region_blocks) {
            return Some(Certificate::Region {
                boundary: r.boundary.clone(),
            });
        }
        self.configurations
            .iter()
            .find(|(_, _, gray)| *gray == covered)
            .map(|(id, map, _)| Certificate::Configuration {
                pattern: *id,
                vertex_map: map.clone(),
            })
    }

    pub fn diagnose(&self, m: &Matching) -> Result<Diagnosis, DiagnosisError> {
        if m.k() != 3 {
            return Err(DiagnosisError::NotThreeEdges { k: m.k() });
        }
        let extendable = extends(self.g.graph(), m.edges());
        let certificate = self.certificate(m);
        Ok(match (extendable, certificate) {
            (true, None) => Diagnosis::ExtendableNoCert,
            (false, Some(c)) => Diagnosis::Certified(c),
            (extendable, certificate) => Diagnosis::CounterexampleFound {
                extendable,
                certificate,
            },
        })
    }
}

pub fn diagnose_3matching(g: &O1ppg, m: &Matching) -> Result<Diagnosis, DiagnosisError> {
    ThreeMatchingDiagnoser::new(g)?.diagnose(m)
}
