use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::flow::graph_connectivity;
use crate::graph::vertex_mask;
use crate::matching::next_combination;
use crate::model::O1ppg;
use crate::structures::{match_pattern, pattern, PatternId};
use crate::surface::{
    region_decompose, walk_sign, EdgeId, EmbeddedGraph, RegionDecomposition, Restriction, Sign,
    VertexId,
};

/// Largest cut size [`enumerate_cuts`] accepts.
pub const MAX_CUT_SIZE: usize = 7;

/// Vertex connectivity of `G`, truncated at `cap`.
pub fn vertex_connectivity(g: &O1ppg, cap: usize) -> usize {
    graph_connectivity(g.graph(), cap).0
}

/// `Q[S]`: the quadrangulation restricted to a vertex set, with the surface
/// regions it cuts out.
#[derive(Clone, Debug)]
pub struct InducedQ {
    /// restricted rotation system; vertex `i` is `S[i]`, edges keep host order
    pub restriction: Restriction,
    /// the restriction with its own face trace
    pub embedding: EmbeddedGraph,
    /// `Q(G)` cut along `E(Q[S])`; `None` when `Q[S]` has no edges, in which
    /// case the whole surface is its single face
    pub regions: Option<RegionDecomposition>,
}

impl InducedQ {
    pub fn new(g: &O1ppg, s: &[VertexId]) -> Self {
        let restriction = g.q().srs().induced(s);
        let embedding = EmbeddedGraph::new(restriction.srs.clone());
        let regions = region_decompose(g.q(), &restriction.edges).ok();
        InducedQ {
            restriction,
            embedding,
            regions,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.restriction.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.restriction.edges.len()
    }

    /// Host edge ids of `E(Q[S])`, ascending.
    pub fn host_edges(&self) -> &[EdgeId] {
        &self.restriction.edges
    }

    /// Number of faces of `Q[S]` as regions of the surface.
    pub fn face_count(&self) -> usize {
        self.regions.as_ref().map_or(1, |r| r.regions.len())
    }

    /// Total boundary length of every face.
    pub fn face_lengths(&self) -> Vec<usize> {
        match &self.regions {
            Some(r) => r.regions.iter().map(|x| x.boundary_length()).collect(),
            None => vec![0],
        }
    }

    pub fn min_degree(&self) -> usize {
        let srs = &self.restriction.srs;
        (0..srs.vertex_count())
            .map(|v| srs.degree(v))
            .min()
            .unwrap_or(0)
    }

    /// Every face is a 2-cell.
    pub fn is_two_cell(&self) -> bool {
        self.regions
            .as_ref()
            .is_some_and(|r| r.regions.iter().all(|x| x.is_two_cell))
    }

    /// A single cycle through all of `S` with sign product `+`.
    pub fn is_trivial_cycle(&self) -> bool {
        let srs = &self.restriction.srs;
        srs.vertex_count() >= 3
            && srs.edge_count() == srs.vertex_count()
            && (0..srs.vertex_count()).all(|v| srs.degree(v) == 2)
            && srs.is_connected()
            && walk_sign(srs, &(0..srs.edge_count()).collect::<Vec<_>>()) == Sign::Plus
    }
}

/// Label of `Q[S]` against the cut shapes of the minimal 5- and 6-cuts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CutShape {
    Bowtie,
    I,
    II,
    III,
    IV,
    /// contains a trivial 4-cycle with vertices on both sides
    Trivial4CycleBearing,
    Other,
}

impl CutShape {
    pub fn name(self) -> &'static str {
        match self {
            CutShape::Bowtie => "bowtie",
            CutShape::I => "I",
            CutShape::II => "II",
            CutShape::III => "III",
            CutShape::IV => "IV",
            CutShape::Trivial4CycleBearing => "trivial4cycle-bearing",
            CutShape::Other => "other",
        }
    }

    pub fn is_six_cut_shape(self) -> bool {
        matches!(
            self,
            CutShape::I | CutShape::II | CutShape::III | CutShape::IV
        )
    }
}

impl fmt::Display for CutShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A vertex cut of `G` with everything the audits look at.
#[derive(Clone, Debug)]
pub struct CutAnalysis {
    /// the cut, ascending
    pub s: Vec<VertexId>,
    /// components of `G - S`, each ascending, ordered by smallest vertex
    pub components: Vec<Vec<VertexId>>,
    pub odd_count: usize,
    pub even_count: usize,
    pub is_minimal: bool,
    pub qs: InducedQ,
    pub shape: CutShape,
}

fn is_cut(g: &O1ppg, s: &[VertexId]) -> bool {
    g.graph()
        .components_avoiding(&vertex_mask(g.order(), s))
        .len()
        >= 2
}

/// No proper subset of `s` disconnects `G`. Removing more vertices can
/// reconnect what is left (by deleting whole components), so every subset
/// is tried.
fn is_minimal_cut(g: &O1ppg, s: &[VertexId]) -> bool {
    let k = s.len();
    (1u32..(1 << k) - 1).all(|mask| {
        let sub: Vec<VertexId> = (0..k)
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| s[i])
            .collect();
        !is_cut(g, &sub)
    })
}

/// Analysis of `s` (any order), or `None` when `G - S` is connected.
pub fn analyze_cut(g: &O1ppg, s: &[VertexId]) -> Option<CutAnalysis> {
    let mut s = s.to_vec();
    s.sort_unstable();
    s.dedup();
    let components = g.graph().components_avoiding(&vertex_mask(g.order(), &s));
    if components.len() < 2 {
        return None;
    }
    let odd_count = components.iter().filter(|c| c.len() % 2 == 1).count();
    let qs = InducedQ::new(g, &s);
    let mut ca = CutAnalysis {
        even_count: components.len() - odd_count,
        odd_count,
        components,
        is_minimal: is_minimal_cut(g, &s),
        qs,
        s,
        shape: CutShape::Other,
    };
    ca.shape = classify_cut_shape(g, &ca);
    Some(ca)
}

/// Every `k`-subset `S` with `G - S` disconnected, in lexicographic order.
pub fn enumerate_cuts(g: &O1ppg, k: usize, minimal_only: bool) -> Vec<CutAnalysis> {
    let n = g.order();
    assert!(k <= MAX_CUT_SIZE, "cut size {k} above {MAX_CUT_SIZE}");
    if k == 0 || k + 2 > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut c: Vec<usize> = (0..k).collect();
    loop {
        if is_cut(g, &c) {
            let ca = analyze_cut(g, &c).expect("checked to be a cut");
            if ca.is_minimal || !minimal_only {
                out.push(ca);
            }
        }
        if !next_combination(&mut c, n) {
            break;
        }
    }
    out
}

/// Trivial 4-cycles of `Q[S]` whose two sides both hold vertices of `G`, as
/// host vertex sequences.
pub fn separating_trivial_four_cycles(g: &O1ppg, qs: &InducedQ) -> Vec<[VertexId; 4]> {
    let srs = &qs.restriction.srs;
    let host = |v: usize| qs.restriction.host_vertex(v);
    let mut out = Vec::new();
    let n = srs.vertex_count();
    // a b c d with a the smallest and b < d to list each cycle once
    for a in 0..n {
        for b in a + 1..n {
            for d in b + 1..n {
                for c in a + 1..n {
                    if c == b || c == d {
                        continue;
                    }
                    let cycle = [a, b, c, d];
                    let Some(edges) = (0..4)
                        .map(|i| srs.edge_between(cycle[i], cycle[(i + 1) % 4]))
                        .collect::<Option<Vec<EdgeId>>>()
                    else {
                        continue;
                    };
                    if walk_sign(srs, &edges) != Sign::Plus {
                        continue;
                    }
                    let host_edges: Vec<EdgeId> =
                        edges.iter().map(|&e| qs.restriction.host_edge(e)).collect();
                    let Ok(dec) = region_decompose(g.q(), &host_edges) else {
                        continue;
                    };
                    if dec.regions.len() == 2
                        && dec.regions.iter().all(|r| !r.interior_vertices.is_empty())
                    {
                        out.push(cycle.map(host));
                    }
                }
            }
        }
    }
    out
}

/// Exact match of `Q[S]` against the bowtie and the six-cut shapes (same
/// vertex and edge counts plus an embedded occurrence), then the trivial
/// 4-cycle test.
pub fn classify_cut_shape(g: &O1ppg, ca: &CutAnalysis) -> CutShape {
    let shapes = [
        (PatternId::Bowtie, CutShape::Bowtie),
        (PatternId::I, CutShape::I),
        (PatternId::II, CutShape::II),
        (PatternId::III, CutShape::III),
        (PatternId::IV, CutShape::IV),
    ];
    let qs = &ca.qs;
    for (id, shape) in shapes {
        let p = pattern(id);
        if p.embedding.vertex_count() == qs.vertex_count()
            && p.embedding.edge_count() == qs.edge_count()
            && !match_pattern(&qs.embedding, &p).is_empty()
        {
            return shape;
        }
    }
    if !separating_trivial_four_cycles(g, qs).is_empty() {
        return CutShape::Trivial4CycleBearing;
    }
    CutShape::Other
}

/// Statements checked per cut.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CutProperty {
    /// components of `G - S` lie in distinct faces of `Q[S]`
    Separation,
    /// minimal cut: `Q[S]` has minimum degree at least 2
    MinDegree,
    /// the two face-count inequalities, for `q` in {3, 4}
    FaceInequalities,
    /// edge bound for `|S| <= C_o + 2k`
    EdgeBound,
    /// minimal 5- and 6-cuts of a 5-connected graph
    SmallMinimalCuts,
    /// 4-connectivity and the shape of 4-cuts
    FourCuts,
    /// 5-cuts of a 5-connected graph are bowties
    FiveCutBowtie,
    /// minimal 6-cuts of a 5-connected graph have one of four shapes
    SixCutShapes,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClaimOutcome {
    Holds,
    Violated,
    /// the failed hypothesis
    Inapplicable(&'static str),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimCheck {
    pub property: CutProperty,
    /// clause label, empty for single-claim properties
    pub clause: &'static str,
    pub outcome: ClaimOutcome,
    /// the quantities compared
    pub detail: String,
}

fn claim(property: CutProperty, clause: &'static str, holds: bool, detail: String) -> ClaimCheck {
    let outcome = if holds {
        ClaimOutcome::Holds
    } else {
        ClaimOutcome::Violated
    };
    ClaimCheck {
        property,
        clause,
        outcome,
        detail,
    }
}

fn skip(property: CutProperty, clause: &'static str, why: &'static str) -> ClaimCheck {
    ClaimCheck {
        property,
        clause,
        outcome: ClaimOutcome::Inapplicable(why),
        detail: String::new(),
    }
}

/// Evaluates every per-cut statement literally, with Euler characteristic 1.
/// `connectivity` is the vertex connectivity of `G` (at least the cap used
/// for the hypotheses, i.e. 5, when exact values are not needed).
pub fn audit_cut_lemmas(g: &O1ppg, ca: &CutAnalysis, connectivity: usize) -> Vec<ClaimCheck> {
    let qs = &ca.qs;
    let size = ca.s.len() as i64;
    let e = qs.edge_count() as i64;
    let f = qs.face_count() as i64;
    let lengths = qs.face_lengths();
    let five_connected = connectivity >= 5;
    let mut out = Vec::new();

    out.push(separation(g, ca));

    out.push(if ca.is_minimal {
        claim(
            CutProperty::MinDegree,
            "",
            qs.min_degree() >= 2,
            format!("min_degree={}", qs.min_degree()),
        )
    } else {
        skip(CutProperty::MinDegree, "", "cut is not minimal")
    });

    for (q, c1, c2) in [(3i64, "(i) q=3", "(ii) q=3"), (4, "(i) q=4", "(ii) q=4")] {
        let p = lengths.iter().filter(|&&l| l as i64 >= 2 * q).count() as i64;
        let d = format!("E={e} F={f} S={size} p={p}");
        out.push(claim(
            CutProperty::FaceInequalities,
            c1,
            e >= 2 * f + (q - 2) * p,
            d.clone(),
        ));
        out.push(claim(
            CutProperty::FaceInequalities,
            c2,
            size - 1 + (2 - q) * p >= f,
            d,
        ));
    }

    // smallest integer k with |S| <= C_o + 2k gives the strongest bound
    let k = (size - ca.odd_count as i64 + 1).div_euclid(2);
    out.push(claim(
        CutProperty::EdgeBound,
        "",
        2 * f + 2 * k - 1 >= e,
        format!("E={e} F={f} k={k}"),
    ));

    let small = five_connected && ca.is_minimal && (size == 5 || size == 6);
    if small {
        out.push(claim(
            CutProperty::SmallMinimalCuts,
            "(i)",
            e >= 2 * f + 2,
            format!("E={e} F={f}"),
        ));
        let two_cell = qs.is_two_cell();
        out.push(claim(
            CutProperty::SmallMinimalCuts,
            "(ii)",
            two_cell || (size == 6 && qs.is_trivial_cycle()),
            format!(
                "two_cell={two_cell} trivial_cycle={}",
                qs.is_trivial_cycle()
            ),
        ));
        if size == 6 {
            let hexagon = qs.regions.as_ref().is_some_and(|d| {
                d.regions.iter().any(|r| {
                    r.is_two_cell
                        && r.boundary_walks.len() == 1
                        && r.boundary_walks[0].len() == 6
                        && r.boundary_walks[0].is_cycle
                })
            });
            out.push(claim(
                CutProperty::SmallMinimalCuts,
                "(iii)",
                hexagon,
                format!("face_lengths={lengths:?}"),
            ));
        } else {
            out.push(skip(
                CutProperty::SmallMinimalCuts,
                "(iii)",
                "cut has five vertices",
            ));
        }
    } else {
        let why = if !five_connected {
            "graph is not 5-connected"
        } else if !ca.is_minimal {
            "cut is not minimal"
        } else {
            "cut size is not 5 or 6"
        };
        for c in ["(i)", "(ii)", "(iii)"] {
            out.push(skip(CutProperty::SmallMinimalCuts, c, why));
        }
    }

    out.push(match size {
        0..=3 => claim(
            CutProperty::FourCuts,
            "",
            false,
            format!("cut of size {size}"),
        ),
        4 => {
            let cycles = separating_trivial_four_cycles(g, qs);
            claim(
                CutProperty::FourCuts,
                "",
                !cycles.is_empty(),
                format!("separating_trivial_4cycles={cycles:?}"),
            )
        }
        _ => skip(CutProperty::FourCuts, "", "cut has more than four vertices"),
    });

    out.push(if five_connected && size == 5 {
        claim(
            CutProperty::FiveCutBowtie,
            "",
            ca.shape == CutShape::Bowtie,
            format!("shape={}", ca.shape),
        )
    } else {
        skip(
            CutProperty::FiveCutBowtie,
            "",
            if five_connected {
                "cut size is not 5"
            } else {
                "graph is not 5-connected"
            },
        )
    });

    out.push(if five_connected && size == 6 && ca.is_minimal {
        claim(
            CutProperty::SixCutShapes,
            "",
            ca.shape.is_six_cut_shape(),
            format!("shape={}", ca.shape),
        )
    } else {
        let why = if !five_connected {
            "graph is not 5-connected"
        } else if size != 6 {
            "cut size is not 6"
        } else {
            "cut is not minimal"
        };
        skip(CutProperty::SixCutShapes, "", why)
    });
    out
}

/// Each component lies inside one face of `Q[S]` and no face holds two.
fn separation(g: &O1ppg, ca: &CutAnalysis) -> ClaimCheck {
    let Some(dec) = &ca.qs.regions else {
        return claim(
            CutProperty::Separation,
            "",
            false,
            format!("{} components in the single face", ca.components.len()),
        );
    };
    let mut owner: Vec<Option<usize>> = vec![None; dec.regions.len()];
    for (i, comp) in ca.components.iter().enumerate() {
        let regions: Vec<usize> = comp
            .iter()
            .filter_map(|&v| dec.region_of_vertex(g.q(), v))
            .collect();
        let r = regions[0];
        if regions.iter().any(|&x| x != r) {
            return claim(
                CutProperty::Separation,
                "",
                false,
                format!("component {comp:?} spans several faces"),
            );
        }
        if let Some(j) = owner[r] {
            return claim(
                CutProperty::Separation,
                "",
                false,
                format!(
                    "components {:?} and {comp:?} share face {r}",
                    ca.components[j]
                ),
            );
        }
        owner[r] = Some(i);
    }
    claim(
        CutProperty::Separation,
        "",
        true,
        format!(
            "components={} faces={}",
            ca.components.len(),
            dec.regions.len()
        ),
    )
}
