//! Per-instance theorem audits and report aggregation.
//!
//! Every audited statement has a stable slug ([`TheoremId`]). A check never
//! errors: it yields a [`Verdict`], with the failed hypothesis recorded for
//! inapplicable checks and a witness recorded for failures.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cell::OnceCell;
use core::fmt::{self, Write};
use core::ops::ControlFlow;
use core::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::connectivity::{
    audit_cut_lemmas, enumerate_cuts, vertex_connectivity, ClaimOutcome, CutProperty, MAX_CUT_SIZE,
};
use crate::graph::SimpleGraph;
use crate::matching::{
    extends, find_blocker, for_each_k_matching, k_extendability, matching_via_hamiltonian_path,
    Matching,
};
use crate::model::O1ppg;
use crate::structures::{
    barrier_cycles, find_projective_bowties, Certificate, Diagnosis, ThreeMatchingDiagnoser,
};
use crate::surface::{cycle_edges, region_decompose, walk_sign, EdgeId, Sign, VertexId};

macro_rules! theorem_ids {
    ($($variant:ident => $slug:literal),* $(,)?) => {
        /// Audited statements.
        #[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum TheoremId {
            $($variant),*
        }

        impl TheoremId {
            pub const ALL: &'static [TheoremId] = &[$(TheoremId::$variant),*];

            pub fn slug(self) -> &'static str {
                match self {
                    $(TheoremId::$variant => $slug),*
                }
            }
        }
    };
}

theorem_ids! {
    OneExt => "one-ext",
    TwoExtBarrier => "two-ext-barrier",
    TwoExtFiveConnected => "two-ext-5conn",
    ThreeExtCertificates => "three-ext-certificates",
    CycleParity => "cycle-parity",
    CutSeparation => "cut-separation",
    CutMinDegree => "cut-min-degree",
    CutFaceInequalities => "cut-face-inequalities",
    CutEdgeBound => "cut-edge-bound",
    FourConnected => "four-connected",
    SmallMinimalCuts => "small-minimal-cuts",
    FiveCutBowtie => "five-cut-bowtie",
    SixConnectedBowtie => "six-connected-bowtie",
    SixCutShapes => "six-cut-shapes",
    Blocker => "blocker",
    NoThreeExt => "no-three-ext",
    DegreeFacts => "degree-facts",
}

impl TheoremId {
    /// The per-cut property aggregated by this id, if it is a cut statement.
    pub fn cut_property(self) -> Option<CutProperty> {
        Some(match self {
            TheoremId::CutSeparation => CutProperty::Separation,
            TheoremId::CutMinDegree => CutProperty::MinDegree,
            TheoremId::CutFaceInequalities => CutProperty::FaceInequalities,
            TheoremId::CutEdgeBound => CutProperty::EdgeBound,
            TheoremId::FourConnected => CutProperty::FourCuts,
            TheoremId::SmallMinimalCuts => CutProperty::SmallMinimalCuts,
            TheoremId::FiveCutBowtie => CutProperty::FiveCutBowtie,
            TheoremId::SixCutShapes => CutProperty::SixCutShapes,
            _ => return None,
        })
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.slug())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("unknown theorem id '{0}'")]
pub struct UnknownTheorem(pub String);

impl FromStr for TheoremId {
    type Err = UnknownTheorem;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TheoremId::ALL
            .iter()
            .copied()
            .find(|t| t.slug() == s)
            .ok_or_else(|| UnknownTheorem(s.to_string()))
    }
}

/// Parses a comma-separated selection; `all` selects every id.
pub fn parse_theorem_list(s: &str) -> Result<Vec<TheoremId>, UnknownTheorem> {
    if s.trim() == "all" {
        return Ok(TheoremId::ALL.to_vec());
    }
    let mut ids: Vec<TheoremId> = s
        .split(',')
        .map(|t| t.trim().parse())
        .collect::<Result<_, _>>()?;
    ids.sort_unstable();
    ids.dedup();
    Ok(ids)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Verdict {
    Pass,
    Fail,
    Inapplicable,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Inapplicable => "inapplicable",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremCheckResult {
    pub theorem: TheoremId,
    pub instance: String,
    pub verdict: Verdict,
    /// counts for a pass, the failed hypothesis when inapplicable
    pub detail: String,
    /// evidence, always present on a fail
    pub witness: Option<String>,
}

impl TheoremCheckResult {
    /// `record<TAB>key<TAB>n<TAB>theorem<TAB>verdict<TAB>detail<TAB>witness`,
    /// with `-` for a missing witness.
    pub fn record_line(&self, n: usize) -> String {
        format!(
            "record\t{}\t{n}\t{}\t{}\t{}\t{}",
            self.instance,
            self.theorem,
            self.verdict,
            clean(&self.detail),
            self.witness
                .as_deref()
                .map(clean)
                .unwrap_or_else(|| "-".into())
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditConfig {
    /// 3-matching sweeps are exhaustive when `G` has at most this many edges
    pub full_sweep_max_edges: usize,
    /// larger sweeps stay exhaustive up to this many 3-matchings and are
    /// sampled beyond it
    pub sample_size: usize,
    pub seed: u64,
    /// cuts of sizes `1..=max_cut_size` are enumerated
    pub max_cut_size: usize,
    pub theorems: Vec<TheoremId>,
}

impl Default for AuditConfig {
    fn default() -> Self {
        AuditConfig {
            full_sweep_max_edges: 40,
            sample_size: 100_000,
            seed: 0x5eed,
            max_cut_size: MAX_CUT_SIZE,
            theorems: TheoremId::ALL.to_vec(),
        }
    }
}

/// Runs the selected checks on one instance, in [`TheoremId`] order.
pub fn audit_instance(g: &O1ppg, key: &str, config: &AuditConfig) -> Vec<TheoremCheckResult> {
    let ctx = Context::new(g, config);
    let mut ids = config.theorems.clone();
    ids.sort_unstable();
    ids.dedup();
    ids.into_iter().map(|t| ctx.check(t, key)).collect()
}

/// One check in isolation, as used to replay a reported failure.
pub fn check_theorem(
    g: &O1ppg,
    key: &str,
    theorem: TheoremId,
    config: &AuditConfig,
) -> TheoremCheckResult {
    Context::new(g, config).check(theorem, key)
}

fn fmt_edge(g: &SimpleGraph, e: EdgeId) -> String {
    let (u, v) = g.endpoints(e);
    format!("{}-{}", u.min(v), u.max(v))
}

/// Sorted edge list `[u-v u-v ...]`.
pub fn fmt_matching(g: &SimpleGraph, edges: &[EdgeId]) -> String {
    let mut parts: Vec<(usize, usize)> = edges
        .iter()
        .map(|&e| {
            let (u, v) = g.endpoints(e);
            (u.min(v), u.max(v))
        })
        .collect();
    parts.sort_unstable();
    let body: Vec<String> = parts.iter().map(|(u, v)| format!("{u}-{v}")).collect();
    format!("[{}]", body.join(" "))
}

fn fmt_vertices(vs: &[VertexId]) -> String {
    let body: Vec<String> = vs.iter().map(|v| v.to_string()).collect();
    format!("[{}]", body.join(" "))
}

fn fmt_certificate(c: &Certificate) -> String {
    match c {
        Certificate::Region { boundary } => format!("region{}", fmt_vertices(boundary)),
        Certificate::Configuration {
            pattern,
            vertex_map,
        } => {
            format!("{}{}", pattern.name(), fmt_vertices(vertex_map))
        }
    }
}

#[derive(Debug)]
struct Sweep {
    sampled: bool,
    checked: usize,
    certified: usize,
    /// first disagreement between oracle and certificates
    disagreement: Option<String>,
    non_extendable: Vec<Matching>,
}

#[derive(Debug)]
struct CutSummary {
    cuts: usize,
    per_property: BTreeMap<CutProperty, (usize, usize, Option<&'static str>, Option<String>)>,
}

/// Shared intermediate results; each is computed on first use.
struct Context<'a> {
    g: &'a O1ppg,
    config: &'a AuditConfig,
    well_formed: OnceCell<bool>,
    connectivity: OnceCell<usize>,
    two_matchings: OnceCell<Vec<Matching>>,
    sweep: OnceCell<Result<Sweep, &'static str>>,
    cuts: OnceCell<CutSummary>,
}

impl<'a> Context<'a> {
    fn new(g: &'a O1ppg, config: &'a AuditConfig) -> Self {
        Context {
            g,
            config,
            well_formed: OnceCell::new(),
            connectivity: OnceCell::new(),
            two_matchings: OnceCell::new(),
            sweep: OnceCell::new(),
            cuts: OnceCell::new(),
        }
    }

    fn check(&self, theorem: TheoremId, key: &str) -> TheoremCheckResult {
        let (verdict, detail, witness) = match self.run(theorem) {
            Outcome::Pass(d) => (Verdict::Pass, d, None),
            Outcome::Fail(d, w) => (Verdict::Fail, d, Some(w)),
            Outcome::Skip(why) => (Verdict::Inapplicable, why.to_string(), None),
        };
        TheoremCheckResult {
            theorem,
            instance: key.to_string(),
            verdict,
            detail,
            witness,
        }
    }

    fn even(&self) -> bool {
        self.g.order() % 2 == 0
    }

    fn connectivity(&self) -> usize {
        *self
            .connectivity
            .get_or_init(|| vertex_connectivity(self.g, 8))
    }

    /// Non-extendable 2-matchings, lexicographic.
    fn bad_two_matchings(&self) -> &[Matching] {
        self.two_matchings.get_or_init(|| {
            let graph = self.g.graph();
            let mut out = Vec::new();
            let _ = for_each_k_matching(graph, 2, |m| {
                if !extends(graph, m) {
                    out.push(Matching::new(graph, m.to_vec()).expect("enumerated matching"));
                }
                ControlFlow::Continue(())
            });
            out
        })
    }

    fn sweep(&self) -> &Result<Sweep, &'static str> {
        self.sweep
            .get_or_init(|| three_matching_sweep(self.g, self.config))
    }

    fn cuts(&self) -> &CutSummary {
        self.cuts.get_or_init(|| {
            let conn = self.connectivity();
            let mut summary = CutSummary {
                cuts: 0,
                per_property: BTreeMap::new(),
            };
            for k in 1..=self.config.max_cut_size.min(MAX_CUT_SIZE) {
                for ca in enumerate_cuts(self.g, k, false) {
                    summary.cuts += 1;
                    for c in audit_cut_lemmas(self.g, &ca, conn) {
                        let entry = summary
                            .per_property
                            .entry(c.property)
                            .or_insert((0, 0, None, None));
                        match c.outcome {
                            ClaimOutcome::Holds => entry.0 += 1,
                            ClaimOutcome::Violated => {
                                entry.1 += 1;
                                if entry.3.is_none() {
                                    let clause = if c.clause.is_empty() { "" } else { c.clause };
                                    entry.3 = Some(format!(
                                        "cut={} clause={clause} {}",
                                        fmt_vertices(&ca.s),
                                        c.detail
                                    ));
                                }
                            }
                            ClaimOutcome::Inapplicable(why) => {
                                entry.2.get_or_insert(why);
                            }
                        }
                    }
                }
            }
            summary
        })
    }

    fn run(&self, theorem: TheoremId) -> Outcome {
        let g = self.g;
        let graph = g.graph();
        if theorem != TheoremId::DegreeFacts
            && !*self
                .well_formed
                .get_or_init(|| g.invariant_violations().is_empty())
        {
            return Outcome::Skip("instance violates the degree facts");
        }
        match theorem {
            TheoremId::DegreeFacts => {
                let bad = g.invariant_violations();
                if bad.is_empty() {
                    Outcome::Pass(format!("n={} edges={}", g.order(), graph.edge_count()))
                } else {
                    Outcome::Fail(format!("violations={}", bad.len()), bad.join("; "))
                }
            }
            TheoremId::OneExt => {
                if !self.even() {
                    return Outcome::Skip("odd order");
                }
                for e in 0..graph.edge_count() {
                    if !extends(graph, &[e]) {
                        return Outcome::Fail(
                            "edge does not extend".into(),
                            format!("edge={}", fmt_edge(graph, e)),
                        );
                    }
                    match matching_via_hamiltonian_path(g, e) {
                        Ok(m) if m.k() * 2 == g.order() && m.edges().contains(&e) => {}
                        Ok(m) => {
                            return Outcome::Fail(
                                "path construction returned a wrong matching".into(),
                                format!(
                                    "edge={} matching={}",
                                    fmt_edge(graph, e),
                                    fmt_matching(graph, m.edges())
                                ),
                            )
                        }
                        Err(err) => {
                            return Outcome::Fail(
                                "path construction failed".into(),
                                format!("edge={} error={err}", fmt_edge(graph, e)),
                            )
                        }
                    }
                }
                Outcome::Pass(format!("edges={}", graph.edge_count()))
            }
            TheoremId::TwoExtBarrier => {
                if !self.even() {
                    return Outcome::Skip("odd order");
                }
                let bad = self.bad_two_matchings();
                let barriers = barrier_cycles(g, 4);
                for b in &barriers {
                    let w = &b.boundary;
                    let pair = [(w[0], w[1]), (w[2], w[3])]
                        .map(|(u, v)| graph.edge_id(u, v).expect("cycle edge"));
                    if extends(graph, &pair) {
                        return Outcome::Fail(
                            "barrier 4-cycle matching extends".into(),
                            format!(
                                "barrier={} matching={}",
                                fmt_vertices(w),
                                fmt_matching(graph, &pair)
                            ),
                        );
                    }
                }
                match (bad.first(), barriers.first()) {
                    (None, None) => Outcome::Pass("two-extendable=true barriers=0".into()),
                    (Some(m), Some(_)) => Outcome::Pass(format!(
                        "two-extendable=false barriers={} non-extendable={}; example={}",
                        barriers.len(),
                        bad.len(),
                        fmt_matching(graph, m.edges())
                    )),
                    (Some(m), None) => Outcome::Fail(
                        "not two-extendable without a barrier 4-cycle".into(),
                        format!("matching={}", fmt_matching(graph, m.edges())),
                    ),
                    (None, Some(b)) => Outcome::Fail(
                        "two-extendable with a barrier 4-cycle".into(),
                        format!("barrier={}", fmt_vertices(&b.boundary)),
                    ),
                }
            }
            TheoremId::TwoExtFiveConnected => {
                if !self.even() {
                    return Outcome::Skip("odd order");
                }
                if self.connectivity() < 5 {
                    return Outcome::Skip("connectivity below 5");
                }
                match self.bad_two_matchings().first() {
                    None => Outcome::Pass(format!("connectivity={}", self.connectivity())),
                    Some(m) => Outcome::Fail(
                        "non-extendable 2-matching".into(),
                        format!("matching={}", fmt_matching(graph, m.edges())),
                    ),
                }
            }
            TheoremId::ThreeExtCertificates => match self.sweep() {
                Err(why) => Outcome::Skip(why),
                Ok(s) => {
                    let mode = if s.sampled {
                        format!("sampled seed={}", self.config.seed)
                    } else {
                        "exhaustive".into()
                    };
                    let detail = format!(
                        "mode={mode} checked={} non-extendable={} certified={}",
                        s.checked,
                        s.non_extendable.len(),
                        s.certified
                    );
                    match &s.disagreement {
                        None => Outcome::Pass(detail),
                        Some(w) => Outcome::Fail(detail, w.clone()),
                    }
                }
            },
            TheoremId::CycleParity => cycle_parity(g),
            TheoremId::SixConnectedBowtie => {
                let conn = self.connectivity();
                if conn < 5 {
                    return Outcome::Skip("connectivity below 5");
                }
                let bowties = find_projective_bowties(g.q());
                match (conn == 5, bowties.first()) {
                    (true, Some(_)) | (false, None) => {
                        Outcome::Pass(format!("connectivity={conn} bowties={}", bowties.len()))
                    }
                    (true, None) => Outcome::Fail(
                        format!("connectivity={conn} bowties=0"),
                        "5-connected without a projective bowtie".into(),
                    ),
                    (false, Some(b)) => Outcome::Fail(
                        format!("connectivity={conn} bowties={}", bowties.len()),
                        format!("bowtie={}", fmt_vertices(&b.vertices())),
                    ),
                }
            }
            TheoremId::Blocker => self.blocker(),
            TheoremId::NoThreeExt => {
                if !self.even() {
                    return Outcome::Skip("odd order");
                }
                match k_extendability(g, 3) {
                    Ok(r) => match r.witness {
                        Some(m) if !r.extendable => {
                            Outcome::Pass(format!("witness={}", fmt_matching(graph, m.edges())))
                        }
                        _ => Outcome::Fail(
                            "every 3-matching extends".into(),
                            format!("three-extendable n={}", g.order()),
                        ),
                    },
                    Err(err) => Outcome::Fail("extendability check failed".into(), err.to_string()),
                }
            }
            cut_statement => self.cut_statement(cut_statement),
        }
    }

    fn cut_statement(&self, theorem: TheoremId) -> Outcome {
        let property = theorem.cut_property().expect("cut statement");
        let summary = self.cuts();
        let (holds, violated, skip, witness) = summary
            .per_property
            .get(&property)
            .cloned()
            .unwrap_or((0, 0, None, None));
        let detail = format!("cuts={} holds={holds} violated={violated}", summary.cuts);
        if let Some(w) = witness {
            return Outcome::Fail(detail, w);
        }
        if holds > 0 || theorem == TheoremId::FourConnected {
            // no small cut at all already settles 4-connectivity
            return Outcome::Pass(format!("{detail} connectivity={}", self.connectivity()));
        }
        Outcome::Skip(skip.unwrap_or("no cut of the audited sizes"))
    }

    fn blocker(&self) -> Outcome {
        let g = self.g;
        let graph = g.graph();
        if !self.even() {
            return Outcome::Skip("odd order");
        }
        if !(0..graph.edge_count()).all(|e| extends(graph, &[e])) {
            return Outcome::Skip("not 1-extendable");
        }
        let mut cases: Vec<(usize, &Matching)> =
            self.bad_two_matchings().iter().map(|m| (1, m)).collect();
        if let Ok(s) = self.sweep() {
            cases.extend(s.non_extendable.iter().map(|m| (2, m)));
        }
        if cases.is_empty() {
            return Outcome::Skip("no non-extendable matching");
        }
        let mut sizes = BTreeMap::<(usize, usize), usize>::new();
        for &(k, m) in &cases {
            let w = || format!("k={k} matching={}", fmt_matching(graph, m.edges()));
            let b = match find_blocker(g, m, k) {
                Ok(b) => b,
                Err(err) => return Outcome::Fail(format!("blocker search: {err}"), w()),
            };
            // recount independently of the search
            let mut removed = alloc::vec![false; g.order()];
            for &v in &b.s {
                removed[v] = true;
            }
            let covered = m.vertices(graph).iter().all(|&v| removed[v]);
            let odd = graph
                .components_avoiding(&removed)
                .iter()
                .filter(|c| c.len() % 2 == 1)
                .count();
            if !covered || b.s.len() != odd + 2 * k {
                return Outcome::Fail(
                    "returned set is not a blocker".into(),
                    format!("{} s={}", w(), fmt_vertices(&b.s)),
                );
            }
            if k == 2 && !(6..=7).contains(&b.s.len()) {
                return Outcome::Fail(
                    format!("blocker size {}", b.s.len()),
                    format!("{} s={}", w(), fmt_vertices(&b.s)),
                );
            }
            *sizes.entry((k, b.s.len())).or_default() += 1;
        }
        let parts: Vec<String> = sizes
            .iter()
            .map(|((k, s), c)| format!("k{k}/size{s}={c}"))
            .collect();
        Outcome::Pass(format!("checked={} {}", cases.len(), parts.join(" ")))
    }
}

enum Outcome {
    Pass(String),
    Fail(String, String),
    Skip(&'static str),
}

/// Diagnoses 3-matchings against the extendability oracle: all of them when
/// the instance is small enough, otherwise those touching a minimum-degree
/// vertex plus a seeded uniform sample.
fn three_matching_sweep(g: &O1ppg, config: &AuditConfig) -> Result<Sweep, &'static str> {
    if g.order() % 2 == 1 {
        return Err("odd order");
    }
    let diagnoser = ThreeMatchingDiagnoser::new(g).map_err(|_| "connectivity below 5")?;
    let graph = g.graph();
    let total = crate::matching::count_k_matchings(graph, 3);
    let sampled = graph.edge_count() > config.full_sweep_max_edges && total > config.sample_size;
    let mut sweep = Sweep {
        sampled,
        checked: 0,
        certified: 0,
        disagreement: None,
        non_extendable: Vec::new(),
    };
    let mut visit = |edges: &[EdgeId]| {
        let m = Matching::new(graph, edges.to_vec()).expect("enumerated matching");
        sweep.checked += 1;
        match diagnoser
            .diagnose(&m)
            .expect("diagnoser accepts 3-matchings")
        {
            Diagnosis::ExtendableNoCert => {}
            Diagnosis::Certified(_) => {
                sweep.certified += 1;
                sweep.non_extendable.push(m);
            }
            Diagnosis::CounterexampleFound {
                extendable,
                certificate,
            } => {
                if !extendable {
                    sweep.non_extendable.push(m.clone());
                }
                if sweep.disagreement.is_none() {
                    let cert = certificate
                        .as_ref()
                        .map(fmt_certificate)
                        .unwrap_or_else(|| "none".into());
                    sweep.disagreement = Some(format!(
                        "matching={} extendable={extendable} certificate={cert}",
                        fmt_matching(graph, m.edges())
                    ));
                }
            }
        }
    };
    if !sampled {
        let _ = for_each_k_matching(graph, 3, |m| {
            visit(m);
            ControlFlow::Continue(())
        });
        return Ok(sweep);
    }
    let min_deg = graph.min_degree();
    let low: Vec<bool> = (0..g.order()).map(|v| graph.degree(v) == min_deg).collect();
    let mut seen = BTreeSet::new();
    let _ = for_each_k_matching(graph, 3, |m| {
        let touches = m.iter().any(|&e| {
            let (u, v) = graph.endpoints(e);
            low[u] || low[v]
        });
        if touches {
            seen.insert(m.to_vec());
            visit(m);
        }
        ControlFlow::Continue(())
    });
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let m_count = graph.edge_count();
    let mut drawn = 0;
    while drawn < config.sample_size {
        let mut pick = [
            rng.gen_range(0..m_count),
            rng.gen_range(0..m_count),
            rng.gen_range(0..m_count),
        ];
        pick.sort_unstable();
        let mut used = BTreeSet::new();
        let disjoint = pick.iter().all(|&e| {
            let (u, v) = graph.endpoints(e);
            used.insert(u) && used.insert(v)
        });
        if !disjoint {
            continue;
        }
        drawn += 1;
        if seen.insert(pick.to_vec()) {
            visit(&pick);
        }
    }
    Ok(sweep)
}

/// Cycles of `Q` with at most `max_len` vertices, each once: it starts at its
/// smallest vertex and its second vertex is smaller than its last.
fn short_cycles(g: &O1ppg, max_len: usize) -> Vec<Vec<VertexId>> {
    fn grow(
        q: &SimpleGraph,
        path: &mut Vec<VertexId>,
        on: &mut [bool],
        max_len: usize,
        out: &mut Vec<Vec<VertexId>>,
    ) {
        let (start, last) = (path[0], *path.last().expect("non-empty"));
        for w in q.neighbors(last) {
            if w == start && path.len() >= 3 && path[1] < last {
                out.push(path.clone());
            }
            if w > start && !on[w] && path.len() < max_len {
                on[w] = true;
                path.push(w);
                grow(q, path, on, max_len, out);
                path.pop();
                on[w] = false;
            }
        }
    }
    let q = g.quad().graph();
    let mut out = Vec::new();
    let mut on = alloc::vec![false; q.vertex_count()];
    for s in 0..q.vertex_count() {
        on[s] = true;
        grow(q, &mut alloc::vec![s], &mut on, max_len, &mut out);
        on[s] = false;
    }
    out
}

/// Short cycles of `Q`: two-sided ones have even length and separate the
/// surface, one-sided ones do not separate and all share one parity.
fn cycle_parity(g: &O1ppg) -> Outcome {
    let q = g.q();
    let mut essential_parity: Option<(usize, Vec<VertexId>)> = None;
    let (mut trivial, mut essential) = (0, 0);
    let cycles = short_cycles(g, 8);
    for c in &cycles {
        let Ok(edges) = cycle_edges(q.srs(), c) else {
            return Outcome::Fail(
                "cycle without edges".into(),
                format!("cycle={}", fmt_vertices(c)),
            );
        };
        let sign = walk_sign(q.srs(), &edges);
        let regions = region_decompose(q, &edges)
            .map(|d| d.regions.len())
            .unwrap_or(0);
        let expected_regions = if sign == Sign::Plus { 2 } else { 1 };
        if regions != expected_regions {
            return Outcome::Fail(
                format!("sign {sign:?} but {regions} regions"),
                format!("cycle={}", fmt_vertices(c)),
            );
        }
        if sign == Sign::Plus {
            trivial += 1;
            if c.len() % 2 == 1 {
                return Outcome::Fail(
                    "odd trivial cycle".into(),
                    format!("cycle={}", fmt_vertices(c)),
                );
            }
        } else {
            essential += 1;
            match &essential_parity {
                None => essential_parity = Some((c.len() % 2, c.clone())),
                Some((p, other)) if *p != c.len() % 2 => {
                    return Outcome::Fail(
                        "essential cycles of both parities".into(),
                        format!("cycles={} {}", fmt_vertices(other), fmt_vertices(c)),
                    )
                }
                Some(_) => {}
            }
        }
    }
    Outcome::Pass(format!(
        "cycles={} trivial={trivial} essential={essential}",
        cycles.len()
    ))
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ReportError {
    #[error("no instance was audited")]
    EmptyCorpus,
}

/// One audited instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceAudit {
    pub key: String,
    pub n: usize,
    pub results: Vec<TheoremCheckResult>,
}

/// Verdicts of a campaign. Instances are kept sorted by `(n, key)`, so the
/// rendering does not depend on the order audits finished in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub config: AuditConfig,
    pub instances: Vec<InstanceAudit>,
}

pub fn aggregate_report(
    config: &AuditConfig,
    mut instances: Vec<InstanceAudit>,
) -> Result<Report, ReportError> {
    if instances.is_empty() {
        return Err(ReportError::EmptyCorpus);
    }
    instances.sort_by(|a, b| (a.n, &a.key).cmp(&(b.n, &b.key)));
    Ok(Report {
        config: config.clone(),
        instances,
    })
}

/// Header line of a rendered report.
pub const REPORT_MAGIC: &str = "o1ppg-report 1";

impl Report {
    pub fn results(&self) -> impl Iterator<Item = &TheoremCheckResult> {
        self.instances.iter().flat_map(|i| i.results.iter())
    }

    /// `(pass, fail, inapplicable)` per audited theorem.
    pub fn counts(&self) -> BTreeMap<TheoremId, [usize; 3]> {
        let mut out = BTreeMap::new();
        for r in self.results() {
            let c: &mut [usize; 3] = out.entry(r.theorem).or_default();
            c[r.verdict as usize] += 1;
        }
        out
    }

    pub fn fail_count(&self) -> usize {
        self.results()
            .filter(|r| r.verdict == Verdict::Fail)
            .count()
    }

    pub fn corpus_sizes(&self) -> BTreeMap<usize, usize> {
        let mut out = BTreeMap::new();
        for i in &self.instances {
            *out.entry(i.n).or_default() += 1;
        }
        out
    }

    /// Tab-separated text; see the repository README for the schema.
    pub fn render(&self) -> String {
        let c = &self.config;
        let mut s = String::new();
        let theorems: Vec<&str> = c.theorems.iter().map(|t| t.slug()).collect();
        let _ = writeln!(s, "{REPORT_MAGIC}");
        let _ = writeln!(
            s,
            "config\tseed={}\tsample_size={}\tfull_sweep_max_edges={}\tmax_cut_size={}\ttheorems={}",
            c.seed,
            c.sample_size,
            c.full_sweep_max_edges,
            c.max_cut_size,
            theorems.join(",")
        );
        for (n, count) in self.corpus_sizes() {
            let _ = writeln!(s, "corpus\tn={n}\tinstances={count}");
        }
        for (t, [p, f, i]) in self.counts() {
            let _ = writeln!(s, "summary\t{t}\tpass={p}\tfail={f}\tinapplicable={i}");
        }
        for inst in &self.instances {
            for r in &inst.results {
                s.push_str(&r.record_line(inst.n));
                s.push('\n');
            }
        }
        s
    }
}

fn clean(s: &str) -> String {
    s.replace(['\t', '\n'], " ")
}
