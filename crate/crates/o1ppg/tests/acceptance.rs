//! Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
//! criterion fails. Ground truth comes from the bitmask oracles below, not
//! from the library's own matching or connectivity code.

use std::collections::{BTreeMap, HashMap};
use std::fs;
use std::ops::ControlFlow;
use std::path::Path;
use std::process::ExitCode;
use std::time::Instant;

use o1ppg::cli::{run, EXIT_OK};
use o1ppg::corpus::{load_corpus, write_corpus};
use o1ppg::fixtures::barrier4;
use o1ppg_core::connectivity::{
    audit_cut_lemmas, enumerate_cuts, graph_connectivity, ClaimOutcome, CutShape,
};
use o1ppg_core::generator::{enumerate_o1ppg, exhaustive_small_search};
use o1ppg_core::matching::{
    find_blocker, for_each_k_matching, k_extendability, matching_via_hamiltonian_path,
    maximum_matching, Matching,
};
use o1ppg_core::structures::{barrier_cycles, find_projective_bowties, ThreeMatchingDiagnoser};
use o1ppg_core::{O1ppg, Sign, SimpleGraph};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Perfect matchability of induced subgraphs, memoised by vertex mask.
struct PmOracle {
    adj: Vec<u32>,
    memo: HashMap<u32, bool>,
}

impl PmOracle {
    fn new(g: &SimpleGraph) -> Self {
        let adj = (0..g.vertex_count())
            .map(|v| g.neighbors(v).fold(0u32, |m, w| m | 1 << w))
            .collect();
        PmOracle {
            adj,
            memo: HashMap::new(),
        }
    }

    fn full(&self) -> u32 {
        (1u32 << self.adj.len()) - 1
    }

    fn perfect(&mut self, free: u32) -> bool {
        if free == 0 {
            return true;
        }
        if free.count_ones() % 2 == 1 {
            return false;
        }
        if let Some(&r) = self.memo.get(&free) {
            return r;
        }
        let v = free.trailing_zeros();
        let rest = free & !(1 << v);
        let mut nb = self.adj[v as usize] & rest;
        let mut r = false;
        while nb != 0 && !r {
            let w = nb.trailing_zeros();
            nb &= nb - 1;
            r = self.perfect(rest & !(1 << w));
        }
        self.memo.insert(free, r);
        r
    }

    fn extends(&mut self, g: &SimpleGraph, edges: &[usize]) -> bool {
        let covered = edges.iter().fold(0u32, |m, &e| {
            let (u, v) = g.endpoints(e);
            m | 1 << u | 1 << v
        });
        self.perfect(self.full() & !covered)
    }

    fn components(&self, removed: u32) -> Vec<u32> {
        let mut left = self.full() & !removed;
        let mut out = Vec::new();
        while left != 0 {
            let mut comp = 1u32 << left.trailing_zeros();
            loop {
                let grown = (0..self.adj.len())
                    .filter(|&v| comp >> v & 1 == 1)
                    .fold(comp, |m, v| m | (self.adj[v] & left));
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            left &= !comp;
            out.push(comp);
        }
        out
    }
}

fn max_matching_oracle(adj: &[u32], free: u32, memo: &mut HashMap<u32, usize>) -> usize {
    if free == 0 {
        return 0;
    }
    if let Some(&r) = memo.get(&free) {
        return r;
    }
    let v = free.trailing_zeros();
    let rest = free & !(1 << v);
    let mut best = max_matching_oracle(adj, rest, memo);
    let mut nb = adj[v as usize] & rest;
    while nb != 0 {
        let w = nb.trailing_zeros();
        nb &= nb - 1;
        best = best.max(1 + max_matching_oracle(adj, rest & !(1 << w), memo));
    }
    memo.insert(free, best);
    best
}

/// Vertex connectivity by trying every vertex subset, capped like the flow code.
fn connectivity_oracle(g: &SimpleGraph, cap: usize) -> usize {
    let n = g.vertex_count();
    let oracle = PmOracle::new(g);
    let limit = cap.min(n.saturating_sub(1));
    (0..limit)
        .find(|&k| {
            (0u32..1 << n).any(|s| s.count_ones() as usize == k && oracle.components(s).len() >= 2)
        })
        .unwrap_or(limit)
}

/// Simple cycles of `Q` up to `max_len`, each listed once, with the product
/// of its edge signs.
fn short_q_cycles(g: &O1ppg, max_len: usize) -> Vec<(Vec<usize>, Sign)> {
    let srs = g.q().srs();
    let n = srs.vertex_count();
    let mut sign = BTreeMap::new();
    let mut adj = vec![Vec::new(); n];
    for e in srs.edges() {
        sign.insert((e.u.min(e.v), e.u.max(e.v)), e.sign);
        adj[e.u].push(e.v);
        adj[e.v].push(e.u);
    }
    let mut out = Vec::new();
    for start in 0..n {
        let mut path = vec![start];
        fn dfs(
            path: &mut Vec<usize>,
            adj: &[Vec<usize>],
            max_len: usize,
            sign: &BTreeMap<(usize, usize), Sign>,
            out: &mut Vec<(Vec<usize>, Sign)>,
        ) {
            let (start, last) = (path[0], *path.last().unwrap());
            for &w in &adj[last] {
                if w == start && path.len() >= 3 && path[1] < last {
                    let s = path
                        .iter()
                        .zip(path.iter().cycle().skip(1))
                        .fold(Sign::Plus, |acc, (&a, &b)| {
                            acc * sign[&(a.min(b), a.max(b))]
                        });
                    out.push((path.clone(), s));
                } else if w > start && !path.contains(&w) && path.len() < max_len {
                    path.push(w);
                    dfs(path, adj, max_len, sign, out);
                    path.pop();
                }
            }
        }
        dfs(&mut path, &adj, max_len, &sign, &mut out);
    }
    out
}

fn matchings(g: &SimpleGraph, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let _ = for_each_k_matching(g, k, |m| {
        out.push(m.to_vec());
        ControlFlow::Continue(())
    });
    out
}

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn even(corpus: &[(String, O1ppg)]) -> impl Iterator<Item = &(String, O1ppg)> {
    corpus.iter().filter(|(_, g)| g.order() % 2 == 0)
}

fn k4_uniqueness() -> Outcome {
    let k4 = SimpleGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
    let start = Instant::now();
    let found =
        exhaustive_small_search(&k4, |e| e.faces().iter().all(|f| f.len() % 2 == 0)).unwrap();
    let secs = start.elapsed().as_secs_f64();
    let faces: Vec<Vec<usize>> = found
        .iter()
        .map(|e| e.faces().iter().map(|f| f.len()).collect())
        .collect();
    let ok =
        found.len() == 1 && faces[0] == [4, 4, 4] && found[0].faces().iter().all(|f| f.is_cycle);
    outcome(
        ok && secs < 1.0,
        format!("embeddings={} faces={faces:?} time={secs:.3}s", found.len()),
    )
}

fn corpus_sanity(corpus: &[(String, O1ppg)], gen_secs: f64) -> Outcome {
    let mut bad = Vec::new();
    for (key, g) in corpus {
        let (n, graph) = (g.order(), g.graph());
        let mut pairs: Vec<(usize, usize)> = graph
            .edges()
            .iter()
            .map(|&(u, v)| (u.min(v), u.max(v)))
            .collect();
        pairs.sort_unstable();
        let simple = pairs.windows(2).all(|w| w[0] != w[1]) && pairs.iter().all(|(u, v)| u != v);
        let degrees: Vec<usize> = (0..n)
            .map(|v| pairs.iter().filter(|&&(a, b)| a == v || b == v).count())
            .collect();
        let checks = [
            pairs.len() == 4 * n - 4,
            degrees.iter().min() == Some(&6),
            degrees.iter().all(|d| d % 2 == 0),
            simple,
            n >= 9,
            connectivity_oracle(&q_graph(g), 3) == 3 && g.quad().representativity() >= 3,
        ];
        if checks.contains(&false) {
            bad.push(format!("{key}:{checks:?}"));
        }
    }
    outcome(
        bad.is_empty() && !corpus.is_empty() && gen_secs < 120.0,
        format!(
            "instances={} violations={} generation={gen_secs:.1}s {}",
            corpus.len(),
            bad.len(),
            bad.join(" ")
        ),
    )
}

fn q_graph(g: &O1ppg) -> SimpleGraph {
    let pairs = g.non_crossing_edges();
    SimpleGraph::from_edges(g.order(), &pairs).unwrap()
}

fn one_extendability(corpus: &[(String, O1ppg)]) -> Outcome {
    let (mut edges, mut failures) = (0, Vec::new());
    for (key, g) in even(corpus) {
        let graph = g.graph();
        let mut pm = PmOracle::new(graph);
        for e in 0..graph.edge_count() {
            edges += 1;
            let via_path = matching_via_hamiltonian_path(g, e).ok().filter(|m| {
                let covered = m.vertices(graph);
                m.edges().contains(&e) && covered.len() == g.order() && m.k() * 2 == g.order()
            });
            if !pm.extends(graph, &[e]) || via_path.is_none() {
                failures.push(format!("{key}:e{e}"));
            }
        }
    }
    outcome(
        failures.is_empty(),
        format!(
            "edges={edges} failures={} {}",
            failures.len(),
            failures.join(" ")
        ),
    )
}

/// Non-extendable 2-matchings seen while checking the barrier criterion.
fn two_extendability(
    corpus: &[(String, O1ppg)],
    bad_pairs: &mut Vec<(String, Vec<usize>)>,
) -> Outcome {
    let (mut instances, mut disagreements, mut constructive) = (0, Vec::new(), 0);
    let fixture = [("barrier-fixture".to_string(), barrier4())];
    for (key, g) in even(corpus).chain(fixture.iter()) {
        instances += 1;
        let graph = g.graph();
        let mut pm = PmOracle::new(graph);
        let mut extendable = true;
        for m in matchings(graph, 2) {
            if !pm.extends(graph, &m) {
                extendable = false;
                bad_pairs.push((key.clone(), m));
            }
        }
        let barriers = barrier_cycles(g, 4);
        if extendable != barriers.is_empty() {
            disagreements.push(key.clone());
        }
        // opposite sides of a barrier 4-cycle cannot be completed
        for b in &barriers {
            let c = &b.boundary;
            let m = [graph.edge_id(c[0], c[1]), graph.edge_id(c[2], c[3])];
            match m {
                [Some(a), Some(b)] if !pm.extends(graph, &[a, b]) => constructive += 1,
                _ => disagreements.push(format!("{key}:barrier {c:?} blocks nothing")),
            }
        }
    }
    outcome(
        disagreements.is_empty() && constructive > 0,
        format!(
            "instances={instances} non-extendable-2-matchings={} barrier-witnesses={constructive} disagreements={}",
            bad_pairs.len(),
            disagreements.join(" ")
        ),
    )
}

fn five_connected_two_extendable(
    corpus: &[(String, O1ppg)],
    conn: &HashMap<String, usize>,
) -> Outcome {
    let (mut checked, mut failures) = (0, Vec::new());
    for (key, g) in even(corpus).filter(|(k, _)| conn[k] >= 5) {
        checked += 1;
        let mut pm = PmOracle::new(g.graph());
        if !matchings(g.graph(), 2)
            .iter()
            .all(|m| pm.extends(g.graph(), m))
        {
            failures.push(key.clone());
        }
    }
    outcome(
        checked > 0 && failures.is_empty(),
        format!("instances={checked} failures={}", failures.join(" ")),
    )
}

fn three_matching_certificates(
    corpus: &[(String, O1ppg)],
    conn: &HashMap<String, usize>,
    bad_triples: &mut Vec<(String, Vec<usize>)>,
) -> Outcome {
    let (mut instances, mut swept, mut certified) = (0, 0, 0);
    let mut disagreements = Vec::new();
    for (key, g) in even(corpus).filter(|(k, g)| conn[k] >= 5 && g.graph().edge_count() <= 40) {
        instances += 1;
        let graph = g.graph();
        let mut pm = PmOracle::new(graph);
        let diagnoser = ThreeMatchingDiagnoser::new(g).unwrap();
        for m in matchings(graph, 3) {
            swept += 1;
            let extendable = pm.extends(graph, &m);
            let cert = diagnoser
                .certificate(&Matching::new(graph, m.clone()).unwrap())
                .is_some();
            certified += usize::from(cert);
            if extendable == cert {
                disagreements.push(format!("{key}:{m:?}"));
            }
            if !extendable {
                bad_triples.push((key.clone(), m));
            }
        }
    }
    outcome(
        instances > 0 && disagreements.is_empty(),
        format!(
            "instances={instances} 3-matchings={swept} non-extendable={} certified={certified} disagreements={} {}",
            bad_triples.len(),
            disagreements.len(),
            disagreements.iter().take(5).cloned().collect::<Vec<_>>().join(" ")
        ),
    )
}

fn cut_structure(corpus: &[(String, O1ppg)], conn: &HashMap<String, usize>) -> Outcome {
    let (mut four, mut five, mut six) = (Vec::new(), 0, 0);
    let mut violations = Vec::new();
    for (key, g) in corpus {
        let c = conn[key];
        for ca in enumerate_cuts(g, 4, false) {
            four.push(format!("{key}:{:?}:{}", ca.s, ca.shape));
        }
        if c >= 5 {
            for ca in enumerate_cuts(g, 5, false) {
                five += 1;
                let qs = &ca.qs;
                let lens = qs.face_lengths();
                let bowtie_shaped =
                    qs.vertex_count() == 5 && qs.edge_count() == 6 && lens == [6, 6];
                if ca.shape != CutShape::Bowtie || !bowtie_shaped {
                    violations.push(format!(
                        "{key}:5-cut {:?} is {} faces {lens:?}",
                        ca.s, ca.shape
                    ));
                }
            }
            for ca in enumerate_cuts(g, 6, true) {
                six += 1;
                if !ca.shape.is_six_cut_shape() {
                    violations.push(format!("{key}:6-cut {:?} is {}", ca.s, ca.shape));
                }
            }
            if (c == 5) != !find_projective_bowties(g.q()).is_empty() {
                violations.push(format!("{key}:connectivity {c} vs bowtie"));
            }
        }
    }
    outcome(
        four.is_empty() && violations.is_empty() && five > 0 && six > 0,
        format!(
            "4-cuts={} {} 5-cuts={five} minimal-6-cuts={six} violations={} {}",
            four.len(),
            four.join(" "),
            violations.len(),
            violations.join(" ")
        ),
    )
}

fn cut_claims(corpus: &[(String, O1ppg)], conn: &HashMap<String, usize>) -> Outcome {
    let (mut cuts, mut evaluated, mut violations) = (0, 0, Vec::new());
    for (key, g) in corpus {
        for k in 1..=7 {
            for ca in enumerate_cuts(g, k, false) {
                cuts += 1;
                for claim in audit_cut_lemmas(g, &ca, conn[key]) {
                    match claim.outcome {
                        ClaimOutcome::Holds => evaluated += 1,
                        ClaimOutcome::Violated => violations.push(format!(
                            "{key}:{:?}:{:?}{}",
                            ca.s, claim.property, claim.clause
                        )),
                        ClaimOutcome::Inapplicable(_) => {}
                    }
                }
            }
        }
    }
    outcome(
        cuts > 0 && violations.is_empty(),
        format!(
            "cuts={cuts} claims-held={evaluated} violations={} {}",
            violations.len(),
            violations.join(" ")
        ),
    )
}

fn blockers(
    corpus: &[(String, O1ppg)],
    bad_pairs: &[(String, Vec<usize>)],
    bad_triples: &[(String, Vec<usize>)],
) -> Outcome {
    let fixture = barrier4();
    let by_key: HashMap<&str, &O1ppg> = corpus
        .iter()
        .map(|(k, g)| (k.as_str(), g))
        .chain([("barrier-fixture", &fixture)])
        .collect();
    let (mut checked, mut sizes, mut failures) = (0, BTreeMap::<usize, usize>::new(), Vec::new());
    for (k, list) in [(1, bad_pairs), (2, bad_triples)] {
        for (key, m) in list {
            checked += 1;
            let g = by_key[key.as_str()];
            let graph = g.graph();
            let matching = Matching::new(graph, m.clone()).unwrap();
            let ok = find_blocker(g, &matching, k).ok().filter(|b| {
                let s = b.s.iter().fold(0u32, |acc, &v| acc | 1 << v);
                let covers = matching.vertices(graph).iter().all(|&v| s >> v & 1 == 1);
                let odd = PmOracle::new(graph)
                    .components(s)
                    .iter()
                    .filter(|c| c.count_ones() % 2 == 1)
                    .count();
                covers && b.s.len() == odd + 2 * k && (k == 1 || (6..=7).contains(&b.s.len()))
            });
            match ok {
                Some(b) => *sizes.entry(b.s.len()).or_default() += 1,
                None => failures.push(format!("{key}:k={k}:{m:?}")),
            }
        }
    }
    outcome(
        checked > 0 && failures.is_empty(),
        format!(
            "matchings={checked} blocker-sizes={sizes:?} failures={} {}",
            failures.len(),
            failures.join(" ")
        ),
    )
}

fn no_three_extendability(corpus: &[(String, O1ppg)]) -> Outcome {
    let (mut checked, mut failures) = (0, Vec::new());
    for (key, g) in even(corpus) {
        checked += 1;
        let graph = g.graph();
        let witnessed = match k_extendability(g, 3) {
            Ok(r) => {
                !r.extendable
                    && r.witness.is_some_and(|m| {
                        m.k() == 3 && !PmOracle::new(graph).extends(graph, m.edges())
                    })
            }
            Err(_) => false,
        };
        if !witnessed {
            failures.push(key.clone());
        }
    }
    outcome(
        checked > 0 && failures.is_empty(),
        format!("instances={checked} exceptions={}", failures.join(" ")),
    )
}

fn engine_oracles(corpus: &[(String, O1ppg)], conn: &HashMap<String, usize>) -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x0a11ce);
    let mut matching_mismatch = 0;
    for _ in 0..10_000 {
        let n = rng.gen_range(1..=12);
        let p: f64 = rng.gen_range(0.05..0.9);
        let mut pairs = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    pairs.push((u, v));
                }
            }
        }
        let g = SimpleGraph::from_edges(n, &pairs).unwrap();
        let adj: Vec<u32> = (0..n)
            .map(|v| g.neighbors(v).fold(0u32, |m, w| m | 1 << w))
            .collect();
        let oracle = max_matching_oracle(&adj, (1u32 << n) - 1, &mut HashMap::new());
        let m = maximum_matching(&g);
        if m.k() != oracle || Matching::new(&g, m.edges().to_vec()).is_err() {
            matching_mismatch += 1;
        }
    }
    let mut flow_mismatch = Vec::new();
    for (key, g) in corpus {
        let flow = graph_connectivity(g.graph(), 8).0;
        if flow != conn[key] {
            flow_mismatch.push(format!("{key}:{flow}!={}", conn[key]));
        }
    }
    let (mut cycles, mut odd_trivial) = (0, Vec::new());
    for (key, g) in corpus {
        for (c, sign) in short_q_cycles(g, 8) {
            cycles += 1;
            if sign == Sign::Plus && c.len() % 2 == 1 {
                odd_trivial.push(format!("{key}:{c:?}"));
            }
        }
    }
    outcome(
        matching_mismatch == 0 && flow_mismatch.is_empty() && odd_trivial.is_empty() && cycles > 0,
        format!(
            "blossom-mismatches={matching_mismatch}/10000 flow-mismatches={} {} cycles<=8={cycles} odd-trivial={}",
            flow_mismatch.len(),
            flow_mismatch.join(" "),
            odd_trivial.len()
        ),
    )
}

fn determinism(corpus_dir: &Path) -> Outcome {
    let out = tempfile::tempdir().unwrap();
    let reports: Vec<(i32, Vec<u8>)> = ["1", "3"]
        .iter()
        .map(|workers| {
            let path = out.path().join(format!("run{workers}.report"));
            let code = run([
                "o1ppg",
                "verify",
                "--corpus",
                corpus_dir.to_str().unwrap(),
                "--theorems",
                "all",
                "--report",
                path.to_str().unwrap(),
                "--workers",
                workers,
            ]);
            (code, fs::read(&path).unwrap_or_default())
        })
        .collect();
    let identical = reports[0].1 == reports[1].1 && !reports[0].1.is_empty();
    outcome(
        identical && reports.iter().all(|(c, _)| *c == EXIT_OK),
        format!(
            "exit={},{} bytes={} identical={identical}",
            reports[0].0,
            reports[1].0,
            reports[0].1.len()
        ),
    )
}

fn main() -> ExitCode {
    let dir = tempfile::tempdir().unwrap();
    let start = Instant::now();
    let generated = enumerate_o1ppg(12, false).unwrap();
    write_corpus(dir.path(), &generated).unwrap();
    let gen_secs = start.elapsed().as_secs_f64();
    let corpus: Vec<(String, O1ppg)> = load_corpus(dir.path(), None)
        .unwrap()
        .into_iter()
        .map(|(row, g)| (row.key, g))
        .collect();
    let conn: HashMap<String, usize> = corpus
        .iter()
        .map(|(k, g)| (k.clone(), connectivity_oracle(g.graph(), 8)))
        .collect();

    let (mut bad_pairs, mut bad_triples) = (Vec::new(), Vec::new());
    let criteria: Vec<(&str, Box<dyn FnOnce() -> Outcome + '_>)> = vec![
        (
            "K4 has one even-faced projective embedding",
            Box::new(k4_uniqueness),
        ),
        (
            "corpus n<=12 sanity",
            Box::new(|| corpus_sanity(&corpus, gen_secs)),
        ),
        (
            "every edge extends, also via a Hamiltonian path",
            Box::new(|| one_extendability(&corpus)),
        ),
        (
            "2-extendable iff no barrier 4-cycle",
            Box::new(|| two_extendability(&corpus, &mut bad_pairs)),
        ),
        (
            "5-connected even instances are 2-extendable",
            Box::new(|| five_connected_two_extendable(&corpus, &conn)),
        ),
        (
            "3-matching non-extendable iff certified",
            Box::new(|| three_matching_certificates(&corpus, &conn, &mut bad_triples)),
        ),
        (
            "no 4-cuts, 5-cuts are bowties, minimal 6-cuts have shapes I-IV",
            Box::new(|| cut_structure(&corpus, &conn)),
        ),
        (
            "cut claims hold wherever their hypotheses do",
            Box::new(|| cut_claims(&corpus, &conn)),
        ),
    ];
    let mut results: Vec<(&str, Outcome)> =
        criteria.into_iter().map(|(name, f)| (name, f())).collect();
    results.push((
        "blocker sets exist with the right size",
        blockers(&corpus, &bad_pairs, &bad_triples),
    ));
    results.push((
        "no even instance is 3-extendable",
        no_three_extendability(&corpus),
    ));
    results.push((
        "engines agree with brute force; trivial cycles are even",
        engine_oracles(&corpus, &conn),
    ));
    results.push(("verify reports are byte-identical", determinism(dir.path())));

    let mut failed = 0;
    for (i, (name, o)) in results.iter().enumerate() {
        failed += usize::from(!o.pass);
        println!(
            "criterion {:>2} {} {name}: {}",
            i + 1,
            if o.pass { "PASS" } else { "FAIL" },
            o.detail.trim_end()
        );
    }
    println!(
        "acceptance: {} passed, {failed} failed, {:.1}s",
        results.len() - failed,
        start.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
