use o1ppg_core::generator::enumerate_o1ppg;
use o1ppg_core::verify::*;
use o1ppg_core::{EmbeddedGraph, O1ppg, SignedRotationSystem};

fn audited(n_max: usize, config: &AuditConfig) -> Vec<InstanceAudit> {
    enumerate_o1ppg(n_max, false)
        .unwrap()
        .into_iter()
        .map(|(c, g)| {
            let key = c.canonical_string();
            InstanceAudit {
                n: g.order(),
                results: audit_instance(&g, &key, config),
                key,
            }
        })
        .collect()
}

fn instance(n: usize) -> O1ppg {
    enumerate_o1ppg(n, false)
        .unwrap()
        .into_iter()
        .find(|(_, g)| g.order() == n)
        .unwrap()
        .1
}

#[test]
fn theorem_ids_round_trip() {
    for &t in TheoremId::ALL {
        assert_eq!(t.slug().parse::<TheoremId>().unwrap(), t);
    }
    assert_eq!(TheoremId::ALL.len(), 17);
    assert!("two-ext".parse::<TheoremId>().is_err());
    assert_eq!(parse_theorem_list("all").unwrap(), TheoremId::ALL);
    assert_eq!(
        parse_theorem_list("no-three-ext, one-ext,one-ext").unwrap(),
        vec![TheoremId::OneExt, TheoremId::NoThreeExt]
    );
    assert!(parse_theorem_list("one-ext,bogus").is_err());
}

#[test]
fn small_corpus_has_no_failures() {
    let config = AuditConfig::default();
    let report = aggregate_report(&config, audited(10, &config)).unwrap();
    assert_eq!(report.fail_count(), 0, "{}", report.render());
    let counts = report.counts();
    assert_eq!(counts.len(), TheoremId::ALL.len());
    // the order-10 instance is the only even one
    assert_eq!(counts[&TheoremId::OneExt], [1, 0, 1]);
    assert_eq!(counts[&TheoremId::NoThreeExt], [1, 0, 1]);
    assert_eq!(counts[&TheoremId::DegreeFacts], [2, 0, 0]);
    assert_eq!(
        report.corpus_sizes().into_iter().collect::<Vec<_>>(),
        vec![(9, 1), (10, 1)]
    );
}

#[test]
fn inapplicable_checks_name_the_hypothesis() {
    let g = instance(9);
    let results = audit_instance(&g, "nine", &AuditConfig::default());
    let one = results
        .iter()
        .find(|r| r.theorem == TheoremId::OneExt)
        .unwrap();
    assert_eq!(one.verdict, Verdict::Inapplicable);
    assert_eq!(one.detail, "odd order");
    assert!(results
        .iter()
        .all(|r| r.instance == "nine" && r.witness.is_none()));
}

#[test]
fn empty_corpus_is_an_error() {
    assert_eq!(
        aggregate_report(&AuditConfig::default(), Vec::new()),
        Err(ReportError::EmptyCorpus)
    );
}

#[test]
fn rendering_ignores_audit_order() {
    let config = AuditConfig {
        theorems: vec![TheoremId::DegreeFacts, TheoremId::CycleParity],
        ..Default::default()
    };
    let audits = audited(11, &config);
    let a = aggregate_report(&config, audits.clone()).unwrap().render();
    let mut reversed = audits;
    reversed.reverse();
    let b = aggregate_report(&config, reversed).unwrap().render();
    assert_eq!(a, b);
    assert!(a.starts_with(REPORT_MAGIC));
    assert!(a.contains("seed=24301"));
    assert_eq!(
        a.lines().filter(|l| l.starts_with("record\t")).count(),
        2 * 8
    );
}

#[test]
fn sampled_sweep_records_its_seed_and_repeats() {
    let g = instance(10);
    let config = AuditConfig {
        full_sweep_max_edges: 0,
        sample_size: 200,
        seed: 7,
        theorems: vec![TheoremId::ThreeExtCertificates],
        ..Default::default()
    };
    let a = check_theorem(&g, "ten", TheoremId::ThreeExtCertificates, &config);
    assert_eq!(a.verdict, Verdict::Pass);
    assert!(a.detail.starts_with("mode=sampled seed=7 "), "{}", a.detail);
    assert_eq!(
        a,
        check_theorem(&g, "ten", TheoremId::ThreeExtCertificates, &config)
    );

    let full = check_theorem(
        &g,
        "ten",
        TheoremId::ThreeExtCertificates,
        &AuditConfig::default(),
    );
    assert!(
        full.detail.starts_with("mode=exhaustive "),
        "{}",
        full.detail
    );
}

/// Swaps two darts in one rotation of `Q`: the result is a different,
/// typically non-quadrangular embedding.
fn mutant(g: &O1ppg) -> O1ppg {
    let srs = g.q().srs();
    let v = (0..srs.vertex_count())
        .find(|&v| srs.degree(v) >= 4)
        .unwrap();
    let mut rotations = srs.rotations().to_vec();
    rotations[v].swap(0, 1);
    let raw =
        SignedRotationSystem::new(srs.vertex_count(), srs.edges().to_vec(), rotations).unwrap();
    O1ppg::from_embedding_unchecked(EmbeddedGraph::new(raw)).unwrap()
}

#[test]
fn mutant_fails_with_replayable_witnesses() {
    let m = mutant(&instance(10));
    let config = AuditConfig::default();
    let results = audit_instance(&m, "mutant", &config);
    let fails: Vec<_> = results
        .iter()
        .filter(|r| r.verdict == Verdict::Fail)
        .collect();
    assert!(fails.iter().any(|r| r.theorem == TheoremId::DegreeFacts));
    for r in fails {
        assert!(r.witness.as_deref().is_some_and(|w| !w.is_empty()));
        assert_eq!(check_theorem(&m, "mutant", r.theorem, &config), *r);
    }
    let report = aggregate_report(
        &config,
        vec![InstanceAudit {
            key: "mutant".into(),
            n: 10,
            results,
        }],
    )
    .unwrap();
    assert!(report.fail_count() >= 1);
    assert!(report
        .render()
        .lines()
        .any(|l| l.contains("\tdegree-facts\tfail\t")));
}
