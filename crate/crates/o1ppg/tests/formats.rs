use std::fs;
use std::sync::OnceLock;

use o1ppg::corpus::{
    instance_key, key_of, load_corpus, load_instance, read_manifest, write_corpus, MANIFEST,
};
use o1ppg::format::{
    parse_roles, parse_srs, read_instance, write_instance, write_roles, write_srs, FormatError,
    Roles,
};
use o1ppg_core::generator::CorpusMember;
use o1ppg_core::generator::{
    canonical_form, default_seeds, enumerate_o1ppg, grow_quadrangulations, hemicube_seed,
};
use o1ppg_core::model::ModelError;
use proptest::prelude::*;

#[test]
fn srs_text_is_exact() {
    let text = write_srs(&hemicube_seed());
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(&lines[..3], &["srs 1", "v 4", "e 6"]);
    assert!(lines[3..9]
        .iter()
        .enumerate()
        .all(|(i, l)| l.starts_with(&format!("edge {i} "))));
    assert!(lines[9..]
        .iter()
        .enumerate()
        .all(|(v, l)| l.starts_with(&format!("rot {v} "))));
    assert!(text.ends_with('\n') && !text.contains('\r'));
    assert_eq!(write_srs(&parse_srs(&text).unwrap()), text);
}

#[test]
fn malformed_srs_is_rejected() {
    let good = write_srs(&hemicube_seed());
    let bad = [
        good.replacen("srs 1", "srs 2", 1),
        good.replacen("v 4", "v x", 1),
        good.replacen("edge 1 ", "edge 7 ", 1),
        good.replacen(" +\n", " *\n", 1),
        good.replacen("rot 1 ", "rot 2 ", 1),
        good.replacen("0a", "0c", 1),
        good.replacen("0a", "9a", 1),
        format!("{good}rot 4 0a\n"),
        good.lines().take(5).collect::<Vec<_>>().join("\n"),
    ];
    for b in bad {
        assert!(parse_srs(&b).is_err(), "accepted:\n{b}");
    }
    assert!(matches!(
        parse_srs(&good.replacen("0a", "9a", 1)),
        Err(FormatError::Surface(_))
    ));
}

#[test]
fn instance_headers_are_checked() {
    let g = enumerate_o1ppg(9, false).unwrap().remove(0).1;
    let text = write_instance(&g);
    assert!(text.starts_with("# o1ppg n=9\nsrs 1\n"));
    assert!(matches!(
        read_instance(text.strip_prefix("# o1ppg n=9\n").unwrap()),
        Err(FormatError::MissingHeader)
    ));
    assert!(matches!(
        read_instance(&text.replacen("n=9", "n=10", 1)),
        Err(FormatError::OrderMismatch {
            declared: 10,
            actual: 9
        })
    ));
    let hemicube = format!("# o1ppg n=4\n{}", write_srs(&hemicube_seed()));
    assert!(matches!(
        read_instance(&hemicube),
        Err(FormatError::Model(ModelError::NotPolyhedral { .. }))
    ));
}

#[test]
fn roles_round_trip() {
    let r = Roles {
        gray: vec![0, 2, 5],
        odd_faces: vec![1],
    };
    assert_eq!(write_roles(&r), "gray 0 2 5\noddface 1\n");
    assert_eq!(parse_roles(&write_roles(&r)).unwrap(), r);
    assert_eq!(parse_roles("gray\noddface\n").unwrap(), Roles::default());
    assert!(parse_roles("blue 1").is_err());
    assert!(parse_roles("gray x").is_err());
}

#[test]
fn corpus_directory_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let instances = enumerate_o1ppg(11, false).unwrap();
    let rows = write_corpus(dir.path(), &instances).unwrap();
    assert_eq!(rows.len(), instances.len());
    assert_eq!(read_manifest(dir.path()).unwrap(), rows);
    let manifest = fs::read_to_string(dir.path().join(MANIFEST)).unwrap();
    assert!(manifest.starts_with("n\tkey\tpolyhedral\tbipartite\tconnectivity\n"));
    for (form, g) in &instances {
        let key = instance_key(form);
        assert_eq!(key.len(), 16);
        assert_eq!(key_of(g), key);
        assert!(dir
            .path()
            .join(format!("q{}", g.order()))
            .join(format!("{key}.srs"))
            .is_file());
    }
    let loaded = load_corpus(dir.path(), None).unwrap();
    assert_eq!(loaded.len(), instances.len());
    assert!(loaded
        .iter()
        .all(|(r, g)| r.polyhedral && r.connectivity >= 4 && key_of(g) == r.key));
    assert_eq!(load_corpus(dir.path(), Some(9)).unwrap().len(), 1);

    // a file whose content does not match its name is refused
    let (a, b) = (&rows[0], &rows[1]);
    fs::copy(
        dir.path().join(b.relative_path()),
        dir.path().join(a.relative_path()),
    )
    .unwrap();
    assert!(load_instance(dir.path(), a).is_err());
}

fn small_quads() -> &'static [CorpusMember] {
    static QUADS: OnceLock<Vec<CorpusMember>> = OnceLock::new();
    QUADS.get_or_init(|| grow_quadrangulations(&default_seeds(), 8))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn save_then_load_keeps_the_canonical_key(pick in 0usize..1000) {
        let quads = small_quads();
        let m = &quads[pick % quads.len()];
        let srs = m.quad.embedding().srs();
        let back = parse_srs(&write_srs(srs)).unwrap();
        prop_assert_eq!(&back, srs);
        prop_assert_eq!(canonical_form(&back), m.canonical.clone());
    }
}

#[test]
fn instances_survive_save_and_load() {
    for (form, g) in enumerate_o1ppg(12, false).unwrap() {
        let back = read_instance(&write_instance(&g)).unwrap();
        assert_eq!(canonical_form(back.q().srs()), form);
        assert_eq!(back.graph().edges(), g.graph().edges());
    }
}
