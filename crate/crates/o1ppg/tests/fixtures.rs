use std::fs;
use std::path::PathBuf;

use o1ppg::fixtures::{barrier4, bowtie, k4, pattern_fixture};
use o1ppg::format::{
    parse_roles, parse_srs, read_instance, write_instance, write_roles, write_srs,
};
use o1ppg_core::generator::canonical_form;
use o1ppg_core::matching::k_extendability;
use o1ppg_core::structures::{barrier_cycles, pattern, PatternId};
use o1ppg_core::EmbeddedGraph;

fn dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

/// Every shipped fixture with the text it must have. Set `O1PPG_BLESS=1` to
/// rewrite the files.
fn expected() -> Vec<(PathBuf, String)> {
    let mut out = vec![
        (dir().join("k4.srs"), write_srs(&k4())),
        (dir().join("bowtie.srs"), write_srs(&bowtie())),
        (dir().join("barrier4.srs"), write_instance(&barrier4())),
    ];
    for id in PatternId::ALL {
        let (srs, roles) = pattern_fixture(id);
        let base = dir().join("patterns").join(id.name());
        out.push((base.with_extension("srs"), write_srs(&srs)));
        out.push((base.with_extension("roles"), write_roles(&roles)));
    }
    out
}

#[test]
fn shipped_fixtures_are_reproducible() {
    let bless = std::env::var_os("O1PPG_BLESS").is_some();
    for (path, text) in expected() {
        if bless {
            fs::create_dir_all(path.parent().unwrap()).unwrap();
            fs::write(&path, &text).unwrap();
        }
        let shipped =
            fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert_eq!(shipped, text, "{} is stale", path.display());
    }
}

#[test]
fn k4_fixture_is_the_hemicube() {
    let srs = parse_srs(&fs::read_to_string(dir().join("k4.srs")).unwrap()).unwrap();
    let g = EmbeddedGraph::new(srs);
    assert!(g.is_projective_plane());
    assert_eq!(
        g.faces().iter().map(|f| f.len()).collect::<Vec<_>>(),
        vec![4, 4, 4]
    );
}

#[test]
fn bowtie_fixture_has_two_hexagons() {
    let srs = parse_srs(&fs::read_to_string(dir().join("bowtie.srs")).unwrap()).unwrap();
    let g = EmbeddedGraph::new(srs);
    assert_eq!((g.vertex_count(), g.edge_count()), (5, 6));
    assert_eq!(
        g.faces().iter().map(|f| f.len()).collect::<Vec<_>>(),
        vec![6, 6]
    );
    assert_eq!(
        canonical_form(g.srs()),
        canonical_form(pattern(PatternId::Bowtie).embedding.srs())
    );
}

#[test]
fn pattern_roles_round_trip() {
    for id in PatternId::ALL {
        let base = dir().join("patterns").join(id.name());
        let roles =
            parse_roles(&fs::read_to_string(base.with_extension("roles")).unwrap()).unwrap();
        let p = pattern(id);
        assert_eq!(roles.gray, p.gray);
        assert_eq!(roles.odd_faces, p.odd_faces);
        let srs = parse_srs(&fs::read_to_string(base.with_extension("srs")).unwrap()).unwrap();
        assert_eq!(canonical_form(&srs), canonical_form(p.embedding.srs()));
    }
}

#[test]
fn barrier_fixture_blocks_a_two_matching() {
    let g = read_instance(&fs::read_to_string(dir().join("barrier4.srs")).unwrap()).unwrap();
    assert_eq!(g.order(), 14);
    assert!(!barrier_cycles(&g, 4).is_empty());
    let r = k_extendability(&g, 2).unwrap();
    assert!(!r.extendable && r.witness.is_some());
}
