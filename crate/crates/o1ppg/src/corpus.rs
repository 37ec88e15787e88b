//! Corpus directories: `q<n>/<key>.srs` instance files plus `manifest.tsv`.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use o1ppg_core::connectivity::vertex_connectivity;
use o1ppg_core::generator::{canonical_form, CanonicalForm};
use o1ppg_core::O1ppg;
use sha2::{Digest, Sha256};

use crate::format::{read_instance, write_instance};

pub const MANIFEST: &str = "manifest.tsv";
const MANIFEST_HEADER: &str = "n\tkey\tpolyhedral\tbipartite\tconnectivity";

/// Connectivity values in the manifest are truncated here.
pub const CONNECTIVITY_CAP: usize = 8;

/// First 16 hex digits of the SHA-256 of the canonical string.
pub fn instance_key(form: &CanonicalForm) -> String {
    let digest = Sha256::digest(form.canonical_string().as_bytes());
    hex::encode(&digest[..8])
}

pub fn key_of(g: &O1ppg) -> String {
    instance_key(&canonical_form(g.q().srs()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ManifestRow {
    pub n: usize,
    pub key: String,
    pub polyhedral: bool,
    pub bipartite: bool,
    pub connectivity: usize,
}

impl ManifestRow {
    pub fn of(g: &O1ppg) -> Self {
        ManifestRow {
            n: g.order(),
            key: key_of(g),
            polyhedral: g.quad().is_polyhedral(),
            bipartite: g.quad().is_bipartite(),
            connectivity: vertex_connectivity(g, CONNECTIVITY_CAP),
        }
    }

    pub fn relative_path(&self) -> PathBuf {
        Path::new(&format!("q{}", self.n)).join(format!("{}.srs", self.key))
    }
}

/// Writes every instance with its canonical embedding and a manifest sorted
/// by order and key. Returns the manifest rows.
pub fn write_corpus(dir: &Path, instances: &[(CanonicalForm, O1ppg)]) -> Result<Vec<ManifestRow>> {
    let mut rows = Vec::with_capacity(instances.len());
    for (_, g) in instances {
        let row = ManifestRow::of(g);
        let path = dir.join(row.relative_path());
        fs::create_dir_all(path.parent().expect("file inside a directory"))
            .with_context(|| format!("creating {}", path.display()))?;
        fs::write(&path, write_instance(g))
            .with_context(|| format!("writing {}", path.display()))?;
        rows.push(row);
    }
    rows.sort_by(|a, b| (a.n, &a.key).cmp(&(b.n, &b.key)));
    let mut manifest = String::from(MANIFEST_HEADER);
    manifest.push('\n');
    for r in &rows {
        manifest.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\n",
            r.n, r.key, r.polyhedral, r.bipartite, r.connectivity
        ));
    }
    fs::write(dir.join(MANIFEST), manifest)
        .with_context(|| format!("writing manifest in {}", dir.display()))?;
    Ok(rows)
}

pub fn read_manifest(dir: &Path) -> Result<Vec<ManifestRow>> {
    let path = dir.join(MANIFEST);
    let text = fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
    let mut lines = text.lines();
    if lines.next() != Some(MANIFEST_HEADER) {
        bail!("{}: unexpected header", path.display());
    }
    lines
        .enumerate()
        .map(|(i, l)| {
            parse_row(l).with_context(|| format!("{}: malformed row {}", path.display(), i + 2))
        })
        .collect()
}

fn parse_row(line: &str) -> Option<ManifestRow> {
    let [n, key, poly, bip, conn] = line.split('\t').collect::<Vec<_>>()[..] else {
        return None;
    };
    Some(ManifestRow {
        n: n.parse().ok()?,
        key: key.to_string(),
        polyhedral: poly.parse().ok()?,
        bipartite: bip.parse().ok()?,
        connectivity: conn.parse().ok()?,
    })
}

pub fn load_file(path: &Path) -> Result<O1ppg> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    read_instance(&text).with_context(|| format!("loading {}", path.display()))
}

/// Loads one manifest entry and checks that its content matches its key.
pub fn load_instance(dir: &Path, row: &ManifestRow) -> Result<O1ppg> {
    let path = dir.join(row.relative_path());
    let g = load_file(&path)?;
    let key = key_of(&g);
    if key != row.key || g.order() != row.n {
        bail!(
            "{}: content has key {key} and order {}",
            path.display(),
            g.order()
        );
    }
    Ok(g)
}

/// Every instance of a corpus, optionally only up to order `n_max`.
pub fn load_corpus(dir: &Path, n_max: Option<usize>) -> Result<Vec<(ManifestRow, O1ppg)>> {
    read_manifest(dir)?
        .into_iter()
        .filter(|r| n_max.is_none_or(|m| r.n <= m))
        .map(|r| load_instance(dir, &r).map(|g| (r, g)))
        .collect()
}
