//! Text formats: signed rotation systems (`.srs`), instances (an `.srs`
//! document behind a `# o1ppg n=<n>` header) and pattern role sidecars
//! (`.roles`).
//!
//! ```text
//! srs 1
//! v <V>
//! e <E>
//! edge <id> <u> <v> <+|->      E lines, ids 0..E in order
//! rot <v> <dart>*              V lines, vertices 0..V in order
//! ```
//!
//! A dart is `<edge>a` for the end at `u` and `<edge>b` for the end at `v`.

use std::fmt::Write as _;

use o1ppg_core::model::{build_o1ppg, validate_quadrangulation, ModelError};
use o1ppg_core::surface::{Edge, SurfaceError, VertexId};
use o1ppg_core::{Dart, EmbeddedGraph, End, O1ppg, Sign, SignedRotationSystem};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("header declares n={declared} but the embedding has {actual} vertices")]
    OrderMismatch { declared: usize, actual: usize },
    #[error("missing '# o1ppg n=<n>' header")]
    MissingHeader,
    #[error(transparent)]
    Surface(#[from] SurfaceError),
    #[error(transparent)]
    Model(#[from] ModelError),
}

fn syntax(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        msg: msg.into(),
    }
}

pub fn write_srs(srs: &SignedRotationSystem) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "srs 1");
    let _ = writeln!(s, "v {}", srs.vertex_count());
    let _ = writeln!(s, "e {}", srs.edge_count());
    for (i, e) in srs.edges().iter().enumerate() {
        let _ = writeln!(s, "edge {i} {} {} {}", e.u, e.v, e.sign);
    }
    for v in 0..srs.vertex_count() {
        s.push_str("rot ");
        s.push_str(&v.to_string());
        for d in srs.rotation(v) {
            let _ = write!(s, " {d}");
        }
        s.push('\n');
    }
    s
}

fn parse_dart(tok: &str) -> Option<Dart> {
    let (id, end) = tok.split_at(tok.len().checked_sub(1)?);
    let end = match end {
        "a" => End::A,
        "b" => End::B,
        _ => return None,
    };
    Some(Dart::new(id.parse().ok()?, end))
}

/// Parses an `.srs` document. Lines starting with `#` are comments.
pub fn parse_srs(text: &str) -> Result<SignedRotationSystem, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.starts_with('#'));
    let mut next = |what: &str| {
        lines
            .next()
            .ok_or_else(|| syntax(0, format!("unexpected end of input, expected {what}")))
    };

    let (ln, l) = next("'srs 1'")?;
    if l != "srs 1" {
        return Err(syntax(ln, "expected 'srs 1'"));
    }
    let mut count = |key: &str| -> Result<usize, FormatError> {
        let (ln, l) = next(key)?;
        l.strip_prefix(key)
            .and_then(|r| r.strip_prefix(' '))
            .and_then(|r| r.parse().ok())
            .ok_or_else(|| syntax(ln, format!("expected '{key} <count>'")))
    };
    let n = count("v")?;
    let m = count("e")?;

    let mut edges = Vec::with_capacity(m);
    for id in 0..m {
        let (ln, l) = next("an edge line")?;
        let t: Vec<&str> = l.split(' ').collect();
        let parsed = match t.as_slice() {
            ["edge", i, u, v, s] if i.parse() == Ok(id) => {
                let sign = match *s {
                    "+" => Some(Sign::Plus),
                    "-" => Some(Sign::Minus),
                    _ => None,
                };
                u.parse()
                    .ok()
                    .zip(v.parse().ok())
                    .zip(sign)
                    .map(|((u, v), sign)| Edge { u, v, sign })
            }
            _ => None,
        };
        edges.push(
            parsed.ok_or_else(|| syntax(ln, format!("expected 'edge {id} <u> <v> <sign>'")))?,
        );
    }

    let mut rotations = Vec::with_capacity(n);
    for v in 0..n {
        let (ln, l) = next("a rotation line")?;
        let mut t = l.split(' ');
        if t.next() != Some("rot") || t.next().and_then(|x| x.parse::<VertexId>().ok()) != Some(v) {
            return Err(syntax(ln, format!("expected 'rot {v} <dart>*'")));
        }
        let darts: Option<Vec<Dart>> = t.map(parse_dart).collect();
        rotations.push(darts.ok_or_else(|| syntax(ln, "malformed dart"))?);
    }
    if let Some((ln, _)) = lines.next() {
        return Err(syntax(ln, "trailing content"));
    }
    Ok(SignedRotationSystem::new(n, edges, rotations)?)
}

pub fn write_instance(g: &O1ppg) -> String {
    format!("# o1ppg n={}\n{}", g.order(), write_srs(g.q().srs()))
}

/// Reads an instance file: the quadrangulation is re-validated and the
/// diagonals are rebuilt.
pub fn read_instance(text: &str) -> Result<O1ppg, FormatError> {
    let declared = text
        .lines()
        .next()
        .and_then(|l| l.strip_prefix("# o1ppg n="))
        .and_then(|n| n.trim().parse::<usize>().ok())
        .ok_or(FormatError::MissingHeader)?;
    let srs = parse_srs(text)?;
    if srs.vertex_count() != declared {
        return Err(FormatError::OrderMismatch {
            declared,
            actual: srs.vertex_count(),
        });
    }
    let q = validate_quadrangulation(EmbeddedGraph::new(srs))?;
    Ok(build_o1ppg(q)?)
}

/// Role marks of a pattern fixture.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Roles {
    pub gray: Vec<VertexId>,
    pub odd_faces: Vec<usize>,
}

pub fn write_roles(r: &Roles) -> String {
    let join = |xs: &[usize]| xs.iter().map(|x| format!(" {x}")).collect::<String>();
    format!("gray{}\noddface{}\n", join(&r.gray), join(&r.odd_faces))
}

pub fn parse_roles(text: &str) -> Result<Roles, FormatError> {
    let mut roles = Roles::default();
    for (i, l) in text.lines().enumerate() {
        let mut t = l.split_whitespace();
        let target = match t.next() {
            Some("gray") => &mut roles.gray,
            Some("oddface") => &mut roles.odd_faces,
            None => continue,
            Some(other) => return Err(syntax(i + 1, format!("unknown role '{other}'"))),
        };
        for x in t {
            target.push(
                x.parse()
                    .map_err(|_| syntax(i + 1, format!("bad index '{x}'")))?,
            );
        }
    }
    Ok(roles)
}
