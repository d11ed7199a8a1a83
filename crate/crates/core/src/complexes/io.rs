//! Plain-text mesh, cycle and distinguished-vertex files.
//!
//! ```text
//! vertices 6
//! t 0 1 2
//! t 0 2 3
//! ```
//!
//! Vertex ids are 0-indexed. Blank lines are ignored.

use std::fmt::Write as _;

use super::{EdgeCycle, FoliatedTriangulation, Triangulation};
use crate::error::{Error, Result};

fn parse_ids<const N: usize>(line: usize, fields: &[&str]) -> Result<[usize; N]> {
    if fields.len() != N {
        return Err(Error::Parse { line, reason: format!("expected {N} integers, found {}", fields.len()) });
    }
    let mut out = [0; N];
    for (slot, f) in out.iter_mut().zip(fields) {
        *slot = f
            .parse()
            .map_err(|_| Error::Parse { line, reason: format!("`{f}` is not a non-negative integer") })?;
    }
    Ok(out)
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split_whitespace().collect::<Vec<_>>()))
        .filter(|(_, f)| !f.is_empty())
}

pub fn parse_mesh(text: &str) -> Result<Triangulation> {
    let mut lines = content_lines(text);
    let (line, header) = lines.next().ok_or(Error::Parse { line: 1, reason: "empty mesh file".into() })?;
    let vertex_count = match header.as_slice() {
        ["vertices", n] => parse_ids::<1>(line, &[n])?[0],
        _ => return Err(Error::Parse { line, reason: "expected `vertices N`".into() }),
    };
    let mut triangles = Vec::new();
    for (line, fields) in lines {
        match fields.split_first() {
            Some((&"t", rest)) => triangles.push(parse_ids::<3>(line, rest)?),
            _ => return Err(Error::Parse { line, reason: "expected `t a b c`".into() }),
        }
    }
    Triangulation::new(vertex_count, triangles)
}

pub fn format_mesh(tri: &Triangulation) -> String {
    let mut out = format!("vertices {}\n", tri.vertex_count());
    for [a, b, c] in tri.triangles() {
        let _ = writeln!(out, "t {a} {b} {c}");
    }
    out
}

/// A single line of vertex ids; the cycle closes implicitly.
pub fn parse_cycle(text: &str, tri: &Triangulation) -> Result<EdgeCycle> {
    let lines: Vec<_> = content_lines(text).collect();
    let [(line, fields)] = lines.as_slice() else {
        return Err(Error::Parse { line: 1, reason: "cycle file must hold exactly one line".into() });
    };
    let vertices = fields
        .iter()
        .map(|f| f.parse().map_err(|_| Error::Parse { line: *line, reason: format!("`{f}` is not a vertex id") }))
        .collect::<Result<Vec<usize>>>()?;
    EdgeCycle::new(tri, vertices)
}

/// One `d t v` line per triangle.
pub fn parse_distinguished(text: &str, tri: Triangulation) -> Result<FoliatedTriangulation> {
    let mut assigned: Vec<Option<usize>> = vec![None; tri.triangles().len()];
    for (line, fields) in content_lines(text) {
        let [t, v] = match fields.split_first() {
            Some((&"d", rest)) => parse_ids::<2>(line, rest)?,
            _ => return Err(Error::Parse { line, reason: "expected `d t v`".into() }),
        };
        let slot = assigned
            .get_mut(t)
            .ok_or_else(|| Error::Parse { line, reason: format!("triangle {t} out of range") })?;
        if slot.replace(v).is_some() {
            return Err(Error::Parse { line, reason: format!("triangle {t} assigned twice") });
        }
    }
    let distinguished = assigned
        .into_iter()
        .enumerate()
        .map(|(t, v)| v.ok_or(Error::Parse { line: 0, reason: format!("triangle {t} has no distinguished vertex") }))
        .collect::<Result<Vec<_>>>()?;
    FoliatedTriangulation::new(tri, distinguished)
}
