//! The `O1P/1` graph format.
//!
//! ```text
//! O1P/1
//! n 4
//! rot 0 0 3
//! ...
//! edge 0 0 1
//! ...
//! outer 0 3 2 1
//! diag 0 0 2 1 3
//! ```
//!
//! `rot` lists a vertex's edge ids counterclockwise, `outer` gives the walk
//! of the unbounded face, and the optional `diag` lines declare the two
//! crossing diagonals of a face. Blank lines and lines starting with `#`
//! are ignored.

use std::fmt::Write as _;

use crate::embedding::{EdgeId, OuterFace, PlaneEmbedding, VertexId};
use crate::error::{Error, Result};
use crate::optimal::{DeclaredCrossing, OptimalOnePlaneGraph, RawOnePlaneGraph};

use super::{tokens, Num};

pub const HEADER: &str = "O1P/1";

/// Parses an `O1P/1` document. Crossing declarations are optional; without
/// them the result is a plain plane embedding.
pub fn parse_o1p(text: &str) -> Result<RawOnePlaneGraph> {
    let mut lines = tokens(text, HEADER)?;
    let mut n: Option<usize> = None;
    let mut edges: Vec<Option<[VertexId; 2]>> = Vec::new();
    let mut rotation: Vec<Option<Vec<EdgeId>>> = Vec::new();
    let mut outer: Option<Vec<VertexId>> = None;
    let mut crossings = Vec::new();

    for (line, toks) in lines.by_ref() {
        let mut it = toks.iter().copied();
        let key = it.next().expect("tokens() skips empty lines");
        let mut num = Num::new(line, &mut it);
        match key {
            "n" => {
                if n.is_some() {
                    return Err(Error::parse(line, "duplicate n line"));
                }
                let c = num.next()?;
                num.end()?;
                n = Some(c);
                rotation = vec![None; c];
            }
            "edge" => {
                let nv = n.ok_or_else(|| Error::parse(line, "edge before n"))?;
                let (id, u, v) = (num.next()?, num.vertex(nv)?, num.vertex(nv)?);
                num.end()?;
                if edges.len() <= id {
                    edges.resize(id + 1, None);
                }
                if edges[id].replace([u, v]).is_some() {
                    return Err(Error::parse(line, format!("edge {id} defined twice")));
                }
            }
            "rot" => {
                let nv = n.ok_or_else(|| Error::parse(line, "rot before n"))?;
                let v = num.vertex(nv)?;
                let es = num.rest()?;
                if rotation[v].replace(es).is_some() {
                    return Err(Error::parse(line, format!("rotation of vertex {v} given twice")));
                }
            }
            "outer" => {
                let nv = n.ok_or_else(|| Error::parse(line, "outer before n"))?;
                let walk = num.rest()?;
                if let Some(&v) = walk.iter().find(|&&v| v >= nv) {
                    return Err(Error::parse(line, format!("vertex {v} out of range")));
                }
                if outer.replace(walk).is_some() {
                    return Err(Error::parse(line, "duplicate outer line"));
                }
            }
            "diag" => {
                let nv = n.ok_or_else(|| Error::parse(line, "diag before n"))?;
                let face = num.optional()?;
                let first = [num.vertex(nv)?, num.vertex(nv)?];
                let second = [num.vertex(nv)?, num.vertex(nv)?];
                num.end()?;
                crossings.push(DeclaredCrossing {
                    face,
                    first,
                    second,
                });
            }
            other => return Err(Error::parse(line, format!("unknown keyword {other:?}"))),
        }
    }

    let last = lines.last_line();
    let n = n.ok_or_else(|| Error::parse(last, "missing n line"))?;
    let edges = edges
        .into_iter()
        .enumerate()
        .map(|(i, e)| e.ok_or_else(|| Error::parse(last, format!("edge {i} missing"))))
        .collect::<Result<Vec<_>>>()?;
    let rotation = rotation
        .into_iter()
        .enumerate()
        .map(|(v, r)| r.ok_or_else(|| Error::parse(last, format!("rotation of vertex {v} missing"))))
        .collect::<Result<Vec<_>>>()?;
    if let Some(&e) = rotation.iter().flatten().find(|&&e| e >= edges.len()) {
        return Err(Error::MalformedRotation(format!("unknown edge id {e}")));
    }
    let outer = outer.ok_or_else(|| Error::parse(last, "missing outer line"))?;
    let embedding = PlaneEmbedding::new(n, edges, rotation, OuterFace::Walk(outer))?;
    Ok(RawOnePlaneGraph { embedding, crossings })
}

/// Writes an embedding, plus the declared crossings of `raw` if any.
pub fn write_o1p(raw: &RawOnePlaneGraph) -> String {
    let emb = &raw.embedding;
    let mut s = String::new();
    let _ = writeln!(s, "{HEADER}");
    let _ = writeln!(s, "n {}", emb.num_vertices());
    for v in 0..emb.num_vertices() {
        s.push_str("rot ");
        s.push_str(&v.to_string());
        for e in emb.rotation(v) {
            let _ = write!(s, " {e}");
        }
        s.push('\n');
    }
    for (i, [u, v]) in emb.edges().iter().enumerate() {
        let _ = writeln!(s, "edge {i} {u} {v}");
    }
    s.push_str("outer");
    for v in emb.outer_walk() {
        let _ = write!(s, " {v}");
    }
    s.push('\n');
    for c in &raw.crossings {
        let f = c.face.map_or_else(|| "-".to_string(), |f| f.to_string());
        let _ = writeln!(s, "diag {f} {} {} {} {}", c.first[0], c.first[1], c.second[0], c.second[1]);
    }
    s
}

/// Writes an optimal graph with all of its crossing pairs declared.
pub fn write_optimal(g: &OptimalOnePlaneGraph) -> String {
    write_o1p(&g.to_raw())
}
