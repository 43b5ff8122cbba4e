//! The `RBC/1` format for red/blue colorings.
//!
//! ```text
//! RBC/1
//! red 0 4 9
//! red 1 2 7
//! stats max_red_degree=2
//! ```
//!
//! Each `red` line names a face and the endpoints of one of its diagonals.
//! A quadrangulation edge may be listed with `-` in place of the face.
//! Every edge not listed is blue. The `stats` line is informational and is
//! recomputed on load.

use std::fmt::Write as _;

use crate::coloring::RedBlueColoring;
use crate::error::{Error, Result};
use crate::optimal::{EdgeRef, OptimalOnePlaneGraph};

use super::{tokens, Num};

pub const HEADER: &str = "RBC/1";

pub fn parse_rbc(text: &str, g: &OptimalOnePlaneGraph) -> Result<RedBlueColoring> {
    let emb = g.embedding();
    let n = g.num_vertices();
    let mut red = Vec::new();
    let mut stats_seen = false;
    for (line, toks) in tokens(text, HEADER)? {
        let mut it = toks.iter().copied();
        match it.next().expect("non-empty line") {
            "red" => {
                if stats_seen {
                    return Err(Error::parse(line, "red line after stats"));
                }
                let mut num = Num::new(line, &mut it);
                let face = num.optional()?;
                let (u, v) = (num.vertex(n)?, num.vertex(n)?);
                num.end()?;
                let e = match face {
                    Some(f) => g
                        .find_diagonal(f, u, v)
                        .map(|d| EdgeRef::Diagonal(f, d))
                        .ok_or_else(|| Error::ForeignEdge(format!("({u}, {v}) is not a diagonal of face {f}")))?,
                    None => emb
                        .rotation(u)
                        .iter()
                        .copied()
                        .find(|&e| emb.other_end(e, u) == v)
                        .map(EdgeRef::Quad)
                        .ok_or_else(|| Error::ForeignEdge(format!("({u}, {v}) is not an edge")))?,
                };
                red.push(e);
            }
            "stats" => {
                for kv in it {
                    let Some((_, val)) = kv.split_once('=') else {
                        return Err(Error::parse(line, format!("expected key=value, found {kv:?}")));
                    };
                    val.parse::<usize>()
                        .map_err(|_| Error::parse(line, format!("bad value in {kv:?}")))?;
                }
                stats_seen = true;
            }
            other => return Err(Error::parse(line, format!("unknown keyword {other:?}"))),
        }
    }
    RedBlueColoring::from_red(g, red)
}

/// Red edges in the order stored in `c`.
pub fn write_rbc(g: &OptimalOnePlaneGraph, c: &RedBlueColoring) -> Result<String> {
    let mut s = format!("{HEADER}\n");
    for &e in c.red() {
        let [u, v] = g.endpoints(e)?;
        match e {
            EdgeRef::Diagonal(f, _) => writeln!(s, "red {f} {u} {v}"),
            EdgeRef::Quad(_) => writeln!(s, "red - {u} {v}"),
        }
        .expect("writing to a String");
    }
    let _ = writeln!(s, "stats max_red_degree={}", c.max_red_degree());
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagpicker::diag_picker;
    use crate::generators::gen_example;

    #[test]
    fn round_trip() {
        let g = gen_example();
        let c = diag_picker(&g).unwrap();
        let text = write_rbc(&g, &c).unwrap();
        assert!(text.ends_with(&format!("stats max_red_degree={}\n", c.max_red_degree())));
        assert_eq!(parse_rbc(&text, &g).unwrap(), c);
    }

    #[test]
    fn quad_edge_round_trip() {
        let g = gen_example();
        let c = RedBlueColoring::from_red(&g, vec![EdgeRef::Quad(3)]).unwrap();
        let text = write_rbc(&g, &c).unwrap();
        assert!(text.contains("red - "));
        assert_eq!(parse_rbc(&text, &g).unwrap(), c);
    }

    #[test]
    fn wrong_face() {
        let g = gen_example();
        let [u, v] = g.diagonal(0, crate::optimal::Diag::Black);
        let text = format!("RBC/1\nred 1 {u} {v}\n");
        assert!(matches!(parse_rbc(&text, &g), Err(Error::ForeignEdge(_))));
    }
}
