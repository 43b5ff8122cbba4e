//! Graphviz export.

use std::fmt::Write as _;

use crate::coloring::RedBlueColoring;
use crate::optimal::{Diag, EdgeRef, OptimalOnePlaneGraph};

/// Undirected DOT text. Quadrangulation edges are solid and diagonals
/// dashed, with each diagonal tagged by the face it crosses in. With a
/// coloring, red edges get `color=red` and the rest `color=blue`.
pub fn export_dot(g: &OptimalOnePlaneGraph, coloring: Option<&RedBlueColoring>) -> String {
    let red: Vec<EdgeRef> = coloring
        .map(|c| {
            let mut r = c.red().to_vec();
            r.sort_unstable();
            r
        })
        .unwrap_or_default();
    let color = |e: EdgeRef| match coloring {
        None => "",
        Some(_) if red.binary_search(&e).is_ok() => ", color=red",
        Some(_) => ", color=blue",
    };
    let quad = g.quad();
    let mut s = String::from("graph o1p {\n  node [shape=circle, style=filled];\n");
    for v in 0..g.num_vertices() {
        let fill = match quad.color(v) {
            crate::quad::Color::Black => "black\", fontcolor=\"white",
            crate::quad::Color::White => "white",
        };
        let _ = writeln!(s, "  {v} [fillcolor=\"{fill}\"];");
    }
    for (e, [u, v]) in g.embedding().edges().iter().enumerate() {
        let _ = writeln!(s, "  {u} -- {v} [id=\"q{e}\"{}];", color(EdgeRef::Quad(e)));
    }
    for f in 0..g.num_faces() {
        for d in [Diag::Black, Diag::White] {
            let [u, v] = g.diagonal(f, d);
            let tag = if d == Diag::Black { 'b' } else { 'w' };
            let _ = writeln!(
                s,
                "  {u} -- {v} [id=\"f{f}{tag}\", style=dashed, comment=\"crosses f{f}{}\"{}];",
                if d == Diag::Black { 'w' } else { 'b' },
                color(EdgeRef::Diagonal(f, d))
            );
        }
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{example_red_paths, gen_example};

    #[test]
    fn two_path_coloring_has_ten_red_edges() {
        let g = gen_example();
        let pairs: Vec<(usize, usize)> = example_red_paths()
            .iter()
            .flat_map(|p| p.windows(2).map(|w| (w[0], w[1])).collect::<Vec<_>>())
            .collect();
        let c = RedBlueColoring::from_red_pairs(&g, &pairs).unwrap();
        let dot = export_dot(&g, Some(&c));
        assert_eq!(dot.matches("color=red").count(), 10);
        assert_eq!(dot.matches("color=blue").count(), 30);
        assert_eq!(dot, export_dot(&g, Some(&c)));
    }

    #[test]
    fn uncolored() {
        let dot = export_dot(&gen_example(), None);
        assert!(!dot.contains("color=red") && !dot.contains("color=blue"));
        assert_eq!(dot.matches(" -- ").count(), 40);
        assert_eq!(dot.matches("style=dashed").count(), 20);
    }
}
