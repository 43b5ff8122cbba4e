//! Spine drawing of a book embedding: vertices on a horizontal line,
//! upper-page edges as arcs above it and lower-page edges below.

use std::fmt::Write as _;

use crate::book::{BookEmbedding, Page};
use crate::quad::{Color, Quadrangulation};

const GAP: usize = 40;
const MARGIN: usize = 20;

pub fn export_svg(quad: &Quadrangulation, d: &BookEmbedding) -> String {
    let n = quad.num_vertices();
    let width = 2 * MARGIN + GAP * n.saturating_sub(1);
    let half = GAP * n / 2 + MARGIN;
    let height = 2 * half;
    let x = |v: usize| MARGIN + GAP * d.position(v);
    let mut s = String::new();
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">"
    );
    let _ = writeln!(s, "<g fill=\"none\" stroke=\"black\" stroke-width=\"1\">");
    for (e, &[a, b]) in quad.embedding().edges().iter().enumerate() {
        let (l, r) = if x(a) < x(b) { (x(a), x(b)) } else { (x(b), x(a)) };
        let rad = (r - l) / 2;
        let sweep = u8::from(d.page(e) == Page::Upper);
        let _ = writeln!(s, "<path d=\"M {l} {half} A {rad} {rad} 0 0 {sweep} {r} {half}\"/>");
    }
    s.push_str("</g>\n");
    for v in 0..n {
        let fill = if quad.color(v) == Color::Black { "black" } else { "white" };
        let _ = writeln!(
            s,
            "<circle cx=\"{}\" cy=\"{half}\" r=\"5\" fill=\"{fill}\" stroke=\"black\"><title>{v}</title></circle>",
            x(v)
        );
    }
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::book::book_embed;
    use crate::generators::gen_example;

    #[test]
    fn one_arc_per_edge() {
        let g = gen_example();
        let d = book_embed(g.quad()).unwrap();
        let svg = export_svg(g.quad(), &d);
        assert_eq!(svg.matches("<path").count(), 20);
        assert_eq!(svg.matches("<circle").count(), 12);
        let upper = d.pages().iter().filter(|&&p| p == Page::Upper).count();
        assert_eq!(svg.matches(" 0 0 1 ").count(), upper);
    }
}
