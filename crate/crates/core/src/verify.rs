//! Independent checks of colorings and of the grid-family certificate.
//!
//! Nothing here reuses the diagonal picker; every flag is recomputed from
//! the graph and the red edge set alone.

use num_rational::Ratio;

use crate::coloring::{RedBlueColoring, Selection};
use crate::error::{Error, Result};
use crate::generators::GridInstance;
use crate::optimal::{Diag, EdgeRef, OptimalOnePlaneGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ColoringReport {
    pub red_count: usize,
    pub blue_count: usize,
    pub max_red_degree: usize,
    pub red_is_forest: bool,
    /// Connected components of the red subgraph, over the vertices it touches.
    pub red_tree_count: usize,
    /// Vertices with at least one red edge.
    pub red_spanned_vertices: usize,
    pub blue_is_maximal_plane: bool,
    pub one_red_per_pair: bool,
}

pub fn verify_coloring(g: &OptimalOnePlaneGraph, c: &RedBlueColoring) -> Result<ColoringReport> {
    let n = g.num_vertices();
    let mut red: Vec<EdgeRef> = c.red().to_vec();
    red.sort_unstable();
    red.dedup();
    let mut ends = Vec::with_capacity(red.len());
    for &e in &red {
        ends.push(g.endpoints(e)?);
    }

    let mut deg = vec![0usize; n];
    let mut uf: Vec<usize> = (0..n).collect();
    let mut acyclic = true;
    let mut merges = 0;
    for &[a, b] in &ends {
        deg[a] += 1;
        deg[b] += 1;
        let (ra, rb) = (root(&mut uf, a), root(&mut uf, b));
        if ra == rb {
            acyclic = false;
        } else {
            uf[ra] = rb;
            merges += 1;
        }
    }
    let spanned = deg.iter().filter(|&&d| d > 0).count();

    let mut per_face = vec![[false; 2]; g.num_faces()];
    let mut quad_red = false;
    for &e in &red {
        match e {
            EdgeRef::Diagonal(f, d) => per_face[f][(d == Diag::White) as usize] = true,
            EdgeRef::Quad(_) => quad_red = true,
        }
    }
    let one_red_per_pair = per_face.iter().all(|p| p[0] != p[1]);

    let blue_is_maximal_plane = !quad_red && one_red_per_pair && {
        // the blue diagonal of each face is the one that is not red
        let pick: Vec<Option<Diag>> = per_face
            .iter()
            .map(|p| Some(if p[0] { Diag::White } else { Diag::Black }))
            .collect();
        match g.plane_with_diagonals(&pick) {
            Ok(emb) => emb.num_edges() + 6 == 3 * n && emb.faces().all(|f| f.len() == 3),
            Err(_) => false,
        }
    };

    Ok(ColoringReport {
        red_count: red.len(),
        blue_count: g.num_edges() - red.len(),
        max_red_degree: deg.iter().copied().max().unwrap_or(0),
        red_is_forest: acyclic,
        red_tree_count: spanned - merges,
        red_spanned_vertices: spanned,
        blue_is_maximal_plane,
        one_red_per_pair,
    })
}

fn root(p: &mut [usize], mut x: usize) -> usize {
    while p[x] != x {
        p[x] = p[p[x]];
        x = p[x];
    }
    x
}

/// A red forest with one edge per face has `n - 2` edges, so if it touches
/// every vertex it has exactly two trees. True when the report shows that
/// shape.
pub fn two_tree_check(report: &ColoringReport, n: usize) -> bool {
    report.red_is_forest && report.red_tree_count == 2 && report.red_spanned_vertices == n
}

/// Lower bound on the maximum red degree of any one-diagonal-per-face
/// selection of the `h x h` grid instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridBound {
    pub h: usize,
    pub bound: Ratio<i64>,
    /// The bound exceeds 3, so every selection has a vertex of red degree 4.
    pub no_degree_3_coloring: bool,
}

/// Counting argument on the grid instance. The red subgraph has one edge
/// per face, so its degree sum is `2f = 10h^2 - 16h + 4`. Each of the
/// `(h-1)^2` inner cycles contributes exactly 6 of that, and the `h^2` grid
/// vertices carry the rest, so some grid vertex has red degree at least
/// `(2f - 6(h-1)^2) / h^2`.
pub fn grid_degree_bound(h: usize) -> Result<GridBound> {
    if h < 3 {
        return Err(Error::InvalidParameter("h must be at least 3".into()));
    }
    let hh = h as i64;
    let degree_sum = 10 * hh * hh - 16 * hh + 4;
    let inner = 6 * (hh - 1) * (hh - 1);
    let bound = Ratio::new(degree_sum - inner, hh * hh);
    Ok(GridBound {
        h,
        bound,
        no_degree_3_coloring: bound > Ratio::from_integer(3),
    })
}

/// True when every inner 4-cycle of the grid instance has red degree sum 6
/// under `sel`.
pub fn gray_cycle_degree_check(inst: &GridInstance, sel: &Selection) -> Result<bool> {
    let g = &inst.graph;
    if sel.len() != g.num_faces() {
        return Err(Error::NotGridFamily(format!(
            "selection covers {} faces, graph has {}",
            sel.len(),
            g.num_faces()
        )));
    }
    let emb = g.embedding();
    for cyc in &inst.gray_cycles {
        for i in 0..4 {
            let (a, b) = (cyc[i], cyc[(i + 1) % 4]);
            if a >= g.num_vertices() || !emb.neighbors(a).any(|x| x == b) {
                return Err(Error::NotGridFamily(format!("{a} and {b} are not adjacent")));
            }
        }
    }
    let deg = sel.degrees(g);
    Ok(inst.gray_cycles.iter().all(|c| c.iter().map(|&v| deg[v]).sum::<usize>() == 6))
}
