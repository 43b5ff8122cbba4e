//! Selecting one diagonal per face so that the red subgraph has maximum
//! degree four.
//!
//! The pipeline runs on a compliant book embedding of the quadrangulation:
//!
//! 1. every dolphin face is split in two by a dummy vertex placed between its
//!    two middle corners, leaving only parachutes;
//! 2. on each page the parachutes nest into binary trees, and each one takes
//!    its white diagonal unless it is the right child of its parent;
//! 3. the two halves of each dolphin are merged back into one diagonal of the
//!    original face;
//! 4. the outer face takes the diagonal joining its white corners when both
//!    have red degree at most three, and the one joining the spine ends
//!    otherwise.

use crate::book::{book_embed, classify_inner_faces, BookEmbedding, FaceClass, FaceKind, Page};
use crate::coloring::{RedBlueColoring, Selection};
use crate::embedding::{EdgeId, FaceId, PlaneEmbedding, VertexId};
use crate::error::{Error, Result};
use crate::optimal::{build_optimal, extract_quadrangulation, Diag, OptimalOnePlaneGraph, RawOnePlaneGraph};
use crate::quad::{Color, Quadrangulation};

const NONE: usize = usize::MAX;

/// Which piece of an original face a parachute is.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FacePart {
    Whole,
    /// The half of a split dolphin on the dolphin's own page.
    First,
    /// The half on the opposite page.
    Second,
}

/// A face of the augmented embedding whose corners alternate in color.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Parachute {
    pub face: FaceId,
    pub part: FacePart,
    pub page: Page,
    /// Corners in spine order. Ids at or above the original vertex count
    /// are dummies.
    pub corners: [VertexId; 4],
    /// Boundary edges with their endpoints. Dummy edges have ids at or
    /// above the original edge count.
    edges: [(EdgeId, [VertexId; 2]); 4],
}

impl Parachute {
    fn edge_between(&self, a: VertexId, b: VertexId) -> EdgeId {
        self.edges
            .iter()
            .find(|(_, [x, y])| (*x == a && *y == b) || (*x == b && *y == a))
            .map(|&(e, _)| e)
            .expect("consecutive parachute corners share a boundary edge")
    }
}

/// A dummy vertex added to split a dolphin.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Dummy {
    pub vertex: VertexId,
    pub face: FaceId,
    pub kind: FaceKind,
    /// Indices of the two halves in [`AugmentedBook::parachutes`].
    pub halves: [usize; 2],
}

/// The book embedding with every dolphin split, so that all inner faces
/// are parachutes. Positions are doubled: original vertex `v` sits at
/// `2 * position(v)` and a dummy sits at the odd slot after its left
/// neighbor.
#[derive(Debug, Clone)]
pub struct AugmentedBook {
    num_original: usize,
    position: Vec<usize>,
    color: Vec<Color>,
    parachutes: Vec<Parachute>,
    dummies: Vec<Dummy>,
    num_edges: usize,
    /// Parachute index of each original inner face that was not split.
    whole: Vec<usize>,
}

impl AugmentedBook {
    pub fn num_vertices(&self) -> usize {
        self.position.len()
    }

    pub fn num_original(&self) -> usize {
        self.num_original
    }

    pub fn is_dummy(&self, v: VertexId) -> bool {
        v >= self.num_original
    }

    pub fn position(&self, v: VertexId) -> usize {
        self.position[v]
    }

    pub fn color(&self, v: VertexId) -> Color {
        self.color[v]
    }

    pub fn parachutes(&self) -> &[Parachute] {
        &self.parachutes
    }

    pub fn dummies(&self) -> &[Dummy] {
        &self.dummies
    }

    /// The diagonal `d` of parachute `p`, left end first.
    pub fn diagonal(&self, p: usize, d: Diag) -> [VertexId; 2] {
        let want = d.color();
        let mut it = self.parachutes[p].corners.into_iter().filter(|&v| self.color[v] == want);
        [it.next().expect("two corners"), it.next().expect("two corners")]
    }
}

/// Replaces every dolphin by two parachutes around a dummy vertex.
pub fn split_dolphins(quad: &Quadrangulation, d: &BookEmbedding, classes: &[FaceClass]) -> AugmentedBook {
    let emb = quad.embedding();
    let n = quad.num_vertices();
    let m = emb.num_edges();
    let mut position: Vec<usize> = (0..n).map(|v| 2 * d.position(v)).collect();
    let mut color: Vec<Color> = quad.colors().to_vec();
    let mut parachutes = Vec::with_capacity(classes.len() + 8);
    let mut dummies = Vec::new();
    let mut whole = vec![NONE; quad.num_faces()];

    for c in classes {
        let f = c.face;
        let face_edges = face_edges(emb, f);
        let q_edge = |a: VertexId, b: VertexId| -> (EdgeId, [VertexId; 2]) {
            let (e, _) = face_edges
                .iter()
                .copied()
                .find(|(_, [x, y])| (*x == a && *y == b) || (*x == b && *y == a))
                .expect("dolphin corners are joined around the face");
            (e, [a, b])
        };
        match c.kind {
            FaceKind::UpperParachute | FaceKind::LowerParachute => {
                let page = if c.kind == FaceKind::UpperParachute { Page::Upper } else { Page::Lower };
                whole[f] = parachutes.len();
                parachutes.push(Parachute {
                    face: f,
                    part: FacePart::Whole,
                    page,
                    corners: c.corners,
                    edges: face_edges,
                });
            }
            FaceKind::UpperDolphin | FaceKind::LowerDolphin => {
                let [a, x, y, z] = c.corners;
                let k = dummies.len();
                let w = n + k;
                position.push(2 * d.position(x) + 1);
                let (first_page, w_color) = if c.kind == FaceKind::UpperDolphin {
                    (Page::Upper, Color::Black)
                } else {
                    (Page::Lower, Color::White)
                };
                color.push(w_color);
                let (exw, ewy) = ((m + 2 * k, [x, w]), (m + 2 * k + 1, [w, y]));
                let i = parachutes.len();
                parachutes.push(Parachute {
                    face: f,
                    part: FacePart::First,
                    page: first_page,
                    corners: [a, x, w, y],
                    edges: [q_edge(a, x), exw, ewy, q_edge(a, y)],
                });
                parachutes.push(Parachute {
                    face: f,
                    part: FacePart::Second,
                    page: first_page.other(),
                    corners: [x, w, y, z],
                    edges: [exw, ewy, q_edge(y, z), q_edge(x, z)],
                });
                dummies.push(Dummy {
                    vertex: w,
                    face: f,
                    kind: c.kind,
                    halves: [i, i + 1],
                });
            }
        }
    }
    let num_edges = m + 2 * dummies.len();
    AugmentedBook {
        num_original: n,
        position,
        color,
        parachutes,
        dummies,
        num_edges,
        whole,
    }
}

fn face_edges(emb: &PlaneEmbedding, f: FaceId) -> [(EdgeId, [VertexId; 2]); 4] {
    let darts = emb.face(f);
    std::array::from_fn(|i| {
        let dt = darts[i];
        (dt.edge(), [emb.tail(dt), emb.head(dt)])
    })
}

/// Nesting of parachutes on each page, viewed so that the page lies above
/// the spine. The lower page is viewed with the spine reversed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParachuteForest {
    pub parent: Vec<Option<usize>>,
    pub left: Vec<Option<usize>>,
    pub right: Vec<Option<usize>>,
}

impl ParachuteForest {
    pub fn is_right_child(&self, p: usize) -> bool {
        self.parent[p].is_some_and(|q| self.right[q] == Some(p))
    }
}

/// The left, right and outer arcs of a parachute, seen from above its page.
fn arcs(dstar: &AugmentedBook, p: &Parachute) -> [EdgeId; 3] {
    let top = 2 * (dstar.num_original - 1);
    let view = |v: VertexId| match p.page {
        Page::Upper => dstar.position[v],
        Page::Lower => top - dstar.position[v],
    };
    let mut c = p.corners;
    c.sort_by_key(|&v| view(v));
    [
        p.edge_between(c[0], c[1]),
        p.edge_between(c[2], c[3]),
        p.edge_between(c[0], c[3]),
    ]
}

/// Links each parachute to the parachutes nested directly below its left
/// and right arcs. The same code serves both pages through the reversed
/// view of the lower page.
pub fn parachute_forest(dstar: &AugmentedBook) -> ParachuteForest {
    let k = dstar.parachutes.len();
    let all: Vec<[EdgeId; 3]> = dstar.parachutes.iter().map(|p| arcs(dstar, p)).collect();
    let mut outer_of = vec![NONE; dstar.num_edges];
    for (i, a) in all.iter().enumerate() {
        outer_of[a[2]] = i;
    }
    let child = |e: EdgeId| Some(outer_of[e]).filter(|&c| c != NONE);
    let mut forest = ParachuteForest {
        parent: vec![None; k],
        left: vec![None; k],
        right: vec![None; k],
    };
    for (i, a) in all.iter().enumerate() {
        forest.left[i] = child(a[0]);
        forest.right[i] = child(a[1]);
        for c in [forest.left[i], forest.right[i]].into_iter().flatten() {
            forest.parent[c] = Some(i);
        }
    }
    forest
}

/// Roots and left children take the white diagonal, right children the
/// black one.
pub fn select_parachute_diagonals(forest: &ParachuteForest) -> Vec<Diag> {
    (0..forest.parent.len())
        .map(|p| if forest.is_right_child(p) { Diag::Black } else { Diag::White })
        .collect()
}

/// A diagonal of an original face, with the page each endpoint used it on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KeptDiagonal {
    pub diag: Diag,
    pub ends: [(VertexId, Page); 2],
}

/// Merges the halves of every split dolphin back into one diagonal of the
/// original face. Returns one entry per face; the outer face gets `None`.
pub fn remove_dummies(dstar: &AugmentedBook, choice: &[Diag], num_faces: usize) -> Vec<Option<KeptDiagonal>> {
    let mut kept: Vec<Option<KeptDiagonal>> = vec![None; num_faces];
    for (f, &p) in dstar.whole.iter().enumerate() {
        if p == NONE {
            continue;
        }
        let pa = &dstar.parachutes[p];
        let [a, b] = dstar.diagonal(p, choice[p]);
        kept[f] = Some(KeptDiagonal {
            diag: choice[p],
            ends: [(a, pa.page), (b, pa.page)],
        });
    }
    for dm in &dstar.dummies {
        let [p1, p2] = dm.halves;
        let (h1, h2) = (&dstar.parachutes[p1], &dstar.parachutes[p2]);
        // the diagonal joining the two middle corners exists in both halves
        let middle = if dm.kind == FaceKind::UpperDolphin { Diag::White } else { Diag::Black };
        let k = if choice[p1] == middle {
            let [a, b] = dstar.diagonal(p1, middle);
            KeptDiagonal {
                diag: middle,
                ends: [(a, h1.page), (b, h1.page)],
            }
        } else if choice[p2] == middle {
            let [a, b] = dstar.diagonal(p2, middle);
            KeptDiagonal {
                diag: middle,
                ends: [(a, h2.page), (b, h2.page)],
            }
        } else {
            // both halves run through the dummy; join their outer ends
            let [a, _] = dstar.diagonal(p1, middle.other());
            let [_, z] = dstar.diagonal(p2, middle.other());
            KeptDiagonal {
                diag: middle.other(),
                ends: [(a, h1.page), (z, h2.page)],
            }
        };
        kept[dm.face] = Some(k);
    }
    kept
}

/// Each vertex uses each (page, side) slot for at most one kept diagonal.
pub fn slots_respected(d: &BookEmbedding, kept: &[Option<KeptDiagonal>]) -> bool {
    let mut used = vec![[false; 4]; d.spine().len()];
    for k in kept.iter().flatten() {
        for i in 0..2 {
            let (v, page) = k.ends[i];
            let other = k.ends[1 - i].0;
            let slot = 2 * (page == Page::Lower) as usize + (d.position(other) > d.position(v)) as usize;
            if std::mem::replace(&mut used[v][slot], true) {
                return false;
            }
        }
    }
    true
}

/// Picks the outer-face diagonal given the red degrees of everything else:
/// the white one when both of its ends have degree at most three, else the
/// black one.
pub fn select_outer_diagonal(quad: &Quadrangulation, degree: &[usize]) -> Diag {
    let (_, [w1, w2]) = quad.opposite_pairs(quad.outer_face());
    if degree[w1] <= 3 && degree[w2] <= 3 {
        Diag::White
    } else {
        Diag::Black
    }
}

/// Every intermediate result of one run.
#[derive(Debug, Clone)]
pub struct PickerTrace {
    pub book: BookEmbedding,
    pub classes: Vec<FaceClass>,
    pub augmented: AugmentedBook,
    pub forest: ParachuteForest,
    pub parachute_choice: Vec<Diag>,
    pub kept: Vec<Option<KeptDiagonal>>,
    /// Red degrees before the outer face is decided.
    pub degree_before_outer: Vec<usize>,
    pub outer_choice: Diag,
    pub selection: Selection,
    pub coloring: RedBlueColoring,
}

/// Red set of maximum degree at most four, one diagonal per face.
pub fn diag_picker(g: &OptimalOnePlaneGraph) -> Result<RedBlueColoring> {
    diag_picker_traced(g).map(|t| t.coloring)
}

pub fn diag_picker_traced(g: &OptimalOnePlaneGraph) -> Result<PickerTrace> {
    let quad = g.quad();
    let book = book_embed(quad)?;
    let classes = classify_inner_faces(quad, &book)?;
    let augmented = split_dolphins(quad, &book, &classes);
    let forest = parachute_forest(&augmented);
    let parachute_choice = select_parachute_diagonals(&forest);
    let kept = remove_dummies(&augmented, &parachute_choice, quad.num_faces());

    let mut degree = vec![0usize; quad.num_vertices()];
    for k in kept.iter().flatten() {
        degree[k.ends[0].0] += 1;
        degree[k.ends[1].0] += 1;
    }
    let outer = quad.outer_face();
    let outer_choice = select_outer_diagonal(quad, &degree);
    let diags = kept
        .iter()
        .enumerate()
        .map(|(f, k)| match k {
            Some(k) => k.diag,
            None if f == outer => outer_choice,
            None => unreachable!("every inner face is classified"),
        })
        .collect();
    let selection = Selection(diags);
    let coloring = RedBlueColoring::from_selection(g, &selection);
    if coloring.max_red_degree() > 4 {
        return Err(Error::EmbeddingFailed(format!(
            "red degree {} exceeds four",
            coloring.max_red_degree()
        )));
    }
    Ok(PickerTrace {
        book,
        classes,
        augmented,
        forest,
        parachute_choice,
        kept,
        degree_before_outer: degree,
        outer_choice,
        selection,
        coloring,
    })
}

/// Normalizes a raw 1-plane description through its quadrangulation, then
/// runs [`diag_picker`].
pub fn partition(raw: &RawOnePlaneGraph) -> Result<(OptimalOnePlaneGraph, RedBlueColoring)> {
    let g = build_optimal(extract_quadrangulation(raw)?)?;
    let c = diag_picker(&g)?;
    Ok((g, c))
}

/// A triangulation of a quadrangulation by one diagonal per face.
#[derive(Debug, Clone)]
pub struct Triangulation {
    pub embedding: PlaneEmbedding,
    pub selection: Selection,
    /// Degree gained by each vertex.
    pub increase: Vec<usize>,
}

impl Triangulation {
    pub fn max_increase(&self) -> usize {
        self.increase.iter().copied().max().unwrap_or(0)
    }
}

/// Adds one diagonal per face so that no vertex degree grows by more than
/// four.
pub fn triangulate_quadrangulation(quad: &Quadrangulation) -> Result<Triangulation> {
    let g = build_optimal(quad.clone())?;
    let c = diag_picker(&g)?;
    let selection = c.selection(&g).expect("one diagonal per face");
    let pick: Vec<Option<Diag>> = selection.0.iter().map(|&d| Some(d)).collect();
    let embedding = g.plane_with_diagonals(&pick)?;
    let increase = selection.degrees(&g);
    Ok(Triangulation {
        embedding,
        selection,
        increase,
    })
}
