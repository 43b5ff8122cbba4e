//! Two-page book embeddings of quadrangulations.
//!
//! A compliant embedding puts a black vertex at each end of the spine, uses
//! each page as a spanning tree (the upper page avoids the rightmost vertex,
//! the lower page avoids the leftmost one), and orients every upper edge
//! black-to-white and every lower edge white-to-black from left to right.

use crate::embedding::{EdgeId, FaceId, VertexId};
use crate::error::{Error, Result};
use crate::quad::{Color, Quadrangulation};
use crate::stnumber::st_numbering;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Page {
    Upper,
    Lower,
}

impl Page {
    pub fn other(self) -> Page {
        match self {
            Page::Upper => Page::Lower,
            Page::Lower => Page::Upper,
        }
    }
}

/// A spine order of the vertices plus a page for every quadrangulation edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BookEmbedding {
    spine: Vec<VertexId>,
    position: Vec<usize>,
    page: Vec<Page>,
}

impl BookEmbedding {
    /// Fails with [`Error::InvalidBook`] unless `spine` is a permutation of
    /// `0..spine.len()`.
    pub fn new(spine: Vec<VertexId>, page: Vec<Page>) -> Result<Self> {
        let n = spine.len();
        let mut position = vec![usize::MAX; n];
        for (i, &v) in spine.iter().enumerate() {
            if v >= n || position[v] != usize::MAX {
                return Err(Error::InvalidBook(format!("spine is not a permutation (vertex {v})")));
            }
            position[v] = i;
        }
        Ok(BookEmbedding { spine, position, page })
    }

    /// Assigns pages from the spine alone: an edge goes on the upper page
    /// when its black end lies to the left.
    pub fn from_spine(quad: &Quadrangulation, spine: Vec<VertexId>) -> Result<Self> {
        if spine.len() != quad.num_vertices() {
            return Err(Error::InvalidBook(format!(
                "spine has {} vertices, graph has {}",
                spine.len(),
                quad.num_vertices()
            )));
        }
        let mut d = BookEmbedding::new(spine, Vec::new())?;
        d.page = quad
            .embedding()
            .edges()
            .iter()
            .map(|&[a, b]| {
                let (blk, wht) = if quad.color(a) == Color::Black { (a, b) } else { (b, a) };
                if d.position[blk] < d.position[wht] {
                    Page::Upper
                } else {
                    Page::Lower
                }
            })
            .collect();
        Ok(d)
    }

    pub fn spine(&self) -> &[VertexId] {
        &self.spine
    }

    pub fn position(&self, v: VertexId) -> usize {
        self.position[v]
    }

    pub fn positions(&self) -> &[usize] {
        &self.position
    }

    pub fn page(&self, e: EdgeId) -> Page {
        self.page[e]
    }

    pub fn pages(&self) -> &[Page] {
        &self.page
    }

    pub fn s_b(&self) -> VertexId {
        self.spine[0]
    }

    pub fn t_b(&self) -> VertexId {
        self.spine[self.spine.len() - 1]
    }

    /// Same embedding with every vertex `v` renamed to `map[v]` and every
    /// edge `e` renamed to `edge_map[e]`.
    pub fn relabel(&self, map: &[VertexId], edge_map: &[EdgeId]) -> Result<Self> {
        let spine = self.spine.iter().map(|&v| map[v]).collect();
        let mut page = vec![Page::Upper; self.page.len()];
        for (e, &p) in self.page.iter().enumerate() {
            page[edge_map[e]] = p;
        }
        BookEmbedding::new(spine, page)
    }
}

/// Outcome of [`verify_p1p2p3`]; each flag is computed on its own.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct BookReport {
    /// Both spine ends are black.
    pub p1: bool,
    /// Each page is a spanning tree of the graph minus the far spine end.
    pub p2: bool,
    /// Upper edges run black-to-white, lower edges white-to-black.
    pub p3: bool,
    /// No two edges on the same page interleave.
    pub noncrossing: bool,
}

impl BookReport {
    pub fn all(&self) -> bool {
        self.p1 && self.p2 && self.p3 && self.noncrossing
    }
}

/// Checks a book embedding of `quad` against the three structural
/// properties and the non-crossing condition.
pub fn verify_p1p2p3(quad: &Quadrangulation, d: &BookEmbedding) -> BookReport {
    let n = quad.num_vertices();
    let emb = quad.embedding();
    if d.spine.len() != n || d.page.len() != emb.num_edges() || n < 2 {
        return BookReport::default();
    }
    let pos = &d.position;
    let black = |v: VertexId| quad.color(v) == Color::Black;

    let p1 = black(d.s_b()) && black(d.t_b());

    let p3 = emb.edges().iter().zip(&d.page).all(|(&[a, b], &p)| {
        let (l, r) = if pos[a] < pos[b] { (a, b) } else { (b, a) };
        match p {
            Page::Upper => black(l) && !black(r),
            Page::Lower => !black(l) && black(r),
        }
    });

    let p2 = [(Page::Upper, d.t_b()), (Page::Lower, d.s_b())].into_iter().all(|(page, avoid)| {
        let mut uf = UnionFind::new(n);
        let mut count = 0;
        for (&[a, b], &p) in emb.edges().iter().zip(&d.page) {
            if p != page {
                continue;
            }
            if a == avoid || b == avoid || !uf.union(a, b) {
                return false;
            }
            count += 1;
        }
        count == n - 2
    });

    let noncrossing = [Page::Upper, Page::Lower].into_iter().all(|page| {
        let intervals: Vec<(usize, usize)> = emb
            .edges()
            .iter()
            .zip(&d.page)
            .filter(|&(_, &p)| p == page)
            .map(|(&[a, b], _)| (pos[a].min(pos[b]), pos[a].max(pos[b])))
            .collect();
        intervals_nest(n, &intervals)
    });

    BookReport { p1, p2, p3, noncrossing }
}

/// True when no two intervals interleave (`a < c < b < d`). Linear in
/// `n + intervals.len()`.
pub(crate) fn intervals_nest(n: usize, intervals: &[(usize, usize)]) -> bool {
    // group by left end, each group ordered by right end descending
    let csr = |key: &dyn Fn(&(usize, usize)) -> usize| {
        let mut first = vec![0usize; n + 1];
        for iv in intervals {
            first[key(iv) + 1] += 1;
        }
        for p in 0..n {
            first[p + 1] += first[p];
        }
        first
    };
    let rfirst = csr(&|iv| iv.1);
    let mut fill = rfirst.clone();
    let mut lefts = vec![0usize; intervals.len()];
    for &(l, r) in intervals {
        lefts[fill[r]] = l;
        fill[r] += 1;
    }
    let first = csr(&|iv| iv.0);
    let mut fill = first.clone();
    let mut starts = vec![0usize; intervals.len()];
    for r in (0..n).rev() {
        for &l in &lefts[rfirst[r]..rfirst[r + 1]] {
            starts[fill[l]] = r;
            fill[l] += 1;
        }
    }
    let mut ends_here = vec![0usize; n];
    for &(_, r) in intervals {
        ends_here[r] += 1;
    }
    let mut stack: Vec<usize> = Vec::new();
    for p in 0..n {
        let mut closed = 0;
        while stack.last() == Some(&p) {
            stack.pop();
            closed += 1;
        }
        if closed != ends_here[p] {
            return false;
        }
        stack.extend_from_slice(&starts[first[p]..first[p + 1]]);
    }
    true
}

struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// False if `a` and `b` were already connected.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (small, big) = if self.size[ra] < self.size[rb] { (ra, rb) } else { (rb, ra) };
        self.parent[small] = big;
        self.size[big] += self.size[small];
        true
    }
}

/// Builds a compliant two-page book embedding of `quad` in linear time.
///
/// The black vertices of the outer face become the spine ends. The spine
/// is read off a spanning tree that alternates colors, built from an
/// st-ordering of the black vertices.
pub fn book_embed(quad: &Quadrangulation) -> Result<BookEmbedding> {
    let emb = quad.embedding();
    let n = quad.num_vertices();
    let outer = quad.outer_face();
    let (ob, _) = quad.opposite_pairs(outer);
    let (s, t) = (ob[0].min(ob[1]), ob[0].max(ob[1]));

    // black vertices joined across every face
    let mut adj: Vec<Vec<VertexId>> = vec![Vec::new(); n];
    for f in 0..quad.num_faces() {
        let ([a, b], _) = quad.opposite_pairs(f);
        adj[a].push(b);
        adj[b].push(a);
    }
    let st = st_numbering(&adj, s, t).map_err(Error::EmbeddingFailed)?;
    if let Some(v) = (0..n).find(|&v| quad.color(v) == Color::Black && st[v] == usize::MAX) {
        return Err(Error::EmbeddingFailed(format!("black vertex {v} is not reachable")));
    }

    let across = |v: VertexId, j: usize| -> VertexId {
        let ([a, b], _) = quad.opposite_pairs(emb.wedge_face(v, j));
        if a == v {
            b
        } else {
            a
        }
    };

    let mut children: Vec<Vec<VertexId>> = vec![Vec::new(); n];
    for v in 0..n {
        let rot = emb.rotation(v);
        let d = rot.len();
        let nb: Vec<VertexId> = rot.iter().map(|&e| emb.other_end(e, v)).collect();
        if quad.color(v) == Color::Black {
            if v == t {
                continue;
            }
            if v == s {
                let m = (0..d)
                    .find(|&j| emb.wedge_face(v, j) == outer)
                    .ok_or_else(|| Error::EmbeddingFailed("outer face is not at s".into()))?;
                children[v] = (0..d).map(|i| nb[(m + d - i) % d]).collect();
                continue;
            }
            let out: Vec<bool> = (0..d).map(|j| st[across(v, j)] > st[v]).collect();
            let mut starts = (0..d).filter(|&j| !out[(j + d - 1) % d] && out[j]);
            let (Some(j), None) = (starts.next(), starts.next()) else {
                return Err(Error::EmbeddingFailed(format!(
                    "vertex {v} does not have one block of outgoing edges"
                )));
            };
            let run = (0..d).take_while(|&i| out[(j + i) % d]).count();
            children[v] = (1..run).rev().map(|i| nb[(j + i) % d]).collect();
        } else {
            let a = (0..d).min_by_key(|&i| st[nb[i]]).expect("degree >= 2");
            let z = (0..d).max_by_key(|&i| st[nb[i]]).expect("degree >= 2");
            let mut i = (a + d - 1) % d;
            while i != z {
                children[v].push(nb[i]);
                i = (i + d - 1) % d;
            }
        }
    }

    // contour walk: black vertices on arrival, white vertices on departure
    let mut spine = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    seen[s] = true;
    spine.push(s);
    let mut stack: Vec<(VertexId, usize)> = vec![(s, 0)];
    while let Some(&mut (v, ref mut i)) = stack.last_mut() {
        if let Some(&c) = children[v].get(*i) {
            *i += 1;
            if std::mem::replace(&mut seen[c], true) {
                return Err(Error::EmbeddingFailed(format!("vertex {c} reached twice")));
            }
            if quad.color(c) == Color::Black {
                spine.push(c);
            }
            stack.push((c, 0));
        } else {
            stack.pop();
            if quad.color(v) == Color::White {
                spine.push(v);
            }
        }
    }
    if seen[t] {
        return Err(Error::EmbeddingFailed("t reached inside the tree".into()));
    }
    spine.push(t);
    if spine.len() != n {
        return Err(Error::EmbeddingFailed(format!("tree spans {} of {} vertices", spine.len() - 1, n - 1)));
    }

    let d = BookEmbedding::from_spine(quad, spine)?;
    let report = verify_p1p2p3(quad, &d);
    if !report.all() {
        return Err(Error::EmbeddingFailed(format!("constructed embedding fails checks: {report:?}")));
    }
    Ok(d)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FaceKind {
    UpperParachute,
    LowerParachute,
    UpperDolphin,
    LowerDolphin,
}

impl FaceKind {
    pub fn is_dolphin(self) -> bool {
        matches!(self, FaceKind::UpperDolphin | FaceKind::LowerDolphin)
    }
}

/// An inner face with its corners in left-to-right spine order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FaceClass {
    pub face: FaceId,
    pub kind: FaceKind,
    pub corners: [VertexId; 4],
}

/// Classifies every inner face by the colors of its corners along the spine.
pub fn classify_inner_faces(quad: &Quadrangulation, d: &BookEmbedding) -> Result<Vec<FaceClass>> {
    let mut out = Vec::with_capacity(quad.num_faces().saturating_sub(1));
    for f in 0..quad.num_faces() {
        if f == quad.outer_face() {
            continue;
        }
        out.push(classify_face(quad, d, f)?);
    }
    Ok(out)
}

pub fn classify_face(quad: &Quadrangulation, d: &BookEmbedding, f: FaceId) -> Result<FaceClass> {
    let mut corners = quad.corners(f);
    corners.sort_by_key(|&v| d.position(v));
    let pattern = corners.map(|v| quad.color(v) == Color::Black);
    let kind = match pattern {
        [true, false, true, false] => FaceKind::UpperParachute,
        [false, true, false, true] => FaceKind::LowerParachute,
        [true, false, false, true] => FaceKind::UpperDolphin,
        [false, true, true, false] => FaceKind::LowerDolphin,
        _ => return Err(Error::UnclassifiableFace(f)),
    };
    if kind.is_dolphin() && d.position(corners[2]) != d.position(corners[1]) + 1 {
        return Err(Error::DolphinGapViolation(f));
    }
    Ok(FaceClass { face: f, kind, corners })
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::embedding::{OuterFace, PlaneEmbedding};
    use crate::quad::validate_quadrangulation;
    use proptest::prelude::*;

    pub(crate) fn cube() -> Quadrangulation {
        let rot = vec![
            vec![1, 4, 3],
            vec![2, 5, 0],
            vec![3, 6, 1],
            vec![0, 7, 2],
            vec![0, 5, 7],
            vec![1, 6, 4],
            vec![2, 7, 5],
            vec![3, 4, 6],
        ];
        let emb = PlaneEmbedding::from_neighbor_rotations(&rot, OuterFace::LeftOf(1, 0)).unwrap();
        validate_quadrangulation(emb).unwrap()
    }

    fn interleave_quadratic(iv: &[(usize, usize)]) -> bool {
        iv.iter().enumerate().all(|(i, &(a, b))| {
            iv[i + 1..].iter().all(|&(c, d)| !((a < c && c < b && b < d) || (c < a && a < d && d < b)))
        })
    }

    #[test]
    fn cube_embeds() {
        let q = cube();
        let d = book_embed(&q).unwrap();
        assert_eq!(d.spine().len(), 8);
        let rep = verify_p1p2p3(&q, &d);
        assert!(rep.all(), "{rep:?}");
        let up = d.pages().iter().filter(|&&p| p == Page::Upper).count();
        assert_eq!(up, 6);
        let classes = classify_inner_faces(&q, &d).unwrap();
        assert_eq!(classes.len(), 5);
    }

    #[test]
    fn moving_one_edge_to_the_other_page_breaks_p2() {
        let q = cube();
        let d = book_embed(&q).unwrap();
        let e = d.pages().iter().position(|&p| p == Page::Upper).unwrap();
        let mut page = d.pages().to_vec();
        page[e] = Page::Lower;
        let bad = BookEmbedding::new(d.spine().to_vec(), page).unwrap();
        let rep = verify_p1p2p3(&q, &bad);
        assert!(!rep.p2);
        assert!(!rep.p3);
        assert!(rep.p1);
    }

    #[test]
    fn bbww_face_is_unclassifiable() {
        let q = cube();
        // order the corners of face 0 black, black, white, white
        let f = 0;
        let (b, w) = q.opposite_pairs(f);
        let head = [b[0], b[1], w[0], w[1]];
        let spine: Vec<usize> = head.into_iter().chain((0..8).filter(|v| !head.contains(v))).collect();
        let d = BookEmbedding::from_spine(&q, spine).unwrap();
        assert_eq!(classify_face(&q, &d, f), Err(Error::UnclassifiableFace(f)));
    }

    #[test]
    fn non_permutation_spine_is_rejected() {
        assert!(BookEmbedding::new(vec![0, 1, 1], vec![]).is_err());
        assert!(BookEmbedding::new(vec![0, 3, 1], vec![]).is_err());
    }

    fn families() -> Vec<Quadrangulation> {
        use crate::generators::*;
        let mut out = vec![gen_example().quad().clone()];
        out.extend((1..=6).map(|k| gen_two_pole(k).unwrap().quad().clone()));
        out.extend((3..=7).map(|h| gen_grid_worstcase(h).unwrap().graph.quad().clone()));
        out.extend((0..60).map(|s| gen_random_quad(8 + 2 * s as usize + (s % 3) as usize, s).unwrap()));
        out
    }

    #[test]
    fn book_embed_is_compliant_on_all_families() {
        for q in families() {
            let d = book_embed(&q).unwrap();
            assert!(verify_p1p2p3(&q, &d).all());
            let classes = classify_inner_faces(&q, &d).unwrap();
            assert_eq!(classes.len(), q.num_faces() - 1);
            // the two white corners of the outer face sit next to the spine ends
            let (_, w) = q.opposite_pairs(q.outer_face());
            let n = q.num_vertices();
            let mut ends = [d.spine()[1], d.spine()[n - 2]];
            let mut w = w;
            ends.sort();
            w.sort();
            assert_eq!(ends, w);
        }
    }

    #[test]
    fn example_reference_spine_has_one_upper_dolphin() {
        let g = crate::generators::gen_example();
        let d = BookEmbedding::from_spine(g.quad(), crate::generators::example_spine()).unwrap();
        assert!(verify_p1p2p3(g.quad(), &d).all());
        let classes = classify_inner_faces(g.quad(), &d).unwrap();
        let dolphins: Vec<_> = classes.iter().filter(|c| c.kind.is_dolphin()).collect();
        assert_eq!(classes.len(), 10 - 1);
        assert_eq!(dolphins.len(), 1);
        assert_eq!(dolphins[0].kind, FaceKind::UpperDolphin);
        assert_eq!(dolphins[0].corners, [4, 5, 6, 7]);
    }

    proptest! {
        #[test]
        fn stack_scan_matches_pairwise(n in 2usize..12, raw in proptest::collection::vec((0usize..12, 0usize..12), 0..20)) {
            let mut iv: Vec<(usize, usize)> = raw
                .into_iter()
                .map(|(a, b)| (a % n, b % n))
                .filter(|(a, b)| a != b)
                .map(|(a, b)| (a.min(b), a.max(b)))
                .collect();
            iv.sort();
            iv.dedup();
            prop_assert_eq!(intervals_nest(n, &iv), interleave_quadratic(&iv));
        }

        #[test]
        fn cube_spine_permutations_agree_with_pairwise(perm in Just((0..8).collect::<Vec<usize>>()).prop_shuffle()) {
            let q = cube();
            let d = BookEmbedding::from_spine(&q, perm).unwrap();
            let rep = verify_p1p2p3(&q, &d);
            for page in [Page::Upper, Page::Lower] {
                let iv: Vec<(usize, usize)> = q.embedding().edges().iter().zip(d.pages())
                    .filter(|&(_, &p)| p == page)
                    .map(|(&[a, b], _)| (d.position(a).min(d.position(b)), d.position(a).max(d.position(b))))
                    .collect();
                if !interleave_quadratic(&iv) {
                    prop_assert!(!rep.noncrossing);
                }
            }
        }
    }
}
