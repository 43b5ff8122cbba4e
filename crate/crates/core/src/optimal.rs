//! Optimal 1-plane graphs: a quadrangulation plus both diagonals of every face.


use crate::embedding::{EdgeId, FaceId, OuterFace, PlaneEmbedding, VertexId};
use crate::error::{Error, Result};
use crate::quad::{first_repeated_opposite_pair, validate_quadrangulation_with, Color, Quadrangulation, Trust};

/// Which of the two crossing diagonals of a face.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Diag {
    Black,
    White,
}

impl Diag {
    pub fn other(self) -> Diag {
        match self {
            Diag::Black => Diag::White,
            Diag::White => Diag::Black,
        }
    }

    pub fn color(self) -> Color {
        match self {
            Diag::Black => Color::Black,
            Diag::White => Color::White,
        }
    }
}

/// A reference to one edge of an optimal 1-plane graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeRef {
    /// An uncrossed edge, by its id in the quadrangulation.
    Quad(EdgeId),
    /// A crossing edge, by the face it lives in.
    Diagonal(FaceId, Diag),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FaceDiagonals {
    pub black: [VertexId; 2],
    pub white: [VertexId; 2],
}

impl FaceDiagonals {
    pub fn get(&self, d: Diag) -> [VertexId; 2] {
        match d {
            Diag::Black => self.black,
            Diag::White => self.white,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct BuildOptions {
    /// Keep diagonals that repeat the vertex pair of another face as
    /// distinct parallel edges instead of rejecting the input.
    pub allow_parallel_diagonals: bool,
}

/// A quadrangulation together with the two crossing diagonals of each face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OptimalOnePlaneGraph {
    quad: Quadrangulation,
    diagonals: Vec<FaceDiagonals>,
}

impl OptimalOnePlaneGraph {
    pub fn quad(&self) -> &Quadrangulation {
        &self.quad
    }

    pub fn embedding(&self) -> &PlaneEmbedding {
        self.quad.embedding()
    }

    pub fn num_vertices(&self) -> usize {
        self.quad.num_vertices()
    }

    pub fn num_faces(&self) -> usize {
        self.quad.num_faces()
    }

    /// Total number of edges, uncrossed and crossing.
    pub fn num_edges(&self) -> usize {
        self.embedding().num_edges() + 2 * self.diagonals.len()
    }

    /// One crossing pair per face of the quadrangulation.
    pub fn num_crossing_pairs(&self) -> usize {
        self.diagonals.len()
    }

    pub fn diagonals(&self, f: FaceId) -> &FaceDiagonals {
        &self.diagonals[f]
    }

    pub fn diagonal(&self, f: FaceId, d: Diag) -> [VertexId; 2] {
        self.diagonals[f].get(d)
    }

    pub fn endpoints(&self, e: EdgeRef) -> Result<[VertexId; 2]> {
        match e {
            EdgeRef::Quad(id) if id < self.embedding().num_edges() => Ok(self.embedding().edge(id)),
            EdgeRef::Diagonal(f, d) if f < self.diagonals.len() => Ok(self.diagonal(f, d)),
            _ => Err(Error::ForeignEdge(format!("{e:?}"))),
        }
    }

    /// Every edge of the graph: quadrangulation edges, then both diagonals
    /// of each face in face order.
    pub fn edge_refs(&self) -> impl Iterator<Item = EdgeRef> + '_ {
        let quad = (0..self.embedding().num_edges()).map(EdgeRef::Quad);
        let diag = (0..self.diagonals.len())
            .flat_map(|f| [EdgeRef::Diagonal(f, Diag::Black), EdgeRef::Diagonal(f, Diag::White)]);
        quad.chain(diag)
    }

    /// The face and diagonal joining `u` and `v`, if any.
    pub fn find_diagonal(&self, f: FaceId, u: VertexId, v: VertexId) -> Option<Diag> {
        let d = self.diagonals.get(f)?;
        [Diag::Black, Diag::White]
            .into_iter()
            .find(|&c| same_pair(d.get(c), [u, v]))
    }

    /// The plane graph made of the quadrangulation plus, for every face
    /// with `pick[f] = Some(d)`, its diagonal `d`.
    pub fn plane_with_diagonals(&self, pick: &[Option<Diag>]) -> Result<PlaneEmbedding> {
        let emb = self.embedding();
        let mut rot: Vec<Vec<VertexId>> = Vec::with_capacity(emb.num_vertices());
        for v in 0..emb.num_vertices() {
            let mut r = Vec::with_capacity(emb.degree(v) + 2);
            for (i, &e) in emb.rotation(v).iter().enumerate() {
                r.push(emb.other_end(e, v));
                let f = emb.wedge_face(v, i);
                if let Some(d) = pick.get(f).copied().flatten() {
                    let [a, b] = self.diagonal(f, d);
                    if a == v {
                        r.push(b);
                    } else if b == v {
                        r.push(a);
                    }
                }
            }
            rot.push(r);
        }
        PlaneEmbedding::from_neighbor_rotations(&rot, OuterFace::Id(0))
    }

    /// The raw 1-plane description with every crossing declared.
    pub fn to_raw(&self) -> RawOnePlaneGraph {
        RawOnePlaneGraph {
            embedding: self.embedding().clone(),
            crossings: self
                .diagonals
                .iter()
                .enumerate()
                .map(|(f, d)| DeclaredCrossing {
                    face: Some(f),
                    first: d.black,
                    second: d.white,
                })
                .collect(),
        }
    }
}

fn same_pair(a: [VertexId; 2], b: [VertexId; 2]) -> bool {
    (a[0] == b[0] && a[1] == b[1]) || (a[0] == b[1] && a[1] == b[0])
}

/// Adds both diagonals to every face of `quad`.
pub fn build_optimal(quad: Quadrangulation) -> Result<OptimalOnePlaneGraph> {
    build_optimal_with(quad, BuildOptions::default())
}

pub fn build_optimal_with(quad: Quadrangulation, opts: BuildOptions) -> Result<OptimalOnePlaneGraph> {
    let corners: Vec<[VertexId; 4]> = (0..quad.num_faces()).map(|f| quad.corners(f)).collect();
    if !opts.allow_parallel_diagonals {
        if let Some((first, second, u, v)) = first_repeated_opposite_pair(&corners) {
            return Err(Error::DuplicateDiagonal { first, second, u, v });
        }
    }
    let diagonals = (0..quad.num_faces())
        .map(|f| {
            let (black, white) = quad.opposite_pairs(f);
            FaceDiagonals { black, white }
        })
        .collect();
    let g = OptimalOnePlaneGraph { quad, diagonals };
    debug_assert_eq!(g.num_edges() + 8, 4 * g.num_vertices());
    debug_assert_eq!(g.num_crossing_pairs() + 2, g.num_vertices());
    Ok(g)
}

/// A crossing pair as declared by an input file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeclaredCrossing {
    pub face: Option<FaceId>,
    pub first: [VertexId; 2],
    pub second: [VertexId; 2],
}

/// A 1-plane graph given by its uncrossed edges (with their embedding) and
/// a list of crossing pairs claimed to make it optimal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawOnePlaneGraph {
    pub embedding: PlaneEmbedding,
    pub crossings: Vec<DeclaredCrossing>,
}

/// Recovers the quadrangulation formed by the uncrossed edges and checks
/// that every declared crossing pair is the diagonal pair of its own face.
pub fn extract_quadrangulation(raw: &RawOnePlaneGraph) -> Result<Quadrangulation> {
    extract_quadrangulation_with(raw, Trust::Verify)
}

pub fn extract_quadrangulation_with(raw: &RawOnePlaneGraph, trust: Trust) -> Result<Quadrangulation> {
    let quad = validate_quadrangulation_with(raw.embedding.clone(), trust)
        .map_err(|e| Error::NotOptimal(format!("uncrossed edges are not a valid quadrangulation: {e}")))?;
    let f = quad.num_faces();
    if raw.crossings.len() != f {
        return Err(Error::NotOptimal(format!(
            "{} crossing pairs declared, but the quadrangulation has {} faces",
            raw.crossings.len(),
            f
        )));
    }
    let keys: Vec<[VertexId; 2]> = (0..f)
        .flat_map(|face| {
            let (b, w) = quad.opposite_pairs(face);
            [b, w]
        })
        .collect();
    let queries: Vec<[VertexId; 2]> = raw.crossings.iter().flat_map(|c| [c.first, c.second]).collect();
    if let Some(&v) = queries.iter().flatten().find(|&&v| v >= quad.num_vertices()) {
        return Err(Error::NotOptimal(format!("crossing edge endpoint {v} is not a vertex")));
    }
    let found = crate::pairs::match_pairs(quad.num_vertices(), &keys, &queries);
    let lookup = |q: usize| found[q].map(|k| k / 2);
    let mut used = vec![false; f];
    for (i, c) in raw.crossings.iter().enumerate() {
        let (Some(f1), Some(f2)) = (lookup(2 * i), lookup(2 * i + 1)) else {
            return Err(Error::NotOptimal(format!(
                "crossing pair {i} has an edge that joins no pair of opposite face corners"
            )));
        };
        if f1 != f2 || same_pair(c.first, c.second) {
            return Err(Error::NotOptimal(format!(
                "crossing pair {i} spans faces {f1} and {f2} instead of crossing inside one face"
            )));
        }
        if let Some(hint) = c.face {
            if hint != f1 {
                return Err(Error::NotOptimal(format!(
                    "crossing pair {i} is declared in face {hint} but lies in face {f1}"
                )));
            }
        }
        if std::mem::replace(&mut used[f1], true) {
            return Err(Error::NotOptimal(format!("face {f1} has more than one crossing pair")));
        }
    }
    Ok(quad)
}

/// Extracts and rebuilds the canonical optimal graph from a raw description.
pub fn optimal_from_raw(raw: &RawOnePlaneGraph, trust: Trust) -> Result<OptimalOnePlaneGraph> {
    let quad = extract_quadrangulation_with(raw, trust)?;
    build_optimal(quad)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::validate_quadrangulation;

    fn cube() -> Quadrangulation {
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

    #[test]
    fn cube_gives_24_edges_and_6_crossings() {
        let g = build_optimal(cube()).unwrap();
        assert_eq!(g.num_edges(), 24);
        assert_eq!(g.num_crossing_pairs(), 6);
        for f in 0..g.num_faces() {
            let d = g.diagonals(f);
            assert!(d.black.iter().all(|&v| g.quad().color(v) == Color::Black));
            assert!(d.white.iter().all(|&v| g.quad().color(v) == Color::White));
        }
    }

    #[test]
    fn build_then_extract_is_identity() {
        let q = cube();
        let g = build_optimal(q.clone()).unwrap();
        let back = extract_quadrangulation(&g.to_raw()).unwrap();
        assert_eq!(back, q);
    }

    #[test]
    fn crossing_pair_spanning_two_faces_is_rejected() {
        let g = build_optimal(cube()).unwrap();
        let mut raw = g.to_raw();
        // swap the white diagonals of two faces so each pair straddles two faces
        let w0 = raw.crossings[0].second;
        raw.crossings[0].second = raw.crossings[1].second;
        raw.crossings[1].second = w0;
        assert!(matches!(extract_quadrangulation(&raw), Err(Error::NotOptimal(_))));
    }

    #[test]
    fn parallel_diagonals_need_opt_in() {
        let c4: Vec<Vec<usize>> = (0..4).map(|i| vec![(i + 1) % 4, (i + 3) % 4]).collect();
        let emb = PlaneEmbedding::from_neighbor_rotations(&c4, OuterFace::Id(0)).unwrap();
        let q = validate_quadrangulation_with(emb, Trust::Trusted).unwrap();
        assert!(matches!(build_optimal(q.clone()), Err(Error::DuplicateDiagonal { .. })));
        let g = build_optimal_with(q, BuildOptions { allow_parallel_diagonals: true }).unwrap();
        assert_eq!(g.num_crossing_pairs(), 2);
    }

    #[test]
    fn foreign_edges_are_reported() {
        let g = build_optimal(cube()).unwrap();
        assert!(g.endpoints(EdgeRef::Quad(12)).is_err());
        assert!(g.endpoints(EdgeRef::Diagonal(6, Diag::White)).is_err());
        assert!(g.endpoints(EdgeRef::Diagonal(5, Diag::White)).is_ok());
    }
}
