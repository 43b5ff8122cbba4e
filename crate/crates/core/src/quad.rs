//! Validated 3-connected plane quadrangulations.

use crate::embedding::{FaceId, PlaneEmbedding, VertexId};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Black,
    White,
}

impl Color {
    pub fn other(self) -> Color {
        match self {
            Color::Black => Color::White,
            Color::White => Color::Black,
        }
    }
}

/// Whether [`validate_quadrangulation`] checks 3-connectivity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Trust {
    #[default]
    Verify,
    /// Skip the 3-connectivity check. The caller vouches for the input.
    Trusted,
}

/// A 3-connected plane quadrangulation with its black/white bipartition.
///
/// Vertex 0 is always black.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quadrangulation {
    emb: PlaneEmbedding,
    color: Vec<Color>,
    corners: Vec<[VertexId; 4]>,
}

impl Quadrangulation {
    pub fn embedding(&self) -> &PlaneEmbedding {
        &self.emb
    }

    pub fn num_vertices(&self) -> usize {
        self.emb.num_vertices()
    }

    pub fn num_faces(&self) -> usize {
        self.emb.num_faces()
    }

    pub fn color(&self, v: VertexId) -> Color {
        self.color[v]
    }

    pub fn colors(&self) -> &[Color] {
        &self.color
    }

    /// Corners of face `f` in walk order.
    pub fn corners(&self, f: FaceId) -> [VertexId; 4] {
        self.corners[f]
    }

    pub fn outer_face(&self) -> FaceId {
        self.emb.outer_face()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.num_vertices()).map(|v| self.emb.degree(v)).max().unwrap_or(0)
    }

    /// Black corners `(x, y)` and white corners of face `f`, each pair in walk order.
    pub fn opposite_pairs(&self, f: FaceId) -> ([VertexId; 2], [VertexId; 2]) {
        let c = self.corners[f];
        if self.color[c[0]] == Color::Black {
            ([c[0], c[2]], [c[1], c[3]])
        } else {
            ([c[1], c[3]], [c[0], c[2]])
        }
    }
}

/// Checks that `emb` is a 3-connected quadrangulation and two-colors it.
pub fn validate_quadrangulation(emb: PlaneEmbedding) -> Result<Quadrangulation> {
    validate_quadrangulation_with(emb, Trust::Verify)
}

pub fn validate_quadrangulation_with(emb: PlaneEmbedding, trust: Trust) -> Result<Quadrangulation> {
    let n = emb.num_vertices();
    let mut corners = Vec::with_capacity(emb.num_faces());
    for f in 0..emb.num_faces() {
        let walk = emb.face_vertices(f);
        let distinct = walk.len() == 4
            && (0..4).all(|i| (i + 1..4).all(|j| walk[i] != walk[j]));
        if !distinct {
            return Err(Error::NonQuadFace {
                face: f,
                len: walk.len(),
            });
        }
        corners.push([walk[0], walk[1], walk[2], walk[3]]);
    }
    // with all faces of length 4, Euler gives E = 2V - 4 and F = V - 2
    debug_assert_eq!(emb.num_edges() + 4, 2 * n);

    let mut color: Vec<Option<Color>> = vec![None; n];
    color[0] = Some(Color::Black);
    let mut stack = vec![0];
    while let Some(v) = stack.pop() {
        let c = color[v].expect("colored before push");
        for &e in emb.rotation(v) {
            let w = emb.other_end(e, v);
            match color[w] {
                None => {
                    color[w] = Some(c.other());
                    stack.push(w);
                }
                Some(cw) if cw == c => return Err(Error::NotBipartite(e)),
                Some(_) => {}
            }
        }
    }
    let color: Vec<Color> = color.into_iter().map(|c| c.expect("graph is connected")).collect();

    if trust == Trust::Verify && !quad_is_3_connected(&corners) {
        return Err(Error::Not3Connected);
    }
    Ok(Quadrangulation { emb, color, corners })
}

/// For quadrangulations, a 2-cut exists exactly when two faces share the
/// same pair of opposite corners.
pub(crate) fn quad_is_3_connected(corners: &[[VertexId; 4]]) -> bool {
    first_repeated_opposite_pair(corners).is_none()
}

pub(crate) fn first_repeated_opposite_pair(
    corners: &[[VertexId; 4]],
) -> Option<(FaceId, FaceId, VertexId, VertexId)> {
    let pairs: Vec<[VertexId; 2]> = corners.iter().flat_map(|c| [[c[0], c[2]], [c[1], c[3]]]).collect();
    let n = pairs.iter().flatten().max().map_or(0, |&v| v + 1);
    crate::pairs::first_repeat(n, &pairs).map(|(a, b)| {
        let [u, v] = pairs[a];
        (a / 2, b / 2, u.min(v), u.max(v))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::{check_3_connected, OuterFace};

    fn cube() -> PlaneEmbedding {
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
        PlaneEmbedding::from_neighbor_rotations(&rot, OuterFace::LeftOf(1, 0)).unwrap()
    }

    #[test]
    fn cube_is_accepted_with_four_of_each_color() {
        let q = validate_quadrangulation(cube()).unwrap();
        let black = q.colors().iter().filter(|&&c| c == Color::Black).count();
        assert_eq!(black, 4);
        assert_eq!(q.num_faces(), 6);
        assert_eq!(q.color(0), Color::Black);
    }

    #[test]
    fn k4_has_triangular_faces() {
        let k4 = vec![vec![1, 2, 3], vec![0, 3, 2], vec![0, 1, 3], vec![0, 2, 1]];
        let k4 = PlaneEmbedding::from_neighbor_rotations(&k4, OuterFace::Id(0)).unwrap();
        assert!(matches!(validate_quadrangulation(k4), Err(Error::NonQuadFace { len: 3, .. })));
    }

    #[test]
    fn four_cycle_is_a_quadrangulation_but_not_3_connected() {
        let c4: Vec<Vec<usize>> = (0..4).map(|i| vec![(i + 1) % 4, (i + 3) % 4]).collect();
        let c4 = PlaneEmbedding::from_neighbor_rotations(&c4, OuterFace::Id(0)).unwrap();
        assert!(!check_3_connected(&c4));
        assert_eq!(validate_quadrangulation(c4.clone()).unwrap_err(), Error::Not3Connected);
        assert!(validate_quadrangulation_with(c4, Trust::Trusted).is_ok());
    }

    #[test]
    fn every_edge_is_bichromatic() {
        // plane graphs whose faces are all even are bipartite, so NotBipartite
        // only fires on inputs that already failed the face check
        let q = validate_quadrangulation(cube()).unwrap();
        for &[a, b] in q.embedding().edges() {
            assert_ne!(q.color(a), q.color(b));
        }
    }
}
