//! Red/blue partitions of an optimal 1-plane graph.

use std::collections::HashMap;

use crate::embedding::{FaceId, VertexId};
use crate::error::{Error, Result};
use crate::optimal::{Diag, EdgeRef, OptimalOnePlaneGraph};

/// One chosen diagonal per face, indexed by face id.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Selection(pub Vec<Diag>);

impl Selection {
    pub fn get(&self, f: FaceId) -> Diag {
        self.0[f]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Selection number `bits` in enumeration order: face 0 is the most
    /// significant bit and a set bit picks the white diagonal.
    pub fn from_bits(faces: usize, bits: u64) -> Selection {
        Selection(
            (0..faces)
                .map(|f| {
                    if bits >> (faces - 1 - f) & 1 == 1 {
                        Diag::White
                    } else {
                        Diag::Black
                    }
                })
                .collect(),
        )
    }

    /// Red degree of every vertex.
    pub fn degrees(&self, g: &OptimalOnePlaneGraph) -> Vec<usize> {
        let mut deg = vec![0; g.num_vertices()];
        for (f, &d) in self.0.iter().enumerate() {
            for v in g.diagonal(f, d) {
                deg[v] += 1;
            }
        }
        deg
    }
}

/// A red edge set; every other edge of the graph is blue.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RedBlueColoring {
    red: Vec<EdgeRef>,
    max_red_degree: usize,
}

impl RedBlueColoring {
    /// Red edges are the selected diagonals, in face order.
    pub fn from_selection(g: &OptimalOnePlaneGraph, s: &Selection) -> Self {
        let max_red_degree = s.degrees(g).into_iter().max().unwrap_or(0);
        RedBlueColoring {
            red: s.0.iter().enumerate().map(|(f, &d)| EdgeRef::Diagonal(f, d)).collect(),
            max_red_degree,
        }
    }

    /// Any set of red edges. Fails if one is not an edge of `g`.
    pub fn from_red(g: &OptimalOnePlaneGraph, red: Vec<EdgeRef>) -> Result<Self> {
        let mut deg = vec![0usize; g.num_vertices()];
        for &e in &red {
            for v in g.endpoints(e)? {
                deg[v] += 1;
            }
        }
        Ok(RedBlueColoring {
            red,
            max_red_degree: deg.into_iter().max().unwrap_or(0),
        })
    }

    /// Red edges given by vertex pairs, each of which must be a diagonal.
    pub fn from_red_pairs(g: &OptimalOnePlaneGraph, pairs: &[(VertexId, VertexId)]) -> Result<Self> {
        let mut index: HashMap<(VertexId, VertexId), EdgeRef> = HashMap::with_capacity(2 * g.num_faces());
        for f in 0..g.num_faces() {
            for d in [Diag::Black, Diag::White] {
                let [a, b] = g.diagonal(f, d);
                index.insert((a.min(b), a.max(b)), EdgeRef::Diagonal(f, d));
            }
        }
        let red = pairs
            .iter()
            .map(|&(a, b)| {
                index
                    .get(&(a.min(b), a.max(b)))
                    .copied()
                    .ok_or_else(|| Error::ForeignEdge(format!("({a}, {b}) is not a diagonal")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_red(g, red)
    }

    pub fn red(&self) -> &[EdgeRef] {
        &self.red
    }

    pub fn max_red_degree(&self) -> usize {
        self.max_red_degree
    }

    /// Every edge of `g` that is not red.
    pub fn blue(&self, g: &OptimalOnePlaneGraph) -> Vec<EdgeRef> {
        let mut red = self.red.clone();
        red.sort_unstable();
        g.edge_refs().filter(|e| red.binary_search(e).is_err()).collect()
    }

    /// The per-face selection, if the red set is exactly one diagonal of
    /// every face and nothing else.
    pub fn selection(&self, g: &OptimalOnePlaneGraph) -> Option<Selection> {
        let mut pick: Vec<Option<Diag>> = vec![None; g.num_faces()];
        for &e in &self.red {
            match e {
                EdgeRef::Diagonal(f, d) if f < pick.len() && pick[f].is_none() => pick[f] = Some(d),
                _ => return None,
            }
        }
        pick.into_iter().collect::<Option<Vec<_>>>().map(Selection)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{example_red_paths, gen_example};

    #[test]
    fn bits_put_face_zero_first() {
        let s = Selection::from_bits(3, 0b100);
        assert_eq!(s.0, vec![Diag::White, Diag::Black, Diag::Black]);
    }

    #[test]
    fn example_paths_are_one_diagonal_per_face() {
        let g = gen_example();
        let pairs: Vec<(usize, usize)> = example_red_paths()
            .iter()
            .flat_map(|p| p.windows(2).map(|w| (w[0], w[1])).collect::<Vec<_>>())
            .collect();
        let c = RedBlueColoring::from_red_pairs(&g, &pairs).unwrap();
        assert_eq!(c.red().len(), 10);
        assert_eq!(c.max_red_degree(), 2);
        assert!(c.selection(&g).is_some());
        assert_eq!(c.blue(&g).len(), 30);
    }

    #[test]
    fn quad_edge_is_not_a_diagonal() {
        let g = gen_example();
        let [a, b] = g.embedding().edge(0);
        assert!(matches!(RedBlueColoring::from_red_pairs(&g, &[(a, b)]), Err(Error::ForeignEdge(_))));
    }
}
