//! Rotation-system representation of connected plane graphs.
//!
//! A [`PlaneEmbedding`] stores, for every vertex, the counterclockwise cyclic
//! order of its incident edges. Faces are derived by the usual face-tracing
//! walk: leaving a vertex `v` along a dart `u -> v`, the walk continues with
//! the edge that precedes `u` in the rotation of `v`. With counterclockwise
//! rotations this keeps the traced face on the left of every dart.
//!
//! Every edge `e = (a, b)` owns two darts: `2e` runs `a -> b` and `2e + 1`
//! runs `b -> a`. Face identifiers are assigned in order of the smallest dart
//! on their boundary, so they depend only on the rotation system.

use std::fmt;

use crate::error::{Error, Result};

pub type VertexId = usize;
pub type EdgeId = usize;
pub type FaceId = usize;

/// A directed side of an edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dart(pub usize);

impl Dart {
    pub fn new(edge: EdgeId, forward: bool) -> Self {
        Dart(2 * edge + usize::from(!forward))
    }

    pub fn edge(self) -> EdgeId {
        self.0 / 2
    }

    pub fn is_forward(self) -> bool {
        self.0 & 1 == 0
    }

    pub fn reverse(self) -> Self {
        Dart(self.0 ^ 1)
    }
}

/// Variable-length rows stored back to back.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Csr<T> {
    start: Vec<usize>,
    items: Vec<T>,
}

impl<T: Copy> Csr<T> {
    fn with_capacity(rows: usize, items: usize) -> Self {
        let mut start = Vec::with_capacity(rows + 1);
        start.push(0);
        Csr {
            start,
            items: Vec::with_capacity(items),
        }
    }

    fn from_nested(rows: &[Vec<T>]) -> Self {
        let mut c = Csr::with_capacity(rows.len(), rows.iter().map(Vec::len).sum());
        for r in rows {
            c.items.extend_from_slice(r);
            c.close_row();
        }
        c
    }

    fn close_row(&mut self) {
        self.start.push(self.items.len());
    }

    fn len(&self) -> usize {
        self.start.len() - 1
    }

    fn get(&self, i: usize) -> Option<&[T]> {
        (i < self.len()).then(|| &self[i])
    }

    fn iter(&self) -> impl Iterator<Item = &[T]> + '_ {
        (0..self.len()).map(move |i| &self[i])
    }
}

impl<T> std::ops::Index<usize> for Csr<T> {
    type Output = [T];

    fn index(&self, i: usize) -> &[T] {
        &self.items[self.start[i]..self.start[i + 1]]
    }
}

/// How the caller designates the unbounded face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OuterFace {
    Id(FaceId),
    /// The face whose vertex walk equals this list up to cyclic shift.
    Walk(Vec<VertexId>),
    /// The face to the left of the dart `u -> v`.
    LeftOf(VertexId, VertexId),
}

#[derive(Debug, Clone)]
struct Traced {
    rot_index: Vec<usize>,
    faces: Csr<Dart>,
    dart_face: Vec<FaceId>,
}

/// A connected, simple plane graph given by its rotation system.
#[derive(Clone)]
pub struct PlaneEmbedding {
    n: usize,
    edges: Vec<[VertexId; 2]>,
    rotation: Csr<EdgeId>,
    // per dart: position of the dart's edge inside the rotation of its tail
    rot_index: Vec<usize>,
    faces: Csr<Dart>,
    dart_face: Vec<FaceId>,
    outer: FaceId,
}

impl fmt::Debug for PlaneEmbedding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PlaneEmbedding")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .field("rotation", &self.rotation.iter().collect::<Vec<_>>())
            .field("outer", &self.outer)
            .finish()
    }
}

impl PartialEq for PlaneEmbedding {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n
            && self.edges == other.edges
            && self.rotation == other.rotation
            && self.outer == other.outer
    }
}

impl Eq for PlaneEmbedding {}

fn index_rotation(n: usize, edges: &[[VertexId; 2]], rotation: &Csr<EdgeId>) -> Result<Vec<usize>> {
    if rotation.len() != n {
        return Err(Error::MalformedRotation(format!(
            "{} rotations given for {} vertices",
            rotation.len(),
            n
        )));
    }
    const UNSET: usize = usize::MAX;
    let mut rot_index = vec![UNSET; 2 * edges.len()];
    for (e, &[a, b]) in edges.iter().enumerate() {
        if a >= n || b >= n {
            return Err(Error::MalformedRotation(format!("edge {e} has an endpoint out of range")));
        }
        if a == b {
            return Err(Error::NotSimple(format!("edge {e} is a loop at vertex {a}")));
        }
    }
    for (v, rot) in rotation.iter().enumerate() {
        for (i, &e) in rot.iter().enumerate() {
            let Some(&[a, b]) = edges.get(e) else {
                return Err(Error::MalformedRotation(format!("vertex {v} lists unknown edge {e}")));
            };
            let d = if a == v {
                Dart::new(e, true)
            } else if b == v {
                Dart::new(e, false)
            } else {
                return Err(Error::MalformedRotation(format!(
                    "vertex {v} lists edge {e} which is not incident to it"
                )));
            };
            if rot_index[d.0] != UNSET {
                return Err(Error::MalformedRotation(format!("vertex {v} lists edge {e} twice")));
            }
            rot_index[d.0] = i;
        }
    }
    if let Some(d) = rot_index.iter().position(|&i| i == UNSET) {
        let e = d / 2;
        let v = edges[e][d % 2];
        return Err(Error::MalformedRotation(format!("edge {e} is missing from the rotation of vertex {v}")));
    }
    Ok(rot_index)
}

fn tail_of(edges: &[[VertexId; 2]], d: Dart) -> VertexId {
    edges[d.edge()][usize::from(!d.is_forward())]
}

fn head_of(edges: &[[VertexId; 2]], d: Dart) -> VertexId {
    edges[d.edge()][usize::from(d.is_forward())]
}

fn dart_from(edges: &[[VertexId; 2]], e: EdgeId, from: VertexId) -> Dart {
    Dart::new(e, edges[e][0] == from)
}

fn next_dart(edges: &[[VertexId; 2]], rotation: &Csr<EdgeId>, rot_index: &[usize], d: Dart) -> Dart {
    let v = head_of(edges, d);
    let rot = &rotation[v];
    let i = rot_index[d.reverse().0];
    let j = if i == 0 { rot.len() - 1 } else { i - 1 };
    dart_from(edges, rot[j], v)
}

fn trace(n: usize, edges: &[[VertexId; 2]], rotation: &Csr<EdgeId>) -> Result<Traced> {
    let rot_index = index_rotation(n, edges, rotation)?;
    if edges.is_empty() {
        return Err(Error::MalformedRotation("graph has no edges".into()));
    }

    // connectivity
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    let mut reached = 1;
    while let Some(v) = stack.pop() {
        for &e in &rotation[v] {
            let [a, b] = edges[e];
            let w = if a == v { b } else { a };
            if !seen[w] {
                seen[w] = true;
                reached += 1;
                stack.push(w);
            }
        }
    }
    if reached != n {
        return Err(Error::Disconnected);
    }

    const UNSET: usize = usize::MAX;
    let mut dart_face = vec![UNSET; 2 * edges.len()];
    let mut faces = Csr::with_capacity(edges.len(), 2 * edges.len());
    for start in 0..2 * edges.len() {
        if dart_face[start] != UNSET {
            continue;
        }
        let id = faces.len();
        let mut d = Dart(start);
        while dart_face[d.0] == UNSET {
            dart_face[d.0] = id;
            faces.items.push(d);
            d = next_dart(edges, rotation, &rot_index, d);
        }
        if d.0 != start {
            return Err(Error::MalformedRotation("face walk does not close".into()));
        }
        faces.close_row();
    }

    let euler = n as i64 - edges.len() as i64 + faces.len() as i64;
    if euler != 2 {
        return Err(Error::NonPlanarRotation { euler });
    }
    Ok(Traced {
        rot_index,
        faces,
        dart_face,
    })
}

/// Traces the faces of a rotation system.
///
/// Fails with [`Error::MalformedRotation`] when an edge is missing from (or
/// repeated in) a rotation and with [`Error::NonPlanarRotation`] when the
/// traced faces violate Euler's relation.
pub fn trace_faces(n: usize, edges: &[[VertexId; 2]], rotation: &[Vec<EdgeId>]) -> Result<Vec<Vec<Dart>>> {
    trace(n, edges, &Csr::from_nested(rotation)).map(|t| t.faces.iter().map(<[Dart]>::to_vec).collect())
}

fn check_simple(n: usize, edges: &[[VertexId; 2]]) -> Result<()> {
    if let Some((a, b)) = crate::pairs::first_repeat(n, edges) {
        let [u, v] = edges[a];
        return Err(Error::NotSimple(format!("edges {a} and {b} both join {} and {}", u.min(v), u.max(v))));
    }
    Ok(())
}

impl PlaneEmbedding {
    pub fn new(
        n: usize,
        edges: Vec<[VertexId; 2]>,
        rotation: Vec<Vec<EdgeId>>,
        outer: OuterFace,
    ) -> Result<Self> {
        Self::from_csr(n, edges, Csr::from_nested(&rotation), outer)
    }

    fn from_csr(n: usize, edges: Vec<[VertexId; 2]>, rotation: Csr<EdgeId>, outer: OuterFace) -> Result<Self> {
        let traced = trace(n, &edges, &rotation)?;
        check_simple(n, &edges)?;
        let mut emb = PlaneEmbedding {
            n,
            edges,
            rotation,
            rot_index: traced.rot_index,
            faces: traced.faces,
            dart_face: traced.dart_face,
            outer: 0,
        };
        emb.outer = emb.resolve_outer(&outer)?;
        Ok(emb)
    }

    /// Builds an embedding from counterclockwise neighbor lists.
    ///
    /// Edge identifiers are assigned in ascending `(min, max)` endpoint order.
    pub fn from_neighbor_rotations(rotations: &[Vec<VertexId>], outer: OuterFace) -> Result<Self> {
        let n = rotations.len();
        let mut pairs: Vec<[VertexId; 2]> = Vec::new();
        for (v, rot) in rotations.iter().enumerate() {
            for &w in rot {
                if w >= n {
                    return Err(Error::MalformedRotation(format!("vertex {v} lists unknown neighbor {w}")));
                }
                if w == v {
                    return Err(Error::NotSimple(format!("loop at vertex {v}")));
                }
                if v < w {
                    pairs.push([v, w]);
                }
            }
        }
        let pairs = crate::pairs::sort_pairs(n, &pairs);
        if let Some(w) = pairs.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::NotSimple(format!("parallel edges between {} and {}", w[0][0], w[0][1])));
        }
        let queries: Vec<[VertexId; 2]> = rotations
            .iter()
            .enumerate()
            .flat_map(|(v, rot)| rot.iter().map(move |&w| [v, w]))
            .collect();
        let ids = crate::pairs::match_pairs(n, &pairs, &queries);
        let mut rotation = Csr::with_capacity(n, queries.len());
        let mut k = 0;
        for rot in rotations {
            for _ in rot {
                let Some(id) = ids[k] else {
                    let [a, b] = queries[k];
                    return Err(Error::MalformedRotation(format!(
                        "{} lists {} but not the other way round",
                        a.max(b),
                        a.min(b)
                    )));
                };
                rotation.items.push(id);
                k += 1;
            }
            rotation.close_row();
        }
        PlaneEmbedding::from_csr(n, pairs, rotation, outer)
    }

    fn resolve_outer(&self, outer: &OuterFace) -> Result<FaceId> {
        match outer {
            OuterFace::Id(f) if *f < self.faces.len() => Ok(*f),
            OuterFace::Id(f) => Err(Error::OuterFaceNotFound(format!("no face with id {f}"))),
            OuterFace::LeftOf(u, v) => self
                .rotation
                .get(*u)
                .into_iter()
                .flatten()
                .map(|&e| dart_from(&self.edges, e, *u))
                .find(|&d| self.head(d) == *v)
                .map(|d| self.dart_face[d.0])
                .ok_or_else(|| Error::OuterFaceNotFound(format!("no edge {u} -> {v}"))),
            OuterFace::Walk(walk) => (0..self.faces.len())
                .find(|&f| is_cyclic_shift(&self.face_vertices(f), walk))
                .ok_or_else(|| Error::OuterFaceNotFound(format!("no face with walk {walk:?}"))),
        }
    }

    /// Returns the same embedding with a different outer face.
    pub fn with_outer_face(mut self, outer: OuterFace) -> Result<Self> {
        self.outer = self.resolve_outer(&outer)?;
        Ok(self)
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    pub fn edges(&self) -> &[[VertexId; 2]] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> [VertexId; 2] {
        self.edges[e]
    }

    /// Counterclockwise incident edges of `v`.
    pub fn rotation(&self, v: VertexId) -> &[EdgeId] {
        &self.rotation[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.rotation[v].len()
    }

    pub fn other_end(&self, e: EdgeId, v: VertexId) -> VertexId {
        let [a, b] = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    /// Counterclockwise neighbors of `v`.
    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.rotation[v].iter().map(move |&e| self.other_end(e, v))
    }

    pub fn neighbor_rotations(&self) -> Vec<Vec<VertexId>> {
        (0..self.n).map(|v| self.neighbors(v).collect()).collect()
    }

    /// Dart walks of all faces, in face id order.
    pub fn faces(&self) -> impl ExactSizeIterator<Item = &[Dart]> + '_ {
        (0..self.faces.len()).map(move |f| &self.faces[f])
    }

    /// Closed walk of darts bounding `f`, face on the left.
    pub fn face(&self, f: FaceId) -> &[Dart] {
        &self.faces[f]
    }

    pub fn outer_face(&self) -> FaceId {
        self.outer
    }

    pub fn tail(&self, d: Dart) -> VertexId {
        tail_of(&self.edges, d)
    }

    pub fn head(&self, d: Dart) -> VertexId {
        head_of(&self.edges, d)
    }

    /// The dart along `e` leaving `from`.
    pub fn dart(&self, e: EdgeId, from: VertexId) -> Dart {
        dart_from(&self.edges, e, from)
    }

    pub fn next_in_face(&self, d: Dart) -> Dart {
        next_dart(&self.edges, &self.rotation, &self.rot_index, d)
    }

    /// The face on the left of `d`.
    pub fn dart_face(&self, d: Dart) -> FaceId {
        self.dart_face[d.0]
    }

    /// The face in the wedge that follows the `i`-th rotation entry of `v`
    /// counterclockwise.
    pub fn wedge_face(&self, v: VertexId, i: usize) -> FaceId {
        self.dart_face(self.dart(self.rotation[v][i], v))
    }

    /// Vertex walk of a face, starting at the tail of its smallest dart.
    pub fn face_vertices(&self, f: FaceId) -> Vec<VertexId> {
        self.faces[f].iter().map(|&d| self.tail(d)).collect()
    }

    /// Vertex walk of the outer face.
    pub fn outer_walk(&self) -> Vec<VertexId> {
        self.face_vertices(self.outer)
    }
}

fn is_cyclic_shift(a: &[VertexId], b: &[VertexId]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    if a.is_empty() {
        return true;
    }
    (0..a.len()).any(|s| (0..a.len()).all(|i| a[(s + i) % a.len()] == b[i]))
}

/// Tests whether the graph has no vertex cut of size at most two.
///
/// A connected simple plane graph with at least four vertices is 3-connected
/// exactly when every face is bounded by a simple cycle and any two distinct
/// faces meet in nothing, a single vertex, or a single common edge. The check
/// runs in time linear in the sum of squared face lengths, which is linear for
/// graphs whose faces have bounded length.
pub fn check_3_connected(emb: &PlaneEmbedding) -> bool {
    use std::collections::HashMap;

    let n = emb.num_vertices();
    if n < 4 {
        return false;
    }
    let mut owner: HashMap<(VertexId, VertexId), FaceId> = HashMap::new();
    for f in 0..emb.num_faces() {
        let walk = emb.face_vertices(f);
        let k = walk.len();
        let mut sorted = walk.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return false;
        }
        for i in 0..k {
            for j in i + 1..k {
                let (a, b) = (walk[i].min(walk[j]), walk[i].max(walk[j]));
                let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                if let Some(&g) = owner.get(&(a, b)) {
                    // the only allowed repeat is an edge seen from its other side
                    if !consecutive || !face_has_edge(emb, g, a, b) {
                        return false;
                    }
                } else {
                    owner.insert((a, b), f);
                }
            }
        }
    }
    true
}

fn face_has_edge(emb: &PlaneEmbedding, f: FaceId, a: VertexId, b: VertexId) -> bool {
    emb.face(f).iter().any(|&d| {
        let (x, y) = (emb.tail(d), emb.head(d));
        (x == a && y == b) || (x == b && y == a)
    })
}
