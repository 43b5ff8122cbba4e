//! Instance families.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::embedding::{OuterFace, PlaneEmbedding, VertexId};
use crate::error::{Error, Result};
use crate::io::o1p::parse_o1p;
use crate::optimal::{build_optimal, OptimalOnePlaneGraph};
use crate::quad::{validate_quadrangulation, Quadrangulation};

/// The quadrangulation whose black vertices are the vertices of `map` and
/// whose white vertices are the faces of `map` (white vertex `n + f` for
/// face `f`), each joined to the corners of its face. The outer face is the
/// one that contains the map edge `outer_edge`.
pub fn angle_quadrangulation(map: &PlaneEmbedding, outer_edge: (VertexId, VertexId)) -> Result<Quadrangulation> {
    let n = map.num_vertices();
    let mut rot: Vec<Vec<VertexId>> = Vec::with_capacity(n + map.num_faces());
    for v in 0..n {
        rot.push(
            map.rotation(v)
                .iter()
                .map(|&e| n + map.dart_face(map.dart(e, v)))
                .collect(),
        );
    }
    for f in 0..map.num_faces() {
        rot.push(map.face_vertices(f));
    }
    let (x, y) = outer_edge;
    let e = map
        .rotation(y)
        .iter()
        .copied()
        .find(|&e| map.other_end(e, y) == x)
        .ok_or_else(|| Error::InvalidParameter(format!("{x} and {y} are not adjacent")))?;
    let right = n + map.dart_face(map.dart(e, y));
    let emb = PlaneEmbedding::from_neighbor_rotations(&rot, OuterFace::LeftOf(x, right))?;
    validate_quadrangulation(emb)
}

/// Counterclockwise neighbor lists of a straight-line drawing.
fn rotations_from_coords(pos: &[(f64, f64)], adj: &[Vec<VertexId>]) -> Vec<Vec<VertexId>> {
    adj.iter()
        .enumerate()
        .map(|(v, nb)| {
            let (x0, y0) = pos[v];
            let mut nb = nb.clone();
            nb.sort_by(|&a, &b| {
                let ta = (pos[a].1 - y0).atan2(pos[a].0 - x0);
                let tb = (pos[b].1 - y0).atan2(pos[b].0 - x0);
                ta.total_cmp(&tb)
            });
            nb
        })
        .collect()
}

fn adjacency(n: usize, edges: &[(VertexId, VertexId)]) -> Vec<Vec<VertexId>> {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    adj
}

/// Pole vertices of [`gen_two_pole`].
pub const POLE_S: VertexId = 0;
pub const POLE_T: VertexId = 1;

/// The black map of the two-pole family: poles `s = 0` and `t = 1`, plus
/// `k` disjoint edges `(2 + 2i, 3 + 2i)` whose ends are all joined to both
/// poles, plus the edge `s t`.
pub fn two_pole_map(k: usize) -> Result<PlaneEmbedding> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    let n = 2 * k + 2;
    let mut pos = vec![(0.0, 10.0), (0.0, -10.0)];
    let mut edges = vec![(POLE_S, POLE_T)];
    for i in 0..k {
        let (u, v) = (2 + 2 * i, 3 + 2 * i);
        pos.push((3.0 * i as f64 + 1.0, 0.0));
        pos.push((3.0 * i as f64 + 2.0, 0.0));
        edges.extend([(u, v), (POLE_S, u), (POLE_S, v), (POLE_T, u), (POLE_T, v)]);
    }
    let rot = rotations_from_coords(&pos, &adjacency(n, &edges));
    PlaneEmbedding::from_neighbor_rotations(&rot, OuterFace::LeftOf(POLE_S, POLE_T))
}

/// The two-pole family on `5k + 3` vertices. Its black diagonals are
/// exactly the edges of [`two_pole_map`]`(k)`, so every forest coloring
/// gives one of the poles red degree at least `k / 2`.
pub fn gen_two_pole(k: usize) -> Result<OptimalOnePlaneGraph> {
    let map = two_pole_map(k)?;
    build_optimal(angle_quadrangulation(&map, (POLE_S, POLE_T))?)
}

/// A grid-family instance together with the vertex roles needed by the
/// degree-bound certificate.
#[derive(Debug, Clone)]
pub struct GridInstance {
    pub h: usize,
    pub graph: OptimalOnePlaneGraph,
    /// Grid vertex `(r, c)` at index `r * h + c`.
    pub grid_vertices: Vec<VertexId>,
    /// The four inner vertices of each grid cell, in cycle order.
    pub gray_cycles: Vec<[VertexId; 4]>,
}

/// An `h x h` grid with a 4-cycle inside every cell, each cycle vertex
/// joined to its own corner of the cell. The outer boundary is closed up by
/// chords that each cut off a 4-face, spiralling clockwise from the top-left
/// corner.
pub fn gen_grid_worstcase(h: usize) -> Result<GridInstance> {
    if h < 3 {
        return Err(Error::InvalidParameter("h must be at least 3".into()));
    }
    let cells = (h - 1) * (h - 1);
    let n = h * h + 4 * cells;
    let grid = |r: usize, c: usize| r * h + c;
    let mut pos = vec![(0.0, 0.0); n];
    let mut edges = Vec::new();
    for r in 0..h {
        for c in 0..h {
            pos[grid(r, c)] = (c as f64, -(r as f64));
            if c + 1 < h {
                edges.push((grid(r, c), grid(r, c + 1)));
            }
            if r + 1 < h {
                edges.push((grid(r, c), grid(r + 1, c)));
            }
        }
    }
    let mut gray_cycles = Vec::with_capacity(cells);
    for r in 0..h - 1 {
        for c in 0..h - 1 {
            let base = h * h + 4 * (r * (h - 1) + c);
            let corners = [grid(r, c), grid(r, c + 1), grid(r + 1, c + 1), grid(r + 1, c)];
            let offs = [(0.3, -0.3), (0.7, -0.3), (0.7, -0.7), (0.3, -0.7)];
            let g = [base, base + 1, base + 2, base + 3];
            for i in 0..4 {
                pos[g[i]] = (c as f64 + offs[i].0, -(r as f64) + offs[i].1);
                edges.push((g[i], g[(i + 1) % 4]));
                edges.push((g[i], corners[i]));
            }
            gray_cycles.push(g);
        }
    }
    let mut rot = rotations_from_coords(&pos, &adjacency(n, &edges));

    // outer walk with the unbounded face on the left
    let mut boundary: Vec<VertexId> = Vec::with_capacity(4 * h - 4);
    boundary.extend((0..h - 1).map(|c| grid(0, c)));
    boundary.extend((0..h - 1).map(|r| grid(r, h - 1)));
    boundary.extend((1..h).rev().map(|c| grid(h - 1, c)));
    boundary.extend((1..h).rev().map(|r| grid(r, 0)));

    let insert_after = |list: &mut Vec<VertexId>, after: VertexId, x: VertexId| {
        let i = list.iter().position(|&y| y == after).expect("boundary neighbor");
        list.insert(i + 1, x);
    };
    let mut p = 0;
    while boundary.len() > 4 {
        let len = boundary.len();
        let at = |i: usize| boundary[(p + i) % len];
        let (x, y) = (at(0), at(3));
        if rot[x].contains(&y) {
            return Err(Error::GenerationFailed(format!("closure chord {x}-{y} already present")));
        }
        insert_after(&mut rot[x], at(1), y);
        insert_after(&mut rot[y], at(4), x);
        // drop the two cut-off vertices, keeping the walk order
        let (i1, i2) = ((p + 1) % len, (p + 2) % len);
        let (hi, lo) = (i1.max(i2), i1.min(i2));
        boundary.remove(hi);
        boundary.remove(lo);
        p = boundary.iter().position(|&v| v == y).expect("chord end stays on boundary");
    }

    let emb = PlaneEmbedding::from_neighbor_rotations(&rot, OuterFace::Walk(boundary))?;
    let graph = build_optimal(validate_quadrangulation(emb)?)?;
    Ok(GridInstance {
        h,
        graph,
        grid_vertices: (0..h * h).collect(),
        gray_cycles,
    })
}

const EXAMPLE: &str = include_str!("../data/example.o1p");

/// The 12-vertex running example. Vertices are numbered in the spine order
/// of its reference book embedding.
pub fn gen_example() -> OptimalOnePlaneGraph {
    let raw = parse_o1p(EXAMPLE).expect("shipped example parses");
    let quad = validate_quadrangulation(raw.embedding).expect("shipped example is a quadrangulation");
    build_optimal(quad).expect("shipped example is simple")
}

/// Spine order of the reference book embedding of [`gen_example`].
pub fn example_spine() -> Vec<VertexId> {
    (0..12).collect()
}

/// Two vertex-disjoint paths through all twelve example vertices; taking
/// their edges as the red diagonals gives a forest coloring.
pub fn example_red_paths() -> [Vec<VertexId>; 2] {
    [vec![10, 1, 3, 5, 8, 6], vec![7, 4, 2, 0, 9, 11]]
}

/// A pseudo-double wheel: a `2k`-cycle, one hub joined to its even
/// vertices and another to its odd ones. For `k = 3` this is the cube.
fn double_wheel(k: usize) -> Vec<Vec<VertexId>> {
    let m = 2 * k;
    let (north, south) = (m, m + 1);
    let mut rot: Vec<Vec<VertexId>> = (0..m)
        .map(|i| {
            let (next, prev) = ((i + 1) % m, (i + m - 1) % m);
            if i % 2 == 0 {
                vec![next, north, prev]
            } else {
                vec![south, next, prev]
            }
        })
        .collect();
    rot.push((0..m).step_by(2).collect());
    rot.push((1..m).step_by(2).rev().collect());
    rot
}

/// True when `a` and `b` are opposite corners of some face not at `skip`.
fn opposite_elsewhere(rot: &[Vec<VertexId>], a: VertexId, b: VertexId, skip: VertexId) -> bool {
    rot[a].iter().any(|&y| {
        if y == skip {
            return false;
        }
        let r = &rot[y];
        let p = r.iter().position(|&x| x == a).expect("symmetric adjacency");
        let d = r.len();
        r[(p + 1) % d] == b || r[(p + d - 1) % d] == b
    })
}

/// Splits `v` along its neighbors `a = rot[v][i]` and `b = rot[v][j]`: a new
/// vertex takes the neighbors strictly between `a` and `b` counterclockwise,
/// and both copies stay adjacent to `a` and `b`.
fn split_vertex(rot: &mut Vec<Vec<VertexId>>, v: VertexId, i: usize, j: usize) {
    let r = rot[v].clone();
    let d = r.len();
    let (a, b) = (r[i], r[j]);
    let w = rot.len();
    let arc1: Vec<VertexId> = (1..(j + d - i) % d).map(|s| r[(i + s) % d]).collect();
    let arc2: Vec<VertexId> = (1..(i + d - j) % d).map(|s| r[(j + s) % d]).collect();
    let mut new_w = vec![a];
    new_w.extend(&arc1);
    new_w.push(b);
    let mut new_v = vec![b];
    new_v.extend(&arc2);
    new_v.push(a);
    rot[v] = new_v;
    rot.push(new_w);
    let pa = rot[a].iter().position(|&x| x == v).expect("a adjacent to v");
    rot[a].insert(pa, w);
    let pb = rot[b].iter().position(|&x| x == v).expect("b adjacent to v");
    rot[b].insert(pb + 1, w);
    for x in arc1 {
        for y in rot[x].iter_mut() {
            if *y == v {
                *y = w;
            }
        }
    }
}

/// A random 3-connected quadrangulation on exactly `n` vertices,
/// deterministic in `seed`.
///
/// Starts from a pseudo-double wheel and splits random vertices of degree
/// at least four. A split is skipped when it would make two faces share a
/// pair of opposite corners, which is the only way it could create a
/// 2-cut. No such quadrangulation has 9 vertices.
pub fn gen_random_quad(n: usize, seed: u64) -> Result<Quadrangulation> {
    if n < 8 {
        return Err(Error::InvalidParameter(format!(
            "n = {n}: the smallest 3-connected quadrangulation has 8 vertices"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..8 {
        let k = if n < 10 {
            3
        } else {
            rng.gen_range(4..=((n - 2) / 2).min(12))
        };
        let mut rot = double_wheel(k);
        if grow(&mut rot, n, &mut rng) {
            let emb = PlaneEmbedding::from_neighbor_rotations(&bfs_order(&rot), OuterFace::Id(0))?;
            return validate_quadrangulation(emb);
        }
    }
    Err(Error::GenerationFailed(format!("no 3-connected quadrangulation reached on {n} vertices")))
}

/// Renumbers vertices in breadth-first order from vertex 0, so that
/// neighbors tend to have nearby ids.
fn bfs_order(rot: &[Vec<VertexId>]) -> Vec<Vec<VertexId>> {
    let mut id = vec![usize::MAX; rot.len()];
    let mut queue = vec![0];
    id[0] = 0;
    let mut head = 0;
    while let Some(&v) = queue.get(head) {
        head += 1;
        for &w in &rot[v] {
            if id[w] == usize::MAX {
                id[w] = queue.len();
                queue.push(w);
            }
        }
    }
    queue.iter().map(|&v| rot[v].iter().map(|&w| id[w]).collect()).collect()
}

fn grow(rot: &mut Vec<Vec<VertexId>>, n: usize, rng: &mut ChaCha8Rng) -> bool {
    while rot.len() < n {
        let mut done = false;
        for _ in 0..200 + 4 * rot.len() {
            let v = rng.gen_range(0..rot.len());
            let d = rot[v].len();
            if d < 4 {
                continue;
            }
            let i = rng.gen_range(0..d);
            let j = (i + rng.gen_range(2..=d - 2)) % d;
            if opposite_elsewhere(rot, rot[v][i], rot[v][j], v) {
                continue;
            }
            split_vertex(rot, v, i, j);
            done = true;
            break;
        }
        if !done {
            return false;
        }
    }
    true
}
