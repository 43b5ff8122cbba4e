//! Exhaustive ground truth for small instances, and brute-force versions of
//! the fast structural checks.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::book::{BookEmbedding, Page};
use crate::coloring::Selection;
use crate::embedding::{PlaneEmbedding, VertexId};
use crate::error::{Error, Result};
use crate::optimal::OptimalOnePlaneGraph;
use crate::quad::Quadrangulation;

pub const DEFAULT_BUDGET: usize = 22;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleOptions {
    /// Largest face count that will be enumerated.
    pub budget: usize,
    /// Vertices whose largest red degree is tracked over forest colorings.
    pub watch: Vec<VertexId>,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions {
            budget: DEFAULT_BUDGET,
            watch: Vec::new(),
        }
    }
}

/// Shape of one acyclic red selection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ForestStat {
    pub tree_count: usize,
    pub spanned: usize,
    pub max_degree: usize,
}

/// Per-selection measurements.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SelectionStats {
    pub max_degree: usize,
    /// `Some` when the red edges are acyclic.
    pub forest: Option<ForestStat>,
    /// Largest red degree among the watched vertices.
    pub watched_max: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub selections: u64,
    /// Smallest possible maximum red degree.
    pub min_max_degree: usize,
    /// Lexicographically least selection attaining it.
    pub witness: Selection,
    pub forest_colorings: u64,
    /// Number of acyclic selections of each shape.
    pub forest_stats: BTreeMap<ForestStat, u64>,
    /// Over acyclic selections, the smallest largest red degree among the
    /// watched vertices.
    pub watched_forest_min: Option<usize>,
}

/// Measures one selection from scratch.
pub fn evaluate(g: &OptimalOnePlaneGraph, sel: &Selection, watch: &[VertexId]) -> SelectionStats {
    let n = g.num_vertices();
    let mut deg = vec![0usize; n];
    let mut parent: Vec<usize> = (0..n).collect();
    let mut acyclic = true;
    for f in 0..sel.len() {
        let [a, b] = g.diagonal(f, sel.get(f));
        deg[a] += 1;
        deg[b] += 1;
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra == rb {
            acyclic = false;
        } else {
            parent[ra] = rb;
        }
    }
    let max_degree = deg.iter().copied().max().unwrap_or(0);
    let forest = acyclic.then(|| {
        let spanned = deg.iter().filter(|&&d| d > 0).count();
        ForestStat {
            tree_count: spanned - sel.len(),
            spanned,
            max_degree,
        }
    });
    let watched_max = watch.iter().map(|&v| deg[v]).max().unwrap_or(0);
    SelectionStats {
        max_degree,
        forest,
        watched_max,
    }
}

fn find(p: &mut [usize], mut x: usize) -> usize {
    while p[x] != x {
        p[x] = p[p[x]];
        x = p[x];
    }
    x
}

#[derive(Default)]
struct Acc {
    best: Option<(usize, u64)>,
    forests: u64,
    stats: BTreeMap<ForestStat, u64>,
    watched: Option<usize>,
}

impl Acc {
    fn merge(mut self, o: Acc) -> Acc {
        self.best = match (self.best, o.best) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        self.forests += o.forests;
        for (k, v) in o.stats {
            *self.stats.entry(k).or_default() += v;
        }
        self.watched = match (self.watched, o.watched) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        self
    }
}

/// Tries every one-diagonal-per-face selection. The result does not depend
/// on how the work is split across threads.
pub fn oracle_enumerate(g: &OptimalOnePlaneGraph, opts: &OracleOptions) -> Result<OracleResult> {
    let faces = g.num_faces();
    if faces > opts.budget || faces > 40 {
        return Err(Error::TooLarge {
            faces,
            budget: opts.budget,
        });
    }
    let total: u64 = 1 << faces;
    let chunk_bits = faces.min(10);
    let chunks = 1u64 << chunk_bits;
    let per = total / chunks;
    let acc = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut acc = Acc::default();
            for bits in c * per..(c + 1) * per {
                let s = evaluate(g, &Selection::from_bits(faces, bits), &opts.watch);
                let cand = (s.max_degree, bits);
                if acc.best.is_none_or(|b| cand < b) {
                    acc.best = Some(cand);
                }
                if let Some(fs) = s.forest {
                    acc.forests += 1;
                    *acc.stats.entry(fs).or_default() += 1;
                    acc.watched = Some(acc.watched.map_or(s.watched_max, |w| w.min(s.watched_max)));
                }
            }
            acc
        })
        .reduce(Acc::default, Acc::merge);
    let (min_max_degree, bits) = acc.best.expect("at least one selection");
    Ok(OracleResult {
        selections: total,
        min_max_degree,
        witness: Selection::from_bits(faces, bits),
        forest_colorings: acc.forests,
        forest_stats: acc.stats,
        watched_forest_min: if opts.watch.is_empty() { None } else { acc.watched },
    })
}

/// 3-connectivity by deleting every vertex pair and testing connectivity.
pub fn brute_force_3_connected(emb: &PlaneEmbedding) -> bool {
    let n = emb.num_vertices();
    if n < 4 {
        return false;
    }
    let connected_without = |x: usize, y: usize| {
        let start = (0..n).find(|&v| v != x && v != y).expect("n >= 4");
        let mut seen = vec![false; n];
        seen[x] = true;
        seen[y] = true;
        seen[start] = true;
        let mut stack = vec![start];
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for w in emb.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n - if x == y { 1 } else { 2 }
    };
    (0..n).all(|x| (x..n).all(|y| connected_without(x, y)))
}

/// Same-page non-crossing by comparing every pair of edges.
pub fn pairwise_noncrossing(quad: &Quadrangulation, d: &BookEmbedding) -> bool {
    let emb = quad.embedding();
    [Page::Upper, Page::Lower].into_iter().all(|page| {
        let iv: Vec<(usize, usize)> = (0..emb.num_edges())
            .filter(|&e| d.page(e) == page)
            .map(|e| {
                let [a, b] = emb.edge(e);
                let (pa, pb) = (d.position(a), d.position(b));
                (pa.min(pb), pa.max(pb))
            })
            .collect();
        iv.iter().enumerate().all(|(i, &(a, b))| {
            iv[i + 1..]
                .iter()
                .all(|&(c, e)| !((a < c && c < b && b < e) || (c < a && a < e && e < b)))
        })
    })
}
