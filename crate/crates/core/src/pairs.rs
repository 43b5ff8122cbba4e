//! Linear-time lookups of unordered vertex pairs.

use crate::embedding::VertexId;

/// Indices of `pairs` grouped by smaller endpoint, in index order within
/// each group.
struct Buckets {
    start: Vec<usize>,
    items: Vec<usize>,
}

impl Buckets {
    fn new(n: usize, pairs: &[[VertexId; 2]]) -> Self {
        let mut start = vec![0usize; n + 1];
        for p in pairs {
            start[p[0].min(p[1]) + 1] += 1;
        }
        for v in 0..n {
            start[v + 1] += start[v];
        }
        let mut fill = start.clone();
        let mut items = vec![0; pairs.len()];
        for (i, p) in pairs.iter().enumerate() {
            let v = p[0].min(p[1]);
            items[fill[v]] = i;
            fill[v] += 1;
        }
        Buckets { start, items }
    }

    fn get(&self, v: VertexId) -> &[usize] {
        &self.items[self.start[v]..self.start[v + 1]]
    }
}

/// For each query, the index of the first key joining the same two
/// vertices. All endpoints must be below `n`.
pub(crate) fn match_pairs(n: usize, keys: &[[VertexId; 2]], queries: &[[VertexId; 2]]) -> Vec<Option<usize>> {
    const NONE: usize = usize::MAX;
    let kb = Buckets::new(n, keys);
    let qb = Buckets::new(n, queries);
    let mut stamp = vec![NONE; n];
    let mut out = vec![None; queries.len()];
    for v in 0..n {
        for &k in kb.get(v) {
            let m = keys[k][0].max(keys[k][1]);
            if stamp[m] == NONE {
                stamp[m] = k;
            }
        }
        for &q in qb.get(v) {
            let m = queries[q][0].max(queries[q][1]);
            if stamp[m] != NONE {
                out[q] = Some(stamp[m]);
            }
        }
        for &k in kb.get(v) {
            stamp[keys[k][0].max(keys[k][1])] = NONE;
        }
    }
    out
}

/// The earliest `(first, second)` with `second` the smallest index whose
/// pair already occurred at `first`.
pub(crate) fn first_repeat(n: usize, pairs: &[[VertexId; 2]]) -> Option<(usize, usize)> {
    match_pairs(n, pairs, pairs)
        .into_iter()
        .enumerate()
        .find_map(|(i, m)| m.filter(|&j| j != i).map(|j| (j, i)))
}

/// Normalized pairs `(min, max)` in ascending order, by two counting passes.
pub(crate) fn sort_pairs(n: usize, pairs: &[[VertexId; 2]]) -> Vec<[VertexId; 2]> {
    let norm: Vec<[VertexId; 2]> = pairs.iter().map(|p| [p[0].min(p[1]), p[0].max(p[1])]).collect();
    let pass = |input: &[[VertexId; 2]], key: usize| {
        let mut count = vec![0usize; n + 1];
        for p in input {
            count[p[key] + 1] += 1;
        }
        for v in 0..n {
            count[v + 1] += count[v];
        }
        let mut out = vec![[0, 0]; input.len()];
        for p in input {
            out[count[p[key]]] = *p;
            count[p[key]] += 1;
        }
        out
    };
    pass(&pass(&norm, 1), 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn agrees_with_naive(raw in prop::collection::vec((0usize..12, 0usize..12), 0..40),
                             qs in prop::collection::vec((0usize..12, 0usize..12), 0..40)) {
            let keys: Vec<[usize; 2]> = raw.iter().map(|&(a, b)| [a, b]).collect();
            let queries: Vec<[usize; 2]> = qs.iter().map(|&(a, b)| [a, b]).collect();
            let same = |p: [usize; 2], q: [usize; 2]| (p[0] == q[0] && p[1] == q[1]) || (p[0] == q[1] && p[1] == q[0]);
            let naive: Vec<Option<usize>> = queries.iter().map(|&q| keys.iter().position(|&k| same(k, q))).collect();
            prop_assert_eq!(match_pairs(12, &keys, &queries), naive);

            let rep = (0..keys.len()).find_map(|i| (0..i).find(|&j| same(keys[j], keys[i])).map(|j| (j, i)));
            prop_assert_eq!(first_repeat(12, &keys), rep);

            let mut sorted: Vec<[usize; 2]> = keys.iter().map(|p| [p[0].min(p[1]), p[0].max(p[1])]).collect();
            sorted.sort_unstable();
            prop_assert_eq!(sort_pairs(12, &keys), sorted);
        }
    }
}
