//! st-numbering of a biconnected graph.

use crate::embedding::VertexId;

/// Numbers the vertices reachable from `s` so that `s` gets 0, `t` gets the
/// largest number, and every other numbered vertex has both a lower and a
/// higher neighbor. Unreached vertices get `usize::MAX`.
///
/// `adj` must contain the edge `s`-`t`. Fails when the reachable part is not
/// biconnected.
pub(crate) fn st_numbering(adj: &[Vec<VertexId>], s: VertexId, t: VertexId) -> Result<Vec<usize>, String> {
    let n = adj.len();
    if s == t || !adj[s].contains(&t) {
        return Err(format!("{s} and {t} are not adjacent"));
    }
    const NONE: usize = usize::MAX;
    let mut pre = vec![NONE; n];
    let mut parent = vec![NONE; n];
    let mut low = vec![NONE; n];
    let mut order: Vec<VertexId> = Vec::new();

    // s with t moved to the front, so s-t becomes the first tree edge
    let mut root_adj = adj[s].clone();
    let ti = root_adj.iter().position(|&x| x == t).expect("checked above");
    root_adj[..=ti].rotate_right(1);
    let neighbors = |v: VertexId| -> &[VertexId] {
        if v == s {
            &root_adj
        } else {
            &adj[v]
        }
    };

    pre[s] = 0;
    low[s] = 0;
    order.push(s);
    let mut stack: Vec<(VertexId, usize)> = vec![(s, 0)];
    while let Some(&mut (v, ref mut i)) = stack.last_mut() {
        let nb = neighbors(v);
        if *i < nb.len() {
            let w = nb[*i];
            *i += 1;
            if pre[w] == NONE {
                pre[w] = order.len();
                low[w] = pre[w];
                parent[w] = v;
                order.push(w);
                stack.push((w, 0));
            } else if w != parent[v] {
                low[v] = low[v].min(pre[w]);
            }
        } else {
            stack.pop();
            if let Some(&(p, _)) = stack.last() {
                low[p] = low[p].min(low[v]);
            }
        }
    }
    if order.len() < 2 || order[1] != t {
        return Err("t is not the first child of s".into());
    }

    // insert each vertex next to its parent, on the side its low point dictates
    let mut next = vec![NONE; n];
    let mut prev = vec![NONE; n];
    let mut minus = vec![false; n];
    next[s] = t;
    prev[t] = s;
    minus[s] = true;
    for &v in &order[2..] {
        let p = parent[v];
        if low[v] >= pre[p] {
            return Err(format!("vertex {p} is a cut vertex"));
        }
        if minus[order[low[v]]] {
            let a = prev[p];
            next[a] = v;
            prev[v] = a;
            next[v] = p;
            prev[p] = v;
            minus[p] = false;
        } else {
            let b = next[p];
            next[p] = v;
            prev[v] = p;
            next[v] = b;
            if b != NONE {
                prev[b] = v;
            }
            minus[p] = true;
        }
    }

    let mut number = vec![NONE; n];
    let mut v = s;
    let mut k = 0;
    while v != NONE {
        number[v] = k;
        k += 1;
        v = next[v];
    }
    if number[t] != order.len() - 1 {
        return Err("t did not end up last".into());
    }
    for &v in &order {
        if v == s || v == t {
            continue;
        }
        let lower = adj[v].iter().any(|&w| number[w] < number[v]);
        let higher = adj[v].iter().any(|&w| number[w] > number[v] && number[w] != NONE);
        if !lower || !higher {
            return Err(format!("vertex {v} has no lower or no higher neighbor"));
        }
    }
    Ok(number)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn adj_from(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    fn is_st(adj: &[Vec<usize>], num: &[usize], s: usize, t: usize) -> bool {
        let n = adj.len();
        let mut seen = vec![false; n];
        for &x in num {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return false;
            }
        }
        num[s] == 0
            && num[t] == n - 1
            && (0..n).filter(|&v| v != s && v != t).all(|v| {
                adj[v].iter().any(|&w| num[w] < num[v]) && adj[v].iter().any(|&w| num[w] > num[v])
            })
    }

    #[test]
    fn triangle() {
        let adj = adj_from(3, &[(0, 1), (1, 2), (2, 0)]);
        assert_eq!(st_numbering(&adj, 0, 1).unwrap(), vec![0, 2, 1]);
    }

    #[test]
    fn path_is_rejected() {
        let adj = adj_from(3, &[(0, 1), (1, 2)]);
        assert!(st_numbering(&adj, 0, 1).is_err());
    }

    #[test]
    fn non_adjacent_ends_are_rejected() {
        let adj = adj_from(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert!(st_numbering(&adj, 0, 2).is_err());
    }

    proptest! {
        // a cycle plus random chords is biconnected
        #[test]
        fn cycle_with_chords(n in 3usize..40, chords in proptest::collection::vec((0usize..40, 0usize..40), 0..30), s in 0usize..40) {
            let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            for (a, b) in chords {
                let (a, b) = (a % n, b % n);
                if a != b && !edges.iter().any(|&(x, y)| (x, y) == (a, b) || (x, y) == (b, a)) {
                    edges.push((a, b));
                }
            }
            let adj = adj_from(n, &edges);
            let s = s % n;
            let t = adj[s][0];
            let num = st_numbering(&adj, s, t).unwrap();
            prop_assert!(is_st(&adj, &num, s, t));
        }
    }
}
