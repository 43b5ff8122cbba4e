use proptest::prelude::*;

use o1p::book::{book_embed, verify_p1p2p3};
use o1p::coloring::RedBlueColoring;
use o1p::diagpicker::{diag_picker, triangulate_quadrangulation};
use o1p::generators::gen_random_quad;
use o1p::io::{book, o1p as o1p_fmt, rbc};
use o1p::optimal::{build_optimal, optimal_from_raw};
use o1p::oracle::{evaluate, oracle_enumerate, OracleOptions};
use o1p::verify::verify_coloring;
use o1p::{OptimalOnePlaneGraph, OuterFace, PlaneEmbedding, Trust};

fn sizes() -> impl Strategy<Value = (usize, u64)> {
    (prop_oneof![Just(8usize), 10usize..300], any::<u64>())
}

/// The same graph with vertex `v` renamed to `perm[v]`.
fn relabel(g: &OptimalOnePlaneGraph, perm: &[usize]) -> OptimalOnePlaneGraph {
    let emb = g.embedding();
    let mut rot = vec![Vec::new(); perm.len()];
    for v in 0..perm.len() {
        rot[perm[v]] = emb.neighbors(v).map(|w| perm[w]).collect();
    }
    let first = emb.face(emb.outer_face())[0];
    let (u, w) = (emb.tail(first), emb.head(first));
    let e = PlaneEmbedding::from_neighbor_rotations(&rot, OuterFace::LeftOf(perm[u], perm[w])).unwrap();
    build_optimal(o1p::validate_quadrangulation(e).unwrap()).unwrap()
}

fn shuffled(n: usize, seed: u64) -> Vec<usize> {
    use rand::{seq::SliceRandom, SeedableRng};
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
    p
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn picker_bound_holds((n, seed) in sizes()) {
        let g = build_optimal(gen_random_quad(n, seed).unwrap()).unwrap();
        let r = verify_coloring(&g, &diag_picker(&g).unwrap()).unwrap();
        prop_assert!(r.max_red_degree <= 4);
        prop_assert!(r.one_red_per_pair && r.blue_is_maximal_plane);
        prop_assert_eq!(r.blue_count, 3 * n - 6);
    }

    #[test]
    fn report_is_invariant_under_relabeling((n, seed) in sizes(), pseed in any::<u64>()) {
        let g = build_optimal(gen_random_quad(n, seed).unwrap()).unwrap();
        let c = diag_picker(&g).unwrap();
        let perm = shuffled(n, pseed);
        let h = relabel(&g, &perm);
        let pairs: Vec<(usize, usize)> = c
            .red()
            .iter()
            .map(|&e| {
                let [a, b] = g.endpoints(e).unwrap();
                (perm[a], perm[b])
            })
            .collect();
        let moved = RedBlueColoring::from_red_pairs(&h, &pairs).unwrap();
        prop_assert_eq!(verify_coloring(&g, &c).unwrap(), verify_coloring(&h, &moved).unwrap());
        let again = verify_coloring(&h, &diag_picker(&h).unwrap()).unwrap();
        prop_assert!(again.max_red_degree <= 4);
    }

    #[test]
    fn book_is_compliant_and_round_trips((n, seed) in sizes()) {
        let q = gen_random_quad(n, seed).unwrap();
        let d = book_embed(&q).unwrap();
        prop_assert!(verify_p1p2p3(&q, &d).all());
        prop_assert_eq!(book::parse_book(&book::write_book(&d)).unwrap(), d);
    }

    #[test]
    fn files_round_trip((n, seed) in sizes()) {
        let g = build_optimal(gen_random_quad(n, seed).unwrap()).unwrap();
        let raw = o1p_fmt::parse_o1p(&o1p_fmt::write_optimal(&g)).unwrap();
        prop_assert_eq!(&raw, &g.to_raw());
        let g2 = optimal_from_raw(&raw, Trust::Verify).unwrap();
        let c = diag_picker(&g2).unwrap();
        prop_assert_eq!(rbc::parse_rbc(&rbc::write_rbc(&g2, &c).unwrap(), &g2).unwrap(), c);
    }

    #[test]
    fn triangulation_degree_increase((n, seed) in sizes()) {
        let q = gen_random_quad(n, seed).unwrap();
        let t = triangulate_quadrangulation(&q).unwrap();
        prop_assert!(t.max_increase() <= 4);
        prop_assert_eq!(t.embedding.num_edges(), 3 * n - 6);
        for v in 0..n {
            prop_assert_eq!(t.embedding.degree(v), q.embedding().degree(v) + t.increase[v]);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn oracle_never_beats_itself_and_picker_is_within_range(n in 10usize..17, seed in any::<u64>()) {
        let g = build_optimal(gen_random_quad(n, seed).unwrap()).unwrap();
        let r = oracle_enumerate(&g, &OracleOptions::default()).unwrap();
        prop_assert_eq!(evaluate(&g, &r.witness, &[]).max_degree, r.min_max_degree);
        prop_assert!(r.min_max_degree <= diag_picker(&g).unwrap().max_red_degree());
        prop_assert!(r.forest_stats.keys().all(|k| k.tree_count == 2 && k.spanned == n));
    }
}
