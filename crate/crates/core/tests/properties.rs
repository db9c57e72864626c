use bookembed_core::generator::{gen, Family, GenSpec};
use bookembed_core::graph::contract_bridgeless;
use bookembed_core::oracle::{min_pages, DEFAULT_LIMIT};
use bookembed_core::verifier::{check, crosses};
use bookembed_core::{embed_book, parse_rotation_graph, write_rotation_graph, BookEmbedding, Edge, EmbeddedGraph};
use proptest::prelude::*;
use std::collections::{BTreeMap, HashSet};

fn random(n: usize, seed: u64) -> EmbeddedGraph {
    gen(GenSpec {
        family: Family::Random,
        n,
        seed,
    })
    .unwrap()
}

/// Face count by following darts u->v to v->succ_v(u), written without the
/// library's face tracer.
fn count_faces(g: &EmbeddedGraph) -> usize {
    let mut seen = HashSet::new();
    let mut faces = 0;
    for u in 0..g.n() {
        for &v in g.rotation(u) {
            if seen.contains(&(u, v)) {
                continue;
            }
            faces += 1;
            let (mut a, mut b) = (u, v);
            while seen.insert((a, b)) {
                let r = g.rotation(b);
                let i = r.iter().position(|&x| x == a).unwrap();
                let c = r[(i + 1) % r.len()];
                (a, b) = (b, c);
            }
        }
    }
    faces
}

fn permutation(n: usize, seed: u64) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    let mut x = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
    for i in (1..n).rev() {
        x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        p.swap(i, (x >> 33) as usize % (i + 1));
    }
    p
}

fn relabel_book(b: &BookEmbedding, perm: &[usize]) -> BookEmbedding {
    BookEmbedding {
        order: b.order.iter().map(|&v| perm[v]).collect(),
        pages: b
            .pages
            .iter()
            .map(|(e, &p)| (Edge::new(perm[e.0], perm[e.1]), p))
            .collect(),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn generated_graphs_are_planar_and_bounded(n in 3usize..80, seed in any::<u64>()) {
        let g = random(n, seed);
        prop_assert!(g.max_degree() <= 5);
        let (_, comps) = g.components();
        let isolated = (0..g.n()).filter(|&v| g.degree(v) == 0).count();
        // every non-trivial component contributes V - E + F = 2
        let lhs = g.n() as i64 - g.m() as i64 + count_faces(&g) as i64;
        prop_assert_eq!(lhs, 2 * (comps - isolated) as i64 + isolated as i64);
        prop_assert_eq!(random(n, seed), g);
    }

    #[test]
    fn embeddings_verify_on_three_pages(n in 3usize..120, seed in any::<u64>()) {
        let g = random(n, seed);
        let (b, s) = embed_book(&g).unwrap();
        let r = check(&g, &b);
        prop_assert!(r.ok(), "{:?}", r.violations);
        prop_assert!(b.page_count() <= 3);
        prop_assert_eq!(s.invariant_failures(), 0);
    }

    #[test]
    fn interior_forest_is_acyclic(n in 4usize..60, seed in any::<u64>(), mask in any::<u64>()) {
        let g = random(n, seed);
        let interior: Vec<bool> = (0..g.n()).map(|v| (mask >> (v % 64)) & 1 == 1).collect();
        let f = contract_bridgeless(&g, &interior);
        prop_assert!(f.is_forest());
        let covered: usize = f.blocks.iter().map(|b| b.len()).sum();
        prop_assert_eq!(covered, interior.iter().filter(|&&x| x).count());
    }

    #[test]
    fn crossing_predicate_is_symmetric(pos in Just((0..8).collect::<Vec<usize>>()).prop_shuffle(),
                                       a in 0usize..8, b in 0usize..8, c in 0usize..8, d in 0usize..8) {
        prop_assume!(a != b && c != d);
        let (e, f) = (Edge::new(a, b), Edge::new(c, d));
        prop_assert_eq!(crosses(&pos, e, f), crosses(&pos, f, e));
        if e.has(c) || e.has(d) {
            prop_assert!(!crosses(&pos, e, f));
        }
    }

    #[test]
    fn verifier_ignores_vertex_names(n in 3usize..40, seed in any::<u64>(), pseed in any::<u64>(), flips in any::<u64>()) {
        let g = random(n, seed);
        let (mut b, _) = embed_book(&g).unwrap();
        // scramble some pages so that there is something to report
        for (i, p) in b.pages.values_mut().enumerate() {
            if (flips >> (i % 64)) & 1 == 1 {
                *p = 1;
            }
        }
        let perm = permutation(g.n(), pseed);
        let r1 = check(&g, &b);
        let r2 = check(&g.relabel(&perm), &relabel_book(&b, &perm));
        prop_assert_eq!(r1.violations.len(), r2.violations.len());
        prop_assert_eq!(r1.ok(), r2.ok());
    }

    #[test]
    fn oracle_ignores_vertex_names(n in 4usize..9, seed in any::<u64>(), pseed in any::<u64>()) {
        let g = random(n, seed);
        let perm = permutation(g.n(), pseed);
        let a = min_pages(&g, DEFAULT_LIMIT).unwrap();
        let b = min_pages(&g.relabel(&perm), DEFAULT_LIMIT).unwrap();
        prop_assert_eq!(a.min_pages, b.min_pages);
        prop_assert!(check(&g, &a.witness).ok());
    }

    #[test]
    fn graph_text_round_trip(n in 1usize..60, seed in any::<u64>()) {
        let g = random(n.max(3), seed);
        prop_assert_eq!(parse_rotation_graph(&write_rotation_graph(&g)).unwrap(), g);
    }

    #[test]
    fn embedding_text_round_trip(order in Just((0..12).collect::<Vec<usize>>()).prop_shuffle(),
                                 edges in proptest::collection::btree_map((0usize..12, 0usize..12), 1u8..=3, 0..30)) {
        let pages: BTreeMap<Edge, u8> = edges.into_iter().filter(|((u, v), _)| u != v).map(|((u, v), p)| (Edge::new(u, v), p)).collect();
        let b = BookEmbedding { order, pages };
        prop_assert_eq!(BookEmbedding::parse(&b.to_text()).unwrap(), b);
    }
}
