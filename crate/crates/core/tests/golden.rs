use bookembed_core::generator::{canned, gen, Family, GenSpec};
use bookembed_core::oracle::{min_pages, min_pages_fixed_order, DEFAULT_LIMIT};
use bookembed_core::verifier::{check, crossing_count_per_page};
use bookembed_core::{embed_book, BookEmbedding, Edge, EmbeddedGraph};
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

#[test]
fn random_50_seed_7_degree_histogram() {
    let g = gen(GenSpec {
        family: Family::Random,
        n: 50,
        seed: 7,
    })
    .unwrap();
    let mut hist = [0usize; 6];
    for v in 0..g.n() {
        hist[g.degree(v)] += 1;
    }
    assert_eq!(hist, [0, 0, 0, 19, 16, 15]);
    assert_eq!(g.m(), 98);
}

#[test]
fn octahedron_needs_two_pages() {
    let g = canned("octahedron").unwrap();
    let r = min_pages(&g, DEFAULT_LIMIT).unwrap();
    assert_eq!(r.min_pages, 2);
    assert!(check(&g, &r.witness).ok());
    assert_eq!(r.witness.page_count(), 2);
}

#[test]
fn k4_needs_two_pages_in_every_order() {
    let edges = canned("k4").unwrap().edges();
    for order in [[0, 1, 2, 3], [0, 2, 1, 3], [0, 1, 3, 2]] {
        assert_eq!(min_pages_fixed_order(&order, &edges).0, 2, "{order:?}");
    }
}

#[test]
fn k4_two_page_layout_accepted() {
    let g = canned("k4").unwrap();
    let mut b = BookEmbedding {
        order: vec![0, 1, 2, 3],
        ..Default::default()
    };
    for (u, v) in [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)] {
        b.pages.insert(Edge::new(u, v), 1);
    }
    b.pages.insert(Edge::new(1, 3), 2);
    assert!(check(&g, &b).ok());
}

#[test]
fn crossing_counts_match_pairwise_recount() {
    let g = canned("octahedron").unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut order: Vec<usize> = (0..g.n()).collect();
    for i in (1..order.len()).rev() {
        order.swap(i, (rng.next_u64() % (i as u64 + 1)) as usize);
    }
    let pages = g
        .edges()
        .into_iter()
        .map(|e| (e, (rng.next_u64() % 3) as u8 + 1))
        .collect();
    let b = BookEmbedding { order, pages };
    let pos = b.positions(g.n());
    let mut recount = [0usize; 3];
    let es: Vec<(Edge, u8)> = b.pages.iter().map(|(&e, &p)| (e, p)).collect();
    for (i, &(e, p)) in es.iter().enumerate() {
        for &(f, q) in &es[i + 1..] {
            let (a, c) = (pos[e.0].min(pos[e.1]), pos[e.0].max(pos[e.1]));
            let (x, y) = (pos[f.0].min(pos[f.1]), pos[f.0].max(pos[f.1]));
            if p == q && ((a < x && x < c && c < y) || (x < a && a < y && y < c)) {
                recount[p as usize - 1] += 1;
            }
        }
    }
    assert_eq!(crossing_count_per_page(&b, &g), recount);
    assert!(recount.iter().sum::<usize>() > 0);
}

#[test]
fn cycles_follow_ip3() {
    for n in 3..=12 {
        let rot = (0..n).map(|i| vec![(i + 1) % n, (i + n - 1) % n]).collect();
        let g = EmbeddedGraph::new(rot).unwrap();
        let (b, _) = embed_book(&g).unwrap();
        let o = &b.order;
        for i in 0..n - 1 {
            assert_eq!(b.pages[&Edge::new(o[i], o[i + 1])], 1);
        }
        assert_eq!(b.pages[&Edge::new(o[0], o[n - 1])], 3);
    }
    let (b, _) = embed_book(&canned("c6").unwrap()).unwrap();
    assert_eq!(b.edges_per_page(), [5, 0, 1]);
}

#[test]
fn corpus_exercises_every_case_and_both_repairs() {
    let mut cases = [0usize; 5];
    let (mut ip4, mut ip5) = (0, 0);
    for n in [10, 20, 50] {
        for seed in 0..40 {
            let g = gen(GenSpec {
                family: Family::Random,
                n,
                seed,
            })
            .unwrap();
            let (_, s) = embed_book(&g).unwrap();
            for (c, k) in cases.iter_mut().zip(s.case_counts) {
                *c += k;
            }
            ip4 += s.ip4_augmentations;
            ip5 += s.ip5_repairs;
        }
    }
    ip4 += embed_book(&canned("icosahedron").unwrap()).unwrap().1.ip4_augmentations;
    assert!(cases[..4].iter().all(|&c| c > 0), "{cases:?}");
    assert!(ip4 > 0 && ip5 > 0, "ip4={ip4} ip5={ip5}");
}
