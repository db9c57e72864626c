//! Three-page book embedding of planar graphs with maximum degree 5.
//!
//! Components are embedded one after another. Inside a component, each
//! biconnected block is embedded on its own and child blocks are nested
//! directly right of their cut vertex. A block is handled by recursively
//! peeling boundary cycles (see [`engine`]). The resulting page assignment
//! is checked for same-page crossings and, for the fixed spine order,
//! reassigned if needed.

mod engine;
pub mod expand;
pub mod marking;
pub mod placement;
pub mod repair;
pub mod spine;
pub mod trees;

use crate::book::{BookEmbedding, Page};
use crate::error::EmbedError;
use crate::graph::faces::{chord_count, is_simple_cycle};
use crate::graph::{
    biconnected_components, choose_outer_face, contract_bridgeless, trace_faces, Edge, EmbeddedGraph, FaceSet,
    MAX_DEGREE,
};
use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use engine::Engine;
use placement::{P1, P3};

/// Counters describing one run. `*_failures` count structural property
/// violations and should stay zero.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EmbedStats {
    pub blocks: usize,
    pub contexts: usize,
    pub max_depth: usize,
    /// Cycle vertices by placement case: three, two, one, no marked edge,
    /// and vertices with nothing inside.
    pub case_counts: [usize; 5],
    pub ip4_augmentations: usize,
    /// Augmentations by the marked pattern at the chosen last vertex.
    pub ip4_cases: [usize; 4],
    /// Inner cycles whose last vertex had three interior edges.
    pub ip4_inner_violations: usize,
    pub ip5_repairs: usize,
    /// IP-5 repairs by the number of chords at the first vertex (1 or 2).
    pub ip5_chords: [usize; 2],
    pub tangency_splits: usize,
    /// Interior blocks deferred because they sit in an inner face of
    /// another interior block.
    pub hidden_blocks: usize,
    /// Boundary edges moved off the cycle page because a tangent subcycle
    /// sits between their ends.
    pub jump_edges: usize,
    /// Extra edges from the first cycle vertex into its own anchor, sent to
    /// the second page.
    pub first_vertex_p2: usize,
    /// Edges into an anchor marked at an earlier cycle vertex, sent to the
    /// second page.
    pub foreign_p2: usize,
    /// Anchors whose side from the placement table was overridden.
    pub side_overrides: usize,
    pub blocked_expansions: usize,
    pub aux_digraphs: usize,
    pub aux_cycles: usize,
    pub dfs_nonmonotone: usize,
    pub ip3_failures: usize,
    pub sandwich_failures: usize,
    pub window_failures: usize,
    /// Same-page crossings left by the structural construction.
    pub crossings_before_repair: usize,
    /// Edges whose page the final reassignment changed.
    pub repaired_edges: usize,
    /// Blocks re-embedded from another outer face or the mirrored rotation
    /// system, counted per extra attempt.
    pub retries: usize,
}

impl EmbedStats {
    fn absorb(&mut self, o: &EmbedStats) {
        self.blocks += o.blocks;
        self.contexts += o.contexts;
        self.max_depth = self.max_depth.max(o.max_depth);
        for i in 0..5 {
            self.case_counts[i] += o.case_counts[i];
        }
        self.ip4_augmentations += o.ip4_augmentations;
        for i in 0..4 {
            self.ip4_cases[i] += o.ip4_cases[i];
        }
        self.ip4_inner_violations += o.ip4_inner_violations;
        self.ip5_repairs += o.ip5_repairs;
        self.ip5_chords[0] += o.ip5_chords[0];
        self.ip5_chords[1] += o.ip5_chords[1];
        self.tangency_splits += o.tangency_splits;
        self.hidden_blocks += o.hidden_blocks;
        self.jump_edges += o.jump_edges;
        self.first_vertex_p2 += o.first_vertex_p2;
        self.foreign_p2 += o.foreign_p2;
        self.side_overrides += o.side_overrides;
        self.blocked_expansions += o.blocked_expansions;
        self.aux_digraphs += o.aux_digraphs;
        self.aux_cycles += o.aux_cycles;
        self.dfs_nonmonotone += o.dfs_nonmonotone;
        self.ip3_failures += o.ip3_failures;
        self.sandwich_failures += o.sandwich_failures;
        self.window_failures += o.window_failures;
        self.crossings_before_repair += o.crossings_before_repair;
        self.repaired_edges += o.repaired_edges;
        self.retries += o.retries;
    }

    /// Structural property violations (all should be zero).
    pub fn invariant_failures(&self) -> usize {
        self.aux_cycles + self.ip3_failures + self.sandwich_failures + self.window_failures
    }
}

/// Embedding attempts per block before giving up.
pub const MAX_ATTEMPTS: usize = 8;

type Layout = (Vec<usize>, BTreeMap<Edge, Page>);

/// Knobs for [`embed_book_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EmbedOptions {
    /// Reassign pages for the final order when the construction left a
    /// same-page crossing.
    pub repair: bool,
}

impl Default for EmbedOptions {
    fn default() -> Self {
        EmbedOptions { repair: true }
    }
}

/// Embeds `g` in a book with at most three pages.
pub fn embed_book(g: &EmbeddedGraph) -> Result<(BookEmbedding, EmbedStats), EmbedError> {
    embed_book_with(g, EmbedOptions::default())
}

pub fn embed_book_with(g: &EmbeddedGraph, opts: EmbedOptions) -> Result<(BookEmbedding, EmbedStats), EmbedError> {
    g.check_max_degree(MAX_DEGREE)?;
    let (comp, count) = g.components();
    let mut members = vec![Vec::new(); count];
    for v in 0..g.n() {
        members[comp[v]].push(v);
    }
    let mut stats = EmbedStats::default();
    let mut order = Vec::with_capacity(g.n());
    let mut pages = BTreeMap::new();
    for verts in &members {
        let (h, map) = g.restrict(verts, |_, _| true);
        let (o, p) = embed_connected(&h, opts, &mut stats)?;
        order.extend(o.iter().map(|&v| map[v]));
        pages.extend(p.into_iter().map(|(e, pg)| (Edge::new(map[e.0], map[e.1]), pg)));
    }
    Ok((BookEmbedding { order, pages }, stats))
}

fn embed_connected(h: &EmbeddedGraph, opts: EmbedOptions, stats: &mut EmbedStats) -> Result<Layout, EmbedError> {
    if h.n() == 1 {
        return Ok((vec![0], BTreeMap::new()));
    }
    let blocks = biconnected_components(h);
    let mut order: Vec<usize> = Vec::new();
    let mut pages = BTreeMap::new();
    for blk in &blocks {
        stats.blocks += 1;
        let (bg, map) = h.restrict(&blk.vertices, |_, _| true);
        let (mut o, p) = embed_block(&bg, opts, stats)?;
        pages.extend(p.into_iter().map(|(e, pg)| (Edge::new(map[e.0], map[e.1]), pg)));
        for v in o.iter_mut() {
            *v = map[*v];
        }
        match blk.parent_cut {
            None => {
                debug_assert!(order.is_empty());
                order = o;
            }
            Some(c) => {
                let at = o.iter().position(|&v| v == c).expect("cut vertex in child block");
                o.rotate_left(at);
                let pos = order.iter().position(|&v| v == c).expect("cut vertex placed");
                order.splice(pos + 1..pos + 1, o[1..].iter().copied());
            }
        }
    }
    Ok((order, pages))
}

/// Vertex to put last on the outer cycle: closure degree at most 4, fewest
/// chords at its successor, then smallest label.
fn choose_last(g: &EmbeddedGraph, cycle: &[usize]) -> Option<usize> {
    let k = cycle.len();
    let mut on = vec![false; g.n()];
    for &v in cycle {
        on[v] = true;
    }
    let chords_at = |v: usize| g.rotation(v).iter().filter(|&&u| on[u]).count().saturating_sub(2);
    (0..k)
        .filter(|&i| g.degree(cycle[i]) <= 4)
        .min_by_key(|&i| (chords_at(cycle[(i + 1) % k]), cycle[i]))
}

/// Outer cycles worth trying: simple faces, chordless ones first, then by
/// length.
fn outer_candidates(g: &EmbeddedGraph, faces: &FaceSet) -> Vec<Vec<usize>> {
    let first = choose_outer_face(g, faces).face;
    let mut ids: Vec<usize> = (0..faces.faces.len())
        .filter(|&i| i != first && is_simple_cycle(&faces.faces[i]))
        .collect();
    ids.sort_by_key(|&i| (chord_count(g, &faces.faces[i]) > 0, faces.faces[i].len(), i));
    core::iter::once(first)
        .chain(ids)
        .map(|i| faces.faces[i].clone())
        .collect()
}

/// Embeds a block, retrying with other outer faces and with the mirrored
/// rotation system while the pages cannot be fixed for the produced order.
fn embed_block(bg: &EmbeddedGraph, opts: EmbedOptions, stats: &mut EmbedStats) -> Result<Layout, EmbedError> {
    if bg.n() == 2 {
        return Ok((vec![0, 1], BTreeMap::from([(Edge(0, 1), P1)])));
    }
    let faces = trace_faces(bg)?;
    let bm = bg.mirrored();
    let mut first_err = None;
    let attempts = outer_candidates(bg, &faces)
        .into_iter()
        .flat_map(|c| {
            let mut r = c.clone();
            r.reverse();
            [(false, c), (true, r)]
        })
        .take(MAX_ATTEMPTS);
    for (tried, (mirror, cycle)) in attempts.enumerate() {
        let (g, gm) = if mirror { (&bm, bg) } else { (bg, &bm) };
        let mut s = EmbedStats::default();
        let res = embed_from(g, gm, cycle, &mut s).and_then(|(o, mut p)| {
            s.crossings_before_repair = repair::conflicts(&o, &p);
            if s.crossings_before_repair > 0 && opts.repair {
                s.repaired_edges = repair::repair_pages(&o, &mut p)?;
            }
            Ok((o, p))
        });
        match res {
            Ok(layout) => {
                stats.absorb(&s);
                stats.retries += tried;
                return Ok(layout);
            }
            Err(e) if opts.repair => {
                first_err.get_or_insert(e);
            }
            Err(e) => return Err(e),
        }
    }
    Err(first_err.expect("at least one attempt"))
}

fn embed_from(
    g: &EmbeddedGraph,
    gm: &EmbeddedGraph,
    mut cycle: Vec<usize>,
    stats: &mut EmbedStats,
) -> Result<Layout, EmbedError> {
    let k = cycle.len();
    match choose_last(g, &cycle) {
        Some(i) => {
            cycle.rotate_left((i + 1) % k);
            let (o, p, s) = Engine::new(g, gm).run(&cycle)?;
            stats.absorb(&s);
            Ok((o, p))
        }
        None => ensure_ip4(g, cycle, stats),
    }
}

/// Every outer vertex has degree 5: subdivide the closing edge with helper
/// vertices so that the last vertex is a helper of degree 2, embed, and
/// contract the helpers again.
fn ensure_ip4(bg: &EmbeddedGraph, mut cycle: Vec<usize>, stats: &mut EmbedStats) -> Result<Layout, EmbedError> {
    let k = cycle.len();
    let on: Vec<bool> = (0..bg.n()).map(|v| cycle.contains(&v)).collect();
    let chords_at = |v: usize| bg.rotation(v).iter().filter(|&&u| on[u]).count() - 2;
    let i = (0..k)
        .min_by_key(|&i| (chords_at(cycle[(i + 1) % k]), cycle[i]))
        .expect("non-empty cycle");
    cycle.rotate_left((i + 1) % k);
    let (v1, vm) = (cycle[0], cycle[k - 1]);

    // marked pattern at vm from a dry run of the marking
    let case = ip4_case(bg, &cycle);
    stats.ip4_augmentations += 1;
    stats.ip4_cases[case] += 1;
    let helpers = if case <= 1 { 3 } else { 1 };

    let n = bg.n();
    let mut rot: Vec<Vec<usize>> = bg.rotations().to_vec();
    let hs: Vec<usize> = (n..n + helpers).collect();
    for r in rot[vm].iter_mut() {
        if *r == v1 {
            *r = hs[0];
        }
    }
    for r in rot[v1].iter_mut() {
        if *r == vm {
            *r = hs[helpers - 1];
        }
    }
    for t in 0..helpers {
        let prev = if t == 0 { vm } else { hs[t - 1] };
        let next = if t + 1 == helpers { v1 } else { hs[t + 1] };
        rot.push(vec![next, prev]);
    }
    let aug = EmbeddedGraph::from_raw(rot);
    let mut outer = cycle.clone();
    outer.extend(&hs);
    let augm = aug.mirrored();
    let mut eng = Engine::new(&aug, &augm);
    eng.set_free_last(vm);
    let (order, mut pages, s) = eng.run(&outer)?;
    stats.absorb(&s);

    let order: Vec<usize> = order.into_iter().filter(|&v| v < n).collect();
    pages.retain(|e, _| e.1 < n);
    pages.insert(Edge::new(v1, vm), P3);
    Ok((order, pages))
}

/// Classifies the marked status of the three interior edges at the last
/// outer vertex: 0 all marked, 1 first two marked, 2 first and last,
/// 3 anything else.
fn ip4_case(g: &EmbeddedGraph, cycle: &[usize]) -> usize {
    let k = cycle.len();
    let on: Vec<usize> = {
        let mut c = vec![usize::MAX; g.n()];
        for (i, &v) in cycle.iter().enumerate() {
            c[v] = i;
        }
        c
    };
    let labels: Vec<Vec<usize>> = (0..k)
        .map(|i| {
            let (v, nxt, prv) = (cycle[i], cycle[(i + 1) % k], cycle[(i + k - 1) % k]);
            let mut out = Vec::new();
            let mut w = g.succ(v, nxt);
            while w != prv {
                out.push(w);
                w = g.succ(v, w);
            }
            out
        })
        .collect();
    let interior: Vec<bool> = (0..g.n()).map(|v| on[v] == usize::MAX).collect();
    let forest = contract_bridgeless(g, &interior);
    let block_of = |x: usize| Some(forest.block_of[x]).filter(|&b| b != usize::MAX);
    let Ok(m) = marking::mark_edges(&labels, block_of, forest.len()) else {
        return 3;
    };
    match m.marked[k - 1] {
        [true, true, true] => 0,
        [true, true, false] => 1,
        [true, false, true] => 2,
        _ => 3,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generator::canned;
    use crate::verifier::check;

    fn run(name: &str) -> (EmbeddedGraph, BookEmbedding, EmbedStats) {
        let g = canned(name).unwrap();
        let (b, s) = embed_book(&g).unwrap();
        let r = check(&g, &b);
        assert!(r.ok(), "{name}: {:?}", r.violations);
        assert!(b.page_count() <= 3);
        (g, b, s)
    }

    #[test]
    fn canned_instances_embed() {
        for &name in crate::generator::CANNED_NAMES {
            run(name);
        }
    }

    #[test]
    fn cycle_follows_ip3() {
        let (g, b, _) = run("c6");
        let o = &b.order;
        for i in 0..5 {
            assert_eq!(b.pages[&Edge::new(o[i], o[i + 1])], 1);
        }
        assert_eq!(b.pages[&Edge::new(o[0], o[5])], 3);
        assert_eq!(g.n(), 6);
    }

    #[test]
    fn single_edge() {
        let g = EmbeddedGraph::new(vec![vec![1], vec![0]]).unwrap();
        let (b, _) = embed_book(&g).unwrap();
        assert_eq!(b.order, vec![0, 1]);
        assert_eq!(b.pages[&Edge(0, 1)], 1);
    }

    #[test]
    fn icosahedron_uses_augmentation() {
        let (_, _, s) = run("icosahedron");
        assert_eq!(s.ip4_augmentations, 1);
    }

    #[test]
    fn ip5_trigger_uses_separating_path() {
        let (_, _, s) = run("ip5-trigger");
        assert_eq!(s.ip5_repairs, 1);
        assert_eq!(s.ip5_chords, [1, 0]);
    }

    #[test]
    fn no_structural_failures_on_canned() {
        for &name in crate::generator::CANNED_NAMES {
            let (_, _, s) = run(name);
            assert_eq!(s.invariant_failures(), 0, "{name}");
        }
    }
}
