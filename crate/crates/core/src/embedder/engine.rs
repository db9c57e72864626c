//! Recursive peeling of one biconnected block.
//!
//! A work stack holds cycles already laid out on the spine. Processing a
//! cycle places its anchors and ancillaries as tokens inside the cycle's
//! window, then expands each token into its boundary cycle(s), which are
//! pushed as new work.

use super::expand::{external_darts, outer_walk, split_walk};
use super::marking::{mark_edges, Marking};
use super::placement::{place_cycle_vertex, Side, VertexProfile, P1, P2, P3};
use super::repair::{ip5_violation, separating_path};
use super::spine::{Item, Spine};
use super::trees::{anchored_trees, dfs_order, order_anchored_trees, AnchoredTree};
use super::EmbedStats;
use crate::book::Page;
use crate::error::EmbedError;
use crate::graph::{contract_bridgeless, BlockForest, Edge, EmbeddedGraph};
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

const NONE: usize = usize::MAX;

/// Spine order, pages and counters of one run.
pub(crate) type RunOutput = (Vec<usize>, BTreeMap<Edge, Page>, EmbedStats);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Role {
    Anchor,
    Ancillary,
}

#[derive(Debug, Clone)]
struct Token {
    vertices: Vec<usize>,
    role: Role,
    /// Boundary vertex carrying the edge towards the enclosing structure.
    w0: usize,
    /// Far end of that edge.
    outside: usize,
}

/// How a subcycle shares a vertex with the cycle laid out before it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Glue {
    None,
    /// Shares its first vertex and sits to the right of it.
    Right,
    /// Shares its last vertex and sits to the left of it.
    Left,
}

#[derive(Debug, Clone)]
struct Task {
    cycle: Vec<usize>,
    /// Process with the mirrored rotation system.
    mirrored: bool,
    /// Physical page of each logical page p1, p2, p3.
    perm: [Page; 3],
    depth: usize,
    /// `cycle[0]` is shared with a parent subcycle laid out before it.
    glued: Glue,
}

/// What was processed, kept for the final layout checks.
#[derive(Debug, Clone)]
struct Record {
    cycle: Vec<usize>,
    interior: Vec<usize>,
}

pub(crate) struct Engine<'g> {
    g: &'g EmbeddedGraph,
    gm: &'g EmbeddedGraph,
    /// Rotation system of the task being processed.
    cur: &'g EmbeddedGraph,
    mirrored: bool,
    perm: [Page; 3],
    spine: Spine,
    pages: BTreeMap<Edge, Page>,
    pub stats: EmbedStats,
    cyc_idx: Vec<usize>,
    mask: Vec<bool>,
    in_block: Vec<usize>,
    glue_tail: Vec<usize>,
    glue_head: Vec<usize>,
    tasks: Vec<Task>,
    records: Vec<Record>,
    /// Vertices treated as an ordinary (not last) vertex even when last.
    free_last: Vec<bool>,
}

fn invariant(name: &'static str, detail: &str, context: String) -> EmbedError {
    EmbedError::Invariant {
        invariant: name,
        detail: String::from(detail),
        context,
    }
}

impl<'g> Engine<'g> {
    /// `gm` must be `g.mirrored()`.
    pub fn new(g: &'g EmbeddedGraph, gm: &'g EmbeddedGraph) -> Self {
        let n = g.n();
        Engine {
            g,
            gm,
            cur: g,
            mirrored: false,
            perm: [P1, P2, P3],
            spine: Spine::new(n),
            pages: BTreeMap::new(),
            stats: EmbedStats::default(),
            cyc_idx: vec![NONE; n],
            mask: vec![false; n],
            in_block: vec![NONE; n],
            glue_tail: (0..n).collect(),
            glue_head: (0..n).collect(),
            tasks: Vec::new(),
            records: Vec::new(),
            free_last: vec![false; n],
        }
    }

    /// Lets the last outer vertex place anchors to its right (used by the
    /// helper augmentation, where the true last vertex is a helper).
    pub fn set_free_last(&mut self, v: usize) {
        self.free_last[v] = true;
    }

    /// Assigns logical page `p` of the current task.
    fn set_page(&mut self, u: usize, v: usize, p: Page) {
        self.pages.insert(Edge::new(u, v), self.perm[usize::from(p) - 1]);
    }

    fn set_cycle_pages(&mut self, order: &[usize], perm: [Page; 3]) {
        for w in order.windows(2) {
            self.pages.insert(Edge::new(w[0], w[1]), perm[0]);
        }
        self.pages.insert(Edge::new(order[0], order[order.len() - 1]), perm[2]);
    }

    /// Page roles inside a block expanded from the current task: its cycle
    /// takes the current p2, its closing edge the current p1.
    fn child_perm(&self) -> [Page; 3] {
        let p = self.perm;
        [p[1], p[2], p[0]]
    }

    fn view(&self, mirrored: bool) -> &'g EmbeddedGraph {
        if mirrored {
            self.gm
        } else {
            self.g
        }
    }

    fn node(&self, v: usize) -> usize {
        self.spine.node_of(v).expect("vertex on spine")
    }

    /// First vertex of the windows glued to the left of `v`.
    fn head(&self, v: usize) -> usize {
        let mut x = v;
        while self.glue_head[x] != x {
            x = self.glue_head[x];
        }
        x
    }

    /// Last vertex of the windows glued to the right of `v`.
    fn tail(&self, v: usize) -> usize {
        let mut x = v;
        while self.glue_tail[x] != x {
            x = self.glue_tail[x];
        }
        x
    }

    /// Lays out the outer cycle and runs everything inside it.
    pub fn run(mut self, outer: &[usize]) -> Result<RunOutput, EmbedError> {
        for &v in outer {
            self.spine.push_back(Item::Vertex(v));
        }
        self.set_cycle_pages(outer, self.perm);
        self.tasks.push(Task {
            cycle: outer.to_vec(),
            mirrored: false,
            perm: [P1, P2, P3],
            depth: 0,
            glued: Glue::None,
        });
        while let Some(t) = self.tasks.pop() {
            self.process(t)?;
        }
        let order = self.spine.vertex_order();
        if order.len() != self.g.n() {
            return Err(invariant(
                "coverage",
                "not every vertex reached the spine",
                format!("{} of {} placed", order.len(), self.g.n()),
            ));
        }
        for e in self.g.edges() {
            if !self.pages.contains_key(&e) {
                return Err(invariant("coverage", "edge without page", format!("{e:?}")));
            }
        }
        self.final_checks(&order);
        Ok((order, self.pages, self.stats))
    }

    fn final_checks(&mut self, order: &[usize]) {
        let mut pos = vec![0; self.g.n()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        for r in &self.records {
            if r.cycle.windows(2).any(|w| pos[w[0]] >= pos[w[1]]) {
                self.stats.ip3_failures += 1;
            }
            let (lo, hi) = (pos[r.cycle[0]], pos[r.cycle[r.cycle.len() - 1]]);
            if r.interior.iter().any(|&x| pos[x] <= lo || pos[x] >= hi) {
                self.stats.window_failures += 1;
            }
        }
    }

    fn labels(&self, cycle: &[usize]) -> Vec<Vec<usize>> {
        let k = cycle.len();
        (0..k)
            .map(|i| {
                let (v, nxt, prv) = (cycle[i], cycle[(i + 1) % k], cycle[(i + k - 1) % k]);
                let mut out = Vec::new();
                let mut w = self.cur.succ(v, nxt);
                while w != prv {
                    out.push(w);
                    w = self.cur.succ(v, w);
                }
                // e1 is the interior edge next to the predecessor
                out.reverse();
                out
            })
            .collect()
    }

    fn region(&mut self, labels: &[Vec<usize>]) -> Vec<usize> {
        let mut interior = Vec::new();
        for lab in labels {
            for &x in lab {
                if self.cyc_idx[x] == NONE && !self.mask[x] {
                    self.mask[x] = true;
                    interior.push(x);
                }
            }
        }
        let mut i = 0;
        while i < interior.len() {
            let x = interior[i];
            i += 1;
            for &y in self.cur.rotation(x) {
                if self.cyc_idx[y] == NONE && !self.mask[y] {
                    self.mask[y] = true;
                    interior.push(y);
                }
            }
        }
        interior
    }

    fn process(&mut self, task: Task) -> Result<(), EmbedError> {
        let cycle = task.cycle;
        self.mirrored = task.mirrored;
        self.perm = task.perm;
        self.cur = self.view(task.mirrored);
        self.stats.contexts += 1;
        self.stats.max_depth = self.stats.max_depth.max(task.depth);
        for (i, &v) in cycle.iter().enumerate() {
            self.cyc_idx[v] = i;
        }
        let labels = self.labels(&cycle);
        let interior = self.region(&labels);
        let result = self.process_inner(&cycle, &labels, &interior, task.depth, task.glued);
        for &v in &cycle {
            self.cyc_idx[v] = NONE;
        }
        for &x in &interior {
            self.mask[x] = false;
        }
        self.records.push(Record { cycle, interior });
        result
    }

    fn process_inner(
        &mut self,
        cycle: &[usize],
        labels: &[Vec<usize>],
        interior: &[usize],
        depth: usize,
        glued: Glue,
    ) -> Result<(), EmbedError> {
        let k = cycle.len();
        if let Some(&x) = interior.iter().find(|&&x| self.spine.is_placed(x)) {
            return Err(invariant(
                "IP-1",
                "interior vertex already on the spine",
                format!("vertex {x}, cycle {cycle:?}"),
            ));
        }
        // chords
        for (i, lab) in labels.iter().enumerate() {
            for &x in lab {
                if self.cyc_idx[x] != NONE {
                    self.set_page(cycle[i], x, P3);
                }
            }
        }
        if interior.is_empty() {
            return Ok(());
        }
        let (forest, entry) = self.visible_forest(cycle, labels);
        let block_of = |x: usize| Some(forest.block_of[x]).filter(|&b| b != NONE);
        let marking = mark_edges(labels, block_of, forest.len())?;
        let nb = forest.len();

        // anchor placement
        let mut node_of_block = vec![NONE; nb];
        let mut tokens: Vec<Token> = Vec::with_capacity(nb);
        for (b, verts) in forest.blocks.iter().enumerate() {
            let (role, w0, outside) = match marking.mark_of[b] {
                Some((i, j)) => (Role::Anchor, labels[i][j], cycle[i]),
                None => (Role::Ancillary, NONE, NONE),
            };
            tokens.push(Token {
                vertices: verts.clone(),
                role,
                w0,
                outside,
            });
        }

        let mut relocate: BTreeMap<usize, usize> = BTreeMap::new();
        if let Some(chords) = ip5_violation(labels, &self.cyc_idx) {
            self.stats.ip5_repairs += 1;
            self.stats.ip5_chords[chords - 1] += 1;
            let (beyond, end) = separating_path(cycle, labels, &self.cyc_idx)?;
            for j in beyond {
                if let Some(b) = block_of(labels[0][j]) {
                    if marking.mark_of[b] == Some((0, j)) {
                        relocate.insert(b, end);
                    }
                }
            }
        }

        // token-level p2 edges, as spine node pairs
        let mut level_p2: Vec<(usize, usize)> = Vec::new();
        let mut case4: Vec<(usize, usize)> = Vec::new();
        for i in 0..k {
            let v = cycle[i];
            let lab = &labels[i];
            let is_last = i == k - 1 && !self.free_last[v];
            let profile = VertexProfile {
                interior: lab.len(),
                marked: marking.marked[i],
                is_last,
            };
            let dir = place_cycle_vertex(&profile)?;
            // anchors go right of their vertex, except at a closing last vertex
            let side = if is_last { Side::Left } else { Side::Right };
            self.stats.side_overrides += dir.anchors.iter().filter(|a| a.1 != side).count();
            let eff: Vec<(usize, Side)> = dir.anchors.iter().map(|&(j, _)| (j, side)).collect();
            self.stats.case_counts[dir.case.index()] += 1;
            if i == k - 1 && lab.len() == 3 && depth > 0 {
                self.stats.ip4_inner_violations += 1;
            }
            for (j, &x) in lab.iter().enumerate() {
                if self.cyc_idx[x] != NONE {
                    continue;
                }
                let mut p = dir.pages[j].expect("page for every interior edge");
                if !marking.marked[i][j] {
                    // a further edge into an anchor marked here lands near its left end
                    let b = block_of(x).expect("interior vertex in a block");
                    let right_here = eff
                        .iter()
                        .any(|&(jj, sd)| sd == Side::Right && block_of(lab[jj]) == Some(b));
                    if right_here {
                        p = P2;
                        self.stats.first_vertex_p2 += 1;
                    } else if p == P3 {
                        if let Some((mi, mj)) = marking.mark_of[b] {
                            if mi < i && labels[mi][mj] != x {
                                p = P2;
                                self.stats.foreign_p2 += 1;
                            }
                        }
                    }
                }
                self.set_page(v, x, p);
                if p == P2 {
                    case4.push((v, block_of(x).expect("interior vertex in a block")));
                }
            }
            let mut rights = Vec::new();
            let mut lefts = Vec::new();
            for &(j, side) in &eff {
                let b = block_of(lab[j]).expect("anchor");
                if relocate.contains_key(&b) {
                    continue;
                }
                match side {
                    Side::Right => rights.push(b),
                    Side::Left => lefts.push(b),
                }
            }
            let vnode = self.node(v);
            let mut at = if glued == Glue::Right && i == 0 {
                vnode
            } else {
                self.node(self.tail(v))
            };
            for b in rights {
                at = self.spine.insert_after(at, Item::Token(b));
                node_of_block[b] = at;
            }
            let before = if glued == Glue::Left && i == k - 1 {
                vnode
            } else {
                self.node(self.head(v))
            };
            for b in lefts {
                node_of_block[b] = self.spine.insert_before(before, Item::Token(b));
            }
        }
        for (&b, &end) in &relocate {
            // a path ending at a closing last vertex keeps the anchor inside the window
            node_of_block[b] = if end == cycle[k - 1] && !self.free_last[end] {
                let before = if glued == Glue::Left {
                    self.node(end)
                } else {
                    self.node(self.head(end))
                };
                self.spine.insert_before(before, Item::Token(b))
            } else {
                let at = self.node(self.tail(end));
                self.spine.insert_after(at, Item::Token(b))
            };
        }
        for &(v, b) in &case4 {
            level_p2.push((self.node(v), node_of_block[b]));
        }

        // forest edges
        let adj: Vec<Vec<usize>> = forest
            .adjacency()
            .iter()
            .enumerate()
            .map(|(b, es)| es.iter().map(|&i| forest.forest_edges[i].other_block(b)).collect())
            .collect();
        let is_anchor: Vec<bool> = (0..nb).map(|b| marking.is_anchor(b)).collect();
        let mut forest_edge: BTreeMap<(usize, usize), Edge> = BTreeMap::new();
        for fe in &forest.forest_edges {
            self.set_page(fe.edge.0, fe.edge.1, P2);
            forest_edge.insert((fe.a, fe.b), fe.edge);
            forest_edge.insert((fe.b, fe.a), fe.edge);
            if is_anchor[fe.a] && is_anchor[fe.b] {
                level_p2.push((node_of_block[fe.a], node_of_block[fe.b]));
            }
        }

        // anchored trees
        let trees = anchored_trees(&adj, &is_anchor);
        let mut parent_block = vec![NONE; nb];
        if !trees.is_empty() {
            self.stats.aux_digraphs += 1;
            let ranks = self.spine.ranks();
            let order = order_anchored_trees(&trees, |a| ranks[node_of_block[a]]).inspect_err(|_| {
                self.stats.aux_cycles += 1;
            })?;
            for t in order {
                self.place_tree(
                    &trees[t],
                    &forest,
                    &adj,
                    &entry,
                    &marking,
                    labels,
                    cycle,
                    &is_anchor,
                    &mut node_of_block,
                    &mut parent_block,
                    &mut level_p2,
                )?;
            }
            self.check_sandwich(&trees, &node_of_block);
        }

        // window confinement at token level
        let ranks = self.spine.ranks();
        let (lo, hi) = (ranks[self.node(cycle[0])], ranks[self.node(cycle[k - 1])]);
        if node_of_block.iter().any(|&nd| ranks[nd] <= lo || ranks[nd] >= hi) {
            self.stats.window_failures += 1;
        }

        // expansion
        for b in 0..nb {
            if tokens[b].role == Role::Ancillary {
                let p = parent_block[b];
                let e = forest_edge[&(b, p)];
                let (w0, outside) = if forest.block_of[e.0] == b {
                    (e.0, e.1)
                } else {
                    (e.1, e.0)
                };
                tokens[b].w0 = w0;
                tokens[b].outside = outside;
            }
            self.expand(&tokens[b], node_of_block[b], depth + 1)?;
        }
        Ok(())
    }

    #[allow(clippy::too_many_arguments)]
    fn place_tree(
        &mut self,
        tree: &AnchoredTree,
        forest: &BlockForest,
        adj: &[Vec<usize>],
        entry: &[(usize, usize)],
        marking: &Marking,
        labels: &[Vec<usize>],
        cycle: &[usize],
        is_anchor: &[bool],
        node_of_block: &mut [usize],
        parent_block: &mut [usize],
        level_p2: &mut Vec<(usize, usize)>,
    ) -> Result<(), EmbedError> {
        let ranks = self.spine.ranks();
        let root = *tree
            .anchors
            .iter()
            .min_by_key(|&&a| ranks[node_of_block[a]])
            .ok_or_else(|| invariant("anchored tree", "tree without anchors", format!("{tree:?}")))?;
        let in_tree = |b: usize| tree.ancillaries.binary_search(&b).is_ok() || tree.anchors.binary_search(&b).is_ok();
        let around = |b: usize| -> Vec<usize> {
            let darts = self.block_darts(forest, b, entry[b]);
            let start = if b == root {
                let (i, j) = marking.mark_of[b].expect("root is an anchor");
                let target = (labels[i][j], cycle[i]);
                darts.iter().position(|&d| d == target).map_or(0, |p| p + 1)
            } else {
                0
            };
            let len = darts.len();
            (0..len)
                .map(|t| darts[(start + t) % len].1)
                .filter(|&y| forest.block_of[y] != NONE)
                .map(|y| forest.block_of[y])
                .filter(|&c| in_tree(c) && (b != root || !is_anchor[c]))
                .collect()
        };
        let anchor_pred = |b: usize| is_anchor[b];
        let seq = dfs_order(root, &around, &anchor_pred);
        if seq.len() != tree.ancillaries.len() + tree.anchors.len() {
            return Err(invariant(
                "anchored tree",
                "traversal missed part of the tree",
                format!("{tree:?} reached {seq:?}"),
            ));
        }

        let mut cursor = node_of_block[root];
        for idx in 1..seq.len() {
            let (b, parent) = seq[idx];
            if is_anchor[b] {
                cursor = node_of_block[b];
                continue;
            }
            let parent = parent.expect("non-root has a parent");
            parent_block[b] = parent;
            let ranks = self.spine.ranks();
            let next_anchor = seq[idx + 1..]
                .iter()
                .find(|x| is_anchor[x.0])
                .map(|x| node_of_block[x.0]);
            let mut candidates = vec![cursor];
            match next_anchor {
                Some(na) if ranks[na] > ranks[cursor] => {
                    let mut z = self.spine.next(cursor).expect("anchor to the right");
                    while z != na {
                        candidates.push(z);
                        z = self.spine.next(z).expect("anchor to the right");
                    }
                }
                Some(_) => self.stats.dfs_nonmonotone += 1,
                None => {}
            }
            // neighbours already on the spine
            let mut placed_nb: Vec<usize> = vec![node_of_block[parent]];
            for &c in &adj[b] {
                if c != parent && is_anchor[c] {
                    placed_nb.push(node_of_block[c]);
                }
            }
            let best = if candidates.len() == 1 {
                cursor
            } else {
                let cost = |z: usize| -> usize {
                    let me = 2 * ranks[z] + 1;
                    let mut c = 0;
                    for &u in &placed_nb {
                        let ru = 2 * ranks[u];
                        for &(p, q) in level_p2.iter() {
                            if crosses2(me, ru, 2 * ranks[p], 2 * ranks[q]) {
                                c += 1;
                            }
                        }
                    }
                    c
                };
                let mut best = cursor;
                let mut best_cost = usize::MAX;
                for &z in &candidates {
                    let c = cost(z);
                    if c < best_cost {
                        best_cost = c;
                        best = z;
                    }
                }
                best
            };
            let nd = self.spine.insert_after(best, Item::Token(b));
            node_of_block[b] = nd;
            for &u in &placed_nb {
                level_p2.push((nd, u));
            }
            cursor = nd;
        }
        Ok(())
    }

    /// External darts of block `b` in counterclockwise order, walking its
    /// outer face from the dart `entry`.
    fn block_darts(&self, forest: &BlockForest, b: usize, entry: (usize, usize)) -> Vec<(usize, usize)> {
        let verts = &forest.blocks[b];
        let keep = |x: usize| forest.block_of[x] == b;
        if verts.len() == 1 {
            return external_darts(self.cur, &keep, verts);
        }
        let walk = outer_walk(self.cur, &keep, entry.0, entry.1);
        external_darts(self.cur, &keep, &walk)
    }

    /// Entry darts of the blocks reachable from the cycle through outer
    /// faces, or `None` for blocks lying in an inner face of another block.
    fn entry_darts(&self, forest: &BlockForest, cycle: &[usize], labels: &[Vec<usize>]) -> Vec<Option<(usize, usize)>> {
        let mut entry = vec![None; forest.len()];
        let mut queue = Vec::new();
        for (i, lab) in labels.iter().enumerate() {
            let v = cycle[i];
            for &x in lab {
                let b = forest.block_of[x];
                if b != NONE && entry[b].is_none() {
                    entry[b] = Some((x, v));
                    queue.push(b);
                }
            }
        }
        let mut h = 0;
        while h < queue.len() {
            let b = queue[h];
            h += 1;
            for (x, y) in self.block_darts(forest, b, entry[b].expect("queued")) {
                let c = forest.block_of[y];
                if c != NONE && entry[c].is_none() {
                    entry[c] = Some((y, x));
                    queue.push(c);
                }
            }
        }
        entry
    }

    /// Block forest of the region restricted to blocks visible from the
    /// cycle; hidden vertices are left for the recursion.
    fn visible_forest(&mut self, cycle: &[usize], labels: &[Vec<usize>]) -> (BlockForest, Vec<(usize, usize)>) {
        let forest = contract_bridgeless(self.cur, &self.mask);
        let entry = self.entry_darts(&forest, cycle, labels);
        if entry.iter().all(|e| e.is_some()) {
            return (forest, entry.into_iter().flatten().collect());
        }
        for (b, e) in entry.iter().enumerate() {
            if e.is_none() {
                for &x in &forest.blocks[b] {
                    self.mask[x] = false;
                }
            }
        }
        self.stats.hidden_blocks += entry.iter().filter(|e| e.is_none()).count();
        let forest = contract_bridgeless(self.cur, &self.mask);
        let entry = self.entry_darts(&forest, cycle, labels);
        (forest, entry.into_iter().map(|e| e.expect("visible")).collect())
    }

    fn check_sandwich(&mut self, trees: &[AnchoredTree], node_of_block: &[usize]) {
        let ranks = self.spine.ranks();
        for t in trees {
            let ar: Vec<usize> = t.anchors.iter().map(|&a| ranks[node_of_block[a]]).collect();
            for &x in &t.ancillaries {
                let r = ranks[node_of_block[x]];
                if !(ar.iter().any(|&a| a < r) && ar.iter().any(|&a| a > r)) {
                    self.stats.sandwich_failures += 1;
                }
            }
        }
    }

    fn expand(&mut self, tok: &Token, node: usize, depth: usize) -> Result<(), EmbedError> {
        // a nested boundary runs against the enclosing cycle
        let child = !self.mirrored;
        let g = self.view(child);
        if tok.vertices.len() == 1 {
            self.spine.insert_before(node, Item::Vertex(tok.vertices[0]));
            self.spine.remove(node);
            return Ok(());
        }
        for &x in &tok.vertices {
            self.in_block[x] = tok.w0;
        }
        let id = tok.w0;
        let in_block = &self.in_block;
        let keep = |x: usize| in_block[x] == id;
        let walk = outer_walk(g, &keep, tok.w0, tok.outside);
        let blocked = tok.role == Role::Anchor && {
            let w1 = walk[1];
            let mut w = g.succ(tok.w0, tok.outside);
            let mut any = false;
            while w != w1 {
                if !keep(w) {
                    any = true;
                }
                w = g.succ(tok.w0, w);
            }
            any
        };
        // outgoing walk darts whose preceding angle holds an external edge
        let len = walk.len();
        let loaded: Vec<(usize, usize)> = (0..len)
            .filter(|&i| {
                let (p, v, q) = (walk[(i + len - 1) % len], walk[i], walk[(i + 1) % len]);
                let mut w = g.succ(v, p);
                while w != q {
                    if !keep(w) {
                        return true;
                    }
                    w = g.succ(v, w);
                }
                false
            })
            .map(|i| (walk[i], walk[(i + 1) % len]))
            .collect();
        for &x in &tok.vertices {
            self.in_block[x] = NONE;
        }
        let tree = split_walk(&walk)?;
        if tree.cycles.len() > 1 {
            self.stats.tangency_splits += 1;
        }
        let root = &tree.cycles[0];
        let order: Vec<usize> = match tok.role {
            Role::Anchor if !blocked => root[1..].iter().chain(&root[..1]).copied().collect(),
            _ => root.clone(),
        };
        if blocked {
            self.stats.blocked_expansions += 1;
        }
        for &v in &order {
            self.spine.insert_before(node, Item::Vertex(v));
        }
        self.spine.remove(node);
        let perm = self.child_perm();
        self.set_cycle_pages(&order, perm);
        let mut pushed = vec![Task {
            cycle: order,
            mirrored: child,
            perm,
            depth,
            glued: Glue::None,
        }];
        for c in tree.bfs().into_iter().skip(1) {
            let cyc = &tree.cycles[c];
            let attach = cyc[0];
            let right = cyc.len() < 2 || loaded.contains(&(attach, cyc[1])) || !loaded.iter().any(|d| d.0 == attach);
            let (cycle, glued) = if right {
                let mut at = self.node(self.tail(attach));
                for &v in &cyc[1..] {
                    at = self.spine.insert_after(at, Item::Vertex(v));
                }
                self.glue_tail[attach] = cyc[cyc.len() - 1];
                (cyc.clone(), Glue::Right)
            } else {
                let before = self.node(self.head(attach));
                for &v in &cyc[1..] {
                    self.spine.insert_before(before, Item::Vertex(v));
                }
                self.glue_head[attach] = cyc[1];
                let rotated: Vec<usize> = cyc[1..].iter().chain(&cyc[..1]).copied().collect();
                (rotated, Glue::Left)
            };
            self.set_cycle_pages(&cycle, perm);
            pushed.push(Task {
                cycle,
                mirrored: child,
                perm,
                depth,
                glued,
            });
        }
        // a cycle edge jumping over a glued subcycle leaves the cycle page
        if pushed.len() > 1 {
            let ranks = self.spine.ranks();
            for t in &pushed {
                for w in t.cycle.windows(2) {
                    if ranks[self.node(w[0])].abs_diff(ranks[self.node(w[1])]) > 1 {
                        self.pages.insert(Edge::new(w[0], w[1]), perm[2]);
                        self.stats.jump_edges += 1;
                    }
                }
            }
        }
        while let Some(t) = pushed.pop() {
            self.tasks.push(t);
        }
        Ok(())
    }
}

/// Interleaving test on doubled ranks.
fn crosses2(a: usize, b: usize, c: usize, d: usize) -> bool {
    let (a, b) = (a.min(b), a.max(b));
    let (c, d) = (c.min(d), c.max(d));
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}
