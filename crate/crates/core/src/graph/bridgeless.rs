use super::{Edge, EmbeddedGraph};
use alloc::vec;
use alloc::vec::Vec;

/// A bridge of the interior joining two block-vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ForestEdge {
    pub a: usize,
    pub b: usize,
    pub edge: Edge,
}

impl ForestEdge {
    /// The block-vertex at the other end from `b`.
    pub fn other_block(&self, b: usize) -> usize {
        if self.a == b {
            self.b
        } else {
            self.a
        }
    }
}

/// The interior with every 2-edge-connected component contracted to one
/// block-vertex. The bridges form a forest on the block-vertices.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BlockForest {
    /// Vertices of each block-vertex, in increasing order.
    pub blocks: Vec<Vec<usize>>,
    /// Block-vertex of each original vertex, `usize::MAX` outside the interior.
    pub block_of: Vec<usize>,
    pub forest_edges: Vec<ForestEdge>,
}

impl BlockForest {
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Forest adjacency: for each block-vertex the indices into
    /// `forest_edges` touching it.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.blocks.len()];
        for (i, fe) in self.forest_edges.iter().enumerate() {
            adj[fe.a].push(i);
            adj[fe.b].push(i);
        }
        adj
    }

    /// True when the bridges contain no cycle (union-find check).
    pub fn is_forest(&self) -> bool {
        let mut parent: Vec<usize> = (0..self.blocks.len()).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for fe in &self.forest_edges {
            let (ra, rb) = (find(&mut parent, fe.a), find(&mut parent, fe.b));
            if ra == rb {
                return false;
            }
            parent[ra] = rb;
        }
        true
    }
}

/// Contracts the 2-edge-connected components of the subgraph induced by the
/// vertices with `interior[v] == true`.
pub fn contract_bridgeless(g: &EmbeddedGraph, interior: &[bool]) -> BlockForest {
    let n = g.n();
    let bridges = bridges_within(g, interior);
    let is_bridge = |u: usize, v: usize| bridges.binary_search(&Edge::new(u, v)).is_ok();

    let mut block_of = vec![usize::MAX; n];
    let mut blocks = Vec::new();
    for s in 0..n {
        if !interior[s] || block_of[s] != usize::MAX {
            continue;
        }
        let id = blocks.len();
        let mut members = vec![s];
        block_of[s] = id;
        let mut i = 0;
        while i < members.len() {
            let v = members[i];
            i += 1;
            for &u in g.rotation(v) {
                if interior[u] && block_of[u] == usize::MAX && !is_bridge(u, v) {
                    block_of[u] = id;
                    members.push(u);
                }
            }
        }
        members.sort_unstable();
        blocks.push(members);
    }
    let forest_edges = bridges
        .iter()
        .map(|&e| ForestEdge {
            a: block_of[e.0],
            b: block_of[e.1],
            edge: e,
        })
        .collect();
    BlockForest {
        blocks,
        block_of,
        forest_edges,
    }
}

/// Bridges of the subgraph induced by `interior`, sorted.
pub(crate) fn bridges_within(g: &EmbeddedGraph, interior: &[bool]) -> Vec<Edge> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut time = 0;
    let mut out = Vec::new();
    for root in 0..n {
        if !interior[root] || disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(top) = stack.last_mut() {
            let (v, parent) = (top.0, top.1);
            if top.2 < g.degree(v) {
                let u = g.rotation(v)[top.2];
                top.2 += 1;
                if !interior[u] || u == parent {
                    continue;
                }
                if disc[u] == usize::MAX {
                    disc[u] = time;
                    low[u] = time;
                    time += 1;
                    stack.push((u, v, 0));
                } else {
                    low[v] = low[v].min(disc[u]);
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[v]);
                    if low[v] > disc[parent] {
                        out.push(Edge::new(parent, v));
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}
