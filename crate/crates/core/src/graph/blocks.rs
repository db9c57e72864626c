use super::{Edge, EmbeddedGraph};
use alloc::vec;
use alloc::vec::Vec;

/// One biconnected component (or a single bridge edge).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    /// Sorted vertex list.
    pub vertices: Vec<usize>,
    /// Sorted edge list.
    pub edges: Vec<Edge>,
    /// Cut vertex shared with the parent block in the block-cut tree rooted
    /// at the first block of each connected component; `None` for roots.
    pub parent_cut: Option<usize>,
    pub parent: Option<usize>,
}

impl Block {
    pub fn is_bridge(&self) -> bool {
        self.edges.len() == 1
    }

    /// The block as a standalone graph, labelled by position in `vertices`.
    pub fn subgraph(&self, g: &EmbeddedGraph) -> EmbeddedGraph {
        let edges = &self.edges;
        g.restrict(&self.vertices, |u, v| edges.binary_search(&Edge::new(u, v)).is_ok())
            .0
    }
}

/// Block decomposition by the iterative Hopcroft–Tarjan edge-stack method.
/// Blocks are emitted so that every block appears after its parent in the
/// block-cut tree; isolated vertices produce no block.
pub fn biconnected_components(g: &EmbeddedGraph) -> Vec<Block> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut time = 0;
    let mut edge_stack: Vec<Edge> = Vec::new();
    let mut raw: Vec<(Vec<Edge>, usize)> = Vec::new(); // (edges, articulation/top vertex)

    for root in 0..n {
        if disc[root] != usize::MAX || g.degree(root) == 0 {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        // (vertex, parent, next neighbour slot)
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(top) = stack.last_mut() {
            let (v, parent) = (top.0, top.1);
            if top.2 < g.degree(v) {
                let u = g.rotation(v)[top.2];
                top.2 += 1;
                if u == parent {
                    continue;
                }
                if disc[u] == usize::MAX {
                    edge_stack.push(Edge::new(v, u));
                    disc[u] = time;
                    low[u] = time;
                    time += 1;
                    stack.push((u, v, 0));
                } else if disc[u] < disc[v] {
                    edge_stack.push(Edge::new(v, u));
                    low[v] = low[v].min(disc[u]);
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[v]);
                    if low[v] >= disc[parent] {
                        let stop = Edge::new(parent, v);
                        let mut comp = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            comp.push(e);
                            if e == stop {
                                break;
                            }
                        }
                        raw.push((comp, parent));
                    }
                }
            }
        }
    }

    // Blocks come out children-first; reverse to get parents first, then
    // link each block to the earlier block containing its top vertex.
    raw.reverse();
    let mut blocks: Vec<Block> = Vec::with_capacity(raw.len());
    let mut owner = vec![usize::MAX; n]; // first block containing each vertex
    for (mut edges, top) in raw {
        edges.sort_unstable();
        let mut vertices: Vec<usize> = edges.iter().flat_map(|e| [e.0, e.1]).collect();
        vertices.sort_unstable();
        vertices.dedup();
        let (parent, parent_cut) = if owner[top] != usize::MAX {
            (Some(owner[top]), Some(top))
        } else {
            (None, None)
        };
        let id = blocks.len();
        for &v in &vertices {
            if owner[v] == usize::MAX {
                owner[v] = id;
            }
        }
        blocks.push(Block {
            vertices,
            edges,
            parent_cut,
            parent,
        });
    }
    blocks
}
