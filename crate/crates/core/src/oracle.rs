//! Exact page number for small graphs.
//!
//! For a fixed order the page number is the chromatic number of the conflict
//! graph (edges adjacent iff they interleave). Over orders we enumerate
//! permutations with vertex 0 pinned first (crossing depends only on the
//! circular order) and reflections pruned, cutting branches whose partial
//! conflict graph already needs as many pages as the best order found.

use crate::book::{BookEmbedding, Page};
use crate::coloring::{chromatic_number, color_with, Outcome};
use crate::graph::{Edge, EmbeddedGraph};
use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

pub const DEFAULT_LIMIT: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub min_pages: usize,
    pub witness: BookEmbedding,
    /// Search nodes visited.
    pub explored: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleError {
    TooLarge { n: usize, limit: usize },
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::TooLarge { n, limit } => {
                write!(f, "instance too large for the oracle: n={n} > limit {limit}")
            }
        }
    }
}

fn interleave(pos: &[usize], e: Edge, f: Edge) -> bool {
    let (a, b) = (pos[e.0].min(pos[e.1]), pos[e.0].max(pos[e.1]));
    let (c, d) = (pos[f.0].min(pos[f.1]), pos[f.0].max(pos[f.1]));
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

fn conflict_graph(pos: &[usize], edges: &[Edge]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); edges.len()];
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            if interleave(pos, edges[i], edges[j]) {
                adj[i].push(j);
                adj[j].push(i);
            }
        }
    }
    adj
}

/// Minimum pages for a fixed order, with an optimal page assignment.
pub fn min_pages_fixed_order(order: &[usize], edges: &[Edge]) -> (usize, BTreeMap<Edge, Page>) {
    let n = order.iter().copied().max().map_or(0, |m| m + 1);
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let adj = conflict_graph(&pos, edges);
    let (k, colors) = chromatic_number(&adj);
    let pages = edges.iter().zip(colors).map(|(&e, c)| (e, c)).collect();
    (k, pages)
}

struct Search<'a> {
    g: &'a EmbeddedGraph,
    order: Vec<usize>,
    pos: Vec<usize>,
    closed: Vec<Edge>,
    adj: Vec<Vec<usize>>,
    best: usize,
    best_order: Vec<usize>,
    explored: u64,
}

impl Search<'_> {
    fn feasible(&self, k: usize) -> bool {
        matches!(color_with(&self.adj, k, None, u64::MAX), Outcome::Colored(_))
    }

    fn descend(&mut self) {
        self.explored += 1;
        let n = self.g.n();
        if self.best <= 1 {
            return;
        }
        if self.order.len() == n {
            if n >= 3 && self.order[n - 1] < self.order[1] {
                return; // reflection of an order already enumerated
            }
            let (k, _) = chromatic_number(&self.adj);
            if k < self.best {
                self.best = k;
                self.best_order = self.order.clone();
            }
            return;
        }
        for v in 1..n {
            if self.pos[v] != usize::MAX {
                continue;
            }
            let p = self.order.len();
            self.pos[v] = p;
            self.order.push(v);
            let before = self.closed.len();
            let mut new_conflict = false;
            for &u in self.g.rotation(v) {
                if self.pos[u] == usize::MAX || u == v {
                    continue;
                }
                let e = Edge::new(u, v);
                let id = self.closed.len();
                self.adj.push(Vec::new());
                for j in 0..id {
                    if interleave(&self.pos, e, self.closed[j]) {
                        self.adj[id].push(j);
                        self.adj[j].push(id);
                        new_conflict = true;
                    }
                }
                self.closed.push(e);
            }
            if !new_conflict || self.feasible(self.best - 1) {
                self.descend();
            }
            // undo
            while self.closed.len() > before {
                let id = self.closed.len() - 1;
                for j in core::mem::take(&mut self.adj[id]) {
                    self.adj[j].retain(|&x| x != id);
                }
                self.adj.pop();
                self.closed.pop();
            }
            self.order.pop();
            self.pos[v] = usize::MAX;
            if self.best <= 1 {
                return;
            }
        }
    }
}

/// Exact page number of `g` by branch and bound over spine orders.
pub fn min_pages(g: &EmbeddedGraph, limit: usize) -> Result<OracleResult, OracleError> {
    let n = g.n();
    if n > limit {
        return Err(OracleError::TooLarge { n, limit });
    }
    let edges = g.edges();
    let identity: Vec<usize> = (0..n).collect();
    if edges.is_empty() {
        return Ok(OracleResult {
            min_pages: 0,
            witness: BookEmbedding {
                order: identity,
                pages: BTreeMap::new(),
            },
            explored: 1,
        });
    }
    let (start, _) = min_pages_fixed_order(&identity, &edges);
    let mut s = Search {
        g,
        order: vec![0],
        pos: {
            let mut p = vec![usize::MAX; n];
            p[0] = 0;
            p
        },
        closed: Vec::new(),
        adj: Vec::new(),
        best: start,
        best_order: identity,
        explored: 0,
    };
    s.descend();
    let (k, pages) = min_pages_fixed_order(&s.best_order, &edges);
    debug_assert_eq!(k, s.best);
    Ok(OracleResult {
        min_pages: k,
        witness: BookEmbedding {
            order: s.best_order,
            pages,
        },
        explored: s.explored,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generator::canned;
    use crate::verifier::check;

    #[test]
    fn cycle_order_needs_one_page() {
        let edges = [Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(0, 3)];
        assert_eq!(min_pages_fixed_order(&[0, 1, 2, 3], &edges).0, 1);
    }

    #[test]
    fn perfect_matching_all_crossing() {
        for k in 1..=5 {
            let order: Vec<usize> = (0..2 * k).collect();
            let edges: Vec<Edge> = (0..k).map(|i| Edge(i, i + k)).collect();
            assert_eq!(min_pages_fixed_order(&order, &edges).0, k);
        }
    }

    #[test]
    fn small_known_page_numbers() {
        for (name, expected) in [("c6", 1), ("k4", 2), ("triangle", 1), ("w5", 2)] {
            let g = canned(name).unwrap();
            let r = min_pages(&g, DEFAULT_LIMIT).unwrap();
            assert_eq!(r.min_pages, expected, "{name}");
            assert!(check(&g, &r.witness).ok());
            assert_eq!(r.witness.page_count(), expected);
        }
    }

    #[test]
    fn too_large_rejected() {
        let g = canned("icosahedron").unwrap();
        assert_eq!(min_pages(&g, 10), Err(OracleError::TooLarge { n: 12, limit: 10 }));
    }
}
