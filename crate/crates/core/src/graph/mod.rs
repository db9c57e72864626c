//! Embedded graphs given by a rotation system, plus the structural
//! decompositions the embedder needs.

mod blocks;
mod bridgeless;
pub(crate) mod faces;
mod parse;

pub use blocks::{biconnected_components, Block};
pub use bridgeless::{contract_bridgeless, BlockForest, ForestEdge};
pub use faces::{choose_outer_face, trace_faces, FaceSet, OuterFace};
pub use parse::{parse_rotation_graph, write_rotation_graph};

use crate::error::GraphError;
use alloc::vec;
use alloc::vec::Vec;

/// Maximum vertex degree accepted by the embedder.
pub const MAX_DEGREE: usize = 5;

/// Unordered edge, always stored with `0 <= lo < hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(pub usize, pub usize);

impl Edge {
    pub fn new(a: usize, b: usize) -> Self {
        if a < b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }

    pub fn other(&self, v: usize) -> usize {
        if v == self.0 {
            self.1
        } else {
            self.0
        }
    }

    pub fn has(&self, v: usize) -> bool {
        self.0 == v || self.1 == v
    }
}

/// A simple graph together with a planar rotation system: `rotation[v]`
/// lists the neighbours of `v` in counterclockwise order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddedGraph {
    rotation: Vec<Vec<usize>>,
}

impl EmbeddedGraph {
    /// Builds a graph and checks symmetry, simplicity and genus 0. The degree
    /// bound is not checked here; see [`EmbeddedGraph::check_max_degree`].
    pub fn new(rotation: Vec<Vec<usize>>) -> Result<Self, GraphError> {
        let g = EmbeddedGraph { rotation };
        g.check_structure()?;
        trace_faces(&g)?;
        Ok(g)
    }

    /// Builds a graph without the genus check. Only symmetry and simplicity
    /// are checked.
    pub fn new_unchecked_genus(rotation: Vec<Vec<usize>>) -> Result<Self, GraphError> {
        let g = EmbeddedGraph { rotation };
        g.check_structure()?;
        Ok(g)
    }

    fn check_structure(&self) -> Result<(), GraphError> {
        let n = self.rotation.len();
        let mut seen = vec![usize::MAX; n];
        for (v, nbrs) in self.rotation.iter().enumerate() {
            for &u in nbrs {
                if u >= n {
                    return Err(GraphError::NeighborOutOfRange { vertex: v, neighbor: u });
                }
                if u == v {
                    return Err(GraphError::SelfLoop { vertex: v });
                }
                if seen[u] == v {
                    return Err(GraphError::DuplicateEdge { vertex: v, neighbor: u });
                }
                seen[u] = v;
            }
        }
        for (v, nbrs) in self.rotation.iter().enumerate() {
            for &u in nbrs {
                if !self.rotation[u].contains(&v) {
                    return Err(GraphError::Asymmetric { from: v, to: u });
                }
            }
        }
        Ok(())
    }

    pub fn check_max_degree(&self, bound: usize) -> Result<(), GraphError> {
        match (0..self.n()).find(|&v| self.degree(v) > bound) {
            Some(v) => Err(GraphError::DegreeTooLarge {
                vertex: v,
                degree: self.degree(v),
            }),
            None => Ok(()),
        }
    }

    pub fn n(&self) -> usize {
        self.rotation.len()
    }

    pub fn m(&self) -> usize {
        self.rotation.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotation[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.rotation.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Neighbours of `v` in counterclockwise order.
    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rotation[u].contains(&v)
    }

    pub fn slot(&self, v: usize, u: usize) -> Option<usize> {
        self.rotation[v].iter().position(|&x| x == u)
    }

    /// Neighbour following `u` counterclockwise around `v`.
    pub fn succ(&self, v: usize, u: usize) -> usize {
        let r = &self.rotation[v];
        let i = self.slot(v, u).expect("succ: not a neighbour");
        r[(i + 1) % r.len()]
    }

    /// Neighbour preceding `u` counterclockwise around `v`.
    pub fn pred(&self, v: usize, u: usize) -> usize {
        let r = &self.rotation[v];
        let i = self.slot(v, u).expect("pred: not a neighbour");
        r[(i + r.len() - 1) % r.len()]
    }

    /// All edges sorted by `(lo, hi)`.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.m());
        for (v, nbrs) in self.rotation.iter().enumerate() {
            for &u in nbrs {
                if v < u {
                    out.push(Edge(v, u));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Connected component label for every vertex, labels in `0..count`.
    pub fn components(&self) -> (Vec<usize>, usize) {
        let n = self.n();
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        let mut stack = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = count;
            stack.push(s);
            while let Some(v) = stack.pop() {
                for &u in &self.rotation[v] {
                    if comp[u] == usize::MAX {
                        comp[u] = count;
                        stack.push(u);
                    }
                }
            }
            count += 1;
        }
        (comp, count)
    }

    pub fn is_connected(&self) -> bool {
        self.components().1 <= 1
    }

    /// Subgraph on `vertices` (in the given order, which becomes the new
    /// labelling) keeping only edges accepted by `keep`. Rotations are
    /// restricted, so planarity is preserved.
    pub fn restrict<F>(&self, vertices: &[usize], mut keep: F) -> (EmbeddedGraph, Vec<usize>)
    where
        F: FnMut(usize, usize) -> bool,
    {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let rotation = vertices
            .iter()
            .map(|&v| {
                self.rotation[v]
                    .iter()
                    .filter(|&&u| index[u] != usize::MAX && keep(v, u))
                    .map(|&u| index[u])
                    .collect()
            })
            .collect();
        (EmbeddedGraph { rotation }, vertices.to_vec())
    }

    /// Relabels vertex `v` as `perm[v]`, keeping rotations.
    pub fn relabel(&self, perm: &[usize]) -> EmbeddedGraph {
        let mut rotation = vec![Vec::new(); self.n()];
        for (v, nbrs) in self.rotation.iter().enumerate() {
            rotation[perm[v]] = nbrs.iter().map(|&u| perm[u]).collect();
        }
        EmbeddedGraph { rotation }
    }

    /// The same graph with every rotation reversed (the mirror embedding).
    pub fn mirrored(&self) -> EmbeddedGraph {
        let rotation = self
            .rotation
            .iter()
            .map(|r| r.iter().rev().copied().collect())
            .collect();
        EmbeddedGraph { rotation }
    }

    pub(crate) fn from_raw(rotation: Vec<Vec<usize>>) -> Self {
        EmbeddedGraph { rotation }
    }

    /// Removes edge `(u, v)` from both rotations. Removing an edge never
    /// invalidates a planar rotation system.
    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.rotation[u].retain(|&x| x != v);
        self.rotation[v].retain(|&x| x != u);
    }
}
