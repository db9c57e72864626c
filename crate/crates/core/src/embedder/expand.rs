//! Boundary walks of block-vertices and their split into simple subcycles.

use crate::error::EmbedError;
use crate::graph::EmbeddedGraph;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

/// Next neighbour of `v` after `u` (counterclockwise) that satisfies `keep`.
fn succ_in(g: &EmbeddedGraph, v: usize, u: usize, keep: &dyn Fn(usize) -> bool) -> usize {
    let mut w = g.succ(v, u);
    while !keep(w) {
        w = g.succ(v, w);
    }
    w
}

/// Closed walk around the outer face of the subgraph induced by `keep`,
/// starting at `w0` in the angle that contains the edge `(w0, outside)`.
/// The walk lists `w0` first and does not repeat it at the end.
pub fn outer_walk(g: &EmbeddedGraph, keep: &dyn Fn(usize) -> bool, w0: usize, outside: usize) -> Vec<usize> {
    let q = succ_in(g, w0, outside, keep);
    let start = (w0, q);
    let mut walk = vec![w0];
    let (mut u, mut v) = start;
    loop {
        let w = succ_in(g, v, u, keep);
        if (v, w) == start {
            break;
        }
        walk.push(v);
        u = v;
        v = w;
        assert!(walk.len() <= 2 * g.m() + 1, "runaway boundary walk");
    }
    walk
}

/// Edges leaving the block, in counterclockwise order around it, as
/// `(inside, outside)` darts. A single vertex yields its rotation.
pub fn external_darts(g: &EmbeddedGraph, keep: &dyn Fn(usize) -> bool, walk: &[usize]) -> Vec<(usize, usize)> {
    if walk.len() == 1 {
        let x = walk[0];
        return g.rotation(x).iter().map(|&y| (x, y)).collect();
    }
    let len = walk.len();
    let mut out = Vec::new();
    for i in 0..len {
        let (p, v, q) = (walk[(i + len - 1) % len], walk[i], walk[(i + 1) % len]);
        let mut w = g.succ(v, p);
        while w != q {
            if !keep(w) {
                out.push((v, w));
            }
            w = g.succ(v, w);
        }
    }
    out
}

/// Simple subcycles of a closed boundary walk, tangent at single vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TangencyTree {
    /// Each subcycle in walk orientation. The root comes first and starts at
    /// `w0`; every other subcycle starts at the vertex it shares with its
    /// parent.
    pub cycles: Vec<Vec<usize>>,
    pub parent: Vec<Option<usize>>,
}

impl TangencyTree {
    /// Subcycles in breadth-first order from the root.
    pub fn bfs(&self) -> Vec<usize> {
        let mut out = vec![0];
        let mut i = 0;
        while i < out.len() {
            let c = out[i];
            for (j, p) in self.parent.iter().enumerate() {
                if *p == Some(c) {
                    out.push(j);
                }
            }
            i += 1;
        }
        out
    }
}

fn breach(detail: &str, walk: &[usize]) -> EmbedError {
    EmbedError::Invariant {
        invariant: "tangency tree",
        detail: String::from(detail),
        context: format!("boundary walk {walk:?}"),
    }
}

/// Splits a closed walk at repeated vertices.
pub fn split_walk(walk: &[usize]) -> Result<TangencyTree, EmbedError> {
    let mut stack: Vec<usize> = Vec::new();
    let mut popped: Vec<Vec<usize>> = Vec::new();
    for &v in walk {
        if let Some(at) = stack.iter().position(|&x| x == v) {
            let cyc: Vec<usize> = stack[at..].to_vec();
            stack.truncate(at + 1);
            if cyc.len() < 3 {
                return Err(breach("subcycle shorter than three", walk));
            }
            popped.push(cyc);
        } else {
            stack.push(v);
        }
    }
    if stack.len() < 3 {
        return Err(breach("root subcycle shorter than three", walk));
    }
    let mut cycles = Vec::with_capacity(popped.len() + 1);
    cycles.push(stack);
    popped.reverse();
    cycles.extend(popped);

    let mut count: alloc::collections::BTreeMap<usize, usize> = Default::default();
    for c in &cycles {
        for &v in c {
            *count.entry(v).or_default() += 1;
        }
    }
    if count.values().any(|&k| k > 2) {
        return Err(breach("vertex on more than two subcycles", walk));
    }
    let mut parent = vec![None; cycles.len()];
    for j in 1..cycles.len() {
        let c = cycles[j][0];
        let p = (0..j)
            .find(|&i| cycles[i].contains(&c))
            .ok_or_else(|| breach("subcycle not attached to an earlier one", walk))?;
        parent[j] = Some(p);
        for (i, other) in cycles.iter().enumerate().take(j) {
            if i != p && other.iter().filter(|v| cycles[j].contains(v)).count() > 0 {
                return Err(breach("subcycles share more than one tangency", walk));
            }
        }
        if cycles[p].iter().filter(|v| cycles[j].contains(v)).count() > 1 {
            return Err(breach("subcycles share more than one vertex", walk));
        }
    }
    Ok(TangencyTree { cycles, parent })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generator::canned;

    #[test]
    fn triangle_walk_is_simple() {
        let g = canned("triangle").unwrap();
        let all = |_: usize| true;
        // no outside edge exists; start from the angle after neighbour 1
        let w = outer_walk(&g, &all, 0, 1);
        assert_eq!(w.len(), 3);
        let t = split_walk(&w).unwrap();
        assert_eq!(t.cycles.len(), 1);
    }

    #[test]
    fn bowtie_boundary_has_two_subcycles() {
        let g = canned("bowtie").unwrap();
        let all = |_: usize| true;
        let w = outer_walk(&g, &all, 1, 2);
        assert_eq!(w.len(), 6);
        let t = split_walk(&w).unwrap();
        assert_eq!(t.cycles.len(), 2);
        assert_eq!(t.parent, vec![None, Some(0)]);
        assert_eq!(t.bfs(), vec![0, 1]);
        assert_eq!(t.cycles[1][0], 0);
    }

    #[test]
    fn walk_from_cut_vertex() {
        let t = split_walk(&[0, 1, 2, 0, 3, 4]).unwrap();
        assert_eq!(t.cycles.len(), 2);
        assert!(t.cycles.iter().all(|c| c.contains(&0)));
    }

    #[test]
    fn external_darts_of_single_vertex() {
        let g = canned("k4").unwrap();
        let keep = |v: usize| v == 0;
        let d = external_darts(&g, &keep, &[0]);
        assert_eq!(d.len(), 3);
    }
}
