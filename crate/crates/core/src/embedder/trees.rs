//! Anchored trees, their precedence digraph, and DFS visiting order.

use crate::error::EmbedError;
use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

/// A tree of ancillaries together with the anchors adjacent to it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnchoredTree {
    pub ancillaries: Vec<usize>,
    pub anchors: Vec<usize>,
}

/// Groups ancillaries of the block forest `adj` into trees and attaches
/// their neighbouring anchors. Trees are listed by smallest ancillary.
pub fn anchored_trees(adj: &[Vec<usize>], is_anchor: &[bool]) -> Vec<AnchoredTree> {
    let n = adj.len();
    let mut comp = vec![usize::MAX; n];
    let mut out = Vec::new();
    for s in 0..n {
        if is_anchor[s] || comp[s] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut anc = Vec::new();
        let mut anchors = BTreeSet::new();
        let mut stack = vec![s];
        comp[s] = id;
        while let Some(b) = stack.pop() {
            anc.push(b);
            for &c in &adj[b] {
                if is_anchor[c] {
                    anchors.insert(c);
                } else if comp[c] == usize::MAX {
                    comp[c] = id;
                    stack.push(c);
                }
            }
        }
        anc.sort_unstable();
        out.push(AnchoredTree {
            ancillaries: anc,
            anchors: anchors.into_iter().collect(),
        });
    }
    out
}

/// Precedence among anchored trees: arc `s -> t` when tree `s` has an
/// anchor strictly between two consecutive anchors of tree `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuxDigraph {
    pub arcs: Vec<Vec<usize>>,
}

impl AuxDigraph {
    /// `rank(a)` is the spine rank of anchor `a`.
    pub fn build<F: Fn(usize) -> usize>(trees: &[AnchoredTree], rank: F) -> Self {
        let ranks: Vec<Vec<usize>> = trees
            .iter()
            .map(|t| {
                let mut r: Vec<usize> = t.anchors.iter().map(|&a| rank(a)).collect();
                r.sort_unstable();
                r
            })
            .collect();
        let mut arcs = vec![Vec::new(); trees.len()];
        for (t, rt) in ranks.iter().enumerate() {
            let (Some(&lo), Some(&hi)) = (rt.first(), rt.last()) else {
                continue;
            };
            for (s, rs) in ranks.iter().enumerate() {
                if s == t {
                    continue;
                }
                let inside = rs.iter().any(|&x| lo < x && x < hi && rt.binary_search(&x).is_err());
                if inside {
                    arcs[s].push(t);
                }
            }
        }
        AuxDigraph { arcs }
    }

    /// Kahn's algorithm; among available trees the one with the smallest key
    /// goes first. `Err` carries the trees left on a cycle.
    pub fn topo_order(&self, key: &[usize]) -> Result<Vec<usize>, Vec<usize>> {
        let n = self.arcs.len();
        let mut indeg = vec![0usize; n];
        for a in &self.arcs {
            for &t in a {
                indeg[t] += 1;
            }
        }
        let mut ready: BTreeSet<(usize, usize)> = (0..n).filter(|&t| indeg[t] == 0).map(|t| (key[t], t)).collect();
        let mut out = Vec::with_capacity(n);
        while let Some(&(k, s)) = ready.iter().next() {
            ready.remove(&(k, s));
            out.push(s);
            for &t in &self.arcs[s] {
                indeg[t] -= 1;
                if indeg[t] == 0 {
                    ready.insert((key[t], t));
                }
            }
        }
        if out.len() == n {
            Ok(out)
        } else {
            Err((0..n).filter(|&t| indeg[t] > 0).collect())
        }
    }
}

/// Processing order of the anchored trees for the current anchor ranks.
pub fn order_anchored_trees<F: Fn(usize) -> usize>(trees: &[AnchoredTree], rank: F) -> Result<Vec<usize>, EmbedError> {
    let key: Vec<usize> = trees
        .iter()
        .map(|t| t.anchors.iter().map(|&a| rank(a)).min().unwrap_or(usize::MAX))
        .collect();
    AuxDigraph::build(trees, &rank)
        .topo_order(&key)
        .map_err(|stuck| EmbedError::Invariant {
            invariant: "auxiliary digraph acyclic",
            detail: String::from("precedence among anchored trees has a cycle"),
            context: format!("trees on the cycle: {stuck:?}"),
        })
}

/// DFS over an anchored tree. `around[b]` lists the tree neighbours of `b`
/// in counterclockwise order; for the root it already starts at the first
/// child. Anchors other than the root are leaves. Returns `(b, parent)` in
/// visiting order.
pub fn dfs_order(
    root: usize,
    around: &dyn Fn(usize) -> Vec<usize>,
    is_anchor: &dyn Fn(usize) -> bool,
) -> Vec<(usize, Option<usize>)> {
    let mut out = vec![(root, None)];
    let mut seen = BTreeSet::from([root]);
    // frames: (block, neighbours still to try, next index)
    let mut stack: Vec<(usize, Vec<usize>, usize)> = vec![(root, around(root), 0)];
    while let Some(top) = stack.last_mut() {
        let b = top.0;
        if top.2 >= top.1.len() {
            stack.pop();
            continue;
        }
        let c = top.1[top.2];
        top.2 += 1;
        if !seen.insert(c) {
            continue;
        }
        out.push((c, Some(b)));
        if !is_anchor(c) {
            let nb = around(c);
            let at = nb.iter().position(|&x| x == b).unwrap_or(0);
            let rotated: Vec<usize> = nb[at + 1..].iter().chain(&nb[..at]).copied().collect();
            stack.push((c, rotated, 0));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn star_with_two_anchors() {
        // 0,2 anchors, 1 ancillary
        let adj = vec![vec![1], vec![0, 2], vec![1]];
        let t = anchored_trees(&adj, &[true, false, true]);
        assert_eq!(
            t,
            vec![AnchoredTree {
                ancillaries: vec![1],
                anchors: vec![0, 2]
            }]
        );
    }

    #[test]
    fn nested_tree_goes_first() {
        let trees = vec![
            AnchoredTree {
                ancillaries: vec![10],
                anchors: vec![0, 3],
            },
            AnchoredTree {
                ancillaries: vec![11],
                anchors: vec![1, 2],
            },
        ];
        let order = order_anchored_trees(&trees, |a| a).unwrap();
        assert_eq!(order, vec![1, 0]);
    }

    #[test]
    fn single_tree_singleton() {
        let trees = vec![AnchoredTree {
            ancillaries: vec![5],
            anchors: vec![0, 1],
        }];
        assert_eq!(order_anchored_trees(&trees, |a| a).unwrap(), vec![0]);
    }

    #[test]
    fn interleaving_trees_are_a_cycle() {
        let trees = vec![
            AnchoredTree {
                ancillaries: vec![10],
                anchors: vec![0, 2],
            },
            AnchoredTree {
                ancillaries: vec![11],
                anchors: vec![1, 3],
            },
        ];
        assert!(order_anchored_trees(&trees, |a| a).is_err());
    }

    #[test]
    fn disjoint_trees_by_position() {
        let trees = vec![
            AnchoredTree {
                ancillaries: vec![10],
                anchors: vec![4, 5],
            },
            AnchoredTree {
                ancillaries: vec![11],
                anchors: vec![0, 1],
            },
        ];
        assert_eq!(order_anchored_trees(&trees, |a| a).unwrap(), vec![1, 0]);
    }

    #[test]
    fn dfs_follows_rotation() {
        // anchor 0 -> ancillary 1 -> {anchor 2, ancillary 3 -> anchor 4}
        let around = |b: usize| -> Vec<usize> {
            match b {
                0 => vec![1],
                1 => vec![0, 3, 2],
                3 => vec![1, 4],
                _ => vec![],
            }
        };
        let anchor = |b: usize| matches!(b, 0 | 2 | 4);
        let order: Vec<usize> = dfs_order(0, &around, &anchor).into_iter().map(|x| x.0).collect();
        assert_eq!(order, vec![0, 1, 3, 4, 2]);
    }
}
