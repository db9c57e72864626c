//! Marked edges: each anchor gets exactly one edge to its leftmost cycle
//! neighbour, the one with the largest subscript there.

use crate::error::EmbedError;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Marking {
    /// `marked[i][j]`: edge `e(j+1)` at cycle vertex `i` is marked.
    pub marked: Vec<[bool; 3]>,
    /// Per block-vertex: `(cycle index, subscript)` of its marked edge, or
    /// `None` for ancillaries.
    pub mark_of: Vec<Option<(usize, usize)>>,
}

impl Marking {
    pub fn is_anchor(&self, b: usize) -> bool {
        self.mark_of[b].is_some()
    }

    pub fn anchor_count(&self) -> usize {
        self.mark_of.iter().filter(|m| m.is_some()).count()
    }
}

/// `labels[i]` lists the interior neighbours of cycle vertex `i` as
/// `e1, e2, ..`; `block_of(x)` gives the block-vertex of an interior vertex
/// (`None` for cycle vertices, i.e. chords).
pub fn mark_edges<F>(labels: &[Vec<usize>], block_of: F, blocks: usize) -> Result<Marking, EmbedError>
where
    F: Fn(usize) -> Option<usize>,
{
    let mut first: Vec<Option<usize>> = vec![None; blocks];
    for (i, lab) in labels.iter().enumerate() {
        if lab.len() > 3 {
            return Err(EmbedError::Invariant {
                invariant: "degree",
                detail: String::from("cycle vertex with more than three interior edges"),
                context: format!("cycle index {i}, {} interior edges", lab.len()),
            });
        }
        for &x in lab {
            if let Some(b) = block_of(x) {
                first[b].get_or_insert(i);
            }
        }
    }
    let mut marked = vec![[false; 3]; labels.len()];
    let mut mark_of = vec![None; blocks];
    for (b, f) in first.iter().enumerate() {
        let Some(i) = *f else { continue };
        let j = labels[i]
            .iter()
            .rposition(|&x| block_of(x) == Some(b))
            .expect("first neighbour recorded");
        marked[i][j] = true;
        mark_of[b] = Some((i, j));
    }
    Ok(Marking { marked, mark_of })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    // interior vertices 10.. map to block (x - 10); cycle vertices below 10
    fn blk(x: usize) -> Option<usize> {
        x.checked_sub(10)
    }

    #[test]
    fn unique_candidate_is_marked() {
        let labels = vec![vec![], vec![3, 10], vec![10]];
        let m = mark_edges(&labels, blk, 1).unwrap();
        assert_eq!(m.mark_of[0], Some((1, 1)));
        assert_eq!(m.marked[1], [false, true, false]);
        assert_eq!(m.marked[2], [false; 3]);
    }

    #[test]
    fn largest_subscript_wins() {
        // block 0 owns vertices 10 and 11 here
        let labels = vec![vec![10, 4, 11]];
        let f = |x: usize| match x {
            10 | 11 => Some(0),
            _ => None,
        };
        let m = mark_edges(&labels, f, 1).unwrap();
        assert_eq!(m.mark_of[0], Some((0, 2)));
    }

    #[test]
    fn one_mark_per_anchor() {
        let labels = vec![vec![10], vec![11], vec![]];
        let m = mark_edges(&labels, blk, 3).unwrap();
        assert_eq!(m.anchor_count(), 2);
        assert!(!m.is_anchor(2));
        let total: usize = m.marked.iter().map(|r| r.iter().filter(|&&b| b).count()).sum();
        assert_eq!(total, 2);
    }
}
