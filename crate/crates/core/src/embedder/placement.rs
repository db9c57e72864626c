//! Per-cycle-vertex placement rules.
//!
//! A cycle vertex `v` sees up to three interior edges `e1, e2, e3` (in
//! rotation order starting after the cycle edge to its successor). Some of
//! them are marked, each marked edge leading to a distinct anchor. The rule
//! table decides on which side of `v` each such anchor goes and which page
//! each `ej` uses.

use crate::book::Page;
use crate::error::EmbedError;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

pub const P1: Page = 1;
pub const P2: Page = 2;
pub const P3: Page = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// Classification tuple of a cycle vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VertexProfile {
    /// Interior edges at `v` (closure degree minus two), 0..=3.
    pub interior: usize,
    /// `marked[j]`: whether `e(j+1)` is marked.
    pub marked: [bool; 3],
    /// `v` is the last cycle vertex `vk`.
    pub is_last: bool,
}

impl VertexProfile {
    pub fn mark_count(&self) -> usize {
        self.marked[..self.interior].iter().filter(|&&m| m).count()
    }
}

/// Which of the four placement cases fired.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PlacementCase {
    /// Three marked edges.
    Three,
    /// Two marked edges.
    Two,
    /// One marked edge.
    One,
    /// No marked edge at a vertex with interior edges.
    Unmarked,
    /// Nothing inside the cycle at this vertex.
    Bare,
}

impl PlacementCase {
    pub fn index(self) -> usize {
        match self {
            PlacementCase::Three => 0,
            PlacementCase::Two => 1,
            PlacementCase::One => 2,
            PlacementCase::Unmarked => 3,
            PlacementCase::Bare => 4,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Directive {
    pub case: PlacementCase,
    /// `(j, side)` for every marked `e(j+1)`, listed so that anchors on the
    /// same side appear in their left-to-right order.
    pub anchors: Vec<(usize, Side)>,
    /// Page of `e(j+1)`; `None` beyond the interior degree.
    pub pages: [Option<Page>; 3],
}

fn pages(list: &[Page]) -> [Option<Page>; 3] {
    let mut out = [None; 3];
    for (slot, &p) in out.iter_mut().zip(list) {
        *slot = Some(p);
    }
    out
}

fn unclassifiable(p: &VertexProfile) -> EmbedError {
    EmbedError::Invariant {
        invariant: "placement",
        detail: String::from("unclassifiable cycle vertex"),
        context: format!("interior={} marked={:?} is_last={}", p.interior, p.marked, p.is_last),
    }
}

/// The rule table.
pub fn place_cycle_vertex(p: &VertexProfile) -> Result<Directive, EmbedError> {
    use Side::{Left, Right};
    let t = p.interior;
    if t > 3 {
        return Err(unclassifiable(p));
    }
    let m = &p.marked;
    let d = |case, anchors: &[(usize, Side)], pg: &[Page]| Directive {
        case,
        anchors: anchors.to_vec(),
        pages: pages(pg),
    };
    let dir = match (p.mark_count(), t) {
        (_, 0) => d(PlacementCase::Bare, &[], &[]),
        (0, _) => d(PlacementCase::Unmarked, &[], &[P2, P2, P2][..t]),
        (3, 3) => d(
            PlacementCase::Three,
            &[(0, Right), (1, Right), (2, Right)],
            &[P3, P3, P3],
        ),
        (2, 2) => {
            let side = if p.is_last { Left } else { Right };
            d(PlacementCase::Two, &[(0, side), (1, side)], &[P3, P3])
        }
        (2, 3) => {
            let anchors: &[(usize, Side)] = match (m[0], m[1], m[2]) {
                (false, true, true) => &[(1, Left), (2, Left)],
                (true, false, true) => &[(0, Right), (2, Left)],
                (true, true, false) => &[(0, Right), (1, Right)],
                _ => return Err(unclassifiable(p)),
            };
            d(PlacementCase::Two, anchors, &[P3, P3, P3])
        }
        (1, 1) => {
            let side = if p.is_last { Left } else { Right };
            d(PlacementCase::One, &[(0, side)], &[P3])
        }
        (1, 2) => {
            if p.is_last {
                if m[0] {
                    d(PlacementCase::One, &[(0, Left)], &[P3, P2])
                } else {
                    d(PlacementCase::One, &[(1, Left)], &[P3, P3])
                }
            } else if m[0] {
                d(PlacementCase::One, &[(0, Right)], &[P3, P3])
            } else {
                d(PlacementCase::One, &[(1, Left)], &[P3, P3])
            }
        }
        (1, 3) => {
            if m[0] {
                d(PlacementCase::One, &[(0, Right)], &[P3, P3, P3])
            } else if m[1] {
                d(PlacementCase::One, &[(1, Left)], &[P3, P3, P2])
            } else {
                d(PlacementCase::One, &[(2, Left)], &[P3, P3, P3])
            }
        }
        _ => return Err(unclassifiable(p)),
    };
    Ok(dir)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn prof(interior: usize, marked: [bool; 3], is_last: bool) -> VertexProfile {
        VertexProfile {
            interior,
            marked,
            is_last,
        }
    }

    #[test]
    fn three_marks_all_right_on_p3() {
        let d = place_cycle_vertex(&prof(3, [true; 3], false)).unwrap();
        assert_eq!(d.case, PlacementCase::Three);
        assert_eq!(d.anchors, vec![(0, Side::Right), (1, Side::Right), (2, Side::Right)]);
        assert_eq!(d.pages, [Some(P3); 3]);
    }

    #[test]
    fn two_marks_deg5_second_and_third_left() {
        let d = place_cycle_vertex(&prof(3, [false, true, true], false)).unwrap();
        assert_eq!(d.anchors, vec![(1, Side::Left), (2, Side::Left)]);
    }

    #[test]
    fn one_mark_middle_deg5() {
        let d = place_cycle_vertex(&prof(3, [false, true, false], false)).unwrap();
        assert_eq!(d.case, PlacementCase::One);
        assert_eq!(d.anchors, vec![(1, Side::Left)]);
        assert_eq!(d.pages, [Some(P3), Some(P3), Some(P2)]);
    }

    #[test]
    fn last_vertex_deg4_first_marked() {
        let d = place_cycle_vertex(&prof(2, [true, false, false], true)).unwrap();
        assert_eq!(d.anchors, vec![(0, Side::Left)]);
        assert_eq!(d.pages, [Some(P3), Some(P2), None]);
    }

    #[test]
    fn unmarked_goes_to_p2() {
        let d = place_cycle_vertex(&prof(1, [false; 3], false)).unwrap();
        assert_eq!(d.case, PlacementCase::Unmarked);
        assert_eq!(d.pages, [Some(P2), None, None]);
        let d = place_cycle_vertex(&prof(0, [false; 3], false)).unwrap();
        assert_eq!(d.case, PlacementCase::Bare);
    }

    #[test]
    fn every_profile_is_classified() {
        for t in 0..=3 {
            for bits in 0..8u8 {
                let marked = [bits & 1 != 0, bits & 2 != 0, bits & 4 != 0];
                if marked[t..].iter().any(|&b| b) {
                    continue;
                }
                for is_last in [false, true] {
                    let p = prof(t, marked, is_last);
                    let d = place_cycle_vertex(&p).unwrap();
                    assert_eq!(d.anchors.len(), p.mark_count());
                    assert_eq!(d.pages.iter().flatten().count(), t);
                }
            }
        }
    }
}
