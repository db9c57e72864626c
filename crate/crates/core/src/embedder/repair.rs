//! Local repairs: chords at the leftmost cycle vertex, moving a cycle edge
//! to the bottom page, and a final page reassignment for a fixed order.

use crate::book::{BookEmbedding, Page};
use crate::coloring::{color_with, has_k4, Outcome};
use crate::error::EmbedError;
use crate::graph::{Edge, EmbeddedGraph};
use crate::verifier::crosses;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

const NONE: usize = usize::MAX;

/// Search budget for the page reassignment.
pub const REPAIR_BUDGET: u64 = 2_000_000;

/// Number of chords at the first cycle vertex when that count breaks IP-5
/// (closure degree 4 with one chord, or degree 5 with one or two).
/// `cyc_idx[x]` is the cycle index of `x` or `usize::MAX`.
pub fn ip5_violation(labels: &[Vec<usize>], cyc_idx: &[usize]) -> Option<usize> {
    let first = labels.first()?;
    let chords = first.iter().filter(|&&x| cyc_idx[x] != NONE).count();
    match (first.len() + 2, chords) {
        (4, 1) | (5, 1) | (5, 2) => Some(chords),
        _ => None,
    }
}

/// Separating path of chords from the first cycle vertex: start with its
/// chord of smallest subscript, then repeatedly follow the chord to the
/// largest later cycle index. Returns the subscripts at `v1` lying beyond
/// the path (below that chord) and the vertex where the path ends.
pub fn separating_path(
    cycle: &[usize],
    labels: &[Vec<usize>],
    cyc_idx: &[usize],
) -> Result<(Vec<usize>, usize), EmbedError> {
    let first = &labels[0];
    let far = first
        .iter()
        .position(|&x| cyc_idx[x] != NONE)
        .ok_or_else(|| EmbedError::Invariant {
            invariant: "IP-5",
            detail: String::from("no chord at the first cycle vertex"),
            context: format!("cycle {cycle:?}"),
        })?;
    let mut cur = cyc_idx[first[far]];
    loop {
        let next = labels[cur]
            .iter()
            .filter(|&&x| cyc_idx[x] != NONE && cyc_idx[x] > cur)
            .map(|&x| cyc_idx[x])
            .max();
        match next {
            Some(y) => cur = y,
            None => break,
        }
    }
    let beyond = (0..far).filter(|&j| cyc_idx[first[j]] == NONE).collect();
    Ok((beyond, cycle[cur]))
}

fn refuse(detail: &str, context: String) -> EmbedError {
    EmbedError::Invariant {
        invariant: "IP-3",
        detail: String::from(detail),
        context,
    }
}

fn crossings_with(book: &BookEmbedding, pos: &[usize], e: Edge, page: Page) -> usize {
    book.pages
        .iter()
        .filter(|&(&f, &p)| p == page && f != e && crosses(pos, e, f))
        .count()
}

/// Moves the cycle edge `(v, vr)` from page 1 to page 3. When `anchor` is
/// given, that vertex is first moved directly right of `vr`. The move is
/// refused (and nothing changes) if it would add a crossing.
pub fn relocate_to_p3(
    g: &EmbeddedGraph,
    book: &mut BookEmbedding,
    v: usize,
    vr: usize,
    anchor: Option<usize>,
) -> Result<(), EmbedError> {
    let e = Edge::new(v, vr);
    if book.pages.get(&e) != Some(&1) {
        return Err(refuse("edge not on page 1", format!("({v} {vr})")));
    }
    let n = g.n();
    let saved = book.clone();
    let before: usize = {
        let pos = book.positions(n);
        (1..=3).map(|p| count_page(book, &pos, p)).sum()
    };
    if let Some(a) = anchor {
        let at = book
            .order
            .iter()
            .position(|&x| x == a)
            .ok_or_else(|| refuse("anchor not on spine", format!("{a}")))?;
        book.order.remove(at);
        let r = book
            .order
            .iter()
            .position(|&x| x == vr)
            .ok_or_else(|| refuse("vertex not on spine", format!("{vr}")))?;
        book.order.insert(r + 1, a);
    }
    book.pages.insert(e, 3);
    let pos = book.positions(n);
    let after: usize = (1..=3).map(|p| count_page(book, &pos, p)).sum();
    if after > before || crossings_with(book, &pos, e, 3) > 0 {
        *book = saved;
        return Err(refuse("move would create a crossing", format!("({v} {vr})")));
    }
    Ok(())
}

fn count_page(book: &BookEmbedding, pos: &[usize], page: Page) -> usize {
    let es: Vec<Edge> = book.pages.iter().filter(|(_, &p)| p == page).map(|(&e, _)| e).collect();
    let mut c = 0;
    for i in 0..es.len() {
        for j in i + 1..es.len() {
            if crosses(pos, es[i], es[j]) {
                c += 1;
            }
        }
    }
    c
}

/// Same-page crossings for a fixed order.
pub fn conflicts(order: &[usize], pages: &BTreeMap<Edge, Page>) -> usize {
    let n = order.iter().map(|&v| v + 1).max().unwrap_or(0);
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let book = BookEmbedding {
        order: order.to_vec(),
        pages: pages.clone(),
    };
    (1..=3).map(|p| count_page(&book, &pos, p)).sum()
}

/// Reassigns pages for the fixed `order` so that no page has a crossing,
/// preferring the current pages. Returns how many edges changed page.
pub fn repair_pages(order: &[usize], pages: &mut BTreeMap<Edge, Page>) -> Result<usize, EmbedError> {
    let n = order.iter().map(|&v| v + 1).max().unwrap_or(0);
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let edges: Vec<Edge> = pages.keys().copied().collect();
    let pref: Vec<u8> = pages.values().copied().collect();
    // sweep by left endpoint; only edges starting inside another can cross it
    let mut by_left: Vec<usize> = (0..edges.len()).collect();
    let span = |e: Edge| (pos[e.0].min(pos[e.1]), pos[e.0].max(pos[e.1]));
    by_left.sort_by_key(|&i| span(edges[i]));
    let mut adj = vec![Vec::new(); edges.len()];
    let mut bad = 0;
    for (a, &i) in by_left.iter().enumerate() {
        let (l, r) = span(edges[i]);
        for &j in &by_left[a + 1..] {
            let (c, d) = span(edges[j]);
            if c >= r {
                break;
            }
            if l < c && c < r && r < d {
                adj[i].push(j);
                adj[j].push(i);
                if pref[i] == pref[j] {
                    bad += 1;
                }
            }
        }
    }
    if bad == 0 {
        return Ok(0);
    }
    // components of the conflict graph are independent; only those holding a
    // same-page crossing need new pages
    let mut comp = vec![NONE; edges.len()];
    let mut changed = 0;
    for s in 0..edges.len() {
        if comp[s] != NONE {
            continue;
        }
        comp[s] = s;
        let mut members = vec![s];
        let mut i = 0;
        while i < members.len() {
            let x = members[i];
            i += 1;
            for &y in &adj[x] {
                if comp[y] == NONE {
                    comp[y] = s;
                    members.push(y);
                }
            }
        }
        let clash = members.iter().any(|&x| adj[x].iter().any(|&y| pref[x] == pref[y]));
        if !clash {
            continue;
        }
        members.sort_unstable();
        let local = |x: usize| members.binary_search(&x).expect("member");
        let sub: Vec<Vec<usize>> = members
            .iter()
            .map(|&x| adj[x].iter().map(|&y| local(y)).collect())
            .collect();
        if has_k4(&sub) {
            return Err(EmbedError::PagesExhausted { conflicts: bad });
        }
        let sub_pref: Vec<u8> = members.iter().map(|&x| pref[x]).collect();
        match color_with(&sub, 3, Some(&sub_pref), REPAIR_BUDGET) {
            Outcome::Colored(c) => {
                for (k, &x) in members.iter().enumerate() {
                    if c[k] != pref[x] {
                        changed += 1;
                        pages.insert(edges[x], c[k]);
                    }
                }
            }
            _ => return Err(EmbedError::PagesExhausted { conflicts: bad }),
        }
    }
    Ok(changed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verifier::check;
    use alloc::vec;

    fn cyc_idx(n: usize, cycle: &[usize]) -> Vec<usize> {
        let mut c = vec![NONE; n];
        for (i, &v) in cycle.iter().enumerate() {
            c[v] = i;
        }
        c
    }

    #[test]
    fn no_chords_no_violation() {
        let labels = vec![vec![9, 8], vec![], vec![]];
        assert_eq!(ip5_violation(&labels, &cyc_idx(10, &[0, 1, 2])), None);
    }

    #[test]
    fn degree_three_with_chord_is_fine() {
        // 5-cycle, chord (w1,w3), w1 has closure degree 3
        let cycle = [0, 1, 2, 3, 4];
        let labels = vec![vec![2], vec![], vec![0], vec![], vec![]];
        assert_eq!(ip5_violation(&labels, &cyc_idx(5, &cycle)), None);
    }

    #[test]
    fn degree_four_one_chord_violates_and_path_found() {
        let cycle = [0, 1, 2, 3, 4, 5];
        // v1 = 0: interior vertex 9, then chord to 2; 2 has chord to 4
        let labels = vec![vec![9, 2], vec![], vec![0, 4], vec![], vec![2], vec![]];
        let ci = cyc_idx(10, &cycle);
        assert_eq!(ip5_violation(&labels, &ci), Some(1));
        let (beyond, end) = separating_path(&cycle, &labels, &ci).unwrap();
        assert_eq!(beyond, vec![0]);
        assert_eq!(end, 4);
    }

    fn c5_book() -> (EmbeddedGraph, BookEmbedding) {
        let g = EmbeddedGraph::new(vec![vec![1, 4], vec![2, 0], vec![3, 1], vec![4, 2], vec![0, 3]]).unwrap();
        let mut b = BookEmbedding {
            order: vec![0, 1, 2, 3, 4],
            pages: BTreeMap::new(),
        };
        for i in 0..4 {
            b.pages.insert(Edge::new(i, i + 1), 1);
        }
        b.pages.insert(Edge::new(0, 4), 3);
        (g, b)
    }

    #[test]
    fn degree_two_vertex_direct_move() {
        let (g, mut b) = c5_book();
        relocate_to_p3(&g, &mut b, 2, 3, None).unwrap();
        assert_eq!(b.pages[&Edge(2, 3)], 3);
        assert!(check(&g, &b).ok());
    }

    #[test]
    fn degree_three_vertex_moves_its_anchor_first() {
        // C5 plus vertex 5 joined to 2 (marked) and 4
        let g = EmbeddedGraph::new(vec![
            vec![1, 4],
            vec![2, 0],
            vec![3, 5, 1],
            vec![4, 2],
            vec![0, 5, 3],
            vec![4, 2],
        ])
        .unwrap();
        let mut b = BookEmbedding {
            order: vec![0, 1, 2, 5, 3, 4],
            pages: BTreeMap::new(),
        };
        for (u, v, p) in [
            (0, 1, 1),
            (1, 2, 1),
            (2, 3, 1),
            (3, 4, 1),
            (0, 4, 3),
            (2, 5, 2),
            (4, 5, 3),
        ] {
            b.pages.insert(Edge::new(u, v), p);
        }
        assert!(check(&g, &b).ok());
        assert!(relocate_to_p3(&g, &mut b.clone(), 2, 3, None).is_err());
        relocate_to_p3(&g, &mut b, 2, 3, Some(5)).unwrap();
        assert_eq!(b.order, vec![0, 1, 2, 3, 5, 4]);
        assert_eq!(b.pages[&Edge(2, 3)], 3);
        assert!(check(&g, &b).ok());
    }

    #[test]
    fn refuses_off_page_edge() {
        let (g, mut b) = c5_book();
        assert!(relocate_to_p3(&g, &mut b, 0, 4, None).is_err());
    }

    #[test]
    fn repair_fixes_k4_single_page() {
        let order = [0, 1, 2, 3];
        let mut pages: BTreeMap<Edge, Page> = [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2), (1, 3)]
            .iter()
            .map(|&(u, v)| (Edge::new(u, v), 1))
            .collect();
        assert_eq!(conflicts(&order, &pages), 1);
        let changed = repair_pages(&order, &mut pages).unwrap();
        assert_eq!(changed, 1);
        assert_eq!(conflicts(&order, &pages), 0);
    }
}
