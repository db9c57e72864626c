//! Independent checker for book embeddings.
//!
//! Deliberately naive: every pair of same-page edges is compared with the
//! strict interleaving predicate. Nothing here shares code with the embedder.

use crate::book::{BookEmbedding, Page};
use crate::graph::{Edge, EmbeddedGraph};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Largest page number accepted.
pub const MAX_PAGES: Page = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Crossing { page: Page, first: Edge, second: Edge },
    MissingEdge(Edge),
    ExtraEdge(Edge),
    BadPage { edge: Edge, page: Page },
    BadOrder(String),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Crossing { page, first, second } => write!(
                f,
                "crossing on page {page}: ({} {}) x ({} {})",
                first.0, first.1, second.0, second.1
            ),
            Violation::MissingEdge(e) => write!(f, "missing edge ({} {})", e.0, e.1),
            Violation::ExtraEdge(e) => write!(f, "edge ({} {}) not in graph", e.0, e.1),
            Violation::BadPage { edge, page } => {
                write!(f, "edge ({} {}) on invalid page {page}", edge.0, edge.1)
            }
            Violation::BadOrder(why) => write!(f, "bad order: {why}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VerifierReport {
    pub violations: Vec<Violation>,
}

impl VerifierReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Two edges cross iff their endpoints strictly interleave along the spine.
/// Edges sharing an endpoint never cross.
pub fn crosses(pos: &[usize], e: Edge, f: Edge) -> bool {
    let (mut a, mut b) = (pos[e.0], pos[e.1]);
    let (mut c, mut d) = (pos[f.0], pos[f.1]);
    if a > b {
        core::mem::swap(&mut a, &mut b);
    }
    if c > d {
        core::mem::swap(&mut c, &mut d);
    }
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

/// Checks order bijectivity, edge completeness, page range and same-page
/// crossings. Every problem is reported.
pub fn check(g: &EmbeddedGraph, b: &BookEmbedding) -> VerifierReport {
    let n = g.n();
    let mut violations = Vec::new();

    let mut seen = vec![false; n];
    let mut order_ok = b.order.len() == n;
    if b.order.len() != n {
        violations.push(Violation::BadOrder(alloc::format!(
            "{} vertices on spine, graph has {n}",
            b.order.len()
        )));
    }
    for &v in &b.order {
        if v >= n {
            violations.push(Violation::BadOrder(alloc::format!("vertex {v} out of range")));
            order_ok = false;
        } else if seen[v] {
            violations.push(Violation::BadOrder(alloc::format!("vertex {v} repeated")));
            order_ok = false;
        } else {
            seen[v] = true;
        }
    }

    for e in g.edges() {
        if !b.pages.contains_key(&e) {
            violations.push(Violation::MissingEdge(e));
        }
    }
    for (&e, &p) in &b.pages {
        if e.1 >= n || !g.has_edge(e.0, e.1) {
            violations.push(Violation::ExtraEdge(e));
        }
        if !(1..=MAX_PAGES).contains(&p) {
            violations.push(Violation::BadPage { edge: e, page: p });
        }
    }

    if order_ok {
        let pos = b.positions(n);
        let edges: Vec<(Edge, Page)> = b.pages.iter().filter(|(e, _)| e.1 < n).map(|(&e, &p)| (e, p)).collect();
        for i in 0..edges.len() {
            for j in i + 1..edges.len() {
                let ((e, p), (f, q)) = (edges[i], edges[j]);
                if p == q && crosses(&pos, e, f) {
                    violations.push(Violation::Crossing {
                        page: p,
                        first: e,
                        second: f,
                    });
                }
            }
        }
    }
    VerifierReport { violations }
}

/// Same-page crossing pairs on pages 1, 2 and 3.
pub fn crossing_count_per_page(b: &BookEmbedding, g: &EmbeddedGraph) -> [usize; 3] {
    let mut out = [0; 3];
    for v in check(g, b).violations {
        if let Violation::Crossing { page, .. } = v {
            if (1..=3).contains(&page) {
                out[page as usize - 1] += 1;
            }
        }
    }
    out
}
