//! Book embeddings and their text format.

use crate::error::FormatError;
use crate::graph::Edge;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

/// Pages are numbered from 1.
pub type Page = u8;

/// Spine order plus a page for every edge.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BookEmbedding {
    /// Vertices from left to right along the spine.
    pub order: Vec<usize>,
    pub pages: BTreeMap<Edge, Page>,
}

impl BookEmbedding {
    /// `position[v]` = index of `v` in `order`; `usize::MAX` when absent.
    pub fn positions(&self, n: usize) -> Vec<usize> {
        let mut pos = vec![usize::MAX; n.max(self.order.iter().map(|&v| v + 1).max().unwrap_or(0))];
        for (i, &v) in self.order.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }

    pub fn page_count(&self) -> usize {
        self.pages.values().copied().max().unwrap_or(0) as usize
    }

    /// Number of edges on pages 1, 2, 3.
    pub fn edges_per_page(&self) -> [usize; 3] {
        let mut out = [0; 3];
        for &p in self.pages.values() {
            if (1..=3).contains(&p) {
                out[p as usize - 1] += 1;
            }
        }
        out
    }

    /// Writes `order: ..` followed by `u v p` lines sorted by edge.
    pub fn to_text(&self) -> String {
        let mut out = String::from("order:");
        for v in &self.order {
            let _ = write!(out, " {v}");
        }
        out.push('\n');
        for (e, p) in &self.pages {
            let _ = writeln!(out, "{} {} {}", e.0, e.1, p);
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self, FormatError> {
        let err = |line: usize, message: String| FormatError { line, message };
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (lno, first) = lines.next().ok_or_else(|| err(1, "missing order line".into()))?;
        let rest = first
            .strip_prefix("order:")
            .ok_or_else(|| err(lno, "expected \"order: ...\"".into()))?;
        let order = rest
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| err(lno, format!("bad vertex {t:?}"))))
            .collect::<Result<Vec<usize>, _>>()?;
        let mut pages = BTreeMap::new();
        for (lno, line) in lines {
            let nums = line
                .split_whitespace()
                .map(|t| t.parse::<usize>().map_err(|_| err(lno, format!("bad number {t:?}"))))
                .collect::<Result<Vec<_>, _>>()?;
            let [u, v, p] = nums[..] else {
                return Err(err(lno, "expected \"u v p\"".into()));
            };
            if u == v {
                return Err(err(lno, "self loop".into()));
            }
            let page = Page::try_from(p).map_err(|_| err(lno, format!("page {p} out of range")))?;
            if pages.insert(Edge::new(u, v), page).is_some() {
                return Err(err(lno, format!("edge {u} {v} listed twice")));
            }
        }
        Ok(BookEmbedding { order, pages })
    }
}
