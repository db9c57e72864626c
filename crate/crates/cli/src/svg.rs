//! Arc diagrams of book embeddings as plain SVG text.
//!
//! The spine is the line `y = 0`. Pages 1 and 2 are drawn as half-circle
//! arcs above it (solid and dashed), page 3 below it (dotted). Output depends
//! only on the embedding, so identical inputs give identical bytes.

use bookembed_core::{BookEmbedding, Page};
use std::fmt::Write;

const STEP: f64 = 40.0;
const MARGIN: f64 = 30.0;
const RADIUS: f64 = 4.0;

struct PageStyle {
    stroke: &'static str,
    dash: Option<&'static str>,
    above: bool,
}

fn style(p: Page) -> PageStyle {
    match p {
        1 => PageStyle {
            stroke: "#1f77b4",
            dash: None,
            above: true,
        },
        2 => PageStyle {
            stroke: "#d62728",
            dash: Some("6 4"),
            above: true,
        },
        _ => PageStyle {
            stroke: "#2ca02c",
            dash: Some("2 3"),
            above: false,
        },
    }
}

/// Geometry of one arc, in spine coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct Arc {
    pub from: f64,
    pub to: f64,
    pub page: Page,
}

impl Arc {
    pub fn above(&self) -> bool {
        style(self.page).above
    }
}

/// Spine x coordinate of the vertex at position `i`.
pub fn spine_x(i: usize) -> f64 {
    MARGIN + STEP * i as f64
}

/// One arc per edge, left endpoint first, in edge order.
pub fn arcs(b: &BookEmbedding) -> Vec<Arc> {
    let pos = b.positions(0);
    b.pages
        .iter()
        .map(|(e, &page)| {
            let (a, c) = (pos[e.0].min(pos[e.1]), pos[e.0].max(pos[e.1]));
            Arc {
                from: spine_x(a),
                to: spine_x(c),
                page,
            }
        })
        .collect()
}

pub fn render(b: &BookEmbedding) -> String {
    let n = b.order.len();
    let arcs = arcs(b);
    let span = |above: bool| {
        arcs.iter()
            .filter(|a| a.above() == above)
            .map(|a| (a.to - a.from) / 2.0)
            .fold(0.0, f64::max)
    };
    let top = span(true) + MARGIN;
    let bottom = span(false) + MARGIN;
    let width = spine_x(n.saturating_sub(1)) + MARGIN;
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 {:.1} {:.1} {:.1}" width="{:.0}" height="{:.0}">"#,
        -top,
        width,
        top + bottom,
        width,
        top + bottom
    );
    let _ = writeln!(
        s,
        r##"<line x1="{:.1}" y1="0" x2="{:.1}" y2="0" stroke="#000" stroke-width="1"/>"##,
        spine_x(0) - MARGIN / 2.0,
        width - MARGIN / 2.0
    );
    for a in &arcs {
        let st = style(a.page);
        let r = (a.to - a.from) / 2.0;
        let sweep = u8::from(st.above);
        let dash = st
            .dash
            .map(|d| format!(r#" stroke-dasharray="{d}""#))
            .unwrap_or_default();
        let _ = writeln!(
            s,
            r#"<path class="page{}" d="M {:.1} 0 A {:.1} {:.1} 0 0 {sweep} {:.1} 0" fill="none" stroke="{}" stroke-width="1.5"{dash}/>"#,
            a.page, a.from, r, r, a.to, st.stroke
        );
    }
    for (i, v) in b.order.iter().enumerate() {
        let x = spine_x(i);
        let _ = writeln!(s, r##"<circle cx="{x:.1}" cy="0" r="{RADIUS:.1}" fill="#000"/>"##);
        let _ = writeln!(
            s,
            r#"<text x="{x:.1}" y="{:.1}" font-family="monospace" font-size="11" text-anchor="middle">{v}</text>"#,
            -RADIUS - 4.0
        );
    }
    s.push_str("</svg>\n");
    s
}
