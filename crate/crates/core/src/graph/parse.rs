use super::{EmbeddedGraph, MAX_DEGREE};
use crate::error::GraphError;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

fn syntax(line: usize, message: impl Into<String>) -> GraphError {
    GraphError::Syntax {
        line,
        message: message.into(),
    }
}

/// Parses the rotation-system text format:
///
/// ```text
/// # comment
/// n m
/// 0: 1 2
/// 1: 2 0
/// 2: 0 1
/// ```
///
/// Neighbours are listed counterclockwise. The result is checked for
/// symmetry, simplicity, the degree bound and genus 0.
pub fn parse_rotation_graph(text: &str) -> Result<EmbeddedGraph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines.next().ok_or_else(|| syntax(1, "missing header"))?;
    let mut parts = header.split_whitespace();
    let n = parse_num(parts.next(), hline, "vertex count")?;
    let m = parse_num(parts.next(), hline, "edge count")?;
    if parts.next().is_some() {
        return Err(syntax(hline, "header must be \"n m\""));
    }

    let mut rotation: Vec<Option<Vec<usize>>> = vec![None; n];
    let mut line_of = vec![0usize; n];
    for (lineno, line) in lines {
        let (head, rest) = line
            .split_once(':')
            .ok_or_else(|| syntax(lineno, "expected \"i: neighbours...\""))?;
        let v = parse_num(Some(head.trim()), lineno, "vertex index")?;
        if v >= n {
            return Err(syntax(lineno, format!("vertex {v} out of range 0..{n}")));
        }
        if rotation[v].is_some() {
            return Err(syntax(lineno, format!("vertex {v} listed twice")));
        }
        let mut nbrs = Vec::new();
        for tok in rest.split_whitespace() {
            let u = parse_num(Some(tok), lineno, "neighbour index")?;
            if u >= n {
                return Err(GraphError::NeighborOutOfRange { vertex: v, neighbor: u });
            }
            if nbrs.contains(&u) {
                return Err(GraphError::DuplicateEdge { vertex: v, neighbor: u });
            }
            nbrs.push(u);
        }
        rotation[v] = Some(nbrs);
        line_of[v] = lineno;
    }
    let rotation: Vec<Vec<usize>> = rotation
        .into_iter()
        .enumerate()
        .map(|(v, r)| r.ok_or_else(|| syntax(0, format!("vertex {v} has no rotation line"))))
        .collect::<Result<_, _>>()?;

    let g = EmbeddedGraph::new_unchecked_genus(rotation)?;
    if g.m() != m {
        return Err(GraphError::EdgeCountMismatch {
            declared: m,
            actual: g.m(),
        });
    }
    g.check_max_degree(MAX_DEGREE)?;
    super::trace_faces(&g)?;
    Ok(g)
}

fn parse_num(tok: Option<&str>, line: usize, what: &str) -> Result<usize, GraphError> {
    let tok = tok.ok_or_else(|| syntax(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| syntax(line, format!("invalid {what} {:?}", tok.to_string())))
}

/// Writes a graph in the format read by [`parse_rotation_graph`].
pub fn write_rotation_graph(g: &EmbeddedGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", g.n(), g.m());
    for v in 0..g.n() {
        let _ = write!(out, "{v}:");
        for u in g.rotation(v) {
            let _ = write!(out, " {u}");
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_document() {
        let g = parse_rotation_graph("3 3\n0: 1 2\n1: 2 0\n2: 0 1\n").unwrap();
        assert_eq!(g.n(), 3);
        assert!((0..3).all(|v| g.degree(v) == 2));
        assert_eq!(g.rotation(1), &[2, 0]);
    }

    #[test]
    fn comments_and_blank_lines_ignored() {
        let g = parse_rotation_graph("# tri\n\n3 3\n# body\n2: 0 1\n0: 1 2\n1: 2 0\n").unwrap();
        assert_eq!(g.m(), 3);
    }

    #[test]
    fn errors_are_reported() {
        assert!(matches!(
            parse_rotation_graph("2 1\n0: 1 1\n1: 0\n"),
            Err(GraphError::DuplicateEdge { .. })
        ));
        assert!(matches!(
            parse_rotation_graph("2 1\n0: 5\n1: 0\n"),
            Err(GraphError::NeighborOutOfRange { .. })
        ));
        assert!(matches!(
            parse_rotation_graph("2 1\n0: 1\n1:\n"),
            Err(GraphError::Asymmetric { .. })
        ));
        assert!(matches!(
            parse_rotation_graph("3 3\n0: 1 x\n"),
            Err(GraphError::Syntax { line: 2, .. })
        ));
    }

    #[test]
    fn degree_six_rejected() {
        let text = "7 6\n0: 1 2 3 4 5 6\n1: 0\n2: 0\n3: 0\n4: 0\n5: 0\n6: 0\n";
        let err = parse_rotation_graph(text).unwrap_err();
        assert_eq!(err, GraphError::DegreeTooLarge { vertex: 0, degree: 6 });
        assert!(err.to_string().contains("degree > 5"));
    }

    #[test]
    fn write_then_parse_is_identity() {
        let text = "4 6\n0: 1 2 3\n1: 0 3 2\n2: 0 1 3\n3: 0 2 1\n";
        let g = parse_rotation_graph(text).unwrap();
        assert_eq!(write_rotation_graph(&g), text);
    }
}
