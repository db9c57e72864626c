use alloc::string::String;
use core::fmt;

/// Problems with an input rotation system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    /// Malformed text; `line` is 1-based.
    Syntax {
        line: usize,
        message: String,
    },
    NeighborOutOfRange {
        vertex: usize,
        neighbor: usize,
    },
    DuplicateEdge {
        vertex: usize,
        neighbor: usize,
    },
    SelfLoop {
        vertex: usize,
    },
    Asymmetric {
        from: usize,
        to: usize,
    },
    DegreeTooLarge {
        vertex: usize,
        degree: usize,
    },
    EdgeCountMismatch {
        declared: usize,
        actual: usize,
    },
    /// Face tracing found `V - E + F != 2` for some connected component.
    NotGenusZero {
        component_root: usize,
        euler: i64,
    },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::Syntax { line, message } => write!(f, "line {line}: {message}"),
            GraphError::NeighborOutOfRange { vertex, neighbor } => {
                write!(f, "vertex {vertex}: neighbor {neighbor} out of range")
            }
            GraphError::DuplicateEdge { vertex, neighbor } => {
                write!(f, "vertex {vertex}: duplicate edge to {neighbor}")
            }
            GraphError::SelfLoop { vertex } => write!(f, "vertex {vertex}: self loop"),
            GraphError::Asymmetric { from, to } => {
                write!(f, "asymmetric adjacency: {from} lists {to} but not vice versa")
            }
            GraphError::DegreeTooLarge { vertex, degree } => {
                write!(f, "vertex {vertex}: degree > 5 (degree {degree})")
            }
            GraphError::EdgeCountMismatch { declared, actual } => {
                write!(f, "header declares {declared} edges but rotation lists give {actual}")
            }
            GraphError::NotGenusZero { component_root, euler } => write!(
                f,
                "non-planar embedding: embedding is not genus 0 (component of vertex {component_root} has V-E+F={euler})"
            ),
        }
    }
}

/// Failures of the embedding pipeline.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EmbedError {
    Graph(GraphError),
    /// An invariant of the recursive construction was breached. `invariant`
    /// names it (e.g. "IP-3"), `context` is a replayable dump of the cycle
    /// context where it happened.
    Invariant {
        invariant: &'static str,
        detail: String,
        context: String,
    },
    /// The spine order produced by the construction admits no assignment to
    /// three pages within the search budget.
    PagesExhausted {
        conflicts: usize,
    },
}

impl From<GraphError> for EmbedError {
    fn from(e: GraphError) -> Self {
        EmbedError::Graph(e)
    }
}

impl fmt::Display for EmbedError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EmbedError::Graph(e) => write!(f, "{e}"),
            EmbedError::Invariant {
                invariant,
                detail,
                context,
            } => write!(f, "invariant {invariant} violated: {detail}\ncontext: {context}"),
            EmbedError::PagesExhausted { conflicts } => write!(
                f,
                "no three-page assignment found for the constructed order ({conflicts} conflicting pairs)"
            ),
        }
    }
}

/// Text format errors for embeddings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormatError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}
