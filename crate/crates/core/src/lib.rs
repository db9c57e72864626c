//! Three-page book embeddings of planar graphs with maximum degree five.
//!
//! The input is a graph with a fixed planar rotation system. The embedder
//! peels the outer cycle, contracts the 2-edge-connected pieces of what is
//! left into a forest of block-vertices, places everything along the spine
//! and recurses into each block-vertex. An independent [`verifier`] and an
//! exact [`oracle`] for small graphs are provided for validation.
#![no_std]

extern crate alloc;

pub mod book;
pub mod coloring;
pub mod embedder;
pub mod error;
pub mod generator;
pub mod graph;
pub mod oracle;
pub mod verifier;

pub use book::{BookEmbedding, Page};
pub use embedder::{embed_book, embed_book_with, EmbedOptions, EmbedStats};
pub use error::{EmbedError, FormatError, GraphError};
pub use graph::{parse_rotation_graph, write_rotation_graph, Edge, EmbeddedGraph};
