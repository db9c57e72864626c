//! File handling, subcommands and drawing for the `bookembed` tool.

pub mod commands;
pub mod svg;
