//! Graph documents and the `forestpart` command-line tool.

pub mod cli;
pub mod document;
