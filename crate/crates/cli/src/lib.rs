//! Command-line surface of the Klein-bottle braid calculator: the braid-word
//! syntax, map descriptor files, report documents, and command dispatch.

pub mod commands;
pub mod mapfile;
pub mod report;
pub mod syntax;

pub use commands::{run, EXIT_DISAGREE, EXIT_INVALID_MAP, EXIT_OK, EXIT_SPLIT_MAP, EXIT_SYNTAX};
pub use syntax::{parse_braid, print_braid};
