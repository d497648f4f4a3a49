//! Library side of the `hyparr` command-line tool: the JSON document
//! format, the subcommands, and SVG rendering.

pub mod commands;
pub mod document;
pub mod error;
pub mod render;

pub use document::ArrangementDocument;
pub use error::CliError;
