//! Command-line front end for `omegaorth-core`: the matrix file format,
//! output rendering and the `omegaorth` subcommands.
//!
//! The binary is a thin wrapper over [`app::run`], which takes the argument
//! list and returns what would be printed together with the exit code.

pub mod app;
pub mod matrix_file;
pub mod output;

pub use app::{run, Outcome};
pub use matrix_file::{MatrixFile, ParseError};
