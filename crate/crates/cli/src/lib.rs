//! Command-line front end and file formats for the coloring library.

pub mod commands;
pub mod experiments;
pub mod format;

pub use commands::run;
