//! Command-line surface: file formats, report rendering and the commands.

pub mod app;
pub mod files;
pub mod report;

pub use app::{run, Outcome};
