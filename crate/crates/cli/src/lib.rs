//! Front end for `tifs-core`: JSON configuration, text dumps, SVG/PPM renderers
//! and the `tifs` command.

pub mod commands;
pub mod config;
pub mod dump;
pub mod render;

pub use commands::run;
