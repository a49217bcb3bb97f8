//! Library half of the command-line interface: polygon file parsing, JSON
//! report shapes and SVG rendering. The binary in `main.rs` is a thin
//! dispatcher over these plus the `kgon` crate.

pub mod polyfile;
pub mod report;
pub mod svg;
