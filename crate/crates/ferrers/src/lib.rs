//! Standard-library companion to `ferrers-core`: JSON wire formats, text
//! rendering, exhaustive verification sweeps and the `ferrers` command.

pub mod cli;
pub mod render;
pub mod suites;
pub mod wire;
