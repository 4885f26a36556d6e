//! Command-line front end, renderers, `--json` documents, multi-threaded
//! searches and verification suites on top of `sylvkit-core`.

pub mod cli;
pub mod formats;
pub mod parallel;
pub mod render;
pub mod verify;

pub use sylvkit_core as core;
