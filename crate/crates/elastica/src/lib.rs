//! File formats, SVG rendering, parallel sweeps and the invariant suite on
//! top of [`elastica_core`].
//!
//! - [`io`]: support-body coefficient lists, shape and diagram CSV, JSON
//!   shape records.
//! - [`svg`]: hand-written SVG for shapes and the diagram.
//! - [`parallel`]: two-phase sweep, serial continuation then parallel solves.
//! - [`verify`]: the pass/fail invariant table behind `elastica verify`.
//! - [`cli`]: argument parsing and the subcommands.

pub mod cli;
pub mod io;
pub mod parallel;
pub mod svg;
pub mod verify;

mod error;

pub use crate::error::{CliError, Result};
