//! Command-line front end: matrix files, subcommands and the fixture suite.

pub mod commands;
pub mod fixtures;
pub mod format;
pub mod verify;
