//! Front end for `lescop-core`: input resolution, commands and report formats
//! behind the `lescop` binary.

pub mod commands;
pub mod error;
pub mod input;
pub mod output;
