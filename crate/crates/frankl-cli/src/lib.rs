//! Library surface of the CLI: record parsing, report formatting and the
//! command implementations, kept separate from argument handling so the
//! integration suite can drive them directly.

pub mod commands;
pub mod record;
pub mod report;
