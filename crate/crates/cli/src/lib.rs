//! File formats, corpora, verification suites and command handlers for the
//! `bkcolor` binary.

pub mod commands;
pub mod formats;
pub mod suites;
