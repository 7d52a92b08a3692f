//! File formats, job plumbing and the self-test runner behind the `kmchev`
//! binary.

pub mod commands;
pub mod config;
pub mod output;
pub mod selftest;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] kmchev_core::Error),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Io(String),
}
