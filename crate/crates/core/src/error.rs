use std::io;

use thiserror::Error;

/// Errors produced by the coefficient engine, evaluators, and oracles.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{function}: argument {value} is outside the domain")]
    Domain { function: &'static str, value: f64 },

    #[error("index out of range: {0}")]
    Index(String),

    #[error("invalid problem: {0}")]
    InvalidSpec(String),

    #[error("coefficient d[{h}][{n}] overflowed the double-precision range")]
    Overflow { h: usize, n: usize },

    #[error("series has no terms to differentiate")]
    EmptySeries,

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("solution leaves its domain at t = {critical_t}")]
    DomainExit { critical_t: f64 },

    #[error("integration diverged at step {step}")]
    Divergence { step: usize },

    #[error("cannot parse {0:?}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
