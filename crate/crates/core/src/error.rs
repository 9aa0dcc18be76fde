//! Error type shared by every module.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("series did not converge within {terms} terms")]
    NonConvergence { terms: usize },

    #[error("c = {0} is a non-positive integer")]
    PoleInC(f64),

    #[error("gamma function pole at argument {0}")]
    Pole(f64),

    #[error("accuracy loss: {digits:.1} decimal digits cancelled (budget {budget:.1})")]
    AccuracyLoss { digits: f64, budget: f64 },

    #[error("|zeta| = {zeta:.4} is below the formula threshold {min}")]
    TooCloseToTurningPoint { zeta: f64, min: f64 },

    #[error("Maclaurin iteration did not converge for mu = {mu}, N = {n}")]
    NoConvergence { mu: f64, n: usize },

    #[error("unsupported evaluation at a = {a}, z = {z}: {reason}")]
    Unsupported { a: f64, z: f64, reason: String },

    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
