//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{context}: {message}")]
    Parse { context: String, message: String },

    #[error("{path}:{line}:{column}: {message}")]
    ParseAt { path: String, line: usize, column: usize, message: String },

    #[error("record {label}: {message}")]
    Invariant { label: String, message: String },

    #[error("record {label}: missing datum '{field}'")]
    MissingDatum { label: String, field: String },

    #[error("pair {pair}: unknown field label '{field}'")]
    DanglingLabel { pair: String, field: String },

    #[error("pair {pair}: D_k^2 = {dk2} does not divide D_ell = {dl}")]
    Divisibility { pair: String, dk2: String, dl: String },

    #[error("field {label}: no bundled decomposition for prime {p} dividing the polynomial discriminant")]
    MissingRamifiedData { label: String, p: u64 },

    #[error("polynomial is not squarefree modulo {p}")]
    NotSquarefree { p: u64 },

    #[error("pair {pair}: places over {p} of residue degree {f} cannot be attributed uniquely")]
    AmbiguousAttribution { pair: String, p: u64, f: u32 },

    #[error("pair {pair}: {message}")]
    InconsistentSplitting { pair: String, message: String },

    #[error("reconstruction uncertain: radius {radius} is too large for denominators up to {qmax}")]
    ReconstructionUncertain { radius: String, qmax: String },

    #[error("no rational with denominator <= {qmax} in [{lo}, {hi}]")]
    NoCandidate { lo: String, hi: String, qmax: String },

    #[error("several rationals with denominator <= {qmax} in the interval, e.g. {first} and {second}")]
    MultipleCandidates { first: String, second: String, qmax: String },

    #[error("character is not primitive: {0}")]
    NonPrimitiveCharacter(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid local datum: {0}")]
    InvalidChoice(String),

    #[error("unknown {kind} '{name}'")]
    Unknown { kind: String, name: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn unknown(kind: &str, name: impl Into<String>) -> Self {
        Error::Unknown { kind: kind.into(), name: name.into() }
    }
}
