use std::path::PathBuf;

/// Error type shared by all library modules.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A numeric argument is outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A file could not be read or written.
    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    /// A structured-text input failed to parse. Line and column are 1-based.
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    /// A parsed value violates a field invariant.
    #[error("validation error at line {line}: field `{field}` of `{name}`: {message}")]
    Validation {
        line: usize,
        name: String,
        field: String,
        message: String,
    },

    /// Combined roughness cannot accommodate the minimum separation.
    #[error("degenerate interface: {0}")]
    DegenerateInterface(String),

    /// Adaptive quadrature or the calibration optimizer failed to converge.
    #[error("numerical non-convergence: {0}")]
    NonConvergence(String),

    /// The input grid is too small for the requested estimate.
    #[error("capability error: {0}")]
    Capability(String),

    /// Inconsistent drag configuration.
    #[error("config error: {0}")]
    Config(String),

    /// An unknown material was requested from a catalogue.
    #[error("unknown material `{0}`")]
    UnknownMaterial(String),
}
