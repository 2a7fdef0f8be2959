use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),

    #[error("graph6 parse error at byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },

    #[error("edge list parse error at line {line}: {message}")]
    EdgeList { line: usize, message: String },

    #[error("graph6 short form supports n <= 62, got n = {0}")]
    UnsupportedSize(usize),

    #[error("{method} did not converge after {iterations} iterations (estimate {estimate}, residual {residual:e})")]
    NoConvergence {
        method: &'static str,
        iterations: usize,
        estimate: f64,
        residual: f64,
    },

    #[error("spectral computation failed for {graph_id}: {source}")]
    Spectral {
        graph_id: String,
        #[source]
        source: Box<Error>,
    },

    #[error("numeric ordering {numeric} disagrees with classifier ordering {symbolic} at delta={min_degree}, Delta={max_degree}, alpha={alpha} (f - g = {difference:e})")]
    Consistency {
        min_degree: u32,
        max_degree: u32,
        alpha: f64,
        difference: f64,
        numeric: crate::bounds::BoundOrdering,
        symbolic: crate::bounds::BoundOrdering,
    },

    #[error("{count} bound violation(s); first: {first}")]
    Violation { count: usize, first: String },

    #[error("I/O error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("report format error in {path}: {message}")]
    Report { path: PathBuf, message: String },
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    /// True for failures caused by the caller's arguments or input files,
    /// as opposed to verification failures.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Input(_)
                | Error::Graph6 { .. }
                | Error::EdgeList { .. }
                | Error::UnsupportedSize(_)
                | Error::Io { .. }
                | Error::Report { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
