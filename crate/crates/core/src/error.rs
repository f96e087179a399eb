use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// Malformed or out-of-range input.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A computed quantity failed a consistency check (complex trace, out-of-range probability).
    #[error("numerical consistency failure: {0}")]
    Numerical(String),

    /// cos β or sin β vanishes; no setting can satisfy the four conditions.
    #[error("product state (beta = {beta}): the zero-probability conditions cannot be met with q4 > q1")]
    ProductState { beta: f64 },

    /// β = π/4: every constraint-satisfying setting has q4 = q1.
    #[error("maximally entangled state (beta = {beta}): no setting gives q4 > q1")]
    MaximallyEntangled { beta: f64 },

    #[error("grid point {index}: {source}")]
    GridPoint {
        index: usize,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    /// Process exit code used by the CLI.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidInput(_) => 2,
            Error::Numerical(_) => 3,
            Error::ProductState { .. } | Error::MaximallyEntangled { .. } => 4,
            Error::GridPoint { source, .. } => source.exit_code(),
        }
    }
}
