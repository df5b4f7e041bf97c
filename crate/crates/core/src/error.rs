use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    Param(String),

    #[error("vertex set over {set} vertices used with a graph on {graph} vertices")]
    SizeMismatch { set: usize, graph: usize },

    #[error("search budget of {budget} exceeded")]
    BudgetExceeded { budget: u64 },

    #[error("construction {lemma} failed verification: {detail}")]
    Construction { lemma: String, detail: String },

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::Param(msg.into())
    }
}
