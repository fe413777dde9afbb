use thiserror::Error;

/// Errors raised by the special-function kernel, the quadrature engine and
/// every series built on top of them.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error in {op}: {detail}")]
    Domain { op: &'static str, detail: String },

    /// A factorial, recurrence or term index exceeded a configured bound.
    #[error("capacity exceeded in {op}: {detail}")]
    Capacity { op: &'static str, detail: String },

    /// The requested value is infinite (e.g. Γ(a, 0) with a ≤ 0).
    #[error("divergent value in {op}: {detail}")]
    Divergence { op: &'static str, detail: String },

    /// The square-root argument Bk² + C vanished.
    #[error("pole in {op}: {detail}")]
    Pole { op: &'static str, detail: String },

    /// An intermediate overflowed double precision.
    #[error("range error in {op}: {detail}")]
    Range { op: &'static str, detail: String },

    /// An iterative series or continued fraction did not converge.
    #[error("truncation error in {op}: no convergence after {terms} terms")]
    Truncation { op: &'static str, terms: usize },

    /// An adaptive integration exhausted its budget.
    #[error("quadrature did not converge in {op}: estimate {estimate:e} after {evaluations} evaluations")]
    Quadrature {
        op: &'static str,
        estimate: f64,
        evaluations: usize,
    },

    /// Malformed or inconsistent parameters.
    #[error("invalid parameters: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(op: &'static str, detail: impl Into<String>) -> Error {
    Error::Domain {
        op,
        detail: detail.into(),
    }
}

pub(crate) fn capacity(op: &'static str, detail: impl Into<String>) -> Error {
    Error::Capacity {
        op,
        detail: detail.into(),
    }
}

pub(crate) fn range(op: &'static str, detail: impl Into<String>) -> Error {
    Error::Range {
        op,
        detail: detail.into(),
    }
}
