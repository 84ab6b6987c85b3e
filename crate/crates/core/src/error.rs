use thiserror::Error;

/// Errors produced across the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Argument outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// Malformed request: mismatched orders, bad flags, unparsable input.
    #[error("usage error: {0}")]
    Usage(String),
    /// Division of a power series by one with zero constant term.
    #[error("singular division: divisor has zero constant term")]
    SingularDivision,
    /// A rational whose denominator is divisible by p.
    #[error("{value} is not a {p}-adic integer")]
    NotPadicInteger { value: String, p: u64 },
    /// Too few p-adic digits remain after scaling.
    #[error("insufficient p-adic depth: {0}")]
    DepthInsufficient(String),
    /// A q-parameter for which some [n]_q vanishes.
    #[error("singular parameter: {0}")]
    SingularParameter(String),
    /// A numeric routine hit its iteration cap before reaching tolerance.
    #[error("no convergence: {0}")]
    Convergence(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

pub(crate) fn usage(msg: impl Into<String>) -> Error {
    Error::Usage(msg.into())
}
