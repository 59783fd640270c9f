use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed graph6 input: {0}")]
    MalformedGraph6(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("interval endpoint {0} is a root of the polynomial")]
    EndpointIsRoot(String),
    #[error("size budget exceeded: {what} = {value} > {limit}")]
    SizeBudgetExceeded {
        what: &'static str,
        value: u128,
        limit: u128,
    },
    #[error("parity violation: {0}")]
    BadParity(String),
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("least eigenvalue is not an integer")]
    NonIntegerLeastEigenvalue,
    #[error("graph is not regular")]
    NotRegular,
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph has no edges")]
    Edgeless,
    #[error("graph is not 1-walk-regular")]
    NotOneWalkRegular,
    #[error("graph is not uniquely vector colorable (rank test is loose)")]
    NotUniquelyVectorColorable,
    #[error("canonical vector coloring is not injective")]
    NotInjective,
    #[error("vector chromatic numbers differ: {0}")]
    RatioMismatch(String),
    #[error("degenerate parameter range: {0}")]
    DegenerateRange(String),
    #[error("search budget of {0} nodes exceeded")]
    BudgetExceeded(u64),
}

impl Error {
    /// Stable machine-readable code used in reports.
    pub fn code(&self) -> &'static str {
        match self {
            Error::MalformedGraph6(_) => "MalformedGraph6",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::NotSquare { .. } => "NotSquare",
            Error::EndpointIsRoot(_) => "EndpointIsRoot",
            Error::SizeBudgetExceeded { .. } => "SizeBudgetExceeded",
            Error::BadParity(_) => "BadParity",
            Error::OutOfRange(_) => "OutOfRange",
            Error::InvalidParameter(_) => "InvalidParameter",
            Error::NonIntegerLeastEigenvalue => "NonIntegerLeastEigenvalue",
            Error::NotRegular => "NotRegular",
            Error::NotConnected => "NotConnected",
            Error::Edgeless => "Edgeless",
            Error::NotOneWalkRegular => "NotOneWalkRegular",
            Error::NotUniquelyVectorColorable => "NotUniquelyVectorColorable",
            Error::NotInjective => "NotInjective",
            Error::RatioMismatch(_) => "RatioMismatch",
            Error::DegenerateRange(_) => "DegenerateRange",
            Error::BudgetExceeded(_) => "BudgetExceeded",
        }
    }
}
