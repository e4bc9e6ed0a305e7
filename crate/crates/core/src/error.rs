use thiserror::Error;

/// Every failure mode surfaced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid graph spec: {0}")]
    InvalidSpec(String),
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("polynomial has no real root")]
    NoRealRoot,
    #[error("spectrum of an order-0 matrix is undefined")]
    NoSpectrum,
    #[error("A + theta*I is not positive semidefinite for theta = {0}")]
    ThetaTooSmall(String),
    #[error("2*theta - 1 = {0} is not the largest Seidel eigenvalue")]
    WrongTheta(String),
    #[error("{0} is not the largest eigenvalue")]
    NotLargestEigenvalue(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("invalid root lattice type: {0}")]
    InvalidType(String),
    #[error("largest Seidel eigenvalue exceeds 3")]
    EigenvalueTooLarge,
    #[error("root lattice is not irreducible")]
    NotIrreducible,
    #[error("lattice is not generated by its roots")]
    NotRootGenerated,
    #[error("unsupported lattice family: {0}")]
    UnsupportedFamily(String),
    #[error("search budget of {0} nodes exhausted")]
    OutOfBudget(u64),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("invalid rank {0}")]
    InvalidRank(usize),
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
}

pub type Result<T> = std::result::Result<T, Error>;
