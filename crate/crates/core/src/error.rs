use thiserror::Error;

/// Errors raised by the lattice, continued-fraction and hull routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Input outside the documented domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// An exact integer computation would have overflowed.
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    /// A result that must hold by construction did not.
    #[error("internal consistency check failed: {0}")]
    Consistency(String),
    /// The parallelogram has area 1 and contains no interior lattice points.
    #[error("parallelogram has no interior lattice points")]
    NoInteriorPoints,
    /// The interior hull is a point or a segment, so polygon-only data is undefined.
    #[error("interior hull of P({a},{n}) is not two-dimensional")]
    DegenerateHull { a: i64, n: i64 },
    /// A brute-force enumeration would exceed its work budget.
    #[error("brute-force budget exceeded: {0}")]
    Budget(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
