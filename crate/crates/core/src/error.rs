use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("usage error: {0}")]
    Usage(String),

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("operands belong to different quadratic algebras")]
    AlgebraMismatch,

    #[error("polynomials are over different coefficient rings")]
    RingMismatch,

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("outside the domain of validity: {0}")]
    Domain(String),

    #[error(
        "series converges only sub-geometrically at |t(1-t)| = 1/4 and admits no \
         truncation certificate; use the closed form instead"
    )]
    BoundaryConvergence,

    #[error("formula divides by p - r, which is zero when p = r")]
    DegenerateDenominator,

    #[error("quadrature did not reach tolerance within {budget} integrand evaluations")]
    BudgetExceeded { budget: u64 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    /// Stable machine-readable code used in JSON error objects.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Usage(_) => "usage",
            Error::IndexOutOfRange(_) => "index_out_of_range",
            Error::AlgebraMismatch => "algebra_mismatch",
            Error::RingMismatch => "ring_mismatch",
            Error::Parameter(_) => "parameter",
            Error::Domain(_) => "domain",
            Error::BoundaryConvergence => "boundary_convergence",
            Error::DegenerateDenominator => "degenerate_denominator",
            Error::BudgetExceeded { .. } => "budget_exceeded",
            Error::Parse(_) => "parse",
            Error::Internal(_) => "internal",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
