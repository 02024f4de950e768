use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Lie type `{0}` (expected A_n n>=1, B_n n>=2, C_n n>=2, D_n n>=4, E6-E8, F4 or G2)")]
    InvalidLieType(String),

    #[error("malformed rational `{0}` (expected p, p/q)")]
    MalformedRational(String),

    #[error("vector is not a root of {0}")]
    NotARoot(String),

    #[error("generator index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("expected {expected} coordinates, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("delta-degree bound must be at least 1, got {0}")]
    InvalidDegreeBound(i64),

    #[error("critical level: kappa = <Lambda+rho, K> must be nonzero")]
    CriticalLevel,

    #[error("translation is not in the coweight lattice")]
    NotInCoweightLattice,

    #[error("integral root system did not close within delta-degree bound {bound}")]
    ClosureFailure { bound: i64 },

    #[error("element is not in the integral Weyl group W^Lambda")]
    NotInIntegralWeylGroup,

    #[error("weight is degenerate: <Lambda, alpha^vee> is an integer for some finite root")]
    Degenerate,

    #[error("weight is not in Dom_{sign}: some <Lambda+rho, alpha^vee> with alpha a positive real root is in {forbidden}")]
    NotInDomain { sign: char, forbidden: &'static str },

    #[error("w is not the longest element of its coset w W^Lambda_0")]
    NotLongestInCoset,

    #[error("w is not the shortest element of its coset w W^Lambda_0")]
    NotShortestInCoset,

    #[error("the \"+\" character formula needs kappa > 0")]
    NonPositiveLevel,

    #[error("q-series exponents do not share a common lattice")]
    IncompatibleSeries,

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// True for violated mathematical preconditions, as opposed to malformed input.
    pub fn is_precondition(&self) -> bool {
        !matches!(
            self,
            Error::InvalidLieType(_)
                | Error::MalformedRational(_)
                | Error::DimensionMismatch { .. }
                | Error::IndexOutOfRange { .. }
                | Error::InvalidDegreeBound(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
