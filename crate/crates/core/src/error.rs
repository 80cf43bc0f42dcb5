use thiserror::Error;

/// Domain errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("the zero polynomial has no basis expansion of a defined degree")]
    ZeroPolynomial,
    #[error("dilation factor k = 0 does not preserve degree")]
    ZeroDilation,
    #[error("operation requires strictly positive coefficients")]
    NonPositiveCoefficients,
    #[error("invalid family parameters: {0}")]
    InvalidParameters(String),
    #[error("enumeration too large: {0}")]
    TooLarge(String),
    #[error("lattice-point enumeration is not defined for a generic polynomial")]
    UnsupportedGeneric,
    #[error("polynomial is not CL: its roots do not all lie on Re(z) = -1/2")]
    NotCL,
    #[error("negative input: {0}")]
    NegativeInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
