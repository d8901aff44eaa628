use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("pole: {0}")]
    Pole(String),

    #[error("invalid Galois exponent {0}, expected 1, 2, 3 or 4")]
    InvalidGaloisExponent(i64),

    #[error("singular curve: {0}")]
    SingularCurve(String),

    #[error("degenerate substitution: {0}")]
    DegenerateSubstitution(String),

    #[error("insufficient precision: needed {needed} coefficients, have {available}")]
    InsufficientPrecision { needed: usize, available: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("not in the upper half-plane: im(tau) = {0}")]
    NotInUpperHalfPlane(f64),

    #[error("product did not converge within {iterations} factors (|q| = {q_abs})")]
    NonConvergence { iterations: usize, q_abs: f64 },

    #[error("exact division failed: {0}")]
    InexactDivision(String),

    #[error("unknown suite {0:?}, expected field, curve, watson, torsion, qseries or all")]
    UnknownSuite(String),

    #[error("tolerance exceeded: {0}")]
    ToleranceExceeded(String),
}

pub type Result<T> = std::result::Result<T, Error>;
