//! Exact sparse multivariate polynomials over the rationals.

mod monomial;
mod order;
mod parse;
mod polynomial;
mod ring;
mod weights;

pub use monomial::Monomial;
pub use order::MonomialOrder;
pub use parse::{parse_polynomial, GRAMMAR};
pub use polynomial::Polynomial;
pub use ring::{Ring, MAX_VARS};
pub use weights::{detect_weights, WeightVector};

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{name}` at position {pos}")]
    UnknownVariable { name: String, pos: usize },
    #[error("invalid variable list: {0}")]
    InvalidVariables(String),
    #[error("polynomials live in different rings: [{left}] vs [{right}]")]
    RingMismatch { left: String, right: String },
    #[error("variable index {index} out of range for a ring with {nvars} variables")]
    VariableIndex { index: usize, nvars: usize },
    #[error("substitution needs {expected} images, got {got}")]
    SubstitutionArity { expected: usize, got: usize },
    #[error("polynomial is not quasi-homogeneous")]
    NotQuasiHomogeneous,
}

pub(crate) fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
