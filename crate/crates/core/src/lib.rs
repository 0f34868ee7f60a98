//! Exact symbolic computation for hypersurface algebras `ℂ[z₁..z_n]/⟨f⟩`.
//!
//! The crate is organised bottom-up:
//!
//! * [`poly`]: sparse multivariate polynomials over ℚ, monomial orders, the
//!   text grammar and quasi-homogeneous weight detection.
//! * [`groebner`]: multivariate division, reduced Buchberger bases, ideal
//!   membership and ideal quotients.
//! * [`quotient`]: standard monomials, Milnor numbers, weighted Hilbert
//!   functions and multiplication matrices on weight slices.
//! * [`linalg`]: dense exact matrices and fraction-free rank.
//! * [`koszul`]: the weight-graded complex `A[η₁..η_n, b]` with
//!   `d = Σ ∂_j f · b · ∂/∂η_j`, whose cohomology is the Hochschild
//!   cohomology of `A`.
//! * [`catalog`]: ADE curves and Klein surfaces with their expected results
//!   and the verification battery.

pub mod catalog;
pub mod groebner;
pub mod koszul;
pub mod linalg;
pub mod poly;
pub mod quotient;

pub use groebner::{DivisionResult, GroebnerBasis, GroebnerError, Ideal};
pub use koszul::{CohomologyReport, KoszulComplex, KoszulError};
pub use poly::{Monomial, MonomialOrder, PolyError, Polynomial, Rational, Ring, WeightVector};
pub use quotient::{GradedQuotient, QuotientBasis, QuotientError};
