//! Exact arithmetic: rationals, sparse Laurent polynomials in `x, y, z`, rational
//! functions, polynomial matrices, and univariate polynomials in `z`.

pub mod json;
pub mod matrix;
pub mod poly;
pub mod ratfunc;
pub mod rational;
pub mod series;
pub mod unipoly;

use thiserror::Error;

pub use matrix::{solve_linear, LinearSolution, PolyMatrix};
pub use poly::{LaurentPoly3, Monomial, Var};
pub use ratfunc::RatFunc3;
pub use rational::Rational;
pub use series::series_coefficients;
pub use unipoly::{UniPolyZ, UniRatFunc};

#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("cannot substitute 0 for {0}: it appears with a negative exponent")]
    ZeroIntoNegativePower(&'static str),
    #[error("division by zero")]
    DivisionByZero,
    #[error("rational function has a zero denominator")]
    ZeroDenominator,
    #[error("linear system is singular")]
    Singular,
    #[error("fraction-free elimination produced an inexact division")]
    InexactDivision,
    #[error("q(x, y, 0) is not a nonzero constant; extract coefficients by transfer iteration instead")]
    NonConstantLeadingDenominator,
    #[error("entry did not reduce to a constant")]
    NotConstant,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("parse error: {0}")]
    Parse(String),
}

/// Specializes `f` at `(x0, y0)` and returns the univariate numerator and denominator in `z`.
pub fn uni_specialize(f: &RatFunc3, x0: &Rational, y0: &Rational) -> Result<(UniPolyZ, UniPolyZ), AlgebraError> {
    f.specialize(x0, y0)
}
