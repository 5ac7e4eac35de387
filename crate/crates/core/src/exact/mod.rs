//! Exact scalars and polynomials, plus the rounding float layer used for
//! certified numeric evaluation.

mod bigfloat;
mod index;
mod moments;
mod poly;
mod rational;

pub use bigfloat::{BigComplex, BigFloat};
pub use index::MultiIndex;
pub use moments::{beta_moment_ratio, beta_moment_ratios, gamma_moment_ratio, gamma_moment_ratios};
pub use poly::{ComplexEval, ExactPolynomial, FloatEval, FloatImage};
pub use rational::{format_rational, int, parse_rational, rat, rational_from_f64, to_f64, Rational};
