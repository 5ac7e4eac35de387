//! Multiple orthogonal polynomials in exact arithmetic.
//!
//! The crate builds Jacobi-Piñeiro, multiple Laguerre (first kind) and
//! Meijer-G stepline polynomials with rational coefficients, isolates their
//! zeros with exact sign-change certificates, and evaluates the limiting zero
//! densities through the trigonometric parametrization
//!
//! ```text
//! x̂(φ) = sin((r+1)φ)^(r+1) / (sin φ · sin(rφ)^r),   0 < φ < π/(r+1)
//! ```
//!
//! Layers, bottom up:
//!
//! * [`exact`]: rationals, a rounding big-float, exact polynomials, moment ratios.
//! * [`families`]: the three polynomial families and the [`families::Family`] registry.
//! * [`recurrence`]: nearest-neighbour coefficients, ray limits, limit surfaces
//!   and the branch solver for the ratio-asymptotics equation.
//! * [`zeros`]: certified isolation, refinement, interlacing, empirical CDFs.
//! * [`asymptotics`]: limit densities, CDFs, moments, the Fuss-Catalan branch,
//!   Stieltjes inversion and Mellin identities.

pub mod asymptotics;
pub mod error;
pub mod exact;
pub mod families;
pub mod recurrence;
pub mod zeros;

pub use error::{Error, Result};
pub use exact::{BigComplex, BigFloat, ExactPolynomial, MultiIndex, Rational};
pub use families::{FamilyKind, FamilyParams};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
