//! Exact construction of the polynomial families.
//!
//! * Jacobi-Piñeiro: monic degree-|n| solution of the exact orthogonality
//!   system against `x^α_j (1-x)^β` on `[0,1]`.
//! * Multiple Laguerre (first kind): the explicit nested binomial sum.
//! * Meijer-G stepline: the explicit single sum (already monic).
//!
//! Every family is also reachable through the [`Family`] registry so the
//! harness can pick one by name.

mod jacobi_pineiro;
mod laguerre;
mod linsolve;
mod meijer;
mod orthogonality;
mod params;
mod recurrence_build;
mod registry;

pub use jacobi_pineiro::build_jp;
pub use laguerre::build_ml_explicit;
pub use linsolve::solve_exact;
pub use meijer::build_meijer_stepline;
pub use orthogonality::{orthogonality_check, OrthogonalityReport};
pub use params::{FamilyKind, FamilyParams};
pub use recurrence_build::{build_via_recurrence, RecurrenceBuilder};
pub use registry::{family, family_names, registered_families, root_bound, Family, LimitLaw};
