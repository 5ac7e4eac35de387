//! Certified real zeros of exact polynomials, interlacing checks, empirical
//! zero distributions and the normalized logarithmic derivative.

mod empirical;
mod isolate;
mod logderiv;
mod zeroset;

pub use empirical::{empirical_cdf, ks_distance, EmpiricalCDF};
pub use isolate::isolate_zeros;
pub use logderiv::log_derivative;
pub use zeroset::{interlacing_check, refine, Enclosure, ZeroSet, DEFAULT_TOLERANCE};
