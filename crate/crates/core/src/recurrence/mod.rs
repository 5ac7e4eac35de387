//! Nearest-neighbour recurrence coefficients, their ray limits, the limit
//! surfaces `A_{r-1}`, `B_r` and the branch solver for `(z-x)B(z) + A(z) = 0`.

mod branch;
mod coeffs;
mod limits;
mod surface;

pub use branch::{Asymptote, Pencil};
pub use coeffs::{jp_nn_coeffs, ml_nn_coeffs, nn_coeffs, NNCoefficients};
pub use limits::{jp_limit_coeffs, ml_limit_coeffs, LimitData};
pub use surface::{
    build_surface, diagonal_constants, diagonal_equation, diagonal_surface, solve_z, LimitSurface,
};
