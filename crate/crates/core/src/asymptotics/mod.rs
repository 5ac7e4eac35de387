//! Limit zero densities through the angle parametrization, their CDFs and
//! moments, the Fuss-Catalan branch with Stieltjes inversion, Mellin
//! identities and endpoint exponents.

mod closed;
mod density;
mod fc;
mod mellin;
mod param;
mod quad;

pub use closed::{
    arcsine_cdf, arcsine_density, g2_closed, h_kernel, marchenko_pastur, u2_closed, u2_kernel, u2_scaled_closed,
    v2_closed,
};
pub use density::{
    cdf_g, cdf_u, cdf_v, cdf_w, density_by_name, density_g, density_u, density_v, density_w, density_w_explicit,
    limit_density, moment, registered_densities, weight_xg, CurveSample, DensityCurve, DensityKind, Endpoint,
    LimitDensity, MomentCheck,
};
pub use fc::{
    boundary_omega, boundary_omega_parametric, fc_branch, fc_pencil, mlt_pencil, stieltjes_density_recover,
    stieltjes_v, stieltjes_v_quadrature, z_of_xt, z_of_xt_direct, FCBranch,
};
pub use mellin::{endpoint_exponent, expected_exponent, mellin_check_g, mellin_check_u, EXPONENT_WINDOW};
pub use param::{c_r, c_r_exact, phi_max, phi_of_x, x_of_phi, x_prime_abs, PhiPoint};
pub use quad::integrate;
