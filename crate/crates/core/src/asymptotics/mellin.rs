use std::f64::consts::PI;

use super::density::{limit_density, DensityKind, Endpoint};
use super::param::{check_r, phi_of_x, x_hat};
use super::quad::integrate;
use crate::{Error, Result};

/// `(u_r(y), ∫_y^{c_r} w_r(x) dx/x)`, the integral taken in `φ`.
pub fn mellin_check_u(r: usize, y: f64) -> Result<(f64, f64)> {
    let phi = phi_of_x(r, y)?;
    let left = limit_density(DensityKind::U).at_phi(r, phi);
    let k = (r as f64 + 1.0) / PI;
    let right = k * integrate(&|p| 1.0 / x_hat(r, p), 0.0, phi, 1e-14);
    Ok((left, right))
}

/// `(g_r(y), (1/r) ∫_y^{c_r} w_r(x) (y/x)^{1/r-1} dx/x)`.
pub fn mellin_check_g(r: usize, y: f64) -> Result<(f64, f64)> {
    let phi = phi_of_x(r, y)?;
    let left = limit_density(DensityKind::G).at_phi(r, phi);
    let rf = r as f64;
    let k = (rf + 1.0) / (rf * PI) * y.powf(1.0 / rf - 1.0);
    let right = k * integrate(&|p| x_hat(r, p).powf(-1.0 / rf), 0.0, phi, 1e-14);
    Ok((left, right))
}

/// Distances to the endpoint, as fractions of the support length.
pub const EXPONENT_WINDOW: (f64, f64) = (1e-8, 1e-4);
const EXPONENT_POINTS: usize = 41;

/// Least-squares slope of `log density` against `log distance` on 41
/// log-spaced distances in [`EXPONENT_WINDOW`] (scaled by the support length).
pub fn endpoint_exponent(kind: DensityKind, r: usize, end: Endpoint) -> Result<f64> {
    check_r(r)?;
    if r > 6 {
        return Err(Error::OutOfRange(format!("endpoint regression is calibrated for r <= 6, got {r}")));
    }
    let d = limit_density(kind);
    let (lo, hi) = d.support(r);
    let len = hi - lo;
    let (a, b) = (EXPONENT_WINDOW.0.log10(), EXPONENT_WINDOW.1.log10());
    let mut pts = Vec::with_capacity(EXPONENT_POINTS);
    for i in 0..EXPONENT_POINTS {
        let dist = 10f64.powf(a + (b - a) * i as f64 / (EXPONENT_POINTS - 1) as f64) * len;
        let x = match end {
            Endpoint::Left => lo + dist,
            Endpoint::Right => hi - dist,
        };
        pts.push((dist.ln(), d.density(r, x)?.ln()));
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    Ok(sxy / sxx)
}

/// Theoretical endpoint order: `-r/(r+1)` at 0, `-1/2` at the right end of
/// `v`/`w`, `+1/2` at the right end of `u`/`g`.
pub fn expected_exponent(kind: DensityKind, r: usize, end: Endpoint) -> f64 {
    let rf = r as f64;
    match (end, kind) {
        (Endpoint::Left, DensityKind::XG) => 1.0 / (rf + 1.0),
        (Endpoint::Left, _) => -rf / (rf + 1.0),
        (Endpoint::Right, DensityKind::V | DensityKind::W) => -0.5,
        (Endpoint::Right, _) => 0.5,
    }
}
