//! Elementary closed forms for `r = 1, 2`, used as independent anchors for
//! the parametrized densities.

use std::f64::consts::PI;

/// Arcsine density `1 / (π √(x(1-x)))` on `(0, 1)`.
pub fn arcsine_density(x: f64) -> f64 {
    1.0 / (PI * (x * (1.0 - x)).sqrt())
}

pub fn arcsine_cdf(x: f64) -> f64 {
    2.0 / PI * x.clamp(0.0, 1.0).sqrt().asin()
}

/// Marchenko-Pastur density `(1/2π) √((4-x)/x)` on `(0, 4)`.
pub fn marchenko_pastur(x: f64) -> f64 {
    ((4.0 - x) / x).sqrt() / (2.0 * PI)
}

/// `v_2(x) = (√3/4π) ((1+s)^{1/3} + (1-s)^{1/3}) / (x^{2/3} s)`, `s = √(1-x)`.
pub fn v2_closed(x: f64) -> f64 {
    let s = (1.0 - x).sqrt();
    3f64.sqrt() / (4.0 * PI) * ((1.0 + s).cbrt() + (1.0 - s).cbrt()) / (x.powf(2.0 / 3.0) * s)
}

/// `(3√3/16π) ((1+3s)(1-s)^{1/3} - (1-3s)(1+s)^{1/3}) / y^{2/3}` on `(0, 1)`.
pub fn u2_kernel(y: f64) -> f64 {
    let s = (1.0 - y).sqrt();
    3.0 * 3f64.sqrt() / (16.0 * PI) * ((1.0 + 3.0 * s) * (1.0 - s).cbrt() - (1.0 - 3.0 * s) * (1.0 + s).cbrt())
        / y.powf(2.0 / 3.0)
}

/// `u_2(x̂) = (4/27) k(4x̂/27)` with `k` = [`u2_kernel`], on `(0, 27/4)`.
pub fn u2_closed(x_hat: f64) -> f64 {
    4.0 / 27.0 * u2_kernel(4.0 * x_hat / 27.0)
}

/// `(8/27) k(8y/27)` on `(0, 27/8)`: the density of `x̂/2`, i.e. of the
/// multiple Laguerre zeros scaled by `1/(2n)`.
pub fn u2_scaled_closed(y: f64) -> f64 {
    8.0 / 27.0 * u2_kernel(8.0 * y / 27.0)
}

/// `h(y) = (3√3/4π) ((1+s)^{1/3} - (1-s)^{1/3}) / y^{2/3}` on `(0, 1)`.
pub fn h_kernel(y: f64) -> f64 {
    let s = (1.0 - y).sqrt();
    3.0 * 3f64.sqrt() / (4.0 * PI) * ((1.0 + s).cbrt() - (1.0 - s).cbrt()) / y.powf(2.0 / 3.0)
}

/// `g_2(x) = (4/27) h(4x/27)` on `(0, 27/4)`.
pub fn g2_closed(x: f64) -> f64 {
    4.0 / 27.0 * h_kernel(4.0 * x / 27.0)
}
