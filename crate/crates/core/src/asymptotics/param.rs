use std::f64::consts::PI;

use num_traits::pow;

use crate::exact::{int, Rational};
use crate::{Error, Result};

/// Right end of the support of `w_r`: `(r+1)^(r+1) / r^r`.
pub fn c_r(r: usize) -> f64 {
    let r = r as f64;
    (r + 1.0).powf(r + 1.0) / r.powf(r)
}

pub fn c_r_exact(r: usize) -> Rational {
    pow(int(r as i64 + 1), r + 1) / pow(int(r as i64), r)
}

/// Upper end `π/(r+1)` of the angle range.
pub fn phi_max(r: usize) -> f64 {
    PI / (r as f64 + 1.0)
}

/// A point of the trigonometric parametrization.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PhiPoint {
    pub phi: f64,
    pub x_hat: f64,
    pub r: usize,
}

impl PhiPoint {
    pub fn new(r: usize, phi: f64) -> Result<Self> {
        Ok(PhiPoint { phi, x_hat: x_of_phi(r, phi)?, r })
    }

    /// `ρ = sin((r+1)φ) / sin(rφ)`.
    pub fn rho(&self) -> f64 {
        let r = self.r as f64;
        ((r + 1.0) * self.phi).sin() / (r * self.phi).sin()
    }
}

pub(crate) fn check_r(r: usize) -> Result<()> {
    if r == 0 {
        return Err(Error::InvalidParams("r must be at least 1".into()));
    }
    Ok(())
}

pub(crate) fn check_phi(r: usize, phi: f64) -> Result<()> {
    check_r(r)?;
    if !(phi > 0.0 && phi < phi_max(r)) {
        return Err(Error::OutOfRange(format!("phi = {phi} outside (0, pi/{})", r + 1)));
    }
    Ok(())
}

/// Unchecked `x̂(φ)`.
pub(crate) fn x_hat(r: usize, phi: f64) -> f64 {
    let rf = r as f64;
    let s1 = ((rf + 1.0) * phi).sin();
    let sr = (rf * phi).sin();
    s1.powi(r as i32 + 1) / (phi.sin() * sr.powi(r as i32))
}

/// `x̂ = sin((r+1)φ)^(r+1) / (sin φ · sin(rφ)^r)`, decreasing from `c_r` to 0.
pub fn x_of_phi(r: usize, phi: f64) -> Result<f64> {
    check_phi(r, phi)?;
    Ok(x_hat(r, phi))
}

/// `|(r+1) sin rφ - e^{iφ} r sin (r+1)φ|^2`. The real part is summed as
/// `2 sin φ Σ_k sin((r-k)φ) sin((k+1)φ)`, free of cancellation as `φ → 0`.
pub(crate) fn modulus_sq(r: usize, phi: f64) -> f64 {
    let rf = r as f64;
    let s = phi.sin();
    let sum: f64 = (0..r).map(|k| (((r - k) as f64) * phi).sin() * ((k as f64 + 1.0) * phi).sin()).sum();
    let re = 2.0 * s * sum;
    let im = s * rf * ((rf + 1.0) * phi).sin();
    re * re + im * im
}

/// `|x̂'(φ)| = x̂ |(r+1) sin rφ - e^{iφ} r sin(r+1)φ|^2 / (sin φ sin rφ sin(r+1)φ)`.
pub fn x_prime_abs(r: usize, phi: f64) -> Result<f64> {
    check_phi(r, phi)?;
    Ok(dx_dphi(r, phi))
}

pub(crate) fn dx_dphi(r: usize, phi: f64) -> f64 {
    let rf = r as f64;
    let den = phi.sin() * (rf * phi).sin() * ((rf + 1.0) * phi).sin();
    x_hat(r, phi) * modulus_sq(r, phi) / den
}

/// Inverse of [`x_of_phi`] by bisection (x̂ is monotone), to the resolution
/// of `f64`.
pub fn phi_of_x(r: usize, x_hat_value: f64) -> Result<f64> {
    check_r(r)?;
    let c = c_r(r);
    if !(x_hat_value > 0.0 && x_hat_value < c) {
        return Err(Error::OutOfRange(format!("x_hat = {x_hat_value} outside (0, {c})")));
    }
    Ok(phi_of_x_unchecked(r, x_hat_value))
}

pub(crate) fn phi_of_x_unchecked(r: usize, target: f64) -> f64 {
    let (mut lo, mut hi) = (0.0f64, phi_max(r));
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if x_hat(r, mid) > target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}
