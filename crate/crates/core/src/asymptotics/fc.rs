use std::f64::consts::PI;

use num_complex::Complex64;

use super::density::DensityKind;
use super::param::{c_r, c_r_exact, check_r, phi_max, x_hat};
use super::quad::integrate;
use crate::exact::{int, BigComplex, BigFloat, ExactPolynomial, Rational};
use crate::recurrence::{Asymptote, Pencil};
use crate::{Error, Result};

/// Height above the support used to pick the upper boundary value.
const BOUNDARY_EPS: f64 = 1e-8;

/// A point on the Fuss-Catalan branch `ω^{r+1} + x̂ - x̂ω = 0` with `ω → 1`
/// at infinity, together with `ẑ = ((r+1)ω - r)/(ω - 1)` and `F = ω/x̂`.
#[derive(Clone, Debug, PartialEq)]
pub struct FCBranch {
    pub r: usize,
    pub x_hat: BigComplex,
    pub omega: BigComplex,
    pub z_hat: BigComplex,
    pub f: BigComplex,
}

impl FCBranch {
    fn new(r: usize, x_hat: BigComplex, omega: BigComplex) -> Result<Self> {
        let bits = omega.precision();
        let rr = BigComplex::from_rational(&int(r as i64), bits);
        let r1 = BigComplex::from_rational(&int(r as i64 + 1), bits);
        let one = BigComplex::from_rational(&int(1), bits);
        let den = &omega - &one;
        if den.is_zero() || x_hat.is_zero() {
            return Err(Error::OutOfRange("branch point at infinity".into()));
        }
        let z_hat = &(&(&r1 * &omega) - &rr) / &den;
        let f = &omega / &x_hat;
        Ok(FCBranch { r, x_hat, omega, z_hat, f })
    }

    /// `|ω^{r+1} + x̂ - x̂ω|` relative to `|x̂|`.
    pub fn relative_residual(&self) -> f64 {
        let res = fc_pencil(self.r).residual(&self.omega, &self.x_hat, self.omega.precision() + 32);
        res.abs_f64() / self.x_hat.abs_f64()
    }
}

/// `ω^{r+1} + x̂(1 - ω)`.
pub fn fc_pencil(r: usize) -> Pencil {
    Pencil::new(ExactPolynomial::monomial(int(1), r + 1), ExactPolynomial::new(vec![int(1), int(-1)]))
}

fn on_support(r: usize, x: &BigComplex) -> Option<Rational> {
    if !x.im.is_zero() {
        return None;
    }
    let re = x.re.to_rational();
    (re >= int(0) && re <= c_r_exact(r)).then_some(re)
}

/// The branch at `x̂ ∉ [0, c_r]`, at the precision of `x_hat`. At the right
/// end `x̂ = c_r` the double root `(r+1)/r` is returned.
pub fn fc_branch(r: usize, x_hat: &BigComplex) -> Result<FCBranch> {
    check_r(r)?;
    let bits = x_hat.precision();
    if let Some(re) = on_support(r, x_hat) {
        if re == c_r_exact(r) {
            let omega = BigComplex::from_rational(&Rational::new((r as i64 + 1).into(), (r as i64).into()), bits);
            return FCBranch::new(r, x_hat.clone(), omega);
        }
        return Err(Error::OutOfRange(format!("x_hat = {} lies on the support [0, c_r]", re)));
    }
    let mut omega = fc_pencil(r).solve(x_hat, Asymptote::OnePlusInverse, bits)?;
    if x_hat.im.is_zero() {
        // Off the cut the branch is conjugation-symmetric, hence real on the
        // real axis; drop the rounding residue of the complex path.
        omega.im = BigFloat::zero(bits);
    }
    FCBranch::new(r, x_hat.clone(), omega)
}

/// Upper boundary value `ω_+ = lim ω(x̂ + iε)` for `x̂ ∈ (0, c_r)`: tracked to
/// `x̂ + i·10^-8`, then polished on the real axis.
pub fn boundary_omega(r: usize, x_hat: f64, bits: u32) -> Result<BigComplex> {
    check_r(r)?;
    if !(x_hat > 0.0 && x_hat < c_r(r)) {
        return Err(Error::OutOfRange(format!("x_hat = {x_hat} outside (0, c_r)")));
    }
    let pencil = fc_pencil(r);
    let near = pencil.track(Complex64::new(x_hat, BOUNDARY_EPS), Asymptote::OnePlusInverse)?;
    let omega = pencil.polish(&BigComplex::from_c64(Complex64::new(x_hat, 0.0), bits), near, bits)?;
    if omega.im.signum() >= 0 {
        return Err(Error::ContinuationFailed("boundary value left the lower half-plane".into()));
    }
    Ok(omega)
}

/// `ρ e^{-iφ}` with `ρ = sin((r+1)φ)/sin(rφ)`.
pub fn boundary_omega_parametric(r: usize, phi: f64) -> Complex64 {
    let rf = r as f64;
    let rho = ((rf + 1.0) * phi).sin() / (rf * phi).sin();
    Complex64::from_polar(rho, -phi)
}

/// `∫ w(t) dt / (x̂ - t) = ω / (x̂ (r+1 - rω))`.
fn stieltjes_w_from_omega(r: usize, x_hat: Complex64, omega: Complex64) -> Complex64 {
    let rf = r as f64;
    omega / (x_hat * (rf + 1.0 - rf * omega))
}

/// Density of `w` or `v` reconstructed by Stieltjes inversion from boundary
/// values of the branch: `-(1/π) Im S(x + i0)`.
pub fn stieltjes_density_recover(r: usize, kind: DensityKind, points: &[f64]) -> Result<Vec<f64>> {
    check_r(r)?;
    let c = c_r(r);
    let factor = match kind {
        DensityKind::W => 1.0,
        DensityKind::V => c,
        _ => return Err(Error::InvalidParams(format!("stieltjes inversion is implemented for w and v, not {kind}"))),
    };
    points
        .iter()
        .map(|&x| {
            let xh = x * factor;
            let omega = if xh > 0.0 && xh < c {
                boundary_omega(r, xh, 128)?.to_c64()
            } else {
                fc_branch(r, &BigComplex::from_c64(Complex64::new(xh, 0.0), 128))?.omega.to_c64()
            };
            let s = stieltjes_w_from_omega(r, Complex64::new(xh, 0.0), omega);
            Ok(-s.im / PI * factor)
        })
        .collect()
}

/// `∫_0^1 v(y) dy / (x - y) = ω / (x (r+1 - rω))` at `x̂ = c_r x`.
pub fn stieltjes_v(r: usize, x: &BigComplex) -> Result<BigComplex> {
    check_r(r)?;
    let bits = x.precision();
    let xh = x.scale(&BigFloat::from_rational(&c_r_exact(r), bits));
    let b = fc_branch(r, &xh)?;
    let rr = BigComplex::from_rational(&int(r as i64), bits);
    let r1 = BigComplex::from_rational(&int(r as i64 + 1), bits);
    let den = &(&r1 - &(&rr * &b.omega)) * x;
    Ok(&b.omega / &den)
}

/// The same transform by quadrature in `φ`: `((r+1)/π) ∫ dφ / (x - x̂(φ)/c_r)`.
pub fn stieltjes_v_quadrature(r: usize, x: Complex64) -> Result<Complex64> {
    check_r(r)?;
    let c = c_r(r);
    let k = (r as f64 + 1.0) / PI;
    let f = |phi: f64| 1.0 / (x - x_hat(r, phi) / c);
    let re = integrate(&|p| f(p).re, 0.0, phi_max(r), 1e-14);
    let im = integrate(&|p| f(p).im, 0.0, phi_max(r), 1e-14);
    Ok(Complex64::new(k * re, k * im))
}

fn check_t(t: &Rational) -> Result<()> {
    if !(t > &int(0) && t <= &int(1)) {
        return Err(Error::OutOfRange(format!("t = {t} outside (0, 1]")));
    }
    Ok(())
}

/// Solution of `x (z - t(r+1)/r)^r = (z - t)^{r+1}` with `z ≈ x` at
/// infinity, through `z(t x̂/r, t) = t ẑ(x̂)/r`.
pub fn z_of_xt(r: usize, x: &BigComplex, t: &Rational) -> Result<BigComplex> {
    check_r(r)?;
    check_t(t)?;
    let bits = x.precision();
    let up = BigFloat::from_rational(&(int(r as i64) / t), bits);
    let b = fc_branch(r, &x.scale(&up))?;
    let down = BigFloat::from_rational(&(t / int(r as i64)), bits);
    Ok(b.z_hat.scale(&down))
}

/// The `z(x, t)` equation as a pencil in `x`.
pub fn mlt_pencil(r: usize, t: &Rational) -> Pencil {
    let shift = t * Rational::new((r as i64 + 1).into(), (r as i64).into());
    let base = -&ExactPolynomial::from_roots(&vec![t.clone(); r + 1]);
    let slope = ExactPolynomial::from_roots(&vec![shift; r]);
    Pencil::new(base, slope)
}

/// [`z_of_xt`] by direct continuation of the equation in `x`.
pub fn z_of_xt_direct(r: usize, x: &BigComplex, t: &Rational) -> Result<BigComplex> {
    check_r(r)?;
    check_t(t)?;
    mlt_pencil(r, t).solve(x, Asymptote::Identity, x.precision())
}
