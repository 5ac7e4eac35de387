use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::binomial;

use super::param::{c_r, check_phi, check_r, dx_dphi, modulus_sq, phi_max, phi_of_x_unchecked, x_hat};
use super::quad::integrate;
use crate::exact::{to_f64, Rational};
use crate::{Error, Result};

/// Absolute tolerance for CDF and moment quadrature.
const QUAD_TOL: f64 = 1e-13;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DensityKind {
    W,
    V,
    U,
    G,
    XG,
}

impl DensityKind {
    pub const ALL: [DensityKind; 5] = [DensityKind::W, DensityKind::V, DensityKind::U, DensityKind::G, DensityKind::XG];

    pub fn name(self) -> &'static str {
        match self {
            DensityKind::W => "w",
            DensityKind::V => "v",
            DensityKind::U => "u",
            DensityKind::G => "g",
            DensityKind::XG => "xg",
        }
    }
}

impl fmt::Display for DensityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for DensityKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        DensityKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::InvalidParams(format!("unknown density kind '{s}' (expected w, v, u, g or xg)")))
    }
}

fn sines(r: usize, phi: f64) -> (f64, f64, f64) {
    let rf = r as f64;
    (phi.sin(), (rf * phi).sin(), ((rf + 1.0) * phi).sin())
}

/// `w_r(x̂(φ)) = (r+1) / (π |x̂'(φ)|)`.
pub fn density_w(r: usize, phi: f64) -> Result<f64> {
    check_phi(r, phi)?;
    Ok((r as f64 + 1.0) / (PI * dx_dphi(r, phi)))
}

/// The same density from the expanded trigonometric quotient.
pub fn density_w_explicit(r: usize, phi: f64) -> Result<f64> {
    check_phi(r, phi)?;
    let rf = r as f64;
    let (s, sr, s1) = sines(r, phi);
    let den = (rf + 1.0).powi(2) * sr * sr - 2.0 * rf * (rf + 1.0) * s1 * sr * phi.cos() + rf * rf * s1 * s1;
    Ok((rf + 1.0) / (PI * x_hat(r, phi)) * s * sr * s1 / den)
}

/// `v_r(x) = c_r w_r(c_r x)` on `(0, 1)`.
pub fn density_v(r: usize, x: f64) -> Result<f64> {
    check_r(r)?;
    if !(x > 0.0 && x < 1.0) {
        return Err(Error::OutOfRange(format!("x = {x} outside (0, 1)")));
    }
    let c = c_r(r);
    Ok(c * density_w(r, phi_of_x_unchecked(r, c * x))?)
}

/// `u_r = sin(rφ)^(r+1) / (rπ sin((r+1)φ)^r)`.
pub fn density_u(r: usize, phi: f64) -> Result<f64> {
    check_phi(r, phi)?;
    let (_, sr, s1) = sines(r, phi);
    Ok(sr.powi(r as i32 + 1) / (r as f64 * PI * s1.powi(r as i32)))
}

/// Fuss-Catalan density `g_r = sin²φ sin(rφ)^(r-1) / (π sin((r+1)φ)^r)`.
pub fn density_g(r: usize, phi: f64) -> Result<f64> {
    check_phi(r, phi)?;
    let (s, sr, s1) = sines(r, phi);
    Ok(s * s * sr.powi(r as i32 - 1) / (PI * s1.powi(r as i32)))
}

/// `x̂ g_r(x̂) = sin φ sin((r+1)φ) / (π sin rφ)`.
pub fn weight_xg(r: usize, phi: f64) -> Result<f64> {
    check_phi(r, phi)?;
    let (s, sr, s1) = sines(r, phi);
    Ok(s * s1 / (PI * sr))
}

/// Quadrature value of a moment next to its exact target.
#[derive(Clone, Debug, PartialEq)]
pub struct MomentCheck {
    pub m: u32,
    pub value: f64,
    pub target: Rational,
    pub error: f64,
}

/// Uniform φ-grid samples of a density, ascending in `x`.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityCurve {
    pub kind: DensityKind,
    pub r: usize,
    pub support: (f64, f64),
    pub samples: Vec<CurveSample>,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CurveSample {
    pub phi: f64,
    pub x: f64,
    pub density: f64,
    pub cdf: f64,
}

fn binom(n: usize, k: usize) -> Rational {
    Rational::from_integer(binomial(BigInt::from(n), BigInt::from(k)))
}

fn fuss_catalan(r: usize, m: usize) -> Rational {
    binom((r + 1) * m, m) / Rational::from_integer(BigInt::from(r * m + 1))
}

/// A limiting zero density, pulled back to the angle `φ`.
pub trait LimitDensity: Send + Sync {
    fn kind(&self) -> DensityKind;

    fn name(&self) -> &'static str {
        self.kind().name()
    }

    /// Factor mapping `x̂` to this density's variable.
    fn scale(&self, _r: usize) -> f64 {
        1.0
    }

    fn support(&self, r: usize) -> (f64, f64) {
        (0.0, c_r(r) * self.scale(r))
    }

    /// Density value at the point `scale · x̂(φ)`; `φ` is not range-checked.
    fn at_phi(&self, r: usize, phi: f64) -> f64;

    /// `density · |dx/dφ|`: smooth on the closed angle range.
    fn phi_weight(&self, r: usize, phi: f64) -> f64;

    fn moment_target(&self, r: usize, m: u32) -> Rational;

    fn position(&self, r: usize, phi: f64) -> f64 {
        self.scale(r) * x_hat(r, phi)
    }

    /// Angle of an interior point `x` of the support.
    fn phi_at(&self, r: usize, x: f64) -> Result<f64> {
        check_r(r)?;
        let (lo, hi) = self.support(r);
        if !(x > lo && x < hi) {
            return Err(Error::OutOfRange(format!("x = {x} outside ({lo}, {hi})")));
        }
        Ok(phi_of_x_unchecked(r, x / self.scale(r)))
    }

    fn density(&self, r: usize, x: f64) -> Result<f64> {
        let phi = self.phi_at(r, x)?;
        Ok(self.at_phi(r, phi))
    }

    /// Mass below `x`: the weight integrated over `(φ_x, π/(r+1))`.
    fn cdf(&self, r: usize, x: f64) -> Result<f64> {
        check_r(r)?;
        let (lo, hi) = self.support(r);
        if x <= lo {
            return Ok(0.0);
        }
        if x >= hi {
            return Ok(1.0);
        }
        let phi = self.phi_at(r, x)?;
        let f = |t: f64| self.phi_weight(r, t);
        Ok(integrate(&f, phi, phi_max(r), QUAD_TOL).clamp(0.0, 1.0))
    }

    fn moment(&self, r: usize, m: u32) -> Result<MomentCheck> {
        check_r(r)?;
        let target = self.moment_target(r, m);
        let t = to_f64(&target);
        let f = |phi: f64| self.position(r, phi).powi(m as i32) * self.phi_weight(r, phi);
        let value = integrate(&f, 0.0, phi_max(r), QUAD_TOL * t.max(1.0));
        Ok(MomentCheck { m, value, error: (value - t).abs(), target })
    }

    /// Limit of the density at an end of the support (`+∞` where it diverges).
    fn endpoint_value(&self, end: Endpoint) -> f64 {
        match (self.kind(), end) {
            (DensityKind::XG, Endpoint::Left) => 0.0,
            (_, Endpoint::Left) => f64::INFINITY,
            (DensityKind::W | DensityKind::V, Endpoint::Right) => f64::INFINITY,
            (_, Endpoint::Right) => 0.0,
        }
    }

    /// Samples at `φ_k = k π/((r+1) grid)`, `k = 0..=grid`, ascending in `x`.
    /// The CDF column accumulates panel integrals, so it is monotone and
    /// reaches 1 at the right end up to quadrature error.
    fn curve(&self, r: usize, grid: usize) -> Result<DensityCurve> {
        check_r(r)?;
        if grid == 0 {
            return Err(Error::InvalidParams("grid must be positive".into()));
        }
        let h = phi_max(r) / grid as f64;
        let f = |t: f64| self.phi_weight(r, t);
        let (lo, hi) = self.support(r);
        let mut samples = Vec::with_capacity(grid + 1);
        let mut mass = 0.0;
        for k in (0..=grid).rev() {
            let phi = k as f64 * h;
            if k < grid {
                mass += integrate(&f, phi, phi + h, QUAD_TOL / grid as f64);
            }
            let (x, density) = match k {
                0 => (hi, self.endpoint_value(Endpoint::Right)),
                k if k == grid => (lo, self.endpoint_value(Endpoint::Left)),
                _ => (self.position(r, phi), self.at_phi(r, phi)),
            };
            samples.push(CurveSample { phi, x, density, cdf: mass.min(1.0) });
        }
        Ok(DensityCurve { kind: self.kind(), r, support: self.support(r), samples })
    }
}

/// Ends of a support interval.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Endpoint {
    Left,
    Right,
}

struct W;
struct V;
struct U;
struct G;
struct XG;

impl LimitDensity for W {
    fn kind(&self) -> DensityKind {
        DensityKind::W
    }
    fn at_phi(&self, r: usize, phi: f64) -> f64 {
        (r as f64 + 1.0) / (PI * dx_dphi(r, phi))
    }
    fn phi_weight(&self, r: usize, _phi: f64) -> f64 {
        (r as f64 + 1.0) / PI
    }
    fn moment_target(&self, r: usize, m: u32) -> Rational {
        binom((r + 1) * m as usize, m as usize)
    }
    /// Uniform in `φ`: `1 - (r+1)φ/π`.
    fn cdf(&self, r: usize, x: f64) -> Result<f64> {
        check_r(r)?;
        if x <= 0.0 {
            return Ok(0.0);
        }
        if x >= c_r(r) {
            return Ok(1.0);
        }
        Ok(1.0 - (r as f64 + 1.0) * phi_of_x_unchecked(r, x) / PI)
    }
}

impl LimitDensity for V {
    fn kind(&self) -> DensityKind {
        DensityKind::V
    }
    fn scale(&self, r: usize) -> f64 {
        1.0 / c_r(r)
    }
    fn support(&self, _r: usize) -> (f64, f64) {
        (0.0, 1.0)
    }
    fn at_phi(&self, r: usize, phi: f64) -> f64 {
        c_r(r) * W.at_phi(r, phi)
    }
    fn phi_weight(&self, r: usize, phi: f64) -> f64 {
        W.phi_weight(r, phi)
    }
    fn moment_target(&self, r: usize, m: u32) -> Rational {
        W.moment_target(r, m) / num_traits::pow(super::param::c_r_exact(r), m as usize)
    }
    fn cdf(&self, r: usize, x: f64) -> Result<f64> {
        W.cdf(r, x * c_r(r))
    }
}

impl LimitDensity for U {
    fn kind(&self) -> DensityKind {
        DensityKind::U
    }
    fn at_phi(&self, r: usize, phi: f64) -> f64 {
        let (_, sr, s1) = sines(r, phi);
        sr.powi(r as i32 + 1) / (r as f64 * PI * s1.powi(r as i32))
    }
    fn phi_weight(&self, r: usize, phi: f64) -> f64 {
        modulus_sq(r, phi) / (r as f64 * PI * phi.sin().powi(2))
    }
    fn moment_target(&self, r: usize, m: u32) -> Rational {
        binom((r + 1) * m as usize, m as usize) / Rational::from_integer(BigInt::from(m + 1))
    }
}

impl LimitDensity for G {
    fn kind(&self) -> DensityKind {
        DensityKind::G
    }
    fn at_phi(&self, r: usize, phi: f64) -> f64 {
        let (s, sr, s1) = sines(r, phi);
        s * s * sr.powi(r as i32 - 1) / (PI * s1.powi(r as i32))
    }
    fn phi_weight(&self, r: usize, phi: f64) -> f64 {
        modulus_sq(r, phi) / (PI * (r as f64 * phi).sin().powi(2))
    }
    fn moment_target(&self, r: usize, m: u32) -> Rational {
        fuss_catalan(r, m as usize)
    }
}

impl LimitDensity for XG {
    fn kind(&self) -> DensityKind {
        DensityKind::XG
    }
    fn at_phi(&self, r: usize, phi: f64) -> f64 {
        let (s, sr, s1) = sines(r, phi);
        s * s1 / (PI * sr)
    }
    fn phi_weight(&self, r: usize, phi: f64) -> f64 {
        x_hat(r, phi) * G.phi_weight(r, phi)
    }
    /// Fuss-Catalan numbers shifted by one.
    fn moment_target(&self, r: usize, m: u32) -> Rational {
        fuss_catalan(r, m as usize + 1)
    }
}

pub fn registered_densities() -> &'static [Box<dyn LimitDensity>] {
    static REGISTRY: OnceLock<Vec<Box<dyn LimitDensity>>> = OnceLock::new();
    REGISTRY.get_or_init(|| vec![Box::new(W), Box::new(V), Box::new(U), Box::new(G), Box::new(XG)])
}

pub fn limit_density(kind: DensityKind) -> &'static dyn LimitDensity {
    registered_densities()
        .iter()
        .find(|d| d.kind() == kind)
        .map(|d| d.as_ref())
        .expect("every kind is registered")
}

/// Looks a density up by name (`w`, `v`, `u`, `g`, `xg`).
pub fn density_by_name(name: &str) -> Result<&'static dyn LimitDensity> {
    Ok(limit_density(name.parse()?))
}

pub fn cdf_w(r: usize, x_hat: f64) -> Result<f64> {
    W.cdf(r, x_hat)
}

pub fn cdf_v(r: usize, x: f64) -> Result<f64> {
    V.cdf(r, x)
}

pub fn cdf_u(r: usize, x_hat: f64) -> Result<f64> {
    U.cdf(r, x_hat)
}

pub fn cdf_g(r: usize, x_hat: f64) -> Result<f64> {
    G.cdf(r, x_hat)
}

pub fn moment(kind: DensityKind, r: usize, m: u32) -> Result<MomentCheck> {
    limit_density(kind).moment(r, m)
}
