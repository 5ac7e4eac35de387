use num_complex::Complex64;
use num_traits::Zero;

use crate::exact::{to_f64, BigComplex, BigFloat, ExactPolynomial};
use crate::{Error, Result};

/// Algebraic equation `base(z) + x·slope(z) = 0`, linear in the parameter `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pencil {
    pub base: ExactPolynomial,
    pub slope: ExactPolynomial,
}

/// Where the tracked branch sits for `|x| → ∞`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Asymptote {
    /// `z - x → 0`.
    Identity,
    /// `z ≈ 1 + 1/x` (the Fuss-Catalan generating function).
    OnePlusInverse,
}

impl Asymptote {
    fn seed(self, x: Complex64) -> Complex64 {
        match self {
            Asymptote::Identity => x,
            Asymptote::OnePlusInverse => 1.0 + 1.0 / x,
        }
    }
}

const START_MODULUS: f64 = 1e6;
const MIN_STEP: f64 = 1e-12;

struct F64Poly(Vec<f64>);

impl F64Poly {
    fn new(p: &ExactPolynomial) -> Self {
        F64Poly(p.coeffs().iter().map(to_f64).collect())
    }
    fn eval(&self, z: Complex64) -> Complex64 {
        self.0.iter().rev().fold(Complex64::zero(), |acc, &c| acc * z + c)
    }
}

struct F64Pencil {
    base: F64Poly,
    slope: F64Poly,
    dbase: F64Poly,
    dslope: F64Poly,
}

impl F64Pencil {
    fn value(&self, z: Complex64, x: Complex64) -> Complex64 {
        self.base.eval(z) + x * self.slope.eval(z)
    }
    fn dz(&self, z: Complex64, x: Complex64) -> Complex64 {
        self.dbase.eval(z) + x * self.dslope.eval(z)
    }

    /// Newton from `z`; `None` if it stalls or wanders.
    fn newton(&self, mut z: Complex64, x: Complex64, radius: f64) -> Option<Complex64> {
        let start = z;
        for _ in 0..30 {
            let d = self.dz(z, x);
            if d.norm() == 0.0 || !d.is_finite() {
                return None;
            }
            let step = self.value(z, x) / d;
            z -= step;
            if !z.is_finite() || (z - start).norm() > radius {
                return None;
            }
            if step.norm() <= 1e-14 * z.norm().max(1.0) {
                return Some(z);
            }
        }
        None
    }
}

impl Pencil {
    pub fn new(base: ExactPolynomial, slope: ExactPolynomial) -> Self {
        Pencil { base, slope }
    }

    fn to_f64(&self) -> F64Pencil {
        F64Pencil {
            base: F64Poly::new(&self.base),
            slope: F64Poly::new(&self.slope),
            dbase: F64Poly::new(&self.base.derivative()),
            dslope: F64Poly::new(&self.slope.derivative()),
        }
    }

    pub fn residual_c64(&self, z: Complex64, x: Complex64) -> Complex64 {
        self.to_f64().value(z, x)
    }

    /// Residual `base(z) + x·slope(z)` at `bits` of working precision.
    pub fn residual(&self, z: &BigComplex, x: &BigComplex, bits: u32) -> BigComplex {
        let b = self.base.eval_complex_bounded(z, bits).value;
        let s = self.slope.eval_complex_bounded(z, bits).value;
        &b + &(x * &s)
    }

    /// Follows the branch with the given behaviour at infinity from
    /// `i·σ·10^6` down the imaginary axis to `i·σ·max(1,|x|)`, then along a
    /// straight segment to `x` (`σ` = sign of `Im x`, `+1` on the real axis).
    /// Straight segments stay off the real axis except possibly at `x`.
    pub fn track(&self, x: Complex64, asymptote: Asymptote) -> Result<Complex64> {
        let f = self.to_f64();
        let sigma = if x.im < 0.0 { -1.0 } else { 1.0 };
        let top = Complex64::new(0.0, sigma * START_MODULUS.max(2.0 * x.norm()));
        let mut z = f
            .newton(asymptote.seed(top), top, 1.0)
            .ok_or_else(|| Error::ContinuationFailed("no convergence at the starting point".into()))?;
        let mid = Complex64::new(0.0, sigma * x.norm().max(1.0));
        // Geometric descent along the imaginary axis.
        z = follow(&f, top, mid, z, true)?;
        follow(&f, mid, x, z, false)
    }

    /// Newton polish at `bits` of precision starting from an f64 root.
    pub fn polish(&self, x: &BigComplex, z0: Complex64, bits: u32) -> Result<BigComplex> {
        let work = bits + 32;
        let x = x.with_prec(work);
        let db = self.base.derivative();
        let ds = self.slope.derivative();
        let mut z = BigComplex::from_c64(z0, work);
        let tol = BigFloat::pow2(-(bits as i64) - 4, work);
        for _ in 0..(8 + bits / 16) {
            let v = self.residual(&z, &x, work);
            let d = &db.eval_complex_bounded(&z, work).value + &(&x * &ds.eval_complex_bounded(&z, work).value);
            if d.is_zero() {
                return Err(Error::ContinuationFailed("vanishing derivative during polish".into()));
            }
            let step = &v / &d;
            z = &z - &step;
            let scale = z.norm_l1().max(BigFloat::one(work));
            if step.norm_l1().cmp_exact(&(&tol * &scale)).is_le() {
                return Ok(z.with_prec(bits));
            }
        }
        Err(Error::ContinuationFailed("polish did not converge".into()))
    }

    /// Tracks in double precision, then polishes at `bits`.
    pub fn solve(&self, x: &BigComplex, asymptote: Asymptote, bits: u32) -> Result<BigComplex> {
        let z0 = self.track(x.to_c64(), asymptote)?;
        self.polish(x, z0, bits)
    }
}

/// Continuation from `from` to `to` with tangent predictor, Newton corrector
/// and step halving. `geometric` moves by ratios instead of differences.
fn follow(f: &F64Pencil, from: Complex64, to: Complex64, mut z: Complex64, geometric: bool) -> Result<Complex64> {
    if (to - from).norm() == 0.0 {
        return Ok(z);
    }
    let param = |t: f64| -> Complex64 {
        if geometric {
            from * (to / from).powf(t)
        } else {
            from + (to - from) * t
        }
    };
    let mut t = 0.0f64;
    let mut h = 1.0 / 32.0;
    let mut x = from;
    while t < 1.0 {
        let t_next = (t + h).min(1.0);
        let x_next = param(t_next);
        let d = f.dz(z, x);
        let tangent = if d.norm() > 0.0 { -f.slope.eval(z) / d } else { Complex64::zero() };
        let predicted = z + tangent * (x_next - x);
        let radius = 0.5 * (predicted - z).norm() + 1e-3 * (1.0 + z.norm());
        match f.newton(predicted, x_next, radius) {
            Some(zn) => {
                z = zn;
                x = x_next;
                t = t_next;
                h = (h * 2.0).min(0.25);
            }
            None => {
                h *= 0.5;
                if h < MIN_STEP {
                    return Err(Error::ContinuationFailed(format!("step size underflow near x = {x_next}")));
                }
            }
        }
    }
    Ok(z)
}
