use crate::exact::{BigComplex, BigFloat, ExactPolynomial, Rational};
use crate::{Error, Result};

const START_BITS: u32 = 128;
const MAX_BITS: u32 = 1 << 14;

/// `(1/N) Σ 1/(x - s·x_k)` over the zeros `x_k` of `p`, i.e.
/// `p'(x/s) / (N s p(x/s))` with `N = deg p`.
///
/// Precision doubles until the error bounds give a relative accuracy of
/// `10^-20`.
pub fn log_derivative(p: &ExactPolynomial, x: &BigComplex, scale: &Rational) -> Result<BigComplex> {
    if p.degree() == 0 {
        return Err(Error::InvalidParams("log-derivative of a constant".into()));
    }
    if scale <= &Rational::from_integer(0.into()) {
        return Err(Error::InvalidParams("scale must be positive".into()));
    }
    let dp = p.derivative();
    let inv_scale = Rational::from_integer(1.into()) / scale;
    let target = BigFloat::from_f64(1e-20, 64);
    let mut bits = START_BITS;
    loop {
        let y = x.with_prec(bits).scale(&BigFloat::from_rational(&inv_scale, bits));
        let pv = p.eval_complex_bounded(&y, bits);
        let dv = dp.eval_complex_bounded(&y, bits);
        let pabs = pv.value.norm_l1();
        // |p| ≥ |Re| + |Im| over √2, so compare against the bound with margin.
        if pabs.cmp_exact(&pv.bound.mul_pow2(2)).is_gt() {
            let dabs = dv.value.norm_l1();
            let rel_p = &pv.bound.mul_pow2(1) / &pabs;
            let rel_d = if dabs.is_zero() { BigFloat::zero(bits) } else { &dv.bound.mul_pow2(1) / &dabs };
            let rel = &(&rel_p + &rel_d).mul_pow2(1) + &BigFloat::pow2(-(bits as i64) + 8, 64);
            if rel.cmp_exact(&target).is_lt() || bits >= MAX_BITS {
                let nf = BigFloat::from_rational(&(Rational::from_integer(p.degree().into()) * scale), bits);
                let denom = pv.value.scale(&nf);
                return Ok(&dv.value / &denom);
            }
        } else if bits >= MAX_BITS {
            return Err(Error::EvaluationAtZero);
        }
        bits *= 2;
    }
}
