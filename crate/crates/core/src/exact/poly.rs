use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::format_rational;
use super::{BigComplex, BigFloat, Rational};
use crate::{Error, Result};

/// Polynomial with exact rational coefficients in ascending powers.
///
/// Trailing zero coefficients are always trimmed, so the degree is the index
/// of the last stored coefficient. The zero polynomial stores nothing and
/// reports degree 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExactPolynomial {
    coeffs: Vec<Rational>,
}

/// Result of a floating evaluation with a rigorous bound on the absolute
/// error: the exact value lies in `[value - bound, value + bound]`.
#[derive(Clone, Debug)]
pub struct FloatEval {
    pub value: BigFloat,
    pub bound: BigFloat,
}

impl FloatEval {
    /// Sign of the exact value if the bound separates it from zero.
    pub fn certain_sign(&self) -> Option<i32> {
        if self.value.abs() > self.bound {
            Some(self.value.signum())
        } else {
            None
        }
    }
}

/// Complex evaluation with a bound on the modulus of the error.
#[derive(Clone, Debug)]
pub struct ComplexEval {
    pub value: BigComplex,
    pub bound: BigFloat,
}

impl ExactPolynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        ExactPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        ExactPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::new(vec![Rational::zero(), Rational::one()])
    }

    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// `∏ (x - root)`.
    pub fn from_roots(roots: &[Rational]) -> Self {
        roots.iter().fold(Self::one(), |p, r| p.mul_x_minus(r))
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let lead = self.leading();
        Self::new(self.coeffs.iter().map(|c| c / &lead).collect())
    }

    /// Exact Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// `x · p(x)`.
    pub fn mul_x(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rational::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(coeffs)
    }

    /// `(x - c) · p(x)`.
    pub fn mul_x_minus(&self, c: &Rational) -> Self {
        &self.mul_x() - &self.scale(c)
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Quotient and remainder of long division; `rhs` must be nonzero.
    pub fn div_rem(&self, rhs: &Self) -> (Self, Self) {
        assert!(!rhs.is_zero(), "polynomial division by zero");
        let d = rhs.degree();
        let lead = rhs.leading();
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - d];
        for k in (0..quot.len()).rev() {
            let q = &rem[k + d] / &lead;
            if !q.is_zero() {
                for (i, c) in rhs.coeffs.iter().enumerate() {
                    rem[k + i] -= &q * c;
                }
            }
            quot[k] = q;
        }
        rem.truncate(d);
        (Self::new(quot), Self::new(rem))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1.monic();
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `p(a + b·x)`.
    pub fn compose_affine(&self, a: &Rational, b: &Rational) -> Self {
        let lin = Self::new(vec![a.clone(), b.clone()]);
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * &lin) + &Self::constant(c.clone()))
    }

    /// Positive rational multiple with coprime integer coefficients.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let lcm = self.coeffs.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| (c * &lcm).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        let g = if self.leading().is_negative() { -g } else { g };
        ints.into_iter().map(|c| c / &g).collect()
    }

    fn float_coeffs(&self, bits: u32) -> Vec<BigFloat> {
        self.coeffs.iter().map(|c| BigFloat::from_rational(c, bits)).collect()
    }

    /// Horner evaluation at `bits` of precision with a running error bound.
    ///
    /// The bound covers rounding of the coefficients and of every Horner step:
    /// `|err| ≤ 2(2n+3)u · Σ|c_i||x|^i` with `u = 2^(1-bits)`.
    pub fn eval_float_bounded(&self, x: &BigFloat, bits: u32) -> FloatEval {
        self.float_image(bits).eval_bounded(x)
    }

    /// Coefficients rounded once, for repeated bounded evaluations.
    pub fn float_image(&self, bits: u32) -> FloatImage {
        let bits = bits.max(53);
        FloatImage { coeffs: self.float_coeffs(bits), bits }
    }

    /// Bounded float evaluation that fails when the sign is not decided.
    pub fn eval_float(&self, x: &BigFloat, bits: u32) -> Result<FloatEval> {
        let ev = self.eval_float_bounded(x, bits);
        if ev.value.is_zero() && ev.bound.is_zero() {
            return Ok(ev);
        }
        match ev.certain_sign() {
            Some(_) => Ok(ev),
            None => Err(Error::IndeterminateSign { bits: bits.max(53) }),
        }
    }

    /// Sign of `p(x)` for rational `x`, trying floats at doubling precision
    /// from `start_bits` up to `max_bits` before falling back to exact
    /// arithmetic. The result is always correct.
    pub fn sign_at(&self, x: &Rational, start_bits: u32, max_bits: u32) -> i32 {
        let mut bits = start_bits.max(53);
        while bits <= max_bits {
            let xf = BigFloat::from_rational(x, bits);
            if xf.to_rational() == *x {
                if let Some(s) = self.eval_float_bounded(&xf, bits).certain_sign() {
                    return s;
                }
            }
            bits *= 2;
        }
        sign_of(&self.eval(x))
    }

    /// Complex Horner evaluation with a bound on `|err|`.
    pub fn eval_complex_bounded(&self, z: &BigComplex, bits: u32) -> ComplexEval {
        let bits = bits.max(53);
        let z = z.with_prec(bits);
        let az = z.norm_l1();
        let mut value = BigComplex::zero(bits);
        let mut magnitude = BigFloat::zero(bits);
        for c in self.float_coeffs(bits).iter().rev() {
            let prod = &value * &z;
            value = BigComplex::new(&prod.re + c, prod.im);
            magnitude = &(&magnitude * &az) + &c.abs();
        }
        let n = self.degree() as i64;
        let factor = BigFloat::from_i64(4 * (2 * n + 3), 64);
        let bound = &(&factor * &BigFloat::unit_roundoff(bits)) * &magnitude;
        ComplexEval { value, bound }
    }

    /// Plain complex Horner in doubles.
    pub fn eval_c64(&self, z: num_complex::Complex64) -> num_complex::Complex64 {
        let cs: Vec<f64> = self.coeffs.iter().map(super::to_f64).collect();
        cs.iter().rev().fold(num_complex::Complex64::new(0.0, 0.0), |acc, c| acc * z + c)
    }
}

/// Polynomial with coefficients rounded to a fixed precision.
#[derive(Clone, Debug)]
pub struct FloatImage {
    coeffs: Vec<BigFloat>,
    bits: u32,
}

impl FloatImage {
    pub fn precision(&self) -> u32 {
        self.bits
    }

    /// Same contract as [`ExactPolynomial::eval_float_bounded`].
    pub fn eval_bounded(&self, x: &BigFloat) -> FloatEval {
        let bits = self.bits;
        let x = x.with_prec(bits);
        let ax = x.abs();
        let mut value = BigFloat::zero(bits);
        let mut magnitude = BigFloat::zero(bits);
        for c in self.coeffs.iter().rev() {
            value = &(&value * &x) + c;
            magnitude = &(&magnitude * &ax) + &c.abs();
        }
        let n = self.coeffs.len().saturating_sub(1) as i64;
        let factor = BigFloat::from_i64(2 * (2 * n + 3), 64);
        let bound = &(&factor * &BigFloat::unit_roundoff(bits)) * &magnitude;
        FloatEval { value, bound }
    }

    /// Certified sign at a rational point, if this precision decides it.
    pub fn sign_at(&self, x: &Rational) -> Option<i32> {
        let xf = BigFloat::from_rational(x, self.bits);
        if xf.to_rational() != *x {
            return None;
        }
        self.eval_bounded(&xf).certain_sign()
    }
}

pub(crate) fn sign_of(q: &Rational) -> i32 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

impl Add for &ExactPolynomial {
    type Output = ExactPolynomial;
    fn add(self, rhs: &ExactPolynomial) -> ExactPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        ExactPolynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &ExactPolynomial {
    type Output = ExactPolynomial;
    fn sub(self, rhs: &ExactPolynomial) -> ExactPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        ExactPolynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Add for ExactPolynomial {
    type Output = ExactPolynomial;
    fn add(mut self, rhs: ExactPolynomial) -> ExactPolynomial {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), Rational::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs) {
            *a += b;
        }
        ExactPolynomial::new(self.coeffs)
    }
}

impl Sub for ExactPolynomial {
    type Output = ExactPolynomial;
    fn sub(self, rhs: ExactPolynomial) -> ExactPolynomial {
        self + (-&rhs)
    }
}

impl Mul for &ExactPolynomial {
    type Output = ExactPolynomial;
    fn mul(self, rhs: &ExactPolynomial) -> ExactPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return ExactPolynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        ExactPolynomial::new(out)
    }
}

impl Neg for &ExactPolynomial {
    type Output = ExactPolynomial;
    fn neg(self) -> ExactPolynomial {
        ExactPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for ExactPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let show_coeff = k == 0 || !mag.is_one();
            if show_coeff {
                f.write_str(&format_rational(&mag))?;
            }
            match k {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}
