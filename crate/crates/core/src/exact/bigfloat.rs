use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{Float, One, Signed, ToPrimitive, Zero};

use super::Rational;

/// Binary floating-point number `mantissa · 2^exponent` with a fixed
/// precision in bits.
///
/// Every arithmetic result is rounded to nearest (ties to even) at the larger
/// of the operand precisions, so each operation satisfies
/// `fl(a ∘ b) = (a ∘ b)(1 + δ)` with `|δ| ≤ 2^(1-prec)`. The mantissa is kept
/// odd (trailing zero bits are folded into the exponent), which makes the
/// representation canonical.
#[derive(Clone, Debug)]
pub struct BigFloat {
    mant: BigInt,
    exp: i64,
    prec: u32,
}

const MIN_PREC: u32 = 2;

impl BigFloat {
    pub fn zero(prec: u32) -> Self {
        BigFloat { mant: BigInt::zero(), exp: 0, prec: prec.max(MIN_PREC) }
    }

    pub fn one(prec: u32) -> Self {
        Self::from_int(BigInt::one(), prec)
    }

    /// `2^e`, exactly.
    pub fn pow2(e: i64, prec: u32) -> Self {
        BigFloat { mant: BigInt::one(), exp: e, prec: prec.max(MIN_PREC) }
    }

    /// Unit roundoff bound `2^(1-prec)` used in the running error bounds.
    pub fn unit_roundoff(prec: u32) -> Self {
        Self::pow2(1 - prec as i64, 64)
    }

    pub fn from_int(n: BigInt, prec: u32) -> Self {
        Self::round(n, 0, prec)
    }

    pub fn from_i64(n: i64, prec: u32) -> Self {
        Self::from_int(BigInt::from(n), prec)
    }

    /// Exact for finite doubles when `prec >= 53`.
    pub fn from_f64(x: f64, prec: u32) -> Self {
        assert!(x.is_finite(), "BigFloat::from_f64 on non-finite value");
        let (m, e, s) = x.integer_decode();
        let mant = BigInt::from(m) * i64::from(s);
        Self::round(mant, i64::from(e), prec)
    }

    /// Correctly rounded value of a rational.
    pub fn from_rational(q: &Rational, prec: u32) -> Self {
        Self::round_quotient(q.numer().clone(), 0, q.denom(), prec)
    }

    pub fn precision(&self) -> u32 {
        self.prec
    }

    /// Re-round to a new precision.
    pub fn with_prec(&self, prec: u32) -> Self {
        Self::round(self.mant.clone(), self.exp, prec)
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn signum(&self) -> i32 {
        match self.mant.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    pub fn abs(&self) -> Self {
        BigFloat { mant: self.mant.abs(), exp: self.exp, prec: self.prec }
    }

    /// Multiply by `2^k` (exact).
    pub fn mul_pow2(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        BigFloat { mant: self.mant.clone(), exp: self.exp + k, prec: self.prec }
    }

    /// Exponent `e` with `2^(e-1) <= |x| < 2^e`; `None` for zero.
    pub fn magnitude_exponent(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.exp + self.mant.bits() as i64)
        }
    }

    /// Exact rational value.
    pub fn to_rational(&self) -> Rational {
        if self.exp >= 0 {
            Rational::from_integer(&self.mant << self.exp as usize)
        } else {
            Rational::new(self.mant.clone(), BigInt::one() << (-self.exp) as usize)
        }
    }

    /// Nearest double (subnormal results lose bits, huge ones saturate to ±inf).
    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let r = Self::round(self.mant.clone(), self.exp, 53);
        let m = r.mant.to_f64().expect("53-bit mantissa fits f64");
        ldexp(m, r.exp)
    }

    /// Decimal scientific notation with `digits` significant digits.
    pub fn to_sci_string(&self, digits: usize) -> String {
        let digits = digits.max(1);
        if self.is_zero() {
            return format!("{:.*}e0", digits - 1, 0.0);
        }
        let q = self.to_rational().abs();
        // Estimate the decimal exponent, then correct it.
        let e2 = self.magnitude_exponent().unwrap_or(0);
        let mut e10 = ((e2 - 1) as f64 * std::f64::consts::LOG10_2).floor() as i64;
        let ten = Rational::from_integer(BigInt::from(10));
        let pow10 = |k: i64| -> Rational {
            if k >= 0 {
                num_traits::pow(ten.clone(), k as usize)
            } else {
                Rational::one() / num_traits::pow(ten.clone(), (-k) as usize)
            }
        };
        loop {
            let scaled = &q / pow10(e10);
            if scaled >= Rational::from_integer(BigInt::from(10)) {
                e10 += 1;
            } else if scaled < Rational::one() {
                e10 -= 1;
            } else {
                break;
            }
        }
        let scaled = &q * pow10(digits as i64 - 1 - e10);
        let mut n = scaled.round().to_integer();
        if n.to_string().len() > digits {
            n /= 10;
            e10 += 1;
        }
        let s = n.to_string();
        let sign = if self.signum() < 0 { "-" } else { "" };
        if digits == 1 {
            format!("{sign}{s}e{e10}")
        } else {
            format!("{sign}{}.{}e{e10}", &s[..1], &s[1..])
        }
    }

    /// Exact comparison.
    pub fn cmp_exact(&self, other: &Self) -> Ordering {
        let (sa, sb) = (self.signum(), other.signum());
        if sa != sb {
            return sa.cmp(&sb);
        }
        if sa == 0 {
            return Ordering::Equal;
        }
        let (ea, eb) = (self.magnitude_exponent().unwrap(), other.magnitude_exponent().unwrap());
        if ea != eb {
            let mag = ea.cmp(&eb);
            return if sa > 0 { mag } else { mag.reverse() };
        }
        let e = self.exp.min(other.exp);
        let a = &self.mant << (self.exp - e) as usize;
        let b = &other.mant << (other.exp - e) as usize;
        a.cmp(&b)
    }

    pub fn max(self, other: Self) -> Self {
        if self.cmp_exact(&other) == Ordering::Less {
            other
        } else {
            self
        }
    }

    fn round(mant: BigInt, exp: i64, prec: u32) -> Self {
        let prec = prec.max(MIN_PREC);
        if mant.is_zero() {
            return Self::zero(prec);
        }
        let (sign, mag) = mant.into_parts();
        let bits = mag.bits();
        let (mut mag, mut exp) = (mag, exp);
        if bits > u64::from(prec) {
            let shift = bits - u64::from(prec);
            let q: BigUint = &mag >> shift;
            let rem: BigUint = &mag - (&q << shift);
            let half = BigUint::one() << (shift - 1);
            let up = match rem.cmp(&half) {
                Ordering::Greater => true,
                Ordering::Less => false,
                Ordering::Equal => q.is_odd(),
            };
            mag = if up { q + 1u32 } else { q };
            exp += shift as i64;
        }
        let tz = mag.trailing_zeros().unwrap_or(0);
        if tz > 0 {
            mag >>= tz;
            exp += tz as i64;
        }
        BigFloat { mant: BigInt::from_biguint(sign, mag), exp, prec }
    }

    /// Correctly rounded `num · 2^exp / den` for `den > 0`.
    fn round_quotient(num: BigInt, exp: i64, den: &BigInt, prec: u32) -> Self {
        if num.is_zero() {
            return Self::zero(prec);
        }
        let prec = prec.max(MIN_PREC);
        // Shift so the integer quotient carries at least prec + 2 bits.
        let want = i64::from(prec) + 2 + den.bits() as i64 - num.bits() as i64;
        let shift = want.max(0);
        let (q, r) = (num.abs() << shift as usize).div_rem(den);
        // Sticky bit keeps round-to-nearest exact.
        let q = (q << 1usize) + BigInt::from(u8::from(!r.is_zero()));
        let q = if num.is_negative() { -q } else { q };
        Self::round(q, exp - shift - 1, prec)
    }

    fn add_impl(a: &Self, b: &Self, negate_b: bool) -> Self {
        let prec = a.prec.max(b.prec);
        let b_mant = if negate_b { -&b.mant } else { b.mant.clone() };
        if b.is_zero() {
            return a.with_prec(prec);
        }
        if a.is_zero() {
            return Self::round(b_mant, b.exp, prec);
        }
        let (ea, eb) = (a.magnitude_exponent().unwrap(), b.magnitude_exponent().unwrap());
        let gap = i64::from(prec) + 3;
        if ea - eb > gap {
            return a.with_prec(prec);
        }
        if eb - ea > gap {
            return Self::round(b_mant, b.exp, prec);
        }
        let e = a.exp.min(b.exp);
        let sum = (&a.mant << (a.exp - e) as usize) + (b_mant << (b.exp - e) as usize);
        Self::round(sum, e, prec)
    }
}

fn ldexp(m: f64, e: i64) -> f64 {
    let e = e.clamp(-3000, 3000) as i32;
    let half = e / 2;
    m * 2f64.powi(half) * 2f64.powi(e - half)
}

impl PartialEq for BigFloat {
    fn eq(&self, other: &Self) -> bool {
        self.cmp_exact(other) == Ordering::Equal
    }
}

impl PartialOrd for BigFloat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp_exact(other))
    }
}

impl fmt::Display for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = ((self.prec as f64) * std::f64::consts::LOG10_2).ceil() as usize;
        f.write_str(&self.to_sci_string(digits.max(1)))
    }
}

impl Add for &BigFloat {
    type Output = BigFloat;
    fn add(self, rhs: &BigFloat) -> BigFloat {
        BigFloat::add_impl(self, rhs, false)
    }
}

impl Sub for &BigFloat {
    type Output = BigFloat;
    fn sub(self, rhs: &BigFloat) -> BigFloat {
        BigFloat::add_impl(self, rhs, true)
    }
}

impl Mul for &BigFloat {
    type Output = BigFloat;
    fn mul(self, rhs: &BigFloat) -> BigFloat {
        BigFloat::round(&self.mant * &rhs.mant, self.exp + rhs.exp, self.prec.max(rhs.prec))
    }
}

impl Div for &BigFloat {
    type Output = BigFloat;
    fn div(self, rhs: &BigFloat) -> BigFloat {
        assert!(!rhs.is_zero(), "BigFloat division by zero");
        let prec = self.prec.max(rhs.prec);
        let (num, den) = if rhs.mant.is_negative() {
            (-&self.mant, -&rhs.mant)
        } else {
            (self.mant.clone(), rhs.mant.clone())
        };
        BigFloat::round_quotient(num, self.exp - rhs.exp, &den, prec)
    }
}

impl Neg for &BigFloat {
    type Output = BigFloat;
    fn neg(self) -> BigFloat {
        BigFloat { mant: -&self.mant, exp: self.exp, prec: self.prec }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for BigFloat {
            type Output = BigFloat;
            fn $m(self, rhs: BigFloat) -> BigFloat { (&self).$m(&rhs) }
        }
        impl $tr<&BigFloat> for BigFloat {
            type Output = BigFloat;
            fn $m(self, rhs: &BigFloat) -> BigFloat { (&self).$m(rhs) }
        }
        impl $tr<BigFloat> for &BigFloat {
            type Output = BigFloat;
            fn $m(self, rhs: BigFloat) -> BigFloat { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for BigFloat {
    type Output = BigFloat;
    fn neg(self) -> BigFloat {
        -&self
    }
}

/// Complex number with [`BigFloat`] parts.
#[derive(Clone, Debug, PartialEq)]
pub struct BigComplex {
    pub re: BigFloat,
    pub im: BigFloat,
}

impl BigComplex {
    pub fn new(re: BigFloat, im: BigFloat) -> Self {
        BigComplex { re, im }
    }

    pub fn from_real(re: BigFloat) -> Self {
        let prec = re.precision();
        BigComplex { re, im: BigFloat::zero(prec) }
    }

    pub fn from_rational(q: &Rational, prec: u32) -> Self {
        Self::from_real(BigFloat::from_rational(q, prec))
    }

    pub fn from_c64(z: Complex64, prec: u32) -> Self {
        BigComplex { re: BigFloat::from_f64(z.re, prec), im: BigFloat::from_f64(z.im, prec) }
    }

    pub fn zero(prec: u32) -> Self {
        BigComplex { re: BigFloat::zero(prec), im: BigFloat::zero(prec) }
    }

    pub fn precision(&self) -> u32 {
        self.re.precision().max(self.im.precision())
    }

    pub fn with_prec(&self, prec: u32) -> Self {
        BigComplex { re: self.re.with_prec(prec), im: self.im.with_prec(prec) }
    }

    pub fn to_c64(&self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        BigComplex { re: self.re.clone(), im: -&self.im }
    }

    pub fn norm_sqr(&self) -> BigFloat {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    /// `|re| + |im|`, an upper bound for the modulus within rounding.
    pub fn norm_l1(&self) -> BigFloat {
        &self.re.abs() + &self.im.abs()
    }

    /// Modulus as a double.
    pub fn abs_f64(&self) -> f64 {
        self.to_c64().norm()
    }

    pub fn scale(&self, s: &BigFloat) -> Self {
        BigComplex { re: &self.re * s, im: &self.im * s }
    }
}

impl Add for &BigComplex {
    type Output = BigComplex;
    fn add(self, rhs: &BigComplex) -> BigComplex {
        BigComplex { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl Sub for &BigComplex {
    type Output = BigComplex;
    fn sub(self, rhs: &BigComplex) -> BigComplex {
        BigComplex { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl Mul for &BigComplex {
    type Output = BigComplex;
    fn mul(self, rhs: &BigComplex) -> BigComplex {
        BigComplex {
            re: &(&self.re * &rhs.re) - &(&self.im * &rhs.im),
            im: &(&self.re * &rhs.im) + &(&self.im * &rhs.re),
        }
    }
}

impl Div for &BigComplex {
    type Output = BigComplex;
    fn div(self, rhs: &BigComplex) -> BigComplex {
        let d = rhs.norm_sqr();
        let num = self * &rhs.conj();
        BigComplex { re: &num.re / &d, im: &num.im / &d }
    }
}

impl Neg for &BigComplex {
    type Output = BigComplex;
    fn neg(self) -> BigComplex {
        BigComplex { re: -&self.re, im: -&self.im }
    }
}
