use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::exact::{rational_from_f64, to_f64, BigFloat, ExactPolynomial, FloatImage, MultiIndex, Rational};
use crate::{Error, Result};

/// Relative refinement tolerance used when none is given.
pub const DEFAULT_TOLERANCE: f64 = 1e-12;

/// Working precision of the float pre-screen used during bisection.
const SCREEN_BITS: u32 = 128;

/// A closed interval holding exactly one simple zero. Either a point that
/// is an exact zero, or an interval whose endpoint signs differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enclosure {
    pub lo: Rational,
    pub hi: Rational,
    sign_lo: i32,
}

impl Enclosure {
    pub fn point(x: Rational) -> Self {
        Enclosure { lo: x.clone(), hi: x, sign_lo: 0 }
    }

    pub(crate) fn open(lo: Rational, hi: Rational, ints: &[BigInt]) -> Self {
        let sign_lo = exact_sign(ints, &lo);
        Enclosure { lo, hi, sign_lo }
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(2.into())
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }
}

/// Certified enclosures of all real zeros of one polynomial, ascending.
#[derive(Clone, Debug)]
pub struct ZeroSet {
    poly: ExactPolynomial,
    ints: Vec<BigInt>,
    enclosures: Vec<Enclosure>,
    scale: Rational,
    index: Option<MultiIndex>,
    bits: u32,
}

impl ZeroSet {
    pub(crate) fn from_parts(poly: ExactPolynomial, ints: Vec<BigInt>, enclosures: Vec<Enclosure>) -> Self {
        ZeroSet { poly, ints, enclosures, scale: Rational::one(), index: None, bits: 128 }
    }

    /// Attaches the scale applied to zeros and the source multi-index.
    pub fn with_scale(mut self, scale: Rational, index: Option<MultiIndex>) -> Self {
        self.scale = scale;
        self.index = index;
        self
    }

    /// Precision of [`ZeroSet::midpoints`].
    pub fn with_bits(mut self, bits: u32) -> Self {
        self.bits = bits.max(53);
        self
    }

    pub fn len(&self) -> usize {
        self.enclosures.len()
    }

    pub fn is_empty(&self) -> bool {
        self.enclosures.is_empty()
    }

    pub fn polynomial(&self) -> &ExactPolynomial {
        &self.poly
    }

    pub fn enclosures(&self) -> &[Enclosure] {
        &self.enclosures
    }

    pub fn scale(&self) -> &Rational {
        &self.scale
    }

    pub fn index(&self) -> Option<&MultiIndex> {
        self.index.as_ref()
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn midpoints(&self) -> Vec<BigFloat> {
        self.enclosures.iter().map(|e| BigFloat::from_rational(&e.midpoint(), self.bits)).collect()
    }

    pub fn midpoints_f64(&self) -> Vec<f64> {
        self.enclosures.iter().map(|e| to_f64(&e.midpoint())).collect()
    }

    /// Midpoints multiplied by the scale.
    pub fn scaled_f64(&self) -> Vec<f64> {
        self.enclosures.iter().map(|e| to_f64(&(e.midpoint() * &self.scale))).collect()
    }

    pub fn widths_f64(&self) -> Vec<f64> {
        self.enclosures.iter().map(|e| to_f64(&e.width())).collect()
    }

    /// Re-checks every certificate in exact integer arithmetic: ordering, endpoint sign change (or exact zero for points), and
    /// the count against the degree.
    pub fn verify_certificates(&self) -> bool {
        if self.enclosures.len() != self.poly.degree() {
            return false;
        }
        for w in self.enclosures.windows(2) {
            // Neighbours may share an endpoint, which is never a zero.
            if w[0].hi > w[1].lo || (w[0].hi == w[1].lo && (w[0].is_point() || w[1].is_point())) {
                return false;
            }
        }
        self.enclosures.iter().all(|e| {
            if e.is_point() {
                exact_sign(&self.ints, &e.lo) == 0
            } else {
                let a = exact_sign(&self.ints, &e.lo);
                let b = exact_sign(&self.ints, &e.hi);
                a != 0 && b != 0 && a != b && a == e.sign_lo
            }
        })
    }

    /// Bisects until every width is at most `tol · max(1, |midpoint|)`.
    pub fn refine(&self, tol: f64) -> ZeroSet {
        let tol = rational_from_f64(tol.max(f64::MIN_POSITIVE));
        let image = self.poly.float_image(SCREEN_BITS);
        let mut out = self.clone();
        for k in 0..out.enclosures.len() {
            loop {
                let e = &out.enclosures[k];
                let scale = e.midpoint().abs().max(Rational::one());
                if e.is_point() || e.width() <= &tol * scale {
                    break;
                }
                out.bisect(k, &image);
            }
        }
        out
    }

    /// Halves enclosure `k`, keeping the half with the sign change.
    fn bisect(&mut self, k: usize, image: &FloatImage) {
        let e = &self.enclosures[k];
        if e.is_point() {
            return;
        }
        let m = e.midpoint();
        let s = image.sign_at(&m).unwrap_or_else(|| exact_sign(&self.ints, &m));
        let e = &mut self.enclosures[k];
        if s == 0 {
            *e = Enclosure::point(m);
        } else if s == e.sign_lo {
            e.lo = m;
        } else {
            e.hi = m;
        }
    }
}

pub fn refine(z: &ZeroSet, tol: f64) -> ZeroSet {
    z.refine(tol)
}

/// Sign of `p(x)` from the primitive integer coefficients, evaluated as the
/// homogeneous form `Σ c_i u^i v^(d-i)` for `x = u/v`.
pub(crate) fn exact_sign(ints: &[BigInt], x: &Rational) -> i32 {
    let u = x.numer();
    let v = x.denom();
    let mut iter = ints.iter().rev();
    let mut acc = match iter.next() {
        Some(c) => c.clone(),
        None => return 0,
    };
    let mut vp = v.clone();
    for c in iter {
        acc = acc * u + c * &vp;
        vp *= v;
    }
    if acc.is_zero() {
        0
    } else if acc.is_positive() {
        1
    } else {
        -1
    }
}

/// Strict order of two enclosures, if decided.
fn order(a: &Enclosure, b: &Enclosure) -> Option<Ordering> {
    if a.hi < b.lo {
        Some(Ordering::Less)
    } else if b.hi < a.lo {
        Some(Ordering::Greater)
    } else if a.is_point() && b.is_point() && a.lo == b.lo {
        Some(Ordering::Equal)
    } else {
        None
    }
}

const INTERLACING_BISECTIONS: usize = 400;
/// Bisections after which a common zero is ruled out with an exact gcd.
const SHARED_ZERO_CHECK: usize = 64;

/// True iff strictly between consecutive zeros of `z2` lies exactly one
/// zero of `z1` (with `deg z2 = deg z1 + 1`). Overlapping enclosures are
/// refined until their order is decided.
pub fn interlacing_check(z1: &ZeroSet, z2: &ZeroSet) -> Result<bool> {
    if z2.len() != z1.len() + 1 {
        return Err(Error::InvalidParams(format!(
            "interlacing needs {} + 1 zeros in the second set, got {}",
            z1.len(),
            z2.len()
        )));
    }
    let mut a = z1.clone();
    let mut b = z2.clone();
    let ia = a.poly.float_image(SCREEN_BITS);
    let ib = b.poly.float_image(SCREEN_BITS);
    // Merged order y_1 < x_1 < y_2 < … < x_N < y_{N+1}.
    for k in 0..2 * a.len() {
        let (first_is_b, i, j) = if k % 2 == 0 { (true, k / 2, k / 2) } else { (false, k / 2, k / 2 + 1) };
        let mut tries = 0;
        loop {
            let (lower, upper) =
                if first_is_b { (&b.enclosures[j], &a.enclosures[i]) } else { (&a.enclosures[i], &b.enclosures[j]) };
            match order(lower, upper) {
                Some(Ordering::Less) => break,
                Some(_) => return Ok(false),
                None => {}
            }
            tries += 1;
            // A shared zero can never be separated by bisection; once the
            // enclosures stall, detect it exactly.
            if tries == SHARED_ZERO_CHECK && a.poly.gcd(&b.poly).degree() > 0 {
                return Ok(false);
            }
            if tries > INTERLACING_BISECTIONS {
                return Err(Error::Undecidable(format!("zeros {} and {} overlap after refinement", i + 1, j + 1)));
            }
            a.bisect(i, &ia);
            b.bisect(j, &ib);
        }
    }
    Ok(true)
}
