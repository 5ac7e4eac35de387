use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::zeroset::{exact_sign, Enclosure, ZeroSet};
use crate::exact::{ExactPolynomial, Rational};
use crate::{Error, Result};

/// Subdivision nodes explored before giving up.
const NODE_BUDGET: usize = 1 << 20;
/// Finest relative subdivision (2^-MAX_DEPTH of the support).
const MAX_DEPTH: usize = 1500;

/// Isolates every real zero of `p` inside `[lo, hi]`.
///
/// The interval is mapped to `(0,1)` and subdivided with Descartes' rule of
/// signs on integer coefficients (Vincent–Collins–Akritas). Split points
/// that happen to be zeros are avoided by moving the split, so each
/// resulting open interval has exact nonzero endpoint signs of opposite
/// parity. Zeros at the ends of the support become point enclosures.
pub fn isolate_zeros(p: &ExactPolynomial, support: (Rational, Rational)) -> Result<ZeroSet> {
    let (lo, hi) = support;
    if p.is_zero() {
        return Err(Error::InvalidParams("cannot isolate zeros of the zero polynomial".into()));
    }
    if lo >= hi {
        return Err(Error::InvalidParams("support interval must have lo < hi".into()));
    }
    let degree = p.degree();
    let ints = p.primitive_integer();
    let mut enclosures = Vec::new();

    // Zeros sitting exactly on the ends of the support.
    let mut work = p.clone();
    for end in [&lo, &hi] {
        if exact_sign(&ints, end) == 0 {
            enclosures.push(Enclosure::point(end.clone()));
            work = deflate(&work, end);
            if exact_sign(&work.primitive_integer(), end) == 0 {
                return Err(Error::IsolationFailed { found: enclosures.len(), expected: degree });
            }
        }
    }

    if work.degree() > 0 {
        let width = &hi - &lo;
        let mapped = work.compose_affine(&lo, &width).primitive_integer();
        let work_ints = work.primitive_integer();
        let mut stack = vec![Node { q: mapped, a: Rational::zero(), b: Rational::one(), depth: 0 }];
        let mut visited = 0usize;
        while let Some(node) = stack.pop() {
            visited += 1;
            if visited > NODE_BUDGET || node.depth > MAX_DEPTH {
                return Err(Error::IsolationFailed { found: enclosures.len(), expected: degree });
            }
            match descartes_bound(&node.q) {
                0 => {}
                1 => {
                    let a = &lo + &width * &node.a;
                    let b = &lo + &width * &node.b;
                    enclosures.push(clear_endpoint_zeros(a, b, &ints, &work_ints));
                }
                _ => {
                    let (left, right) = split(&node);
                    stack.push(right);
                    stack.push(left);
                }
            }
        }
    }

    enclosures.sort_by(|x, y| x.lo.cmp(&y.lo));
    if enclosures.len() != degree {
        return Err(Error::IsolationFailed { found: enclosures.len(), expected: degree });
    }
    let z = ZeroSet::from_parts(p.clone(), ints, enclosures);
    if !z.verify_certificates() {
        return Err(Error::IsolationFailed { found: 0, expected: degree });
    }
    Ok(z)
}

/// The single zero of `work` in `(a, b)`, moved off endpoints where the full
/// polynomial vanishes (only possible at the ends of the support).
fn clear_endpoint_zeros(mut a: Rational, mut b: Rational, ints: &[BigInt], work: &[BigInt]) -> Enclosure {
    let sign_b = exact_sign(work, &b);
    while exact_sign(ints, &a) == 0 || exact_sign(ints, &b) == 0 {
        let m = (&a + &b) / Rational::from_integer(2.into());
        let sm = exact_sign(work, &m);
        if sm == 0 {
            return Enclosure::point(m);
        }
        if sm == sign_b {
            b = m;
        } else {
            a = m;
        }
    }
    Enclosure::open(a, b, ints)
}

struct Node {
    /// Integer polynomial proportional to `p(lo + width (a + (b-a) t))`.
    q: Vec<BigInt>,
    a: Rational,
    b: Rational,
    depth: usize,
}

fn deflate(p: &ExactPolynomial, root: &Rational) -> ExactPolynomial {
    // Synthetic division by (x - root).
    let c = p.coeffs();
    let d = c.len() - 1;
    let mut out = vec![Rational::zero(); d];
    let mut acc = Rational::zero();
    for i in (1..=d).rev() {
        acc = &acc * root + &c[i];
        out[i - 1] = acc.clone();
    }
    ExactPolynomial::new(out)
}

/// Sign variations of `(1+t)^d q(1/(1+t))`: an upper bound on the number of
/// zeros in `(0,1)` with the same parity; 0 and 1 are exact.
fn descartes_bound(q: &[BigInt]) -> usize {
    let mut a: Vec<BigInt> = q.iter().rev().cloned().collect();
    taylor_shift(&mut a, &BigInt::one());
    let mut count = 0;
    let mut last = 0;
    for c in &a {
        let s = if c.is_zero() { 0 } else if c.is_positive() { 1 } else { -1 };
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

/// In-place `a(t) -> a(t + c)`.
fn taylor_shift(a: &mut [BigInt], c: &BigInt) {
    let n = a.len();
    if n < 2 {
        return;
    }
    let unit = c.is_one();
    for i in 0..n - 1 {
        for j in (i..n - 1).rev() {
            let add = if unit { a[j + 1].clone() } else { &a[j + 1] * c };
            a[j] += add;
        }
    }
}

fn make_primitive(a: &mut [BigInt]) {
    let g = a.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if !g.is_zero() && !g.is_one() {
        for c in a.iter_mut() {
            *c /= &g;
        }
    }
}

/// Split points tried in order; the first one that is not a zero is used.
fn split_candidates() -> impl Iterator<Item = (u64, u64)> {
    [(1u64, 2u64), (7, 16), (9, 16), (3, 8), (5, 8), (13, 32), (19, 32), (1, 4), (3, 4)]
        .into_iter()
        .chain((3..60).map(|k| ((1u64 << k) - 1, 1u64 << (k + 1))))
}

fn split(node: &Node) -> (Node, Node) {
    let d = node.q.len() - 1;
    for (u, v) in split_candidates() {
        let (ub, vb) = (BigInt::from(u), BigInt::from(v));
        // h(y) = v^d q(y/v); left(t) = h(u t), right(t) = h(u + (v-u) t).
        let mut vpow = BigInt::one();
        let mut h = vec![BigInt::zero(); d + 1];
        for i in (0..=d).rev() {
            h[i] = &node.q[i] * &vpow;
            vpow *= &vb;
        }
        let mut right = h.clone();
        taylor_shift(&mut right, &ub);
        if right[0].is_zero() {
            continue;
        }
        let step = &vb - &ub;
        let mut pow = BigInt::one();
        for c in right.iter_mut() {
            *c *= &pow;
            pow *= &step;
        }
        let mut left = h;
        let mut pow = BigInt::one();
        for c in left.iter_mut() {
            *c *= &pow;
            pow *= &ub;
        }
        make_primitive(&mut left);
        make_primitive(&mut right);
        let s = Rational::new(u.into(), v.into());
        let mid = &node.a + (&node.b - &node.a) * s;
        return (
            Node { q: left, a: node.a.clone(), b: mid.clone(), depth: node.depth + 1 },
            Node { q: right, a: mid, b: node.b.clone(), depth: node.depth + 1 },
        );
    }
    unreachable!("a polynomial has finitely many zeros among the split candidates")
}
