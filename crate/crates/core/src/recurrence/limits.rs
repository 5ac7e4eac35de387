use num_traits::{One, Zero};

use crate::exact::{format_rational, int, Rational};
use crate::families::FamilyKind;
use crate::{Error, Result};

/// Limits of the recurrence coefficients along the ray `n = (⌊q_1 n⌋, …)`.
///
/// For multiple Laguerre the limits are of `a/n^2` and `b/n`; `p` and `s`
/// are only defined for Jacobi-Piñeiro.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LimitData {
    pub family: FamilyKind,
    pub q: Vec<Rational>,
    pub a: Vec<Rational>,
    pub b: Vec<Rational>,
    pub p: Option<Rational>,
    pub s: Option<Rational>,
}

fn check_ray(q: &[Rational]) -> Result<()> {
    if q.is_empty() {
        return Err(Error::InvalidParams("ray needs at least one entry".into()));
    }
    if let Some(bad) = q.iter().find(|v| **v <= Rational::zero()) {
        return Err(Error::InvalidParams(format!("ray entries must be positive, got {}", format_rational(bad))));
    }
    let total: Rational = q.iter().sum();
    if !total.is_one() {
        return Err(Error::InvalidParams(format!("ray entries must sum to 1, got {}", format_rational(&total))));
    }
    for i in 0..q.len() {
        for j in i + 1..q.len() {
            if q[i] == q[j] {
                return Err(Error::InvalidParams(format!(
                    "repeated ray entry q_{} = q_{}: use the diagonal surface",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    Ok(())
}

fn inverse_vandermonde_factor(q: &[Rational], j: usize) -> Rational {
    q.iter()
        .enumerate()
        .filter(|&(i, _)| i != j)
        .fold(Rational::one(), |acc, (_, qi)| acc / (&q[j] - qi))
}

fn power(x: &Rational, k: usize) -> Rational {
    num_traits::pow(x.clone(), k)
}

pub fn jp_limit_coeffs(q: &[Rational]) -> Result<LimitData> {
    check_ray(q)?;
    let r = q.len();
    let inv: Vec<Rational> = q.iter().map(|v| Rational::one() / (Rational::one() + v)).collect();
    let p = inv.iter().fold(Rational::one(), |acc, v| acc * v);
    let s = int(r as i64 + 1) - inv.iter().sum::<Rational>();
    let a = (0..r)
        .map(|j| &p * power(&q[j], r + 1) * power(&inv[j], 3) * inverse_vandermonde_factor(q, j))
        .collect();
    let b = (0..r).map(|j| &p * (&s - &inv[j])).collect();
    Ok(LimitData { family: FamilyKind::JacobiPineiro, q: q.to_vec(), a, b, p: Some(p), s: Some(s) })
}

pub fn ml_limit_coeffs(q: &[Rational]) -> Result<LimitData> {
    check_ray(q)?;
    let r = q.len();
    let a = (0..r).map(|j| power(&q[j], r + 1) * inverse_vandermonde_factor(q, j)).collect();
    let b = q.iter().map(|v| Rational::one() + v).collect();
    Ok(LimitData { family: FamilyKind::MultipleLaguerre, q: q.to_vec(), a, b, p: None, s: None })
}
