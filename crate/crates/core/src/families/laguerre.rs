use num_traits::{One, Zero};

use super::params::{FamilyKind, FamilyParams};
use crate::exact::{ExactPolynomial, MultiIndex, Rational};
use crate::Result;

/// Monic multiple Laguerre polynomial of the first kind from the nested
/// binomial sum.
///
/// The binomial attached to `k_j` has upper argument
/// `n_j + … + n_r - (k_{j+1} + … + k_r) + α_j`, so the sum is walked from
/// `j = r` down to `j = 1`, updating falling factorials incrementally.
pub fn build_ml_explicit(params: &FamilyParams, n: &MultiIndex) -> Result<ExactPolynomial> {
    params.expect_kind(FamilyKind::MultipleLaguerre)?;
    params.check_index_len(n.r())?;
    let size = n.size();
    let mut coeffs = vec![Rational::zero(); size + 1];
    let tails: Vec<usize> = (0..n.r()).map(|j| n.entries()[j..].iter().sum()).collect();
    accumulate(params.alpha(), n.entries(), &tails, n.r(), 0, Rational::one(), &mut coeffs);
    Ok(ExactPolynomial::new(coeffs))
}

/// Sums over `k_1..k_level` given the partial product for `k_{level+1}..k_r`
/// and `kk = k_{level+1} + … + k_r`.
fn accumulate(
    alpha: &[Rational],
    n: &[usize],
    tails: &[usize],
    level: usize,
    kk: usize,
    acc: Rational,
    coeffs: &mut [Rational],
) {
    if level == 0 {
        let deg = tails[0] - kk;
        if kk % 2 == 0 {
            coeffs[deg] += acc;
        } else {
            coeffs[deg] -= acc;
        }
        return;
    }
    let j = level - 1;
    let upper = Rational::from_integer((tails[j] as i64 - kk as i64).into()) + &alpha[j];
    // term(k) = n_j!/(n_j-k)! * C(upper, k) = C(n_j, k) * (upper)_k falling.
    let mut term = acc;
    for k in 0..=n[j] {
        if k > 0 {
            let kq = Rational::from_integer((k as i64).into());
            let falling = Rational::from_integer(((n[j] - k + 1) as i64).into());
            term = term * falling * (&upper - &kq + Rational::one()) / kq;
        }
        if term.is_zero() {
            break;
        }
        accumulate(alpha, n, tails, j, kk + k, term.clone(), coeffs);
    }
}
