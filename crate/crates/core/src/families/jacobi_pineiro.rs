use num_traits::One;

use super::linsolve::solve_exact;
use super::params::{FamilyKind, FamilyParams};
use crate::exact::{beta_moment_ratios, ExactPolynomial, MultiIndex, Rational};
use crate::Result;

/// Monic Jacobi-Piñeiro polynomial by solving the orthogonality system.
///
/// Row `(j, k)` reads `Σ_i c_i m_j(i+k) = -m_j(N+k)` where `m_j` are the
/// normalized moments of `x^α_j (1-x)^β` and `N = |n|`.
pub fn build_jp(params: &FamilyParams, n: &MultiIndex) -> Result<ExactPolynomial> {
    params.expect_kind(FamilyKind::JacobiPineiro)?;
    params.check_index_len(n.r())?;
    let size = n.size();
    if size == 0 {
        return Ok(ExactPolynomial::one());
    }
    let beta = params.beta();
    let mut rows = Vec::with_capacity(size);
    let mut rhs = Vec::with_capacity(size);
    for (j, &nj) in n.entries().iter().enumerate() {
        if nj == 0 {
            continue;
        }
        let m = beta_moment_ratios(&params.alpha()[j], &beta, size + nj - 1)?;
        for k in 0..nj {
            rows.push(m[k..k + size].to_vec());
            rhs.push(-m[k + size].clone());
        }
    }
    let mut coeffs: Vec<Rational> = solve_exact(&rows, &rhs)?;
    coeffs.push(Rational::one());
    Ok(ExactPolynomial::new(coeffs))
}
