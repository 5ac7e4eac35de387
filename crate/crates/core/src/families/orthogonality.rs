use num_traits::Zero;

use super::params::{FamilyKind, FamilyParams};
use crate::exact::{beta_moment_ratios, gamma_moment_ratios, ExactPolynomial, MultiIndex, Rational};
use crate::{Error, Result};

/// Outcome of an exact orthogonality check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthogonalityReport {
    pub holds: bool,
    /// First nonzero normalized integral as `(j, k, value)` with `j` 0-based.
    pub witness: Option<(usize, usize, Rational)>,
}

/// Checks `∫ p(x) x^k w_j(x) dx = 0` for `k < n_j`, every integral divided by
/// `∫ w_j` so it becomes a finite rational combination of moment ratios.
pub fn orthogonality_check(
    params: &FamilyParams,
    p: &ExactPolynomial,
    n: &MultiIndex,
) -> Result<OrthogonalityReport> {
    params.check_index_len(n.r())?;
    if p.degree() != n.size() || p.is_zero() {
        return Err(Error::InvalidParams(format!(
            "polynomial degree {} does not match |n| = {}",
            p.degree(),
            n.size()
        )));
    }
    let deg = p.degree();
    for (j, &nj) in n.entries().iter().enumerate() {
        if nj == 0 {
            continue;
        }
        let moments = match params.kind() {
            FamilyKind::JacobiPineiro => beta_moment_ratios(&params.alpha()[j], &params.beta(), deg + nj - 1)?,
            FamilyKind::MultipleLaguerre => gamma_moment_ratios(&params.alpha()[j], deg + nj - 1)?,
            FamilyKind::MeijerG => {
                return Err(Error::InvalidParams(
                    "orthogonality check is available for jacobi-pineiro and multiple-laguerre".into(),
                ))
            }
        };
        for k in 0..nj {
            let value: Rational = p.coeffs().iter().enumerate().map(|(i, c)| c * &moments[i + k]).sum();
            if !value.is_zero() {
                return Ok(OrthogonalityReport { holds: false, witness: Some((j, k, value)) });
            }
        }
    }
    Ok(OrthogonalityReport { holds: true, witness: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};
    use crate::families::build_jp;

    #[test]
    fn examples() {
        let p = FamilyParams::jacobi_pineiro(vec![int(0)], int(0)).unwrap();
        let two = MultiIndex::new(vec![2]).unwrap();
        let p2 = build_jp(&p, &two).unwrap();
        assert!(orthogonality_check(&p, &p2, &two).unwrap().holds);

        let bad = ExactPolynomial::new(vec![rat(-1, 3), int(1)]);
        let rep = orthogonality_check(&p, &bad, &MultiIndex::new(vec![1]).unwrap()).unwrap();
        assert!(!rep.holds);
        assert_eq!(rep.witness, Some((0, 0, rat(1, 6))));

        let rep = orthogonality_check(&p, &ExactPolynomial::one(), &MultiIndex::zeros(1)).unwrap();
        assert!(rep.holds && rep.witness.is_none());
    }
}
