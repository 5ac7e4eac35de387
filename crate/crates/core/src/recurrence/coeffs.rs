use num_traits::{One, Zero};

use crate::exact::{int, MultiIndex, Rational};
use crate::families::{FamilyKind, FamilyParams};
use crate::{Error, Result};

/// Nearest-neighbour recurrence coefficients at one multi-index:
/// `x P_n = P_{n+e_k} + b_k P_n + Σ_j a_j P_{n-e_j}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NNCoefficients {
    pub a: Vec<Rational>,
    pub b: Vec<Rational>,
}

/// Dispatches on the family; Meijer-G has no coefficients here.
pub fn nn_coeffs(params: &FamilyParams, n: &MultiIndex) -> Result<NNCoefficients> {
    match params.kind() {
        FamilyKind::JacobiPineiro => jp_nn_coeffs(params, n),
        FamilyKind::MultipleLaguerre => ml_nn_coeffs(params, n),
        FamilyKind::MeijerG => Err(Error::InvalidParams(
            "nearest-neighbour coefficients are available for jacobi-pineiro and multiple-laguerre".into(),
        )),
    }
}

/// Product of factors that refuses zero denominators.
struct Fraction {
    num: Rational,
    den: Rational,
}

impl Fraction {
    fn new() -> Self {
        Fraction { num: Rational::one(), den: Rational::one() }
    }

    fn mul(&mut self, f: Rational) {
        self.num *= f;
    }

    fn div(&mut self, f: Rational, what: &str) -> Result<()> {
        if f.is_zero() {
            return Err(Error::Pole(what.to_string()));
        }
        self.den *= f;
        Ok(())
    }

    fn value(self) -> Rational {
        self.num / self.den
    }
}

fn sizeq(n: &MultiIndex) -> Rational {
    int(n.size() as i64)
}

fn entry(n: &MultiIndex, j: usize) -> Rational {
    int(n.get(j) as i64)
}

fn cross_product(alpha: &[Rational], n: &MultiIndex, j: usize, f: &mut Fraction) -> Result<()> {
    let nj = entry(n, j);
    for i in 0..n.r() {
        if i == j {
            continue;
        }
        let d = &alpha[j] - &alpha[i];
        f.mul(&nj + &d);
        f.div(&nj - entry(n, i) + &d, &format!("n_{} - n_{} + alpha_{} - alpha_{} = 0", j + 1, i + 1, j + 1, i + 1))?;
    }
    Ok(())
}

/// Jacobi-Piñeiro coefficients.
///
/// Removable `0/0` factors are cancelled symbolically before evaluation:
/// entries with `n_i = 0` contribute ratio 1 to every product, and for
/// `n_j = 1` the factor `|n|+α_j+β` cancels `|n|+n_j+α_j+β-1`.
pub fn jp_nn_coeffs(params: &FamilyParams, n: &MultiIndex) -> Result<NNCoefficients> {
    params.expect_kind(FamilyKind::JacobiPineiro)?;
    params.check_index_len(n.r())?;
    let alpha = params.alpha();
    let beta = params.beta();
    let size = sizeq(n);
    let r = n.r();

    let mut a = Vec::with_capacity(r);
    for j in 0..r {
        if n.get(j) == 0 {
            a.push(Rational::zero());
            continue;
        }
        let nj = entry(n, j);
        let base = &size + &nj + &alpha[j] + &beta;
        let mut f = Fraction::new();
        f.mul(nj.clone() * (&nj + &alpha[j]) * (&size + &beta));
        f.div(&base + Rational::one(), "|n| + n_j + alpha_j + beta + 1 = 0")?;
        f.div(base.clone(), "|n| + n_j + alpha_j + beta = 0")?;
        for i in 0..r {
            if n.get(i) == 0 {
                continue;
            }
            if i != j || n.get(j) != 1 {
                f.mul(&size + &alpha[i] + &beta);
            }
            f.div(&size + entry(n, i) + &alpha[i] + &beta, "|n| + n_i + alpha_i + beta = 0")?;
        }
        if n.get(j) != 1 {
            f.div(&base - Rational::one(), "|n| + n_j + alpha_j + beta - 1 = 0")?;
        }
        cross_product(alpha, n, j, &mut f)?;
        a.push(f.value());
    }

    // Second term of b, common to every k.
    let mut second = Fraction::new();
    second.mul(&size + &beta);
    for j in 0..r {
        if n.get(j) == 0 {
            continue;
        }
        second.mul(&size + &beta + &alpha[j]);
        second.div(&size + entry(n, j) + &beta + &alpha[j], "|n| + n_j + beta + alpha_j = 0")?;
    }
    let second = second.value();

    let mut b = Vec::with_capacity(r);
    for k in 0..r {
        let mut f = Fraction::new();
        f.mul(&size + &beta + Rational::one());
        for j in 0..r {
            if j != k && n.get(j) == 0 {
                continue;
            }
            f.mul(&size + &beta + &alpha[j] + Rational::one());
            if j == k {
                f.div(&size + entry(n, k) + &beta + &alpha[k] + int(2), "|n| + n_k + beta + alpha_k + 2 = 0")?;
            } else {
                f.div(&size + entry(n, j) + &beta + &alpha[j] + Rational::one(), "|n| + n_j + beta + alpha_j + 1 = 0")?;
            }
        }
        b.push(f.value() - &second);
    }
    Ok(NNCoefficients { a, b })
}

/// Multiple Laguerre (first kind) coefficients.
pub fn ml_nn_coeffs(params: &FamilyParams, n: &MultiIndex) -> Result<NNCoefficients> {
    params.expect_kind(FamilyKind::MultipleLaguerre)?;
    params.check_index_len(n.r())?;
    let alpha = params.alpha();
    let r = n.r();
    let mut a = Vec::with_capacity(r);
    for j in 0..r {
        if n.get(j) == 0 {
            a.push(Rational::zero());
            continue;
        }
        let nj = entry(n, j);
        let mut f = Fraction::new();
        f.mul(&nj * (&nj + &alpha[j]));
        cross_product(alpha, n, j, &mut f)?;
        a.push(f.value());
    }
    let size = sizeq(n);
    let b = (0..r).map(|k| &size + entry(n, k) + &alpha[k] + Rational::one()).collect();
    Ok(NNCoefficients { a, b })
}
