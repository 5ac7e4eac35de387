//! Normalized moments of the Jacobi and Laguerre weights as exact rationals.
//!
//! Everything is a ratio against the weight mass, so no Beta or Gamma value
//! ever needs to be evaluated.

use num_traits::One;

use super::{int, Rational};
use crate::{Error, Result};

fn check_exponent(name: &str, a: &Rational) -> Result<()> {
    if *a <= int(-1) {
        return Err(Error::InvalidParams(format!("{name} must exceed -1, got {a}")));
    }
    Ok(())
}

/// `∫₀¹ x^(a+m) (1-x)^β dx / ∫₀¹ x^a (1-x)^β dx = ∏_{i=1..m} (a+i)/(a+β+1+i)`.
pub fn beta_moment_ratio(a: &Rational, beta: &Rational, m: usize) -> Result<Rational> {
    check_exponent("a", a)?;
    check_exponent("beta", beta)?;
    Ok((1..=m).fold(Rational::one(), |acc, i| {
        let i = int(i as i64);
        acc * (a + &i) / (a + beta + int(1) + i)
    }))
}

/// All ratios for `m = 0..=m_max`.
pub fn beta_moment_ratios(a: &Rational, beta: &Rational, m_max: usize) -> Result<Vec<Rational>> {
    check_exponent("a", a)?;
    check_exponent("beta", beta)?;
    let mut out = Vec::with_capacity(m_max + 1);
    let mut acc = Rational::one();
    out.push(acc.clone());
    for i in 1..=m_max {
        let i = int(i as i64);
        acc = acc * (a + &i) / (a + beta + int(1) + i);
        out.push(acc.clone());
    }
    Ok(out)
}

/// `Γ(a+m+1)/Γ(a+1) = ∏_{i=1..m} (a+i)`.
pub fn gamma_moment_ratio(a: &Rational, m: usize) -> Result<Rational> {
    check_exponent("a", a)?;
    Ok((1..=m).fold(Rational::one(), |acc, i| acc * (a + int(i as i64))))
}

pub fn gamma_moment_ratios(a: &Rational, m_max: usize) -> Result<Vec<Rational>> {
    check_exponent("a", a)?;
    let mut out = Vec::with_capacity(m_max + 1);
    let mut acc = Rational::one();
    out.push(acc.clone());
    for i in 1..=m_max {
        acc *= a + int(i as i64);
        out.push(acc.clone());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use proptest::prelude::*;

    #[test]
    fn beta_examples() {
        assert_eq!(beta_moment_ratio(&int(0), &int(0), 0).unwrap(), int(1));
        assert_eq!(beta_moment_ratio(&int(0), &int(0), 1).unwrap(), rat(1, 2));
        assert_eq!(beta_moment_ratio(&rat(1, 3), &int(0), 2).unwrap(), rat(2, 5));
        assert!(beta_moment_ratio(&int(-1), &int(0), 1).is_err());
        assert!(beta_moment_ratio(&int(0), &rat(-3, 2), 1).is_err());
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(gamma_moment_ratio(&int(0), 3).unwrap(), int(6));
        assert_eq!(gamma_moment_ratio(&rat(1, 3), 1).unwrap(), rat(4, 3));
        assert_eq!(gamma_moment_ratio(&rat(5, 7), 0).unwrap(), int(1));
        assert!(gamma_moment_ratio(&rat(-4, 3), 2).is_err());
    }

    #[test]
    fn tables_match_single_values() {
        let a = rat(1, 3);
        let b = rat(1, 4);
        let t = beta_moment_ratios(&a, &b, 6).unwrap();
        let g = gamma_moment_ratios(&a, 6).unwrap();
        for m in 0..=6 {
            assert_eq!(t[m], beta_moment_ratio(&a, &b, m).unwrap());
            assert_eq!(g[m], gamma_moment_ratio(&a, m).unwrap());
        }
    }

    proptest! {
        #[test]
        fn beta_semigroup(an in -9i64..40, ad in 1i64..10, bn in -9i64..40, bd in 1i64..10, m1 in 0usize..8, m2 in 0usize..8) {
            let a = rat(an, ad);
            let b = rat(bn, bd);
            prop_assume!(a > int(-1) && b > int(-1));
            let whole = beta_moment_ratio(&a, &b, m1 + m2).unwrap();
            let split = beta_moment_ratio(&a, &b, m1).unwrap()
                * beta_moment_ratio(&(&a + int(m1 as i64)), &b, m2).unwrap();
            prop_assert_eq!(whole, split);
        }

        #[test]
        fn gamma_step(an in -9i64..40, ad in 1i64..10, m in 0usize..12) {
            let a = rat(an, ad);
            prop_assume!(a > int(-1));
            let next = gamma_moment_ratio(&a, m + 1).unwrap();
            let step = gamma_moment_ratio(&a, m).unwrap() * (&a + int(m as i64 + 1));
            prop_assert_eq!(next, step);
        }
    }
}
