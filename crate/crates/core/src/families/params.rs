use std::fmt;

use num_traits::Zero;

use crate::exact::{format_rational, int, Rational};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    JacobiPineiro,
    MultipleLaguerre,
    MeijerG,
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyKind::JacobiPineiro => "jacobi-pineiro",
            FamilyKind::MultipleLaguerre => "multiple-laguerre",
            FamilyKind::MeijerG => "meijer-g",
        })
    }
}

/// Family tag plus its parameters, validated on construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyParams {
    kind: FamilyKind,
    alpha: Vec<Rational>,
    beta: Option<Rational>,
    nu: Vec<u32>,
}

impl FamilyParams {
    pub fn jacobi_pineiro(alpha: Vec<Rational>, beta: Rational) -> Result<Self> {
        check_alpha(&alpha)?;
        if beta <= int(-1) {
            return Err(Error::InvalidParams(format!(
                "beta = {} must exceed -1",
                format_rational(&beta)
            )));
        }
        Ok(FamilyParams { kind: FamilyKind::JacobiPineiro, alpha, beta: Some(beta), nu: Vec::new() })
    }

    pub fn multiple_laguerre(alpha: Vec<Rational>) -> Result<Self> {
        check_alpha(&alpha)?;
        Ok(FamilyParams { kind: FamilyKind::MultipleLaguerre, alpha, beta: None, nu: Vec::new() })
    }

    pub fn meijer_g(nu: Vec<u32>) -> Result<Self> {
        if nu.is_empty() {
            return Err(Error::InvalidParams("nu needs at least one entry (r >= 1)".into()));
        }
        Ok(FamilyParams { kind: FamilyKind::MeijerG, alpha: Vec::new(), beta: None, nu })
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn r(&self) -> usize {
        match self.kind {
            FamilyKind::MeijerG => self.nu.len(),
            _ => self.alpha.len(),
        }
    }

    pub fn alpha(&self) -> &[Rational] {
        &self.alpha
    }

    /// `β` for Jacobi-Piñeiro; zero for the other families.
    pub fn beta(&self) -> Rational {
        self.beta.clone().unwrap_or_else(Rational::zero)
    }

    pub fn nu(&self) -> &[u32] {
        &self.nu
    }

    pub(crate) fn expect_kind(&self, kind: FamilyKind) -> Result<()> {
        if self.kind != kind {
            return Err(Error::InvalidParams(format!("expected {kind} parameters, got {}", self.kind)));
        }
        Ok(())
    }

    pub(crate) fn check_index_len(&self, len: usize) -> Result<()> {
        if len != self.r() {
            return Err(Error::InvalidParams(format!(
                "multi-index has {len} entries but the family has r = {}",
                self.r()
            )));
        }
        Ok(())
    }
}

fn check_alpha(alpha: &[Rational]) -> Result<()> {
    if alpha.is_empty() {
        return Err(Error::InvalidParams("alpha needs at least one entry (r >= 1)".into()));
    }
    for (j, a) in alpha.iter().enumerate() {
        if *a <= int(-1) {
            return Err(Error::InvalidParams(format!(
                "alpha_{} = {} must exceed -1",
                j + 1,
                format_rational(a)
            )));
        }
    }
    for i in 0..alpha.len() {
        for j in i + 1..alpha.len() {
            let d = &alpha[i] - &alpha[j];
            if d.is_integer() {
                return Err(Error::InvalidParams(format!(
                    "alpha difference is an integer: violates normality (alpha_{} - alpha_{} = {})",
                    i + 1,
                    j + 1,
                    format_rational(&d)
                )));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn validation_messages_name_the_invariant() {
        let err = FamilyParams::jacobi_pineiro(vec![rat(1, 3), rat(4, 3)], int(0)).unwrap_err();
        assert!(err.to_string().contains("alpha difference is an integer: violates normality"));
        let err = FamilyParams::multiple_laguerre(vec![int(-1)]).unwrap_err();
        assert!(err.to_string().contains("must exceed -1"));
        let err = FamilyParams::jacobi_pineiro(vec![int(0)], rat(-3, 2)).unwrap_err();
        assert!(err.to_string().contains("beta"));
        assert!(FamilyParams::meijer_g(vec![]).is_err());
    }

    #[test]
    fn accepts_normal_parameters() {
        let p = FamilyParams::jacobi_pineiro(vec![rat(1, 3), rat(1, 2)], rat(1, 4)).unwrap();
        assert_eq!(p.r(), 2);
        assert_eq!(p.beta(), rat(1, 4));
        let m = FamilyParams::meijer_g(vec![0, 0]).unwrap();
        assert_eq!(m.r(), 2);
        // r = 1 has no normality condition.
        assert!(FamilyParams::multiple_laguerre(vec![rat(5, 2)]).is_ok());
    }
}
