use std::sync::OnceLock;

use num_traits::{One, Zero};

use super::params::{FamilyKind, FamilyParams};
use super::{build_jp, build_meijer_stepline, build_ml_explicit, build_via_recurrence};
use crate::exact::{int, ExactPolynomial, MultiIndex, Rational};
use crate::{Error, Result};

/// Limit law followed by scaled zeros: the empirical distribution of `y`
/// approaches the density `density` evaluated at `argument_factor · y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LimitLaw {
    pub density: &'static str,
    pub argument_factor: Rational,
}

/// One polynomial family, selectable by name.
pub trait Family: Send + Sync {
    fn name(&self) -> &'static str;

    fn aliases(&self) -> &'static [&'static str] {
        &[]
    }

    fn kind(&self) -> FamilyKind;

    /// Construction straight from the defining formula or system.
    fn build_direct(&self, params: &FamilyParams, n: &MultiIndex) -> Result<ExactPolynomial>;

    /// Cheapest exact construction; always the same polynomial as
    /// [`Family::build_direct`].
    fn build(&self, params: &FamilyParams, n: &MultiIndex) -> Result<ExactPolynomial> {
        self.build_direct(params, n)
    }

    /// Multi-index of the `n`-th member of the sequence used in experiments.
    fn sequence_index(&self, r: usize, n: usize) -> MultiIndex;

    /// Interval containing every zero of `p`.
    fn support(&self, p: &ExactPolynomial) -> (Rational, Rational) {
        (Rational::zero(), root_bound(p))
    }

    /// Factor applied to zeros before comparing with the limit law.
    fn zero_scale(&self, r: usize, n: &MultiIndex) -> Rational;

    fn limit_law(&self, r: usize) -> LimitLaw;
}

struct JacobiPineiro;
struct MultipleLaguerre;
struct MeijerG;

/// Above this degree JP polynomials come from the recurrence instead of the
/// dense linear solve.
const JP_DIRECT_MAX: usize = 12;

impl Family for JacobiPineiro {
    fn name(&self) -> &'static str {
        "jp"
    }
    fn aliases(&self) -> &'static [&'static str] {
        &["jacobi-pineiro", "jacobi_pineiro", "jacobipineiro"]
    }
    fn kind(&self) -> FamilyKind {
        FamilyKind::JacobiPineiro
    }
    fn build_direct(&self, params: &FamilyParams, n: &MultiIndex) -> Result<ExactPolynomial> {
        build_jp(params, n)
    }
    fn build(&self, params: &FamilyParams, n: &MultiIndex) -> Result<ExactPolynomial> {
        if n.size() <= JP_DIRECT_MAX {
            build_jp(params, n)
        } else {
            build_via_recurrence(params, n, &n.cyclic_path())
        }
    }
    fn sequence_index(&self, r: usize, n: usize) -> MultiIndex {
        MultiIndex::diagonal(n, r)
    }
    fn support(&self, _p: &ExactPolynomial) -> (Rational, Rational) {
        (Rational::zero(), Rational::one())
    }
    fn zero_scale(&self, _r: usize, _n: &MultiIndex) -> Rational {
        Rational::one()
    }
    fn limit_law(&self, _r: usize) -> LimitLaw {
        LimitLaw { density: "v", argument_factor: Rational::one() }
    }
}

impl Family for MultipleLaguerre {
    fn name(&self) -> &'static str {
        "ml"
    }
    fn aliases(&self) -> &'static [&'static str] {
        &["multiple-laguerre", "multiple_laguerre", "laguerre"]
    }
    fn kind(&self) -> FamilyKind {
        FamilyKind::MultipleLaguerre
    }
    fn build_direct(&self, params: &FamilyParams, n: &MultiIndex) -> Result<ExactPolynomial> {
        build_ml_explicit(params, n)
    }
    fn sequence_index(&self, r: usize, n: usize) -> MultiIndex {
        MultiIndex::diagonal(n, r)
    }
    fn zero_scale(&self, _r: usize, n: &MultiIndex) -> Rational {
        Rational::new(1.into(), n.size().max(1).into())
    }
    fn limit_law(&self, r: usize) -> LimitLaw {
        LimitLaw { density: "u", argument_factor: int(r as i64) }
    }
}

impl Family for MeijerG {
    fn name(&self) -> &'static str {
        "meijer"
    }
    fn aliases(&self) -> &'static [&'static str] {
        &["meijer-g", "meijer_g", "meijerg"]
    }
    fn kind(&self) -> FamilyKind {
        FamilyKind::MeijerG
    }
    fn build_direct(&self, params: &FamilyParams, n: &MultiIndex) -> Result<ExactPolynomial> {
        params.expect_kind(FamilyKind::MeijerG)?;
        params.check_index_len(n.r())?;
        if *n != MultiIndex::stepline(n.size(), n.r()) {
            return Err(Error::InvalidParams(format!("meijer-g is built on the stepline only; {n} is not a stepline index")));
        }
        Ok(build_meijer_stepline(params.nu(), n.size()))
    }
    fn sequence_index(&self, r: usize, n: usize) -> MultiIndex {
        MultiIndex::stepline(n, r)
    }
    fn zero_scale(&self, r: usize, n: &MultiIndex) -> Rational {
        let m = num_bigint::BigInt::from(n.size().max(1));
        Rational::new(1.into(), num_traits::pow(m, r))
    }
    fn limit_law(&self, _r: usize) -> LimitLaw {
        LimitLaw { density: "g", argument_factor: Rational::one() }
    }
}

pub fn registered_families() -> &'static [Box<dyn Family>] {
    static REGISTRY: OnceLock<Vec<Box<dyn Family>>> = OnceLock::new();
    REGISTRY.get_or_init(|| vec![Box::new(JacobiPineiro), Box::new(MultipleLaguerre), Box::new(MeijerG)])
}

pub fn family_names() -> Vec<&'static str> {
    registered_families().iter().map(|f| f.name()).collect()
}

/// Looks a family up by name or alias, case-insensitively.
pub fn family(name: &str) -> Result<&'static dyn Family> {
    let key = name.trim().to_ascii_lowercase();
    registered_families()
        .iter()
        .find(|f| f.name() == key || f.aliases().contains(&key.as_str()))
        .map(|f| f.as_ref())
        .ok_or_else(|| {
            Error::InvalidParams(format!("unknown family '{name}' (known: {})", family_names().join(", ")))
        })
}

/// Power of two exceeding the modulus of every root (Fujiwara-type bound
/// `2 max_k |c_{d-k}/c_d|^{1/k}`).
pub fn root_bound(p: &ExactPolynomial) -> Rational {
    let d = p.degree();
    if d == 0 {
        return Rational::one();
    }
    let lead = p.leading();
    let mut best = i64::MIN;
    for k in 1..=d {
        let c = p.coeff(d - k) / &lead;
        if c.is_zero() {
            continue;
        }
        // |c| < 2^e with e from numerator/denominator bit lengths.
        let e = c.numer().bits() as i64 - c.denom().bits() as i64 + 1;
        let t = e.div_euclid(k as i64) + 1;
        best = best.max(t);
    }
    if best == i64::MIN {
        return Rational::one();
    }
    let e = best + 1;
    if e >= 0 {
        Rational::from_integer(num_bigint::BigInt::one() << e as usize)
    } else {
        Rational::new(1.into(), num_bigint::BigInt::one() << (-e) as usize)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn lookup_by_name_and_alias() {
        assert_eq!(family("jp").unwrap().kind(), FamilyKind::JacobiPineiro);
        assert_eq!(family("Multiple-Laguerre").unwrap().kind(), FamilyKind::MultipleLaguerre);
        assert_eq!(family("meijer-g").unwrap().kind(), FamilyKind::MeijerG);
        let err = family("hermite").err().expect("unknown name");
        assert!(err.to_string().contains("unknown family"));
    }

    #[test]
    fn root_bound_contains_roots() {
        let p = ExactPolynomial::from_roots(&[int(-37), rat(1, 3), int(1000)]);
        let b = root_bound(&p);
        assert!(b > int(1000));
        let tiny = ExactPolynomial::from_roots(&[rat(1, 1024), rat(-1, 2048)]);
        let b = root_bound(&tiny);
        assert!(b > rat(1, 1024) && b < int(1));
    }

    #[test]
    fn fast_and_direct_jp_agree() {
        let f = family("jp").unwrap();
        let p = FamilyParams::jacobi_pineiro(vec![rat(1, 3), rat(1, 2)], rat(1, 4)).unwrap();
        let n = MultiIndex::diagonal(7, 2);
        assert_eq!(f.build(&p, &n).unwrap(), f.build_direct(&p, &n).unwrap());
    }
}
