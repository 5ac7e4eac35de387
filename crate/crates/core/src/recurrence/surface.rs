use num_traits::{One, Zero};

use super::branch::{Asymptote, Pencil};
use super::limits::LimitData;
use crate::exact::{int, BigComplex, ExactPolynomial, Rational};
use crate::families::FamilyKind;
use crate::{Error, Result};

/// Polynomials `A_{r-1}` and `B_r` of the ratio-asymptotics equation
/// `(z - x) B(z) + A(z) = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LimitSurface {
    pub a: ExactPolynomial,
    pub b: ExactPolynomial,
    pub family: FamilyKind,
    pub diagonal: bool,
    /// Roots of `B`, with multiplicity.
    pub nodes: Vec<Rational>,
}

impl LimitSurface {
    pub fn r(&self) -> usize {
        self.nodes.len()
    }

    /// The equation as `base(z) + x·slope(z)` with `base = zB + A`, `slope = -B`.
    pub fn pencil(&self) -> Pencil {
        Pencil::new(&self.b.mul_x() + &self.a, -&self.b)
    }

    /// `A(b_j) / ∏_{i≠j}(b_j - b_i)` for distinct nodes.
    pub fn residues(&self) -> Result<Vec<Rational>> {
        let r = self.nodes.len();
        (0..r)
            .map(|j| {
                let mut den = Rational::one();
                for i in 0..r {
                    if i != j {
                        den *= &self.nodes[j] - &self.nodes[i];
                    }
                }
                if den.is_zero() {
                    return Err(Error::InvalidParams("coincident nodes have no simple residues".into()));
                }
                Ok(self.a.eval(&self.nodes[j]) / den)
            })
            .collect()
    }
}

/// Lagrange interpolation of `A` through `(b_j, A(b_j))` with the family's
/// node values; `B = ∏(z - b_j)`.
pub fn build_surface(limits: &LimitData) -> Result<LimitSurface> {
    let r = limits.b.len();
    for i in 0..r {
        for j in i + 1..r {
            if limits.b[i] == limits.b[j] {
                return Err(Error::InvalidParams("coincident b_j: use the diagonal surface".into()));
            }
        }
    }
    let values: Vec<Rational> = match limits.family {
        FamilyKind::JacobiPineiro => {
            let p = limits
                .p
                .clone()
                .ok_or_else(|| Error::InvalidParams("jacobi-pineiro limits need p".into()))?;
            limits
                .q
                .iter()
                .map(|q| num_traits::pow(&p * q / (Rational::one() + q), r + 1))
                .collect()
        }
        FamilyKind::MultipleLaguerre => limits.q.iter().map(|q| num_traits::pow(q.clone(), r + 1)).collect(),
        FamilyKind::MeijerG => {
            return Err(Error::InvalidParams("no limit surface for meijer-g".into()));
        }
    };
    let mut a = ExactPolynomial::zero();
    for j in 0..r {
        let mut basis = ExactPolynomial::one();
        let mut den = Rational::one();
        for i in 0..r {
            if i != j {
                basis = basis.mul_x_minus(&limits.b[i]);
                den *= &limits.b[j] - &limits.b[i];
            }
        }
        a = &a + &basis.scale(&(&values[j] / den));
    }
    Ok(LimitSurface {
        a,
        b: ExactPolynomial::from_roots(&limits.b),
        family: limits.family,
        diagonal: false,
        nodes: limits.b.clone(),
    })
}

/// Diagonal parameters: the common node `p` and the shift `c` of the
/// simplified equation `x (z - p)^r = (z - c)^{r+1}`.
pub fn diagonal_constants(r: usize, family: FamilyKind) -> Result<(Rational, Rational)> {
    if r == 0 {
        return Err(Error::InvalidParams("r must be positive".into()));
    }
    let rq = int(r as i64);
    let r1 = int(r as i64 + 1);
    match family {
        FamilyKind::JacobiPineiro => {
            let p = num_traits::pow(&rq / &r1, r);
            let c = &p * &rq / &r1;
            Ok((p, c))
        }
        FamilyKind::MultipleLaguerre => Ok((&r1 / &rq, Rational::one())),
        FamilyKind::MeijerG => Err(Error::InvalidParams("no limit surface for meijer-g".into())),
    }
}

/// Coalesced-node surface: `A` is the degree `r-1` Taylor polynomial at the
/// common node of `(z + p(1-s))^{r+1}` (JP) or `(z-1)^{r+1}` (ML).
pub fn diagonal_surface(r: usize, family: FamilyKind) -> Result<LimitSurface> {
    let (p, _) = diagonal_constants(r, family)?;
    let r1 = int(r as i64 + 1);
    let zp = ExactPolynomial::from_roots(&[p.clone()]);
    let b = zp.pow(r as u32);
    let a = match family {
        FamilyKind::JacobiPineiro => {
            let s = int(2 * r as i64 + 1) / &r1;
            let shift = &p * (Rational::one() - &s);
            let f = ExactPolynomial::from_roots(&[-shift]).pow(r as u32 + 1);
            let tail = &zp.pow(r as u32 + 1) + &b.scale(&(&r1 * &p * (int(2) - &s)));
            &f - &tail
        }
        _ => {
            let f = ExactPolynomial::from_roots(&[Rational::one()]).pow(r as u32 + 1);
            let tail = &zp.pow(r as u32 + 1) + &b.scale(&p);
            &f - &tail
        }
    };
    Ok(LimitSurface { a, b, family, diagonal: true, nodes: vec![p; r] })
}

/// Closed form `x (z-p)^r = (z-c)^{r+1}` written as a pencil with the same
/// orientation as [`LimitSurface::pencil`].
pub fn diagonal_equation(r: usize, family: FamilyKind) -> Result<Pencil> {
    let (p, c) = diagonal_constants(r, family)?;
    Ok(Pencil::new(
        ExactPolynomial::from_roots(&[c]).pow(r as u32 + 1),
        -&ExactPolynomial::from_roots(&[p]).pow(r as u32),
    ))
}

/// The branch of `(z - x)B(z) + A(z) = 0` with `z - x → 0` at infinity,
/// at the precision of `x`.
pub fn solve_z(x: &BigComplex, surface: &LimitSurface) -> Result<BigComplex> {
    surface.pencil().solve(x, Asymptote::Identity, x.precision())
}
