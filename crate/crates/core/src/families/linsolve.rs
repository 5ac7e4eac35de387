use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::exact::Rational;
use crate::{Error, Result};

/// Solves `A·c = rhs` exactly.
///
/// Rows are cleared to integers and reduced with fraction-free (Bareiss)
/// elimination, so intermediate entries stay integral and every division is
/// exact; the final triangular system is back-substituted over the rationals.
pub fn solve_exact(a: &[Vec<Rational>], rhs: &[Rational]) -> Result<Vec<Rational>> {
    let n = rhs.len();
    if a.len() != n || a.iter().any(|row| row.len() != n) {
        return Err(Error::InvalidParams("linear system must be square".into()));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    // Integer augmented matrix.
    let mut m: Vec<Vec<BigInt>> = a
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let lcm = row.iter().chain(std::iter::once(b)).fold(BigInt::one(), |l, q| l.lcm(q.denom()));
            row.iter().chain(std::iter::once(b)).map(|q| (q * &lcm).to_integer()).collect()
        })
        .collect();

    let mut prev = BigInt::one();
    for k in 0..n {
        let pivot = (k..n).find(|&i| !m[i][k].is_zero()).ok_or(Error::SingularSystem)?;
        m.swap(k, pivot);
        for i in k + 1..n {
            for j in k + 1..=n {
                let v = (&m[k][k] * &m[i][j] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }

    let mut x = vec![Rational::zero(); n];
    for i in (0..n).rev() {
        let mut acc = Rational::from_integer(m[i][n].clone());
        for j in i + 1..n {
            acc -= Rational::from_integer(m[i][j].clone()) * &x[j];
        }
        x[i] = acc / Rational::from_integer(m[i][i].clone());
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    #[test]
    fn solves_hilbert_system_exactly() {
        // Hilbert matrix H_ij = 1/(i+j+1), rhs = H·(1,2,3,4).
        let n = 4;
        let h: Vec<Vec<Rational>> =
            (0..n).map(|i| (0..n).map(|j| rat(1, (i + j + 1) as i64)).collect()).collect();
        let want: Vec<Rational> = (1..=n as i64).map(int).collect();
        let rhs: Vec<Rational> =
            h.iter().map(|row| row.iter().zip(&want).map(|(a, x)| a * x).sum()).collect();
        assert_eq!(solve_exact(&h, &rhs).unwrap(), want);
    }

    #[test]
    fn needs_pivoting_and_detects_singularity() {
        let a = vec![vec![int(0), int(1)], vec![int(1), int(0)]];
        assert_eq!(solve_exact(&a, &[int(2), int(3)]).unwrap(), vec![int(3), int(2)]);
        let s = vec![vec![int(1), int(2)], vec![int(2), int(4)]];
        assert_eq!(solve_exact(&s, &[int(1), int(1)]).unwrap_err(), Error::SingularSystem);
    }
}
