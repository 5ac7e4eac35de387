use num_bigint::BigInt;
use num_traits::One;

use crate::exact::{ExactPolynomial, Rational};

/// Monic Meijer-G polynomial of degree `n` on the stepline.
///
/// The coefficient of `x^k` is `(-1)^(n-k) C(n,k) ∏_j (n+ν_j)!/(k+ν_j)!`,
/// which is already monic.
pub fn build_meijer_stepline(nu: &[u32], n: usize) -> ExactPolynomial {
    let mut coeffs = vec![Rational::one(); n + 1];
    // Walk k downward: c_{k-1}/c_k = -k/(n-k+1) · ∏_j (k+ν_j).
    let mut c = BigInt::one();
    for k in (1..=n).rev() {
        let mut num = BigInt::from(k);
        for &v in nu {
            num *= BigInt::from(k as u64 + v as u64);
        }
        c = -(c * num) / BigInt::from(n - k + 1);
        coeffs[k - 1] = Rational::from_integer(c.clone());
    }
    ExactPolynomial::new(coeffs)
}
