use std::collections::HashMap;
use std::rc::Rc;

use num_traits::Zero;

use super::params::FamilyParams;
use crate::exact::{ExactPolynomial, MultiIndex};
use crate::recurrence::nn_coeffs;
use crate::{Error, Result};

/// Builds `P_n` by stepping `n -> n + e_k` along `path` (0-based directions)
/// with the nearest-neighbour relation
/// `P_{n+e_k} = (x - b_k) P_n - Σ_j a_j P_{n-e_j}`.
///
/// Neighbours `P_{n-e_j}` that are not on the path are built on demand by
/// lowering the largest entry (ties go to the largest direction).
pub fn build_via_recurrence(params: &FamilyParams, n: &MultiIndex, path: &[usize]) -> Result<ExactPolynomial> {
    params.check_index_len(n.r())?;
    let mut counts = vec![0usize; n.r()];
    for &k in path {
        if k >= n.r() {
            return Err(Error::InvalidParams(format!("path direction {} exceeds r = {}", k + 1, n.r())));
        }
        counts[k] += 1;
    }
    if counts != n.entries() {
        return Err(Error::InvalidParams(format!("path does not reach {n}")));
    }
    let mut builder = RecurrenceBuilder::new(params.clone());
    let mut cur = MultiIndex::zeros(n.r());
    for &k in path {
        let next = cur.raised(k);
        let p = builder.step(&cur, k)?;
        builder.memo.insert(next.clone(), Rc::new(p));
        cur = next;
    }
    Ok((*builder.get(n)?).clone())
}

/// Memoized lattice of polynomials connected by the recurrence. Reuse one
/// builder to produce a whole sequence of neighbouring indices cheaply.
pub struct RecurrenceBuilder {
    params: FamilyParams,
    memo: HashMap<MultiIndex, Rc<ExactPolynomial>>,
}

impl RecurrenceBuilder {
    pub fn new(params: FamilyParams) -> Self {
        let mut memo = HashMap::new();
        memo.insert(MultiIndex::zeros(params.r()), Rc::new(ExactPolynomial::one()));
        RecurrenceBuilder { params, memo }
    }

    /// `P_m`, built along the off-path rule if not cached.
    pub fn get(&mut self, m: &MultiIndex) -> Result<Rc<ExactPolynomial>> {
        self.params.check_index_len(m.r())?;
        if let Some(p) = self.memo.get(m) {
            return Ok(p.clone());
        }
        // Iterative descent: find the chain of lowerings until a cached index.
        let mut chain = Vec::new();
        let mut cur = m.clone();
        while !self.memo.contains_key(&cur) {
            let k = lowering_direction(&cur);
            chain.push((cur.clone(), k));
            cur = cur.lowered(k).expect("positive entry");
        }
        for (target, k) in chain.into_iter().rev() {
            let prev = target.lowered(k).expect("positive entry");
            let p = self.step(&prev, k)?;
            self.memo.insert(target, Rc::new(p));
        }
        Ok(self.memo[m].clone())
    }

    fn step(&mut self, m: &MultiIndex, k: usize) -> Result<ExactPolynomial> {
        let c = nn_coeffs(&self.params, m)?;
        let pm = self.get(m)?;
        let mut next = pm.mul_x_minus(&c.b[k]);
        for (j, a) in c.a.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let lower = m.lowered(j).expect("a_j vanishes when n_j = 0");
            let pl = self.get(&lower)?;
            next = next - pl.scale(a);
        }
        Ok(next)
    }
}

fn lowering_direction(m: &MultiIndex) -> usize {
    let e = m.entries();
    let max = *e.iter().max().unwrap_or(&0);
    e.iter().rposition(|&v| v == max).expect("nonempty index")
}
