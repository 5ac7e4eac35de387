use std::fmt;

use crate::{Error, Result};

/// Multi-index `n = (n_1, …, n_r)` with size `|n| = n_1 + … + n_r`.
///
/// Directions are 0-based in the API (`e(0)` raises the first entry).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex(Vec<usize>);

impl MultiIndex {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidParams("multi-index needs at least one entry".into()));
        }
        Ok(MultiIndex(entries))
    }

    pub fn zeros(r: usize) -> Self {
        MultiIndex(vec![0; r.max(1)])
    }

    /// `(n, n, …, n)` with `r` entries.
    pub fn diagonal(n: usize, r: usize) -> Self {
        MultiIndex(vec![n; r.max(1)])
    }

    /// The stepline index of size `size`: entries filled cyclically,
    /// `(1,0,…) → (1,1,0,…) → … → (1,…,1) → (2,1,…)`.
    pub fn stepline(size: usize, r: usize) -> Self {
        let r = r.max(1);
        MultiIndex((0..r).map(|j| size / r + usize::from(j < size % r)).collect())
    }

    pub fn r(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn get(&self, j: usize) -> usize {
        self.0[j]
    }

    /// `n + e_j`.
    pub fn raised(&self, j: usize) -> Self {
        let mut v = self.0.clone();
        v[j] += 1;
        MultiIndex(v)
    }

    /// `n - e_j`, or `None` when `n_j = 0`.
    pub fn lowered(&self, j: usize) -> Option<Self> {
        if self.0[j] == 0 {
            return None;
        }
        let mut v = self.0.clone();
        v[j] -= 1;
        Some(MultiIndex(v))
    }

    /// Every multi-index with `r` entries and size at most `max_size`,
    /// in graded lexicographic order.
    pub fn all_up_to(r: usize, max_size: usize) -> Vec<MultiIndex> {
        let mut out = Vec::new();
        for size in 0..=max_size {
            let mut cur = vec![0; r];
            compositions(size, 0, &mut cur, &mut out);
        }
        out
    }

    /// Canonical construction path: direction 0 repeated `n_1` times, then
    /// direction 1 `n_2` times, and so on.
    pub fn canonical_path(&self) -> Vec<usize> {
        self.0.iter().enumerate().flat_map(|(j, &nj)| std::iter::repeat_n(j, nj)).collect()
    }

    /// Path that raises the entries cyclically (the stepline order), reaching
    /// this index whenever it lies on the stepline and otherwise finishing the
    /// remaining steps in canonical order.
    pub fn cyclic_path(&self) -> Vec<usize> {
        let mut remaining = self.0.clone();
        let mut path = Vec::with_capacity(self.size());
        loop {
            let mut moved = false;
            for (j, rem) in remaining.iter_mut().enumerate() {
                if *rem > 0 {
                    *rem -= 1;
                    path.push(j);
                    moved = true;
                }
            }
            if !moved {
                break;
            }
        }
        path
    }
}

fn compositions(rest: usize, pos: usize, cur: &mut Vec<usize>, out: &mut Vec<MultiIndex>) {
    if pos + 1 == cur.len() {
        cur[pos] = rest;
        out.push(MultiIndex(cur.clone()));
        return;
    }
    for k in (0..=rest).rev() {
        cur[pos] = k;
        compositions(rest - k, pos + 1, cur, out);
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}
