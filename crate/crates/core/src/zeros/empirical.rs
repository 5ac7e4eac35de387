use super::zeroset::ZeroSet;

/// Right-continuous step function with mass `1/N` at each sample.
#[derive(Clone, Debug, PartialEq)]
pub struct EmpiricalCDF {
    samples: Vec<f64>,
}

impl EmpiricalCDF {
    pub fn new(mut samples: Vec<f64>) -> Self {
        samples.sort_by(f64::total_cmp);
        EmpiricalCDF { samples }
    }

    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn eval(&self, x: f64) -> f64 {
        if self.samples.is_empty() {
            return 0.0;
        }
        let k = self.samples.partition_point(|s| *s <= x);
        k as f64 / self.samples.len() as f64
    }

    /// Empirical `m`-th moment.
    pub fn moment(&self, m: u32) -> f64 {
        if self.samples.is_empty() {
            return 0.0;
        }
        self.samples.iter().map(|s| s.powi(m as i32)).sum::<f64>() / self.samples.len() as f64
    }
}

/// Counting measure of the scaled zero midpoints.
pub fn empirical_cdf(z: &ZeroSet) -> EmpiricalCDF {
    EmpiricalCDF::new(z.scaled_f64())
}

/// `sup |E - F|`, attained at a jump of `E` from one side or the other.
pub fn ks_distance(e: &EmpiricalCDF, f: impl Fn(f64) -> f64) -> f64 {
    let n = e.samples.len();
    if n == 0 {
        return 0.0;
    }
    let nf = n as f64;
    let mut best = 0.0f64;
    let mut i = 0;
    while i < n {
        let x = e.samples[i];
        let mut j = i;
        while j < n && e.samples[j] == x {
            j += 1;
        }
        let fx = f(x);
        best = best.max((fx - i as f64 / nf).abs()).max((j as f64 / nf - fx).abs());
        i = j;
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn step_function() {
        let e = EmpiricalCDF::new(vec![0.75, 0.25]);
        assert_eq!(e.eval(0.0), 0.0);
        assert_eq!(e.eval(0.25), 0.5);
        assert_eq!(e.eval(0.5), 0.5);
        assert_eq!(e.eval(0.75), 1.0);
        let one = EmpiricalCDF::new(vec![3.0]);
        assert_eq!(one.eval(2.999), 0.0);
        assert_eq!(one.eval(3.0), 1.0);
    }

    #[test]
    fn ks_examples() {
        let f = |x: f64| x.clamp(0.0, 1.0);
        let n = 10;
        let q: Vec<f64> = (1..=n).map(|k| (k as f64 - 0.5) / n as f64).collect();
        let d = ks_distance(&EmpiricalCDF::new(q), f);
        assert!((d - 0.05).abs() < 1e-15);
        assert!((ks_distance(&EmpiricalCDF::new(vec![0.5]), f) - 0.5).abs() < 1e-15);
        // Ties are a single jump.
        assert!((ks_distance(&EmpiricalCDF::new(vec![0.5, 0.5]), f) - 0.5).abs() < 1e-15);
    }
}
