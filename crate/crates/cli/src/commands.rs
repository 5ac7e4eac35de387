use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use mopzeros::asymptotics::{c_r, density_by_name, limit_density, DensityKind, LimitDensity};
use mopzeros::exact::{format_rational, to_f64};
use mopzeros::recurrence::{
    build_surface, diagonal_constants, diagonal_surface, jp_limit_coeffs, ml_limit_coeffs, solve_z,
};
use mopzeros::zeros::{empirical_cdf, interlacing_check, isolate_zeros, ks_distance, ZeroSet};
use mopzeros::{BigComplex, BigFloat, ExactPolynomial, FamilyKind, MultiIndex, Rational};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::config::{format_complex, render_index, ExperimentConfig};
use crate::error::{CliError, CliResult};
use crate::experiment::{Experiment, DEFAULT_GRID};

/// Fixed 17-significant-digit formatting used in every CSV.
pub fn fmt_num(x: f64) -> String {
    format!("{x:.16e}")
}

/// Exact coefficients, ascending, one per line. Several indices are
/// separated by `# n = …` lines.
pub fn cmd_poly(config: &ExperimentConfig) -> CliResult<String> {
    let exp = Experiment::resolve(config)?;
    let indices = exp.require_indices()?;
    let mut out = String::new();
    for n in indices {
        let p = exp.family.build(&exp.params, n)?;
        if indices.len() > 1 {
            let _ = writeln!(out, "# n = {}", render_index(n));
        }
        for c in p.coeffs() {
            let _ = writeln!(out, "{}", format_rational(c));
        }
    }
    Ok(out)
}

fn zero_set(exp: &Experiment, n: &MultiIndex, p: &ExactPolynomial) -> CliResult<ZeroSet> {
    let z = isolate_zeros(p, exp.family.support(p))?.refine(exp.tol);
    Ok(z.with_scale(exp.family.zero_scale(exp.r, n), Some(n.clone())).with_bits(exp.bits))
}

/// CSV `index,k,midpoint,width,scaled`; `index` is the multi-index as `a:b`.
pub fn cmd_zeros(config: &ExperimentConfig) -> CliResult<String> {
    let exp = Experiment::resolve(config)?;
    let indices = exp.require_indices()?;
    let sets = indices
        .par_iter()
        .map(|n| {
            let p = exp.family.build(&exp.params, n)?;
            zero_set(&exp, n, &p)
        })
        .collect::<CliResult<Vec<_>>>()?;
    let mut out = String::from("index,k,midpoint,width,scaled\n");
    for (n, z) in indices.iter().zip(&sets) {
        let tag = render_index(n);
        for (k, ((m, w), s)) in z.midpoints_f64().iter().zip(z.widths_f64()).zip(z.scaled_f64()).enumerate() {
            let _ = writeln!(out, "{tag},{},{},{},{}", k + 1, fmt_num(*m), fmt_num(w), fmt_num(s));
        }
    }
    Ok(out)
}

fn require_kind(config: &ExperimentConfig) -> CliResult<DensityKind> {
    config.kind.ok_or_else(|| CliError::Validation("missing --kind (one of w, v, u, g, xg)".into()))
}

fn require_r(config: &ExperimentConfig) -> CliResult<usize> {
    let r = config
        .r
        .or_else(|| config.alpha.as_ref().map(Vec::len))
        .or_else(|| config.nu.as_ref().map(Vec::len))
        .ok_or_else(|| CliError::Validation("missing --r".into()))?;
    if r == 0 {
        return Err(CliError::Validation("r must be at least 1".into()));
    }
    Ok(r)
}

fn density_table(d: &dyn LimitDensity, r: usize, grid: usize, x_factor: f64, label: &str) -> CliResult<String> {
    let curve = d.curve(r, grid)?;
    let mut out = format!("# kind={label},r={r},c_r={}\nphi,x,density,cdf\n", fmt_num(c_r(r)));
    for s in &curve.samples {
        let _ = writeln!(
            out,
            "{},{},{},{}",
            fmt_num(s.phi),
            fmt_num(s.x / x_factor),
            fmt_num(s.density * x_factor),
            fmt_num(s.cdf)
        );
    }
    Ok(out)
}

/// CSV `phi,x,density,cdf` on a uniform angle grid, ascending in `x`,
/// after a `# kind=…,r=…,c_r=…` line.
pub fn cmd_density(config: &ExperimentConfig) -> CliResult<String> {
    let kind = require_kind(config)?;
    let r = require_r(config)?;
    let grid = config.grid.unwrap_or(DEFAULT_GRID);
    density_table(limit_density(kind), r, grid, 1.0, kind.name())
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MomentRecord {
    pub m: u32,
    pub empirical: f64,
    pub target: String,
    pub error: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RatioRecord {
    pub x0: String,
    pub k: usize,
    pub error: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IndexRecord {
    pub n: String,
    pub degree: usize,
    pub ks: f64,
    pub moments: Vec<MomentRecord>,
    pub interlacing_violation: Option<bool>,
    pub ratio: Vec<RatioRecord>,
    pub wall_time_s: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComparisonReport {
    pub schema: u32,
    pub config: String,
    pub family: String,
    pub r: usize,
    pub density: String,
    pub argument_factor: String,
    pub records: Vec<IndexRecord>,
    pub partial: bool,
    pub errors: Vec<String>,
    pub versions: BTreeMap<String, String>,
}

impl ComparisonReport {
    /// Pretty JSON with keys sorted at every level.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("report is serializable");
        serde_json::to_string_pretty(&value).expect("value is serializable") + "\n"
    }
}

const MOMENTS: u32 = 4;

fn eval_at(p: &ExactPolynomial, x: &BigComplex, bits: u32) -> BigComplex {
    p.eval_complex_bounded(x, bits).value
}

/// `|P_{n+e_k}(x0)/P_n(x0) - (z(x0) - b_k)|`, with the multiple Laguerre
/// ratio taken at `N x0` and divided by `N = |n|`.
fn ratio_records(exp: &Experiment, n: &MultiIndex, p: &ExactPolynomial) -> CliResult<Vec<RatioRecord>> {
    let kind = exp.family.kind();
    if exp.x0.is_empty() || kind == FamilyKind::MeijerG {
        return Ok(Vec::new());
    }
    let size = n.size();
    if size == 0 {
        return Ok(Vec::new());
    }
    let (surface, b) = if n.entries().iter().all(|&e| e == n.get(0)) {
        let (p0, _) = diagonal_constants(exp.r, kind)?;
        (diagonal_surface(exp.r, kind)?, vec![p0; exp.r])
    } else {
        let q: Vec<Rational> =
            n.entries().iter().map(|&e| Rational::new(e.into(), size.into())).collect();
        let limits = if kind == FamilyKind::JacobiPineiro { jp_limit_coeffs(&q)? } else { ml_limit_coeffs(&q)? };
        (build_surface(&limits)?, limits.b.clone())
    };
    let bits = exp.bits;
    let scale = if kind == FamilyKind::MultipleLaguerre { size as f64 } else { 1.0 };
    let mut out = Vec::new();
    let raised: Vec<ExactPolynomial> =
        (0..exp.r).map(|k| exp.family.build(&exp.params, &n.raised(k))).collect::<mopzeros::Result<_>>()?;
    for &x0 in &exp.x0 {
        let xb = BigComplex::from_c64(x0, bits);
        let z = solve_z(&xb, &surface)?.to_c64();
        let xe = BigComplex::from_c64(x0 * scale, bits);
        let base = eval_at(p, &xe, bits);
        if base.is_zero() {
            return Err(mopzeros::Error::EvaluationAtZero.into());
        }
        for (k, pk) in raised.iter().enumerate() {
            let ratio = (&eval_at(pk, &xe, bits) / &base).scale(&BigFloat::from_f64(1.0 / scale, bits)).to_c64();
            let want = z - to_f64(&b[k]);
            out.push(RatioRecord { x0: format_complex(x0), k: k + 1, error: (ratio - want).norm() });
        }
    }
    Ok(out)
}

fn index_record(exp: &Experiment, d: &dyn LimitDensity, factor_q: &Rational, n: &MultiIndex) -> CliResult<IndexRecord> {
    let start = Instant::now();
    let p = exp.family.build(&exp.params, n)?;
    let z = zero_set(exp, n, &p)?;
    let e = empirical_cdf(&z);
    let r = exp.r;
    let factor = to_f64(factor_q);
    let ks = ks_distance(&e, |y| d.cdf(r, factor * y).unwrap_or(f64::NAN));
    let moments = (1..=MOMENTS)
        .map(|m| {
            let target = d.moment_target(r, m) / num_traits::pow(factor_q.clone(), m as usize);
            let empirical = e.moment(m);
            MomentRecord { m, empirical, error: (empirical - to_f64(&target)).abs(), target: format_rational(&target) }
        })
        .collect();
    let interlacing_violation = if exp.interlacing {
        let next = n.raised(n.size() % r);
        let pn = exp.family.build(&exp.params, &next)?;
        let zn = isolate_zeros(&pn, exp.family.support(&pn))?;
        Some(!interlacing_check(&z, &zn)?)
    } else {
        None
    };
    let ratio = ratio_records(exp, n, &p)?;
    Ok(IndexRecord {
        n: render_index(n),
        degree: p.degree(),
        ks,
        moments,
        interlacing_violation,
        ratio,
        wall_time_s: exp.timing.then(|| start.elapsed().as_secs_f64()),
    })
}

pub fn versions() -> BTreeMap<String, String> {
    BTreeMap::from([
        ("mopzeros".to_string(), mopzeros::VERSION.to_string()),
        ("mopzeros-cli".to_string(), env!("CARGO_PKG_VERSION").to_string()),
    ])
}

/// Runs every index in parallel; failed indices are listed in `errors` and
/// mark the report partial.
pub fn compare(config: &ExperimentConfig) -> CliResult<ComparisonReport> {
    let exp = Experiment::resolve(config)?;
    let indices = exp.require_indices()?;
    let law = exp.family.limit_law(exp.r);
    let d = density_by_name(law.density)?;
    let results: Vec<CliResult<IndexRecord>> =
        indices.par_iter().map(|n| index_record(&exp, d, &law.argument_factor, n)).collect();
    let mut records = Vec::new();
    let mut errors = Vec::new();
    for (n, res) in indices.iter().zip(results) {
        match res {
            Ok(rec) => records.push(rec),
            Err(CliError::Validation(msg)) => return Err(CliError::Validation(msg)),
            Err(e) => errors.push(format!("{}: {e}", render_index(n))),
        }
    }
    Ok(ComparisonReport {
        schema: 1,
        config: exp.config.serialize(),
        family: exp.family.name().to_string(),
        r: exp.r,
        density: law.density.to_string(),
        argument_factor: format_rational(&law.argument_factor),
        partial: !errors.is_empty(),
        records,
        errors,
        versions: versions(),
    })
}

pub fn cmd_compare(config: &ExperimentConfig) -> CliResult<String> {
    let report = compare(config)?;
    if report.partial {
        return Err(CliError::Numerical(format!("partial report: {}\n{}", report.errors.join("; "), report.to_json())));
    }
    Ok(report.to_json())
}

/// Summary text plus figure tables: `v_r` on `[0,1]` and the density of
/// `x̂/r` under `u_r` on `[0, c_r/r]`, for `r = 1..5`.
pub struct Report {
    pub summary: String,
    pub tables: BTreeMap<String, String>,
}

pub fn cmd_report(config: &ExperimentConfig) -> CliResult<Report> {
    let grid = config.grid.unwrap_or(DEFAULT_GRID);
    let mut tables = BTreeMap::new();
    let mut summary = String::from("limit densities\n");
    for r in 1..=5usize {
        let cr = c_r(r);
        tables.insert(format!("v_r{r}.csv"), density_table(limit_density(DensityKind::V), r, grid, 1.0, "v")?);
        tables.insert(
            format!("u_scaled_r{r}.csv"),
            density_table(limit_density(DensityKind::U), r, grid, r as f64, "u/r")?,
        );
        let _ = writeln!(
            summary,
            "r={r} c_r={} v on [0, 1], scaled u on [0, {}]",
            fmt_num(cr),
            fmt_num(cr / r as f64)
        );
    }
    if config.family.is_some() && config.n.is_some() {
        let report = compare(config)?;
        let _ = writeln!(summary, "\ncomparison: {} r={} vs {}", report.family, report.r, report.density);
        let _ = writeln!(summary, "n,degree,ks,max_moment_error,interlacing_violation");
        for rec in &report.records {
            let worst = rec.moments.iter().map(|m| m.error).fold(0.0, f64::max);
            let flag = rec.interlacing_violation.map_or("-".to_string(), |b| b.to_string());
            let _ = writeln!(summary, "{},{},{},{},{flag}", rec.n, rec.degree, fmt_num(rec.ks), fmt_num(worst));
        }
        for e in &report.errors {
            let _ = writeln!(summary, "failed: {e}");
        }
        tables.insert("compare.json".into(), report.to_json());
    }
    Ok(Report { summary, tables })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(text: &str) -> ExperimentConfig {
        ExperimentConfig::parse(text).unwrap()
    }

    #[test]
    fn poly_examples() {
        assert_eq!(cmd_poly(&cfg("family = jp\nalpha = 0\nbeta = 0\nn = 2")).unwrap(), "1/6\n-1\n1\n");
        assert_eq!(cmd_poly(&cfg("family = ml\nalpha = 1/3\nn = 1")).unwrap(), "-4/3\n1\n");
        assert_eq!(cmd_poly(&cfg("family = ml\nalpha = 1/3\nn = 0")).unwrap(), "1\n");
        let err = cmd_poly(&cfg("family = jp\nalpha = 0,1\nn = 2")).unwrap_err();
        assert!(err.to_string().contains("alpha difference is an integer"), "{err}");
        assert_eq!(err.exit_code(), 2);
    }

    fn rows(csv: &str) -> Vec<Vec<f64>> {
        csv.lines()
            .filter(|l| !l.starts_with('#'))
            .skip(1)
            .map(|l| l.split(',').skip_while(|v| v.contains(':')).map(|v| v.parse().unwrap()).collect())
            .collect()
    }

    #[test]
    fn zeros_examples() {
        let out = cmd_zeros(&cfg("family = jp\nalpha = 0\nn = 2")).unwrap();
        let z = rows(&out);
        let s = 0.5 / 3f64.sqrt();
        assert_eq!(z.len(), 2);
        assert!((z[0][2] - (0.5 - s)).abs() < 1e-12 && (z[1][2] - (0.5 + s)).abs() < 1e-12);
        let out = cmd_zeros(&cfg("family = ml\nalpha = 0\nn = 2")).unwrap();
        let z = rows(&out);
        assert!((z[0][4] - (1.0 - 0.5f64.sqrt())).abs() < 1e-12 && (z[1][4] - (1.0 + 0.5f64.sqrt())).abs() < 1e-12);
    }

    fn nearest(table: &[Vec<f64>], x: f64) -> &Vec<f64> {
        table.iter().min_by(|a, b| (a[1] - x).abs().total_cmp(&(b[1] - x).abs())).unwrap()
    }

    #[test]
    fn density_examples() {
        use mopzeros::asymptotics::{arcsine_density, marchenko_pastur};
        let out = cmd_density(&cfg("kind = v\nr = 1")).unwrap();
        assert!(out.starts_with("# kind=v,r=1,c_r=4.0000000000000000e0\nphi,x,density,cdf\n"));
        let v = rows(&out);
        assert_eq!(v.len(), DEFAULT_GRID + 1);
        let row = nearest(&v, 0.5);
        assert!((row[1] - 0.5).abs() < 1e-3);
        assert!((row[2] - arcsine_density(row[1])).abs() < 1e-12 * row[2]);
        let out = cmd_density(&cfg("kind = u\nr = 1")).unwrap();
        let u = rows(&out);
        let row = nearest(&u, 2.0);
        assert!((row[2] - marchenko_pastur(row[1])).abs() < 1e-12 * row[2]);
        assert!((row[2] - 0.5 / std::f64::consts::PI).abs() < 1e-3);
        assert!((u.last().unwrap()[3] - 1.0).abs() < 1e-10);
    }

    #[test]
    fn compare_targets() {
        let report = compare(&cfg("family = jp\nalpha = 0\nn = 4")).unwrap();
        assert_eq!(report.records[0].moments[0].target, "1/2");
        let report = compare(&cfg("family = ml\nalpha = 0\nn = 4")).unwrap();
        assert_eq!(report.records[0].moments[0].target, "1");
        assert_eq!(report.density, "u");
    }
}
