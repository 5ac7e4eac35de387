use std::fmt::Write as _;

use mopzeros::asymptotics::DensityKind;
use mopzeros::exact::{format_rational, parse_rational};
use mopzeros::{MultiIndex, Rational};
use num_complex::Complex64;

use crate::error::{CliError, CliResult};

/// One entry of the index list: a diagonal (or stepline) size, or an
/// explicit multi-index written `3:2` (`3:` when it has one entry).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IndexSpec {
    Size(usize),
    Explicit(MultiIndex),
}

impl IndexSpec {
    fn parse(text: &str) -> CliResult<Self> {
        let t = text.trim();
        let bad = || CliError::Validation(format!("bad index '{t}' (expected a size like 10 or a multi-index like 3:2)"));
        if t.contains(':') {
            let entries = t.strip_suffix(':').unwrap_or(t).split(':').map(|e| e.trim().parse::<usize>().map_err(|_| bad())).collect::<CliResult<Vec<_>>>()?;
            Ok(IndexSpec::Explicit(MultiIndex::new(entries)?))
        } else {
            Ok(IndexSpec::Size(t.parse().map_err(|_| bad())?))
        }
    }

    fn render(&self) -> String {
        match self {
            IndexSpec::Size(n) => n.to_string(),
            IndexSpec::Explicit(m) if m.r() == 1 => format!("{}:", m.get(0)),
            IndexSpec::Explicit(m) => render_index(m),
        }
    }
}

/// `3:2` form of a multi-index, safe inside CSV fields.
pub fn render_index(m: &MultiIndex) -> String {
    m.entries().iter().map(ToString::to_string).collect::<Vec<_>>().join(":")
}

/// Everything an experiment needs. Unset keys fall back to defaults when the
/// experiment is resolved, so the canonical text only lists what was given.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ExperimentConfig {
    pub family: Option<String>,
    pub r: Option<usize>,
    pub alpha: Option<Vec<Rational>>,
    pub beta: Option<Rational>,
    pub nu: Option<Vec<u32>>,
    pub n: Option<Vec<IndexSpec>>,
    pub kind: Option<DensityKind>,
    pub out: Option<String>,
    pub bits: Option<u32>,
    pub grid: Option<usize>,
    pub tol: Option<f64>,
    pub x0: Option<Vec<Complex64>>,
    pub interlacing: Option<bool>,
    pub timing: Option<bool>,
}

/// Keys in canonical order.
pub const KEYS: [&str; 14] =
    ["family", "r", "alpha", "beta", "nu", "n", "kind", "out", "bits", "grid", "tol", "x0", "interlacing", "timing"];

fn list<T>(v: &str, f: impl Fn(&str) -> CliResult<T>) -> CliResult<Vec<T>> {
    v.split(',').filter(|s| !s.trim().is_empty()).map(|s| f(s.trim())).collect()
}

fn number<T: std::str::FromStr>(key: &str, v: &str) -> CliResult<T> {
    v.trim().parse().map_err(|_| CliError::Validation(format!("{key}: cannot parse '{}'", v.trim())))
}

/// `-1`, `0.5+1i`, `2-0.25i`, `3i`.
pub fn parse_complex(text: &str) -> CliResult<Complex64> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || CliError::Validation(format!("cannot parse '{text}' as a complex number"));
    let Some(body) = t.strip_suffix('i') else {
        return Ok(Complex64::new(t.parse().map_err(|_| bad())?, 0.0));
    };
    // Split at the last sign that is not part of an exponent.
    let bytes = body.as_bytes();
    let split = (1..bytes.len()).rev().find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        s => s.parse().map_err(|_| bad())?,
    };
    Ok(Complex64::new(re.parse().map_err(|_| bad())?, im))
}

pub fn format_complex(z: Complex64) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else if z.re == 0.0 {
        format!("{}i", z.im)
    } else {
        format!("{}{:+}i", z.re, z.im)
    }
}

impl ExperimentConfig {
    /// Parses `key = value` lines; `#` starts a comment.
    pub fn parse(text: &str) -> CliResult<Self> {
        let mut cfg = ExperimentConfig::default();
        let mut seen = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| CliError::Validation(format!("line {}: expected 'key = value'", lineno + 1)))?;
            let k = k.trim();
            if seen.contains(&k.to_string()) {
                return Err(CliError::Validation(format!("line {}: duplicate key '{k}'", lineno + 1)));
            }
            seen.push(k.to_string());
            cfg.set(k, v.trim())?;
        }
        Ok(cfg)
    }

    pub fn set(&mut self, key: &str, v: &str) -> CliResult<()> {
        match key {
            "family" => self.family = Some(v.trim().to_string()),
            "r" => self.r = Some(number(key, v)?),
            "alpha" => self.alpha = Some(list(v, |s| Ok(parse_rational(s)?))?),
            "beta" => self.beta = Some(parse_rational(v)?),
            "nu" => self.nu = Some(list(v, |s| number("nu", s))?),
            "n" => self.n = Some(list(v, IndexSpec::parse)?),
            "kind" => self.kind = Some(v.parse()?),
            "out" => self.out = Some(v.trim().to_string()),
            "bits" => self.bits = Some(number(key, v)?),
            "grid" => self.grid = Some(number(key, v)?),
            "tol" => self.tol = Some(number(key, v)?),
            "x0" => self.x0 = Some(list(v, parse_complex)?),
            "interlacing" => self.interlacing = Some(number(key, v)?),
            "timing" => self.timing = Some(number(key, v)?),
            _ => return Err(CliError::Validation(format!("unknown config key '{key}'"))),
        }
        Ok(())
    }

    fn value(&self, key: &str) -> Option<String> {
        let join = |v: Vec<String>| v.join(",");
        match key {
            "family" => self.family.clone(),
            "r" => self.r.map(|r| r.to_string()),
            "alpha" => self.alpha.as_ref().map(|a| join(a.iter().map(format_rational).collect())),
            "beta" => self.beta.as_ref().map(format_rational),
            "nu" => self.nu.as_ref().map(|a| join(a.iter().map(ToString::to_string).collect())),
            "n" => self.n.as_ref().map(|a| join(a.iter().map(IndexSpec::render).collect())),
            "kind" => self.kind.map(|k| k.to_string()),
            "out" => self.out.clone(),
            "bits" => self.bits.map(|b| b.to_string()),
            "grid" => self.grid.map(|g| g.to_string()),
            "tol" => self.tol.map(|t| format!("{t:e}")),
            "x0" => self.x0.as_ref().map(|a| join(a.iter().map(|z| format_complex(*z)).collect())),
            "interlacing" => self.interlacing.map(|b| b.to_string()),
            "timing" => self.timing.map(|b| b.to_string()),
            _ => None,
        }
    }

    /// Canonical text: set keys only, fixed order, normalized values.
    pub fn serialize(&self) -> String {
        let mut s = String::new();
        for key in KEYS {
            if let Some(v) = self.value(key) {
                let _ = writeln!(s, "{key} = {v}");
            }
        }
        s
    }

    /// Keys set in `other` replace ours.
    pub fn overlay(&self, other: &ExperimentConfig) -> ExperimentConfig {
        macro_rules! pick {
            ($($f:ident),*) => { ExperimentConfig { $($f: other.$f.clone().or_else(|| self.$f.clone()),)* } };
        }
        pick!(family, r, alpha, beta, nu, n, kind, out, bits, grid, tol, x0, interlacing, timing)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let text = "# experiment\nalpha = 0, 2/4\nfamily = jp\n\nn = 5,10, 3:2\nbeta=0.25\ntol = 0.000001\nx0 = -1, 0.5+1i\n";
        let cfg = ExperimentConfig::parse(text).unwrap();
        assert_eq!(
            cfg.serialize(),
            "family = jp\nalpha = 0,1/2\nbeta = 1/4\nn = 5,10,3:2\ntol = 1e-6\nx0 = -1,0.5+1i\n"
        );
        assert_eq!(ExperimentConfig::parse(&cfg.serialize()).unwrap(), cfg);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(ExperimentConfig::parse("colour = red").is_err());
        assert!(ExperimentConfig::parse("r = 2\nr = 3").is_err());
        assert!(ExperimentConfig::parse("r 2").is_err());
        assert!(ExperimentConfig::parse("kind = q").is_err());
        assert!(ExperimentConfig::parse("n = 3:x").is_err());
        assert!(ExperimentConfig::parse("n = 3::").is_err());
        assert_eq!(ExperimentConfig::parse("n = 7:").unwrap().serialize(), "n = 7:\n");
    }

    #[test]
    fn complex_numbers() {
        assert_eq!(parse_complex("-1").unwrap(), Complex64::new(-1.0, 0.0));
        assert_eq!(parse_complex("0.5+1i").unwrap(), Complex64::new(0.5, 1.0));
        assert_eq!(parse_complex("2 - 0.25i").unwrap(), Complex64::new(2.0, -0.25));
        assert_eq!(parse_complex("-3i").unwrap(), Complex64::new(0.0, -3.0));
        assert_eq!(parse_complex("1e-3+2e+1i").unwrap(), Complex64::new(1e-3, 20.0));
        assert_eq!(parse_complex("i").unwrap(), Complex64::new(0.0, 1.0));
        assert!(parse_complex("1+").is_err());
        for z in [Complex64::new(0.5, -1.0), Complex64::new(0.0, 2.0), Complex64::new(-1.0, 0.0)] {
            assert_eq!(parse_complex(&format_complex(z)).unwrap(), z);
        }
    }

    #[test]
    fn file_overrides_flags() {
        let flags = ExperimentConfig::parse("family = ml\nr = 2\nbits = 64").unwrap();
        let file = ExperimentConfig::parse("family = jp\ntol = 1e-9").unwrap();
        let merged = flags.overlay(&file);
        assert_eq!(merged.family.as_deref(), Some("jp"));
        assert_eq!(merged.bits, Some(64));
        assert_eq!(merged.tol, Some(1e-9));
    }
}
