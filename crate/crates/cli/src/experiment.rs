use mopzeros::families::{family, Family};
use mopzeros::{FamilyKind, FamilyParams, MultiIndex, Rational};
use num_complex::Complex64;

use crate::config::{render_index, ExperimentConfig, IndexSpec};
use crate::error::{CliError, CliResult};

pub const DEFAULT_BITS: u32 = 128;
pub const DEFAULT_GRID: usize = 2048;
pub const DEFAULT_TOL: f64 = 1e-12;

/// A config resolved against the family registry, with defaults applied.
pub struct Experiment {
    pub config: ExperimentConfig,
    pub family: &'static dyn Family,
    pub params: FamilyParams,
    pub r: usize,
    pub indices: Vec<MultiIndex>,
    pub bits: u32,
    pub tol: f64,
    pub x0: Vec<Complex64>,
    pub interlacing: bool,
    pub timing: bool,
}

fn missing(what: &str) -> CliError {
    CliError::Validation(format!("missing {what}"))
}

impl Experiment {
    pub fn resolve(config: &ExperimentConfig) -> CliResult<Self> {
        let name = config.family.as_deref().ok_or_else(|| missing("--family"))?;
        let family = family(name)?;
        let params = match family.kind() {
            FamilyKind::JacobiPineiro => {
                let alpha = config.alpha.clone().ok_or_else(|| missing("--alpha"))?;
                let beta = config.beta.clone().unwrap_or_else(|| Rational::from_integer(0.into()));
                FamilyParams::jacobi_pineiro(alpha, beta)?
            }
            FamilyKind::MultipleLaguerre => {
                if config.beta.is_some() {
                    return Err(CliError::Validation("beta does not apply to multiple-laguerre".into()));
                }
                FamilyParams::multiple_laguerre(config.alpha.clone().ok_or_else(|| missing("--alpha"))?)?
            }
            FamilyKind::MeijerG => {
                if config.alpha.is_some() || config.beta.is_some() {
                    return Err(CliError::Validation("meijer-g takes --nu, not --alpha/--beta".into()));
                }
                FamilyParams::meijer_g(config.nu.clone().ok_or_else(|| missing("--nu"))?)?
            }
        };
        let r = params.r();
        if let Some(given) = config.r {
            if given != r {
                return Err(CliError::Validation(format!("--r {given} does not match {r} parameters")));
            }
        }
        let indices = config
            .n
            .clone()
            .unwrap_or_default()
            .into_iter()
            .map(|spec| match spec {
                IndexSpec::Size(n) => Ok(family.sequence_index(r, n)),
                IndexSpec::Explicit(m) if m.r() == r => Ok(m),
                IndexSpec::Explicit(m) => Err(CliError::Validation(format!(
                    "multi-index {} has {} entries, expected {r}",
                    render_index(&m),
                    m.r()
                ))),
            })
            .collect::<CliResult<Vec<_>>>()?;
        let default_x0 = match family.kind() {
            FamilyKind::JacobiPineiro => vec![Complex64::new(-1.0, 0.0), Complex64::new(0.5, 1.0)],
            FamilyKind::MultipleLaguerre => vec![Complex64::new(-1.0, 0.0)],
            FamilyKind::MeijerG => Vec::new(),
        };
        let tol = config.tol.unwrap_or(DEFAULT_TOL);
        if !(tol > 0.0) {
            return Err(CliError::Validation("--tol must be positive".into()));
        }
        Ok(Experiment {
            config: config.clone(),
            family,
            params,
            r,
            indices,
            bits: config.bits.unwrap_or(DEFAULT_BITS).max(53),
            tol,
            x0: config.x0.clone().unwrap_or(default_x0),
            interlacing: config.interlacing.unwrap_or(true),
            timing: config.timing.unwrap_or(false),
        })
    }

    pub fn require_indices(&self) -> CliResult<&[MultiIndex]> {
        if self.indices.is_empty() {
            return Err(missing("--n"));
        }
        Ok(&self.indices)
    }
}
