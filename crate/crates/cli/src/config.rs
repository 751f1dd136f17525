//! Run configuration: command defaults, an optional TOML file, then flags.

use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use qudit_cost::scan::DimRange;
use qudit_cost::SynthesisModel;
use serde::{Deserialize, Serialize};

/// Names the default config file when `--config` is not given.
pub const CONFIG_ENV: &str = "QUDIT_COST_CONFIG";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

/// Contents of a config file; every key is optional.
#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub phi_max: Option<f64>,
    #[serde(alias = "eps_sim")]
    pub eps: Option<f64>,
    pub t: Option<f64>,
    pub d_min: Option<usize>,
    pub d_max: Option<usize>,
    pub prime_only: Option<bool>,
    pub k: Option<u32>,
    pub format: Option<Format>,
    pub rz_slope: Option<f64>,
    pub rz_intercept: Option<f64>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("cannot read config file {}", path.display()))?;
        toml::from_str(&text).with_context(|| format!("invalid config file {}", path.display()))
    }
}

/// Flag values from the command line; `None` means "not given".
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub config: Option<PathBuf>,
    pub phi_max: Option<f64>,
    pub eps: Option<f64>,
    pub t: Option<f64>,
    pub d_min: Option<usize>,
    pub d_max: Option<usize>,
    pub prime_only: Option<bool>,
    pub k: Option<u32>,
    pub format: Option<Format>,
}

/// Fully resolved settings for one command.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunConfig {
    pub phi_max: f64,
    pub eps: f64,
    pub t: f64,
    pub d_min: usize,
    pub d_max: usize,
    pub prime_only: bool,
    pub k: u32,
    pub format: Format,
    pub synthesis: SynthesisModel,
}

impl RunConfig {
    pub fn resolve(defaults: RunConfig, file: Option<&FileConfig>, flags: &Overrides) -> Result<Self> {
        let file = file.cloned().unwrap_or_default();
        let mut synthesis = defaults.synthesis;
        synthesis.rz_slope = file.rz_slope.unwrap_or(synthesis.rz_slope);
        synthesis.rz_intercept = file.rz_intercept.unwrap_or(synthesis.rz_intercept);
        let cfg = RunConfig {
            phi_max: flags.phi_max.or(file.phi_max).unwrap_or(defaults.phi_max),
            eps: flags.eps.or(file.eps).unwrap_or(defaults.eps),
            t: flags.t.or(file.t).unwrap_or(defaults.t),
            d_min: flags.d_min.or(file.d_min).unwrap_or(defaults.d_min),
            d_max: flags.d_max.or(file.d_max).unwrap_or(defaults.d_max),
            prime_only: flags.prime_only.or(file.prime_only).unwrap_or(defaults.prime_only),
            k: flags.k.or(file.k).unwrap_or(defaults.k),
            format: flags.format.or(file.format).unwrap_or(defaults.format),
            synthesis,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    /// Reads the file named by `--config`, else by the environment variable.
    pub fn load(defaults: RunConfig, flags: &Overrides) -> Result<Self> {
        let path = flags
            .config
            .clone()
            .or_else(|| std::env::var_os(CONFIG_ENV).map(PathBuf::from));
        let file = path.as_deref().map(FileConfig::load).transpose()?;
        Self::resolve(defaults, file.as_ref(), flags)
    }

    fn validate(&self) -> Result<()> {
        if !(self.phi_max.is_finite() && self.phi_max > 0.0) {
            bail!("phi_max must be positive, got {}", self.phi_max);
        }
        if !(self.eps > 0.0 && self.eps < 1.0) {
            bail!("eps must lie in (0, 1), got {}", self.eps);
        }
        if !(self.t.is_finite() && self.t >= 0.0) {
            bail!("t must be nonnegative, got {}", self.t);
        }
        if self.k == 0 {
            bail!("k must be at least 1");
        }
        self.synthesis.validated()?;
        self.dims()?;
        Ok(())
    }

    pub fn dims(&self) -> Result<Vec<usize>> {
        Ok(DimRange::new(self.d_min, self.d_max, self.prime_only).dims()?)
    }

    pub fn primes(d_max: usize) -> Self {
        Self {
            phi_max: 1.0,
            eps: 1e-6,
            t: 0.1,
            d_min: 3,
            d_max,
            prime_only: true,
            k: qudit_cost::endtoend::DEFAULT_SWITCHES,
            format: Format::Csv,
            synthesis: SynthesisModel::default(),
        }
    }

    pub fn all_odd(d_max: usize) -> Self {
        Self {
            prime_only: false,
            ..Self::primes(d_max)
        }
    }
}
