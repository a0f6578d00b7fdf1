use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Prefix of environment variables that override config keys. Nested keys
/// are joined with a double underscore: `TFNS_INITIAL_DATA__SEED=7`.
pub const ENV_PREFIX: &str = "TFNS_";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Experiment {
    Simulate,
    LimitCheck,
    Uniqueness,
    Estimates,
    GronwallCheck,
    Specfun,
    Fracops,
}

impl Experiment {
    pub fn name(self) -> &'static str {
        match self {
            Experiment::Simulate => "simulate",
            Experiment::LimitCheck => "limit-check",
            Experiment::Uniqueness => "uniqueness",
            Experiment::Estimates => "estimates",
            Experiment::GronwallCheck => "gronwall-check",
            Experiment::Specfun => "specfun",
            Experiment::Fracops => "fracops",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum InitialData {
    TaylorGreen {
        #[serde(default = "one")]
        amplitude: f64,
        #[serde(default = "half")]
        perturbation: f64,
    },
    RandomBandlimited {
        #[serde(default)]
        seed: u64,
        #[serde(default = "four")]
        band: usize,
        #[serde(default = "one")]
        l2_norm: f64,
    },
    File {
        path: PathBuf,
    },
}

fn one() -> f64 {
    1.0
}
fn half() -> f64 {
    0.5
}
fn four() -> usize {
    4
}

impl Default for InitialData {
    fn default() -> Self {
        InitialData::TaylorGreen { amplitude: 1.0, perturbation: 0.5 }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Tolerances {
    pub picard_tol: f64,
    pub picard_max_iters: usize,
    pub ml_abs_tol: f64,
    pub ml_cutoff: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { picard_tol: 1e-12, picard_max_iters: 200, ml_abs_tol: 1e-12, ml_cutoff: 40.0 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpecialFunction {
    MittagLeffler,
    Mainardi,
    Gamma,
    MainardiMoment,
}

/// Parameters of the `specfun` experiment; every combination of the lists
/// is evaluated. For Mainardi `z` is θ; for the moment it is r.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SpecfunSection {
    pub function: SpecialFunction,
    pub alphas: Vec<f64>,
    pub betas: Vec<f64>,
    pub z: Vec<f64>,
}

impl Default for SpecfunSection {
    fn default() -> Self {
        SpecfunSection {
            function: SpecialFunction::MittagLeffler,
            alphas: vec![0.5],
            betas: vec![1.0],
            z: vec![0.0, -1.0, -10.0],
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FracOperator {
    Caputo,
    RiemannLiouville,
}

/// Parameters of the `fracops` experiment. The input CSV has a header and
/// columns `t,value` on a uniform grid starting at t = 0.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct FracopsSection {
    pub operator: FracOperator,
    pub input: Option<PathBuf>,
}

impl Default for FracopsSection {
    fn default() -> Self {
        FracopsSection { operator: FracOperator::Caputo, input: None }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct LimitCheckSection {
    pub alphas: Vec<f64>,
}

impl Default for LimitCheckSection {
    fn default() -> Self {
        LimitCheckSection { alphas: vec![0.9, 0.99, 0.999, 1.0] }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct EstimatesSection {
    pub ensemble: usize,
    pub band: usize,
    pub p: f64,
    pub q: f64,
    pub power_samples: usize,
    pub seed: u64,
}

impl Default for EstimatesSection {
    fn default() -> Self {
        EstimatesSection { ensemble: 20, band: 4, p: 1.5, q: 2.0, power_samples: 10_000, seed: 0 }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct GronwallSection {
    /// Relative size of the perturbation between the two compared runs.
    pub delta: f64,
}

impl Default for GronwallSection {
    fn default() -> Self {
        GronwallSection { delta: 1e-3 }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ExperimentConfig {
    pub experiment: Option<Experiment>,
    pub alpha: f64,
    pub dim: usize,
    pub resolution: usize,
    pub t_end: f64,
    pub steps: usize,
    pub initial_data: InitialData,
    pub tolerances: Tolerances,
    pub output_dir: PathBuf,
    /// Write a binary snapshot every this many steps (0: final field only).
    pub snapshot_every: usize,
    pub specfun: SpecfunSection,
    pub fracops: FracopsSection,
    pub limit_check: LimitCheckSection,
    pub estimates: EstimatesSection,
    pub gronwall: GronwallSection,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig {
            experiment: None,
            alpha: 0.6,
            dim: 2,
            resolution: 32,
            t_end: 0.5,
            steps: 128,
            initial_data: InitialData::default(),
            tolerances: Tolerances::default(),
            output_dir: PathBuf::from("output"),
            snapshot_every: 0,
            specfun: SpecfunSection::default(),
            fracops: FracopsSection::default(),
            limit_check: LimitCheckSection::default(),
            estimates: EstimatesSection::default(),
            gronwall: GronwallSection::default(),
        }
    }
}

fn config_err(key: &str, message: impl Into<String>) -> Error {
    Error::Config { key: key.to_string(), message: message.into() }
}

/// Parses an override value as a TOML scalar or array, falling back to a string.
fn parse_env_value(raw: &str) -> toml::Value {
    let doc = format!("v = {raw}");
    match doc.parse::<toml::Table>() {
        Ok(mut t) => t.remove("v").unwrap_or_else(|| toml::Value::String(raw.into())),
        Err(_) => toml::Value::String(raw.into()),
    }
}

fn apply_override(table: &mut toml::Table, path: &[String], value: toml::Value) {
    let (last, parents) = path.split_last().expect("non-empty key path");
    let mut cur = table;
    for p in parents {
        let entry = cur.entry(p.clone()).or_insert_with(|| toml::Value::Table(toml::Table::new()));
        if !entry.is_table() {
            *entry = toml::Value::Table(toml::Table::new());
        }
        cur = entry.as_table_mut().expect("just made a table");
    }
    cur.insert(last.clone(), value);
}

impl ExperimentConfig {
    /// Parses TOML text and applies overrides given as (KEY, value) pairs with
    /// the prefix already stripped.
    pub fn from_toml_with_overrides(text: &str, overrides: &BTreeMap<String, String>) -> Result<Self> {
        let mut table: toml::Table = text.parse().map_err(|e: toml::de::Error| config_err("<file>", e.message()))?;
        for (k, v) in overrides {
            let path: Vec<String> = k.to_ascii_lowercase().split("__").map(str::to_string).collect();
            if path.iter().any(String::is_empty) {
                return Err(config_err(k, "malformed override key"));
            }
            apply_override(&mut table, &path, parse_env_value(v));
        }
        let cfg: ExperimentConfig = toml::Value::Table(table).try_into().map_err(|e: toml::de::Error| {
            let msg = e.message().to_string();
            let key = msg
                .split('`')
                .nth(1)
                .map(str::to_string)
                .unwrap_or_else(|| "<file>".into());
            config_err(&key, msg)
        })?;
        cfg.validate()?;
        Ok(cfg)
    }

    /// Reads a config file (or defaults when `path` is None) and applies
    /// `TFNS_*` environment overrides.
    pub fn load(path: Option<&Path>) -> Result<(Self, String)> {
        let text = match path {
            Some(p) => std::fs::read_to_string(p).map_err(|e| config_err("--config", format!("{}: {e}", p.display())))?,
            None => String::new(),
        };
        let overrides: BTreeMap<String, String> = std::env::vars()
            .filter_map(|(k, v)| k.strip_prefix(ENV_PREFIX).map(|s| (s.to_string(), v)))
            .collect();
        Ok((Self::from_toml_with_overrides(&text, &overrides)?, text))
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.alpha > 0.0 && self.alpha <= 1.0) {
            return Err(config_err("alpha", format!("must lie in (0, 1], got {}", self.alpha)));
        }
        if !(1..=3).contains(&self.dim) {
            return Err(config_err("dim", format!("must be 1, 2 or 3, got {}", self.dim)));
        }
        if self.resolution < 4 || self.resolution % 2 != 0 {
            return Err(config_err("resolution", format!("must be even and ≥ 4, got {}", self.resolution)));
        }
        if !(self.t_end > 0.0 && self.t_end.is_finite()) {
            return Err(config_err("t_end", format!("must be positive, got {}", self.t_end)));
        }
        if self.steps < 1 {
            return Err(config_err("steps", "must be at least 1"));
        }
        let t = &self.tolerances;
        if !(t.picard_tol > 0.0) {
            return Err(config_err("tolerances.picard_tol", "must be positive"));
        }
        if t.picard_max_iters < 1 {
            return Err(config_err("tolerances.picard_max_iters", "must be at least 1"));
        }
        if !(t.ml_abs_tol > 0.0) {
            return Err(config_err("tolerances.ml_abs_tol", "must be positive"));
        }
        if !(t.ml_cutoff > 0.0) {
            return Err(config_err("tolerances.ml_cutoff", "must be positive"));
        }
        if let InitialData::RandomBandlimited { band, l2_norm, .. } = &self.initial_data {
            if *band < 1 || *band > (self.resolution - 1) / 3 {
                return Err(config_err(
                    "initial_data.band",
                    format!("must lie in 1..={} for resolution {}", (self.resolution - 1) / 3, self.resolution),
                ));
            }
            if !(*l2_norm >= 0.0) {
                return Err(config_err("initial_data.l2_norm", "must be non-negative"));
            }
        }
        if self.limit_check.alphas.iter().any(|&a| !(a > 0.0 && a <= 1.0)) {
            return Err(config_err("limit_check.alphas", "entries must lie in (0, 1]"));
        }
        let e = &self.estimates;
        if e.ensemble < 1 {
            return Err(config_err("estimates.ensemble", "must be at least 1"));
        }
        if e.band < 1 || e.band > (self.resolution - 1) / 3 {
            return Err(config_err("estimates.band", "outside the dealiased band"));
        }
        if !(e.q >= 1.0) {
            return Err(config_err("estimates.q", "must be ≥ 1"));
        }
        if !(self.gronwall.delta > 0.0) {
            return Err(config_err("gronwall.delta", "must be positive"));
        }
        Ok(())
    }

    pub fn to_toml(&self) -> String {
        toml::to_string_pretty(self).expect("config serializes")
    }
}
