use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::config::{Experiment, ExperimentConfig};
use crate::error::{Error, Result};

/// Run record written next to every set of artifacts.
#[derive(Debug, Serialize, Deserialize)]
pub struct Manifest {
    pub experiment: String,
    pub version: String,
    pub wall_time_seconds: f64,
    pub artifacts: Vec<String>,
    /// Effective configuration after defaults and environment overrides.
    pub config: ExperimentConfig,
}

impl Manifest {
    pub fn new(experiment: Experiment, cfg: &ExperimentConfig, wall: f64, files: &[PathBuf], dir: &Path) -> Self {
        Manifest {
            experiment: experiment.name().to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            wall_time_seconds: wall,
            artifacts: files
                .iter()
                .map(|f| f.strip_prefix(dir).unwrap_or(f).display().to_string())
                .collect(),
            config: cfg.clone(),
        }
    }

    pub fn to_toml(&self) -> String {
        toml::to_string_pretty(self).expect("manifest serializes")
    }

    pub fn from_toml(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Format(e.to_string()))
    }
}
