//! Experiment configuration: JSON files and the built-in presets, resolved
//! into one validated [`Case`].

use std::path::{Path, PathBuf};

use serde::Deserialize;

use reject_lab::bayes_rule::{CostMatrix, Policy, RejectThresholds};
use reject_lab::distributions::{ClassModel, ClassPrior, GaussianClassModel, UniformClassModel};
use reject_lab::presets;

use crate::failure::Failure;

pub const DEFAULT_SEED: u64 = 2011;

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    #[serde(default)]
    pub name: Option<String>,
    pub model: ModelSpec,
    pub policy: PolicySpec,
    #[serde(default)]
    pub reject_option: bool,
    /// Prior ratios `p(t1)/p(t2)` for `sweep`.
    #[serde(default)]
    pub ratios: Option<Vec<f64>>,
    #[serde(default)]
    pub oracle: OracleSpec,
    #[serde(default)]
    pub output: OutputSpec,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase", deny_unknown_fields)]
pub enum ModelSpec {
    Gaussian {
        priors: [f64; 2],
        mu1: f64,
        sigma1: f64,
        mu2: f64,
        sigma2: f64,
    },
    Uniform {
        priors: [f64; 2],
        a1: f64,
        b1: f64,
        a2: f64,
        b2: f64,
    },
}

/// Exactly one of `{"costs": [[..3], [..3]]}`, `{"thresholds": [tr1, tr2]}`
/// or `"mi"`.
#[derive(Debug, Clone, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PolicySpec {
    Costs([[f64; 3]; 2]),
    Thresholds([f64; 2]),
    Mi,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OracleSpec {
    #[serde(default)]
    pub enabled: bool,
    pub n: Option<u64>,
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputSpec {
    pub format: Option<String>,
    pub path: Option<PathBuf>,
}

impl ModelSpec {
    fn build(&self) -> Result<ClassModel, Failure> {
        let model = match *self {
            ModelSpec::Gaussian {
                priors: [p1, p2],
                mu1,
                sigma1,
                mu2,
                sigma2,
            } => {
                GaussianClassModel::new(ClassPrior::new(p1, p2)?, mu1, sigma1, mu2, sigma2)?.into()
            }
            ModelSpec::Uniform {
                priors: [p1, p2],
                a1,
                b1,
                a2,
                b2,
            } => UniformClassModel::new(ClassPrior::new(p1, p2)?, a1, b1, a2, b2)?.into(),
        };
        Ok(model)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Mode {
    Bayes,
    Mi,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Bayes => "bayes",
            Mode::Mi => "mi",
        }
    }
}

/// Command-line overrides shared by every subcommand.
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub preset: Option<String>,
    pub config: Option<PathBuf>,
    pub mode: Option<Mode>,
    pub reject: Option<bool>,
    pub out: Option<PathBuf>,
    pub oracle_n: Option<u64>,
    pub seed: Option<u64>,
}

/// A fully resolved experiment.
#[derive(Debug, Clone)]
pub struct Case {
    pub name: String,
    pub model: ClassModel,
    pub mode: Mode,
    pub reject: bool,
    /// Bayes policy for the chosen reject mode; `None` when only the MI
    /// classifier is defined.
    pub policy: Option<Policy>,
    pub ratios: Option<Vec<f64>>,
    pub oracle_n: Option<u64>,
    pub seed: u64,
    pub out: Option<PathBuf>,
}

impl Case {
    pub fn bayes_policy(&self) -> Result<Policy, Failure> {
        self.policy.ok_or_else(|| {
            Failure::Usage(format!(
                "case '{}' defines no Bayes policy{}",
                self.name,
                if self.reject { " with rejection" } else { "" }
            ))
        })
    }
}

pub fn load_config(path: &Path) -> Result<ExperimentConfig, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| Failure::Usage(format!("cannot parse {}: {e}", path.display())))
}

/// Resolves the case from `--config` or `--preset` (falling back to
/// `default_preset`), then applies the command-line overrides.
pub fn resolve(o: &Overrides, default_preset: &str) -> Result<Case, Failure> {
    let mut case = match &o.config {
        Some(path) => from_config(&load_config(path)?, path, o)?,
        None => from_preset(o.preset.as_deref().unwrap_or(default_preset), o)?,
    };
    if let Some(out) = &o.out {
        case.out = Some(out.clone());
    }
    if o.oracle_n.is_some() {
        case.oracle_n = o.oracle_n;
    }
    if let Some(seed) = o.seed {
        case.seed = seed;
    }
    if case.oracle_n == Some(0) {
        return Err(Failure::Usage("oracle sample size must be positive".into()));
    }
    Ok(case)
}

fn from_preset(name: &str, o: &Overrides) -> Result<Case, Failure> {
    let p = presets::preset(name).ok_or_else(|| {
        Failure::Usage(format!(
            "unknown preset '{name}' (expected one of {})",
            presets::NAMES.join(", ")
        ))
    })?;
    let reject = o.reject.unwrap_or(false);
    Ok(Case {
        name: p.name.to_string(),
        model: p.model,
        mode: o.mode.unwrap_or(Mode::Bayes),
        reject,
        policy: if reject {
            p.reject_policy
        } else {
            Some(p.no_reject_policy)
        },
        ratios: None,
        oracle_n: None,
        seed: DEFAULT_SEED,
        out: None,
    })
}

fn from_config(cfg: &ExperimentConfig, path: &Path, o: &Overrides) -> Result<Case, Failure> {
    if let Some(f) = &cfg.output.format {
        if f != "csv" {
            return Err(Failure::Usage(format!(
                "unsupported output format '{f}' (only csv)"
            )));
        }
    }
    let model = cfg.model.build()?;
    let reject = o.reject.unwrap_or(cfg.reject_option);
    let policy = match cfg.policy {
        PolicySpec::Costs(lambda) => Some(Policy::Costs(CostMatrix::new(lambda)?)),
        PolicySpec::Thresholds([tr1, tr2]) => {
            Some(Policy::Thresholds(RejectThresholds::relaxed(tr1, tr2)?))
        }
        PolicySpec::Mi => None,
    };
    if let Some(p) = &policy {
        // validate now so a bad policy fails before any work is done
        p.resolve(reject)?;
    }
    let mode = o.mode.unwrap_or(if policy.is_some() {
        Mode::Bayes
    } else {
        Mode::Mi
    });
    let name = cfg.name.clone().unwrap_or_else(|| {
        path.file_stem()
            .map_or("config".into(), |s| s.to_string_lossy().into_owned())
    });
    Ok(Case {
        name,
        model,
        mode,
        reject,
        policy,
        ratios: cfg.ratios.clone(),
        oracle_n: if cfg.oracle.enabled {
            Some(cfg.oracle.n.unwrap_or(reject_lab::mc_oracle::DEFAULT_N))
        } else {
            None
        },
        seed: cfg.oracle.seed.unwrap_or(DEFAULT_SEED),
        out: cfg.output.path.clone(),
    })
}
