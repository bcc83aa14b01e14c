//! The one JSON document every subcommand reads: tracker rates, moment
//! powers, and the alpha table grid. Missing keys fall back to the defaults;
//! unknown keys are rejected.

use serde::{Deserialize, Serialize};
use stabletrack::{
    build_alpha_table, AlphaMode, LearningRates, MomentPowers, TrackerConfig64,
};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlphaModeCfg {
    Fixed(f64),
    Named(String),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct CliConfig {
    pub eta1: f64,
    pub eta2: f64,
    pub eta3: f64,
    pub p_sigma: f64,
    pub p1: f64,
    pub p2: f64,
    pub beta: f64,
    pub sigma_multiplier: f64,
    pub warmup: usize,
    pub alpha_min: f64,
    pub alpha_max: f64,
    pub alpha_step: f64,
    pub alpha_mode: AlphaModeCfg,
    pub sigma_floor: f64,
}

impl Default for CliConfig {
    fn default() -> Self {
        CliConfig {
            eta1: 0.002,
            eta2: 0.03,
            eta3: 0.006,
            p_sigma: 0.25,
            p1: 0.5,
            p2: 0.2,
            beta: 0.0,
            sigma_multiplier: 1.05,
            warmup: 300,
            alpha_min: 1.05,
            alpha_max: 2.0,
            alpha_step: 0.005,
            alpha_mode: AlphaModeCfg::Named("adaptive".into()),
            sigma_floor: 1e-12,
        }
    }
}

impl CliConfig {
    pub fn from_json(text: &str) -> Result<Self, String> {
        serde_json::from_str(text).map_err(|e| format!("config: {}", e))
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("config serializes");
        out.push('\n');
        out
    }

    /// Builds the runtime tracker configuration, which also validates every
    /// field (rates in range, powers consistent with the table, and so on).
    pub fn to_tracker(&self) -> Result<TrackerConfig64, String> {
        let alpha_mode = match &self.alpha_mode {
            AlphaModeCfg::Fixed(a) => AlphaMode::Fixed(*a),
            AlphaModeCfg::Named(s) if s == "adaptive" => AlphaMode::Adaptive,
            AlphaModeCfg::Named(s) => {
                return Err(format!(
                    "config: alpha_mode must be \"adaptive\" or a number, got \"{}\"",
                    s
                ))
            }
        };
        let table = build_alpha_table(self.p1, self.p2, self.alpha_min, self.alpha_max, self.alpha_step)
            .map_err(|e| format!("config: {}", e))?;
        let rates = LearningRates::new(self.eta1, self.eta2, self.eta3)
            .map_err(|e| format!("config: {}", e))?;
        let powers = MomentPowers::new(self.p_sigma, self.p1, self.p2)
            .map_err(|e| format!("config: {}", e))?;
        TrackerConfig64::new(
            rates,
            powers,
            table,
            self.beta,
            self.sigma_multiplier,
            self.warmup,
            alpha_mode,
            self.sigma_floor,
        )
        .map_err(|e| format!("config: {}", e))
    }
}
