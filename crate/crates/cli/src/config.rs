//! JSON run configuration.
//!
//! Every top-level section is optional; a missing section falls back to the
//! built-in calibration and is listed in [`LoadedConfig::defaulted`]. A section
//! that is present must be complete. Unknown keys are rejected everywhere.
//!
//! ```json
//! {
//!   "production":   { "z": 1, "alpha_k": 0.35, "alpha_l": 0.55, "alpha_p": 0.1, "sigma_prod": 0.6, "rho": -0.6667 },
//!   "household":    { "beta": 0.96, "sigma_c": 1.5, "gamma": 2, "phi": 0.05, "c_min": 0.1, "lambda": 0.45 },
//!   "policy":       { "rho_eq": 0.02, "pi_star": 0.02, "phi_pi": 1.5, "phi_y": 0.5, "y_pot": 1,
//!                     "delta_p": 0.05, "rho_omega": 0.8, "sigma_omega": 0.01 },
//!   "elasticities": { "m_gc": 0.9, "m_gi": 1.6, "eta": 0.15, "chi": 0.2 },
//!   "scenarios":    [ { "label": "A1", "g_c_hat": -0.05, "g_i_hat": 0, "q_hat": 0.1, "b_hat": 0.03 } ],
//!   "factors":      { "k": 3, "l": 1, "kp": 0.5 },
//!   "multiplier":   { "mpi": 0.1, "b_slope": 1.5,
//!                     "slump":  { "pi": 0, "expected_inflation": 0, "y": 0.9 },
//!                     "normal": { "pi": 0.02, "expected_inflation": 0.02, "y": 1 } },
//!   "path":         { "plan": [ ... impulses ... ], "pi_path": [0.12, 0.1, 0.08],
//!                     "fiscal0": { "g_c": 0.22, "g_i": 0.03, "tr": 0.08, "tax": 0.25, "b_prev": 0.6, "r_prev": 0 },
//!                     "kp0": 0.6, "y0": 0.95, "omega0": 0, "financing": "impulse" },
//!   "output_format": "markdown",
//!   "seed": 0
//! }
//! ```
//!
//! `rho` is optional; when given it must agree with `sigma_prod`.

use std::fmt;
use std::str::FromStr;

use kisces_core::households::HouseholdParams;
use kisces_core::policy::{FiscalState, PolicyParams};
use kisces_core::production::{FactorBundle, ProductionParams};
use kisces_core::scenario::{CalibratedElasticities, DebtFinancing, ScenarioImpulse};
use kisces_core::ModelError;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ConfigError {
    #[error("malformed config: {0}")]
    Parse(String),
    #[error("unknown key at `{path}`: {message}")]
    UnknownKey { path: String, message: String },
    #[error("invalid value at `{path}`: {message}")]
    Invalid { path: String, message: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Csv,
    Json,
    #[default]
    Markdown,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(Self::Csv),
            "json" => Ok(Self::Json),
            "markdown" | "md" => Ok(Self::Markdown),
            other => Err(format!(
                "unsupported output format `{other}` (expected csv, json or markdown)"
            )),
        }
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Csv => "csv",
            Self::Json => "json",
            Self::Markdown => "markdown",
        })
    }
}

// ---------------------------------------------------------------------------
// On-disk sections

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProductionSection {
    pub z: f64,
    pub alpha_k: f64,
    pub alpha_l: f64,
    pub alpha_p: f64,
    pub sigma_prod: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rho: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HouseholdSection {
    pub beta: f64,
    pub sigma_c: f64,
    pub gamma: f64,
    pub phi: f64,
    pub c_min: f64,
    pub lambda: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolicySection {
    pub rho_eq: f64,
    pub pi_star: f64,
    pub phi_pi: f64,
    pub phi_y: f64,
    pub y_pot: f64,
    pub delta_p: f64,
    pub rho_omega: f64,
    pub sigma_omega: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ElasticitiesSection {
    pub m_gc: f64,
    pub m_gi: f64,
    pub eta: f64,
    pub chi: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ImpulseSection {
    pub label: String,
    pub g_c_hat: f64,
    pub g_i_hat: f64,
    pub q_hat: f64,
    pub b_hat: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorsSection {
    pub k: f64,
    pub l: f64,
    pub kp: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RegimeState {
    pub pi: f64,
    pub expected_inflation: f64,
    pub y: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MultiplierSection {
    pub mpi: f64,
    pub b_slope: f64,
    pub slump: RegimeState,
    pub normal: RegimeState,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FiscalSection {
    pub g_c: f64,
    pub g_i: f64,
    pub tr: f64,
    pub tax: f64,
    pub b_prev: f64,
    pub r_prev: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FinancingSection {
    Impulse,
    Accounts,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PathSection {
    pub plan: Vec<ImpulseSection>,
    pub pi_path: Vec<f64>,
    pub fiscal0: FiscalSection,
    pub kp0: f64,
    pub y0: f64,
    pub omega0: f64,
    pub financing: FinancingSection,
}

/// The document as written on disk.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub production: Option<ProductionSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub household: Option<HouseholdSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub policy: Option<PolicySection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elasticities: Option<ElasticitiesSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scenarios: Option<Vec<ImpulseSection>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factors: Option<FactorsSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub multiplier: Option<MultiplierSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub path: Option<PathSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output_format: Option<OutputFormat>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

// ---------------------------------------------------------------------------
// Validated configuration

#[derive(Debug, Clone, PartialEq)]
pub struct MultiplierSettings {
    pub mpi: f64,
    pub b_slope: f64,
    pub slump: RegimeState,
    pub normal: RegimeState,
}

impl Default for MultiplierSettings {
    fn default() -> Self {
        Self {
            mpi: 0.1,
            b_slope: 1.5,
            slump: RegimeState {
                pi: 0.0,
                expected_inflation: 0.0,
                y: 0.9,
            },
            normal: RegimeState {
                pi: 0.02,
                expected_inflation: 0.02,
                y: 1.0,
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PathSettings {
    pub plan: Vec<ScenarioImpulse>,
    pub pi_path: Vec<f64>,
    pub fiscal0: FiscalState,
    pub kp0: f64,
    pub y0: f64,
    pub omega0: f64,
    pub financing: DebtFinancing,
}

impl Default for PathSettings {
    /// Three-year gradual consolidation from a high-inflation crisis.
    fn default() -> Self {
        let plan = (1..=3)
            .map(|year| {
                ScenarioImpulse::new(format!("year {year}"), -0.017, 0.0, 0.033, 0.01)
                    .expect("valid default plan")
            })
            .collect();
        Self {
            plan,
            pi_path: vec![0.12, 0.10, 0.08],
            fiscal0: FiscalState::new(0.22, 0.03, 0.08, 0.25, 0.6, 0.0)
                .expect("valid default fiscal state"),
            kp0: 0.6,
            y0: 0.95,
            omega0: 0.0,
            financing: DebtFinancing::Impulse,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub production: ProductionParams,
    pub household: HouseholdParams,
    pub policy: PolicyParams,
    pub elasticities: CalibratedElasticities,
    pub scenarios: Option<Vec<ScenarioImpulse>>,
    pub factors: FactorBundle,
    pub multiplier: MultiplierSettings,
    pub path: PathSettings,
    pub output_format: OutputFormat,
    pub seed: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            production: ProductionParams::default(),
            household: HouseholdParams::default(),
            policy: PolicyParams::default(),
            elasticities: CalibratedElasticities::default(),
            scenarios: None,
            factors: FactorBundle::new(3.0, 1.0, 0.5).expect("valid default factors"),
            multiplier: MultiplierSettings::default(),
            path: PathSettings::default(),
            output_format: OutputFormat::default(),
            seed: 0,
        }
    }
}

/// A validated config plus the names of the sections that were defaulted.
#[derive(Debug, Clone, PartialEq)]
pub struct LoadedConfig {
    pub config: RunConfig,
    pub defaulted: Vec<&'static str>,
}

impl LoadedConfig {
    pub fn is_defaulted(&self, section: &str) -> bool {
        self.defaulted.contains(&section)
    }
}

fn invalid(section: &str, err: ModelError) -> ConfigError {
    let path = match &err {
        ModelError::Domain { field, .. } => format!("{section}.{field}"),
        ModelError::Inconsistent { fields, .. } => format!("{section}.{{{fields}}}"),
        _ => section.to_string(),
    };
    ConfigError::Invalid {
        path,
        message: err.to_string(),
    }
}

fn impulse(section: &str, s: &ImpulseSection) -> Result<ScenarioImpulse, ConfigError> {
    ScenarioImpulse::new(s.label.clone(), s.g_c_hat, s.g_i_hat, s.q_hat, s.b_hat)
        .map_err(|e| invalid(section, e))
}

fn impulse_section(s: &ScenarioImpulse) -> ImpulseSection {
    ImpulseSection {
        label: s.label().to_string(),
        g_c_hat: s.g_c_hat(),
        g_i_hat: s.g_i_hat(),
        q_hat: s.q_hat(),
        b_hat: s.b_hat(),
    }
}

fn finite(path: String, v: f64) -> Result<f64, ConfigError> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(ConfigError::Invalid {
            path,
            message: format!("{v} is not finite"),
        })
    }
}

impl RunConfig {
    fn from_raw(raw: RawConfig) -> Result<LoadedConfig, ConfigError> {
        let mut cfg = RunConfig::default();
        let mut defaulted = Vec::new();

        match raw.production {
            Some(s) => {
                cfg.production = match s.rho {
                    Some(rho) => ProductionParams::with_rho(
                        s.z,
                        s.alpha_k,
                        s.alpha_l,
                        s.alpha_p,
                        s.sigma_prod,
                        rho,
                    ),
                    None => {
                        ProductionParams::new(s.z, s.alpha_k, s.alpha_l, s.alpha_p, s.sigma_prod)
                    }
                }
                .map_err(|e| invalid("production", e))?
            }
            None => defaulted.push("production"),
        }
        match raw.household {
            Some(s) => {
                cfg.household =
                    HouseholdParams::new(s.beta, s.sigma_c, s.gamma, s.phi, s.c_min, s.lambda)
                        .map_err(|e| invalid("household", e))?
            }
            None => defaulted.push("household"),
        }
        match raw.policy {
            Some(s) => {
                cfg.policy = PolicyParams::new(
                    s.rho_eq,
                    s.pi_star,
                    s.phi_pi,
                    s.phi_y,
                    s.y_pot,
                    s.delta_p,
                    s.rho_omega,
                    s.sigma_omega,
                )
                .map_err(|e| invalid("policy", e))?
            }
            None => defaulted.push("policy"),
        }
        match raw.elasticities {
            Some(s) => {
                cfg.elasticities = CalibratedElasticities::new(s.m_gc, s.m_gi, s.eta, s.chi)
                    .map_err(|e| invalid("elasticities", e))?
            }
            None => defaulted.push("elasticities"),
        }
        match raw.scenarios {
            Some(list) => {
                cfg.scenarios = Some(
                    list.iter()
                        .enumerate()
                        .map(|(i, s)| impulse(&format!("scenarios[{i}]"), s))
                        .collect::<Result<_, _>>()?,
                )
            }
            None => defaulted.push("scenarios"),
        }
        match raw.factors {
            Some(s) => {
                cfg.factors =
                    FactorBundle::new(s.k, s.l, s.kp).map_err(|e| invalid("factors", e))?
            }
            None => defaulted.push("factors"),
        }
        match raw.multiplier {
            Some(s) => {
                for (name, v) in [("mpi", s.mpi), ("b_slope", s.b_slope)] {
                    if !(v.is_finite() && v >= 0.0) {
                        return Err(ConfigError::Invalid {
                            path: format!("multiplier.{name}"),
                            message: format!("{v} must be finite and >= 0"),
                        });
                    }
                }
                for (name, st) in [("slump", &s.slump), ("normal", &s.normal)] {
                    finite(format!("multiplier.{name}.pi"), st.pi)?;
                    if !(st.expected_inflation > -1.0) {
                        return Err(ConfigError::Invalid {
                            path: format!("multiplier.{name}.expected_inflation"),
                            message: "must exceed -1".into(),
                        });
                    }
                    if !(st.y > 0.0 && st.y.is_finite()) {
                        return Err(ConfigError::Invalid {
                            path: format!("multiplier.{name}.y"),
                            message: "must be finite and > 0".into(),
                        });
                    }
                }
                cfg.multiplier = MultiplierSettings {
                    mpi: s.mpi,
                    b_slope: s.b_slope,
                    slump: s.slump,
                    normal: s.normal,
                };
            }
            None => defaulted.push("multiplier"),
        }
        match raw.path {
            Some(s) => {
                let plan = s
                    .plan
                    .iter()
                    .enumerate()
                    .map(|(i, p)| impulse(&format!("path.plan[{i}]"), p))
                    .collect::<Result<Vec<_>, _>>()?;
                if s.pi_path.len() != plan.len() {
                    return Err(ConfigError::Invalid {
                        path: "path.pi_path".into(),
                        message: format!(
                            "has {} entries but path.plan has {}",
                            s.pi_path.len(),
                            plan.len()
                        ),
                    });
                }
                for (i, &pi) in s.pi_path.iter().enumerate() {
                    finite(format!("path.pi_path[{i}]"), pi)?;
                }
                let f = &s.fiscal0;
                let fiscal0 = FiscalState::new(f.g_c, f.g_i, f.tr, f.tax, f.b_prev, f.r_prev)
                    .map_err(|e| invalid("path.fiscal0", e))?;
                if !(s.kp0 >= 0.0 && s.kp0.is_finite()) {
                    return Err(ConfigError::Invalid {
                        path: "path.kp0".into(),
                        message: "must be finite and >= 0".into(),
                    });
                }
                if !(s.y0 > 0.0 && s.y0.is_finite()) {
                    return Err(ConfigError::Invalid {
                        path: "path.y0".into(),
                        message: "must be finite and > 0".into(),
                    });
                }
                finite("path.omega0".into(), s.omega0)?;
                cfg.path = PathSettings {
                    plan,
                    pi_path: s.pi_path,
                    fiscal0,
                    kp0: s.kp0,
                    y0: s.y0,
                    omega0: s.omega0,
                    financing: match s.financing {
                        FinancingSection::Impulse => DebtFinancing::Impulse,
                        FinancingSection::Accounts => DebtFinancing::Accounts,
                    },
                };
            }
            None => defaulted.push("path"),
        }
        if let Some(fmt) = raw.output_format {
            cfg.output_format = fmt;
        }
        if let Some(seed) = raw.seed {
            cfg.seed = seed;
        }
        Ok(LoadedConfig {
            config: cfg,
            defaulted,
        })
    }

    /// The configured scenarios, or the eight built-in ones when none are given.
    pub fn scenario_list(&self) -> Vec<ScenarioImpulse> {
        self.scenarios
            .clone()
            .unwrap_or_else(kisces_core::scenario::builtin_scenarios)
    }

    /// Fully explicit on-disk form (every section present).
    pub fn to_raw(&self) -> RawConfig {
        let p = &self.production;
        let h = &self.household;
        let q = &self.policy;
        let e = &self.elasticities;
        let path = &self.path;
        let f = &path.fiscal0;
        RawConfig {
            production: Some(ProductionSection {
                z: p.z(),
                alpha_k: p.alpha_k(),
                alpha_l: p.alpha_l(),
                alpha_p: p.alpha_p(),
                sigma_prod: p.sigma_prod(),
                rho: Some(p.rho()),
            }),
            household: Some(HouseholdSection {
                beta: h.beta(),
                sigma_c: h.sigma_c(),
                gamma: h.gamma(),
                phi: h.phi(),
                c_min: h.c_min(),
                lambda: h.lambda(),
            }),
            policy: Some(PolicySection {
                rho_eq: q.rho_eq(),
                pi_star: q.pi_star(),
                phi_pi: q.phi_pi(),
                phi_y: q.phi_y(),
                y_pot: q.y_pot(),
                delta_p: q.delta_p(),
                rho_omega: q.rho_omega(),
                sigma_omega: q.sigma_omega(),
            }),
            elasticities: Some(ElasticitiesSection {
                m_gc: e.m_gc(),
                m_gi: e.m_gi(),
                eta: e.eta(),
                chi: e.chi(),
            }),
            scenarios: self
                .scenarios
                .as_ref()
                .map(|list| list.iter().map(impulse_section).collect()),
            factors: Some(FactorsSection {
                k: self.factors.k(),
                l: self.factors.l(),
                kp: self.factors.kp(),
            }),
            multiplier: Some(MultiplierSection {
                mpi: self.multiplier.mpi,
                b_slope: self.multiplier.b_slope,
                slump: self.multiplier.slump,
                normal: self.multiplier.normal,
            }),
            path: Some(PathSection {
                plan: path.plan.iter().map(impulse_section).collect(),
                pi_path: path.pi_path.clone(),
                fiscal0: FiscalSection {
                    g_c: f.g_c(),
                    g_i: f.g_i(),
                    tr: f.tr(),
                    tax: f.tax(),
                    b_prev: f.b_prev(),
                    r_prev: f.r_prev(),
                },
                kp0: path.kp0,
                y0: path.y0,
                omega0: path.omega0,
                financing: match path.financing {
                    DebtFinancing::Impulse => FinancingSection::Impulse,
                    DebtFinancing::Accounts => FinancingSection::Accounts,
                },
            }),
            output_format: Some(self.output_format),
            seed: Some(self.seed),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_raw()).expect("config serialises")
    }
}

/// Parses and validates a config document. Empty or whitespace-only text is
/// the all-defaults configuration.
pub fn parse_config(text: &str) -> Result<LoadedConfig, ConfigError> {
    let raw: RawConfig = if text.trim().is_empty() {
        RawConfig::default()
    } else {
        let de = &mut serde_json::Deserializer::from_str(text);
        serde_path_to_error::deserialize(de).map_err(|err| {
            let path = err.path().to_string();
            let inner = err.into_inner();
            let message = inner.to_string();
            if message.starts_with("unknown field") {
                ConfigError::UnknownKey { path, message }
            } else if inner.is_data() {
                ConfigError::Invalid { path, message }
            } else {
                ConfigError::Parse(message)
            }
        })?
    };
    RunConfig::from_raw(raw)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_document_is_all_defaults() {
        for text in ["", "  \n", "{}"] {
            let loaded = parse_config(text).unwrap();
            assert_eq!(loaded.config, RunConfig::default());
            assert_eq!(loaded.defaulted.len(), 8);
            assert!(loaded.is_defaulted("elasticities"));
            assert_eq!(loaded.config.scenario_list().len(), 8);
        }
    }

    #[test]
    fn alpha_sum_violation_names_fields() {
        let text = r#"{"production": {"z": 1, "alpha_k": 0.36, "alpha_l": 0.55, "alpha_p": 0.1, "sigma_prod": 0.6}}"#;
        match parse_config(text).unwrap_err() {
            ConfigError::Invalid { path, .. } => {
                assert!(path.contains("alpha_k+alpha_l+alpha_p"), "{path}")
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn unknown_keys_rejected_with_path() {
        let err = parse_config(r#"{"policy_typo": {}}"#).unwrap_err();
        assert!(matches!(err, ConfigError::UnknownKey { .. }), "{err:?}");
        let err = parse_config(
            r#"{"elasticities": {"m_gc": 0.9, "m_gi": 1.6, "eta": 0.15, "chi": 0.2, "psi": 1}}"#,
        )
        .unwrap_err();
        match err {
            ConfigError::UnknownKey { path, .. } => assert!(path.starts_with("elasticities")),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn malformed_and_incomplete_documents() {
        assert!(matches!(
            parse_config("{ not json").unwrap_err(),
            ConfigError::Parse(_)
        ));
        let err = parse_config(r#"{"elasticities": {"m_gc": 0.9}}"#).unwrap_err();
        assert!(matches!(err, ConfigError::Invalid { .. }), "{err:?}");
    }

    #[test]
    fn domain_error_path_points_at_key() {
        let text = r#"{"household": {"beta": 1.2, "sigma_c": 1.5, "gamma": 2, "phi": 0.05, "c_min": 0.1, "lambda": 0.45}}"#;
        match parse_config(text).unwrap_err() {
            ConfigError::Invalid { path, .. } => assert_eq!(path, "household.beta"),
            other => panic!("unexpected {other:?}"),
        }
        let text = r#"{"scenarios": [{"label": "x", "g_c_hat": 0, "g_i_hat": 0, "q_hat": 1.5, "b_hat": 0}]}"#;
        match parse_config(text).unwrap_err() {
            ConfigError::Invalid { path, .. } => assert_eq!(path, "scenarios[0].q_hat"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn inconsistent_rho_rejected() {
        let text = r#"{"production": {"z": 1, "alpha_k": 0.35, "alpha_l": 0.55, "alpha_p": 0.1, "sigma_prod": 0.6, "rho": -0.5}}"#;
        assert!(matches!(
            parse_config(text).unwrap_err(),
            ConfigError::Invalid { .. }
        ));
    }

    #[test]
    fn defaults_round_trip() {
        let cfg = RunConfig::default();
        let back = parse_config(&cfg.to_json()).unwrap();
        assert_eq!(back.config, cfg);
        assert!(back.defaulted.contains(&"scenarios"));
        assert_eq!(back.defaulted.len(), 1);
    }

    #[test]
    fn format_names() {
        assert_eq!("CSV".parse::<OutputFormat>().unwrap(), OutputFormat::Csv);
        assert!("xml".parse::<OutputFormat>().is_err());
    }
}
