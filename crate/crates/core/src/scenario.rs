//! Crisis policy-experiment engine.
//!
//! All impulses are log-deviations from the crisis baseline, expressed as
//! fractions of baseline GDP. The one-period impact on output is
//!
//! ```text
//! Y^ = m_gc G^C^ + m_gi G^I^ + eta q^ - chi B^
//! ```

use crate::error::{finite, non_negative, positive, ModelError, Result};
use crate::policy::{
    debt_step, expectation, fisher_real_rate, is_zlb, public_capital_step, sentiment_step,
    taylor_rate, FiscalState, PolicyParams,
};

/// Impulses above this magnitude are accepted but flagged: the linear
/// approximation degrades for large deviations.
pub const LARGE_IMPULSE: f64 = 0.2;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CalibratedElasticities {
    m_gc: f64,
    m_gi: f64,
    eta: f64,
    chi: f64,
}

impl CalibratedElasticities {
    pub fn new(m_gc: f64, m_gi: f64, eta: f64, chi: f64) -> Result<Self> {
        Ok(Self {
            m_gc: non_negative("m_gc", m_gc)?,
            m_gi: non_negative("m_gi", m_gi)?,
            eta: non_negative("eta", eta)?,
            chi: non_negative("chi", chi)?,
        })
    }

    pub fn m_gc(&self) -> f64 {
        self.m_gc
    }
    pub fn m_gi(&self) -> f64 {
        self.m_gi
    }
    pub fn eta(&self) -> f64 {
        self.eta
    }
    pub fn chi(&self) -> f64 {
        self.chi
    }
}

impl Default for CalibratedElasticities {
    /// `{m_gc, m_gi, eta, chi} = {0.9, 1.6, 0.15, 0.2}`.
    fn default() -> Self {
        Self {
            m_gc: 0.9,
            m_gi: 1.6,
            eta: 0.15,
            chi: 0.2,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioImpulse {
    label: String,
    g_c_hat: f64,
    g_i_hat: f64,
    q_hat: f64,
    b_hat: f64,
}

impl ScenarioImpulse {
    pub fn new(
        label: impl Into<String>,
        g_c_hat: f64,
        g_i_hat: f64,
        q_hat: f64,
        b_hat: f64,
    ) -> Result<Self> {
        let check = |field: &'static str, v: f64| -> Result<f64> {
            finite(field, v)?;
            if v.abs() >= 1.0 {
                return Err(ModelError::domain(
                    field,
                    v,
                    "log-deviation must be below 1 in magnitude",
                ));
            }
            Ok(v)
        };
        Ok(Self {
            label: label.into(),
            g_c_hat: check("g_c_hat", g_c_hat)?,
            g_i_hat: check("g_i_hat", g_i_hat)?,
            q_hat: check("q_hat", q_hat)?,
            b_hat: check("b_hat", b_hat)?,
        })
    }

    /// The zero impulse.
    pub fn zero(label: impl Into<String>) -> Self {
        Self {
            label: label.into(),
            g_c_hat: 0.0,
            g_i_hat: 0.0,
            q_hat: 0.0,
            b_hat: 0.0,
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }
    pub fn g_c_hat(&self) -> f64 {
        self.g_c_hat
    }
    pub fn g_i_hat(&self) -> f64 {
        self.g_i_hat
    }
    pub fn q_hat(&self) -> f64 {
        self.q_hat
    }
    pub fn b_hat(&self) -> f64 {
        self.b_hat
    }

    pub fn with_b_hat(&self, b_hat: f64) -> Result<Self> {
        Self::new(
            self.label.clone(),
            self.g_c_hat,
            self.g_i_hat,
            self.q_hat,
            b_hat,
        )
    }

    /// Componentwise sum, labelled `self+other`.
    pub fn combine(&self, other: &ScenarioImpulse) -> Result<Self> {
        Self::new(
            format!("{}+{}", self.label, other.label),
            self.g_c_hat + other.g_c_hat,
            self.g_i_hat + other.g_i_hat,
            self.q_hat + other.q_hat,
            self.b_hat + other.b_hat,
        )
    }

    /// Messages for components above [`LARGE_IMPULSE`] in magnitude.
    pub fn warnings(&self) -> Vec<String> {
        [
            ("g_c_hat", self.g_c_hat),
            ("g_i_hat", self.g_i_hat),
            ("q_hat", self.q_hat),
            ("b_hat", self.b_hat),
        ]
        .into_iter()
        .filter(|(_, v)| v.abs() > LARGE_IMPULSE)
        .map(|(name, v)| {
            format!(
                "{}: |{name}| = {} exceeds {LARGE_IMPULSE}; log-linear impact may be inaccurate",
                self.label,
                v.abs()
            )
        })
        .collect()
    }
}

/// Per-channel contributions to the output deviation.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ChannelDecomposition {
    pub government_consumption: f64,
    pub government_investment: f64,
    pub net_exports: f64,
    /// Negative for new debt issuance.
    pub wealth: f64,
}

impl ChannelDecomposition {
    pub fn total(&self) -> f64 {
        self.government_consumption + self.government_investment + self.net_exports + self.wealth
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioResult {
    pub label: String,
    pub y_hat: f64,
    pub decomposition: ChannelDecomposition,
}

pub fn impact_output(imp: &ScenarioImpulse, e: &CalibratedElasticities) -> ScenarioResult {
    let decomposition = ChannelDecomposition {
        government_consumption: e.m_gc * imp.g_c_hat,
        government_investment: e.m_gi * imp.g_i_hat,
        net_exports: e.eta * imp.q_hat,
        wealth: -e.chi * imp.b_hat,
    };
    ScenarioResult {
        label: imp.label.clone(),
        y_hat: decomposition.total(),
        decomposition,
    }
}

/// The eight stabilisation strategies: shock austerity (A1-A3), gradualism
/// (B1-B2, first year of a three-year path) and a budget-neutral switch from
/// consumption to investment spending (C1-C3).
pub fn builtin_scenarios() -> Vec<ScenarioImpulse> {
    const ROWS: [(&str, f64, f64, f64, f64); 8] = [
        ("A1", -0.05, 0.0, 0.10, 0.03),
        ("A2", -0.05, 0.0, 0.10, 0.0),
        ("A3", -0.05, 0.0, 0.0, 0.03),
        ("B1", -0.017, 0.0, 0.033, 0.01),
        ("B2", -0.017, 0.0, 0.033, 0.0),
        ("C1", -0.04, 0.04, 0.05, 0.01),
        ("C2", -0.04, 0.04, 0.0, 0.0),
        ("C3", -0.04, 0.04, 0.05, 0.0),
    ];
    ROWS.iter()
        .map(|&(label, gc, gi, q, b)| {
            ScenarioImpulse::new(label, gc, gi, q, b).expect("built-in scenarios are valid")
        })
        .collect()
}

/// Longer human-readable names for the built-in labels.
pub fn builtin_description(label: &str) -> Option<&'static str> {
    Some(match label {
        "A1" => "Aggressive (debt + deval.)",
        "A2" => "Aggressive (no debt)",
        "A3" => "Aggressive (no deval.)",
        "B1" => "Gradual (debt + deval.)",
        "B2" => "Gradual (no debt)",
        "C1" => "Switch (debt + deval.)",
        "C2" => "Switch (no debt, no deval.)",
        "C3" => "Switch (no debt, deval.)",
        _ => return None,
    })
}

pub fn run_scenarios(
    scenarios: &[ScenarioImpulse],
    e: &CalibratedElasticities,
) -> Vec<ScenarioResult> {
    scenarios.iter().map(|s| impact_output(s, e)).collect()
}

pub fn run_table1(e: &CalibratedElasticities) -> Vec<ScenarioResult> {
    run_scenarios(&builtin_scenarios(), e)
}

/// How the wealth-channel `B^` of each period is determined.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DebtFinancing {
    /// Use the impulse's own `b_hat` (one-period experiments).
    #[default]
    Impulse,
    /// Use the period's new issuance `(B_t - B_{t-1}) / y0` from the
    /// government budget constraint.
    Accounts,
}

/// Inputs of a multi-period path besides the calibration.
#[derive(Debug, Clone, PartialEq)]
pub struct PathInputs {
    pub plan: Vec<ScenarioImpulse>,
    /// Baseline fiscal flows and the debt / rate inherited by period 0.
    pub fiscal0: FiscalState,
    pub kp0: f64,
    /// Crisis-baseline output level; impulses are fractions of it.
    pub y0: f64,
    /// Exogenous inflation per period.
    pub pi_path: Vec<f64>,
    /// Sentiment innovations per period; empty means all zero.
    pub innovations: Vec<f64>,
    pub omega0: f64,
    pub financing: DebtFinancing,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PathPeriod {
    pub period: usize,
    pub result: ScenarioResult,
    /// Realised output `y0 (1 + y_hat)`.
    pub output: f64,
    /// Public capital at the end of the period.
    pub public_capital: f64,
    pub debt: f64,
    pub net_creditor: bool,
    pub nominal_rate: f64,
    pub real_rate: f64,
    pub at_zlb: bool,
    /// Sentiment in effect during the period.
    pub sentiment: f64,
}

/// Steps the economy through `inputs.plan` period by period.
///
/// Each period: fiscal flows are the baseline plus impulse times `y0`; debt
/// follows the budget constraint; the impact equation gives `y_hat`; the
/// Taylor rule and Fisher equation are evaluated at realised output, with
/// expected inflation equal to next period's path value plus sentiment;
/// public capital and sentiment advance by their laws of motion.
pub fn simulate_path(
    inputs: &PathInputs,
    e: &CalibratedElasticities,
    p: &PolicyParams,
) -> Result<Vec<PathPeriod>> {
    let n = inputs.plan.len();
    if inputs.pi_path.len() != n {
        return Err(ModelError::Inconsistent {
            fields: "plan,pi_path",
            reason: format!(
                "plan has {n} periods but pi_path has {}",
                inputs.pi_path.len()
            ),
        });
    }
    if !inputs.innovations.is_empty() && inputs.innovations.len() != n {
        return Err(ModelError::Inconsistent {
            fields: "plan,innovations",
            reason: format!(
                "plan has {n} periods but {} innovations were supplied",
                inputs.innovations.len()
            ),
        });
    }
    positive("y0", inputs.y0)?;
    non_negative("kp0", inputs.kp0)?;
    finite("omega0", inputs.omega0)?;

    let base = inputs.fiscal0;
    let mut kp = inputs.kp0;
    let mut omega = inputs.omega0;
    let mut b_prev = base.b_prev;
    let mut r_prev = base.r_prev;
    let mut out = Vec::with_capacity(n);

    for (t, imp) in inputs.plan.iter().enumerate() {
        let step = || -> Result<PathPeriod> {
            let fiscal = FiscalState::new(
                base.g_c + imp.g_c_hat() * inputs.y0,
                base.g_i + imp.g_i_hat() * inputs.y0,
                base.tr,
                base.tax,
                b_prev,
                r_prev,
            )?;
            let debt = debt_step(&fiscal);

            let effective = match inputs.financing {
                DebtFinancing::Impulse => imp.clone(),
                DebtFinancing::Accounts => imp.with_b_hat((debt.level - b_prev) / inputs.y0)?,
            };
            let result = impact_output(&effective, e);
            let output = inputs.y0 * (1.0 + result.y_hat);

            let pi = inputs.pi_path[t];
            let pi_next = inputs.pi_path.get(t + 1).copied().unwrap_or(pi);
            let nominal_rate = taylor_rate(pi, output, p)?;
            let at_zlb = is_zlb(pi, output, p)?;
            let real_rate = fisher_real_rate(nominal_rate, expectation(pi_next, omega))?;
            let public_capital = public_capital_step(kp, fiscal.g_i, p)?;

            Ok(PathPeriod {
                period: t,
                result,
                output,
                public_capital,
                debt: debt.level,
                net_creditor: debt.net_creditor,
                nominal_rate,
                real_rate,
                at_zlb,
                sentiment: omega,
            })
        };
        let period = step().map_err(|err| err.at_period(t))?;

        kp = period.public_capital;
        // A net-creditor position is carried as zero debt; the FiscalState
        // invariant keeps inherited debt non-negative.
        b_prev = period.debt.max(0.0);
        r_prev = period.real_rate;
        let innovation = inputs.innovations.get(t).copied().unwrap_or(0.0);
        omega = sentiment_step(omega, innovation, p);
        out.push(period);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn zero_impulse_has_no_effect() {
        let r = impact_output(
            &ScenarioImpulse::zero("0"),
            &CalibratedElasticities::default(),
        );
        assert_eq!(r.y_hat, 0.0);
    }

    #[test]
    fn worked_examples() {
        let e = CalibratedElasticities::default();
        let a1 = ScenarioImpulse::new("A1", -0.05, 0.0, 0.10, 0.03).unwrap();
        let r = impact_output(&a1, &e);
        assert_relative_eq!(r.y_hat, -0.036, epsilon = 1e-12);
        assert_relative_eq!(
            r.decomposition.government_consumption,
            -0.045,
            epsilon = 1e-15
        );
        assert_relative_eq!(r.decomposition.net_exports, 0.015, epsilon = 1e-15);
        assert_relative_eq!(r.decomposition.wealth, -0.006, epsilon = 1e-15);

        let c1 = ScenarioImpulse::new("C1", -0.04, 0.04, 0.05, 0.01).unwrap();
        assert_relative_eq!(impact_output(&c1, &e).y_hat, 0.0335, epsilon = 1e-12);
    }

    #[test]
    fn builtins_in_order() {
        let s = builtin_scenarios();
        let labels: Vec<_> = s.iter().map(|s| s.label()).collect();
        assert_eq!(labels, ["A1", "A2", "A3", "B1", "B2", "C1", "C2", "C3"]);
        assert_eq!(s[2].q_hat(), 0.0);
        // B is one third of A to the stated rounding.
        for (a, b) in [(&s[0], &s[3]), (&s[1], &s[4])] {
            assert!((b.g_c_hat() - a.g_c_hat() / 3.0).abs() < 5e-4);
            assert!((b.q_hat() - a.q_hat() / 3.0).abs() < 5e-4);
            assert!((b.b_hat() - a.b_hat() / 3.0).abs() < 5e-4);
        }
        assert!(builtin_description("C2").is_some());
        assert!(builtin_description("Z9").is_none());
    }

    #[test]
    fn impulse_validation_and_warnings() {
        assert!(ScenarioImpulse::new("x", 1.0, 0.0, 0.0, 0.0).is_err());
        assert!(ScenarioImpulse::new("x", 0.0, f64::NAN, 0.0, 0.0).is_err());
        let big = ScenarioImpulse::new("big", -0.25, 0.0, 0.0, 0.0).unwrap();
        assert_eq!(big.warnings().len(), 1);
        assert!(builtin_scenarios().iter().all(|s| s.warnings().is_empty()));
    }

    fn simple_inputs(plan: Vec<ScenarioImpulse>) -> PathInputs {
        let n = plan.len();
        PathInputs {
            plan,
            fiscal0: FiscalState::new(0.2, 0.03, 0.05, 0.25, 0.5, 0.01).unwrap(),
            kp0: 0.5,
            y0: 1.0,
            pi_path: vec![0.02; n],
            innovations: vec![],
            omega0: 0.0,
            financing: DebtFinancing::Impulse,
        }
    }

    #[test]
    fn path_length_mismatch() {
        let mut inputs = simple_inputs(builtin_scenarios());
        inputs.pi_path.pop();
        assert!(simulate_path(&inputs, &Default::default(), &Default::default()).is_err());
    }

    #[test]
    fn period_index_attached_to_errors() {
        // Cutting G^C below zero in the second period.
        let cut = ScenarioImpulse::new("cut", -0.3, 0.0, 0.0, 0.0).unwrap();
        let mut inputs = simple_inputs(vec![ScenarioImpulse::zero("z"), cut]);
        inputs.fiscal0 = FiscalState::new(0.2, 0.03, 0.05, 0.25, 0.5, 0.01).unwrap();
        let err = simulate_path(&inputs, &Default::default(), &Default::default()).unwrap_err();
        assert!(
            matches!(err, ModelError::AtPeriod { period: 1, .. }),
            "{err}"
        );
    }

    #[test]
    fn accounts_financing_uses_new_issuance() {
        let mut inputs = simple_inputs(vec![ScenarioImpulse::zero("z")]);
        inputs.financing = DebtFinancing::Accounts;
        let out = simulate_path(&inputs, &Default::default(), &Default::default()).unwrap();
        // B = 0.2 + 0.03 + 0.05 + 1.01 * 0.5 - 0.25 = 0.535; issuance 0.035.
        assert_relative_eq!(out[0].debt, 0.535, max_relative = 1e-14);
        assert_relative_eq!(out[0].result.y_hat, -0.2 * 0.035, max_relative = 1e-12);
    }
}
