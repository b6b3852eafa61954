//! Monetary rule, Fisher equation, fiscal accounts and expectations.

use crate::error::{finite, non_negative, positive, ModelError, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolicyParams {
    rho_eq: f64,
    pi_star: f64,
    phi_pi: f64,
    phi_y: f64,
    y_pot: f64,
    delta_p: f64,
    rho_omega: f64,
    sigma_omega: f64,
}

impl PolicyParams {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        rho_eq: f64,
        pi_star: f64,
        phi_pi: f64,
        phi_y: f64,
        y_pot: f64,
        delta_p: f64,
        rho_omega: f64,
        sigma_omega: f64,
    ) -> Result<Self> {
        if !(delta_p > 0.0 && delta_p < 1.0) {
            return Err(ModelError::domain("delta_p", delta_p, "must lie in (0, 1)"));
        }
        if !(0.0..1.0).contains(&rho_omega) {
            return Err(ModelError::domain(
                "rho_omega",
                rho_omega,
                "must lie in [0, 1)",
            ));
        }
        Ok(Self {
            rho_eq: finite("rho_eq", rho_eq)?,
            pi_star: finite("pi_star", pi_star)?,
            phi_pi: non_negative("phi_pi", phi_pi)?,
            phi_y: non_negative("phi_y", phi_y)?,
            y_pot: positive("y_pot", y_pot)?,
            delta_p,
            rho_omega,
            sigma_omega: non_negative("sigma_omega", sigma_omega)?,
        })
    }

    pub fn rho_eq(&self) -> f64 {
        self.rho_eq
    }
    pub fn pi_star(&self) -> f64 {
        self.pi_star
    }
    pub fn phi_pi(&self) -> f64 {
        self.phi_pi
    }
    pub fn phi_y(&self) -> f64 {
        self.phi_y
    }
    pub fn y_pot(&self) -> f64 {
        self.y_pot
    }
    pub fn delta_p(&self) -> f64 {
        self.delta_p
    }
    pub fn rho_omega(&self) -> f64 {
        self.rho_omega
    }
    pub fn sigma_omega(&self) -> f64 {
        self.sigma_omega
    }
}

impl Default for PolicyParams {
    fn default() -> Self {
        Self::new(0.02, 0.02, 1.5, 0.5, 1.0, 0.05, 0.8, 0.01)
            .expect("default policy calibration is valid")
    }
}

/// Taylor-rule rate before the zero lower bound is applied.
pub fn taylor_unclamped(pi: f64, y: f64, p: &PolicyParams) -> Result<f64> {
    positive("y", y)?;
    finite("pi", pi)?;
    Ok(p.rho_eq + p.pi_star + p.phi_pi * (pi - p.pi_star) + p.phi_y * (y - p.y_pot) / p.y_pot)
}

/// Nominal policy rate `max(0, taylor)`.
pub fn taylor_rate(pi: f64, y: f64, p: &PolicyParams) -> Result<f64> {
    Ok(taylor_unclamped(pi, y, p)?.max(0.0))
}

/// True when the unclamped rule is at or below zero. The boundary counts as
/// constrained so that the multiplier regime switch fires when the floor
/// binds with equality.
pub fn is_zlb(pi: f64, y: f64, p: &PolicyParams) -> Result<bool> {
    Ok(taylor_unclamped(pi, y, p)? <= 0.0)
}

/// `r = (1 + i) / (1 + E[pi]) - 1`.
pub fn fisher_real_rate(i: f64, expected_inflation: f64) -> Result<f64> {
    finite("i", i)?;
    if !(expected_inflation > -1.0) || !expected_inflation.is_finite() {
        return Err(ModelError::domain(
            "expected_inflation",
            expected_inflation,
            "must exceed -1",
        ));
    }
    Ok((1.0 + i) / (1.0 + expected_inflation) - 1.0)
}

/// `KP' = (1 - delta_p) KP + G^I`.
pub fn public_capital_step(kp: f64, g_i: f64, p: &PolicyParams) -> Result<f64> {
    non_negative("kp", kp)?;
    non_negative("g_i", g_i)?;
    Ok((1.0 - p.delta_p) * kp + g_i)
}

/// Government flows for one period plus the inherited debt position.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FiscalState {
    pub(crate) g_c: f64,
    pub(crate) g_i: f64,
    pub(crate) tr: f64,
    pub(crate) tax: f64,
    pub(crate) b_prev: f64,
    pub(crate) r_prev: f64,
}

impl FiscalState {
    pub fn new(g_c: f64, g_i: f64, tr: f64, tax: f64, b_prev: f64, r_prev: f64) -> Result<Self> {
        Ok(Self {
            g_c: non_negative("g_c", g_c)?,
            g_i: non_negative("g_i", g_i)?,
            tr: non_negative("tr", tr)?,
            tax: non_negative("tax", tax)?,
            b_prev: non_negative("b_prev", b_prev)?,
            r_prev: finite("r_prev", r_prev)?,
        })
    }

    pub fn g_c(&self) -> f64 {
        self.g_c
    }
    pub fn g_i(&self) -> f64 {
        self.g_i
    }
    pub fn tr(&self) -> f64 {
        self.tr
    }
    pub fn tax(&self) -> f64 {
        self.tax
    }
    pub fn b_prev(&self) -> f64 {
        self.b_prev
    }
    pub fn r_prev(&self) -> f64 {
        self.r_prev
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DebtOutcome {
    pub level: f64,
    /// Set when the government ends the period as a net creditor.
    pub net_creditor: bool,
}

/// Government budget constraint solved for end-of-period debt:
/// `B = G^C + G^I + Tr + (1 + r_prev) B_prev - T`.
pub fn debt_step(f: &FiscalState) -> DebtOutcome {
    let level = f.g_c + f.g_i + f.tr + (1.0 + f.r_prev) * f.b_prev - f.tax;
    DebtOutcome {
        level,
        net_creditor: level < 0.0,
    }
}

/// Sentiment-shifted expectation `E_model + omega`.
pub fn expectation(model_exp: f64, omega: f64) -> f64 {
    model_exp + omega
}

/// AR(1) sentiment `rho_omega * omega_prev + sigma_omega * innovation`.
/// Innovations are supplied by the caller.
pub fn sentiment_step(omega_prev: f64, innovation: f64, p: &PolicyParams) -> f64 {
    p.rho_omega * omega_prev + p.sigma_omega * innovation
}

/// Sentiment values after each innovation, starting from `omega0`.
pub fn sentiment_path(omega0: f64, innovations: &[f64], p: &PolicyParams) -> Vec<f64> {
    innovations
        .iter()
        .scan(omega0, |omega, &e| {
            *omega = sentiment_step(*omega, e, p);
            Some(*omega)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn taylor_rule_cases() {
        let p = PolicyParams::default();
        assert_relative_eq!(
            taylor_rate(0.02, 1.0, &p).unwrap(),
            0.04,
            max_relative = 1e-15
        );
        assert_relative_eq!(
            taylor_rate(0.04, 1.0, &p).unwrap(),
            0.07,
            max_relative = 1e-14
        );
        assert_eq!(taylor_rate(0.0, 0.8, &p).unwrap(), 0.0);
        assert!(taylor_rate(0.02, 0.0, &p).is_err());
    }

    #[test]
    fn zlb_classification() {
        let p = PolicyParams::default();
        assert!(!is_zlb(0.02, 1.0, &p).unwrap());
        // unclamped = 0.04 + 1.5 (pi - 0.02) = -0.01 at pi = -0.0133..
        let pi_neg = 0.02 + (-0.01 - 0.04) / 1.5;
        assert!(is_zlb(pi_neg, 1.0, &p).unwrap());
        // Exact zero: phi_pi = 2 makes the arithmetic exact.
        let q = PolicyParams::new(0.02, 0.02, 2.0, 0.5, 1.0, 0.05, 0.8, 0.0).unwrap();
        assert_eq!(taylor_unclamped(0.0, 1.0, &q).unwrap(), 0.0);
        assert!(is_zlb(0.0, 1.0, &q).unwrap());
    }

    #[test]
    fn fisher_cases() {
        assert_eq!(fisher_real_rate(0.0, 0.0).unwrap(), 0.0);
        assert_relative_eq!(fisher_real_rate(0.05, 0.02).unwrap(), 1.05 / 1.02 - 1.0);
        assert_relative_eq!(
            fisher_real_rate(0.05, 0.02).unwrap(),
            0.029_412,
            epsilon = 1e-6
        );
        assert_relative_eq!(
            fisher_real_rate(0.0, 0.10).unwrap(),
            -0.0909,
            epsilon = 1e-4
        );
        assert!(fisher_real_rate(0.0, -1.0).is_err());
    }

    #[test]
    fn public_capital_law_of_motion() {
        let p = PolicyParams::default();
        assert_relative_eq!(public_capital_step(10.0, 0.0, &p).unwrap(), 9.5);
        assert_eq!(public_capital_step(0.0, 1.0, &p).unwrap(), 1.0);
        let fixed = 0.3 / p.delta_p();
        assert_relative_eq!(
            public_capital_step(fixed, 0.3, &p).unwrap(),
            fixed,
            max_relative = 1e-15
        );
        assert!(public_capital_step(-1.0, 0.0, &p).is_err());
    }

    #[test]
    fn debt_accounting() {
        let balanced = FiscalState::new(0.2, 0.05, 0.05, 0.3, 0.0, 0.02).unwrap();
        assert_relative_eq!(debt_step(&balanced).level, 0.0, epsilon = 1e-15);

        let deficit = FiscalState::new(0.2, 0.03, 0.0, 0.2, 1.0, 0.02).unwrap();
        assert_relative_eq!(debt_step(&deficit).level, 1.05, max_relative = 1e-14);
        assert!(!debt_step(&deficit).net_creditor);

        let surplus = FiscalState::new(0.1, 0.0, 0.0, 0.3, 0.0, 0.0).unwrap();
        let out = debt_step(&surplus);
        assert!(out.level < 0.0 && out.net_creditor);
        assert!(FiscalState::new(-0.1, 0.0, 0.0, 0.0, 0.0, 0.0).is_err());
    }

    #[test]
    fn expectations_and_sentiment() {
        assert_eq!(expectation(0.7, 0.0), 0.7);
        assert_relative_eq!(expectation(1.0, -0.1), 0.9);
        assert_relative_eq!(
            expectation(0.3, 0.1) + expectation(0.5, -0.4),
            expectation(0.8, -0.3),
            epsilon = 1e-15
        );
        let p = PolicyParams::new(0.02, 0.02, 1.5, 0.5, 1.0, 0.05, 0.8, 0.0).unwrap();
        assert_relative_eq!(sentiment_step(1.0, 0.0, &p), 0.8);
        let path = sentiment_path(1.0, &[0.0; 4], &p);
        for (t, v) in path.iter().enumerate() {
            assert_relative_eq!(*v, 0.8f64.powi(t as i32 + 1), max_relative = 1e-14);
        }
    }

    #[test]
    fn params_validation() {
        assert!(PolicyParams::new(0.02, 0.02, 1.5, 0.5, 1.0, 1.0, 0.8, 0.01).is_err());
        assert!(PolicyParams::new(0.02, 0.02, 1.5, 0.5, 0.0, 0.05, 0.8, 0.01).is_err());
        assert!(PolicyParams::new(0.02, 0.02, -1.5, 0.5, 1.0, 0.05, 0.8, 0.01).is_err());
        assert!(PolicyParams::new(0.02, 0.02, 1.5, 0.5, 1.0, 0.05, 1.0, 0.01).is_err());
    }
}
