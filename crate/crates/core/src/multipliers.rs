//! Structural fiscal multipliers.
//!
//! Totally differentiating `Y = C + I + G^C + G^I` with a linear investment
//! rule gives, for a spending instrument with direct output impact `n`,
//!
//! ```text
//! m = n / (1 - mpc_agg - mpi (1 - kappa m))
//! ```
//!
//! where `kappa >= 0` is the composite interest-rate feedback (the rate
//! sensitivity of investment times `dr/dY`). Outside the ZLB, higher output
//! raises the policy rate and crowds investment out, so the feedback lowers
//! the multiplier; at the ZLB `kappa = 0`. The relation is implicit in `m`
//! and is solved as the quadratic
//!
//! ```text
//! mpi kappa m^2 + (1 - mpc_agg - mpi) m - n = 0
//! ```
//!
//! taking the positive root, which is the branch continuous with
//! `n / (1 - mpc_agg - mpi)` at `kappa = 0`.
//!
//! Public investment has `n = 1 + MPK_P` (its demand effect plus the output of
//! the public capital it adds); public consumption has `n = 1`.

use crate::error::{finite, non_negative, ModelError, Result};
use crate::policy::{is_zlb, PolicyParams};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MultiplierInputs {
    mpc_agg: f64,
    mpi: f64,
    mpk_p: f64,
    kappa: f64,
}

impl MultiplierInputs {
    pub fn new(mpc_agg: f64, mpi: f64, mpk_p: f64, kappa: f64) -> Result<Self> {
        if !(mpc_agg > 0.0 && mpc_agg < 1.0) {
            return Err(ModelError::domain("mpc_agg", mpc_agg, "must lie in (0, 1)"));
        }
        non_negative("mpi", mpi)?;
        non_negative("mpk_p", mpk_p)?;
        non_negative("kappa", kappa)?;
        finite("mpk_p", mpk_p)?;
        if mpc_agg + mpi >= 1.0 {
            return Err(ModelError::DivergentMultiplier(format!(
                "mpc_agg + mpi = {} >= 1: the Keynesian denominator is not positive",
                mpc_agg + mpi
            )));
        }
        Ok(Self {
            mpc_agg,
            mpi,
            mpk_p,
            kappa,
        })
    }

    pub fn mpc_agg(&self) -> f64 {
        self.mpc_agg
    }
    pub fn mpi(&self) -> f64 {
        self.mpi
    }
    pub fn mpk_p(&self) -> f64 {
        self.mpk_p
    }
    pub fn kappa(&self) -> f64 {
        self.kappa
    }

    pub fn with_kappa(&self, kappa: f64) -> Result<Self> {
        Self::new(self.mpc_agg, self.mpi, self.mpk_p, kappa)
    }

    /// `1 - mpc_agg - mpi`, positive by construction.
    pub fn leakage(&self) -> f64 {
        1.0 - self.mpc_agg - self.mpi
    }
}

/// Positive root of `mpi kappa m^2 + leakage m - numerator = 0`, written as
/// `2 n / (leakage + sqrt(leakage^2 + 4 mpi kappa n))` so that it stays
/// accurate (and exact) as `kappa -> 0`.
fn implicit_multiplier(numerator: f64, m: &MultiplierInputs) -> Result<f64> {
    let leakage = m.leakage();
    let curvature = m.mpi * m.kappa;
    if curvature == 0.0 {
        // Scale the unit multiplier so m_GI = (1 + MPK_P) m_GC holds bit for bit.
        return Ok(numerator * leakage.recip());
    }
    let disc = leakage * leakage + 4.0 * curvature * numerator;
    let root = 2.0 * numerator / (leakage + disc.sqrt());
    if root.is_finite() && root > 0.0 {
        Ok(root)
    } else {
        Err(ModelError::DivergentMultiplier(format!(
            "no positive finite root (numerator {numerator}, leakage {leakage}, mpi*kappa {curvature})"
        )))
    }
}

/// Public investment multiplier, numerator `1 + MPK_P`.
pub fn investment_multiplier(m: &MultiplierInputs) -> Result<f64> {
    implicit_multiplier(1.0 + m.mpk_p, m)
}

/// Public consumption multiplier, numerator `1`.
pub fn consumption_multiplier(m: &MultiplierInputs) -> Result<f64> {
    implicit_multiplier(1.0, m)
}

/// Composite feedback for the current monetary regime.
///
/// At the ZLB the rate does not respond to output and the feedback is zero.
/// Otherwise `kappa = b_slope * dr/dY` with the Taylor slope passed through
/// the Fisher equation: `dr/dY = phi_y / (y_pot (1 + E[pi]))`.
pub fn regime_kappa(
    pi: f64,
    expected_inflation: f64,
    y: f64,
    p: &PolicyParams,
    b_slope: f64,
) -> Result<f64> {
    non_negative("b_slope", b_slope)?;
    if !(expected_inflation > -1.0) || !expected_inflation.is_finite() {
        return Err(ModelError::domain(
            "expected_inflation",
            expected_inflation,
            "must exceed -1",
        ));
    }
    if is_zlb(pi, y, p)? {
        return Ok(0.0);
    }
    Ok(b_slope * p.phi_y() / (p.y_pot() * (1.0 + expected_inflation)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn keynesian_cross_limits() {
        let m = MultiplierInputs::new(0.5, 0.0, 0.0, 0.0).unwrap();
        assert_eq!(investment_multiplier(&m).unwrap(), 2.0);
        assert_eq!(consumption_multiplier(&m).unwrap(), 2.0);

        let m = MultiplierInputs::new(0.5, 0.1, 0.1, 0.0).unwrap();
        assert_relative_eq!(
            investment_multiplier(&m).unwrap(),
            2.75,
            max_relative = 1e-15
        );
        assert_relative_eq!(
            consumption_multiplier(&m).unwrap(),
            2.5,
            max_relative = 1e-15
        );
    }

    #[test]
    fn feedback_root_solves_quadratic() {
        let m = MultiplierInputs::new(0.5, 0.1, 0.1, 0.05).unwrap();
        let root = investment_multiplier(&m).unwrap();
        let residual = m.mpi() * m.kappa() * root * root + m.leakage() * root - 1.1;
        assert!(residual.abs() < 1e-14);
        assert!(root < 2.75);
    }

    #[test]
    fn divergent_inputs_rejected() {
        assert!(matches!(
            MultiplierInputs::new(0.8, 0.2, 0.0, 0.0).unwrap_err(),
            ModelError::DivergentMultiplier(_)
        ));
        assert!(MultiplierInputs::new(1.0, 0.0, 0.0, 0.0).is_err());
        assert!(MultiplierInputs::new(0.5, -0.1, 0.0, 0.0).is_err());
        assert!(MultiplierInputs::new(0.5, 0.1, 0.0, f64::NAN).is_err());
    }

    #[test]
    fn regime_switch() {
        let p = PolicyParams::default();
        assert_eq!(regime_kappa(0.0, 0.0, 0.8, &p, 2.0).unwrap(), 0.0);
        let flat = PolicyParams::new(0.02, 0.02, 1.5, 0.0, 1.0, 0.05, 0.8, 0.01).unwrap();
        assert_eq!(regime_kappa(0.02, 0.02, 1.0, &flat, 2.0).unwrap(), 0.0);
        let k = regime_kappa(0.02, 0.02, 1.0, &p, 2.0).unwrap();
        assert_relative_eq!(k, 2.0 * 0.5 / 1.02, max_relative = 1e-15);
    }
}
