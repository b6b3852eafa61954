//! Household blocks.
//!
//! Liquidity-constrained (LC) households consume their income. Wealth
//! accumulating (WA) households maximise
//!
//! ```text
//! sum beta^t [ (C - c_min)^(1-sigma_c) / (1-sigma_c) + phi A'^(1-gamma) / (1-gamma) ]
//! s.t. A' = (1 + r)(A + Y - C)
//! ```
//!
//! whose optimality condition is the modified Euler equation
//!
//! ```text
//! (C - c_min)^(-sigma_c) = (1 + r) phi A'^(-gamma) + beta (1 + r) E[(C' - c_min)^(-sigma_c)]
//! ```

use crate::error::{non_negative, positive, ModelError, Result};
use crate::roots::bracketed_newton;

const SOLVER_X_TOL: f64 = 1e-15;
const SOLVER_MAX_ITER: usize = 400;
const BRACKET_MAX_STEPS: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HouseholdParams {
    beta: f64,
    sigma_c: f64,
    gamma: f64,
    phi: f64,
    c_min: f64,
    lambda: f64,
}

impl HouseholdParams {
    pub fn new(
        beta: f64,
        sigma_c: f64,
        gamma: f64,
        phi: f64,
        c_min: f64,
        lambda: f64,
    ) -> Result<Self> {
        if !(beta > 0.0 && beta < 1.0) {
            return Err(ModelError::domain("beta", beta, "must lie in (0, 1)"));
        }
        if !(0.0..=1.0).contains(&lambda) {
            return Err(ModelError::domain("lambda", lambda, "must lie in [0, 1]"));
        }
        Ok(Self {
            beta,
            sigma_c: positive("sigma_c", sigma_c)?,
            gamma: positive("gamma", gamma)?,
            phi: non_negative("phi", phi)?,
            c_min: non_negative("c_min", c_min)?,
            lambda,
        })
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }
    pub fn sigma_c(&self) -> f64 {
        self.sigma_c
    }
    pub fn gamma(&self) -> f64 {
        self.gamma
    }
    pub fn phi(&self) -> f64 {
        self.phi
    }
    pub fn c_min(&self) -> f64 {
        self.c_min
    }
    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn with_phi(&self, phi: f64) -> Result<Self> {
        Self::new(
            self.beta,
            self.sigma_c,
            self.gamma,
            phi,
            self.c_min,
            self.lambda,
        )
    }

    pub fn with_lambda(&self, lambda: f64) -> Result<Self> {
        Self::new(
            self.beta,
            self.sigma_c,
            self.gamma,
            self.phi,
            self.c_min,
            lambda,
        )
    }

    /// Marginal utility of consumption `(C - c_min)^(-sigma_c)`.
    pub fn marginal_utility(&self, c: f64) -> f64 {
        (c - self.c_min).powf(-self.sigma_c)
    }
}

impl Default for HouseholdParams {
    fn default() -> Self {
        Self::new(0.96, 1.5, 2.0, 0.05, 0.1, 0.45).expect("default household calibration is valid")
    }
}

/// One period of a WA household: assets carried in, disposable income,
/// consumption and assets carried out.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WaState {
    pub assets: f64,
    pub income: f64,
    pub consumption: f64,
    pub assets_next: f64,
}

impl WaState {
    pub fn new(assets: f64, income: f64, consumption: f64, assets_next: f64) -> Result<Self> {
        if !assets.is_finite() {
            return Err(ModelError::domain("assets", assets, "must be finite"));
        }
        Ok(Self {
            assets,
            income: positive("income", income)?,
            consumption: positive("consumption", consumption)?,
            assets_next: positive("assets_next", assets_next)?,
        })
    }

    fn check(&self, p: &HouseholdParams) -> Result<()> {
        if !(self.consumption > p.c_min) {
            return Err(ModelError::domain(
                "consumption",
                self.consumption,
                "must exceed subsistence consumption c_min",
            ));
        }
        if !(self.assets_next > 0.0) {
            return Err(ModelError::domain(
                "assets_next",
                self.assets_next,
                "must be > 0 for the wealth term of utility",
            ));
        }
        Ok(())
    }
}

fn check_rate(r: f64) -> Result<()> {
    if r.is_finite() && 1.0 + r > 0.0 {
        Ok(())
    } else {
        Err(ModelError::domain("r", r, "1 + r must be positive"))
    }
}

/// LC consumption: the whole income is spent.
pub fn lc_consumption(y: f64) -> Result<f64> {
    non_negative("income", y)
}

/// Budget identity residual `A' - (1 + r)(A + Y - C)`.
pub fn budget_residual(s: &WaState, r: f64) -> f64 {
    s.assets_next - (1.0 + r) * (s.assets + s.income - s.consumption)
}

/// Modified Euler residual
/// `(C - c_min)^(-sigma_c) - (1 + r) phi A'^(-gamma) - beta (1 + r) e_term`,
/// where `e_term` is the expected next-period marginal utility.
pub fn euler_residual(s: &WaState, r: f64, e_term: f64, p: &HouseholdParams) -> Result<f64> {
    check_rate(r)?;
    non_negative("e_term", e_term)?;
    s.check(p)?;
    let gross = 1.0 + r;
    Ok(p.marginal_utility(s.consumption)
        - gross * p.phi * s.assets_next.powf(-p.gamma)
        - p.beta * gross * e_term)
}

/// Stationary WA state at income `y` and real rate `r`.
///
/// Substituting the stationary budget `C = y + r A / (1 + r)` into the
/// stationary Euler equation leaves one equation in `A`, solved here in log
/// form
///
/// ```text
/// g(A) = gamma ln A - sigma_c ln(C(A) - c_min) + ln(1 - beta(1+r)) - ln((1+r) phi)
/// ```
///
/// which tends to `-inf` as `A -> 0`. The bracket is grown geometrically from
/// `A = y` and the root polished by safeguarded Newton.
pub fn wa_steady_state(y: f64, r: f64, p: &HouseholdParams) -> Result<WaState> {
    check_rate(r)?;
    positive("income", y)?;
    if p.phi == 0.0 {
        return Err(ModelError::IndeterminateSteadyState);
    }
    let patience = p.beta * (1.0 + r);
    if patience >= 1.0 {
        return Err(ModelError::NoInteriorSteadyState(patience));
    }
    if y <= p.c_min {
        return Err(ModelError::domain(
            "income",
            y,
            "must exceed subsistence consumption c_min",
        ));
    }

    let gross = 1.0 + r;
    let drift = r / gross;
    let constant = (1.0 - patience).ln() - (gross * p.phi).ln();
    let consumption = |a: f64| y + drift * a;
    let g = |a: f64| {
        let slack = consumption(a) - p.c_min;
        if slack <= 0.0 {
            return (f64::INFINITY, f64::INFINITY);
        }
        let value = p.gamma * a.ln() - p.sigma_c * slack.ln() + constant;
        let slope = p.gamma / a - p.sigma_c * drift / slack;
        (value, slope)
    };

    // With r < 0 consumption falls in A and hits c_min at a_cap.
    let a_cap = if r < 0.0 {
        (y - p.c_min) / -drift
    } else {
        f64::INFINITY
    };

    let mut lo = y.min(0.5 * a_cap);
    let mut steps = 0;
    while g(lo).0 >= 0.0 {
        lo *= 0.5;
        steps += 1;
        if steps > BRACKET_MAX_STEPS || lo < f64::MIN_POSITIVE {
            return Err(ModelError::Convergence(format!(
                "steady state: could not bracket from below (y = {y}, r = {r}, last A = {lo:e}, g = {:e})",
                g(lo).0
            )));
        }
    }
    let mut hi = lo;
    steps = 0;
    while g(hi).0 <= 0.0 {
        hi = if a_cap.is_finite() {
            0.5 * (hi + a_cap)
        } else {
            hi * 2.0
        };
        steps += 1;
        if steps > BRACKET_MAX_STEPS || !hi.is_finite() {
            return Err(ModelError::Convergence(format!(
                "steady state: could not bracket from above (y = {y}, r = {r}, last A = {hi:e}, g = {:e}); \
                 the Euler residual may not change sign when gamma <= sigma_c",
                g(hi).0
            )));
        }
    }

    let assets = bracketed_newton(g, lo, hi, SOLVER_X_TOL, SOLVER_MAX_ITER)?;
    WaState::new(assets, y, consumption(assets), assets)
}

/// Closed-form WA marginal propensity to consume out of a transitory,
/// unexpected income change: `N / (D + N)` with
/// `N = (1+r)^2 phi gamma A'^(-gamma-1)` and `D = sigma_c (C - c_min)^(-sigma_c-1)`.
///
/// Returns exactly 0 when `phi = 0` (the numerator vanishes).
pub fn mpc_closed_form(s: &WaState, r: f64, p: &HouseholdParams) -> Result<f64> {
    check_rate(r)?;
    s.check(p)?;
    if p.phi == 0.0 {
        return Ok(0.0);
    }
    let n = (1.0 + r).powi(2) * p.phi * p.gamma * s.assets_next.powf(-p.gamma - 1.0);
    let d = p.sigma_c * (s.consumption - p.c_min).powf(-p.sigma_c - 1.0);
    Ok(n / (d + n))
}

/// Solves one period of the WA problem with beginning-of-period assets and
/// the expectation term held fixed: finds `C` such that the Euler residual is
/// zero with `A' = (1 + r)(assets + y - C)`.
///
/// The residual is strictly decreasing in `C` on `(c_min, assets + y)` and
/// runs from `+inf` to `-inf`, so the root is unique.
pub fn solve_period(
    assets: f64,
    y: f64,
    r: f64,
    e_term: f64,
    p: &HouseholdParams,
) -> Result<WaState> {
    check_rate(r)?;
    positive("income", y)?;
    non_negative("e_term", e_term)?;
    let gross = 1.0 + r;
    let cash = assets + y;
    if !(cash > p.c_min) {
        return Err(ModelError::domain(
            "income",
            y,
            "assets + income must exceed subsistence consumption c_min",
        ));
    }
    if p.phi == 0.0 && e_term == 0.0 {
        return Err(ModelError::Inconsistent {
            fields: "phi,e_term",
            reason: "with phi = 0 and no expected marginal utility there is no interior choice"
                .into(),
        });
    }

    let h = |c: f64| {
        let slack = c - p.c_min;
        let a_next = gross * (cash - c);
        if slack <= 0.0 {
            return (f64::INFINITY, f64::NEG_INFINITY);
        }
        if a_next <= 0.0 {
            return (f64::NEG_INFINITY, f64::NEG_INFINITY);
        }
        let mu = slack.powf(-p.sigma_c);
        let wealth = gross * p.phi * a_next.powf(-p.gamma);
        let value = mu - wealth - p.beta * gross * e_term;
        let slope = -p.sigma_c * mu / slack - p.gamma * gross * wealth / a_next;
        (value, slope)
    };

    let consumption = bracketed_newton(h, p.c_min, cash, SOLVER_X_TOL, SOLVER_MAX_ITER)?;
    let assets_next = gross * (cash - consumption);
    WaState::new(assets, y, consumption, assets_next)
}

/// Re-solving MPC oracle around an arbitrary state: holds `state.assets`
/// and the expectation term fixed, re-solves the period at `y ± h` and
/// returns the central difference of consumption.
pub fn mpc_oracle_at(
    state: &WaState,
    r: f64,
    e_term: f64,
    p: &HouseholdParams,
    h: f64,
) -> Result<f64> {
    positive("h", h)?;
    let up = solve_period(state.assets, state.income + h, r, e_term, p)?;
    let down = solve_period(state.assets, state.income - h, r, e_term, p)?;
    Ok((up.consumption - down.consumption) / (2.0 * h))
}

/// MPC oracle at the steady state for income `y`: the expectation term is
/// frozen at its steady-state value `(C - c_min)^(-sigma_c)`.
pub fn mpc_oracle(y: f64, r: f64, p: &HouseholdParams, h: f64) -> Result<f64> {
    let ss = wa_steady_state(y, r, p)?;
    let e_term = p.marginal_utility(ss.consumption);
    mpc_oracle_at(&ss, r, e_term, p, h)
}

/// Population-weighted MPC: `lambda * 1 + (1 - lambda) * mpc_wa`.
pub fn aggregate_mpc(mpc_wa: f64, p: &HouseholdParams) -> Result<f64> {
    if !(0.0..=1.0).contains(&mpc_wa) {
        return Err(ModelError::domain("mpc_wa", mpc_wa, "must lie in [0, 1]"));
    }
    Ok(p.lambda + (1.0 - p.lambda) * mpc_wa)
}
