//! Three-factor CES production.
//!
//! ```text
//! Y = Z [a_K K^rho + a_L L^rho + a_P KP^rho]^(1/rho),   rho = (sigma - 1) / sigma
//! ```
//!
//! With `sigma < 1` (`rho < 0`) the three factors are gross complements: more
//! public capital raises the marginal product of private capital and labor.

use crate::error::{positive, ModelError, Result};

const ALPHA_SUM_TOL: f64 = 1e-12;
const RHO_CONSISTENCY_TOL: f64 = 1e-12;

/// CES technology parameters. `rho` is stored alongside `sigma_prod` and
/// checked for consistency on construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProductionParams {
    z: f64,
    alpha_k: f64,
    alpha_l: f64,
    alpha_p: f64,
    sigma_prod: f64,
    rho: f64,
}

impl ProductionParams {
    pub fn new(z: f64, alpha_k: f64, alpha_l: f64, alpha_p: f64, sigma_prod: f64) -> Result<Self> {
        positive("sigma_prod", sigma_prod)?;
        Self::with_rho(
            z,
            alpha_k,
            alpha_l,
            alpha_p,
            sigma_prod,
            rho_from_sigma(sigma_prod),
        )
    }

    /// Builds parameters from an externally supplied `rho`, which must agree
    /// with `sigma_prod` to 1e-12.
    pub fn with_rho(
        z: f64,
        alpha_k: f64,
        alpha_l: f64,
        alpha_p: f64,
        sigma_prod: f64,
        rho: f64,
    ) -> Result<Self> {
        positive("z", z)?;
        positive("alpha_k", alpha_k)?;
        positive("alpha_l", alpha_l)?;
        positive("alpha_p", alpha_p)?;
        positive("sigma_prod", sigma_prod)?;
        let sum = alpha_k + alpha_l + alpha_p;
        if (sum - 1.0).abs() > ALPHA_SUM_TOL {
            return Err(ModelError::Inconsistent {
                fields: "alpha_k+alpha_l+alpha_p",
                reason: format!("distribution parameters sum to {sum}, expected 1"),
            });
        }
        if !rho.is_finite() || rho == 0.0 || rho >= 1.0 {
            return Err(ModelError::domain(
                "rho",
                rho,
                "must be finite, below 1 and non-zero (sigma_prod = 1 is Cobb-Douglas)",
            ));
        }
        let implied = rho_from_sigma(sigma_prod);
        if (rho - implied).abs() > RHO_CONSISTENCY_TOL {
            return Err(ModelError::Inconsistent {
                fields: "rho,sigma_prod",
                reason: format!("rho = {rho} but sigma_prod implies {implied}"),
            });
        }
        Ok(Self {
            z,
            alpha_k,
            alpha_l,
            alpha_p,
            sigma_prod,
            rho,
        })
    }

    pub fn z(&self) -> f64 {
        self.z
    }
    pub fn alpha_k(&self) -> f64 {
        self.alpha_k
    }
    pub fn alpha_l(&self) -> f64 {
        self.alpha_l
    }
    pub fn alpha_p(&self) -> f64 {
        self.alpha_p
    }
    pub fn sigma_prod(&self) -> f64 {
        self.sigma_prod
    }
    pub fn rho(&self) -> f64 {
        self.rho
    }

    pub fn alpha(&self, factor: Factor) -> f64 {
        match factor {
            Factor::PrivateCapital => self.alpha_k,
            Factor::Labor => self.alpha_l,
            Factor::PublicCapital => self.alpha_p,
        }
    }

    /// Returns a copy with a different total factor productivity.
    pub fn with_z(&self, z: f64) -> Result<Self> {
        Self::with_rho(
            z,
            self.alpha_k,
            self.alpha_l,
            self.alpha_p,
            self.sigma_prod,
            self.rho,
        )
    }
}

impl Default for ProductionParams {
    /// `Z = 1`, `alpha = (0.35, 0.55, 0.10)`, `sigma_prod = 0.6`.
    fn default() -> Self {
        Self::new(1.0, 0.35, 0.55, 0.10, 0.6).expect("default production calibration is valid")
    }
}

pub fn rho_from_sigma(sigma_prod: f64) -> f64 {
    (sigma_prod - 1.0) / sigma_prod
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Factor {
    PrivateCapital,
    Labor,
    PublicCapital,
}

impl Factor {
    pub const ALL: [Factor; 3] = [Factor::PrivateCapital, Factor::Labor, Factor::PublicCapital];

    pub fn key(self) -> &'static str {
        match self {
            Factor::PrivateCapital => "k",
            Factor::Labor => "l",
            Factor::PublicCapital => "kp",
        }
    }
}

/// Strictly positive factor inputs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FactorBundle {
    k: f64,
    l: f64,
    kp: f64,
}

impl FactorBundle {
    pub fn new(k: f64, l: f64, kp: f64) -> Result<Self> {
        Ok(Self {
            k: positive("k", k)?,
            l: positive("l", l)?,
            kp: positive("kp", kp)?,
        })
    }

    pub fn k(&self) -> f64 {
        self.k
    }
    pub fn l(&self) -> f64 {
        self.l
    }
    pub fn kp(&self) -> f64 {
        self.kp
    }

    pub fn get(&self, factor: Factor) -> f64 {
        match factor {
            Factor::PrivateCapital => self.k,
            Factor::Labor => self.l,
            Factor::PublicCapital => self.kp,
        }
    }

    /// Returns a copy with one factor replaced.
    pub fn with(&self, factor: Factor, value: f64) -> Result<Self> {
        let mut next = *self;
        match factor {
            Factor::PrivateCapital => next.k = positive("k", value)?,
            Factor::Labor => next.l = positive("l", value)?,
            Factor::PublicCapital => next.kp = positive("kp", value)?,
        }
        Ok(next)
    }

    pub fn scaled(&self, s: f64) -> Result<Self> {
        Self::new(self.k * s, self.l * s, self.kp * s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MarginalProducts {
    pub k: f64,
    pub l: f64,
    pub kp: f64,
}

impl MarginalProducts {
    pub fn get(&self, factor: Factor) -> f64 {
        match factor {
            Factor::PrivateCapital => self.k,
            Factor::Labor => self.l,
            Factor::PublicCapital => self.kp,
        }
    }
}

/// Income shares `X * MP_X / Y`. They sum to one by Euler's theorem.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FactorShares {
    pub k: f64,
    pub l: f64,
    pub p: f64,
}

impl FactorShares {
    pub fn sum(&self) -> f64 {
        self.k + self.l + self.p
    }
}

fn bracket(f: &FactorBundle, p: &ProductionParams) -> f64 {
    let rho = p.rho;
    p.alpha_k * f.k.powf(rho) + p.alpha_l * f.l.powf(rho) + p.alpha_p * f.kp.powf(rho)
}

pub fn output(f: &FactorBundle, p: &ProductionParams) -> f64 {
    p.z * bracket(f, p).powf(1.0 / p.rho)
}

/// `MP_X = alpha_X Z^rho (Y / X)^(1 - rho)`.
pub fn marginal_products(f: &FactorBundle, p: &ProductionParams) -> MarginalProducts {
    let y = output(f, p);
    marginal_products_at(f, p, y)
}

fn marginal_products_at(f: &FactorBundle, p: &ProductionParams, y: f64) -> MarginalProducts {
    let scale = p.z.powf(p.rho);
    let mp = |alpha: f64, x: f64| alpha * scale * (y / x).powf(1.0 - p.rho);
    MarginalProducts {
        k: mp(p.alpha_k, f.k),
        l: mp(p.alpha_l, f.l),
        kp: mp(p.alpha_p, f.kp),
    }
}

pub fn factor_shares(f: &FactorBundle, p: &ProductionParams) -> FactorShares {
    let y = output(f, p);
    let mp = marginal_products_at(f, p, y);
    FactorShares {
        k: f.k * mp.k / y,
        l: f.l * mp.l / y,
        p: f.kp * mp.kp / y,
    }
}

/// Mixed partial `d²Y / dX dW` for two distinct factors, obtained by
/// differentiating `MP_X` with respect to `W`:
///
/// `alpha_X Z^rho (1 - rho) Y^(-rho) X^(rho - 1) MP_W`.
///
/// Positive for every valid input since `1 - rho = 1 / sigma_prod > 0`.
pub fn cross_partial(f: &FactorBundle, p: &ProductionParams, x: Factor, w: Factor) -> Result<f64> {
    if x == w {
        return Err(ModelError::Inconsistent {
            fields: "factor",
            reason: format!("cross partial needs two distinct factors, got {x:?} twice"),
        });
    }
    let y = output(f, p);
    let mp = marginal_products_at(f, p, y);
    let rho = p.rho;
    Ok(p.alpha(x)
        * p.z.powf(rho)
        * (1.0 - rho)
        * y.powf(-rho)
        * f.get(x).powf(rho - 1.0)
        * mp.get(w))
}

/// `d²Y / dK dKP`.
pub fn cross_partial_k_kp(f: &FactorBundle, p: &ProductionParams) -> f64 {
    cross_partial(f, p, Factor::PrivateCapital, Factor::PublicCapital).expect("distinct factors")
}

/// `d²Y / dL dKP`.
pub fn cross_partial_l_kp(f: &FactorBundle, p: &ProductionParams) -> f64 {
    cross_partial(f, p, Factor::Labor, Factor::PublicCapital).expect("distinct factors")
}
