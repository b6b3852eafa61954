//! WebAssembly bindings for the static demo page in `www/`.
//!
//! Each export has a plain Rust twin returning `Result<_, String>` so the
//! numerics can be tested natively.

// `!(x > 0.0)` style checks are deliberate: NaN must fail them.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

use kisces_core::multipliers::{consumption_multiplier, investment_multiplier, MultiplierInputs};
use kisces_core::production::{
    cross_partial_k_kp, marginal_products, FactorBundle, ProductionParams,
};
use kisces_core::scenario::{builtin_scenarios, run_scenarios, CalibratedElasticities};
use wasm_bindgen::prelude::*;

fn text(e: impl std::fmt::Display) -> String {
    e.to_string()
}

/// Output effect of the eight built-in scenarios, followed by the four
/// channel contributions of each (row-major, 8 x 5 values).
pub fn scenario_table(m_gc: f64, m_gi: f64, eta: f64, chi: f64) -> Result<Vec<f64>, String> {
    let e = CalibratedElasticities::new(m_gc, m_gi, eta, chi).map_err(text)?;
    Ok(run_scenarios(&builtin_scenarios(), &e)
        .iter()
        .flat_map(|r| {
            let d = &r.decomposition;
            [
                r.y_hat,
                d.government_consumption,
                d.government_investment,
                d.net_exports,
                d.wealth,
            ]
        })
        .collect())
}

/// Samples `n` public-capital levels on `(0, kp_max]` and returns triples
/// `(K^P, MPK, d2Y/dK dK^P)` for the default shares at substitution
/// elasticity `sigma`.
pub fn complementarity_curve(
    sigma: f64,
    k: f64,
    l: f64,
    kp_max: f64,
    n: usize,
) -> Result<Vec<f64>, String> {
    let p = ProductionParams::new(1.0, 0.35, 0.55, 0.10, sigma).map_err(text)?;
    if !(kp_max > 0.0) || n < 2 {
        return Err("need kp_max > 0 and at least two points".into());
    }
    let mut out = Vec::with_capacity(3 * n);
    for i in 1..=n {
        let kp = kp_max * i as f64 / n as f64;
        let f = FactorBundle::new(k, l, kp).map_err(text)?;
        out.extend([kp, marginal_products(&f, &p).k, cross_partial_k_kp(&f, &p)]);
    }
    Ok(out)
}

/// Triples `(kappa, m_GC, m_GI)` for `n` feedback strengths on `[0, kappa_max]`.
/// `kappa = 0` is the zero-lower-bound regime.
pub fn multiplier_curve(
    mpc_agg: f64,
    mpi: f64,
    mpk_p: f64,
    kappa_max: f64,
    n: usize,
) -> Result<Vec<f64>, String> {
    if !(kappa_max >= 0.0) || n < 2 {
        return Err("need kappa_max >= 0 and at least two points".into());
    }
    let mut out = Vec::with_capacity(3 * n);
    for i in 0..n {
        let kappa = kappa_max * i as f64 / (n - 1) as f64;
        let m = MultiplierInputs::new(mpc_agg, mpi, mpk_p, kappa).map_err(text)?;
        out.extend([
            kappa,
            consumption_multiplier(&m).map_err(text)?,
            investment_multiplier(&m).map_err(text)?,
        ]);
    }
    Ok(out)
}

#[wasm_bindgen(js_name = scenarioTable)]
pub fn scenario_table_js(m_gc: f64, m_gi: f64, eta: f64, chi: f64) -> Result<Vec<f64>, JsError> {
    scenario_table(m_gc, m_gi, eta, chi).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = scenarioLabels)]
pub fn scenario_labels_js() -> String {
    builtin_scenarios()
        .iter()
        .map(|s| s.label().to_string())
        .collect::<Vec<_>>()
        .join(",")
}

#[wasm_bindgen(js_name = complementarityCurve)]
pub fn complementarity_curve_js(
    sigma: f64,
    k: f64,
    l: f64,
    kp_max: f64,
    n: usize,
) -> Result<Vec<f64>, JsError> {
    complementarity_curve(sigma, k, l, kp_max, n).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = multiplierCurve)]
pub fn multiplier_curve_js(
    mpc_agg: f64,
    mpi: f64,
    mpk_p: f64,
    kappa_max: f64,
    n: usize,
) -> Result<Vec<f64>, JsError> {
    multiplier_curve(mpc_agg, mpi, mpk_p, kappa_max, n).map_err(|e| JsError::new(&e))
}
