use kisces_core::multipliers::{
    consumption_multiplier, investment_multiplier, regime_kappa, MultiplierInputs,
};
use kisces_core::policy::PolicyParams;
use proptest::prelude::*;

/// Iterates `m <- n / (leakage + mpi kappa m)` from the kappa = 0 value.
fn fixed_point(numerator: f64, m: &MultiplierInputs) -> Option<f64> {
    let leakage = 1.0 - m.mpc_agg() - m.mpi();
    let mut x = numerator / leakage;
    for _ in 0..100_000 {
        let next = numerator / (leakage + m.mpi() * m.kappa() * x);
        if (next - x).abs() <= 1e-15 * next.abs() {
            return Some(next);
        }
        x = next;
    }
    None
}

#[test]
fn quadratic_root_matches_iteration_worked_example() {
    let m = MultiplierInputs::new(0.5, 0.1, 0.1, 0.05).unwrap();
    let iterated = fixed_point(1.1, &m).unwrap();
    assert!((investment_multiplier(&m).unwrap() - iterated).abs() < 1e-10);
}

fn inputs() -> impl Strategy<Value = MultiplierInputs> {
    (0.05f64..0.9, 0.0f64..0.3, 0.0f64..1.0, 0.0f64..5.0)
        .prop_filter_map("finite multiplier", |(mpc, mpi, mpk, kappa)| {
            MultiplierInputs::new(mpc, mpi, mpk, kappa).ok()
        })
}

proptest! {
    #[test]
    fn root_matches_fixed_point(m in inputs()) {
        let inv = investment_multiplier(&m).unwrap();
        let con = consumption_multiplier(&m).unwrap();
        if let Some(it) = fixed_point(1.0 + m.mpk_p(), &m) {
            prop_assert!((inv - it).abs() < 1e-10);
        }
        if let Some(it) = fixed_point(1.0, &m) {
            prop_assert!((con - it).abs() < 1e-10);
        }
    }

    #[test]
    fn investment_dominates_consumption(m in inputs()) {
        let inv = investment_multiplier(&m).unwrap();
        let con = consumption_multiplier(&m).unwrap();
        prop_assert!(inv > 0.0 && con > 0.0);
        if m.mpk_p() > 0.0 {
            prop_assert!(inv > con);
        }
        if m.kappa() == 0.0 {
            prop_assert!((inv - (1.0 + m.mpk_p()) * con).abs() <= 1e-12 * inv);
        }
    }

    #[test]
    fn monotone_in_mpc_and_kappa(m in inputs(), d in 0.001f64..0.05) {
        let inv = investment_multiplier(&m).unwrap();
        let con = consumption_multiplier(&m).unwrap();
        if let Ok(more_mpc) = MultiplierInputs::new(m.mpc_agg() + d, m.mpi(), m.mpk_p(), m.kappa()) {
            prop_assert!(investment_multiplier(&more_mpc).unwrap() > inv);
            prop_assert!(consumption_multiplier(&more_mpc).unwrap() > con);
        }
        let more_kappa = m.with_kappa(m.kappa() + d).unwrap();
        prop_assert!(investment_multiplier(&more_kappa).unwrap() <= inv);
        prop_assert!(consumption_multiplier(&more_kappa).unwrap() <= con);
    }
}

#[test]
fn zlb_multiplier_at_least_normal() {
    let p = PolicyParams::default();
    // Slump: pi = 0, output 10% below potential -> unclamped rate -0.04.
    let k_zlb = regime_kappa(0.0, 0.0, 0.9, &p, 1.5).unwrap();
    let k_normal = regime_kappa(0.02, 0.02, 1.0, &p, 1.5).unwrap();
    assert_eq!(k_zlb, 0.0);
    assert!(k_normal > 0.0);
    let base = MultiplierInputs::new(0.5, 0.1, 0.3, 0.0).unwrap();
    let zlb = investment_multiplier(&base.with_kappa(k_zlb).unwrap()).unwrap();
    let normal = investment_multiplier(&base.with_kappa(k_normal).unwrap()).unwrap();
    assert!(zlb > normal);
}
