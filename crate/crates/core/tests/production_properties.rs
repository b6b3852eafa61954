use kisces_core::numdiff::{central_relative, mixed_partial, rel_error, CROSS_REL_STEP};
use kisces_core::production::{
    cross_partial_k_kp, cross_partial_l_kp, factor_shares, marginal_products, output, Factor,
    FactorBundle, ProductionParams,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn params() -> impl Strategy<Value = ProductionParams> {
    (0.5f64..2.0, 0.05f64..0.9, 0.05f64..0.9, 0.1f64..0.95).prop_filter_map(
        "alphas must leave room for alpha_p",
        |(z, ak, al, sigma)| {
            let ap = 1.0 - ak - al;
            (ap > 0.02).then(|| ProductionParams::new(z, ak, al, ap, sigma).unwrap())
        },
    )
}

fn bundle() -> impl Strategy<Value = FactorBundle> {
    (0.1f64..10.0, 0.1f64..10.0, 0.1f64..10.0)
        .prop_map(|(k, l, kp)| FactorBundle::new(k, l, kp).unwrap())
}

proptest! {
    #[test]
    fn payments_exhaust_output(p in params(), f in bundle()) {
        let y = output(&f, &p);
        let mp = marginal_products(&f, &p);
        let paid = f.k() * mp.k + f.l() * mp.l + f.kp() * mp.kp;
        prop_assert!(rel_error(paid, y) < 1e-10);
    }

    #[test]
    fn degree_one_and_zero_homogeneity(p in params(), f in bundle(), s in 0.2f64..5.0) {
        let g = f.scaled(s).unwrap();
        prop_assert!(rel_error(output(&g, &p), s * output(&f, &p)) < 1e-12);
        let (a, b) = (marginal_products(&f, &p), marginal_products(&g, &p));
        for factor in Factor::ALL {
            prop_assert!(rel_error(b.get(factor), a.get(factor)) < 1e-10);
        }
    }

    #[test]
    fn shares_in_unit_interval(p in params(), f in bundle()) {
        let s = factor_shares(&f, &p);
        for v in [s.k, s.l, s.p] {
            prop_assert!(v > 0.0 && v < 1.0);
        }
    }

    #[test]
    fn output_increasing_in_each_factor(p in params(), f in bundle(), bump in 1.001f64..2.0) {
        let y = output(&f, &p);
        for factor in Factor::ALL {
            let g = f.with(factor, f.get(factor) * bump).unwrap();
            prop_assert!(output(&g, &p) > y);
        }
    }

    #[test]
    fn complements_for_sigma_below_one(p in params(), f in bundle()) {
        prop_assert!(cross_partial_k_kp(&f, &p) > 0.0);
        prop_assert!(cross_partial_l_kp(&f, &p) > 0.0);
    }
}

#[test]
fn shares_sum_to_one_on_seeded_sweep() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..1000 {
        let ak = rng.gen_range(0.05..0.6);
        let al = rng.gen_range(0.05..(0.95 - ak));
        let p = ProductionParams::new(
            rng.gen_range(0.5..2.0),
            ak,
            al,
            1.0 - ak - al,
            rng.gen_range(0.1..0.95),
        )
        .unwrap();
        let f = FactorBundle::new(
            rng.gen_range(0.1..10.0),
            rng.gen_range(0.1..10.0),
            rng.gen_range(0.1..10.0),
        )
        .unwrap();
        assert!((factor_shares(&f, &p).sum() - 1.0).abs() < 1e-10);
    }
}

#[test]
fn cross_partial_matches_stencil_at_calibration() {
    let p = ProductionParams::default();
    let f = FactorBundle::new(3.0, 1.0, 0.5).unwrap();
    let fd = mixed_partial(
        |k, kp| output(&FactorBundle::new(k, f.l(), kp).unwrap(), &p),
        f.k(),
        f.kp(),
        CROSS_REL_STEP * f.k(),
        CROSS_REL_STEP * f.kp(),
    );
    assert!(rel_error(fd, cross_partial_k_kp(&f, &p)) < 1e-4);

    // Differentiating the analytic MPK numerically in KP is a second route.
    let mpk_in_kp = central_relative(
        |kp| marginal_products(&f.with(Factor::PublicCapital, kp).unwrap(), &p).k,
        f.kp(),
        1e-6,
    );
    assert!(rel_error(mpk_in_kp, cross_partial_k_kp(&f, &p)) < 1e-6);
}
