use kisces_web::{complementarity_curve, multiplier_curve, scenario_table};

#[test]
fn scenario_table_rows_add_up() {
    let t = scenario_table(0.9, 1.6, 0.15, 0.2).unwrap();
    assert_eq!(t.len(), 40);
    for row in t.chunks(5) {
        assert!((row[1..].iter().sum::<f64>() - row[0]).abs() < 1e-12);
    }
    // A3 is the deepest recession, C3 the strongest expansion.
    assert!((t[10] + 0.051).abs() < 1e-12);
    assert!((t[35] - 0.0355).abs() < 1e-12);
    assert!(scenario_table(0.9, 1.6, 0.15, -1.0).is_err());
}

#[test]
fn mpk_rises_with_public_capital() {
    let c = complementarity_curve(0.6, 3.0, 1.0, 2.0, 50).unwrap();
    assert_eq!(c.len(), 150);
    for w in c.chunks(3).collect::<Vec<_>>().windows(2) {
        assert!(w[1][1] > w[0][1]);
        assert!(w[1][2] > 0.0);
    }
    assert!(complementarity_curve(1.0, 3.0, 1.0, 2.0, 50).is_err());
}

#[test]
fn multipliers_fall_with_feedback() {
    let c = multiplier_curve(0.46, 0.1, 0.44, 2.0, 21).unwrap();
    let rows: Vec<_> = c.chunks(3).collect();
    assert_eq!(rows[0][0], 0.0);
    assert_eq!(rows[0][2], 1.44 * rows[0][1]);
    for w in rows.windows(2) {
        assert!(w[1][1] < w[0][1] && w[1][2] < w[0][2]);
    }
    assert!(multiplier_curve(0.95, 0.1, 0.44, 2.0, 21).is_err());
}
