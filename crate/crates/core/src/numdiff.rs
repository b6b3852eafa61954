//! Finite-difference stencils used to check analytic derivatives.
//!
//! These deliberately only see a black-box closure, never the analytic
//! derivative code they are meant to verify.

/// Relative step used for first derivatives.
pub const FIRST_ORDER_REL_STEP: f64 = 1e-6;

/// Relative step used for the mixed second-derivative stencil. A larger step
/// than the first-order one keeps the `eps / h²` rounding term small.
pub const CROSS_REL_STEP: f64 = 1e-4;

/// Central difference `(f(x+h) - f(x-h)) / 2h`.
pub fn central<F>(f: F, x: f64, h: f64) -> f64
where
    F: Fn(f64) -> f64,
{
    (f(x + h) - f(x - h)) / (2.0 * h)
}

/// Central difference with a step proportional to the evaluation point.
pub fn central_relative<F>(f: F, x: f64, rel_step: f64) -> f64
where
    F: Fn(f64) -> f64,
{
    let h = rel_step * x.abs().max(f64::MIN_POSITIVE);
    central(f, x, h)
}

/// Four-point stencil for the mixed partial `d²f/dx dy`:
///
/// `[f(x+h,y+k) - f(x+h,y-k) - f(x-h,y+k) + f(x-h,y-k)] / 4hk`
pub fn mixed_partial<F>(f: F, x: f64, y: f64, hx: f64, hy: f64) -> f64
where
    F: Fn(f64, f64) -> f64,
{
    (f(x + hx, y + hy) - f(x + hx, y - hy) - f(x - hx, y + hy) + f(x - hx, y - hy))
        / (4.0 * hx * hy)
}

/// Relative error `|a - b| / max(|b|, floor)`.
pub fn rel_error(approx: f64, exact: f64) -> f64 {
    (approx - exact).abs() / exact.abs().max(f64::MIN_POSITIVE)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn central_is_exact_on_quadratics() {
        let d = central(|x| 3.0 * x * x - x, 2.0, 1e-3);
        assert!((d - 11.0).abs() < 1e-9);
    }

    #[test]
    fn mixed_partial_of_product() {
        // d²(x² y³)/dx dy = 6 x y²
        let d = mixed_partial(|x, y| x * x * y.powi(3), 1.5, 2.0, 1e-4, 1e-4);
        assert!(rel_error(d, 6.0 * 1.5 * 4.0) < 1e-7);
    }
}
