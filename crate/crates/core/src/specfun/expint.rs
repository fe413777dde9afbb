use super::gamma::exp_integral_e1;
use crate::error::{domain, Result};
use crate::Complex;

/// Ei(x) for x < 0, via Ei(x) = −E₁(−x).
pub fn exp_integral_ei(x: f64) -> Result<f64> {
    if !(x < 0.0) || !x.is_finite() {
        return Err(domain("exp_integral_ei", format!("need finite x < 0, got {x}")));
    }
    Ok(-exp_integral_e1(Complex::new(-x, 0.0))?.re)
}
