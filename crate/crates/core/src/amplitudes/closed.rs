//! Closed forms for the k = 0 amplitudes and their 2D quadrature oracle.

use std::f64::consts::PI;

use crate::error::{domain, Error, Result};
use crate::quadrature::{try_integrate_2d, QuadratureOptions, QuadratureResult, Rect, Span};

fn positive(op: &'static str, name: &str, v: f64) -> Result<()> {
    if v > 0.0 && v.is_finite() {
        Ok(())
    } else {
        Err(domain(op, format!("{name} must be positive, got {v}")))
    }
}

/// ∫d³x₁ e^{−η₁x₁}/x₁ · 1/|x₁ − x₂| = 4π(1 − e^{−η₁x₂})/(x₂η₁²).
pub fn s1_coulomb_closed(eta1: f64, x2: f64) -> Result<f64> {
    positive("s1_coulomb_closed", "eta1", eta1)?;
    positive("s1_coulomb_closed", "x2", x2)?;
    Ok(4.0 * PI * -(-eta1 * x2).exp_m1() / (x2 * eta1 * eta1))
}

/// ∫d³x₁ e^{−η₁x₁}/x₁ · e^{−η₂|x₁−x₂|}/|x₁ − x₂|
/// = 4π(e^{−η₂x₂} − e^{−η₁x₂})/(x₂(η₁² − η₂²)).
pub fn s1_two_slater_closed(eta1: f64, eta2: f64, x2: f64) -> Result<f64> {
    positive("s1_two_slater_closed", "eta1", eta1)?;
    positive("s1_two_slater_closed", "x2", x2)?;
    if !(eta2 >= 0.0) {
        return Err(domain("s1_two_slater_closed", format!("eta2 must be >= 0, got {eta2}")));
    }
    if eta1 == eta2 {
        return Err(domain(
            "s1_two_slater_closed",
            "eta1 = eta2 is the equal-exponent case; use s1_equal_eta_closed",
        ));
    }
    let num = (-eta2 * x2).exp() - (-eta1 * x2).exp();
    Ok(4.0 * PI * num / (x2 * (eta1 * eta1 - eta2 * eta2)))
}

/// The η₁ = η₂ limit: 2π e^{−x₂η₂}/η₂.
pub fn s1_equal_eta_closed(eta2: f64, x2: f64) -> Result<f64> {
    positive("s1_equal_eta_closed", "eta2", eta2)?;
    if !(x2 >= 0.0) {
        return Err(domain("s1_equal_eta_closed", format!("x2 must be >= 0, got {x2}")));
    }
    Ok(2.0 * PI * (-x2 * eta2).exp() / eta2)
}

/// 2π ∫₀^∞ dx₁ ∫₋₁¹ du x₁ e^{−η₁x₁} e^{−η₂x₁₂}/x₁₂, x₁₂² = x₁² + x₂² − 2x₁x₂u,
/// split at x₁ = x₂ where the inner integrand peaks.
pub fn s1_two_slater_oracle(eta1: f64, eta2: f64, x2: f64, tol: f64) -> Result<QuadratureResult<f64>> {
    positive("s1_two_slater_oracle", "eta1", eta1)?;
    positive("s1_two_slater_oracle", "x2", x2)?;
    if !(eta2 >= 0.0) {
        return Err(domain("s1_two_slater_oracle", format!("eta2 must be >= 0, got {eta2}")));
    }
    let f = |x1: f64, u: f64| -> Result<f64> {
        let r2 = (x1 * x1 + x2 * x2 - 2.0 * x1 * x2 * u).max(0.0);
        let r = r2.sqrt();
        if r == 0.0 {
            return Ok(0.0);
        }
        Ok(2.0 * PI * x1 * (-eta1 * x1 - eta2 * r).exp() / r)
    };
    let opts = QuadratureOptions::with_tol(tol);
    let inner = Span::new(-1.0, 1.0);
    let near = try_integrate_2d(
        f,
        Rect {
            outer: Span::new(0.0, x2),
            inner,
        },
        &opts,
    )?;
    let far = try_integrate_2d(
        f,
        Rect {
            outer: Span::to_infinity(x2),
            inner,
        },
        &opts,
    )?;
    let r = QuadratureResult {
        value: near.value + far.value,
        error_estimate: near.error_estimate + far.error_estimate,
        evaluations: near.evaluations + far.evaluations,
        converged: near.converged && far.converged,
    };
    if r.value.is_finite() {
        Ok(r)
    } else {
        Err(Error::Invalid("non-finite oracle value".into()))
    }
}

/// Momentum-free Cartesian amplitude at n = 0:
/// 4π/√(η₂² − η₁²) · asinh(√(η₂²/η₁² − 1)), for η₂ > η₁ > 0.
pub fn corollary6_n0_closed(eta1: f64, eta2: f64) -> Result<f64> {
    positive("corollary6_n0_closed", "eta1", eta1)?;
    if !(eta2 > eta1) || !eta2.is_finite() {
        return Err(domain(
            "corollary6_n0_closed",
            format!("need eta2 > eta1 (the other ordering leaves the real branch), got ({eta1}, {eta2})"),
        ));
    }
    let d = (eta2 * eta2 - eta1 * eta1).sqrt();
    Ok(4.0 * PI / d * (d / eta1).asinh())
}

/// ∫d³x e^{−η₁r}/r · e^{−η₂ρ}/ρ with ρ the distance from the z axis, in
/// polar coordinates of the (ρ, z) half-plane: 4π ∫₀^{π/2}dφ ∫₀^∞dr e^{−(η₁ + η₂cos φ)r}.
pub fn corollary6_n0_oracle(eta1: f64, eta2: f64, tol: f64) -> Result<QuadratureResult<f64>> {
    positive("corollary6_n0_oracle", "eta1", eta1)?;
    positive("corollary6_n0_oracle", "eta2", eta2)?;
    let f = |phi: f64, r: f64| -> Result<f64> { Ok(4.0 * PI * (-(eta1 + eta2 * phi.cos()) * r).exp()) };
    let domain = Rect {
        outer: Span::new(0.0, PI / 2.0),
        inner: Span::to_infinity(0.0),
    };
    try_integrate_2d(f, domain, &QuadratureOptions::with_tol(tol))?.require("corollary6_n0_oracle")
}
