//! ∫₋₁¹ e^{−√2η₂√(−u x₁x₂)}/√(−u x₁x₂) du, with √(−u) = i√u for u > 0.

use std::f64::consts::SQRT_2;

use crate::error::{domain, Result};
use crate::quadrature::{try_integrate_finite, QuadratureOptions};
use crate::Complex;

fn check(eta2: f64, x1: f64, x2: f64) -> Result<()> {
    for (name, v) in [("eta2", eta2), ("x1", x1), ("x2", x2)] {
        if !(v > 0.0 && v.is_finite()) {
            return Err(domain("theorem2_angular", format!("{name} must be positive, got {v}")));
        }
    }
    Ok(())
}

/// √2(e^{−iw} − e^{−w})/(x₁x₂η₂), w = √2 √(x₁x₂) η₂.
pub fn theorem2_angular(eta2: f64, x1: f64, x2: f64) -> Result<Complex> {
    check(eta2, x1, x2)?;
    let w = SQRT_2 * (x1 * x2).sqrt() * eta2;
    // e^{−iw} − e^{−w} loses everything to cancellation once w is tiny.
    let diff = if w < 1e-3 {
        let iw = Complex::new(0.0, -w);
        let mut term = Complex::new(1.0, 0.0);
        let mut acc = Complex::new(0.0, 0.0);
        for m in 1..12 {
            term = term / m as f64;
            acc += term * (iw.powi(m) - Complex::new((-w).powi(m), 0.0));
        }
        acc
    } else {
        Complex::new(0.0, -w).exp() - (-w).exp()
    };
    Ok(diff * (SQRT_2 / (x1 * x2 * eta2)))
}

/// The defining u-integral by quadrature, split at u = 0.
pub fn theorem2_angular_oracle(eta2: f64, x1: f64, x2: f64, tol: f64) -> Result<Complex> {
    check(eta2, x1, x2)?;
    let p = x1 * x2;
    let opts = QuadratureOptions::with_tol(tol);
    let neg = try_integrate_finite(
        |u: f64| {
            let r = (-u * p).sqrt();
            Ok(Complex::new((-SQRT_2 * eta2 * r).exp() / r, 0.0))
        },
        -1.0,
        0.0,
        &opts,
    )?
    .require("theorem2_angular_oracle")?;
    let pos = try_integrate_finite(
        |u: f64| {
            let r = Complex::new(0.0, (u * p).sqrt());
            Ok((-r * (SQRT_2 * eta2)).exp() / r)
        },
        0.0,
        1.0,
        &opts,
    )?
    .require("theorem2_angular_oracle")?;
    Ok(neg.value + pos.value)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_point() {
        let v = theorem2_angular(1.0, 1.0, 1.0).unwrap();
        assert!((v - Complex::new(-0.123_281_294_972_961, -1.396_911_997_273_22)).norm() < 1e-12);
        let o = theorem2_angular_oracle(1.0, 1.0, 1.0, 1e-12).unwrap();
        assert!((v - o).norm() < 1e-9 * v.norm());
    }

    #[test]
    fn small_w_matches_taylor() {
        // Leading behaviour: √2(−iw + w)/(x₁x₂η₂) = 2(1 − i)/√(x₁x₂).
        let v = theorem2_angular(1e-4, 1.0, 1.0).unwrap();
        assert!((v - Complex::new(2.0, -2.0)).norm() < 1e-3);
        let a = theorem2_angular(1e-3 * 0.999, 1.0, 1.0).unwrap();
        let b = theorem2_angular(1e-3 * 1.001, 1.0, 1.0).unwrap();
        assert!((a - b).norm() < 1e-5);
    }

    #[test]
    fn scaling() {
        let lam = 1.7;
        let a = theorem2_angular(0.8, 1.3, 0.6).unwrap();
        let b = theorem2_angular(0.8 * lam, 1.3 / lam, 0.6 / lam).unwrap();
        assert!((b - a * lam).norm() < 1e-12 * b.norm());
    }
}
