//! The G^{0,3}_{3,1} Meijer function met in the inverse Gaussian transform
//!
//!   ∫₀^∞ ρ^μ e^{−a²/ρ − pρ} H_j(a/√ρ) dρ = 2^j p^{−μ−1} G(1/(a²p) | ½, 1, −μ; (j+1)/2).
//!
//! No general Meijer-G algorithm is attempted: with p = 1 and a = 1/√arg the
//! left side is integrated numerically and rescaled.

use super::poly::hermite_h;
use crate::error::{domain, Result};
use crate::quadrature::{try_integrate_semi_infinite, QuadratureOptions};

/// G^{0,3}_{3,1}(arg | ½, 1, −μ; (j+1)/2) by quadrature at relative
/// tolerance `tol`.
pub fn meijer_g_0313_tol(j: usize, mu: f64, arg: f64, tol: f64) -> Result<f64> {
    if !(arg > 0.0) || !arg.is_finite() || !mu.is_finite() {
        return Err(domain(
            "meijer_g_0313",
            format!("need arg > 0 and finite mu, got arg={arg}, mu={mu}"),
        ));
    }
    let opts = QuadratureOptions::with_tol(tol);
    let r = try_integrate_semi_infinite(
        |rho: f64| {
            if rho == 0.0 {
                return Ok(0.0);
            }
            let w = 1.0 / (arg * rho);
            let e = (-w - rho).exp();
            if e == 0.0 {
                return Ok(0.0);
            }
            Ok(rho.powf(mu) * e * hermite_h(j, w.sqrt()))
        },
        0.0,
        &opts,
    )?
    .require("meijer_g_0313")?;
    Ok(r.value * 0.5f64.powi(j as i32))
}

pub fn meijer_g_0313(j: usize, mu: f64, arg: f64) -> Result<f64> {
    meijer_g_0313_tol(j, mu, arg, 1e-11)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn j0_reduces_to_bessel_k() {
        // ∫ρ^{ν−1} e^{−a²/ρ−ρ} dρ = 2 a^ν K_ν(2a); with ν = 1/2 this is √π e^{−2a}.
        let arg: f64 = 3.0;
        let a = 1.0 / arg.sqrt();
        let g = meijer_g_0313(0, -0.5, arg).unwrap();
        let want = PI.sqrt() * (-2.0 * a).exp();
        assert!((g - want).abs() < 1e-10 * want);
    }

    #[test]
    fn domain() {
        assert!(meijer_g_0313(0, 0.5, 0.0).is_err());
        assert!(meijer_g_0313(0, 0.5, -2.0).is_err());
    }
}
