//! The classical two-range expansion of e^{−η|x₁−x₂|}/|x₁−x₂| in Legendre
//! polynomials, kept as a baseline for the one-range series.

use crate::error::{Error, Result};
use crate::series::{SeriesAccumulator, SeriesEvaluation, TruncationPolicy};
use crate::specfun::{bessel_i_half, bessel_k_half, legendre_p};
use crate::Complex;

#[derive(Debug, Clone, PartialEq)]
pub struct TwoRangeEvaluation {
    pub series: SeriesEvaluation,
    /// max |term| / |sum|.
    pub cancellation: f64,
    /// x₁ = x₂, outside the strict x_< < x_> domain.
    pub on_boundary: bool,
}

/// (x₁x₂)^{−1/2} Σ_{n=0}^{N} (2n+1) P_n(cos θ) I_{n+1/2}(η x_<) K_{n+1/2}(η x_>).
pub fn two_range_mos_eval(eta: f64, x1: f64, x2: f64, cos_theta: f64, n_max: usize) -> Result<TwoRangeEvaluation> {
    if !(eta > 0.0 && x1 > 0.0 && x2 > 0.0) {
        return Err(Error::Invalid(format!("need eta, x1, x2 > 0, got ({eta}, {x1}, {x2})")));
    }
    let (lo, hi) = if x1 <= x2 { (x1, x2) } else { (x2, x1) };
    let on_boundary = x1 == x2;
    let pref = 1.0 / (x1 * x2).sqrt();
    let mut acc = SeriesAccumulator::new(TruncationPolicy::fixed_terms(n_max + 1));
    if on_boundary {
        acc.warn("x1 = x2: evaluated at the boundary of the two-range domain");
    }
    for n in 0..=n_max {
        let i = bessel_i_half(n, eta * lo)?;
        let k = bessel_k_half(n, Complex::new(eta * hi, 0.0))?.re;
        let t = pref * (2 * n + 1) as f64 * legendre_p(n, cos_theta)? * i * k;
        acc.push(Complex::new(t, 0.0));
    }
    let series = acc.finish();
    let cancellation = series.cancellation_ratio();
    Ok(TwoRangeEvaluation {
        series,
        cancellation,
        on_boundary,
    })
}
