//! The three-centre exchange integral T(a,bc) in prolate spheroidal
//! coordinates: a direct quadrature, the exact Ei form, and a one-range
//! series whose terms plateau instead of decaying.

use std::f64::consts::{LN_2, PI};

use crate::error::{domain, Error, Result};
use crate::quadrature::{try_integrate_2d, QuadratureOptions, QuadratureResult, Rect, Span};
use crate::series::{SeriesAccumulator, SeriesEvaluation, TruncationPolicy};
use crate::specfun::{bessel_i_half, exp_integral_ei, factorial, upper_incomplete_gamma};
use crate::Complex;

/// A point of the (λ, μ) integration domain at separation R.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipsoidalParams {
    pub r: f64,
    pub lambda: f64,
    pub mu: f64,
}

impl EllipsoidalParams {
    pub fn new(r: f64, lambda: f64, mu: f64) -> Result<Self> {
        check_r("EllipsoidalParams", r)?;
        if !(lambda >= 1.0) || !lambda.is_finite() {
            return Err(domain(
                "EllipsoidalParams",
                format!("lambda must be >= 1, got {lambda}"),
            ));
        }
        if !(mu.abs() <= 1.0) {
            return Err(domain("EllipsoidalParams", format!("|mu| must be <= 1, got {mu}")));
        }
        Ok(Self { r, lambda, mu })
    }

    /// 2R³((λ−μ)/R + λ² − μ²) e^{−3Rλ−Rμ} e^{−R√(λ²+μ²−1)}.
    pub fn integrand(&self) -> f64 {
        let Self { r, lambda: l, mu: m } = *self;
        let root = (l * l + m * m - 1.0).max(0.0).sqrt();
        2.0 * r.powi(3) * ((l - m) / r + l * l - m * m) * (-3.0 * r * l - r * m - r * root).exp()
    }
}

fn check_r(op: &'static str, r: f64) -> Result<()> {
    if r > 0.0 && r.is_finite() {
        Ok(())
    } else {
        Err(domain(op, format!("R must be positive, got {r}")))
    }
}

/// The defining (λ, μ) integral. The domain is split at λ = 2 and μ = 0,
/// since √(λ² + μ² − 1) has a kink at the corner (1, 0).
pub fn t_abc_oracle(r: f64, tol: f64) -> Result<QuadratureResult<f64>> {
    check_r("t_abc_oracle", r)?;
    let opts = QuadratureOptions::with_tol(tol);
    let mut total = QuadratureResult {
        value: 0.0,
        error_estimate: 0.0,
        evaluations: 0,
        converged: true,
    };
    for outer in [Span::new(1.0, 2.0), Span::to_infinity(2.0)] {
        for inner in [Span::new(-1.0, 0.0), Span::new(0.0, 1.0)] {
            let part = try_integrate_2d(
                |l: f64, m: f64| Ok(EllipsoidalParams { r, lambda: l, mu: m }.integrand()),
                Rect { outer, inner },
                &opts,
            )?;
            total.value += part.value;
            total.error_estimate += part.error_estimate;
            total.evaluations += part.evaluations;
            total.converged &= part.converged;
        }
    }
    total.require("t_abc_oracle")
}

/// Closed form in exponentials and Ei(−2R), Ei(−8R).
pub fn t_abc_exact(r: f64) -> Result<f64> {
    check_r("t_abc_exact", r)?;
    let ei8 = exp_integral_ei(-8.0 * r)?;
    let ei2 = exp_integral_ei(-2.0 * r)?;
    let r2 = r * r;
    let a = (3.0 * r).exp() * (-16.0 * r2 + 44.0 * r + 116.0 / (9.0 * r) - 116.0 / 3.0) * ei8;
    let b = (-3.0 * r).exp() * (16.0 * r2 + 44.0 * r + 116.0 / (9.0 * r) + 116.0 / 3.0) * (ei2 + 2.0 * LN_2);
    let c = (-3.0 * r).exp() * (624.0 * r2 + 2256.0 * r + 131.0 / (3.0 * r) + 1670.0) / 16.0;
    let d = (-5.0 * r).exp() * (160.0 * r + 131.0 / (3.0 * r) + 34.0) / 16.0;
    let v = (a - b + c - d) / 81.0;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Range {
            op: "t_abc_exact",
            detail: format!("R = {r} overflows the e^(3R) block"),
        })
    }
}

/// Series terms with their split over the Macdonald index J.
#[derive(Debug, Clone, PartialEq)]
pub struct TabcSeries {
    pub series: SeriesEvaluation,
    /// `by_j[n][J]` is the J-th contribution to term n.
    pub by_j: Vec<Vec<f64>>,
}

const REALNESS: f64 = 1e-10;

/// (n−1+J)!/(J!(n−1−J)!), and 1 at n = 0.
fn macdonald_coeff(n: usize, j: usize) -> Result<f64> {
    if n == 0 {
        return Ok(1.0);
    }
    Ok(factorial(n - 1 + j)? / (factorial(j)? * factorial(n - 1 - j)?))
}

/// Contributions of each J to term n, phase factors evaluated as complex
/// numbers and the result checked to be real.
pub fn t_abc_series_term(n: usize, r: f64) -> Result<Vec<f64>> {
    check_r("t_abc_series_term", r)?;
    let nf = n as f64;
    let j_top = n.saturating_sub(1);
    let i3 = bessel_i_half(n + 1, r)?;
    let i5 = bessel_i_half(n + 2, r)?;
    let z = Complex::new(4.0 * r, 0.0);
    let phase = Complex::i()
        * PI.sqrt()
        * Complex::new(0.0, PI * nf).exp()
        * Complex::new(-r, 0.0).powf(-nf - 1.5)
        * r.powi(2 * n as i32);
    let mut out = Vec::with_capacity(j_top + 1);
    for j in 0..=j_top {
        let jf = j as f64;
        let g1 = upper_incomplete_gamma(1.0 - jf - nf, z)?;
        let g2 = upper_incomplete_gamma(2.0 - jf - nf, z)?;
        let g3 = upper_incomplete_gamma(3.0 - jf - nf, z)?;
        let bracket = (g1 * (16.0 * r * r) - g2 * 4.0 - g3) * (r * i5) - (g2 * 4.0 + g3) * ((2.0 * nf + 3.0) * i3);
        let v = phase * bracket * (2f64.powf(jf + 2.0 * nf - 4.5) * macdonald_coeff(n, j)?);
        if v.im.abs() > REALNESS * v.re.abs() {
            return Err(Error::Invalid(format!(
                "term (n={n}, J={j}) has a non-negligible imaginary part {:e}",
                v.im
            )));
        }
        out.push(v.re);
    }
    Ok(out)
}

/// The series summed under `policy`. Past a few terms it plateaus, so at
/// the default tolerance it normally exhausts `max_terms`.
pub fn t_abc_series(r: f64, policy: &TruncationPolicy) -> Result<TabcSeries> {
    check_r("t_abc_series", r)?;
    policy.validate()?;
    let mut acc = SeriesAccumulator::new(*policy);
    let mut by_j = Vec::new();
    for n in 0.. {
        let parts = t_abc_series_term(n, r)?;
        let term: f64 = parts.iter().sum();
        by_j.push(parts);
        if acc.push(Complex::new(term, 0.0)) {
            break;
        }
    }
    let series = acc.finish();
    Ok(TabcSeries { series, by_j })
}

/// Outcome of scanning term magnitudes for a plateau.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StallReport {
    pub stalled: bool,
    /// First term index at which the plateau was detected.
    pub index: Option<usize>,
    /// |term| at that index.
    pub magnitude: Option<f64>,
}

pub const DEFAULT_STALL_WINDOW: usize = 4;

/// Flags the first term i ≥ window with |tᵢ| > |t_{i−window}|/2, that is,
/// a window over which the terms failed to halve.
pub fn stall_detector(eval: &SeriesEvaluation, window: usize) -> StallReport {
    let mags = eval.term_magnitudes();
    let none = StallReport {
        stalled: false,
        index: None,
        magnitude: None,
    };
    if window == 0 || mags.len() <= window {
        return none;
    }
    (window..mags.len())
        .find(|&i| mags[i] > mags[i - window] / 2.0)
        .map(|i| StallReport {
            stalled: true,
            index: Some(i),
            magnitude: Some(mags[i]),
        })
        .unwrap_or(none)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn real_form(n: usize, r: f64) -> f64 {
        // i·e^{iπn}·(−R)^{−n−3/2} = −R^{−n−3/2}; with the Bessel recurrence the
        // bracket becomes R[16R²Γ₁I_{n+5/2} − (4Γ₂ + Γ₃)I_{n+1/2}].
        let nf = n as f64;
        let z = Complex::new(4.0 * r, 0.0);
        let i1 = bessel_i_half(n, r).unwrap();
        let i5 = bessel_i_half(n + 2, r).unwrap();
        (0..=n.saturating_sub(1))
            .map(|j| {
                let jf = j as f64;
                let g = |a: f64| upper_incomplete_gamma(a - jf - nf, z).unwrap().re;
                PI.sqrt()
                    * 2f64.powf(2.0 * nf + jf - 4.5)
                    * r.powf(nf - 0.5)
                    * macdonald_coeff(n, j).unwrap()
                    * ((4.0 * g(2.0) + g(3.0)) * i1 - 16.0 * r * r * g(1.0) * i5)
            })
            .sum()
    }

    #[test]
    fn phase_collapse_matches_real_form() {
        for &r in &[0.011, 0.11, 1.1] {
            for n in 0..8 {
                let a: f64 = t_abc_series_term(n, r).unwrap().iter().sum();
                let b = real_form(n, r);
                assert!((a - b).abs() <= 1e-11 * b.abs().max(1e-300), "n={n} R={r}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn exact_form_values() {
        assert!((t_abc_exact(0.11).unwrap() - 0.360_071_259_797).abs() < 1e-9);
        assert!((t_abc_exact(0.011).unwrap() - 0.374_819_900_683).abs() < 1e-9);
        assert!((t_abc_exact(1.1).unwrap() - 0.067_393_642_4).abs() < 1e-9);
    }

    #[test]
    fn stall_on_synthetic_sequences() {
        let mk = |ts: Vec<f64>| {
            let mut acc = SeriesAccumulator::new(TruncationPolicy::fixed_terms(ts.len()));
            for t in ts {
                acc.push(Complex::new(t, 0.0));
            }
            acc.finish()
        };
        let geo = mk((0..30).map(|n| 0.5f64.powi(n)).collect());
        assert!(!stall_detector(&geo, 4).stalled);
        let mut flat: Vec<f64> = (0..10).map(|n| 0.1f64.powi(n)).collect();
        flat.extend(std::iter::repeat_n(1e-7, 10));
        let rep = stall_detector(&mk(flat), 4);
        assert!(rep.stalled);
        assert_eq!(rep.magnitude, Some(1e-7));
    }

    #[test]
    fn integrand_domain() {
        assert!(EllipsoidalParams::new(0.11, 0.9, 0.0).is_err());
        assert!(EllipsoidalParams::new(0.11, 1.0, 1.1).is_err());
        assert!(EllipsoidalParams::new(0.11, 1.0, 0.0).unwrap().integrand() > 0.0);
    }
}
