//! The momentum-dependent amplitude
//!
//!   S₁ = 2π ∫₀¹ e^{−iκτ} e^{−x₂L}/L dτ,  L² = (1−τ)(k²τ + η₂²) + η₁²τ,  κ = k·x₂,
//!
//! and its expansion in powers of k². After s² = (η₁² − η₂²)τ + η₂² the n-th
//! term is an integral over s ∈ [η₂, η₁] of a half-integer Macdonald
//! function times polynomials and a Gaussian phase.

use std::f64::consts::PI;

use super::SlaterPair;
use crate::error::{domain, Error, Result};
use crate::quadrature::{try_integrate_finite, QuadratureOptions, QuadratureResult};
use crate::series::{SeriesAccumulator, SeriesEvaluation, TruncationPolicy};
use crate::specfun::{
    bessel_k_half, binomial, erf_complex, factorial, gamma_half, kummer_1f1, lower_gamma_scaled, upper_incomplete_gamma,
};
use crate::Complex;

fn c(re: f64) -> Complex {
    Complex::new(re, 0.0)
}

/// The τ-integral by adaptive quadrature.
pub fn s1_tau_oracle(p: &SlaterPair, tol: f64) -> Result<QuadratureResult> {
    p.validate()?;
    let (e1, e2, k, x2, kappa) = (p.eta1, p.eta2, p.k, p.x2, p.k_dot_x2);
    let f = |tau: f64| -> Result<Complex> {
        let l = ((1.0 - tau) * (k * k * tau + e2 * e2) + e1 * e1 * tau).sqrt();
        let phase = Complex::new(0.0, -kappa * tau).exp();
        Ok(phase * (2.0 * PI * (-x2 * l).exp() / l))
    };
    try_integrate_finite(f, 0.0, 1.0, &QuadratureOptions::with_tol(tol))?.require("s1_tau_oracle")
}

struct TermSetup {
    d: f64,
    /// a = iκ/D, the Gaussian coefficient of e^{−a s²}.
    a: Complex,
    /// Everything outside the s-integral, including e^{iκη₂²/D}.
    prefactor: Complex,
}

fn term_setup(n: usize, p: &SlaterPair, op: &'static str) -> Result<TermSetup> {
    p.validate()?;
    let d = p.eta1 * p.eta1 - p.eta2 * p.eta2;
    if d == 0.0 {
        return Err(domain(op, "eta1 = eta2 collapses the s-interval; use cheshire_series"));
    }
    let nf = n as f64;
    let a = Complex::new(0.0, p.k_dot_x2 / d);
    let real = 2.0 * PI / PI.sqrt() * (-p.k * p.k).powi(n as i32) / factorial(n)?
        * 2f64.powf(0.5 - nf)
        * (2.0 / d)
        * d.powi(-2 * n as i32);
    let phase = Complex::new(0.0, p.k_dot_x2 * p.eta2 * p.eta2 / d).exp();
    Ok(TermSetup {
        d,
        a,
        prefactor: phase * real,
    })
}

/// n-th term of the k²-expansion by quadrature over s ∈ [η₂, η₁].
pub fn s1_series_n_term(n: usize, p: &SlaterPair, tol: f64) -> Result<Complex> {
    let TermSetup { d, a, prefactor } = term_setup(n, p, "s1_series_n_term")?;
    let (e1, e2, x2) = (p.eta1, p.eta2, p.x2);
    let nf = n as f64;
    let f = |s: f64| -> Result<Complex> {
        let poly = ((e1 * e1 - s * s) * (s * s - e2 * e2)).powi(n as i32);
        let k = bessel_k_half(n, c(s * x2))?;
        let radial = s.powf(0.5 - nf) * x2.powf(nf + 0.5) * poly;
        Ok(k * (-a * s * s).exp() * radial)
    };
    let (lo, hi, sign) = if d > 0.0 { (e2, e1, 1.0) } else { (e1, e2, -1.0) };
    let r = try_integrate_finite(f, lo, hi, &QuadratureOptions::with_tol(tol))?.require("s1_series_n_term")?;
    Ok(prefactor * r.value * sign)
}

/// The n = 0 term in closed form:
/// (4π/D) e^{iκη₂²/D} (√π/(2√a)) e^{x₂²/(4a)} [erf(√a η₁ + x₂/(2√a)) − erf(√a η₂ + x₂/(2√a))].
pub fn s1_n0_erf_closed(p: &SlaterPair) -> Result<Complex> {
    const OP: &str = "s1_n0_erf_closed";
    let TermSetup { d, a, .. } = term_setup(0, p, OP)?;
    if p.k_dot_x2 == 0.0 {
        return Err(domain(OP, "needs a nonzero k.x2 phase"));
    }
    let ra = a.sqrt();
    let shift = c(p.x2) / (ra * 2.0);
    let diff = erf_complex(ra * p.eta1 + shift)? - erf_complex(ra * p.eta2 + shift)?;
    let phase = Complex::new(0.0, p.k_dot_x2 * p.eta2 * p.eta2 / d).exp();
    let gauss = (c(p.x2 * p.x2) / (a * 4.0)).exp();
    let v = phase * (4.0 * PI / d) * (PI.sqrt() / (ra * 2.0)) * gauss * diff;
    if !(v.re.is_finite() && v.im.is_finite()) {
        return Err(Error::Range {
            op: OP,
            detail: "exponential prefactors overflow".into(),
        });
    }
    Ok(v)
}

const GAMMA_SERIES_MAX: usize = 400;
/// |a| hi² above which the a-series loses more than ~e^5 ulps to cancellation.
const SERIES_SWITCH: f64 = 5.0;

/// ∫_{lo}^{hi} s^M e^{−a s² − x₂ s} ds.
///
/// Small |a| hi² (or M < 0): expand e^{−a s²} and integrate s^{M+2q} e^{−x₂ s}
/// with incomplete gammas.
/// Otherwise complete the square, s = t − c with c = x₂/(2a), and use the
/// entire antiderivative ½ t^{p+1} g((p+1)/2, a t²) of t^p e^{−a t²}. That
/// route cancels badly when c is large, which is why it is kept for large |a|.
fn monomial_integral(m: i64, a: Complex, x2: f64, lo: f64, hi: f64) -> Result<Complex> {
    if m >= 0 && a.norm() * hi * hi > SERIES_SWITCH {
        let cshift = c(x2) / (a * 2.0);
        let gauss = (c(x2 * x2) / (a * 4.0)).exp();
        let anti = |t: Complex, pw: i64| -> Result<Complex> {
            let alpha = (pw as f64 + 1.0) / 2.0;
            Ok(t.powi(pw as i32 + 1) * lower_gamma_scaled(alpha, a * t * t)? * 0.5)
        };
        let mut sum = c(0.0);
        for kk in 0..=m as usize {
            let pw = m - kk as i64;
            let coef = binomial(m as usize, kk)? * 1.0;
            let shift_pow = (-cshift).powi(kk as i32);
            sum += shift_pow * coef * (anti(c(hi) + cshift, pw)? - anti(c(lo) + cshift, pw)?);
        }
        return Ok(sum * gauss);
    }
    let mut sum = c(0.0);
    let mut weight = c(1.0);
    let mut small = 0;
    for q in 0..GAMMA_SERIES_MAX {
        if q > 0 {
            weight = weight * (-a) / q as f64;
        }
        let b = (m + 2 * q as i64 + 1) as f64;
        // Once b > 0 the upper-gamma difference cancels catastrophically;
        // the scaled lower gamma gives the same integral without it.
        let part = if b > 0.0 {
            lower_gamma_scaled(b, c(x2 * hi))? * hi.powf(b) - lower_gamma_scaled(b, c(x2 * lo))? * lo.powf(b)
        } else {
            (upper_incomplete_gamma(b, c(x2 * lo))? - upper_incomplete_gamma(b, c(x2 * hi))?) * x2.powf(-b)
        };
        let term = weight * part;
        sum += term;
        if term.norm() <= 1e-17 * sum.norm() {
            small += 1;
            if small >= 2 {
                return Ok(sum);
            }
        } else {
            small = 0;
        }
    }
    Err(Error::Truncation {
        op: "s1_general_term_gamma",
        terms: GAMMA_SERIES_MAX,
    })
}

/// n-th term as a finite sum over incomplete gamma functions.
///
/// The Macdonald function is expanded as its finite series, the two
/// polynomial factors (η₁² − s²)ⁿ and (s² − η₂²)ⁿ binomially, and each
/// resulting monomial integrated in closed form. Exact in exact arithmetic;
/// in floating point it cancels badly once |η₁² − η₂²| is small next to k.
pub fn s1_general_term_gamma(n: usize, p: &SlaterPair) -> Result<Complex> {
    const OP: &str = "s1_general_term_gamma";
    let TermSetup { d, a, prefactor } = term_setup(n, p, OP)?;
    if p.k_dot_x2 == 0.0 {
        return Err(domain(OP, "needs a nonzero k.x2 phase"));
    }
    let (e1, e2, x2) = (p.eta1, p.eta2, p.x2);
    let (lo, hi, sign) = if d > 0.0 { (e2, e1, 1.0) } else { (e1, e2, -1.0) };
    let nn = n as i64;
    let mut total = c(0.0);
    for m in 0..=n {
        let wm = binomial(n, m)? * e1.powi(2 * (n - m) as i32) * if m % 2 == 0 { 1.0 } else { -1.0 };
        for j in 0..=n {
            let wj = binomial(n, j)? * (-e2 * e2).powi(j as i32);
            for big_j in 0..=n {
                let cj = factorial(big_j + n)? / (factorial(big_j)? * factorial(n - big_j)?)
                    * (2.0 * x2).powi(-(big_j as i32));
                let power = 2 * m as i64 + 2 * (nn - j as i64) - nn - big_j as i64;
                total += monomial_integral(power, a, x2, lo, hi)? * (wm * wj * cj);
            }
        }
    }
    // x₂^{n+1/2} s^{1/2−n} K_{n+1/2}(x₂s) = √(π/2) x₂ⁿ s^{−n} e^{−x₂s} Σ_J …
    let v = prefactor * total * ((PI / 2.0).sqrt() * x2.powi(n as i32) * sign);
    if !(v.re.is_finite() && v.im.is_finite()) {
        return Err(Error::Range {
            op: OP,
            detail: format!("term {n} overflows"),
        });
    }
    Ok(v)
}

/// Equal-exponent series
/// 2π Σₙ (−1)ⁿ 2^{−3n−1/2} k²ⁿ x₂^{n+1/2} η₁^{−n−1/2} / Γ(n+3/2) · K_{n+1/2}(x₂η₁) · ₁F₁(n+1; 2n+2; −iκ).
pub fn cheshire_series(
    eta1: f64,
    x2: f64,
    k: f64,
    k_dot_x2: f64,
    policy: &TruncationPolicy,
) -> Result<SeriesEvaluation> {
    let p = SlaterPair::new(eta1, eta1, x2, k, k_dot_x2)?;
    policy.validate()?;
    let mut acc = SeriesAccumulator::new(*policy);
    if k > 1.0 {
        acc.warn(format!("k = {k} > 1: convergence is not guaranteed"));
    }
    let arg = Complex::new(0.0, -p.k_dot_x2);
    for n in 0.. {
        let nf = n as f64;
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        let real = 2.0
            * PI
            * sign
            * 2f64.powf(-3.0 * nf - 0.5)
            * (k * k).powi(n as i32)
            * x2.powf(nf + 0.5)
            * eta1.powf(-nf - 0.5)
            / gamma_half(2 * n + 3)?;
        let kk = bessel_k_half(n, c(x2 * eta1))?;
        let hyp = kummer_1f1(n as u32 + 1, 2 * n as u32 + 2, arg)?;
        let stop = acc.push(kk * hyp * real);
        if k == 0.0 {
            acc.mark_exact();
            break;
        }
        if stop {
            break;
        }
    }
    Ok(acc.finish())
}

/// The k-expansion summed term by term with quadrature for each term.
pub fn s1_series_eval(p: &SlaterPair, policy: &TruncationPolicy, tol: f64) -> Result<SeriesEvaluation> {
    policy.validate()?;
    let mut acc = SeriesAccumulator::new(*policy);
    for n in 0.. {
        let stop = acc.push(s1_series_n_term(n, p, tol)?);
        if p.k == 0.0 {
            acc.mark_exact();
            break;
        }
        if stop {
            break;
        }
    }
    Ok(acc.finish())
}
