//! Double-series reconstructions of S₁ at k = 0 in terms of incomplete
//! gamma functions of x₂η₂. The outer index n runs over even values only;
//! for η₁ ≠ η₂ each n carries an inner series in (η₁² − η₂²)^k.

use std::f64::consts::PI;

use super::SlaterPair;
use crate::error::{Error, Result};
use crate::series::{SeriesAccumulator, SeriesEvaluation, TruncationPolicy};
use crate::specfun::{binomial, factorial, gamma_half, pochhammer, upper_incomplete_gamma};
use crate::Complex;

/// Caps on the outer (n) and inner (k) series.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SeriesIndexBounds {
    /// Largest n included.
    pub n_max: usize,
    /// Largest inner index; the inner series also stops early under the policy.
    pub k_max: usize,
    /// Odd n vanish by symmetry; only `true` is accepted.
    pub even_only: bool,
}

impl Default for SeriesIndexBounds {
    fn default() -> Self {
        Self {
            n_max: 8,
            k_max: 60,
            even_only: true,
        }
    }
}

impl SeriesIndexBounds {
    pub fn new(n_max: usize, k_max: usize) -> Self {
        Self {
            n_max,
            k_max,
            even_only: true,
        }
    }

    fn validate(&self) -> Result<()> {
        if !self.even_only {
            return Err(Error::Invalid("only even n enter the expansion".into()));
        }
        if self.k_max == 0 {
            return Err(Error::Invalid("k_max must be positive".into()));
        }
        Ok(())
    }

    /// 0, 2, …, n_max.
    pub fn outer_indices(&self) -> impl Iterator<Item = usize> {
        (0..=self.n_max).step_by(2)
    }
}

/// One fixed-n block: its inner terms and their sum.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesBlock {
    pub n: usize,
    pub inner: SeriesEvaluation,
}

impl SeriesBlock {
    pub fn sum(&self) -> Complex {
        self.inner.value
    }
}

/// Blocks in n order plus the outer series over block sums.
#[derive(Debug, Clone, PartialEq)]
pub struct DoubleSeries {
    pub blocks: Vec<SeriesBlock>,
    pub outer: SeriesEvaluation,
}

const IMAG_RESIDUE: f64 = 1e-12;

/// The j-upper bound: 0 for n = 0, n/2 − 1 otherwise.
fn j_max(n: usize) -> usize {
    if n == 0 {
        0
    } else {
        n / 2 - 1
    }
}

/// ((|n−1| + 2j − 1)/2)! / (j! (n+1)! ((|n−1| − 2j − 1)/2)!), shared by both series.
fn j_weight(n: usize, j: usize) -> Result<f64> {
    let m = (n as i64 - 1).unsigned_abs() as usize;
    let up = (m + 2 * j - 1) / 2;
    let down = (m - 2 * j - 1) / 2;
    Ok(factorial(up)? / (factorial(j)? * factorial(n + 1)? * factorial(down)?))
}

/// i^{3n} (−1)^{−i}, kept complex so that a sign slip shows up as an
/// imaginary residue instead of being absorbed.
fn phase(n: usize, i: usize) -> Complex {
    Complex::i().powu(3 * n as u32) * Complex::new(-1.0, 0.0).powi(-(i as i32))
}

fn theorem3_term(n: usize, k: usize, eta1: f64, eta2: f64, x2: f64) -> Result<Complex> {
    let nf = n as f64;
    let half = (nf + 3.0) / 2.0;
    let z = Complex::new(x2 * eta2, 0.0);
    let sign_k = if k % 2 == 0 { 1.0 } else { -1.0 };
    let common = PI.sqrt() * eta1 * sign_k * gamma_half(n + 3)? * pochhammer(half, k) / factorial(k)?
        * x2.powi((n + 2 * k + 2) as i32)
        * (eta1 * eta1 - eta2 * eta2).powi(k as i32);
    let mut acc = Complex::new(0.0, 0.0);
    for j in 0..=j_max(n) {
        let wj = j_weight(n, j)? * 2f64.powf(3.0 + nf / 2.0 - j as f64);
        for i in 0..=n / 2 {
            let a = 2.0 * i as f64 - j as f64 - 2.0 * k as f64 - nf / 2.0 - 2.0;
            let g = upper_incomplete_gamma(a, z)?;
            let w = binomial(n / 2, i)? * eta2.powi((n - 2 * i) as i32) * x2.powi(-2 * i as i32);
            acc += phase(n, i) * g * (w * wj);
        }
    }
    Ok(acc * common)
}

fn theorem4_block(n: usize, eta2: f64, x2: f64) -> Result<Complex> {
    let nf = n as f64;
    let z = Complex::new(x2 * eta2, 0.0);
    let common = PI.sqrt() * gamma_half(n + 3)? * x2.powi((n + 2) as i32);
    let mut acc = Complex::new(0.0, 0.0);
    for j in 0..=j_max(n) {
        let wj = j_weight(n, j)? * 2f64.powf(3.0 + nf / 2.0 - j as f64);
        for i in 0..=n / 2 {
            let a = 2.0 * i as f64 - j as f64 - nf / 2.0 - 2.0;
            let g = upper_incomplete_gamma(a, z)?;
            let w = binomial(n / 2, i)? * eta2.powi((n - 2 * i + 1) as i32) * x2.powi(-2 * i as i32);
            // The (−1)^{−i} of the general case becomes (−1)^{i}; same value.
            acc += phase(n, i) * g * (w * wj);
        }
    }
    Ok(acc * common)
}

fn check_positive(eta1: f64, eta2: f64, x2: f64) -> Result<()> {
    for (name, v) in [("eta1", eta1), ("eta2", eta2), ("x2", x2)] {
        if !(v > 0.0 && v.is_finite()) {
            return Err(Error::Invalid(format!("{name} must be positive, got {v}")));
        }
    }
    Ok(())
}

fn finish_outer(blocks: Vec<SeriesBlock>, policy: &TruncationPolicy, warnings: Vec<String>) -> Result<DoubleSeries> {
    let outer_policy = policy.with_max_terms(blocks.len().max(policy.tail_window));
    let mut outer = SeriesAccumulator::new(outer_policy);
    for w in warnings {
        outer.warn(w);
    }
    for b in &blocks {
        if !b.inner.converged {
            outer.warn(format!(
                "inner series at n = {} hit its cap of {} terms",
                b.n, b.inner.terms_used
            ));
        }
        if outer.push(b.sum()) {
            break;
        }
    }
    let outer = outer.finish();
    if outer.value.im.abs() > IMAG_RESIDUE {
        return Err(Error::Invalid(format!(
            "accumulated sum has imaginary residue {:e}; the phase bookkeeping is inconsistent",
            outer.value.im
        )));
    }
    Ok(DoubleSeries { blocks, outer })
}

/// S₁ at k = 0 as the n-even, k-inner double series around η₂.
/// The momentum fields of `p` are ignored.
pub fn theorem3_series(p: &SlaterPair, bounds: &SeriesIndexBounds, policy: &TruncationPolicy) -> Result<DoubleSeries> {
    p.validate()?;
    let (eta1, eta2, x2) = (p.eta1, p.eta2, p.x2);
    bounds.validate()?;
    policy.validate()?;
    if eta1 == eta2 {
        return Err(Error::Invalid("eta1 = eta2: use theorem4_series".into()));
    }
    let mut warnings = Vec::new();
    let ratio = (eta1 * eta1 - eta2 * eta2).abs() / (eta2 * eta2);
    if ratio >= 1.0 {
        warnings.push(format!(
            "|eta1^2 - eta2^2|/eta2^2 = {ratio:.6} >= 1: the inner expansion is outside its validity range"
        ));
    }
    let inner_policy = policy.with_max_terms(bounds.k_max.max(policy.tail_window));
    let mut blocks = Vec::new();
    for n in bounds.outer_indices() {
        let mut acc = SeriesAccumulator::new(inner_policy);
        for k in 0.. {
            if acc.push(theorem3_term(n, k, eta1, eta2, x2)?) {
                break;
            }
        }
        blocks.push(SeriesBlock { n, inner: acc.finish() });
    }
    finish_outer(blocks, policy, warnings)
}

/// The η₁ = η₂ specialisation: no inner series, one term per even n.
pub fn theorem4_series(
    eta2: f64,
    x2: f64,
    bounds: &SeriesIndexBounds,
    policy: &TruncationPolicy,
) -> Result<DoubleSeries> {
    check_positive(eta2, eta2, x2)?;
    bounds.validate()?;
    policy.validate()?;
    let mut blocks = Vec::new();
    for n in bounds.outer_indices() {
        let mut acc = SeriesAccumulator::new(TruncationPolicy::fixed_terms(1));
        acc.push(theorem4_block(n, eta2, x2)?);
        acc.mark_exact();
        blocks.push(SeriesBlock { n, inner: acc.finish() });
    }
    finish_outer(blocks, policy, Vec::new())
}
