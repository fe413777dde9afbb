//! Truncation of infinite series and the bookkeeping shared by every
//! series evaluator in the crate.

use crate::error::{Error, Result};
use crate::Complex;

/// Stopping rule for an infinite series.
///
/// A series is declared converged once `tail_window` consecutive terms each
/// satisfy `|term| < rel_tol·|partial sum| + abs_tol`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TruncationPolicy {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_terms: usize,
    pub tail_window: usize,
}

impl Default for TruncationPolicy {
    fn default() -> Self {
        Self {
            rel_tol: 1e-10,
            abs_tol: 0.0,
            max_terms: 60,
            tail_window: 2,
        }
    }
}

impl TruncationPolicy {
    /// Policy that stops after exactly `n` terms and never reports
    /// convergence on its own. Used to reproduce fixed-length tables.
    pub fn fixed_terms(n: usize) -> Self {
        Self {
            rel_tol: 0.0,
            abs_tol: 0.0,
            max_terms: n.max(1),
            tail_window: 1,
        }
    }

    pub fn with_max_terms(mut self, max_terms: usize) -> Self {
        self.max_terms = max_terms;
        self
    }

    pub fn with_rel_tol(mut self, rel_tol: f64) -> Self {
        self.rel_tol = rel_tol;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol >= 0.0) || !(self.abs_tol >= 0.0) {
            return Err(Error::Invalid("tolerances must be non-negative".into()));
        }
        if self.tail_window == 0 || self.max_terms < self.tail_window {
            return Err(Error::Invalid(format!(
                "need max_terms >= tail_window >= 1 (got {} and {})",
                self.max_terms, self.tail_window
            )));
        }
        Ok(())
    }
}

/// Terms, running sums and the truncation verdict of one series.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesEvaluation {
    pub terms: Vec<Complex>,
    pub partial_sums: Vec<Complex>,
    pub value: Complex,
    pub converged: bool,
    pub terms_used: usize,
    /// Non-fatal diagnostics (validity guards, branch notes).
    pub warnings: Vec<String>,
}

impl SeriesEvaluation {
    /// Largest |term| divided by |value|; large ratios signal cancellation.
    pub fn cancellation_ratio(&self) -> f64 {
        let max = self.terms.iter().map(|t| t.norm()).fold(0.0, f64::max);
        let v = self.value.norm();
        if v == 0.0 {
            f64::INFINITY
        } else {
            max / v
        }
    }

    pub fn term_magnitudes(&self) -> Vec<f64> {
        self.terms.iter().map(|t| t.norm()).collect()
    }
}

/// Compensated (Kahan–Babuška) accumulator over complex values.
#[derive(Debug, Clone, Copy, Default)]
pub struct KahanSum {
    sum: Complex,
    comp: Complex,
}

impl KahanSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, v: Complex) {
        self.sum = Complex::new(
            neumaier(self.sum.re, v.re, &mut self.comp.re),
            neumaier(self.sum.im, v.im, &mut self.comp.im),
        );
    }

    pub fn value(&self) -> Complex {
        self.sum + self.comp
    }
}

fn neumaier(sum: f64, v: f64, comp: &mut f64) -> f64 {
    let t = sum + v;
    if sum.abs() >= v.abs() {
        *comp += (sum - t) + v;
    } else {
        *comp += (v - t) + sum;
    }
    t
}

/// Incremental builder for a [`SeriesEvaluation`].
#[derive(Debug, Clone)]
pub struct SeriesAccumulator {
    policy: TruncationPolicy,
    sum: KahanSum,
    terms: Vec<Complex>,
    partial_sums: Vec<Complex>,
    small_run: usize,
    converged: bool,
    warnings: Vec<String>,
}

impl SeriesAccumulator {
    pub fn new(policy: TruncationPolicy) -> Self {
        Self {
            policy,
            sum: KahanSum::new(),
            terms: Vec::new(),
            partial_sums: Vec::new(),
            small_run: 0,
            converged: false,
            warnings: Vec::new(),
        }
    }

    /// Adds a term. Returns `true` once summation should stop, either
    /// because the tail criterion is met or `max_terms` is reached.
    pub fn push(&mut self, term: Complex) -> bool {
        self.sum.add(term);
        let value = self.sum.value();
        self.terms.push(term);
        self.partial_sums.push(value);

        let threshold = self.policy.rel_tol * value.norm() + self.policy.abs_tol;
        if term.norm() < threshold {
            self.small_run += 1;
        } else {
            self.small_run = 0;
        }
        if self.small_run >= self.policy.tail_window {
            self.converged = true;
        }
        self.converged || self.terms.len() >= self.policy.max_terms
    }

    /// Marks the series as exactly summed (all remaining terms vanish).
    pub fn mark_exact(&mut self) {
        self.converged = true;
    }

    pub fn warn(&mut self, msg: impl Into<String>) {
        self.warnings.push(msg.into());
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn finish(self) -> SeriesEvaluation {
        let value = self.sum.value();
        SeriesEvaluation {
            terms_used: self.terms.len(),
            terms: self.terms,
            partial_sums: self.partial_sums,
            value,
            converged: self.converged,
            warnings: self.warnings,
        }
    }
}

/// Sums `term(n)` for n = 0, 1, … under `policy`.
pub fn sum_series<F>(policy: &TruncationPolicy, mut term: F) -> Result<SeriesEvaluation>
where
    F: FnMut(usize) -> Result<Complex>,
{
    policy.validate()?;
    let mut acc = SeriesAccumulator::new(*policy);
    for n in 0.. {
        if acc.push(term(n)?) {
            break;
        }
    }
    Ok(acc.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_series_converges() {
        let policy = TruncationPolicy::default();
        let eval = sum_series(&policy, |n| Ok(Complex::new(0.5f64.powi(n as i32), 0.0))).unwrap();
        assert!(eval.converged);
        assert!((eval.value.re - 2.0).abs() < 1e-9);
        assert_eq!(eval.partial_sums.len(), eval.terms.len());
        assert_eq!(*eval.partial_sums.last().unwrap(), eval.value);
    }

    #[test]
    fn harmonic_series_hits_max_terms() {
        let policy = TruncationPolicy::default().with_max_terms(25);
        let eval = sum_series(&policy, |n| Ok(Complex::new(1.0 / (n + 1) as f64, 0.0))).unwrap();
        assert!(!eval.converged);
        assert_eq!(eval.terms_used, 25);
    }

    #[test]
    fn window_requires_consecutive_small_terms() {
        // 1, 0, 1, 0, 0: the lone zero must not stop a window-2 policy.
        let seq = [1.0, 0.0, 1.0, 0.0, 0.0, 5.0];
        let policy = TruncationPolicy::default();
        let eval = sum_series(&policy, |n| Ok(Complex::new(seq[n], 0.0))).unwrap();
        assert!(eval.converged);
        assert_eq!(eval.terms_used, 5);
    }

    #[test]
    fn policy_validation() {
        let bad = TruncationPolicy {
            max_terms: 1,
            tail_window: 2,
            ..Default::default()
        };
        assert!(bad.validate().is_err());
        assert!(TruncationPolicy::fixed_terms(4).validate().is_ok());
    }

    #[test]
    fn kahan_recovers_small_addends() {
        let mut k = KahanSum::new();
        k.add(Complex::new(1e16, 0.0));
        for _ in 0..1000 {
            k.add(Complex::new(1.0, 0.0));
        }
        k.add(Complex::new(-1e16, 0.0));
        assert_eq!(k.value().re, 1000.0);
    }
}
