//! Globally adaptive Gauss–Kronrod (7/15) integration for real and complex
//! integrands on finite, semi-infinite and rectangular domains.
//!
//! Budget exhaustion never raises: the result comes back with
//! `converged == false` and the caller decides (see
//! [`QuadratureResult::require`]).

mod rule;

use std::cell::Cell;
use std::collections::BinaryHeap;

pub use rule::QuadValue;
use rule::{gk15, Segment};

use crate::error::{domain, Error, Result};
use crate::Complex;

/// Value with error estimate from the adaptive integrator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult<V = Complex> {
    pub value: V,
    pub error_estimate: f64,
    pub evaluations: usize,
    pub converged: bool,
}

impl<V> QuadratureResult<V> {
    /// Turns a non-converged result into [`Error::Quadrature`].
    pub fn require(self, op: &'static str) -> Result<Self> {
        if self.converged {
            Ok(self)
        } else {
            Err(Error::Quadrature {
                op,
                estimate: self.error_estimate,
                evaluations: self.evaluations,
            })
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureOptions {
    pub rel_tol: f64,
    pub abs_floor: f64,
    pub max_evaluations: usize,
}

impl Default for QuadratureOptions {
    fn default() -> Self {
        Self {
            rel_tol: 1e-10,
            abs_floor: 1e-15,
            max_evaluations: 1_000_000,
        }
    }
}

impl QuadratureOptions {
    pub fn with_tol(tol: f64) -> Self {
        Self {
            rel_tol: tol,
            ..Self::default()
        }
    }

    fn target(&self, value: f64) -> f64 {
        self.rel_tol * value + self.abs_floor
    }
}

/// Integration interval; `hi` may be `f64::INFINITY`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Span {
    pub lo: f64,
    pub hi: f64,
}

impl Span {
    pub fn new(lo: f64, hi: f64) -> Self {
        Self { lo, hi }
    }

    pub fn to_infinity(lo: f64) -> Self {
        Self { lo, hi: f64::INFINITY }
    }
}

/// Rectangle x ∈ `outer`, y ∈ `inner`; the y-integral is done first.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rect {
    pub outer: Span,
    pub inner: Span,
}

/// Beyond this abscissa a non-finite integrand value on a semi-infinite
/// range is taken to be an underflowed zero.
const FAR_TAIL: f64 = 1e8;

/// Shared evaluation counter so nested integrals respect one budget.
struct Budget {
    used: Cell<usize>,
    limit: usize,
}

impl Budget {
    fn new(limit: usize) -> Self {
        Self {
            used: Cell::new(0),
            limit,
        }
    }

    fn remaining(&self) -> usize {
        self.limit.saturating_sub(self.used.get())
    }
}

fn adapt<V, F>(mut f: F, breaks: &[f64], opts: &QuadratureOptions, budget: &Budget) -> Result<QuadratureResult<V>>
where
    V: QuadValue,
    F: FnMut(f64) -> Result<V>,
{
    if breaks.len() < 2 {
        return Err(Error::Invalid("need at least one interval".into()));
    }
    for w in breaks.windows(2) {
        if !(w[0] < w[1]) || !w[0].is_finite() || !w[1].is_finite() {
            return Err(Error::Invalid(format!(
                "integration bounds must be finite and increasing, got [{}, {}]",
                w[0], w[1]
            )));
        }
    }
    let start = budget.used.get();
    let mut heap = BinaryHeap::new();
    let mut value = V::zero();
    let mut error = 0.0;
    for w in breaks.windows(2) {
        let seg = gk15(&mut f, w[0], w[1])?;
        budget.used.set(budget.used.get() + 15);
        value = value + seg.value;
        error += seg.error;
        heap.push(seg);
    }
    let mut converged = error <= opts.target(value.magnitude());
    while !converged {
        if budget.remaining() < 30 {
            break;
        }
        let worst: Segment<V> = match heap.pop() {
            Some(s) => s,
            None => break,
        };
        let mid = 0.5 * (worst.a + worst.b);
        if !(worst.a < mid && mid < worst.b) {
            heap.push(worst);
            break;
        }
        let left = gk15(&mut f, worst.a, mid)?;
        let right = gk15(&mut f, mid, worst.b)?;
        budget.used.set(budget.used.get() + 30);
        value = value - worst.value + left.value + right.value;
        error = error - worst.error + left.error + right.error;
        heap.push(left);
        heap.push(right);
        if error <= opts.target(value.magnitude()) {
            // Re-sum to shed accumulated cancellation before declaring success.
            value = heap.iter().fold(V::zero(), |acc, s| acc + s.value);
            error = heap.iter().map(|s| s.error).sum();
            converged = error <= opts.target(value.magnitude());
        }
    }
    let value = heap.iter().fold(V::zero(), |acc, s| acc + s.value);
    let error_estimate: f64 = heap.iter().map(|s| s.error).sum();
    Ok(QuadratureResult {
        value,
        error_estimate,
        evaluations: budget.used.get() - start,
        converged,
    })
}

fn finite_guard<V: QuadValue>(v: V, x: f64) -> Result<V> {
    if v.is_finite_value() {
        Ok(v)
    } else {
        Err(domain("quadrature", format!("integrand is not finite at {x}")))
    }
}

/// ∫_a^b f with interior breakpoints, for fallible integrands.
pub fn try_integrate_with_breaks<V, F>(
    mut f: F,
    breaks: &[f64],
    opts: &QuadratureOptions,
) -> Result<QuadratureResult<V>>
where
    V: QuadValue,
    F: FnMut(f64) -> Result<V>,
{
    let budget = Budget::new(opts.max_evaluations);
    adapt(|x| finite_guard(f(x)?, x), breaks, opts, &budget)
}

/// ∫_a^b f(x) dx for a fallible integrand.
pub fn try_integrate_finite<V, F>(f: F, a: f64, b: f64, opts: &QuadratureOptions) -> Result<QuadratureResult<V>>
where
    V: QuadValue,
    F: FnMut(f64) -> Result<V>,
{
    try_integrate_with_breaks(f, &[a, b], opts)
}

/// ∫_a^b f(x) dx to relative tolerance `tol`.
pub fn integrate_finite<V, F>(mut f: F, a: f64, b: f64, tol: f64) -> Result<QuadratureResult<V>>
where
    V: QuadValue,
    F: FnMut(f64) -> V,
{
    try_integrate_finite(|x| Ok(f(x)), a, b, &QuadratureOptions::with_tol(tol))
}

/// ∫_a^∞ f(t) dt through t = a + u/(1−u), for a fallible integrand.
pub fn try_integrate_semi_infinite<V, F>(f: F, a: f64, opts: &QuadratureOptions) -> Result<QuadratureResult<V>>
where
    V: QuadValue,
    F: FnMut(f64) -> Result<V>,
{
    let budget = Budget::new(opts.max_evaluations);
    semi_infinite_in(f, a, opts, &budget)
}

fn semi_infinite_in<V, F>(mut f: F, a: f64, opts: &QuadratureOptions, budget: &Budget) -> Result<QuadratureResult<V>>
where
    V: QuadValue,
    F: FnMut(f64) -> Result<V>,
{
    if !a.is_finite() {
        return Err(Error::Invalid(format!("lower bound must be finite, got {a}")));
    }
    let g = |u: f64| -> Result<V> {
        let w = 1.0 - u;
        let t = a + u / w;
        let v = f(t)?;
        if !v.is_finite_value() {
            if t > FAR_TAIL {
                return Ok(V::zero());
            }
            return Err(domain("quadrature", format!("integrand is not finite at {t}")));
        }
        Ok(v * (1.0 / (w * w)))
    };
    adapt(g, &[0.0, 1.0], opts, budget)
}

/// ∫_a^∞ f(t) dt to relative tolerance `tol`.
pub fn integrate_semi_infinite<V, F>(mut f: F, a: f64, tol: f64) -> Result<QuadratureResult<V>>
where
    V: QuadValue,
    F: FnMut(f64) -> V,
{
    try_integrate_semi_infinite(|x| Ok(f(x)), a, &QuadratureOptions::with_tol(tol))
}

fn span_in<V, F>(f: F, span: Span, opts: &QuadratureOptions, budget: &Budget) -> Result<QuadratureResult<V>>
where
    V: QuadValue,
    F: FnMut(f64) -> Result<V>,
{
    if span.hi == f64::INFINITY {
        semi_infinite_in(f, span.lo, opts, budget)
    } else {
        let mut f = f;
        adapt(|x| finite_guard(f(x)?, x), &[span.lo, span.hi], opts, budget)
    }
}

/// ∬ f(x, y) over a rectangle by nested adaptive integration. The reported
/// error is the outer estimate plus the integrated inner estimates; one
/// evaluation budget covers both levels.
pub fn try_integrate_2d<V, F>(mut f: F, domain: Rect, opts: &QuadratureOptions) -> Result<QuadratureResult<V>>
where
    V: QuadValue,
    F: FnMut(f64, f64) -> Result<V>,
{
    let budget = Budget::new(opts.max_evaluations);
    let inner_opts = QuadratureOptions {
        rel_tol: opts.rel_tol * 0.1,
        abs_floor: opts.abs_floor * 0.1,
        ..*opts
    };
    let inner_ok = Cell::new(true);
    let outer = |x: f64| -> Result<rule::WithError<V>> {
        let r = span_in(|y| f(x, y), domain.inner, &inner_opts, &budget)?;
        if !r.converged {
            inner_ok.set(false);
        }
        Ok(rule::WithError {
            value: r.value,
            error: r.error_estimate,
        })
    };
    let r = span_in(outer, domain.outer, opts, &budget)?;
    let error_estimate = r.error_estimate + r.value.error.abs();
    let converged = r.converged && inner_ok.get() && error_estimate <= opts.target(r.value.value.magnitude());
    Ok(QuadratureResult {
        value: r.value.value,
        error_estimate,
        evaluations: budget.used.get(),
        converged,
    })
}

/// ∬ f(x, y) over `domain` to relative tolerance `tol`.
pub fn integrate_2d<V, F>(mut f: F, domain: Rect, tol: f64) -> Result<QuadratureResult<V>>
where
    V: QuadValue,
    F: FnMut(f64, f64) -> V,
{
    try_integrate_2d(|x, y| Ok(f(x, y)), domain, &QuadratureOptions::with_tol(tol))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn linear_exact() {
        let r = integrate_finite(|t: f64| t, 0.0, 1.0, 1e-12).unwrap();
        assert!(r.converged);
        assert!((r.value - 0.5).abs() < 1e-14);
    }

    #[test]
    fn legendre_norm() {
        let p2 = |u: f64| 0.5 * (3.0 * u * u - 1.0);
        let r = integrate_finite(|u: f64| p2(u) * p2(u), -1.0, 1.0, 1e-12).unwrap();
        assert!((r.value - 0.4).abs() < 1e-14);
    }

    #[test]
    fn complex_integrand() {
        let r = integrate_finite(|t: f64| Complex::new(0.0, t).exp(), 0.0, PI, 1e-12).unwrap();
        assert!(r.converged);
        assert!((r.value - Complex::new(0.0, 2.0)).norm() < 1e-12);
    }

    #[test]
    fn endpoint_singularity() {
        let r = integrate_finite(|t: f64| 1.0 / t.sqrt(), 0.0, 1.0, 1e-10).unwrap();
        assert!(r.converged);
        assert!((r.value - 2.0).abs() < 1e-9);
    }

    #[test]
    fn semi_infinite_basics() {
        let r = integrate_semi_infinite(|t: f64| (-t).exp(), 0.0, 1e-12).unwrap();
        assert!((r.value - 1.0).abs() < 1e-12);
        let r = integrate_semi_infinite(|x: f64| (-2.0 * x * x).exp() * x * x, 0.0, 1e-12).unwrap();
        assert!((r.value - PI.sqrt() / (4.0 * 2f64.powf(1.5))).abs() < 1e-12);
    }

    #[test]
    fn semi_infinite_gaussian_transform() {
        let (c, x2): (f64, f64) = (0.11, 0.17);
        let r = integrate_semi_infinite(
            |r: f64| {
                if r == 0.0 {
                    0.0
                } else {
                    r.powf(-0.5) * (-c * r - x2 * x2 / (4.0 * r)).exp()
                }
            },
            0.0,
            1e-11,
        )
        .unwrap();
        let want = (PI / c).sqrt() * (-x2 * c.sqrt()).exp();
        assert!(r.converged);
        assert!((r.value - want).abs() < 1e-9 * want);
    }

    #[test]
    fn unit_square() {
        let dom = Rect {
            outer: Span::new(0.0, 1.0),
            inner: Span::new(0.0, 1.0),
        };
        let r = integrate_2d(|_, _| 1.0, dom, 1e-12).unwrap();
        assert!(r.converged);
        assert!((r.value - 1.0).abs() < 1e-14);
    }

    #[test]
    fn product_with_infinite_outer() {
        let dom = Rect {
            outer: Span::to_infinity(0.0),
            inner: Span::new(-1.0, 1.0),
        };
        let r = integrate_2d(|x: f64, y: f64| (-x).exp() * y * y, dom, 1e-10).unwrap();
        assert!(r.converged);
        assert!((r.value - 2.0 / 3.0).abs() < 1e-10);
    }

    #[test]
    fn budget_exhaustion_is_flagged() {
        let opts = QuadratureOptions {
            rel_tol: 1e-14,
            abs_floor: 0.0,
            max_evaluations: 200,
        };
        let r = try_integrate_finite(|t: f64| Ok((1.0 / t).sin()), 1e-6, 1.0, &opts).unwrap();
        assert!(!r.converged);
        assert!(r.evaluations <= 200);
        assert!(matches!(r.require("test"), Err(Error::Quadrature { .. })));
    }

    #[test]
    fn rejects_bad_bounds_and_nan() {
        assert!(integrate_finite(|t: f64| t, 1.0, 0.0, 1e-8).is_err());
        assert!(integrate_finite(|_: f64| f64::NAN, 0.0, 1.0, 1e-8).is_err());
    }
}
