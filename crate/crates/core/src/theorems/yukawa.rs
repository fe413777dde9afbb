//! The Yukawa-form function e^{−x√(Bk²+C)}/√(Bk²+C) and its one-range
//! expansions in powers of Bk².

use std::f64::consts::PI;

use crate::error::{domain, Error, Result};
use crate::series::{SeriesAccumulator, SeriesEvaluation, TruncationPolicy};
use crate::specfun::{bessel_k_half, bessel_k_half_signed, factorial, meijer_g_0313};
use crate::Complex;

/// Which square root of a negative real C the series uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Branch {
    /// √C = +i√|C| for C < 0.
    #[default]
    Principal,
    /// √C = −i√|C| for C < 0; exposed for sensitivity checks only.
    Conjugate,
}

/// Parameters of e^{−x₂L}/L with L = √(Bk² + C).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct YukawaFormParams {
    pub b: f64,
    pub c: Complex,
    pub k: f64,
    /// Decay length multiplier; after a corollary substitution this is η.
    pub x2: f64,
    pub branch: Branch,
    /// Accept k > 1, where the expansions are not guaranteed to converge.
    pub allow_k_above_one: bool,
}

impl YukawaFormParams {
    pub fn new(b: f64, c: Complex, x2: f64, k: f64) -> Self {
        Self {
            b,
            c,
            k,
            x2,
            branch: Branch::Principal,
            allow_k_above_one: false,
        }
    }

    pub fn real(b: f64, c: f64, x2: f64, k: f64) -> Self {
        Self::new(b, Complex::new(c, 0.0), x2, k)
    }

    pub fn with_branch(mut self, branch: Branch) -> Self {
        self.branch = branch;
        self
    }

    pub fn allowing_k_above_one(mut self) -> Self {
        self.allow_k_above_one = true;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let finite = self.b.is_finite()
            && self.c.re.is_finite()
            && self.c.im.is_finite()
            && self.k.is_finite()
            && self.x2.is_finite();
        if !finite {
            return Err(Error::Invalid("Yukawa-form parameters must be finite".into()));
        }
        if !(self.x2 > 0.0) {
            return Err(Error::Invalid(format!("x2 must be positive, got {}", self.x2)));
        }
        if self.k < 0.0 {
            return Err(Error::Invalid(format!("k must be non-negative, got {}", self.k)));
        }
        if self.k > 1.0 && !self.allow_k_above_one {
            return Err(Error::Invalid(format!(
                "k = {} exceeds 1; the expansion is only established for k <= 1 (override to proceed)",
                self.k
            )));
        }
        Ok(())
    }

    /// Bk².
    pub fn bk2(&self) -> f64 {
        self.b * self.k * self.k
    }

    /// √C on the configured branch.
    pub fn sqrt_c(&self) -> Complex {
        branch_sqrt(self.c, self.branch)
    }

    /// L = √(Bk² + C) on the configured branch.
    pub fn l(&self) -> Result<Complex> {
        let arg = self.c + self.bk2();
        if arg == Complex::new(0.0, 0.0) {
            return Err(Error::Pole {
                op: "yukawa_form",
                detail: "Bk^2 + C vanishes".into(),
            });
        }
        Ok(branch_sqrt(arg, self.branch))
    }

    /// |Bk²|/|C|; the expansions are observed to converge when this is < 1.
    pub fn convergence_ratio(&self) -> f64 {
        self.bk2().abs() / self.c.norm()
    }
}

/// Square root with the cut along the negative real axis, where the sign of
/// the imaginary part follows `branch` rather than the sign of a zero.
pub(crate) fn branch_sqrt(z: Complex, branch: Branch) -> Complex {
    if z.im == 0.0 && z.re < 0.0 {
        let s = (-z.re).sqrt();
        return match branch {
            Branch::Principal => Complex::new(0.0, s),
            Branch::Conjugate => Complex::new(0.0, -s),
        };
    }
    z.sqrt()
}

fn check_c(p: &YukawaFormParams, op: &'static str) -> Result<()> {
    if p.c == Complex::new(0.0, 0.0) {
        return Err(Error::Pole {
            op,
            detail: "C vanishes; the expansion point is singular".into(),
        });
    }
    Ok(())
}

/// e^{−x₂L}/L.
pub fn yukawa_form(p: &YukawaFormParams) -> Result<Complex> {
    p.validate()?;
    let l = p.l()?;
    Ok((-l * p.x2).exp() / l)
}

/// e^{−x₂L}, the left side of the exponential (no denominator) expansion.
pub fn yukawa_exponential(p: &YukawaFormParams) -> Result<Complex> {
    p.validate()?;
    let l = p.l()?;
    Ok((-l * p.x2).exp())
}

/// L^{j−1} e^{−x₂L}.
pub fn yukawa_power_form(j: usize, p: &YukawaFormParams) -> Result<Complex> {
    p.validate()?;
    let l = p.l()?;
    Ok(l.powi(j as i32 - 1) * (-l * p.x2).exp())
}

/// (−Bk²)ⁿ/n! · 2⁻ⁿ · x₂^{n+1/2} · √(2/π), shared by both expansions.
fn common_factor(n: usize, p: &YukawaFormParams) -> Result<f64> {
    let bk2 = p.bk2();
    Ok((2.0 / PI).sqrt() * (-bk2 / 2.0).powi(n as i32) / factorial(n)? * p.x2.powf(n as f64 + 0.5))
}

/// n-th term of the expansion of e^{−x₂L}/L:
/// √(2/π) (−Bk²)ⁿ/n! 2⁻ⁿ x₂^{n+1/2} C^{−n/2−1/4} K_{n+1/2}(x₂√C).
pub fn theorem1_term(n: usize, p: &YukawaFormParams) -> Result<Complex> {
    check_c(p, "theorem1_term")?;
    let sc = p.sqrt_c();
    let pow = sc.powf(-(n as f64) - 0.5);
    Ok(pow * bessel_k_half(n, sc * p.x2)? * common_factor(n, p)?)
}

/// n-th term of the expansion of e^{−x₂L}:
/// √(2/π) (−Bk²)ⁿ/n! 2⁻ⁿ x₂^{n+1/2} C^{1/4−n/2} K_{n−1/2}(x₂√C).
pub fn theorem5_term(n: usize, p: &YukawaFormParams) -> Result<Complex> {
    check_c(p, "theorem5_term")?;
    let sc = p.sqrt_c();
    let pow = sc.powf(0.5 - n as f64);
    Ok(pow * bessel_k_half_signed(n as i64 - 1, sc * p.x2)? * common_factor(n, p)?)
}

/// n-th term of the expansion of L^{j−1} e^{−x₂L}:
/// (1/√π) (−Bk²)ⁿ/n! C^{j/2−n−1/2} G(4/(C x₂²)), with the Meijer factor
/// taken at ρ-power μ = n − (j+1)/2. Requires real C > 0.
pub fn theorem6_term(j: usize, n: usize, p: &YukawaFormParams) -> Result<Complex> {
    check_c(p, "theorem6_term")?;
    if p.c.im != 0.0 || p.c.re <= 0.0 {
        return Err(domain(
            "theorem6_term",
            format!("the Meijer-G route needs real C > 0, got {}", p.c),
        ));
    }
    let c = p.c.re;
    let mu = n as f64 - (j as f64 + 1.0) / 2.0;
    let g = meijer_g_0313(j, mu, 4.0 / (c * p.x2 * p.x2))?;
    let v = (-p.bk2()).powi(n as i32) / factorial(n)? / PI.sqrt() * c.powf(j as f64 / 2.0 - n as f64 - 0.5) * g;
    Ok(Complex::new(v, 0.0))
}

fn eval_series<F>(p: &YukawaFormParams, policy: &TruncationPolicy, mut term: F) -> Result<SeriesEvaluation>
where
    F: FnMut(usize) -> Result<Complex>,
{
    p.validate()?;
    policy.validate()?;
    let mut acc = SeriesAccumulator::new(*policy);
    if p.k > 1.0 {
        acc.warn(format!("k = {} > 1: convergence is not guaranteed", p.k));
    }
    if p.bk2() != 0.0 && p.convergence_ratio() >= 1.0 {
        acc.warn(format!(
            "|Bk^2|/|C| = {:.6} >= 1: outside the observed convergence domain",
            p.convergence_ratio()
        ));
    }
    if p.bk2() == 0.0 {
        acc.push(term(0)?);
        acc.mark_exact();
        return Ok(acc.finish());
    }
    for n in 0.. {
        if acc.push(term(n)?) {
            break;
        }
    }
    Ok(acc.finish())
}

pub fn theorem1_eval(p: &YukawaFormParams, policy: &TruncationPolicy) -> Result<SeriesEvaluation> {
    eval_series(p, policy, |n| theorem1_term(n, p))
}

pub fn theorem5_eval(p: &YukawaFormParams, policy: &TruncationPolicy) -> Result<SeriesEvaluation> {
    eval_series(p, policy, |n| theorem5_term(n, p))
}

pub fn theorem6_eval(j: usize, p: &YukawaFormParams, policy: &TruncationPolicy) -> Result<SeriesEvaluation> {
    eval_series(p, policy, |n| theorem6_term(j, n, p))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn point() -> YukawaFormParams {
        YukawaFormParams::real(0.13, 0.11, 0.17, 0.23)
    }

    #[test]
    fn zero_b_is_single_exact_term() {
        let p = YukawaFormParams::real(0.0, 1.0, 1.0, 0.5);
        let e = theorem1_eval(&p, &TruncationPolicy::default()).unwrap();
        assert_eq!(e.terms_used, 1);
        assert!(e.converged);
        assert!((e.value.re - (-1.0f64).exp()).abs() < 1e-15);
        let e5 = theorem5_eval(&p, &TruncationPolicy::default()).unwrap();
        assert!((e5.value.re - (-1.0f64).exp()).abs() < 1e-15);
    }

    #[test]
    fn series_match_closed_forms() {
        let p = point();
        let e1 = theorem1_eval(&p, &TruncationPolicy::default()).unwrap();
        assert!(e1.converged);
        assert!((e1.value - yukawa_form(&p).unwrap()).norm() < 1e-9);
        let e5 = theorem5_eval(&p, &TruncationPolicy::default()).unwrap();
        assert!((e5.value - yukawa_exponential(&p).unwrap()).norm() < 1e-10);
    }

    #[test]
    fn k_gate() {
        let p = YukawaFormParams::real(0.13, 0.11, 0.17, 1.5);
        assert!(yukawa_form(&p).is_err());
        assert!(theorem1_eval(&p, &TruncationPolicy::default()).is_err());
        let e = theorem1_eval(&p.allowing_k_above_one(), &TruncationPolicy::default()).unwrap();
        assert!(!e.warnings.is_empty());
    }

    #[test]
    fn pole_detection() {
        let p = YukawaFormParams::real(-1.0, 1.0, 0.5, 1.0);
        assert!(matches!(yukawa_form(&p), Err(Error::Pole { .. })));
        let q = YukawaFormParams::real(1.0, 0.0, 0.5, 1.0);
        assert!(matches!(theorem1_term(0, &q), Err(Error::Pole { .. })));
    }

    #[test]
    fn negative_c_branches() {
        let p = YukawaFormParams::real(0.2, -0.3, 0.5, 1.0);
        assert_eq!(p.sqrt_c(), Complex::new(0.0, 0.3f64.sqrt()));
        let q = p.with_branch(Branch::Conjugate);
        assert_eq!(q.sqrt_c(), Complex::new(0.0, -(0.3f64.sqrt())));
    }
}
