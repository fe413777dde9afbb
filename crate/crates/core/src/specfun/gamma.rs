//! Upper incomplete gamma Γ(a, z) for integer and half-integer a with
//! complex z, plus the exponential integral E₁ and the entire function
//! z^{−a} γ(a, z).

use std::f64::consts::PI;

use super::factorial::gamma_half;
use crate::error::{capacity, domain, Error, Result};
use crate::Complex;

/// Largest |a| reachable by recurrence from the anchors Γ(0), Γ(1/2), Γ(1).
pub const MAX_GAMMA_DEPTH: usize = 512;

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
const CF_MAX_ITER: usize = 20_000;
const SERIES_MAX_ITER: usize = 500;

fn zero() -> Complex {
    Complex::new(0.0, 0.0)
}

/// z^a on the principal branch, exact multiplication for integer a.
pub(crate) fn cpow(z: Complex, a: f64) -> Complex {
    if a.fract() == 0.0 && a.abs() < 64.0 {
        z.powi(a as i32)
    } else {
        z.powf(a)
    }
}

/// Γ(a, z) for 2a ∈ ℤ. See [`upper_incomplete_gamma_bounded`].
pub fn upper_incomplete_gamma(a: f64, z: Complex) -> Result<Complex> {
    upper_incomplete_gamma_bounded(a, z, MAX_GAMMA_DEPTH)
}

/// Γ(a, z) with an explicit bound on the recurrence depth |a|.
pub fn upper_incomplete_gamma_bounded(a: f64, z: Complex, max_depth: usize) -> Result<Complex> {
    const OP: &str = "upper_incomplete_gamma";
    if !(2.0 * a).is_finite() || (2.0 * a).fract() != 0.0 {
        return Err(domain(OP, format!("order {a} is not an integer or half-integer")));
    }
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(domain(OP, format!("non-finite argument {z}")));
    }
    if a.abs() > max_depth as f64 {
        return Err(capacity(
            OP,
            format!("|a| = {} exceeds recurrence depth {max_depth}", a.abs()),
        ));
    }
    let positive_integer = a > 0.0 && a.fract() == 0.0;
    if z == zero() {
        if a <= 0.0 {
            return Err(Error::Divergence {
                op: OP,
                detail: format!("Γ({a}, 0) is infinite"),
            });
        }
        return Ok(Complex::new(gamma_half((2.0 * a) as usize)?, 0.0));
    }
    if z.im == 0.0 && z.re < 0.0 && !positive_integer {
        return Err(domain(OP, format!("argument {z} lies on the branch cut")));
    }

    let half = a.fract() != 0.0;
    let r = z.norm();
    if a > 0.0 {
        if r > a.max(1.0) {
            return gamma_cf(a, z);
        }
        // Upward: Γ(s+1) = s Γ(s) + z^s e^{−z}.
        let ez = (-z).exp();
        let (mut s, mut g) = if half { (0.5, gamma_half_anchor(z)?) } else { (1.0, ez) };
        while s < a {
            g = g * s + cpow(z, s) * ez;
            s += 1.0;
        }
        return Ok(g);
    }
    if r > 1.0 {
        return gamma_cf(a, z);
    }
    // Downward: Γ(s) = (Γ(s+1) − z^s e^{−z}) / s.
    let ez = (-z).exp();
    let (mut s, mut g) = if half {
        (0.5, gamma_half_anchor(z)?)
    } else {
        (0.0, exp_integral_e1(z)?)
    };
    while s > a {
        s -= 1.0;
        g = (g - cpow(z, s) * ez) / s;
    }
    Ok(g)
}

/// Γ(1/2, z) = √π erfc(√z).
fn gamma_half_anchor(z: Complex) -> Result<Complex> {
    if z.norm() <= 1.0 {
        let sp = PI.sqrt();
        Ok(Complex::new(sp, 0.0) - lower_gamma_scaled(0.5, z)? * z.sqrt())
    } else {
        gamma_cf(0.5, z)
    }
}

/// Legendre continued fraction
/// Γ(a,z) = e^{−z} z^a / (z+1−a − 1(1−a)/(z+3−a − 2(2−a)/(z+5−a − …))),
/// evaluated by the modified Lentz method.
fn gamma_cf(a: f64, z: Complex) -> Result<Complex> {
    let tiny = Complex::new(1e-300, 0.0);
    let fix = |v: Complex| if v == zero() { tiny } else { v };
    let mut f = fix(z + (1.0 - a));
    let mut c = f;
    let mut d = zero();
    for i in 1..CF_MAX_ITER {
        let fi = i as f64;
        let an = -fi * (fi - a);
        let bn = z + (2.0 * fi + 1.0 - a);
        d = fix(bn + d * an).inv();
        c = fix(bn + c.inv() * an);
        let delta = c * d;
        f *= delta;
        if (delta - 1.0).norm() < 1e-16 {
            return Ok((-z).exp() * cpow(z, a) / f);
        }
    }
    Err(Error::Truncation {
        op: "upper_incomplete_gamma",
        terms: CF_MAX_ITER,
    })
}

/// E₁(z) = Γ(0, z), principal branch.
pub fn exp_integral_e1(z: Complex) -> Result<Complex> {
    if z == zero() {
        return Err(Error::Divergence {
            op: "exp_integral_e1",
            detail: "E1(0) is infinite".into(),
        });
    }
    if z.norm() > 1.0 {
        return gamma_cf(0.0, z);
    }
    // −γ − ln z − Σ_{k≥1} (−z)^k / (k·k!)
    let mut sum = zero();
    let mut pow = Complex::new(1.0, 0.0);
    for k in 1..SERIES_MAX_ITER {
        pow = pow * (-z) / k as f64;
        let term = pow / k as f64;
        sum += term;
        if term.norm() < 1e-17 * sum.norm() {
            return Ok(-sum - z.ln() - EULER_GAMMA);
        }
    }
    Err(Error::Truncation {
        op: "exp_integral_e1",
        terms: SERIES_MAX_ITER,
    })
}

/// z^{−a} γ(a, z) = Σ_k (−z)^k / (k! (a+k)), an entire function of z, for
/// a > 0 with 2a ∈ ℤ.
pub fn lower_gamma_scaled(a: f64, z: Complex) -> Result<Complex> {
    const OP: &str = "lower_gamma_scaled";
    if !(a > 0.0) || (2.0 * a).fract() != 0.0 {
        return Err(domain(OP, format!("order {a} must be a positive (half-)integer")));
    }
    if z.norm() > 2.0 && z.norm() < a + 2.0 {
        // Large order: Γ(a) − Γ(a, z) would cancel, and the alternating
        // series below loses e^{|z|}; e^{−z} Σ z^k/(a)_{k+1} has neither problem.
        let mut sum = zero();
        let mut term = Complex::new(1.0 / a, 0.0);
        for k in 0..SERIES_MAX_ITER {
            if k > 0 {
                term = term * z / (a + k as f64);
            }
            sum += term;
            if term.norm() < 1e-17 * sum.norm() {
                return Ok(sum * (-z).exp());
            }
        }
        return Err(Error::Truncation {
            op: OP,
            terms: SERIES_MAX_ITER,
        });
    }
    if z.norm() > 2.0 {
        let full = gamma_half((2.0 * a) as usize)?;
        let upper = upper_incomplete_gamma(a, z)?;
        return Ok((Complex::new(full, 0.0) - upper) * cpow(z, -a));
    }
    let mut sum = zero();
    let mut pow = Complex::new(1.0, 0.0);
    for k in 0..SERIES_MAX_ITER {
        if k > 0 {
            pow = pow * (-z) / k as f64;
        }
        let term = pow / (a + k as f64);
        sum += term;
        if k > 0 && term.norm() < 1e-17 * sum.norm() {
            return Ok(sum);
        }
    }
    Err(Error::Truncation {
        op: OP,
        terms: SERIES_MAX_ITER,
    })
}
