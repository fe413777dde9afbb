//! Modified Bessel functions of half-integer order.
//!
//! `K_{n+1/2}` is a finite exponential-times-polynomial sum, so complex
//! arguments cost nothing extra. `I_{n+1/2}` is only needed on the positive
//! real axis.

use std::f64::consts::PI;

use super::factorial::factorial;
use crate::error::{domain, range, Result};
use crate::Complex;

/// Coefficient (J+n)!/(J!(n−J)!) of the finite Macdonald series.
fn macdonald_coeff(n: usize, j: usize) -> Result<f64> {
    Ok(factorial(j + n)? / (factorial(j)? * factorial(n - j)?))
}

/// Polynomial part Σ_J (J+n)!/(J!(n−J)!) (2z)^{−J}.
fn macdonald_poly(n: usize, z: Complex) -> Result<Complex> {
    // (2n)! must be representable.
    factorial(2 * n)?;
    let inv = (2.0 * z).inv();
    let mut acc = Complex::new(0.0, 0.0);
    let mut pow = Complex::new(1.0, 0.0);
    for j in 0..=n {
        acc += pow * macdonald_coeff(n, j)?;
        pow *= inv;
    }
    Ok(acc)
}

fn check_k_arg(z: Complex) -> Result<()> {
    if z == Complex::new(0.0, 0.0) {
        return Err(domain("bessel_k_half", "argument is zero"));
    }
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(domain("bessel_k_half", format!("non-finite argument {z}")));
    }
    if z.re < 0.0 {
        return Err(domain(
            "bessel_k_half",
            format!("argument {z} lies in the left half plane"),
        ));
    }
    Ok(())
}

/// K_{n+1/2}(z) for Re z > 0 or z on the imaginary axis, principal √z.
pub fn bessel_k_half(n: usize, z: Complex) -> Result<Complex> {
    let scaled = bessel_k_half_scaled(n, z)?;
    let v = scaled * (-z).exp();
    if !(v.re.is_finite() && v.im.is_finite()) {
        return Err(range("bessel_k_half", format!("K_{n}+1/2({z}) overflows")));
    }
    Ok(v)
}

/// e^{z} K_{n+1/2}(z), free of the exponential under/overflow.
pub fn bessel_k_half_scaled(n: usize, z: Complex) -> Result<Complex> {
    check_k_arg(z)?;
    let lead = (Complex::new(PI / 2.0, 0.0) / z).sqrt();
    Ok(lead * macdonald_poly(n, z)?)
}

/// K_{m+1/2}(z) for any integer m, using K_{−ν} = K_ν: order m + 1/2 with
/// m < 0 is served by the nonnegative index −m − 1.
pub fn bessel_k_half_signed(m: i64, z: Complex) -> Result<Complex> {
    bessel_k_half(routed_k_index(m), z)
}

/// Nonnegative index n with |m + 1/2| = n + 1/2.
pub fn routed_k_index(m: i64) -> usize {
    if m >= 0 {
        m as usize
    } else {
        (-m - 1) as usize
    }
}

/// I_{n+1/2}(x) for real x > 0.
pub fn bessel_i_half(n: usize, x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(domain("bessel_i_half", format!("need finite x > 0, got {x}")));
    }
    let nf = n as f64;
    let v = if x >= 25.0 && x >= nf * nf {
        i_half_closed(n, x)?
    } else {
        i_half_miller(n, x)
    };
    if !v.is_finite() {
        return Err(range("bessel_i_half", format!("I_{n}+1/2({x}) overflows")));
    }
    Ok(v)
}

/// (2πx)^{−1/2}[e^x Σ(−1)^J a_J (2x)^{−J} − (−1)^n e^{−x} Σ a_J (2x)^{−J}].
/// Only used where the alternating sum does not cancel.
fn i_half_closed(n: usize, x: f64) -> Result<f64> {
    let mut plus = 0.0;
    let mut minus = 0.0;
    let mut pow = 1.0;
    for j in 0..=n {
        let c = macdonald_coeff(n, j)? * pow;
        plus += if j % 2 == 0 { c } else { -c };
        minus += c;
        pow /= 2.0 * x;
    }
    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
    Ok((x.exp() * plus - sign * (-x).exp() * minus) / (2.0 * PI * x).sqrt())
}

/// Miller's backward recurrence I_{ν−1} = I_{ν+1} + (2ν/x) I_ν, normalised
/// by I_{1/2}(x) = √(2/(πx)) sinh x.
fn i_half_miller(n: usize, x: f64) -> f64 {
    let start = n + x.ceil() as usize + 40;
    let mut upper = 0.0f64; // order m + 3/2
    let mut cur = 1e-300f64; // order m + 1/2
    let mut target = 0.0f64;
    // Rescalings applied after `target` was captured, each by 1e−250.
    let mut rescaled = 0i32;
    for m in (1..=start).rev() {
        let lower = upper + (2 * m + 1) as f64 / x * cur;
        upper = cur;
        cur = lower;
        if m - 1 == n {
            target = cur;
        }
        if cur.abs() > 1e250 {
            cur *= 1e-250;
            upper *= 1e-250;
            if m - 1 <= n {
                rescaled += 1;
            }
        }
    }
    let i_half = (2.0 / (PI * x)).sqrt() * x.sinh();
    if rescaled == 0 {
        target / cur * i_half
    } else {
        (target.ln() - cur.ln() + i_half.ln() - 250.0 * rescaled as f64 * std::f64::consts::LN_10).exp()
    }
}
