//! Cached factorials, double factorials and Γ at half-integers.

use std::sync::LazyLock;

use crate::error::{capacity, Result};

/// Largest n with n! finite in double precision.
pub const MAX_FACTORIAL: usize = 170;

static FACTORIALS: LazyLock<Vec<f64>> = LazyLock::new(|| {
    let mut table = Vec::with_capacity(MAX_FACTORIAL + 1);
    let mut acc = 1.0f64;
    table.push(acc);
    for n in 1..=MAX_FACTORIAL {
        acc *= n as f64;
        table.push(acc);
    }
    table
});

pub fn factorial(n: usize) -> Result<f64> {
    FACTORIALS
        .get(n)
        .copied()
        .ok_or_else(|| capacity("factorial", format!("{n}! exceeds the cache bound {MAX_FACTORIAL}!")))
}

/// n!! for n ≥ −1, with (−1)!! = 0!! = 1.
pub fn double_factorial(n: i64) -> Result<f64> {
    if n < -1 {
        return Err(capacity("double_factorial", format!("undefined for {n}")));
    }
    let mut acc = 1.0f64;
    let mut m = n;
    while m > 1 {
        acc *= m as f64;
        m -= 2;
    }
    if acc.is_finite() {
        Ok(acc)
    } else {
        Err(capacity("double_factorial", format!("{n}!! overflows")))
    }
}

pub fn binomial(n: usize, k: usize) -> Result<f64> {
    if k > n {
        return Ok(0.0);
    }
    // Multiplicative form stays exact well beyond the factorial cache.
    let k = k.min(n - k);
    let mut acc = 1.0f64;
    for i in 0..k {
        acc = acc * (n - i) as f64 / (i + 1) as f64;
    }
    Ok(acc.round())
}

/// Generalised binomial C(a, k) for real a.
pub fn binomial_real(a: f64, k: usize) -> f64 {
    let mut acc = 1.0;
    for i in 0..k {
        acc *= (a - i as f64) / (i + 1) as f64;
    }
    acc
}

/// Γ(m/2) for a positive integer m.
pub fn gamma_half(m: usize) -> Result<f64> {
    if m == 0 {
        return Err(capacity("gamma_half", "pole at 0"));
    }
    if m % 2 == 0 {
        factorial(m / 2 - 1)
    } else {
        // Γ(k + 1/2) = (2k−1)!! √π / 2^k
        let k = (m - 1) / 2;
        Ok(double_factorial(2 * k as i64 - 1)? * std::f64::consts::PI.sqrt() / 2f64.powi(k as i32))
    }
}

/// Rising factorial (a)_k.
pub fn pochhammer(a: f64, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (a + i as f64))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_factorials() {
        assert_eq!(factorial(0).unwrap(), 1.0);
        assert_eq!(factorial(5).unwrap(), 120.0);
        assert!(factorial(170).unwrap().is_finite());
        assert!(factorial(171).is_err());
    }

    #[test]
    fn double_factorials() {
        assert_eq!(double_factorial(-1).unwrap(), 1.0);
        assert_eq!(double_factorial(0).unwrap(), 1.0);
        assert_eq!(double_factorial(7).unwrap(), 105.0);
        assert_eq!(double_factorial(8).unwrap(), 384.0);
    }

    #[test]
    fn half_integer_gamma() {
        let sp = std::f64::consts::PI.sqrt();
        assert!((gamma_half(1).unwrap() - sp).abs() < 1e-15);
        assert!((gamma_half(3).unwrap() - sp / 2.0).abs() < 1e-15);
        assert!((gamma_half(5).unwrap() - 0.75 * sp).abs() < 1e-15);
        assert_eq!(gamma_half(6).unwrap(), 2.0);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2).unwrap(), 10.0);
        assert_eq!(binomial(3, 5).unwrap(), 0.0);
        assert!((binomial_real(0.5, 2) + 0.125).abs() < 1e-15);
        assert_eq!(pochhammer(1.5, 3), 1.5 * 2.5 * 3.5);
    }
}
