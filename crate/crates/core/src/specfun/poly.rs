use std::collections::BTreeMap;

use super::factorial::{double_factorial, factorial};
use crate::error::{domain, Result};

/// Legendre polynomial P_n(u) on [−1, 1] by Bonnet's recurrence.
pub fn legendre_p(n: usize, u: f64) -> Result<f64> {
    if !(u.abs() <= 1.0) {
        return Err(domain("legendre_p", format!("|u| must be <= 1, got {u}")));
    }
    Ok(legendre_unchecked(n, u))
}

pub(crate) fn legendre_unchecked(n: usize, u: f64) -> f64 {
    let (mut p0, mut p1) = (1.0, u);
    if n == 0 {
        return p0;
    }
    for k in 1..n {
        let kf = k as f64;
        let p2 = ((2.0 * kf + 1.0) * u * p1 - kf * p0) / (kf + 1.0);
        p0 = p1;
        p1 = p2;
    }
    p1
}

/// Physicists' Hermite polynomial H_j(x).
pub fn hermite_h(j: usize, x: f64) -> f64 {
    let (mut h0, mut h1) = (1.0, 2.0 * x);
    if j == 0 {
        return h0;
    }
    for k in 1..j {
        let h2 = 2.0 * x * h1 - 2.0 * k as f64 * h0;
        h0 = h1;
        h1 = h2;
    }
    h1
}

/// Legendre expansion of cos^j θ.
#[derive(Debug, Clone, PartialEq)]
pub struct LegendreCoeffSet {
    pub power: usize,
    /// Degree m → coefficient; only degrees with the parity of `power`.
    pub coeffs: BTreeMap<usize, f64>,
}

impl LegendreCoeffSet {
    pub fn coeff(&self, m: usize) -> f64 {
        self.coeffs.get(&m).copied().unwrap_or(0.0)
    }

    /// Σ_m c_m P_m(u).
    pub fn eval(&self, u: f64) -> Result<f64> {
        self.coeffs.iter().map(|(&m, &c)| legendre_p(m, u).map(|p| c * p)).sum()
    }
}

/// u^j = Σ_m (2m+1) j! 2^{(m−j)/2} / (((j−m)/2)! (j+m+1)!!) P_m(u), m = j, j−2, …
pub fn cos_power_to_legendre(j: usize) -> Result<LegendreCoeffSet> {
    let mut coeffs = BTreeMap::new();
    let jf = factorial(j)?;
    let mut m = j as i64;
    while m >= 0 {
        let mu = m as usize;
        let half = (j - mu) / 2;
        let c = (2 * mu + 1) as f64 * jf * 2f64.powf((mu as f64 - j as f64) / 2.0)
            / (factorial(half)? * double_factorial((j + mu + 1) as i64)?);
        coeffs.insert(mu, c);
        m -= 2;
    }
    Ok(LegendreCoeffSet { power: j, coeffs })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn legendre_low_degrees() {
        assert_eq!(legendre_p(0, 0.3).unwrap(), 1.0);
        assert_eq!(legendre_p(1, 0.3).unwrap(), 0.3);
        let u: f64 = -0.6;
        let p4 = (35.0 * u.powi(4) - 30.0 * u * u + 3.0) / 8.0;
        assert!((legendre_p(4, u).unwrap() - p4).abs() < 1e-15);
        assert!(legendre_p(2, 1.01).is_err());
        assert!(legendre_p(2, f64::NAN).is_err());
    }

    #[test]
    fn hermite_low_degrees() {
        assert_eq!(hermite_h(0, 1.7), 1.0);
        assert!((hermite_h(1, 1.7) - 3.4).abs() < 1e-15);
        let x: f64 = 0.5;
        assert!((hermite_h(4, x) - (16.0 * x.powi(4) - 48.0 * x * x + 12.0)).abs() < 1e-13);
    }

    #[test]
    fn cos_power_small_cases() {
        let c0 = cos_power_to_legendre(0).unwrap();
        assert_eq!(c0.coeffs.len(), 1);
        assert!((c0.coeff(0) - 1.0).abs() < 1e-15);
        let c1 = cos_power_to_legendre(1).unwrap();
        assert!((c1.coeff(1) - 1.0).abs() < 1e-15);
        let c3 = cos_power_to_legendre(3).unwrap();
        assert!((c3.coeff(1) - 0.6).abs() < 1e-15);
        assert!((c3.coeff(3) - 0.4).abs() < 1e-15);
        assert_eq!(c3.coeff(2), 0.0);
    }
}
