use std::f64::consts::PI;

use super::gamma::upper_incomplete_gamma;
use crate::error::{range, Error, Result};
use crate::Complex;

const TAYLOR_MAX_TERMS: usize = 10_000;

/// erf(z) for complex z.
///
/// Near the imaginary axis the Maclaurin series loses at most a factor
/// e^{2 Re(z)²}, so it is used there and for |z| ≤ 2. Elsewhere
/// erf(z) = 1 − Γ(1/2, z²)/√π on Re z > 0, extended by oddness.
pub fn erf_complex(z: Complex) -> Result<Complex> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(range("erf_complex", format!("non-finite argument {z}")));
    }
    if z.re < 0.0 {
        return erf_complex(-z).map(|v| -v);
    }
    let v = if z.norm() <= 2.0 || z.re <= 1.0 {
        erf_taylor(z)?
    } else {
        Complex::new(1.0, 0.0) - upper_incomplete_gamma(0.5, z * z)? / PI.sqrt()
    };
    if !(v.re.is_finite() && v.im.is_finite()) {
        return Err(range("erf_complex", format!("erf({z}) overflows double precision")));
    }
    Ok(v)
}

/// 2/√π Σ (−1)^k z^{2k+1} / (k! (2k+1)).
fn erf_taylor(z: Complex) -> Result<Complex> {
    let z2 = z * z;
    let mut pow = z;
    let mut sum = z;
    for k in 1..TAYLOR_MAX_TERMS {
        pow = -pow * z2 / k as f64;
        let term = pow / (2 * k + 1) as f64;
        sum += term;
        if !(sum.re.is_finite() && sum.im.is_finite()) {
            return Err(range("erf_complex", format!("series overflow at {z}")));
        }
        if term.norm() <= 1e-17 * sum.norm() && k as f64 > z2.norm() {
            return Ok(sum * (2.0 / PI.sqrt()));
        }
    }
    Err(Error::Truncation {
        op: "erf_complex",
        terms: TAYLOR_MAX_TERMS,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    #[test]
    fn real_axis_values() {
        assert_eq!(erf_complex(c(0.0, 0.0)).unwrap(), c(0.0, 0.0));
        assert!((erf_complex(c(1.0, 0.0)).unwrap().re - 0.842_700_792_949_714_9).abs() < 1e-15);
        assert!((erf_complex(c(3.0, 0.0)).unwrap().re - 0.999_977_909_503_001_4).abs() < 1e-15);
    }

    #[test]
    fn complex_reference() {
        // erf(1+i) = 1.3161512816979476 + 0.19045346923783471 i
        let v = erf_complex(c(1.0, 1.0)).unwrap();
        assert!((v - c(1.316_151_281_697_947_6, 0.190_453_469_237_834_7)).norm() < 1e-14);
        // erf(3+2i) = 0.998963278856817 − 1.15467243792906e-5 i
        let v = erf_complex(c(3.0, 2.0)).unwrap();
        assert!(
            (v - c(0.998_963_278_856_817, -1.154_672_437_929_06e-5)).norm() < 1e-14,
            "{v}"
        );
    }

    #[test]
    fn odd_symmetry() {
        for z in [c(0.3, 0.7), c(2.5, -1.0), c(-4.0, 3.0)] {
            assert_eq!(erf_complex(-z).unwrap(), -erf_complex(z).unwrap());
        }
    }

    #[test]
    fn branches_meet() {
        let a = erf_taylor(c(1.9, 0.9)).unwrap();
        let b = Complex::new(1.0, 0.0) - upper_incomplete_gamma(0.5, c(1.9, 0.9) * c(1.9, 0.9)).unwrap() / PI.sqrt();
        assert!((a - b).norm() < 1e-13);
    }

    #[test]
    fn overflow_is_reported() {
        assert!(matches!(erf_complex(c(0.0, 40.0)), Err(Error::Range { .. })));
    }
}
