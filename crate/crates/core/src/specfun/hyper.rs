use crate::error::{domain, Error, Result};
use crate::Complex;

const MAX_TERMS: usize = 5_000;

/// Kummer's ₁F₁(a; b; z) for integer parameters b ≥ a ≥ 1, by its Taylor
/// series Σ (a)_k z^k / ((b)_k k!).
pub fn kummer_1f1(a: u32, b: u32, z: Complex) -> Result<Complex> {
    if a == 0 || b < a {
        return Err(domain("kummer_1f1", format!("need b >= a >= 1, got a={a}, b={b}")));
    }
    let (a, b) = (a as f64, b as f64);
    let mut term = Complex::new(1.0, 0.0);
    let mut sum = term;
    let mut small = 0;
    for k in 0..MAX_TERMS {
        let kf = k as f64;
        term = term * z * ((a + kf) / ((b + kf) * (kf + 1.0)));
        sum += term;
        if !(sum.re.is_finite() && sum.im.is_finite()) {
            break;
        }
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
        op: "kummer_1f1",
        terms: MAX_TERMS,
    })
}
