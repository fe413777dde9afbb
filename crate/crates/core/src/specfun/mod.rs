//! Special-function kernel over complex arguments.

mod bessel;
mod erf;
mod expint;
mod factorial;
mod gamma;
mod hyper;
mod meijer;
mod poly;

pub use bessel::{bessel_i_half, bessel_k_half, bessel_k_half_scaled, bessel_k_half_signed, routed_k_index};
pub use erf::erf_complex;
pub use expint::exp_integral_ei;
pub use factorial::{binomial, binomial_real, double_factorial, factorial, gamma_half, pochhammer, MAX_FACTORIAL};
pub use gamma::{
    exp_integral_e1, lower_gamma_scaled, upper_incomplete_gamma, upper_incomplete_gamma_bounded, MAX_GAMMA_DEPTH,
};
pub use hyper::kummer_1f1;
pub use meijer::{meijer_g_0313, meijer_g_0313_tol};
pub use poly::{cos_power_to_legendre, hermite_h, legendre_p, LegendreCoeffSet};
