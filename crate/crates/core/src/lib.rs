//! One-range addition theorems for Slater orbitals and Yukawa-form
//! functions e^{−x√(Bk²+C)}/√(Bk²+C), the amplitude-integral series built
//! on them, and the quadrature oracles used to check every series.

pub mod amplitudes;
pub mod ellipsoidal;
pub mod error;
pub mod quadrature;
pub mod series;
pub mod specfun;
pub mod theorems;

pub use num_complex::Complex64 as Complex;

pub use error::{Error, Result};
pub use quadrature::{QuadratureOptions, QuadratureResult};
pub use series::{SeriesEvaluation, TruncationPolicy};
