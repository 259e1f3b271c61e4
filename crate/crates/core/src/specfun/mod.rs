//! Scalar special functions: complex log-gamma, Pochhammer symbols,
//! Kostant polynomials, spherical functions and the Plancherel density.

mod gamma;
mod kostant;
mod plancherel;
mod spherical;

pub use gamma::{log_gamma, pochhammer};
pub use kostant::{kostant_coefficients, kostant_polynomial};
pub use plancherel::plancherel_density;
pub use spherical::{spherical_function, xi, SphericalEvaluator};

use num_complex::Complex64;

/// Spectral parameter: a point of the complexified dual of the flat.
pub type SpectralParam = Complex64;

/// True when the spectral parameter lies in the horizontal strip of
/// half-width `r`.
pub fn in_strip(lambda: SpectralParam, r: f64) -> bool {
    lambda.re.is_finite() && lambda.im.is_finite() && lambda.im.abs() <= r
}
