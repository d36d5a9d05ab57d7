//! Shared numerical kernels: adaptive quadrature and the incomplete gamma function.

// Published coefficients are kept at their full printed precision.
#[allow(clippy::excessive_precision)]
mod gamma;
#[allow(clippy::excessive_precision)]
mod quadrature;

pub use gamma::{lower_incomplete_gamma, upper_incomplete_gamma};
pub use quadrature::{
    integrate_finite, integrate_log_panels, integrate_panels, integrate_semi_infinite, mean_periodic, QuadratureError,
    QuadratureResult, QuadratureSpec,
};
