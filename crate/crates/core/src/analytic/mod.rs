//! Analytic evaluators for the average rates of the typical link and of the
//! strongest eavesdropper, and their combination into the secrecy rate.
//!
//! Rates are in bits/s/Hz. Every evaluator takes a validated
//! [`SystemConfig`](crate::config::SystemConfig) and a quadrature spec for
//! the outermost integral; inner integrals run at a tighter tolerance.

mod an;
mod eve;
mod losball;
mod radial;
mod typical;
mod ula;

pub use an::{avg_rate_eve_exact_an, avg_rate_typical_exact_an, avg_rate_typical_lower_an, max_density_for_rate_an};
pub use eve::{avg_rate_eve_exact, eve_survival};
pub use losball::{
    avg_rate_eve_exact_losball, avg_rate_typical_exact_losball, losball_interference_gamma_form,
    losball_interference_quadrature,
};
pub use typical::{
    avg_rate_typical_exact, avg_rate_typical_lower, interference_lambda, lambda_closed_form, lambda_quadrature,
    max_density_for_rate, mean_exponent, typical_laplace_terms,
};
pub use ula::{avg_rate_eve_exact_ula, avg_rate_typical_lower_ula, secrecy_rate_ula_lower};

/// `[r_typ − r_eve]⁺`.
pub fn secrecy_rate(r_typ: f64, r_eve: f64) -> f64 {
    (r_typ - r_eve).max(0.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn secrecy_clamp() {
        assert_eq!(secrecy_rate(5.0, 7.0), 0.0);
        assert_eq!(secrecy_rate(7.0, 5.0), 2.0);
        assert_eq!(secrecy_rate(3.5, 0.0), 3.5);
    }
}
