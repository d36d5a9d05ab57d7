//! Upper incomplete gamma function `Γ(a, x)` for any real order, including
//! the negative non-integer orders that show up in the interference integrals.
//!
//! Evaluation regions:
//! * `x >= max(1.5, a + 1)`: Legendre continued fraction (modified Lentz),
//!   valid for every real `a`;
//! * `a > 0.5`, `x < a + 1`: `Γ(a) − γ(a, x)` with the lower series;
//! * `a <= 0.5`, `x < 1.5`: evaluate `Γ(b, x)` for `b = a + m ∈ (−½, ½]` with a
//!   cancellation-free split of `Γ(b) − x^b / b`, then recur down
//!   `Γ(c − 1, x) = (Γ(c, x) − x^{c−1} e^{−x}) / (c − 1)` to `a`.

use crate::error::{Error, Result};

const EULER_GAMMA: f64 = 0.577_215_664_901_532_860_6;
const EPS: f64 = 1e-16;
const MAX_ITER: usize = 2000;

/// `Γ(a, x) = ∫_x^∞ t^(a−1) e^(−t) dt` for real `a` and `x > 0`.
pub fn upper_incomplete_gamma(a: f64, x: f64) -> Result<f64> {
    if !a.is_finite() {
        return Err(Error::invalid("order", format!("must be finite, got {a}")));
    }
    if !(x.is_finite() && x > 0.0) {
        return Err(Error::invalid(
            "x",
            format!("must be finite and > 0 (the integral diverges at 0 for a <= 0), got {x}"),
        ));
    }
    Ok(if x >= (a + 1.0).max(1.5) {
        continued_fraction(a, x)
    } else if a > 0.5 {
        libm::tgamma(a) - lower_series(a, x)
    } else {
        small_x_any_order(a, x)
    })
}

/// Lower incomplete gamma `γ(a, x) = ∫_0^x t^(a−1) e^(−t) dt` for `a > 0`, `x >= 0`.
pub fn lower_incomplete_gamma(a: f64, x: f64) -> Result<f64> {
    if !(a.is_finite() && a > 0.0) {
        return Err(Error::invalid("order", format!("must be finite and > 0, got {a}")));
    }
    if !(x.is_finite() && x >= 0.0) {
        return Err(Error::invalid("x", format!("must be finite and >= 0, got {x}")));
    }
    Ok(if x == 0.0 {
        0.0
    } else if x < a + 1.0 {
        lower_series(a, x)
    } else {
        libm::tgamma(a) - continued_fraction(a, x)
    })
}

fn continued_fraction(a: f64, x: f64) -> f64 {
    let tiny = 1e-300;
    let mut b = x + 1.0 - a;
    let mut c = 1.0 / tiny;
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..=MAX_ITER {
        let an = -(i as f64) * (i as f64 - a);
        b += 2.0;
        d = an * d + b;
        if d.abs() < tiny {
            d = tiny;
        }
        c = b + an / c;
        if c.abs() < tiny {
            c = tiny;
        }
        d = 1.0 / d;
        let delta = d * c;
        h *= delta;
        if (delta - 1.0).abs() < EPS {
            break;
        }
    }
    (a * x.ln() - x).exp() * h
}

/// `γ(a, x)` for `a > 0`.
fn lower_series(a: f64, x: f64) -> f64 {
    let mut ap = a;
    let mut term = 1.0 / a;
    let mut sum = term;
    for _ in 0..MAX_ITER {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if term.abs() < sum.abs() * EPS {
            break;
        }
    }
    sum * (a * x.ln() - x).exp()
}

fn small_x_any_order(a: f64, x: f64) -> f64 {
    let steps = (0.5 - a).floor().max(0.0) as u32;
    let b = a + steps as f64;
    let mut value = reduced_order(b, x);
    let mut c = b;
    for _ in 0..steps {
        let cm1 = c - 1.0;
        value = (value - (cm1 * x.ln() - x).exp()) / cm1;
        c = cm1;
    }
    value
}

/// `Γ(b, x)` for `b ∈ (−½, ½]`, `0 < x < 1.5`:
/// `Γ(b, x) = (Γ(1+b) − 1)/b − (x^b − 1)/b − x^b Σ_{k≥1} (−x)^k / (k! (b + k))`.
fn reduced_order(b: f64, x: f64) -> f64 {
    let gamma_term = if b == 0.0 {
        -EULER_GAMMA
    } else {
        ln_gamma_1p(b).exp_m1() / b
    };
    let ln_x = x.ln();
    let power_term = if b * ln_x == 0.0 { ln_x } else { (b * ln_x).exp_m1() / b };
    let mut term = 1.0;
    let mut sum = 0.0;
    for k in 1..MAX_ITER {
        let kf = k as f64;
        term *= -x / kf;
        let add = term / (b + kf);
        sum += add;
        if add.abs() < EPS * sum.abs() {
            break;
        }
    }
    gamma_term - power_term - (b * ln_x).exp() * sum
}

/// `ln Γ(1 + b)` for `|b| <= ½` from its Maclaurin series
/// `−γ b + Σ_{k≥2} (−1)^k ζ(k) b^k / k`, accurate in relative terms as `b → 0`.
fn ln_gamma_1p(b: f64) -> f64 {
    const ZETA_LOW: [f64; 8] = [
        1.644_934_066_848_226_4,
        1.202_056_903_159_594_3,
        1.082_323_233_711_138_2,
        1.036_927_755_143_370_0,
        1.017_343_061_984_449_1,
        1.008_349_277_381_922_8,
        1.004_077_356_197_944_3,
        1.002_008_392_826_082_2,
    ];
    let mut sum = -EULER_GAMMA * b;
    let mut power = -b;
    for k in 2..=70u32 {
        power *= -b;
        let zeta = match ZETA_LOW.get(k as usize - 2) {
            Some(z) => *z,
            None => (1..=40).map(|n| (n as f64).powi(-(k as i32))).sum(),
        };
        let term = zeta * power / k as f64;
        sum += term;
        if term.abs() < 1e-18 * sum.abs() {
            break;
        }
    }
    sum
}
