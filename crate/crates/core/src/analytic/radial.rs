//! Radial building blocks shared by the evaluators: LoS mass inside a disc,
//! the interference Laplace exponent, and the log-axis rate integral.

use std::cell::Cell;
use std::f64::consts::{LN_2, PI};

use crate::error::{Error, Result};
use crate::geometry::{BlockageModel, PathLossModel};
use crate::numerics::{integrate_log_panels, lower_incomplete_gamma, upper_incomplete_gamma, QuadratureSpec};

/// Tolerance for integrals nested inside an outer quadrature.
pub(crate) fn inner_spec(outer: &QuadratureSpec) -> QuadratureSpec {
    QuadratureSpec {
        rel_tol: (outer.rel_tol * 1e-3).max(1e-12),
        abs_tol: outer.abs_tol * 1e-3,
        max_subdivisions: outer.max_subdivisions,
    }
}

/// `∫_0^T f(r) r dr`, the LoS-weighted area inside radius `t` (divided by 2π).
pub(crate) fn los_mass(blockage: &BlockageModel, t: f64) -> f64 {
    match *blockage {
        BlockageModel::Exponential { rho } => {
            let y = rho * t;
            if y > 700.0 {
                return 1.0 / (rho * rho);
            }
            if y < 1e-2 {
                // 1 − e^{−y}(1 + y) = Σ_{k≥2} (−1)^k (k−1) y^k / k!
                let mut term = y * y / 2.0;
                let mut sum = term;
                for k in 3..30 {
                    let kf = k as f64;
                    term *= -y / kf * (kf - 1.0) / (kf - 2.0);
                    sum += term;
                    if term.abs() < 1e-17 * sum {
                        break;
                    }
                }
                return sum / (rho * rho);
            }
            -(-y).exp().mul_add(1.0 + y, -1.0) / (rho * rho)
        }
        BlockageModel::LosBall { d_los } => 0.5 * t.min(d_los).powi(2),
    }
}

/// `∫_0^T (1 − f(r)) r dr` for blocked links that still carry power, else 0.
pub(crate) fn nlos_mass(blockage: &BlockageModel, t: f64) -> f64 {
    if blockage.nlos_carries_power() {
        (0.5 * t * t - los_mass(blockage, t)).max(0.0)
    } else {
        0.0
    }
}

/// `∫_d^∞ (1 − e^{−c u^{−α}}) u du = (1/α) c^{2/α} ∫_0^T (1 − e^{−t}) t^{−2/α−1} dt`
/// with `T = c d^{−α}`, integrated by parts into incomplete gammas.
pub(crate) fn unblocked_tail(c: f64, alpha: f64, d: f64) -> Result<f64> {
    let s = 2.0 / alpha;
    let t = c * d.powf(-alpha);
    if t == 0.0 {
        return Ok(0.0);
    }
    let lower = lower_incomplete_gamma(1.0 - s, t)?;
    let boundary = -(-t).exp_m1() * t.powf(-s);
    Ok(c.powf(s) / alpha * (lower - boundary) / s)
}

/// `∫_d^D (1 − e^{−c u^{−α}}) u du` for `d < D`. With `v = c u^{−α}`,
/// `s = 2/α` and `B(v) = (1 − e^{−v}) v^{−s}` this is
/// `(c^s/2) [B(v_D) − B(v_d) + Γ(1−s, v_D) − Γ(1−s, v_d)]`, which has no
/// large cancelling terms. Tiny `v_d` uses the two-term series instead.
pub(crate) fn ball_unblocked(c: f64, alpha: f64, d: f64, d_los: f64) -> Result<f64> {
    let v_d = c * d.powf(-alpha);
    if v_d <= 1e-12 {
        return Ok(
            c * power_integral(1.0 - alpha, d, d_los) - 0.5 * c * c * power_integral(1.0 - 2.0 * alpha, d, d_los)
        );
    }
    let s = 2.0 / alpha;
    let v_big = c * d_los.powf(-alpha);
    let b = |v: f64| -(-v).exp_m1() * v.powf(-s);
    let gammas = upper_incomplete_gamma(1.0 - s, v_big)? - upper_incomplete_gamma(1.0 - s, v_d)?;
    Ok(0.5 * c.powf(s) * (b(v_big) - b(v_d) + gammas))
}

/// `∫_a^b u^p du`.
fn power_integral(p: f64, a: f64, b: f64) -> f64 {
    if p == -1.0 {
        (b / a).ln()
    } else {
        (b.powf(p + 1.0) - a.powf(p + 1.0)) / (p + 1.0)
    }
}

/// Interferer population: PPP of `density` whose points transmit with
/// received-power scale `weights[j].0 · L(u)` with probability `weights[j].1`.
pub(crate) struct InterferenceField<'a> {
    pub density: f64,
    pub levels: Vec<(f64, f64)>,
    pub path_loss: &'a PathLossModel,
    pub blockage: &'a BlockageModel,
}

impl InterferenceField<'_> {
    /// `E(z)` such that the Laplace transform of the aggregate interference
    /// is `exp(−2πλ E(z))`.
    pub fn exponent(&self, z: f64, spec: &QuadratureSpec) -> Result<f64> {
        let pl = self.path_loss;
        let d = pl.ref_distance;
        match *self.blockage {
            BlockageModel::Exponential { rho } => {
                let a0 = los_mass(self.blockage, d);
                let disc = 0.5 * d * d;
                let mut closed = 0.0;
                for &(power, p) in &self.levels {
                    let c = z * power * pl.beta;
                    let inner_los = -(-c * d.powf(-pl.alpha_los)).exp_m1();
                    let inner_nlos = -(-c * d.powf(-pl.alpha_nlos)).exp_m1();
                    let tail = unblocked_tail(c, pl.alpha_nlos, d)?;
                    closed += p * (inner_los * a0 + inner_nlos * (disc - a0) + tail);
                }
                // LoS correction on (d, ∞): f(u) [(1 − e^{−c u^{−αL}}) − (1 − e^{−c u^{−αN}})].
                let upper = d + 50.0 / rho;
                let points = log_points(d, upper, 8);
                let inner = QuadratureSpec {
                    rel_tol: spec.rel_tol.max(1e-10),
                    ..*spec
                };
                let correction = integrate_log_panels(
                    |u| {
                        let mut acc = 0.0;
                        for &(power, p) in &self.levels {
                            let c = z * power * pl.beta;
                            acc += p * ((-c * u.powf(-pl.alpha_nlos)).exp() - (-c * u.powf(-pl.alpha_los)).exp());
                        }
                        (-rho * u).exp() * u * acc
                    },
                    &points,
                    &inner,
                )
                .map_err(Error::numerical("interference LoS correction"))?
                .value;
                Ok(closed + correction)
            }
            BlockageModel::LosBall { d_los } => {
                let alpha = pl.alpha_los;
                let mut total = 0.0;
                for &(power, p) in &self.levels {
                    let c = z * power * pl.beta;
                    let near = -(-c * d.powf(-alpha)).exp_m1();
                    total += p * if d_los <= d {
                        near * 0.5 * d_los * d_los
                    } else {
                        near * 0.5 * d * d + ball_unblocked(c, alpha, d, d_los)?
                    };
                }
                Ok(total)
            }
        }
    }

    pub fn laplace(&self, z: f64, spec: &QuadratureSpec) -> Result<f64> {
        if self.density == 0.0 {
            return Ok(1.0);
        }
        // An absolute error δ in the exponent is a relative error 2πλδ in the transform.
        let weight = 2.0 * PI * self.density;
        let spec = QuadratureSpec {
            abs_tol: spec.abs_tol.max(spec.rel_tol / weight),
            ..*spec
        };
        Ok((-weight * self.exponent(z, &spec)?).exp())
    }
}

/// `n` panels equally spaced in `ln u` over `[lo, hi]`.
pub(crate) fn log_points(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let (a, b) = (lo.ln(), hi.ln());
    (0..=n)
        .map(|i| match i {
            0 => lo,
            i if i == n => hi,
            i => (a + (b - a) * i as f64 / n as f64).exp(),
        })
        .collect()
}

/// Received power of the typical link in each state.
pub(crate) struct LinkSignal {
    pub p_los: f64,
    pub los: f64,
    pub nlos: f64,
}

/// `(1/ln2) ∫_0^∞ (1/z)(1 − Ξ₁(z)) Ξ₂(z) e^{−zσ²} dz` evaluated on `z = e^s`.
pub(crate) fn laplace_rate(
    signal: &LinkSignal,
    field: &InterferenceField<'_>,
    noise: f64,
    spec: &QuadratureSpec,
) -> Result<f64> {
    let y_max = signal.los.max(signal.nlos);
    if y_max <= 0.0 || (signal.p_los == 0.0 && signal.nlos == 0.0) {
        return Ok(0.0);
    }
    let s_lo = (1e-15 / y_max).ln();
    let s_hi = (40.0 / noise).ln();
    if s_hi <= s_lo {
        return Ok(0.0);
    }
    let n_panels = ((s_hi - s_lo) / 4.0).ceil().max(1.0) as usize;
    let points: Vec<f64> = (0..=n_panels)
        .map(|i| s_lo + (s_hi - s_lo) * i as f64 / n_panels as f64)
        .collect();
    let inner = inner_spec(spec);
    let failure: Cell<Option<Error>> = Cell::new(None);
    let result = crate::numerics::integrate_panels(
        |s| {
            let z = s.exp();
            let one_minus_xi1 =
                -signal.p_los * (-z * signal.los).exp_m1() - (1.0 - signal.p_los) * (-z * signal.nlos).exp_m1();
            let xi2 = match field.laplace(z, &inner) {
                Ok(v) => v,
                Err(e) => {
                    failure.set(Some(e));
                    return 0.0;
                }
            };
            one_minus_xi1 * xi2 * (-z * noise).exp()
        },
        &points,
        spec,
    );
    if let Some(e) = failure.take() {
        return Err(e);
    }
    Ok(result.map_err(Error::numerical("typical-link rate integral"))?.value / LN_2)
}

/// One gain level of the typical transmitter seen by an eavesdropper:
/// signal scale `P_S G β`, artificial-noise scale `P_A G^A β`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct EveLevel {
    pub signal: f64,
    pub noise: f64,
    pub probability: f64,
}

/// Radius within which an eavesdropper on this level (and exponent) sees an
/// SINR above `x`, or `None` when `x` is unattainable.
pub(crate) fn eve_radius(signal: f64, noise_scale: f64, x: f64, alpha: f64, noise: f64) -> Option<f64> {
    let num = signal - noise_scale * x;
    if num <= 0.0 {
        return None;
    }
    Some((num / (x * noise)).powf(1.0 / alpha))
}

/// `(Σ_j p_j 1(T_L > d) ∫_0^{T_L} f r dr, Σ_j p_j 1(T_N > d) ∫_0^{T_N} (1 − f) r dr)`.
pub(crate) fn eve_mass(
    levels: &[EveLevel],
    x: f64,
    noise: f64,
    pl: &PathLossModel,
    blockage: &BlockageModel,
) -> (f64, f64) {
    let d = pl.ref_distance;
    let (mut los, mut nlos) = (0.0, 0.0);
    for level in levels {
        if let Some(t) = eve_radius(level.signal, level.noise, x, pl.alpha_los, noise) {
            if t > d {
                los += level.probability * los_mass(blockage, t);
            }
        }
        if blockage.nlos_carries_power() {
            if let Some(t) = eve_radius(level.signal, level.noise, x, pl.alpha_nlos, noise) {
                if t > d {
                    nlos += level.probability * nlos_mass(blockage, t);
                }
            }
        }
    }
    (los, nlos)
}

/// `x` at which level `j`'s radius for exponent `alpha` crosses `d`.
pub(crate) fn eve_breakpoint(level: &EveLevel, alpha: f64, noise: f64, d: f64) -> f64 {
    level.signal / (noise * d.powf(alpha) + level.noise)
}

/// `(1/ln2) ∫_0^{x_max} (1 − e^{−2πλ_e M(x)}) / (1 + x) dx` with `M` vanishing
/// beyond `x_max`; `breakpoints` are the discontinuities of `M`.
pub(crate) fn eve_rate_integral<F: FnMut(f64) -> Result<f64>>(
    mut mass: F,
    density: f64,
    mut breakpoints: Vec<f64>,
    spec: &QuadratureSpec,
) -> Result<f64> {
    breakpoints.retain(|b| b.is_finite() && *b > 0.0);
    breakpoints.sort_by(f64::total_cmp);
    breakpoints.dedup_by(|a, b| (*a - *b).abs() <= 1e-14 * b.abs());
    let Some(&x_max) = breakpoints.last() else {
        return Ok(0.0);
    };
    if density == 0.0 {
        return Ok(0.0);
    }
    let failure: Cell<Option<Error>> = Cell::new(None);
    let mut integrand = |x: f64| match mass(x) {
        Ok(m) => -(-2.0 * PI * density * m).exp_m1() / (1.0 + x),
        Err(e) => {
            failure.set(Some(e));
            0.0
        }
    };
    let split = x_max.min(1.0);
    let mut linear = vec![0.0];
    linear.extend(breakpoints.iter().copied().filter(|b| *b < split));
    linear.push(split);
    let mut total = crate::numerics::integrate_panels(&mut integrand, &linear, spec)
        .map_err(Error::numerical("eavesdropper rate integral"))?
        .value;
    if x_max > 1.0 {
        let mut log = vec![1.0];
        log.extend(breakpoints.iter().copied().filter(|b| *b > 1.0));
        total += integrate_log_panels(&mut integrand, &log, spec)
            .map_err(Error::numerical("eavesdropper rate integral"))?
            .value;
    }
    if let Some(e) = failure.take() {
        return Err(e);
    }
    Ok(total / LN_2)
}
