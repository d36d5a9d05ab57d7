//! Globally adaptive Gauss–Kronrod (10/21-point) quadrature.
//!
//! Every entry point funnels into one adaptive loop that keeps a max-heap of
//! panels keyed by their error estimate and bisects the worst panel until the
//! summed estimate meets `max(abs_tol, rel_tol * |value|)`. Callers that know
//! where an integrand has kinks or jumps pass them as panel boundaries.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_subdivisions: usize,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec {
            rel_tol: 1e-8,
            abs_tol: 1e-12,
            max_subdivisions: 2000,
        }
    }
}

impl QuadratureSpec {
    pub fn new(rel_tol: f64, abs_tol: f64) -> Self {
        QuadratureSpec {
            rel_tol,
            abs_tol,
            ..Default::default()
        }
    }

    pub fn with_max_subdivisions(mut self, max_subdivisions: usize) -> Self {
        self.max_subdivisions = max_subdivisions;
        self
    }

    fn validate(&self) -> Result<(), QuadratureError> {
        let ok = self.rel_tol.is_finite()
            && self.rel_tol > 0.0
            && self.abs_tol.is_finite()
            && self.abs_tol > 0.0
            && self.max_subdivisions >= 1;
        if ok {
            Ok(())
        } else {
            Err(QuadratureError::InvalidSpec)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    pub value: f64,
    pub abs_error_estimate: f64,
    pub subdivisions: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum QuadratureError {
    #[error(
        "no convergence after {subdivisions} subdivisions (best estimate {estimate:e}, error estimate {abs_error:e})"
    )]
    NotConverged {
        estimate: f64,
        abs_error: f64,
        subdivisions: usize,
    },
    #[error("integrand is not finite at x = {at:e}")]
    NonFinite { at: f64 },
    #[error("integrand does not decay fast enough: |x f(x)| = {tail:e} at x = {at:e}")]
    NonDecaying { at: f64, tail: f64 },
    #[error("invalid integration interval [{a}, {b}]")]
    InvalidInterval { a: f64, b: f64 },
    #[error("tolerances must be positive and finite, max_subdivisions >= 1")]
    InvalidSpec,
}

const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];

const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_208_048_254_480,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];

/// Gauss weights for the odd-indexed Kronrod nodes.
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn gk21<F: FnMut(f64) -> f64>(f: &mut F, a: f64, b: f64) -> Result<Panel, QuadratureError> {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut eval = |x: f64| {
        let y = f(x);
        if y.is_finite() {
            Ok(y)
        } else {
            Err(QuadratureError::NonFinite { at: x })
        }
    };

    let fc = eval(center)?;
    let mut kronrod = WGK[10] * fc;
    let mut gauss = 0.0;
    let mut res_abs = kronrod.abs();
    let mut fv = [(0.0, 0.0); 10];
    for (j, &x) in XGK.iter().take(10).enumerate() {
        let dx = half * x;
        let f1 = eval(center - dx)?;
        let f2 = eval(center + dx)?;
        fv[j] = (f1, f2);
        kronrod += WGK[j] * (f1 + f2);
        res_abs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }
    let mean = 0.5 * kronrod;
    let mut res_asc = WGK[10] * (fc - mean).abs();
    for (j, &(f1, f2)) in fv.iter().enumerate() {
        res_asc += WGK[j] * ((f1 - mean).abs() + (f2 - mean).abs());
    }

    let value = kronrod * half;
    let res_abs = res_abs * half.abs();
    let res_asc = res_asc * half.abs();
    let mut error = ((kronrod - gauss) * half).abs();
    // QUADPACK rescaling of the raw Kronrod-Gauss difference.
    if res_asc != 0.0 && error != 0.0 {
        error = res_asc * (200.0 * error / res_asc).powf(1.5).min(1.0);
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        error = error.max(50.0 * f64::EPSILON * res_abs);
    }
    Ok(Panel { a, b, value, error })
}

fn adaptive<F: FnMut(f64) -> f64>(
    mut f: F,
    points: &[f64],
    spec: &QuadratureSpec,
) -> Result<QuadratureResult, QuadratureError> {
    spec.validate()?;
    if points.len() < 2 {
        return Err(QuadratureError::InvalidInterval {
            a: points.first().copied().unwrap_or(f64::NAN),
            b: f64::NAN,
        });
    }
    for w in points.windows(2) {
        if !(w[0].is_finite() && w[1].is_finite() && w[0] < w[1]) {
            return Err(QuadratureError::InvalidInterval { a: w[0], b: w[1] });
        }
    }

    let mut heap = BinaryHeap::with_capacity(2 * points.len());
    for w in points.windows(2) {
        heap.push(gk21(&mut f, w[0], w[1])?);
    }
    let mut subdivisions = heap.len();

    loop {
        let (value, error) = heap.iter().fold((0.0, 0.0), |(v, e), p| (v + p.value, e + p.error));
        let target = spec.abs_tol.max(spec.rel_tol * value.abs());
        if error <= target {
            return Ok(QuadratureResult {
                value,
                abs_error_estimate: error,
                subdivisions,
            });
        }
        let worst = *heap.peek().expect("heap is never empty");
        let mid = 0.5 * (worst.a + worst.b);
        let splittable = mid > worst.a && mid < worst.b;
        if subdivisions >= spec.max_subdivisions || !splittable {
            return Err(QuadratureError::NotConverged {
                estimate: value,
                abs_error: error,
                subdivisions,
            });
        }
        heap.pop();
        heap.push(gk21(&mut f, worst.a, mid)?);
        heap.push(gk21(&mut f, mid, worst.b)?);
        subdivisions += 1;
    }
}

/// `∫_a^b f(x) dx` for `a < b`.
pub fn integrate_finite<F: FnMut(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    spec: &QuadratureSpec,
) -> Result<QuadratureResult, QuadratureError> {
    adaptive(f, &[a, b], spec)
}

/// Integral over `[points[0], points[last]]`, with every interior point used
/// as an initial panel boundary.
pub fn integrate_panels<F: FnMut(f64) -> f64>(
    f: F,
    points: &[f64],
    spec: &QuadratureSpec,
) -> Result<QuadratureResult, QuadratureError> {
    adaptive(f, points, spec)
}

/// Like [`integrate_panels`] but on a logarithmic axis (`x = e^v`), for
/// positive intervals that span many decades. All points must be `> 0`.
pub fn integrate_log_panels<F: FnMut(f64) -> f64>(
    mut f: F,
    points: &[f64],
    spec: &QuadratureSpec,
) -> Result<QuadratureResult, QuadratureError> {
    if let Some(&p) = points.iter().find(|p| p.is_nan() || **p <= 0.0) {
        return Err(QuadratureError::InvalidInterval { a: p, b: p });
    }
    let logs: Vec<f64> = points.iter().map(|p| p.ln()).collect();
    adaptive(
        |v| {
            let x = v.exp();
            f(x) * x
        },
        &logs,
        spec,
    )
}

/// `∫_a^∞ f(x) dx` via `x = a + t/(1-t)`, `t ∈ [0, 1)`.
///
/// The integrand is probed far out first; if `|x f(x)|` has not dropped by
/// the probe points the integral is reported as divergent.
pub fn integrate_semi_infinite<F: FnMut(f64) -> f64>(
    mut f: F,
    a: f64,
    spec: &QuadratureSpec,
) -> Result<QuadratureResult, QuadratureError> {
    if !a.is_finite() {
        return Err(QuadratureError::InvalidInterval { a, b: f64::INFINITY });
    }
    let near = a + 1e6 * (1.0 + a.abs());
    let far = a + 1e12 * (1.0 + a.abs());
    let tail_near = (near * f(near)).abs();
    let tail_far = (far * f(far)).abs();
    if tail_far.is_nan() || (tail_far > 1e-9 && tail_far >= 0.5 * tail_near) {
        return Err(QuadratureError::NonDecaying {
            at: far,
            tail: tail_far,
        });
    }
    adaptive(
        |t| {
            let one_minus = 1.0 - t;
            if one_minus <= 0.0 {
                return 0.0;
            }
            f(a + t / one_minus) / (one_minus * one_minus)
        },
        &[0.0, 1.0],
        spec,
    )
}

/// Mean of a smooth `period`-periodic function over one period by the
/// trapezoid rule, doubling the node count until successive estimates agree.
/// Spectrally accurate for analytic periodic integrands.
pub fn mean_periodic<F: FnMut(f64) -> f64>(
    mut f: F,
    period: f64,
    spec: &QuadratureSpec,
) -> Result<QuadratureResult, QuadratureError> {
    spec.validate()?;
    if !(period.is_finite() && period > 0.0) {
        return Err(QuadratureError::InvalidInterval { a: 0.0, b: period });
    }
    let mut eval = |x: f64| {
        let y = f(x);
        if y.is_finite() {
            Ok(y)
        } else {
            Err(QuadratureError::NonFinite { at: x })
        }
    };
    let mut n = 16usize;
    let mut sum = 0.0;
    for k in 0..n {
        sum += eval(period * k as f64 / n as f64)?;
    }
    let mut mean = sum / n as f64;
    let mut doublings = 0;
    loop {
        // Odd nodes of the refined grid.
        for k in 0..n {
            sum += eval(period * (2 * k + 1) as f64 / (2 * n) as f64)?;
        }
        n *= 2;
        doublings += 1;
        let refined = sum / n as f64;
        let error = (refined - mean).abs();
        mean = refined;
        if error <= spec.abs_tol.max(spec.rel_tol * mean.abs()) && doublings >= 2 {
            return Ok(QuadratureResult {
                value: mean,
                abs_error_estimate: error,
                subdivisions: n,
            });
        }
        if n > spec.max_subdivisions.max(16) * 64 {
            return Err(QuadratureError::NotConverged {
                estimate: mean,
                abs_error: error,
                subdivisions: n,
            });
        }
    }
}
