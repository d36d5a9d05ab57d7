//! Acceptance suite. Runs every criterion in order, prints one PASS/FAIL
//! line per criterion (with indented detail lines), and exits non-zero if
//! any criterion fails.

use std::f64::consts::{LN_2, TAU};
use std::fs;
use std::path::Path;
use std::process::ExitCode;
use std::time::Instant;

use mmwave_secrecy::analytic::{
    avg_rate_eve_exact, avg_rate_eve_exact_an, avg_rate_eve_exact_losball, avg_rate_eve_exact_ula,
    avg_rate_typical_exact, avg_rate_typical_exact_an, avg_rate_typical_exact_losball, avg_rate_typical_lower,
    avg_rate_typical_lower_an, avg_rate_typical_lower_ula, lambda_closed_form, lambda_quadrature,
    losball_interference_gamma_form, losball_interference_quadrature,
};
use mmwave_secrecy::antenna::{ula_eavesdropper_gain, ula_interferer_gain, ula_steering};
use mmwave_secrecy::config::{AntennaModel, SystemConfig};
use mmwave_secrecy::geometry::{BlockageModel, LinkState, PathLossModel};
use mmwave_secrecy::montecarlo::estimate_rates;
use mmwave_secrecy::numerics::{integrate_panels, upper_incomplete_gamma, QuadratureSpec};
use mmwave_secrecy::report::Method;
use mmwave_secrecy::runner::{
    default_spec, run_eval, run_sweep, run_validate, write_sweep_csv, write_validation_csv, Check, McSettings,
};
use mmwave_secrecy::scenario::{preset, table_exponents, Preset, SweepVar, DEFAULT_D_LOS, MEAN_LOS_LENGTH};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Criterion 1: trials per configuration and the relative tolerance
/// (the absolute floor is three standard errors).
const AGREEMENT_TRIALS: usize = 20_000;
const AGREEMENT_REL_TOL: f64 = 0.05;
const AGREEMENT_SEED: u64 = 2024;
/// Criterion 2: allowed amount by which a bound may exceed what it bounds.
const BOUND_SLACK: f64 = 1e-9;
const BOUND_MC_TRIALS: usize = 2_000;
/// Criterion 3.
const IDENTITY_REL_TOL: f64 = 1e-6;
/// Criterion 4: relative to the boresight gain of the array.
const ULA_REL_TOL: f64 = 1e-10;
const ULA_SAMPLES: usize = 1000;
/// Criterion 5: wall-clock budget for all shape sweeps, seconds.
const SHAPE_BUDGET_S: f64 = 600.0;
/// A step counts as "not increasing" when it rises by at most this much.
const SHAPE_FLAT: f64 = 1e-12;
/// Criterion 6.
const GAMMA_REL_TOL: f64 = 1e-10;
const GAMMA_SAMPLES: usize = 1000;
/// Criterion 7.
const DETERMINISM_TRIALS: usize = 2_000;
/// Criterion 8.
const DEGENERACY_REL_TOL: f64 = 1e-8;

struct Outcome {
    pass: bool,
    summary: String,
}

fn rel_err(got: f64, expect: f64) -> f64 {
    if got == expect {
        0.0
    } else {
        (got - expect).abs() / expect.abs().max(f64::MIN_POSITIVE)
    }
}

fn detail(line: impl AsRef<str>) {
    println!("    {}", line.as_ref());
}

fn preset_config(figure: u8) -> SystemConfig {
    preset(figure).expect("preset exists").config
}

fn with_los_ball(mut cfg: SystemConfig) -> SystemConfig {
    cfg.blockage = BlockageModel::LosBall { d_los: DEFAULT_D_LOS };
    cfg
}

fn criterion_1() -> Outcome {
    let mut failures = 0;
    let mut checked = 0;
    let mc = McSettings {
        n_trials: AGREEMENT_TRIALS,
        seed: AGREEMENT_SEED,
        window_radius: None,
    };
    for figure in [1u8, 2, 3, 6] {
        for (label, cfg) in [
            ("exponential", preset_config(figure)),
            ("los-ball", with_los_ball(preset_config(figure))),
        ] {
            let start = Instant::now();
            let report = run_validate(&cfg, mc, AGREEMENT_REL_TOL, &default_spec(), None).expect("validate runs");
            for row in &report.rows {
                checked += 1;
                if !row.pass {
                    failures += 1;
                }
                if row.check == Check::Agreement || !row.pass {
                    detail(format!(
                        "fig {figure} {label:<11} {:<8} {:<7} {:<11} analytic {:.6} mc {:.6} ± {:.6} {}",
                        row.method.as_str(),
                        row.quantity,
                        row.check.as_str(),
                        row.analytic,
                        row.mc_mean,
                        row.mc_std_error,
                        if row.pass { "ok" } else { "FAIL" }
                    ));
                }
            }
            detail(format!("fig {figure} {label}: {:.1} s", start.elapsed().as_secs_f64()));
        }
    }
    Outcome {
        pass: failures == 0,
        summary: format!("{checked} comparisons at {AGREEMENT_TRIALS} trials, {failures} outside max(5%, 3 SE)"),
    }
}

fn criterion_2() -> Outcome {
    let spec = default_spec();
    let powers = [0.0, 20.0, 40.0];
    let densities = [10.0, 50.0, 200.0];
    let frequencies = [28.0, 60.0, 73.0];
    let bases = [
        ("sectored", preset_config(1)),
        ("artificial-noise", preset_config(7)),
        ("ula", preset_config(4)),
    ];
    let mut violations = 0;
    let mut worst = f64::NEG_INFINITY;
    let mut count = 0;
    for (name, base) in &bases {
        for &p in &powers {
            for &lam in &densities {
                for &f in &frequencies {
                    let cfg = [
                        (SweepVar::Frequency, f),
                        (SweepVar::TxPowerDbm, p),
                        (SweepVar::TxDensity, lam),
                    ]
                    .iter()
                    .try_fold(base.clone(), |c, (v, x)| v.apply(&c, *x))
                    .expect("grid point is valid");
                    let (bound, bounded) = match *name {
                        "sectored" => (
                            avg_rate_typical_lower(&cfg).unwrap(),
                            avg_rate_typical_exact(&cfg, &spec).unwrap(),
                        ),
                        "artificial-noise" => (
                            avg_rate_typical_lower_an(&cfg).unwrap(),
                            avg_rate_typical_exact_an(&cfg, &spec).unwrap(),
                        ),
                        _ => (
                            avg_rate_typical_lower_ula(&cfg, &spec).unwrap(),
                            estimate_rates(&cfg, BOUND_MC_TRIALS, 11, None).unwrap().rate_typical,
                        ),
                    };
                    count += 1;
                    let excess = bound - bounded;
                    worst = worst.max(excess);
                    if excess > BOUND_SLACK {
                        violations += 1;
                        detail(format!(
                            "{name}: P={p} dBm λ={lam}/km² f={f} GHz bound {bound} > {bounded}"
                        ));
                    }
                }
            }
        }
        detail(format!("{name}: 27 grid points done"));
    }
    Outcome {
        pass: violations == 0,
        summary: format!("{count} grid points, {violations} violations, largest bound minus value {worst:.3e}"),
    }
}

fn criterion_3() -> Outcome {
    let tight = QuadratureSpec::new(1e-12, 1e-300);
    let mut worst_lambda: f64 = 0.0;
    let mut worst_ball: f64 = 0.0;
    for f_ghz in [28.0, 38.0, 60.0, 73.0] {
        let (al, an) = table_exponents(f_ghz * 1e9).expect("table band");
        let pl = PathLossModel::for_frequency(f_ghz * 1e9, al, an, 1.0).unwrap();
        for mean_len in [MEAN_LOS_LENGTH, 30.0, 1000.0] {
            let rho = 1.0 / mean_len;
            let closed = lambda_closed_form(&pl, rho).unwrap();
            let quad = lambda_quadrature(&pl, &BlockageModel::Exponential { rho }, &tight).unwrap();
            worst_lambda = worst_lambda.max(rel_err(closed, quad));
        }
        for alpha in [al, an] {
            for c in [1e-6, 1e-2, 1.0, 1e2, 1e4] {
                for d_los in [DEFAULT_D_LOS, 50.0, 0.5] {
                    let gamma = losball_interference_gamma_form(c, alpha, 1.0, d_los).unwrap();
                    let quad = losball_interference_quadrature(c, alpha, 1.0, d_los, &tight).unwrap();
                    worst_ball = worst_ball.max(rel_err(gamma, quad));
                }
            }
        }
    }
    detail(format!(
        "mean interference closed form vs quadrature: worst rel {worst_lambda:.2e}"
    ));
    detail(format!("LoS-ball gamma form vs quadrature: worst rel {worst_ball:.2e}"));
    Outcome {
        pass: worst_lambda <= IDENTITY_REL_TOL && worst_ball <= IDENTITY_REL_TOL,
        summary: format!("worst relative error {:.2e}", worst_lambda.max(worst_ball)),
    }
}

/// `|a(u)^H a(v)|²` from explicit steering vectors.
fn brute_pair(u: f64, v: f64, q: u32, s: f64) -> f64 {
    let a = ula_steering(u, q, s);
    let b = ula_steering(v, q, s);
    a.iter()
        .zip(&b)
        .map(|(x, y)| x.conj() * y)
        .sum::<Complex64>()
        .norm_sqr()
}

fn criterion_4() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let s = 0.5;
    let mut worst: f64 = 0.0;
    let mut boresight_exact = true;
    for n in [1u32, 2, 4, 8, 16] {
        let n2 = (n * n) as f64;
        for _ in 0..ULA_SAMPLES {
            let [xi_ro, xi_rio, phi_tio, phi_ti, phi_teo, phi_to]: [f64; 6] =
                std::array::from_fn(|_| rng.random_range(0.0..TAU));
            let n_eve = rng.random_range(1..=16u32);
            let closed = ula_interferer_gain(xi_ro, xi_rio, phi_tio, phi_ti, n, s);
            let brute = brute_pair(xi_ro, xi_rio, n, s) * brute_pair(phi_tio, phi_ti, n, s) / n2;
            worst = worst.max((closed - brute).abs() / n2);
            let ne2 = (n_eve * n_eve) as f64;
            let closed_e = ula_eavesdropper_gain(phi_teo, phi_to, n, n_eve, s);
            let brute_e = brute_pair(phi_teo, phi_to, n, s) * ne2 / n2;
            worst = worst.max((closed_e - brute_e).abs() / ne2);
            boresight_exact &= ula_interferer_gain(xi_ro, xi_ro, phi_ti, phi_ti, n, s) == n2;
            boresight_exact &= ula_eavesdropper_gain(phi_to, phi_to, n, n_eve, s) == ne2;
        }
    }
    detail(format!("worst error relative to boresight gain {worst:.2e}"));
    detail(format!("boresight gains exactly N² and N_e²: {boresight_exact}"));
    Outcome {
        pass: worst <= ULA_REL_TOL && boresight_exact,
        summary: format!(
            "{} tuples per N for N in 1,2,4,8,16; worst rel {worst:.2e}",
            ULA_SAMPLES
        ),
    }
}

struct Curve {
    label: f64,
    xs: Vec<f64>,
    secrecy: Vec<f64>,
}

/// Run the preset sweep for every series value, write each CSV, and read the
/// secrecy column back from the files.
fn sweep_curves(p: &Preset, method: Method, dir: &Path) -> Vec<Curve> {
    let series = p.series_configs().expect("series configs");
    series
        .iter()
        .map(|(label, cfg)| {
            let rows = run_sweep(cfg, &p.sweep, &[method], None, &default_spec()).expect("sweep runs");
            let path = dir.join(format!("fig{}_{label}.csv", p.figure));
            let mut buf = Vec::new();
            write_sweep_csv(&mut buf, p.sweep.var.as_str(), &rows).unwrap();
            fs::write(&path, buf).unwrap();
            let mut reader = csv::Reader::from_path(&path).unwrap();
            let (mut xs, mut secrecy) = (Vec::new(), Vec::new());
            for rec in reader.records() {
                let rec = rec.unwrap();
                assert!(rec[9].is_empty(), "fig {} {label}: {}", p.figure, &rec[9]);
                xs.push(rec[1].parse().unwrap());
                secrecy.push(rec[5].parse().unwrap());
            }
            Curve {
                label: *label,
                xs,
                secrecy,
            }
        })
        .collect()
}

fn non_increasing(v: &[f64]) -> bool {
    v.windows(2).all(|w| w[1] <= w[0] + SHAPE_FLAT) && v[v.len() - 1] < v[0]
}

fn non_decreasing(v: &[f64]) -> bool {
    v.windows(2).all(|w| w[1] + SHAPE_FLAT >= w[0]) && v[v.len() - 1] > v[0]
}

fn interior_max(v: &[f64]) -> bool {
    let (i, best) = v.iter().enumerate().fold(
        (0, f64::NEG_INFINITY),
        |acc, (i, &x)| if x > acc.1 { (i, x) } else { acc },
    );
    i > 0 && i + 1 < v.len() && best > v[0] && best > v[v.len() - 1]
}

fn column(curves: &[Curve], j: usize) -> Vec<f64> {
    curves.iter().map(|c| c.secrecy[j]).collect()
}

fn check(ok: bool, what: String) -> bool {
    detail(format!("{} {what}", if ok { "ok  " } else { "FAIL" }));
    ok
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let dir = tempfile::tempdir().unwrap();
    let mut pass = true;

    let fig1 = sweep_curves(&preset(1).unwrap(), Method::Exact, dir.path());
    for c in &fig1 {
        pass &= check(
            interior_max(&c.secrecy),
            format!("fig 1: {} GHz curve has an interior maximum", c.label),
        );
    }
    let argmax = |vals: Vec<f64>| {
        let i = (0..vals.len()).fold(0, |b, i| if vals[i] > vals[b] { i } else { b });
        fig1[i].label
    };
    let low = argmax(column(&fig1, 0));
    let high = argmax(column(&fig1, fig1[0].xs.len() - 1));
    pass &= check(
        low == 28.0,
        format!("fig 1: best carrier at {} dBm is {low} GHz", fig1[0].xs[0]),
    );
    pass &= check(
        high == 60.0 || high == 73.0,
        format!(
            "fig 1: best carrier at {} dBm is {high} GHz",
            fig1[0].xs[fig1[0].xs.len() - 1]
        ),
    );
    let last = fig1[0].xs.len() - 1;
    let s28 = fig1.iter().find(|c| c.label == 28.0).unwrap().secrecy[last];
    for c in fig1.iter().filter(|c| c.label == 60.0 || c.label == 73.0) {
        pass &= check(
            c.secrecy[last] > s28,
            format!("fig 1: {} GHz above 28 GHz at top power", c.label),
        );
    }

    let fig2 = sweep_curves(&preset(2).unwrap(), Method::Exact, dir.path());
    for c in &fig2 {
        pass &= check(
            non_increasing(&c.secrecy),
            format!("fig 2: decreasing in λ at λ_e={}/km²", c.label),
        );
    }
    let all_e = (0..fig2[0].xs.len()).all(|j| non_increasing(&column(&fig2, j)));
    pass &= check(all_e, "fig 2: decreasing in λ_e at every λ".into());

    let fig4 = sweep_curves(&preset(4).unwrap(), Method::Ula, dir.path());
    for c in &fig4 {
        pass &= check(
            non_decreasing(&c.secrecy),
            format!("fig 4: increasing in N at N_e={}", c.label),
        );
    }
    let all_ne = (0..fig4[0].xs.len()).all(|j| non_increasing(&column(&fig4, j)));
    pass &= check(all_ne, "fig 4: decreasing in N_e at every N".into());

    let fig8 = sweep_curves(&preset(8).unwrap(), Method::AnExact, dir.path());
    for c in &fig8 {
        let (i, _) = c
            .secrecy
            .iter()
            .enumerate()
            .fold((0, f64::NEG_INFINITY), |a, (i, &x)| if x > a.1 { (i, x) } else { a });
        pass &= check(
            interior_max(&c.secrecy),
            format!("fig 8: {} GHz has an interior optimum at μ={}", c.label, c.xs[i]),
        );
    }

    let elapsed = start.elapsed().as_secs_f64();
    pass &= check(elapsed <= SHAPE_BUDGET_S, format!("runtime {elapsed:.1} s"));
    Outcome {
        pass,
        summary: format!("sign tests on sweep CSVs for figures 1, 2, 4, 8 in {elapsed:.1} s"),
    }
}

/// `Γ(a, x) = x^a ∫_0^∞ exp(a s − x e^s) ds` (substituting `t = x e^s`),
/// truncated where the integrand is below `e^{-100}` of its peak.
fn gamma_oracle(a: f64, x: f64, spec: &QuadratureSpec) -> f64 {
    let upper = (1.0 + (100.0 + 8.0 * a.abs()) / x).ln();
    let mut points = vec![0.0];
    if a > 0.0 {
        let peak = (a / x).ln();
        if peak > 0.0 && peak < upper {
            points.push(peak);
        }
    }
    points.push(upper);
    let log_scale = a * x.ln();
    integrate_panels(|s| (a * s - x * s.exp() + log_scale).exp(), &points, spec)
        .unwrap()
        .value
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let spec = QuadratureSpec::new(1e-13, 1e-300);
    let (mut worst_rec, mut worst_quad): (f64, f64) = (0.0, 0.0);
    for _ in 0..GAMMA_SAMPLES {
        let a: f64 = rng.random_range(-4.0..=4.0);
        let x: f64 = (rng.random_range((1e-3f64).ln()..(20.0f64).ln())).exp();
        let g = upper_incomplete_gamma(a, x).unwrap();
        let next = upper_incomplete_gamma(a + 1.0, x).unwrap();
        let lhs = a * g + (a * x.ln() - x).exp();
        worst_rec = worst_rec.max(rel_err(lhs, next));
        worst_quad = worst_quad.max(rel_err(g, gamma_oracle(a, x, &spec)));
    }
    detail(format!(
        "recurrence Γ(a+1,x) = aΓ(a,x) + x^a e^-x: worst rel {worst_rec:.2e}"
    ));
    detail(format!("quadrature oracle: worst rel {worst_quad:.2e}"));
    Outcome {
        pass: worst_rec <= GAMMA_REL_TOL && worst_quad <= GAMMA_REL_TOL,
        summary: format!("{GAMMA_SAMPLES} samples, a in [-4, 4], x in [1e-3, 20]"),
    }
}

fn criterion_7() -> Outcome {
    let cfg = preset_config(1);
    let mc = McSettings {
        n_trials: DETERMINISM_TRIALS,
        seed: 77,
        window_radius: None,
    };
    let validate_csv = |threads: usize| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        pool.install(|| {
            let report = run_validate(&cfg, mc, AGREEMENT_REL_TOL, &default_spec(), None).unwrap();
            let mut buf = Vec::new();
            write_validation_csv(&mut buf, &report).unwrap();
            buf
        })
    };
    let p2 = preset(2).unwrap();
    let sweep_csv = |threads: usize| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        pool.install(|| {
            let methods = [Method::Exact, Method::Lower, Method::MonteCarlo];
            let rows = run_sweep(&p2.config, &p2.sweep, &methods, Some(mc), &default_spec()).unwrap();
            let mut buf = Vec::new();
            write_sweep_csv(&mut buf, p2.sweep.var.as_str(), &rows).unwrap();
            buf
        })
    };
    let v = [validate_csv(1), validate_csv(1), validate_csv(4)];
    let s = [sweep_csv(1), sweep_csv(1), sweep_csv(4)];
    let v_same = v[0] == v[1] && v[0] == v[2];
    let s_same = s[0] == s[1] && s[0] == s[2];
    detail(format!(
        "validate CSV ({} bytes) identical across runs and thread counts: {v_same}",
        v[0].len()
    ));
    detail(format!(
        "sweep CSV ({} bytes) identical across runs and thread counts: {s_same}",
        s[0].len()
    ));
    Outcome {
        pass: v_same && s_same,
        summary: "same seed gives byte-identical validate and sweep CSVs".into(),
    }
}

fn log2_1p(x: f64) -> f64 {
    x.ln_1p() / LN_2
}

fn criterion_8() -> Outcome {
    let spec = default_spec();
    let mut worst: f64 = 0.0;
    let mut exact_zero = true;
    let mut note = |what: &str, got: f64, expect: f64| {
        let e = rel_err(got, expect);
        worst = worst.max(e);
        if e > DEGENERACY_REL_TOL {
            detail(format!("FAIL {what}: {got} vs {expect}"));
        }
    };

    // μ = 1 with the information beam equal to the transmit pattern.
    let mut an = preset_config(7);
    let mut spec_an = an.an.unwrap();
    spec_an.mu = 1.0;
    an.an = Some(spec_an);
    let AntennaModel::Sectored { rx, .. } = an.antenna else {
        unreachable!("preset 7 is sectored")
    };
    let mut plain = an.clone();
    plain.an = None;
    plain.antenna = AntennaModel::Sectored { tx: spec_an.signal, rx };
    note(
        "μ=1 typical",
        avg_rate_typical_exact_an(&an, &spec).unwrap(),
        avg_rate_typical_exact(&plain, &spec).unwrap(),
    );
    note(
        "μ=1 eve",
        avg_rate_eve_exact_an(&an, &spec).unwrap(),
        avg_rate_eve_exact(&plain, &spec).unwrap(),
    );
    note(
        "μ=1 lower",
        avg_rate_typical_lower_an(&an).unwrap(),
        avg_rate_typical_lower(&plain).unwrap(),
    );

    // No interferers: the rate is a two-point average over the link state.
    for figure in [1u8, 3] {
        let mut cfg = preset_config(figure);
        cfg.tx_density = 0.0;
        let g = cfg.typical_gain().unwrap();
        let r = cfg.dipole_distance;
        let snr = |state| cfg.tx_power * g * cfg.path_loss.path_loss(r, state) / cfg.noise_rx;
        let f = cfg.blockage.los_probability(r).unwrap();
        let expect = f * log2_1p(snr(LinkState::Los)) + (1.0 - f) * log2_1p(snr(LinkState::Nlos));
        note("λ=0 exact", avg_rate_typical_exact(&cfg, &spec).unwrap(), expect);
        let mean_alpha = f * cfg.path_loss.alpha_los + (1.0 - f) * cfg.path_loss.alpha_nlos;
        let jensen = log2_1p(cfg.tx_power * g * cfg.path_loss.beta * r.powf(-mean_alpha) / cfg.noise_rx);
        note("λ=0 lower", avg_rate_typical_lower(&cfg).unwrap(), jensen);
        let ball = with_los_ball(cfg.clone());
        note(
            "λ=0 LoS ball",
            avg_rate_typical_exact_losball(&ball, &spec).unwrap(),
            log2_1p(snr(LinkState::Los)),
        );
    }
    let mut an0 = preset_config(7);
    an0.tx_density = 0.0;
    let sig = an0.an.unwrap();
    let AntennaModel::Sectored { rx: rx0, .. } = an0.antenna else {
        unreachable!()
    };
    let link = sig.signal.g_main * rx0.g_main;
    let r = an0.dipole_distance;
    let f = an0.blockage.los_probability(r).unwrap();
    let snr_an = |state| sig.mu * an0.tx_power * link * an0.path_loss.path_loss(r, state) / an0.noise_rx;
    note(
        "λ=0 AN exact",
        avg_rate_typical_exact_an(&an0, &spec).unwrap(),
        f * log2_1p(snr_an(LinkState::Los)) + (1.0 - f) * log2_1p(snr_an(LinkState::Nlos)),
    );

    // No eavesdroppers: zero eavesdropper rate and secrecy equal to the
    // typical rate for every method.
    let mut zero_eve = Vec::new();
    for figure in [1u8, 4, 7] {
        let mut cfg = preset_config(figure);
        cfg.eve_density = 0.0;
        zero_eve.push(cfg.clone());
        if figure == 1 {
            zero_eve.push(with_los_ball(cfg));
        }
    }
    for cfg in &zero_eve {
        let evals: Vec<f64> = match cfg.antenna {
            AntennaModel::Ula(_) => vec![avg_rate_eve_exact_ula(cfg, &spec).unwrap()],
            _ if cfg.an.is_some() => vec![avg_rate_eve_exact_an(cfg, &spec).unwrap()],
            _ if matches!(cfg.blockage, BlockageModel::LosBall { .. }) => {
                vec![avg_rate_eve_exact_losball(cfg, &spec).unwrap()]
            }
            _ => vec![avg_rate_eve_exact(cfg, &spec).unwrap()],
        };
        exact_zero &= evals.iter().all(|v| *v == 0.0);
        for method in mmwave_secrecy::runner::applicable_methods(cfg) {
            let rep = run_eval(cfg, method, &spec).unwrap();
            exact_zero &= rep.rate_eve == 0.0;
            note("λ_e=0 secrecy", rep.rate_secrecy, rep.rate_typical);
        }
    }
    detail(format!(
        "worst relative error {worst:.2e}; zero eavesdropper rate exact: {exact_zero}"
    ));
    Outcome {
        pass: worst <= DEGENERACY_REL_TOL && exact_zero,
        summary: format!("μ=1, λ=0 and λ_e=0 limits, worst rel {worst:.2e}"),
    }
}

fn main() -> ExitCode {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 8] = [
        ("analytic vs simulation agreement", criterion_1),
        ("bound ordering over a 3x3x3 grid", criterion_2),
        ("closed forms vs quadrature", criterion_3),
        ("ULA gain vs steering vectors", criterion_4),
        ("qualitative curve shapes", criterion_5),
        ("incomplete gamma function", criterion_6),
        ("determinism", criterion_7),
        ("degenerate limits", criterion_8),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = run();
        if !out.pass {
            failed += 1;
        }
        println!(
            "criterion {} ({name}): {} [{}; {:.1} s]",
            i + 1,
            if out.pass { "PASS" } else { "FAIL" },
            out.summary,
            start.elapsed().as_secs_f64()
        );
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
