//! Inverse-problem recovery of screen frames from lensless measurements.
//!
//! All three solvers share the capture geometry of [`LenslessSystem`]: the
//! forward operator is circular convolution with the PSF on the padded grid
//! followed by the sensor crop, and estimates are returned on the scene
//! canvas. Wiener filtering is the direct regularized inverse; FISTA solves
//! an l1-regularized least squares with optional nonnegativity; ADMM splits
//! the problem into a Fourier-diagonal data solve, anisotropic total
//! variation, and a nonnegativity projection.

use crate::error::{Error, Result};
use crate::optics::LenslessSystem;
use ndarray::Array2;
use serde::{Deserialize, Serialize};

/// Which recovery algorithm to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SolverKind {
    Wiener,
    Fista,
    Admm,
}

/// Penalty parameters for the three ADMM splits and the TV threshold.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AdmmParams {
    pub mu1: f64,
    pub mu2: f64,
    pub mu3: f64,
    pub tau: f64,
}

impl Default for AdmmParams {
    // chosen by grid search over the delta-identity and noisy-deconvolution
    // reference instances (see examples/admm_grid.rs)
    fn default() -> Self {
        Self { mu1: 1e-1, mu2: 1e-6, mu3: 1e-3, tau: 1e-4 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolverConfig {
    pub kind: SolverKind,
    pub iters: usize,
    #[serde(default = "default_reg_lambda")]
    pub reg_lambda: f64,
    #[serde(default)]
    pub admm: AdmmParams,
    #[serde(default = "default_nonneg")]
    pub nonneg: bool,
}

fn default_reg_lambda() -> f64 {
    1e-3
}

fn default_nonneg() -> bool {
    true
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            kind: SolverKind::Admm,
            iters: 100,
            reg_lambda: default_reg_lambda(),
            admm: AdmmParams::default(),
            nonneg: true,
        }
    }
}

impl SolverConfig {
    pub fn wiener(reg_lambda: f64) -> Self {
        Self { kind: SolverKind::Wiener, reg_lambda, ..Self::default() }
    }

    pub fn fista(iters: usize, reg_lambda: f64) -> Self {
        Self { kind: SolverKind::Fista, iters, reg_lambda, ..Self::default() }
    }

    pub fn admm(iters: usize) -> Self {
        Self { kind: SolverKind::Admm, iters, ..Self::default() }
    }

    pub fn validate(&self) -> Result<()> {
        if self.iters < 1 {
            return Err(Error::invalid("solver needs at least one iteration"));
        }
        if !self.reg_lambda.is_finite() || self.reg_lambda < 0.0 {
            return Err(Error::invalid("regularization weight must be finite and nonnegative"));
        }
        let AdmmParams { mu1, mu2, mu3, tau } = self.admm;
        if [mu1, mu2, mu3].iter().any(|m| !m.is_finite() || *m <= 0.0) {
            return Err(Error::invalid("ADMM penalty parameters must be positive"));
        }
        if !tau.is_finite() || tau < 0.0 {
            return Err(Error::invalid("TV threshold must be finite and nonnegative"));
        }
        Ok(())
    }
}

/// Per-run solver traces.
#[derive(Debug, Clone, Default)]
pub struct SolveInfo {
    /// Combined primal residual norm per iteration (ADMM).
    pub primal_residuals: Vec<f64>,
    /// Objective value per iteration (FISTA).
    pub objectives: Vec<f64>,
}

/// Dispatch on the configured solver kind.
pub fn recover(
    system: &LenslessSystem,
    y: &Array2<f64>,
    cfg: &SolverConfig,
) -> Result<(Array2<f64>, SolveInfo)> {
    cfg.validate()?;
    match cfg.kind {
        SolverKind::Wiener => Ok((wiener_recover(system, y, cfg.reg_lambda)?, SolveInfo::default())),
        SolverKind::Fista => fista_recover(system, y, cfg),
        SolverKind::Admm => admm_recover(system, y, cfg),
    }
}

fn check_measurement(system: &LenslessSystem, y: &Array2<f64>) -> Result<()> {
    if y.dim() != system.sensor_shape() {
        return Err(Error::shape(format!(
            "measurement {:?} does not match sensor {:?}",
            y.dim(),
            system.sensor_shape()
        )));
    }
    if y.iter().any(|v| !v.is_finite()) {
        return Err(Error::invalid("measurement contains non-finite values"));
    }
    Ok(())
}

/// Regularized direct inverse on the padded grid, cropped to the scene
/// canvas: `x = F^-1( conj(H) Y / (|H|^2 + lambda) )`.
pub fn wiener_recover(system: &LenslessSystem, y: &Array2<f64>, reg_lambda: f64) -> Result<Array2<f64>> {
    check_measurement(system, y)?;
    if !reg_lambda.is_finite() || reg_lambda < 0.0 {
        return Err(Error::invalid("regularization weight must be finite and nonnegative"));
    }
    if reg_lambda == 0.0 && system.min_h_abs() < 1e-12 {
        return Err(Error::SingularSystem);
    }
    let fft = system.fft();
    let mut spec = fft.forward_real_padded(&system.embed_sensor(y));
    spec.zip_mut_with(system.h_hat(), |s, &h| *s *= h.conj());
    spec.zip_mut_with(system.h_abs2(), |s, &p| *s /= p + reg_lambda);
    let xpad = fft.inverse_real(spec);
    Ok(system.crop_canvas(&xpad))
}

/// Forward operator: capture of a canvas-supported estimate.
fn apply_forward(system: &LenslessSystem, x_canvas: &Array2<f64>) -> Array2<f64> {
    let fft = system.fft();
    let mut spec = fft.forward_real_padded(x_canvas);
    spec.zip_mut_with(system.h_hat(), |s, &h| *s *= h);
    let full = fft.inverse_real(spec);
    system.crop_sensor(&full)
}

/// Adjoint of the forward operator, restricted to the canvas.
fn apply_adjoint(system: &LenslessSystem, r_sensor: &Array2<f64>) -> Array2<f64> {
    let fft = system.fft();
    let mut spec = fft.forward_real_padded(&system.embed_sensor(r_sensor));
    spec.zip_mut_with(system.h_hat(), |s, &h| *s *= h.conj());
    let full = fft.inverse_real(spec);
    system.crop_canvas(&full)
}

fn l2_sq(a: &Array2<f64>) -> f64 {
    a.iter().map(|v| v * v).sum()
}

/// Accelerated proximal gradient on `0.5 ||Ax - y||^2 + lambda ||x||_1` with
/// optional projection onto `x >= 0`, in the monotone variant: the iterate
/// only moves when the objective does not increase, so the objective trace
/// is non-increasing.
pub fn fista_recover(
    system: &LenslessSystem,
    y: &Array2<f64>,
    cfg: &SolverConfig,
) -> Result<(Array2<f64>, SolveInfo)> {
    check_measurement(system, y)?;
    cfg.validate()?;
    let lambda = cfg.reg_lambda;
    let lip = system.max_h_abs2().max(f64::MIN_POSITIVE);
    let step = 1.0 / lip;
    let thresh = lambda * step;
    let shape = system.sensor_shape();

    let prox = |v: f64| -> f64 {
        if cfg.nonneg {
            (v - thresh).max(0.0)
        } else {
            v.signum() * (v.abs() - thresh).max(0.0)
        }
    };
    let objective = |x: &Array2<f64>| -> f64 {
        let r = apply_forward(system, x) - y;
        0.5 * l2_sq(&r) + lambda * x.iter().map(|v| v.abs()).sum::<f64>()
    };

    let mut x = Array2::<f64>::zeros(shape);
    let mut momentum = x.clone();
    let mut t = 1.0_f64;
    let mut f_x = objective(&x);
    let mut info = SolveInfo::default();

    for iteration in 1..=cfg.iters {
        let grad = apply_adjoint(system, &(apply_forward(system, &momentum) - y));
        let mut candidate = &momentum - &(grad * step);
        candidate.mapv_inplace(prox);
        let f_candidate = objective(&candidate);

        // monotone step: keep the previous iterate when the proximal
        // candidate would increase the objective
        let x_prev = x.clone();
        if f_candidate <= f_x {
            x = candidate.clone();
            f_x = f_candidate;
        }
        let t_next = 0.5 * (1.0 + (1.0 + 4.0 * t * t).sqrt());
        momentum = &x + &((&candidate - &x) * (t / t_next)) + ((&x - &x_prev) * ((t - 1.0) / t_next));
        t = t_next;

        if x.iter().any(|v| !v.is_finite()) {
            return Err(Error::Divergence { iteration });
        }
        info.objectives.push(f_x);
    }
    Ok((x, info))
}

fn forward_diff(x: &Array2<f64>) -> (Array2<f64>, Array2<f64>) {
    let (h, w) = x.dim();
    let dv = Array2::from_shape_fn((h, w), |(i, j)| x[[(i + 1) % h, j]] - x[[i, j]]);
    let dh = Array2::from_shape_fn((h, w), |(i, j)| x[[i, (j + 1) % w]] - x[[i, j]]);
    (dv, dh)
}

fn diff_adjoint(av: &Array2<f64>, ah: &Array2<f64>) -> Array2<f64> {
    let (h, w) = av.dim();
    Array2::from_shape_fn((h, w), |(i, j)| {
        av[[(i + h - 1) % h, j]] - av[[i, j]] + ah[[i, (j + w - 1) % w]] - ah[[i, j]]
    })
}

fn soft(v: f64, t: f64) -> f64 {
    v.signum() * (v.abs() - t).max(0.0)
}

/// ADMM with three splits: Fourier-diagonal data fidelity, anisotropic TV
/// with soft threshold `tau`, and a nonnegativity projection. Aborts with a
/// divergence error if an iterate stops being finite.
pub fn admm_recover(
    system: &LenslessSystem,
    y: &Array2<f64>,
    cfg: &SolverConfig,
) -> Result<(Array2<f64>, SolveInfo)> {
    check_measurement(system, y)?;
    cfg.validate()?;
    let AdmmParams { mu1, mu2, mu3, tau } = cfg.admm;
    let fft = system.fft();
    let (p1, p2) = system.padded_shape();

    let cty = system.embed_sensor(y);
    let (cy, cx) = system.crop_offset();
    let (sh, sw) = system.sensor_shape();
    // |D|^2 for circular forward differences
    let d_abs2 = Array2::from_shape_fn((p1, p2), |(i, j)| {
        let sv = (std::f64::consts::PI * i as f64 / p1 as f64).sin();
        let sh2 = (std::f64::consts::PI * j as f64 / p2 as f64).sin();
        4.0 * (sv * sv + sh2 * sh2)
    });
    let x_denom = Array2::from_shape_fn((p1, p2), |(i, j)| {
        mu1 * system.h_abs2()[[i, j]] + mu2 * d_abs2[[i, j]] + mu3
    });
    let v_denom = {
        let mut d = Array2::from_elem((p1, p2), mu1);
        for i in 0..sh {
            for j in 0..sw {
                d[[cy + i, cx + j]] += 1.0;
            }
        }
        d
    };

    let zeros = Array2::<f64>::zeros((p1, p2));
    let mut x = zeros.clone();
    let mut hx = zeros.clone();
    let mut xi = zeros.clone();
    let mut eta_v = zeros.clone();
    let mut eta_h = zeros.clone();
    let mut rho = zeros;
    let mut info = SolveInfo::default();

    for iteration in 1..=cfg.iters {
        let (dxv, dxh) = forward_diff(&x);
        let u_v = ndarray::Zip::from(&dxv).and(&eta_v).map_collect(|&d, &e| soft(d + e / mu2, tau / mu2));
        let u_h = ndarray::Zip::from(&dxh).and(&eta_h).map_collect(|&d, &e| soft(d + e / mu2, tau / mu2));

        let mut v = ndarray::Zip::from(&cty)
            .and(&hx)
            .and(&xi)
            .map_collect(|&c, &h, &s| c + mu1 * h + s);
        v.zip_mut_with(&v_denom, |a, &d| *a /= d);

        let w = ndarray::Zip::from(&x).and(&rho).map_collect(|&xv, &r| {
            let raw = xv + r / mu3;
            if cfg.nonneg {
                raw.max(0.0)
            } else {
                raw
            }
        });

        // x solve: (mu1 H'H + mu2 D'D + mu3 I) x =
        //          H'(mu1 v - xi) + D'(mu2 u - eta) + (mu3 w - rho)
        let s_spatial = diff_adjoint(
            &ndarray::Zip::from(&u_v).and(&eta_v).map_collect(|&u, &e| mu2 * u - e),
            &ndarray::Zip::from(&u_h).and(&eta_h).map_collect(|&u, &e| mu2 * u - e),
        ) + &ndarray::Zip::from(&w).and(&rho).map_collect(|&wv, &r| mu3 * wv - r);
        let v_term = ndarray::Zip::from(&v).and(&xi).map_collect(|&vv, &s| mu1 * vv - s);

        let mut num = fft.forward_real_padded(&v_term);
        num.zip_mut_with(system.h_hat(), |a, &h| *a *= h.conj());
        let s_hat = fft.forward_real_padded(&s_spatial);
        num.zip_mut_with(&s_hat, |a, &b| *a += b);
        num.zip_mut_with(&x_denom, |a, &d| *a /= d);

        let x_hat = num;
        let mut hx_hat = x_hat.clone();
        hx_hat.zip_mut_with(system.h_hat(), |a, &h| *a *= h);
        x = fft.inverse_real(x_hat);
        hx = fft.inverse_real(hx_hat);

        if x.iter().any(|val| !val.is_finite()) {
            return Err(Error::Divergence { iteration });
        }

        let (dxv2, dxh2) = forward_diff(&x);
        let mut residual = 0.0;
        ndarray::Zip::from(&hx).and(&v).for_each(|&a, &b| residual += (a - b) * (a - b));
        ndarray::Zip::from(&dxv2).and(&u_v).for_each(|&a, &b| residual += (a - b) * (a - b));
        ndarray::Zip::from(&dxh2).and(&u_h).for_each(|&a, &b| residual += (a - b) * (a - b));
        ndarray::Zip::from(&x).and(&w).for_each(|&a, &b| residual += (a - b) * (a - b));
        info.primal_residuals.push(residual.sqrt());

        ndarray::Zip::from(&mut xi).and(&hx).and(&v).for_each(|s, &a, &b| *s += mu1 * (a - b));
        ndarray::Zip::from(&mut eta_v).and(&dxv2).and(&u_v).for_each(|s, &a, &b| *s += mu2 * (a - b));
        ndarray::Zip::from(&mut eta_h).and(&dxh2).and(&u_h).for_each(|s, &a, &b| *s += mu2 * (a - b));
        ndarray::Zip::from(&mut rho).and(&x).and(&w).for_each(|s, &a, &b| *s += mu3 * (a - b));
    }

    Ok((system.crop_canvas(&x), info))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::optics::{psf_from_mask, LenslessSystem, MaskPattern, PointSpreadFunction, ScreenFrame};
    use ndarray::Array2;
    use rand::Rng;

    fn delta_system(side: usize) -> LenslessSystem {
        let mask = MaskPattern::delta(side, 8).unwrap();
        LenslessSystem::new(&psf_from_mask(&mask, (side, side), 0.0).unwrap())
    }

    fn random_scene(side: usize, seed: u64) -> Array2<f64> {
        let mut rng = crate::rng::substream(seed, "solver-scene", 0);
        Array2::from_shape_fn((side, side), |_| rng.random::<f64>())
    }

    /// Compact random PSF whose support keeps the full linear convolution of
    /// a centered scene inside the sensor crop, so recovery can be exact.
    fn compact_system(sensor: usize, patch: usize, seed: u64) -> LenslessSystem {
        let mut rng = crate::rng::substream(seed, "solver-psf", 0);
        let mut kernel = Array2::<f64>::zeros((sensor, sensor));
        let start = sensor / 2 - patch / 2;
        for i in 0..patch {
            for j in 0..patch {
                kernel[[start + i, start + j]] = rng.random::<f64>() + 0.05;
            }
        }
        LenslessSystem::new(&PointSpreadFunction::from_kernel(kernel).unwrap())
    }

    fn capture_centered(system: &LenslessSystem, scene: &Array2<f64>) -> Array2<f64> {
        system.capture_clean(&ScreenFrame::new(scene.clone()).unwrap()).unwrap()
    }

    fn canvas_truth(system: &LenslessSystem, scene: &Array2<f64>) -> Array2<f64> {
        let (h, w) = system.sensor_shape();
        let (sh, sw) = scene.dim();
        let mut canvas = Array2::zeros((h, w));
        for i in 0..sh {
            for j in 0..sw {
                canvas[[(h - sh) / 2 + i, (w - sw) / 2 + j]] = scene[[i, j]];
            }
        }
        canvas
    }

    fn rel_err(est: &Array2<f64>, truth: &Array2<f64>) -> f64 {
        (l2_sq(&(est - truth)) / l2_sq(truth)).sqrt()
    }

    #[test]
    fn wiener_delta_identity() {
        let system = delta_system(32);
        let scene = random_scene(16, 1);
        let y = capture_centered(&system, &scene);
        let x = wiener_recover(&system, &y, 1e-12).unwrap();
        let truth = canvas_truth(&system, &scene);
        let max_diff = x.iter().zip(truth.iter()).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
        assert!(max_diff < 1e-6, "max diff {max_diff}");
    }

    #[test]
    fn wiener_matches_frequency_division_oracle() {
        // random 16x16 scene, compact random PSF, noiseless: the regularized
        // inverse and plain spectral division where |H| is healthy agree with
        // the truth
        let system = compact_system(24, 9, 42);
        let scene = random_scene(16, 2);
        let y = capture_centered(&system, &scene);
        let x = wiener_recover(&system, &y, 1e-8).unwrap();
        let truth = canvas_truth(&system, &scene);
        assert!(rel_err(&x, &truth) < 1e-3, "rel err {}", rel_err(&x, &truth));

        // oracle: direct frequency division on the padded grid
        let fft = system.fft();
        let mut spec = fft.forward_real_padded(&system.embed_sensor(&y));
        spec.zip_mut_with(system.h_hat(), |s, &h| {
            if h.norm() > 1e-6 {
                *s /= h;
            } else {
                *s *= 0.0;
            }
        });
        let oracle = system.crop_canvas(&fft.inverse_real(spec));
        assert!(rel_err(&oracle, &truth) < 1e-3);
        assert!(rel_err(&x, &oracle) < 1e-3);
    }

    #[test]
    fn wiener_huge_lambda_shrinks_to_zero() {
        let system = compact_system(24, 9, 3);
        let scene = random_scene(16, 3);
        let y = capture_centered(&system, &scene);
        let x = wiener_recover(&system, &y, 1e9).unwrap();
        let ratio = (l2_sq(&x) / l2_sq(&canvas_truth(&system, &scene))).sqrt();
        assert!(ratio < 1e-3, "ratio {ratio}");
    }

    #[test]
    fn wiener_zero_lambda_on_singular_spectrum_is_rejected() {
        // a uniform kernel has exact zeros in its spectrum
        let kernel = Array2::from_elem((16, 16), 1.0);
        let system = LenslessSystem::new(&PointSpreadFunction::from_kernel(kernel).unwrap());
        let y = Array2::zeros((16, 16));
        assert!(matches!(wiener_recover(&system, &y, 0.0), Err(Error::SingularSystem)));
    }

    #[test]
    fn wiener_is_linear_in_the_measurement() {
        let system = compact_system(24, 9, 4);
        let y1 = capture_centered(&system, &random_scene(16, 4));
        let y2 = capture_centered(&system, &random_scene(16, 5));
        let (a, b) = (0.7, -1.3);
        let lhs = wiener_recover(&system, &(&y1 * a + &y2 * b), 1e-4).unwrap();
        let rhs = wiener_recover(&system, &y1, 1e-4).unwrap() * a
            + wiener_recover(&system, &y2, 1e-4).unwrap() * b;
        assert!(rel_err(&lhs, &rhs) < 1e-10);
    }

    #[test]
    fn fista_zero_measurement_gives_zero() {
        let system = compact_system(24, 9, 6);
        let cfg = SolverConfig::fista(20, 1e-3);
        let (x, _) = fista_recover(&system, &Array2::zeros((24, 24)), &cfg).unwrap();
        assert!(x.iter().all(|&v| v == 0.0));
    }

    #[test]
    fn fista_delta_identity_without_regularization() {
        let system = delta_system(32);
        let scene = random_scene(16, 7);
        let y = capture_centered(&system, &scene);
        let cfg = SolverConfig::fista(50, 0.0);
        let (x, _) = fista_recover(&system, &y, &cfg).unwrap();
        let truth = canvas_truth(&system, &scene);
        assert!(rel_err(&x, &truth) < 1e-4, "rel err {}", rel_err(&x, &truth));
    }

    #[test]
    fn fista_objective_monotone_after_burn_in() {
        let system = compact_system(32, 11, 8);
        let scene = random_scene(20, 8);
        let y = capture_centered(&system, &scene);
        let cfg = SolverConfig::fista(60, 1e-4);
        let (_, info) = fista_recover(&system, &y, &cfg).unwrap();
        for k in 5..info.objectives.len() {
            assert!(
                info.objectives[k] <= info.objectives[4] + 1e-12,
                "objective rose after burn-in at {k}"
            );
            assert!(info.objectives[k] <= info.objectives[k - 1] + 1e-12);
        }
    }

    #[test]
    fn fista_beats_wiener_in_its_own_objective() {
        let system = compact_system(24, 9, 9);
        let scene = random_scene(16, 9);
        let y = capture_centered(&system, &scene);
        let lambda = 1e-4;
        let mut cfg = SolverConfig::fista(200, lambda);
        cfg.nonneg = false;
        let (x, info) = fista_recover(&system, &y, &cfg).unwrap();
        let objective = |x: &Array2<f64>| {
            0.5 * l2_sq(&(apply_forward(&system, x) - &y))
                + lambda * x.iter().map(|v| v.abs()).sum::<f64>()
        };
        let wiener = wiener_recover(&system, &y, 1e-6).unwrap();
        assert!(*info.objectives.last().unwrap() <= objective(&wiener));
        assert!(objective(&x) <= objective(&wiener));
    }

    #[test]
    fn admm_zero_measurement_gives_zero() {
        let system = compact_system(24, 9, 10);
        let cfg = SolverConfig::admm(30);
        let (x, _) = admm_recover(&system, &Array2::zeros((24, 24)), &cfg).unwrap();
        assert!(x.iter().all(|&v| v.abs() < 1e-10));
    }

    #[test]
    fn admm_delta_identity() {
        let system = delta_system(32);
        let scene = random_scene(16, 11);
        let y = capture_centered(&system, &scene);
        let mut cfg = SolverConfig::admm(100);
        cfg.admm.tau = 0.0;
        let (x, info) = admm_recover(&system, &y, &cfg).unwrap();
        let truth = canvas_truth(&system, &scene);
        assert!(rel_err(&x, &truth) < 1e-4, "rel err {}", rel_err(&x, &truth));
        assert!(info.primal_residuals[99] < info.primal_residuals[9]);
    }

    #[test]
    fn admm_residual_decreases_on_random_instances() {
        let mut better = 0;
        for seed in 0..5 {
            let system = compact_system(24, 9, 100 + seed);
            let scene = random_scene(16, 100 + seed);
            let y = capture_centered(&system, &scene);
            let cfg = SolverConfig::admm(100);
            let (_, info) = admm_recover(&system, &y, &cfg).unwrap();
            if info.primal_residuals[99] < info.primal_residuals[9] {
                better += 1;
            }
        }
        assert!(better >= 3, "median trend violated: {better}/5");
    }

    #[test]
    fn admm_tv_helps_on_noisy_piecewise_constant_scenes() {
        let system = compact_system(48, 9, 12);
        let scene = Array2::from_shape_fn((32, 32), |(i, j)| {
            if i < 16 && j < 16 {
                0.9
            } else if i >= 16 && j >= 16 {
                0.6
            } else {
                0.2
            }
        });
        let frame = ScreenFrame::new(scene.clone()).unwrap();
        let y = system.capture(&frame, Some(30.0), 99).unwrap();
        let truth = canvas_truth(&system, &scene);

        let mut tv_on = SolverConfig::admm(60);
        tv_on.admm.tau = 2e-3;
        let mut tv_off = tv_on;
        tv_off.admm.tau = 0.0;
        let (x_on, _) = admm_recover(&system, &y, &tv_on).unwrap();
        let (x_off, _) = admm_recover(&system, &y, &tv_off).unwrap();
        let mse_on = l2_sq(&(&x_on - &truth)) / truth.len() as f64;
        let mse_off = l2_sq(&(&x_off - &truth)) / truth.len() as f64;
        assert!(mse_on <= mse_off, "tv: {mse_on} vs plain: {mse_off}");
    }

    #[test]
    fn invalid_configs_are_rejected() {
        let mut cfg = SolverConfig::admm(0);
        assert!(cfg.validate().is_err());
        cfg.iters = 10;
        cfg.admm.mu2 = 0.0;
        assert!(cfg.validate().is_err());
        cfg.admm.mu2 = 1e-4;
        cfg.reg_lambda = -1.0;
        assert!(cfg.validate().is_err());
    }
}
