//! Grid search over ADMM penalty parameters on two reference instances:
//! the delta-PSF identity channel and a noisy compact-support deconvolution.

use lenslessmic::optics::{psf_from_mask, LenslessSystem, MaskPattern, PointSpreadFunction, ScreenFrame};
use lenslessmic::solvers::{admm_recover, SolverConfig};
use ndarray::Array2;
use rand::Rng;

fn l2_sq(a: &Array2<f64>) -> f64 {
    a.iter().map(|v| v * v).sum()
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

fn main() {
    let delta_sys = {
        let mask = MaskPattern::delta(32, 8).unwrap();
        LenslessSystem::new(&psf_from_mask(&mask, (32, 32), 0.0).unwrap())
    };
    let mut rng = lenslessmic::rng::substream(11, "grid-scene", 0);
    let scene = Array2::from_shape_fn((16, 16), |_| rng.random::<f64>());
    let y_delta = delta_sys
        .capture_clean(&ScreenFrame::new(scene.clone()).unwrap())
        .unwrap();
    let truth_delta = canvas_truth(&delta_sys, &scene);

    // noisy blurred instance
    let blurred_sys = {
        let mut rng = lenslessmic::rng::substream(12, "grid-psf", 0);
        let mut kernel = Array2::<f64>::zeros((48, 48));
        for i in 0..9 {
            for j in 0..9 {
                kernel[[20 + i, 20 + j]] = rng.random::<f64>() + 0.05;
            }
        }
        LenslessSystem::new(&PointSpreadFunction::from_kernel(kernel).unwrap())
    };
    let mut rng2 = lenslessmic::rng::substream(13, "grid-scene2", 0);
    let scene2 = Array2::from_shape_fn((32, 32), |_| rng2.random::<f64>());
    let y_noisy = blurred_sys
        .capture(&ScreenFrame::new(scene2.clone()).unwrap(), Some(40.0), 5)
        .unwrap();
    let truth2 = canvas_truth(&blurred_sys, &scene2);

    println!("mu1      mu2      mu3      | delta relerr | noisy relerr");
    for &mu1 in &[1e-5, 1e-4, 1e-3, 1e-2, 1e-1, 1.0] {
        for &mu2 in &[1e-6, 1e-5, 1e-4, 1e-3] {
            for &mu3 in &[1e-5, 1e-4, 1e-3, 1e-2] {
                let mut cfg = SolverConfig::admm(100);
                cfg.admm.mu1 = mu1;
                cfg.admm.mu2 = mu2;
                cfg.admm.mu3 = mu3;
                cfg.admm.tau = 1e-4;
                let mut cfg_delta = cfg;
                cfg_delta.admm.tau = 0.0;
                let e1 = match admm_recover(&delta_sys, &y_delta, &cfg_delta) {
                    Ok((x, _)) => (l2_sq(&(&x - &truth_delta)) / l2_sq(&truth_delta)).sqrt(),
                    Err(_) => f64::NAN,
                };
                let e2 = match admm_recover(&blurred_sys, &y_noisy, &cfg) {
                    Ok((x, _)) => (l2_sq(&(&x - &truth2)) / l2_sq(&truth2)).sqrt(),
                    Err(_) => f64::NAN,
                };
                println!("{mu1:8.0e} {mu2:8.0e} {mu3:8.0e} | {e1:12.3e} | {e2:12.3e}");
            }
        }
    }
}
