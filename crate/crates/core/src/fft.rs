//! Shared 2D FFT plans over rustfft.

use ndarray::Array2;
use num_complex::Complex64;
use rustfft::{Fft, FftDirection, FftPlanner};
use std::sync::Arc;

/// Forward/inverse 2D FFT for one fixed shape. Plans are immutable and safe
/// to share across threads.
pub struct Fft2d {
    rows: usize,
    cols: usize,
    fwd_row: Arc<dyn Fft<f64>>,
    inv_row: Arc<dyn Fft<f64>>,
    fwd_col: Arc<dyn Fft<f64>>,
    inv_col: Arc<dyn Fft<f64>>,
}

impl Fft2d {
    pub fn new(rows: usize, cols: usize) -> Self {
        let mut planner = FftPlanner::new();
        Self {
            rows,
            cols,
            fwd_row: planner.plan_fft(cols, FftDirection::Forward),
            inv_row: planner.plan_fft(cols, FftDirection::Inverse),
            fwd_col: planner.plan_fft(rows, FftDirection::Forward),
            inv_col: planner.plan_fft(rows, FftDirection::Inverse),
        }
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    /// In-place forward transform (unnormalized).
    pub fn forward(&self, a: &mut Array2<Complex64>) {
        self.transform(a, &self.fwd_row, &self.fwd_col);
    }

    /// In-place inverse transform, normalized by `1 / (rows * cols)`.
    pub fn inverse(&self, a: &mut Array2<Complex64>) {
        self.transform(a, &self.inv_row, &self.inv_col);
        let scale = 1.0 / (self.rows * self.cols) as f64;
        a.mapv_inplace(|v| v * scale);
    }

    fn transform(&self, a: &mut Array2<Complex64>, row_fft: &Arc<dyn Fft<f64>>, col_fft: &Arc<dyn Fft<f64>>) {
        assert_eq!(a.dim(), (self.rows, self.cols), "fft shape mismatch");
        let data = a.as_slice_mut().expect("standard layout");
        let mut scratch = vec![Complex64::default(); row_fft.get_inplace_scratch_len()];
        for row in data.chunks_exact_mut(self.cols) {
            row_fft.process_with_scratch(row, &mut scratch);
        }
        let mut col = vec![Complex64::default(); self.rows];
        let mut col_scratch = vec![Complex64::default(); col_fft.get_inplace_scratch_len()];
        for j in 0..self.cols {
            for i in 0..self.rows {
                col[i] = data[i * self.cols + j];
            }
            col_fft.process_with_scratch(&mut col, &mut col_scratch);
            for i in 0..self.rows {
                data[i * self.cols + j] = col[i];
            }
        }
    }

    /// Transform of a real array zero-padded into this plan's shape at the
    /// top-left corner.
    pub fn forward_real_padded(&self, a: &Array2<f64>) -> Array2<Complex64> {
        let (h, w) = a.dim();
        assert!(h <= self.rows && w <= self.cols, "input exceeds fft grid");
        let mut out = Array2::<Complex64>::zeros((self.rows, self.cols));
        for i in 0..h {
            for j in 0..w {
                out[[i, j]] = Complex64::new(a[[i, j]], 0.0);
            }
        }
        self.forward(&mut out);
        out
    }

    /// Inverse transform returning the real part.
    pub fn inverse_real(&self, mut a: Array2<Complex64>) -> Array2<f64> {
        self.inverse(&mut a);
        a.mapv(|v| v.re)
    }
}
