//! Mask patterns, PSF synthesis, and lensless capture simulation.
//!
//! The secret key is a programmable mask: a square grid of integer pixels of
//! bit-depth `b`. The mask deterministically produces a point spread function
//! (nearest-neighbor placement of pixel transmissions on the sensor grid,
//! followed by a Gaussian optical blur and unit-sum normalization). A capture
//! is the linear convolution of the displayed scene with that PSF, cropped to
//! the sensor and corrupted by Gaussian noise at a configured SNR.

use crate::error::{Error, Result};
use crate::fft::Fft2d;
use ndarray::Array2;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use rand_distr::StandardNormal;

/// The secret key: an N = side x side grid of integer pixels in `[0, bit_depth)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaskPattern {
    side: usize,
    bit_depth: u8,
    levels: Vec<u8>,
    seed: u64,
}

impl MaskPattern {
    /// Validate and wrap an explicit level grid.
    pub fn from_levels(side: usize, bit_depth: u8, levels: Vec<u8>, seed: u64) -> Result<Self> {
        if side < 2 {
            return Err(Error::invalid("mask side must be at least 2"));
        }
        if bit_depth < 2 {
            return Err(Error::invalid("mask bit depth must be at least 2"));
        }
        if levels.len() != side * side {
            return Err(Error::shape(format!(
                "mask needs {} levels, got {}",
                side * side,
                levels.len()
            )));
        }
        if let Some(bad) = levels.iter().find(|&&l| l >= bit_depth) {
            return Err(Error::invalid(format!(
                "mask level {bad} out of range for bit depth {bit_depth}"
            )));
        }
        Ok(Self { side, bit_depth, levels, seed })
    }

    /// Draw a uniformly random pattern from the full key space.
    pub fn random(side: usize, bit_depth: u8, seed: u64) -> Result<Self> {
        if side < 2 {
            return Err(Error::invalid("mask side must be at least 2"));
        }
        if bit_depth < 2 {
            return Err(Error::invalid("mask bit depth must be at least 2"));
        }
        let mut rng = crate::rng::substream(seed, "mask-pattern", 0);
        let levels = (0..side * side).map(|_| rng.random_range(0..bit_depth)).collect();
        Ok(Self { side, bit_depth, levels, seed })
    }

    /// A pattern with a single full-transmission pixel at the grid center.
    /// With `side` equal to the sensor side and zero blur this produces an
    /// identity (delta) PSF, which is the reference noiseless channel.
    pub fn delta(side: usize, bit_depth: u8) -> Result<Self> {
        let mut levels = vec![0u8; side * side];
        levels[(side / 2) * side + side / 2] = bit_depth - 1;
        Self::from_levels(side, bit_depth, levels, 0)
    }

    pub fn side(&self) -> usize {
        self.side
    }

    pub fn bit_depth(&self) -> u8 {
        self.bit_depth
    }

    pub fn levels(&self) -> &[u8] {
        &self.levels
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Number of mask pixels N.
    pub fn n_pixels(&self) -> usize {
        self.side * self.side
    }

    /// Count of positions where both patterns hold the same level.
    pub fn agreement(&self, other: &MaskPattern) -> Result<usize> {
        if self.side != other.side || self.bit_depth != other.bit_depth {
            return Err(Error::shape("mask geometry mismatch".to_string()));
        }
        Ok(self.levels.iter().zip(&other.levels).filter(|(a, b)| a == b).count())
    }
}

/// Resample all but `ceil(w * N)` pixels to a guaranteed-different level, so
/// the agreement ratio with the original is exactly `w` (rounded up to the
/// pixel grid). `w = 1` returns the pattern unchanged.
pub fn perturb_mask(mask: &MaskPattern, w: f64, rng_seed: u64) -> Result<MaskPattern> {
    if !(0.0..=1.0).contains(&w) {
        return Err(Error::invalid(format!("correct-pixel ratio w = {w} outside [0, 1]")));
    }
    let n = mask.n_pixels();
    // guard against float products like 0.1 * 20 = 2.0000000000000004
    let keep = ((w * n as f64) - 1e-9).ceil().max(0.0) as usize;
    let n_change = n - keep.min(n);
    let mut rng = ChaCha12Rng::seed_from_u64(rng_seed);
    let mut levels = mask.levels.clone();
    for idx in rand::seq::index::sample(&mut rng, n, n_change) {
        let old = levels[idx];
        let mut new = rng.random_range(0..mask.bit_depth - 1);
        if new >= old {
            new += 1;
        }
        levels[idx] = new;
    }
    Ok(MaskPattern {
        side: mask.side,
        bit_depth: mask.bit_depth,
        levels,
        seed: rng_seed,
    })
}

/// Nonnegative unit-sum convolution kernel on the sensor grid.
#[derive(Debug, Clone)]
pub struct PointSpreadFunction {
    kernel: Array2<f64>,
    blur_sigma: f64,
}

impl PointSpreadFunction {
    /// Wrap an explicit kernel, e.g. a measured response. Entries must be
    /// finite and nonnegative; the kernel is normalized to unit sum.
    pub fn from_kernel(kernel: Array2<f64>) -> Result<Self> {
        if kernel.iter().any(|v| !v.is_finite() || *v < 0.0) {
            return Err(Error::invalid("kernel entries must be finite and nonnegative"));
        }
        let total: f64 = kernel.sum();
        if total <= 0.0 {
            return Err(Error::DegenerateKey);
        }
        Ok(Self { kernel: kernel.mapv(|v| v / total), blur_sigma: 0.0 })
    }

    pub fn kernel(&self) -> &Array2<f64> {
        &self.kernel
    }

    pub fn blur_sigma(&self) -> f64 {
        self.blur_sigma
    }

    pub fn shape(&self) -> (usize, usize) {
        self.kernel.dim()
    }
}

/// Derive the PSF for a mask pattern on a given sensor.
///
/// Pixel transmissions `level / (bit_depth - 1)` are placed on the sensor by
/// nearest-neighbor upsampling, blurred by a Gaussian of standard deviation
/// `blur_sigma` (truncated at four sigma), and normalized to unit sum. The
/// construction is deterministic and sensitive to every mask pixel.
pub fn psf_from_mask(
    mask: &MaskPattern,
    sensor_shape: (usize, usize),
    blur_sigma: f64,
) -> Result<PointSpreadFunction> {
    let (h, w) = sensor_shape;
    if h < mask.side || w < mask.side {
        return Err(Error::invalid(format!(
            "sensor {h}x{w} smaller than mask side {}",
            mask.side
        )));
    }
    if !blur_sigma.is_finite() || blur_sigma < 0.0 {
        return Err(Error::invalid("blur sigma must be finite and nonnegative"));
    }
    if mask.levels.iter().all(|&l| l == 0) {
        return Err(Error::DegenerateKey);
    }
    let side = mask.side;
    let peak = (mask.bit_depth - 1) as f64;
    let mut kernel = Array2::from_shape_fn((h, w), |(i, j)| {
        let si = i * side / h;
        let sj = j * side / w;
        mask.levels[si * side + sj] as f64 / peak
    });
    if blur_sigma > 0.0 {
        kernel = gaussian_blur(&kernel, blur_sigma);
    }
    let total: f64 = kernel.sum();
    kernel.mapv_inplace(|v| v / total);
    Ok(PointSpreadFunction { kernel, blur_sigma })
}

/// Separable Gaussian blur with zero padding at the borders, truncated at
/// four standard deviations.
fn gaussian_blur(image: &Array2<f64>, sigma: f64) -> Array2<f64> {
    let radius = (4.0 * sigma).ceil() as isize;
    let mut taps = Vec::with_capacity((2 * radius + 1) as usize);
    for k in -radius..=radius {
        taps.push((-((k * k) as f64) / (2.0 * sigma * sigma)).exp());
    }
    let norm: f64 = taps.iter().sum();
    for t in &mut taps {
        *t /= norm;
    }
    let (h, w) = image.dim();
    let mut rows = Array2::zeros((h, w));
    for i in 0..h {
        for j in 0..w {
            let mut acc = 0.0;
            for (t, &tap) in taps.iter().enumerate() {
                let jj = j as isize + t as isize - radius;
                if jj >= 0 && (jj as usize) < w {
                    acc += tap * image[[i, jj as usize]];
                }
            }
            rows[[i, j]] = acc;
        }
    }
    let mut out = Array2::zeros((h, w));
    for i in 0..h {
        for j in 0..w {
            let mut acc = 0.0;
            for (t, &tap) in taps.iter().enumerate() {
                let ii = i as isize + t as isize - radius;
                if ii >= 0 && (ii as usize) < h {
                    acc += tap * rows[[ii as usize, j]];
                }
            }
            out[[i, j]] = acc;
        }
    }
    out
}

/// A frame as displayed on the screen: values in `[0, 1]`.
#[derive(Debug, Clone)]
pub struct ScreenFrame {
    pixels: Array2<f64>,
}

impl ScreenFrame {
    pub fn new(pixels: Array2<f64>) -> Result<Self> {
        if pixels.iter().any(|v| !v.is_finite()) {
            return Err(Error::invalid("screen frame contains non-finite values"));
        }
        if pixels.iter().any(|&v| !(-1e-12..=1.0 + 1e-12).contains(&v)) {
            return Err(Error::invalid("screen frame values outside [0, 1]"));
        }
        Ok(Self { pixels: pixels.mapv(|v| v.clamp(0.0, 1.0)) })
    }

    pub fn pixels(&self) -> &Array2<f64> {
        &self.pixels
    }

    pub fn side(&self) -> (usize, usize) {
        self.pixels.dim()
    }
}

/// Captured lensless frames plus the noise settings that produced them.
#[derive(Debug, Clone)]
pub struct Measurement {
    pub frames: Vec<Array2<f64>>,
    pub snr_db: Option<f64>,
    pub seed: u64,
}

/// Precomputed capture geometry for one PSF: the padded FFT grid on which
/// linear convolution is realized, the sensor crop window, and the PSF
/// frequency response shared by the capture model and every solver.
pub struct LenslessSystem {
    sensor: (usize, usize),
    padded: (usize, usize),
    crop_offset: (usize, usize),
    h_hat: Array2<Complex64>,
    h_abs2: Array2<f64>,
    fft: Fft2d,
}

impl LenslessSystem {
    pub fn new(psf: &PointSpreadFunction) -> Self {
        let (h, w) = psf.shape();
        // 2H x 2W holds the full linear convolution of two H x W supports.
        let padded = (2 * h, 2 * w);
        let fft = Fft2d::new(padded.0, padded.1);
        let h_hat = fft.forward_real_padded(psf.kernel());
        let h_abs2 = h_hat.mapv(|v| v.norm_sqr());
        Self {
            sensor: (h, w),
            padded,
            crop_offset: (h / 2, w / 2),
            h_hat,
            h_abs2,
            fft,
        }
    }

    pub fn from_mask(mask: &MaskPattern, sensor_shape: (usize, usize), blur_sigma: f64) -> Result<Self> {
        Ok(Self::new(&psf_from_mask(mask, sensor_shape, blur_sigma)?))
    }

    pub fn sensor_shape(&self) -> (usize, usize) {
        self.sensor
    }

    pub(crate) fn padded_shape(&self) -> (usize, usize) {
        self.padded
    }

    pub(crate) fn crop_offset(&self) -> (usize, usize) {
        self.crop_offset
    }

    pub(crate) fn fft(&self) -> &Fft2d {
        &self.fft
    }

    pub(crate) fn h_hat(&self) -> &Array2<Complex64> {
        &self.h_hat
    }

    pub(crate) fn h_abs2(&self) -> &Array2<f64> {
        &self.h_abs2
    }

    pub(crate) fn max_h_abs2(&self) -> f64 {
        self.h_abs2.iter().copied().fold(0.0, f64::max)
    }

    pub(crate) fn min_h_abs(&self) -> f64 {
        self.h_abs2.iter().copied().fold(f64::INFINITY, f64::min).sqrt()
    }

    /// Centered placement of a square scene inside the sensor field of view.
    pub fn scene_roi(&self, scene_side: usize) -> Result<Roi> {
        let (h, w) = self.sensor;
        if scene_side > h || scene_side > w {
            return Err(Error::invalid(format!(
                "scene side {scene_side} exceeds sensor {h}x{w}"
            )));
        }
        Ok(Roi {
            top: (h - scene_side) / 2,
            left: (w - scene_side) / 2,
            height: scene_side,
            width: scene_side,
        })
    }

    /// Scene embedded at its centered position on the padded grid.
    fn embed_scene(&self, scene: &ScreenFrame) -> Result<Array2<f64>> {
        let (sh, sw) = scene.side();
        let (h, w) = self.sensor;
        if sh > h || sw > w {
            return Err(Error::invalid(format!(
                "scene {sh}x{sw} does not fit sensor {h}x{w}"
            )));
        }
        let (top, left) = ((h - sh) / 2, (w - sw) / 2);
        let mut canvas = Array2::zeros(self.padded);
        for i in 0..sh {
            for j in 0..sw {
                canvas[[top + i, left + j]] = scene.pixels()[[i, j]];
            }
        }
        Ok(canvas)
    }

    /// Noiseless capture: linear convolution with the PSF on the padded grid,
    /// cropped to the sensor window aligned with the kernel center.
    pub fn capture_clean(&self, scene: &ScreenFrame) -> Result<Array2<f64>> {
        let canvas = self.embed_scene(scene)?;
        let mut spec = self.fft.forward_real_padded(&canvas);
        spec.zip_mut_with(&self.h_hat, |a, &b| *a *= b);
        let full = self.fft.inverse_real(spec);
        Ok(self.crop_sensor(&full))
    }

    /// Capture with i.i.d. Gaussian noise scaled to the requested measurement
    /// SNR in dB. `snr_db = None` means noiseless.
    pub fn capture(&self, scene: &ScreenFrame, snr_db: Option<f64>, noise_seed: u64) -> Result<Array2<f64>> {
        let mut y = self.capture_clean(scene)?;
        if let Some(snr) = snr_db {
            let signal_power: f64 = y.iter().map(|v| v * v).sum();
            let sigma = (signal_power / (y.len() as f64 * 10f64.powf(snr / 10.0))).sqrt();
            if sigma > 0.0 {
                let mut rng = ChaCha12Rng::seed_from_u64(noise_seed);
                y.mapv_inplace(|v| v + sigma * rng.sample::<f64, _>(StandardNormal));
            }
        }
        Ok(y)
    }

    /// Crop the sensor window out of a padded-grid array.
    pub(crate) fn crop_sensor(&self, padded: &Array2<f64>) -> Array2<f64> {
        let (cy, cx) = self.crop_offset;
        let (h, w) = self.sensor;
        Array2::from_shape_fn((h, w), |(i, j)| padded[[cy + i, cx + j]])
    }

    /// Adjoint of the sensor crop: place a measurement back at its window on
    /// the padded grid.
    pub(crate) fn embed_sensor(&self, y: &Array2<f64>) -> Array2<f64> {
        let (cy, cx) = self.crop_offset;
        let mut out = Array2::zeros(self.padded);
        for ((i, j), &v) in y.indexed_iter() {
            out[[cy + i, cx + j]] = v;
        }
        out
    }

    /// Crop the scene canvas (sensor-shaped, top-left block) out of a
    /// padded-grid array. Solver estimates live on this canvas.
    pub(crate) fn crop_canvas(&self, padded: &Array2<f64>) -> Array2<f64> {
        let (h, w) = self.sensor;
        Array2::from_shape_fn((h, w), |(i, j)| padded[[i, j]])
    }
}

/// One-shot capture without reusing the system. Frame sequences should build
/// a [`LenslessSystem`] once and call [`LenslessSystem::capture`].
pub fn forward_capture(
    scene: &ScreenFrame,
    psf: &PointSpreadFunction,
    snr_db: Option<f64>,
    noise_seed: u64,
) -> Result<Array2<f64>> {
    LenslessSystem::new(psf).capture(scene, snr_db, noise_seed)
}

/// Nearest-neighbor replication by a factor `u` in both axes, producing the
/// super-pixel structure that survives optical blur.
pub fn upsample_superpixel(frame: &Array2<f64>, u: usize) -> Result<ScreenFrame> {
    if u < 1 {
        return Err(Error::invalid("upsampling factor must be at least 1"));
    }
    let (h, w) = frame.dim();
    ScreenFrame::new(Array2::from_shape_fn((h * u, w * u), |(i, j)| frame[[i / u, j / u]]))
}

/// Non-overlapping average pooling of r x r blocks, the inverse of
/// super-pixel upsampling.
pub fn pool_superpixels(recovered: &Array2<f64>, r: usize) -> Result<Array2<f64>> {
    if r < 1 {
        return Err(Error::invalid("pooling factor must be at least 1"));
    }
    let (h, w) = recovered.dim();
    if h % r != 0 || w % r != 0 {
        return Err(Error::shape(format!("{h}x{w} not divisible by pooling factor {r}")));
    }
    Ok(Array2::from_shape_fn((h / r, w / r), |(bi, bj)| {
        let first = recovered[[bi * r, bj * r]];
        let mut all_equal = true;
        let mut acc = 0.0;
        for i in 0..r {
            for j in 0..r {
                let v = recovered[[bi * r + i, bj * r + j]];
                all_equal &= v == first;
                acc += v;
            }
        }
        // an all-equal block averages to its value exactly, keeping pooling
        // the bit-exact inverse of upsample_superpixel
        if all_equal {
            first
        } else {
            acc / (r * r) as f64
        }
    }))
}

/// Tile g^2 equally-shaped frames into one g x g composite, row-major.
pub fn tile_group(frames: &[Array2<f64>], g: usize) -> Result<Array2<f64>> {
    if g < 1 {
        return Err(Error::invalid("group factor must be at least 1"));
    }
    if frames.len() != g * g {
        return Err(Error::shape(format!("expected {} frames, got {}", g * g, frames.len())));
    }
    let (h, w) = frames[0].dim();
    if frames.iter().any(|f| f.dim() != (h, w)) {
        return Err(Error::shape("group frames differ in shape".to_string()));
    }
    Ok(Array2::from_shape_fn((g * h, g * w), |(i, j)| {
        frames[(i / h) * g + j / w][[i % h, j % w]]
    }))
}

/// Exact inverse of [`tile_group`].
pub fn untile_group(tiled: &Array2<f64>, g: usize) -> Result<Vec<Array2<f64>>> {
    if g < 1 {
        return Err(Error::invalid("group factor must be at least 1"));
    }
    let (gh, gw) = tiled.dim();
    if gh % g != 0 || gw % g != 0 {
        return Err(Error::shape(format!("{gh}x{gw} not divisible by group factor {g}")));
    }
    let (h, w) = (gh / g, gw / g);
    let mut out = Vec::with_capacity(g * g);
    for ti in 0..g {
        for tj in 0..g {
            out.push(Array2::from_shape_fn((h, w), |(i, j)| tiled[[ti * h + i, tj * w + j]]));
        }
    }
    Ok(out)
}

/// Rectangular region of interest.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Roi {
    pub top: usize,
    pub left: usize,
    pub height: usize,
    pub width: usize,
}

/// Crop a region and resize it to `out_side x out_side` with bilinear
/// interpolation. When the region already has the target size the crop is
/// returned untouched.
pub fn extract_roi(estimate: &Array2<f64>, roi: Roi, out_side: usize) -> Result<Array2<f64>> {
    let (h, w) = estimate.dim();
    if roi.height == 0 || roi.width == 0 || out_side == 0 {
        return Err(Error::invalid("empty region of interest"));
    }
    if roi.top + roi.height > h || roi.left + roi.width > w {
        return Err(Error::invalid(format!(
            "roi {}x{}+{}+{} outside estimate {h}x{w}",
            roi.height, roi.width, roi.top, roi.left
        )));
    }
    let crop = Array2::from_shape_fn((roi.height, roi.width), |(i, j)| {
        estimate[[roi.top + i, roi.left + j]]
    });
    if (roi.height, roi.width) == (out_side, out_side) {
        return Ok(crop);
    }
    let scale_y = roi.height as f64 / out_side as f64;
    let scale_x = roi.width as f64 / out_side as f64;
    Ok(Array2::from_shape_fn((out_side, out_side), |(i, j)| {
        let sy = ((i as f64 + 0.5) * scale_y - 0.5).clamp(0.0, (roi.height - 1) as f64);
        let sx = ((j as f64 + 0.5) * scale_x - 0.5).clamp(0.0, (roi.width - 1) as f64);
        let y0 = sy.floor() as usize;
        let x0 = sx.floor() as usize;
        let y1 = (y0 + 1).min(roi.height - 1);
        let x1 = (x0 + 1).min(roi.width - 1);
        let fy = sy - y0 as f64;
        let fx = sx - x0 as f64;
        crop[[y0, x0]] * (1.0 - fy) * (1.0 - fx)
            + crop[[y0, x1]] * (1.0 - fy) * fx
            + crop[[y1, x0]] * fy * (1.0 - fx)
            + crop[[y1, x1]] * fy * fx
    }))
}
