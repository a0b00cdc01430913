//! Audio encryption through a simulated lensless camera.
//!
//! A waveform is compressed into codec latent frames, each frame is shown as
//! a small image and captured through a lensless optical channel whose point
//! spread function is derived from a secret programmable mask pattern. The
//! multiplexed measurements are unintelligible without the mask; decryption
//! runs an inverse-problem solver (Wiener, FISTA, or ADMM) and snaps the
//! recovered latents back onto residual-vector-quantization codes.
//!
//! Modules follow the processing chain:
//!
//! - [`codec`]: framed analysis/synthesis transform plus residual vector
//!   quantization (the latents that become images).
//! - [`optics`]: mask patterns, PSF synthesis, capture simulation, super-pixel
//!   and frame-grouping geometry.
//! - [`solvers`]: Wiener / FISTA / ADMM recovery of screen frames from
//!   measurements.
//! - [`pipeline`]: end-to-end encrypt, decrypt, and authenticate, plus the
//!   ciphertext container format.
//! - [`analysis`]: image and audio quality metrics (PSNR/SSIM/MSE, SI-SDR,
//!   log-mel distance, code-match rates).
//! - [`security`]: key-space arithmetic and brute-force / wrong-key attack
//!   sweeps.
//! - [`synth`] / [`wav`]: deterministic test-signal generation and PCM WAV IO.

pub mod analysis;
pub mod codec;
pub mod error;
pub mod optics;
pub mod pipeline;
pub mod rng;
pub mod security;
pub mod solvers;
pub mod synth;
pub mod wav;

mod fft;

pub use error::{Error, Result};
