//! Deterministic synthetic test signals.
//!
//! Three families: multi-sine tones with random fundamentals, linear chirps,
//! and amplitude-modulated noise. Everything is driven by an explicit
//! generator so the same seed always produces the same waveform.

use rand::Rng;
use std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UtteranceKind {
    MultiSine,
    Chirp,
    ModulatedNoise,
}

impl UtteranceKind {
    pub fn cycle(index: usize) -> Self {
        match index % 3 {
            0 => UtteranceKind::MultiSine,
            1 => UtteranceKind::Chirp,
            _ => UtteranceKind::ModulatedNoise,
        }
    }
}

/// Generate one utterance of the given kind and duration.
pub fn utterance(kind: UtteranceKind, duration_secs: f64, sample_rate: u32, rng: &mut impl Rng) -> Vec<f64> {
    let n = (duration_secs * sample_rate as f64).round() as usize;
    let sr = sample_rate as f64;
    match kind {
        UtteranceKind::MultiSine => {
            let fundamental = rng.random_range(100.0..1000.0);
            // up to four harmonics, kept below 3.8 kHz
            let mut partials = vec![(fundamental, 1.0)];
            for k in 2..=4 {
                let f = fundamental * k as f64;
                if f < 3800.0 {
                    partials.push((f, rng.random_range(0.1..0.5)));
                }
            }
            let norm: f64 = partials.iter().map(|(_, a)| a).sum();
            let phases: Vec<f64> = partials.iter().map(|_| rng.random_range(0.0..2.0 * PI)).collect();
            (0..n)
                .map(|i| {
                    let t = i as f64 / sr;
                    partials
                        .iter()
                        .zip(&phases)
                        .map(|(&(f, a), &p)| a * (2.0 * PI * f * t + p).sin())
                        .sum::<f64>()
                        * 0.6
                        / norm
                })
                .collect()
        }
        UtteranceKind::Chirp => {
            let f0 = rng.random_range(150.0..600.0);
            let f1 = rng.random_range(1500.0..3500.0);
            let sweep = (f1 - f0) / duration_secs;
            (0..n)
                .map(|i| {
                    let t = i as f64 / sr;
                    0.6 * (2.0 * PI * (f0 * t + 0.5 * sweep * t * t)).sin()
                })
                .collect()
        }
        UtteranceKind::ModulatedNoise => {
            let mod_rate = rng.random_range(2.0..8.0);
            let phase = rng.random_range(0.0..2.0 * PI);
            (0..n)
                .map(|i| {
                    let t = i as f64 / sr;
                    let envelope = 0.55 + 0.45 * (2.0 * PI * mod_rate * t + phase).sin();
                    let white: f64 = rng.random_range(-1.0..1.0);
                    0.4 * envelope * white
                })
                .collect()
        }
    }
}

/// Random kind and a random duration of 1-3 seconds, as used for dataset
/// synthesis.
pub fn random_utterance(sample_rate: u32, rng: &mut impl Rng) -> Vec<f64> {
    let kind = UtteranceKind::cycle(rng.random_range(0..3));
    let duration = rng.random_range(1.0..3.0);
    utterance(kind, duration, sample_rate, rng)
}
