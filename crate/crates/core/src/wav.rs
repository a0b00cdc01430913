//! Mono 16-bit PCM WAV reading and writing.

use crate::error::{Error, Result};
use std::fs;
use std::io::Write;
use std::path::Path;

/// Read a mono 16-bit PCM WAV file. Returns samples scaled to `[-1, 1]`
/// and the sample rate.
pub fn read_wav(path: impl AsRef<Path>) -> Result<(Vec<f64>, u32)> {
    let bytes = fs::read(path)?;
    parse_wav(&bytes)
}

pub fn parse_wav(bytes: &[u8]) -> Result<(Vec<f64>, u32)> {
    if bytes.len() < 12 || &bytes[0..4] != b"RIFF" || &bytes[8..12] != b"WAVE" {
        return Err(Error::format("not a RIFF/WAVE file"));
    }
    let mut pos = 12;
    let mut sample_rate = None;
    let mut data: Option<&[u8]> = None;
    while pos + 8 <= bytes.len() {
        let id = &bytes[pos..pos + 4];
        let len = u32::from_le_bytes(bytes[pos + 4..pos + 8].try_into().unwrap()) as usize;
        let body_end = pos + 8 + len;
        if body_end > bytes.len() {
            return Err(Error::format("truncated WAV chunk"));
        }
        let body = &bytes[pos + 8..body_end];
        match id {
            b"fmt " => {
                if len < 16 {
                    return Err(Error::format("short fmt chunk"));
                }
                let format = u16::from_le_bytes(body[0..2].try_into().unwrap());
                let channels = u16::from_le_bytes(body[2..4].try_into().unwrap());
                let rate = u32::from_le_bytes(body[4..8].try_into().unwrap());
                let bits = u16::from_le_bytes(body[14..16].try_into().unwrap());
                if format != 1 || bits != 16 {
                    return Err(Error::format(format!(
                        "unsupported WAV encoding: format {format}, {bits} bits (need PCM 16-bit)"
                    )));
                }
                if channels != 1 {
                    return Err(Error::format(format!("expected mono WAV, got {channels} channels")));
                }
                sample_rate = Some(rate);
            }
            b"data" => data = Some(body),
            _ => {}
        }
        // chunks are word-aligned
        pos = body_end + (len & 1);
    }
    let rate = sample_rate.ok_or_else(|| Error::format("missing fmt chunk"))?;
    let data = data.ok_or_else(|| Error::format("missing data chunk"))?;
    if data.len() % 2 != 0 {
        return Err(Error::format("odd data chunk length"));
    }
    let samples = data
        .chunks_exact(2)
        .map(|c| i16::from_le_bytes([c[0], c[1]]) as f64 / 32768.0)
        .collect();
    Ok((samples, rate))
}

/// Write a mono 16-bit PCM WAV file. Samples are clamped to `[-1, 1]`.
pub fn write_wav(path: impl AsRef<Path>, samples: &[f64], sample_rate: u32) -> Result<()> {
    let bytes = encode_wav(samples, sample_rate);
    let mut f = fs::File::create(path)?;
    f.write_all(&bytes)?;
    Ok(())
}

pub fn encode_wav(samples: &[f64], sample_rate: u32) -> Vec<u8> {
    let data_len = samples.len() * 2;
    let mut out = Vec::with_capacity(44 + data_len);
    out.extend_from_slice(b"RIFF");
    out.extend_from_slice(&((36 + data_len) as u32).to_le_bytes());
    out.extend_from_slice(b"WAVE");
    out.extend_from_slice(b"fmt ");
    out.extend_from_slice(&16u32.to_le_bytes());
    out.extend_from_slice(&1u16.to_le_bytes()); // PCM
    out.extend_from_slice(&1u16.to_le_bytes()); // mono
    out.extend_from_slice(&sample_rate.to_le_bytes());
    out.extend_from_slice(&(sample_rate * 2).to_le_bytes()); // byte rate
    out.extend_from_slice(&2u16.to_le_bytes()); // block align
    out.extend_from_slice(&16u16.to_le_bytes()); // bits per sample
    out.extend_from_slice(b"data");
    out.extend_from_slice(&(data_len as u32).to_le_bytes());
    for &s in samples {
        let v = (s * 32768.0).round().clamp(-32768.0, 32767.0) as i16;
        out.extend_from_slice(&v.to_le_bytes());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_preserves_samples() {
        let samples: Vec<f64> = (0..100).map(|i| ((i as f64) * 0.07).sin() * 0.8).collect();
        let bytes = encode_wav(&samples, 16000);
        let (back, rate) = parse_wav(&bytes).unwrap();
        assert_eq!(rate, 16000);
        assert_eq!(back.len(), samples.len());
        for (a, b) in samples.iter().zip(&back) {
            assert!((a - b).abs() < 1.0 / 32000.0);
        }
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_wav(b"not a wav at all").is_err());
    }

    #[test]
    fn rejects_truncated_data_chunk() {
        let mut bytes = encode_wav(&[0.1; 50], 16000);
        bytes.truncate(60);
        assert!(parse_wav(&bytes).is_err());
    }
}
