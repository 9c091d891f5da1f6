use rustfft::num_complex::Complex;
use rustfft::FftPlanner;

use crate::error::WaveError;
use crate::sim::WaveTrace;

/// Peaks must rise this many times above the median spectral magnitude.
const PEAK_PROMINENCE: f64 = 5.0;
/// Slack applied when discarding peaks that map above the Laplacian
/// spectral range (accounts for one bin of frequency error).
const LAMBDA_SLACK: f64 = 0.05;

/// One resonant mode: shared frequency, implied eigenvalue, and the
/// per-node signed amplitudes carrying the eigenvector sign pattern.
#[derive(Debug, Clone)]
pub struct Mode {
    /// Angular frequency in radians per step.
    pub theta: f64,
    /// Implied Laplacian eigenvalue `2 (1 - cos theta) / c^2`.
    pub lambda: f64,
    /// Signed amplitude per node, phase-aligned to the strongest node.
    pub amplitudes: Vec<f64>,
}

/// Modes extracted from a wave trace, lowest frequency first.
#[derive(Debug, Clone)]
pub struct ModeEstimate {
    pub modes: Vec<Mode>,
    /// Wave speed the trace was produced with.
    pub c: f64,
    /// Trace length (FFT window).
    pub t_max: usize,
}

impl ModeEstimate {
    /// Sign vectors for clustering, one per mode.
    pub fn sign_vectors(&self) -> Vec<Vec<f64>> {
        self.modes.iter().map(|m| m.amplitudes.clone()).collect()
    }
}

/// Magnitude spectrum averaged over all nodes; index `f` corresponds to
/// angular frequency `2 pi f / t_max`.
///
/// The series are Hann-windowed before the FFT: a rectangular window leaks
/// enough energy out of the dense mid-spectrum band of a typical graph to
/// bury isolated low-frequency resonances, which are exactly the ones that
/// carry cluster information.
pub fn mean_magnitude_spectrum(trace: &WaveTrace) -> Vec<f64> {
    let n = trace.node_count();
    let t_max = trace.len();
    let window: Vec<f64> = (0..t_max)
        .map(|t| {
            let x = std::f64::consts::PI * t as f64 / t_max as f64;
            let s = x.sin();
            s * s
        })
        .collect();
    let mut planner = FftPlanner::new();
    let fft = planner.plan_fft_forward(t_max);
    let mut mean = vec![0.0f64; t_max / 2 + 1];
    let mut buf: Vec<Complex<f64>> = Vec::with_capacity(t_max);
    for i in 0..n {
        buf.clear();
        buf.extend(
            trace
                .node_series(i)
                .iter()
                .zip(&window)
                .map(|(&v, &w)| Complex::new(v * w, 0.0)),
        );
        fft.process(&mut buf);
        for (f, slot) in mean.iter_mut().enumerate() {
            *slot += buf[f].norm();
        }
    }
    for slot in &mut mean {
        *slot /= n as f64;
    }
    mean
}

/// Extract the `k` lowest resonant modes of a wave trace.
///
/// Frequencies are the `k` smallest non-DC local maxima of the node-averaged
/// magnitude spectrum (prominence at least 5x the median magnitude), refined
/// by parabolic interpolation. Per-node signed amplitudes come from a
/// least-squares projection of each mean-removed node series onto
/// `{cos(theta t), sin(theta t)}`, with one global phase per mode fixed by
/// the maximum-amplitude node; the half-step phase offset introduced by the
/// `u(-1) = u(0)` start cancels in that projection.
pub fn extract_modes(trace: &WaveTrace, k: usize) -> Result<ModeEstimate, WaveError> {
    assert!(k >= 1, "k must be at least 1");
    let t_max = trace.len();
    let c = trace.wave_speed();
    let spectrum = mean_magnitude_spectrum(trace);
    // Roundoff guard: bins carrying less than a tiny fraction of the trace
    // scale can never be real resonances.
    let abs_floor = 1e-8 * trace.max_abs() * t_max as f64;
    let peaks = detect_peaks(&spectrum, c, t_max, abs_floor);

    if peaks.len() < k {
        return Err(WaveError::InsufficientResolution {
            found: peaks.len(),
            requested: k,
            t_max,
        });
    }

    // Resolution gate: the lowest kept frequency must complete eta cycles.
    let eta = trace.eta() as f64;
    let theta_min = peaks[0];
    if theta_min * t_max as f64 / (2.0 * std::f64::consts::PI) < eta {
        return Err(WaveError::InsufficientResolution {
            found: 0,
            requested: k,
            t_max,
        });
    }

    let modes = peaks
        .into_iter()
        .take(k)
        .map(|theta| project_mode(trace, theta, c))
        .collect();
    Ok(ModeEstimate { modes, c, t_max })
}

/// Local maxima of the magnitude spectrum, as refined angular frequencies in
/// ascending order. The DC bin and its immediate neighbor are excluded; any
/// peak mapping far above the Laplacian range `[0, 2]` is dropped as noise.
fn detect_peaks(spectrum: &[f64], c: f64, t_max: usize, abs_floor: f64) -> Vec<f64> {
    let half = spectrum.len() - 1;
    let mut sorted: Vec<f64> = spectrum[1..].to_vec();
    sorted.sort_by(f64::total_cmp);
    let median = sorted[sorted.len() / 2];
    let floor = (PEAK_PROMINENCE * median).max(abs_floor);

    let bin_width = 2.0 * std::f64::consts::PI / t_max as f64;
    let mut peaks = Vec::new();
    for f in 2..=half {
        let left = spectrum[f - 1];
        let here = spectrum[f];
        let right = if f + 1 <= half { spectrum[f + 1] } else { 0.0 };
        if here > left && here >= right && here >= floor {
            // Parabolic refinement on the magnitude spectrum.
            let denom = left - 2.0 * here + right;
            let delta = if denom.abs() > 1e-300 {
                (0.5 * (left - right) / denom).clamp(-0.5, 0.5)
            } else {
                0.0
            };
            let theta = (f as f64 + delta) * bin_width;
            let lambda = 2.0 * (1.0 - theta.cos()) / (c * c);
            if lambda <= 2.0 + LAMBDA_SLACK + 2.0 * bin_width / (c * c) {
                peaks.push(theta);
            }
        }
    }
    peaks
}

fn project_mode(trace: &WaveTrace, theta: f64, c: f64) -> Mode {
    let n = trace.node_count();
    let t_max = trace.len();

    // Hann-weighted least squares on {1, cos(theta t), sin(theta t)}. The
    // taper pushes crosstalk from other resonances down to sidelobe level,
    // which matters for nodes whose amplitude in this mode is small; the
    // constant regressor absorbs the DC component exactly.
    let weight: Vec<f64> = (0..t_max)
        .map(|t| {
            let x = std::f64::consts::PI * t as f64 / t_max as f64;
            let s = x.sin();
            s * s
        })
        .collect();
    let cos_t: Vec<f64> = (0..t_max).map(|t| (theta * t as f64).cos()).collect();
    let sin_t: Vec<f64> = (0..t_max).map(|t| (theta * t as f64).sin()).collect();

    let mut gram = [[0.0f64; 3]; 3];
    for t in 0..t_max {
        let w = weight[t];
        let basis = [1.0, cos_t[t], sin_t[t]];
        for r in 0..3 {
            for col in r..3 {
                gram[r][col] += w * basis[r] * basis[col];
            }
        }
    }
    for r in 1..3 {
        for col in 0..r {
            gram[r][col] = gram[col][r];
        }
    }
    let ginv = invert3(&gram);

    let mut coeffs: Vec<(f64, f64)> = Vec::with_capacity(n);
    for i in 0..n {
        let series = trace.node_series(i);
        let mut rhs = [0.0f64; 3];
        for t in 0..t_max {
            let wv = weight[t] * series[t];
            rhs[0] += wv;
            rhs[1] += wv * cos_t[t];
            rhs[2] += wv * sin_t[t];
        }
        let a = ginv[1][0] * rhs[0] + ginv[1][1] * rhs[1] + ginv[1][2] * rhs[2];
        let b = ginv[2][0] * rhs[0] + ginv[2][1] * rhs[1] + ginv[2][2] * rhs[2];
        coeffs.push((a, b));
    }

    // Align all nodes to the phase of the strongest response.
    let (mut best_norm, mut best) = (0.0f64, (1.0f64, 0.0f64));
    for &(a, b) in &coeffs {
        let norm = a * a + b * b;
        if norm > best_norm {
            best_norm = norm;
            best = (a, b);
        }
    }
    let phase_norm = best_norm.sqrt().max(f64::MIN_POSITIVE);
    let (pa, pb) = (best.0 / phase_norm, best.1 / phase_norm);
    let amplitudes = coeffs.iter().map(|&(a, b)| a * pa + b * pb).collect();

    Mode {
        theta,
        lambda: 2.0 * (1.0 - theta.cos()) / (c * c),
        amplitudes,
    }
}

fn invert3(m: &[[f64; 3]; 3]) -> [[f64; 3]; 3] {
    let det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    assert!(det.abs() > 1e-300, "singular projection Gram matrix");
    let inv_det = 1.0 / det;
    let mut out = [[0.0f64; 3]; 3];
    for r in 0..3 {
        for c in 0..3 {
            let r1 = (r + 1) % 3;
            let r2 = (r + 2) % 3;
            let c1 = (c + 1) % 3;
            let c2 = (c + 2) % 3;
            // Transposed cofactor.
            out[c][r] = (m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1]) * inv_det;
        }
    }
    out
}
