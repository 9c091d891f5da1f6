use graph_core::{sign_cluster, ClusterAssignment, NormalizedLaplacian};

use crate::config::WaveConfig;
use crate::error::WaveError;
use crate::modes::{extract_modes, ModeEstimate};
use crate::sim::wave_run;

/// Steps needed to resolve the lowest graph frequency: `eta` cycles of
/// `arccos(e^{-1/tau})` plus one sweep across the graph, with unit
/// constants. `tau` is the mixing-time estimate of the random walk on the
/// graph.
pub fn estimate_convergence_time(tau: f64, n: usize, eta: u32) -> usize {
    assert!(tau > 0.0, "mixing time must be positive");
    let theta = (-1.0 / tau).exp().acos();
    (eta as f64 * 2.0 * std::f64::consts::PI / theta).ceil() as usize + n
}

/// Result of a wave clustering run.
#[derive(Debug, Clone)]
pub struct WaveClustering {
    pub assignment: ClusterAssignment,
    /// Oscillatory modes backing the assignment (empty when the split came
    /// entirely from disconnected components).
    pub modes: ModeEstimate,
}

/// End-to-end wave clustering: simulate, extract modes, encode signs.
///
/// The constant mode is skipped. On a disconnected graph the zero
/// eigenvalue is degenerate and its extra kernel directions sit in the DC
/// bin rather than at a resonant frequency; those splits are recovered from
/// the per-component time averages of the trace (components found by local
/// flood fill), and oscillatory modes fill the remaining sign bits.
pub fn cluster_by_wave(
    l: &NormalizedLaplacian,
    cfg: &WaveConfig,
) -> Result<WaveClustering, WaveError> {
    let trace = wave_run(l, cfg)?;
    let components = l.components();
    let n_components = components.iter().copied().max().unwrap_or(0) + 1;

    let kernel_bits = (n_components - 1).min(cfg.k);
    let mut vectors: Vec<Vec<f64>> = Vec::with_capacity(cfg.k);
    if kernel_bits > 0 {
        vectors.extend(kernel_split_vectors(&trace, &components, n_components, kernel_bits));
    }

    let oscillatory = cfg.k - kernel_bits;
    let modes = if oscillatory > 0 {
        let est = extract_modes(&trace, oscillatory)?;
        vectors.extend(est.sign_vectors());
        est
    } else {
        ModeEstimate {
            modes: Vec::new(),
            c: cfg.c,
            t_max: cfg.t_max,
        }
    };

    Ok(WaveClustering {
        assignment: sign_cluster(&vectors),
        modes,
    })
}

/// Sign vectors separating connected components. Each component's nodes
/// share a time-average (the wave never crosses a cut), and those averages
/// are distinct random draws; ranking them yields `bits` threshold vectors
/// whose joint sign pattern distinguishes every component.
fn kernel_split_vectors(
    trace: &crate::sim::WaveTrace,
    components: &[usize],
    n_components: usize,
    bits: usize,
) -> Vec<Vec<f64>> {
    let n = components.len();
    let t_max = trace.len();
    let mut sum = vec![0.0f64; n_components];
    let mut count = vec![0usize; n_components];
    for i in 0..n {
        let series = trace.node_series(i);
        sum[components[i]] += series.iter().sum::<f64>() / t_max as f64;
        count[components[i]] += 1;
    }
    let mut order: Vec<usize> = (0..n_components).collect();
    order.sort_by(|&a, &b| {
        let ma = sum[a] / count[a] as f64;
        let mb = sum[b] / count[b] as f64;
        ma.total_cmp(&mb)
    });
    let mut rank = vec![0usize; n_components];
    for (r, &c) in order.iter().enumerate() {
        rank[c] = r;
    }
    (1..=bits)
        .map(|threshold| {
            (0..n)
                .map(|i| if rank[components[i]] >= threshold { 1.0 } else { -1.0 })
                .collect()
        })
        .collect()
}

/// Pick a trace length for the requested mode count by probing with short
/// runs: once the lowest resonance is visible, its implied eigenvalue gives
/// a mixing-time estimate `tau = 1/lambda_2` and the convergence-time bound
/// sets `t_max` (rounded up to a power of two for the FFT).
pub fn auto_config(
    l: &NormalizedLaplacian,
    c: f64,
    k: usize,
    eta: u32,
    seed: u64,
) -> Result<WaveConfig, WaveError> {
    const PROBE_START: usize = 256;
    const PROBE_LIMIT: usize = 1 << 17;

    let components = l.components();
    let n_components = components.iter().copied().max().unwrap_or(0) + 1;
    let oscillatory = k.saturating_sub(n_components - 1);
    if oscillatory == 0 {
        return WaveConfig::with_eta(c, PROBE_START, k, eta, seed);
    }

    let mut t_probe = PROBE_START;
    loop {
        let cfg = WaveConfig::with_eta(c, t_probe, k, eta, seed)?;
        let trace = wave_run(l, &cfg)?;
        match extract_modes(&trace, oscillatory) {
            Ok(est) => {
                let lambda_2 = est.modes[0].lambda.max(1e-12);
                let tau = 1.0 / lambda_2;
                let bound = estimate_convergence_time(tau, l.node_count(), eta);
                // The bound is speed-agnostic; additionally make sure eta
                // cycles of the frequency actually measured fit the window.
                let cycles = (eta as f64 * 2.0 * std::f64::consts::PI
                    / est.modes[0].theta.max(1e-9))
                .ceil() as usize;
                let t_max = bound.max(cycles).max(PROBE_START).next_power_of_two();
                return WaveConfig::with_eta(c, t_max, k, eta, seed);
            }
            Err(WaveError::InsufficientResolution { .. }) if t_probe < PROBE_LIMIT => {
                t_probe *= 4;
            }
            Err(e) => return Err(e),
        }
    }
}
