//! Graph clustering by simulating the discrete wave equation on a graph.
//!
//! Instead of an eigensolve, each node iterates the second-order update
//! `u(t) = 2 u(t-1) - u(t-2) - c^2 L u(t-1)` using only neighbor values,
//! then reads the graph's resonant frequencies off its own FFT. Each
//! frequency maps to a Laplacian eigenvalue through
//! `lambda = 2 (1 - cos theta) / c^2`, and the per-node signed amplitudes
//! reproduce the eigenvector sign patterns used for spectral clustering.
//! The update is stable exactly when `c <= sqrt(2)`.

pub mod cluster;
pub mod config;
pub mod error;
pub mod modes;
pub mod sim;

pub use cluster::{auto_config, cluster_by_wave, estimate_convergence_time};
pub use config::WaveConfig;
pub use error::WaveError;
pub use modes::{extract_modes, mean_magnitude_spectrum, Mode, ModeEstimate};
pub use sim::{wave_run, wave_run_from, WaveTrace};
