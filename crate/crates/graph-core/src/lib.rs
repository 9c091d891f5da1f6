//! Weighted interaction graphs and their spectral machinery.
//!
//! This crate builds symmetric weighted graphs (typically from time-averaged
//! Jacobians of a networked ODE system), forms the normalized graph
//! Laplacian, computes dense reference spectra, detects spectral gaps, and
//! assigns clusters from eigenvector sign patterns.
//!
//! The normalized Laplacian used throughout is the random-walk form
//! `L_ii = 1`, `L_ij = -W_ij / deg_i` on edges, which has real spectrum in
//! `[0, 2]` and kernel spanned by connected-component indicators.

pub mod cluster;
pub mod error;
pub mod gen;
pub mod graph;
pub mod io;
pub mod laplacian;
pub mod spectrum;

pub use cluster::{best_bijection_agreement, partitions_equal, sign_cluster, ClusterAssignment};
pub use error::GraphError;
pub use graph::{similarity_from_jacobian, WeightedGraph};
pub use laplacian::NormalizedLaplacian;
pub use spectrum::{dense_spectrum, detect_spectral_gap, GapMode, SpectrumReport};
