use thiserror::Error;

/// Errors from wave simulation and mode extraction.
#[derive(Debug, Error)]
pub enum WaveError {
    #[error("invalid wave config: {0}")]
    InvalidConfig(String),
    #[error("wave instability: node value diverged at step {step}")]
    Unstable { step: usize },
    #[error(
        "insufficient resolution: found {found} usable spectral peaks, need {requested}; \
         increase t_max (currently {t_max})"
    )]
    InsufficientResolution {
        found: usize,
        requested: usize,
        t_max: usize,
    },
    #[error(transparent)]
    Graph(#[from] graph_core::GraphError),
}
