use thiserror::Error;

/// Errors from graph construction and spectral computation.
#[derive(Debug, Error)]
pub enum GraphError {
    #[error("graph must have at least 2 nodes, got {0}")]
    TooSmall(usize),
    #[error("weight matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("asymmetric weights: |W[{i}][{j}] - W[{j}][{i}]| = {delta:e} exceeds 1e-9")]
    Asymmetric { i: usize, j: usize, delta: f64 },
    #[error("negative weight W[{i}][{j}] = {w}")]
    NegativeWeight { i: usize, j: usize, w: f64 },
    #[error("nonzero diagonal entry W[{i}][{i}] = {w}")]
    NonzeroDiagonal { i: usize, w: f64 },
    #[error("non-finite weight at ({i}, {j})")]
    NonFiniteWeight { i: usize, j: usize },
    #[error("disconnected node {0}: no incident edge with positive weight")]
    DisconnectedNode(usize),
    #[error("eigensolver did not converge (max residual norm {residual:e})")]
    EigenNonConvergence { residual: f64 },
    #[error("requested {k} eigenpairs from a graph with {n} nodes")]
    BadModeCount { k: usize, n: usize },
    #[error("need at least 3 eigenvalues for gap detection, got {0}")]
    TooFewEigenvalues(usize),
    #[error("edge ({i}, {j}) out of range for {n} nodes")]
    EdgeOutOfRange { i: usize, j: usize, n: usize },
    #[error("duplicate edge ({i}, {j})")]
    DuplicateEdge { i: usize, j: usize },
    #[error("self loop on node {0}")]
    SelfLoop(usize),
    #[error("invalid graph file: {0}")]
    ParseError(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
