use nalgebra::{DMatrix, DVector, SymmetricEigen};

use crate::error::GraphError;
use crate::laplacian::NormalizedLaplacian;

/// Eigenvalues below this are treated as part of the kernel (zero eigenvalue).
const KERNEL_TOL: f64 = 1e-10;
/// Consecutive eigenvalues closer than this are reported as degenerate.
const DEGENERACY_TOL: f64 = 1e-10;
/// Max acceptable eigenpair residual ||L v - lambda v||_2.
const RESIDUAL_TOL: f64 = 1e-6;

/// How the spectral gap is scored.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GapMode {
    /// Largest consecutive difference `lambda_{k+1} - lambda_k`.
    #[default]
    Absolute,
    /// Largest consecutive ratio `(lambda_{k+1} + d) / (lambda_k + d)` with
    /// a small floor `d` guarding the zero eigenvalue.
    Ratio,
}

/// First `k` eigenpairs of a normalized Laplacian, ascending.
#[derive(Debug, Clone)]
pub struct SpectrumReport {
    /// Eigenvalues in ascending order.
    pub eigenvalues: Vec<f64>,
    /// Eigenvectors as columns, matching `eigenvalues`; unit Euclidean norm,
    /// largest-magnitude entry positive.
    pub eigenvectors: DMatrix<f64>,
    /// 1-based index of the largest consecutive eigenvalue difference
    /// (1 when fewer than two eigenvalues were requested).
    pub gap_index: usize,
    /// Largest consecutive difference divided by the runner-up difference;
    /// infinity when there is only one difference.
    pub gap_ratio: f64,
    /// 1-based indices `i` with `lambda_{i+1} - lambda_i < 1e-10`, reported
    /// so that callers can tell when sign patterns are not trustworthy.
    pub degenerate: Vec<usize>,
}

impl SpectrumReport {
    /// Eigenvector columns 2..=1+k, i.e. the first `k` non-constant modes
    /// used for sign clustering.
    pub fn non_constant_modes(&self, k: usize) -> Vec<Vec<f64>> {
        (1..=k)
            .map(|j| self.eigenvectors.column(j).iter().copied().collect())
            .collect()
    }
}

/// Dense reference eigensolve of the normalized Laplacian.
///
/// Works on the symmetric form `I - D^{-1/2} W D^{-1/2}` and maps
/// eigenvectors back through `D^{-1/2}`, which makes every eigenvalue real
/// and the solve unconditionally stable. Within the numerical kernel the
/// basis is canonicalized: the first vector is the all-ones direction and
/// the remaining ones are degree-orthogonalized against it, so component
/// indicator structure survives degeneracy.
pub fn dense_spectrum(l: &NormalizedLaplacian, k: usize) -> Result<SpectrumReport, GraphError> {
    let n = l.node_count();
    if k < 1 || k > n {
        return Err(GraphError::BadModeCount { k, n });
    }
    let sym = l.to_symmetric_dense();
    let eig = SymmetricEigen::try_new(sym, f64::EPSILON, 200 * n.max(16))
        .ok_or(GraphError::EigenNonConvergence { residual: f64::NAN })?;

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));

    let mut eigenvalues = Vec::with_capacity(k);
    let mut vectors: Vec<DVector<f64>> = Vec::with_capacity(k);
    for &idx in order.iter().take(k) {
        eigenvalues.push(eig.eigenvalues[idx]);
        // v = D^{-1/2} u
        let mut v = DVector::zeros(n);
        for i in 0..n {
            v[i] = eig.eigenvectors[(i, idx)] / l.degree(i).sqrt();
        }
        vectors.push(v);
    }

    canonicalize_kernel(l, &eigenvalues, &mut vectors);

    let mut eigenvectors = DMatrix::zeros(n, k);
    for (c, v) in vectors.iter_mut().enumerate() {
        let norm = v.norm();
        *v /= norm;
        // Deterministic sign: largest-magnitude entry positive.
        let mut max_i = 0;
        for i in 1..n {
            if v[i].abs() > v[max_i].abs() {
                max_i = i;
            }
        }
        if v[max_i] < 0.0 {
            *v = -&*v;
        }
        eigenvectors.set_column(c, v);
    }

    let residual = max_residual(l, &eigenvalues, &eigenvectors);
    if !residual.is_finite() || residual > RESIDUAL_TOL {
        return Err(GraphError::EigenNonConvergence { residual });
    }

    let (gap_index, gap_ratio) = if eigenvalues.len() >= 2 {
        let idx = argmax_gap(&eigenvalues, GapMode::Absolute);
        (idx, runner_up_ratio(&eigenvalues, idx))
    } else {
        (1, 0.0)
    };

    let degenerate = eigenvalues
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[1] - w[0] < DEGENERACY_TOL)
        .map(|(i, _)| i + 1)
        .collect();

    Ok(SpectrumReport {
        eigenvalues,
        eigenvectors,
        gap_index,
        gap_ratio,
        degenerate,
    })
}

/// Replace the numerical-kernel basis with the all-ones vector followed by
/// degree-weighted Gram-Schmidt remainders. Degree-orthogonality to the
/// all-ones vector forces each kernel vector to change sign across
/// components, which is what sign clustering needs.
fn canonicalize_kernel(
    l: &NormalizedLaplacian,
    eigenvalues: &[f64],
    vectors: &mut [DVector<f64>],
) {
    let n = l.node_count();
    let kernel_dim = eigenvalues.iter().take_while(|&&e| e.abs() < KERNEL_TOL).count();
    if kernel_dim == 0 {
        return;
    }
    let d_dot = |a: &DVector<f64>, b: &DVector<f64>| -> f64 {
        (0..n).map(|i| l.degree(i) * a[i] * b[i]).sum()
    };
    let mut basis: Vec<DVector<f64>> = vec![DVector::from_element(n, 1.0)];
    for c in 1..kernel_dim.min(vectors.len()) {
        let mut v = vectors[c].clone();
        for b in &basis {
            let coef = d_dot(&v, b) / d_dot(b, b);
            v -= b * coef;
        }
        basis.push(v);
    }
    for (c, b) in basis.into_iter().enumerate() {
        if c < vectors.len() {
            vectors[c] = b;
        }
    }
}

fn max_residual(l: &NormalizedLaplacian, eigenvalues: &[f64], vectors: &DMatrix<f64>) -> f64 {
    let n = l.node_count();
    let mut worst: f64 = 0.0;
    let mut lv = vec![0.0; n];
    for (c, &lambda) in eigenvalues.iter().enumerate() {
        let col: Vec<f64> = vectors.column(c).iter().copied().collect();
        l.mul_vec(&col, &mut lv);
        let res: f64 = lv
            .iter()
            .zip(&col)
            .map(|(&a, &b)| (a - lambda * b).powi(2))
            .sum::<f64>()
            .sqrt();
        worst = worst.max(res);
    }
    worst
}

fn argmax_gap(eigenvalues: &[f64], mode: GapMode) -> usize {
    let mut best = 1;
    let mut best_score = f64::NEG_INFINITY;
    for i in 0..eigenvalues.len() - 1 {
        let score = match mode {
            GapMode::Absolute => eigenvalues[i + 1] - eigenvalues[i],
            GapMode::Ratio => {
                const FLOOR: f64 = 1e-12;
                (eigenvalues[i + 1] + FLOOR) / (eigenvalues[i] + FLOOR)
            }
        };
        // Strict > keeps the smallest index on ties.
        if score > best_score {
            best_score = score;
            best = i + 1;
        }
    }
    best
}

fn runner_up_ratio(eigenvalues: &[f64], gap_index: usize) -> f64 {
    let gap = eigenvalues[gap_index] - eigenvalues[gap_index - 1];
    let mut runner_up: f64 = 0.0;
    for i in 0..eigenvalues.len() - 1 {
        if i + 1 != gap_index {
            runner_up = runner_up.max(eigenvalues[i + 1] - eigenvalues[i]);
        }
    }
    if runner_up <= 0.0 {
        f64::INFINITY
    } else {
        gap / runner_up
    }
}

/// Largest consecutive eigenvalue difference of an ascending list; returns
/// the 1-based index `k` meaning the gap sits between `lambda_k` and
/// `lambda_{k+1}`. Ties break toward smaller `k`.
pub fn detect_spectral_gap(eigenvalues: &[f64]) -> Result<usize, GraphError> {
    detect_spectral_gap_mode(eigenvalues, GapMode::Absolute)
}

/// Gap detection with a selectable scoring mode.
pub fn detect_spectral_gap_mode(
    eigenvalues: &[f64],
    mode: GapMode,
) -> Result<usize, GraphError> {
    if eigenvalues.len() < 3 {
        return Err(GraphError::TooFewEigenvalues(eigenvalues.len()));
    }
    Ok(argmax_gap(eigenvalues, mode))
}
