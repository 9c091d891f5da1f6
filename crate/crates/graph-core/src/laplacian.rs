use nalgebra::DMatrix;

use crate::error::GraphError;
use crate::graph::WeightedGraph;

/// Normalized (random-walk) graph Laplacian:
/// `L_ii = 1`, `L_ij = -W_ij / deg_i` on edges, 0 otherwise.
///
/// Rows sum to zero, the spectrum is real and contained in `[0, 2]`, and the
/// all-ones vector spans the kernel direction associated with each connected
/// component. Stored as adjacency lists so that a matrix-vector product at
/// node `i` touches only the neighbors of `i`.
#[derive(Debug, Clone)]
pub struct NormalizedLaplacian {
    n: usize,
    degrees: Vec<f64>,
    /// Off-diagonal entries per row: (j, L_ij) with L_ij = -W_ij / deg_i.
    rows: Vec<Vec<(usize, f64)>>,
}

impl NormalizedLaplacian {
    pub fn from_graph(g: &WeightedGraph) -> Result<Self, GraphError> {
        let n = g.node_count();
        let mut degrees = Vec::with_capacity(n);
        let mut rows = Vec::with_capacity(n);
        for i in 0..n {
            let deg = g.degree(i);
            if deg <= 0.0 {
                return Err(GraphError::DisconnectedNode(i));
            }
            degrees.push(deg);
            rows.push(
                g.neighbors(i)
                    .iter()
                    .map(|&(j, w)| (j, -w / deg))
                    .collect(),
            );
        }
        Ok(Self { n, degrees, rows })
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn degree(&self, i: usize) -> f64 {
        self.degrees[i]
    }

    /// Entry L_ij.
    pub fn entry(&self, i: usize, j: usize) -> f64 {
        if i == j {
            return 1.0;
        }
        self.rows[i]
            .iter()
            .find(|&&(col, _)| col == j)
            .map_or(0.0, |&(_, v)| v)
    }

    /// Off-diagonal entries of row `i` as (column, value).
    pub fn off_diagonal(&self, i: usize) -> &[(usize, f64)] {
        &self.rows[i]
    }

    /// y = L x, touching only stored entries.
    pub fn mul_vec(&self, x: &[f64], y: &mut [f64]) {
        debug_assert_eq!(x.len(), self.n);
        debug_assert_eq!(y.len(), self.n);
        for i in 0..self.n {
            let mut acc = x[i];
            for &(j, v) in &self.rows[i] {
                acc += v * x[j];
            }
            y[i] = acc;
        }
    }

    /// Connected-component id per node, from the stored sparsity pattern.
    pub fn components(&self) -> Vec<usize> {
        let mut comp = vec![usize::MAX; self.n];
        let mut next = 0;
        let mut queue = std::collections::VecDeque::new();
        for start in 0..self.n {
            if comp[start] != usize::MAX {
                continue;
            }
            comp[start] = next;
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                for &(v, _) in &self.rows[u] {
                    if comp[v] == usize::MAX {
                        comp[v] = next;
                        queue.push_back(v);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    /// Dense random-walk Laplacian.
    pub fn to_dense(&self) -> DMatrix<f64> {
        let mut m = DMatrix::identity(self.n, self.n);
        for i in 0..self.n {
            for &(j, v) in &self.rows[i] {
                m[(i, j)] = v;
            }
        }
        m
    }

    /// Dense symmetric normalized Laplacian `I - D^{-1/2} W D^{-1/2}`.
    ///
    /// Similar to the random-walk form via `L = D^{-1/2} L_sym D^{1/2}`, so
    /// both share eigenvalues; eigenvectors map as `v = D^{-1/2} u`.
    pub fn to_symmetric_dense(&self) -> DMatrix<f64> {
        let mut m = DMatrix::identity(self.n, self.n);
        for i in 0..self.n {
            let di = self.degrees[i].sqrt();
            for &(j, v) in &self.rows[i] {
                // v = -W_ij / deg_i, so -W_ij / sqrt(deg_i deg_j) = v * sqrt(deg_i/deg_j)
                m[(i, j)] = v * di / self.degrees[j].sqrt();
            }
        }
        // Symmetrize to kill roundoff asymmetry from the two division orders.
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                let avg = 0.5 * (m[(i, j)] + m[(j, i)]);
                m[(i, j)] = avg;
                m[(j, i)] = avg;
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use nalgebra::dmatrix;

    #[test]
    fn two_node_unit_weight() {
        let g = WeightedGraph::from_edges(2, &[(0, 1, 1.0)]).unwrap();
        let l = NormalizedLaplacian::from_graph(&g).unwrap();
        assert_eq!(l.to_dense(), dmatrix![1.0, -1.0; -1.0, 1.0]);
    }

    #[test]
    fn uniform_scale_cancels() {
        let g = WeightedGraph::from_edges(2, &[(0, 1, 7.0)]).unwrap();
        let l = NormalizedLaplacian::from_graph(&g).unwrap();
        assert_eq!(l.to_dense(), dmatrix![1.0, -1.0; -1.0, 1.0]);
    }

    #[test]
    fn rows_sum_to_zero() {
        let g = WeightedGraph::from_edges(
            4,
            &[(0, 1, 0.5), (1, 2, 2.0), (2, 3, 0.1), (0, 3, 1.0)],
        )
        .unwrap();
        let l = NormalizedLaplacian::from_graph(&g).unwrap();
        let dense = l.to_dense();
        for i in 0..4 {
            assert!(dense.row(i).sum().abs() <= 1e-12);
        }
    }

    #[test]
    fn mul_vec_matches_dense() {
        let g = WeightedGraph::from_edges(3, &[(0, 1, 1.0), (1, 2, 3.0)]).unwrap();
        let l = NormalizedLaplacian::from_graph(&g).unwrap();
        let x = [1.0, -2.0, 0.5];
        let mut y = [0.0; 3];
        l.mul_vec(&x, &mut y);
        let dense = l.to_dense() * nalgebra::DVector::from_row_slice(&x);
        for i in 0..3 {
            assert!((y[i] - dense[i]).abs() < 1e-14);
        }
    }
}
