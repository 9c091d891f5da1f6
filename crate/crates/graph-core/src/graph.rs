use nalgebra::DMatrix;

use crate::error::GraphError;

/// Tolerance for rejecting asymmetric input weight matrices.
const SYMMETRY_TOL: f64 = 1e-9;

/// Symmetric nonnegative weighted graph on `n` nodes.
///
/// `W_ij = 0` iff there is no edge between `i` and `j`. Construction
/// enforces symmetry, a zero diagonal, and that every node has at least one
/// incident edge with positive weight. Immutable after construction.
#[derive(Debug, Clone)]
pub struct WeightedGraph {
    n: usize,
    weights: DMatrix<f64>,
    /// Neighbor lists (j, W_ij) per node, in ascending j order.
    adj: Vec<Vec<(usize, f64)>>,
}

impl WeightedGraph {
    /// Build from a dense weight matrix. Rejects asymmetric matrices
    /// (max deviation above 1e-9), negative or non-finite weights, nonzero
    /// diagonals, and isolated nodes.
    pub fn from_weights(weights: DMatrix<f64>) -> Result<Self, GraphError> {
        let (rows, cols) = weights.shape();
        if rows != cols {
            return Err(GraphError::NotSquare { rows, cols });
        }
        let n = rows;
        if n < 2 {
            return Err(GraphError::TooSmall(n));
        }
        for i in 0..n {
            for j in 0..n {
                let w = weights[(i, j)];
                if !w.is_finite() {
                    return Err(GraphError::NonFiniteWeight { i, j });
                }
                if w < 0.0 {
                    return Err(GraphError::NegativeWeight { i, j, w });
                }
            }
            let d = weights[(i, i)];
            if d != 0.0 {
                return Err(GraphError::NonzeroDiagonal { i, w: d });
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                let delta = (weights[(i, j)] - weights[(j, i)]).abs();
                if delta > SYMMETRY_TOL {
                    return Err(GraphError::Asymmetric { i, j, delta });
                }
            }
        }
        let mut adj = vec![Vec::new(); n];
        for i in 0..n {
            for j in 0..n {
                let w = weights[(i, j)];
                if w > 0.0 {
                    adj[i].push((j, w));
                }
            }
            if adj[i].is_empty() {
                return Err(GraphError::DisconnectedNode(i));
            }
        }
        Ok(Self { n, weights, adj })
    }

    /// Build from an undirected edge list (each edge listed once).
    pub fn from_edges(n: usize, edges: &[(usize, usize, f64)]) -> Result<Self, GraphError> {
        if n < 2 {
            return Err(GraphError::TooSmall(n));
        }
        let mut weights = DMatrix::zeros(n, n);
        for &(i, j, w) in edges {
            if i >= n || j >= n {
                return Err(GraphError::EdgeOutOfRange { i, j, n });
            }
            if i == j {
                return Err(GraphError::SelfLoop(i));
            }
            if weights[(i, j)] != 0.0 {
                return Err(GraphError::DuplicateEdge { i, j });
            }
            weights[(i, j)] = w;
            weights[(j, i)] = w;
        }
        Self::from_weights(weights)
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn weight(&self, i: usize, j: usize) -> f64 {
        self.weights[(i, j)]
    }

    pub fn weights(&self) -> &DMatrix<f64> {
        &self.weights
    }

    /// Neighbors of `i` with their edge weights.
    pub fn neighbors(&self, i: usize) -> &[(usize, f64)] {
        &self.adj[i]
    }

    /// Weighted degree of node `i`.
    pub fn degree(&self, i: usize) -> f64 {
        self.adj[i].iter().map(|&(_, w)| w).sum()
    }

    /// Number of undirected edges.
    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Connected components via breadth-first search; returns the component
    /// id of each node, ids in first-visit order.
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
                for &(v, _) in &self.adj[u] {
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
}

/// Coupling-strength graph from a (time-averaged) Jacobian:
/// `W_ij = (|J_ij| + |J_ji|) / 2` for `i != j`, `W_ii = 0`.
///
/// The input need not be symmetric; the formula symmetrizes it. Fails with
/// [`GraphError::DisconnectedNode`] if some state has no coupling to any
/// other state.
pub fn similarity_from_jacobian(jbar: &DMatrix<f64>) -> Result<WeightedGraph, GraphError> {
    let (rows, cols) = jbar.shape();
    if rows != cols {
        return Err(GraphError::NotSquare { rows, cols });
    }
    let n = rows;
    if n < 2 {
        return Err(GraphError::TooSmall(n));
    }
    let mut weights = DMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            if i != j {
                let w = 0.5 * (jbar[(i, j)].abs() + jbar[(j, i)].abs());
                if !w.is_finite() {
                    return Err(GraphError::NonFiniteWeight { i, j });
                }
                weights[(i, j)] = w;
            }
        }
    }
    WeightedGraph::from_weights(weights)
}

#[cfg(test)]
mod tests {
    use super::*;
    use nalgebra::dmatrix;

    #[test]
    fn similarity_direct_arithmetic() {
        let jbar = dmatrix![-1.0, 2.0; 0.5, -1.0];
        let g = similarity_from_jacobian(&jbar).unwrap();
        assert_eq!(g.weight(0, 1), 1.25);
        assert_eq!(g.weight(1, 0), 1.25);
        assert_eq!(g.weight(0, 0), 0.0);
    }

    #[test]
    fn similarity_antisymmetric_off_diagonal() {
        for a in [0.3, -2.0, 7.5] {
            let jbar = dmatrix![0.0, a; -a, 0.0];
            let g = similarity_from_jacobian(&jbar).unwrap();
            assert_eq!(g.weight(0, 1), a.abs());
        }
    }

    #[test]
    fn similarity_kuramoto_synchronized_state() {
        // Phase-oscillator Jacobian at x = 0: off-diagonal entries are the
        // coupling weights themselves, so W = (K + K^T) / 2.
        let k = dmatrix![
            0.0, 1.0, 0.0, 0.2;
            1.0, 0.0, 0.05, 0.0;
            0.0, 0.05, 0.0, 1.0;
            0.2, 0.0, 1.0, 0.0
        ];
        let mut jbar = k.clone();
        for i in 0..4 {
            jbar[(i, i)] = -k.row(i).sum();
        }
        let g = similarity_from_jacobian(&jbar).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                let expect = if i == j {
                    0.0
                } else {
                    0.5 * (k[(i, j)] + k[(j, i)])
                };
                assert!((g.weight(i, j) - expect).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn similarity_rejects_disconnected_node() {
        // State 2 couples to nothing.
        let jbar = dmatrix![
            -1.0, 2.0, 0.0;
            0.5, -1.0, 0.0;
            0.0, 0.0, -3.0
        ];
        let err = similarity_from_jacobian(&jbar).unwrap_err();
        assert!(matches!(err, GraphError::DisconnectedNode(2)));
    }

    #[test]
    fn from_weights_rejects_asymmetry() {
        let w = dmatrix![0.0, 1.0; 1.0 + 1e-6, 0.0];
        assert!(matches!(
            WeightedGraph::from_weights(w),
            Err(GraphError::Asymmetric { .. })
        ));
        // Deviation within 1e-9 is accepted.
        let w = dmatrix![0.0, 1.0; 1.0 + 1e-12, 0.0];
        assert!(WeightedGraph::from_weights(w).is_ok());
    }

    #[test]
    fn from_weights_rejects_bad_entries() {
        let w = dmatrix![0.0, -1.0; -1.0, 0.0];
        assert!(matches!(
            WeightedGraph::from_weights(w),
            Err(GraphError::NegativeWeight { .. })
        ));
        let w = dmatrix![0.5, 1.0; 1.0, 0.0];
        assert!(matches!(
            WeightedGraph::from_weights(w),
            Err(GraphError::NonzeroDiagonal { .. })
        ));
        let w = dmatrix![0.0, f64::NAN; f64::NAN, 0.0];
        assert!(matches!(
            WeightedGraph::from_weights(w),
            Err(GraphError::NonFiniteWeight { .. })
        ));
    }

    #[test]
    fn from_edges_validates() {
        let g = WeightedGraph::from_edges(3, &[(0, 1, 1.0), (1, 2, 2.0)]).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.degree(1), 3.0);
        assert!(matches!(
            WeightedGraph::from_edges(3, &[(0, 1, 1.0)]),
            Err(GraphError::DisconnectedNode(2))
        ));
        assert!(matches!(
            WeightedGraph::from_edges(2, &[(0, 0, 1.0)]),
            Err(GraphError::SelfLoop(0))
        ));
        assert!(matches!(
            WeightedGraph::from_edges(2, &[(0, 1, 1.0), (1, 0, 1.0)]),
            Err(GraphError::DuplicateEdge { .. })
        ));
        assert!(matches!(
            WeightedGraph::from_edges(2, &[(0, 3, 1.0)]),
            Err(GraphError::EdgeOutOfRange { .. })
        ));
    }

    #[test]
    fn components_found() {
        let g =
            WeightedGraph::from_edges(5, &[(0, 1, 1.0), (1, 2, 1.0), (3, 4, 1.0)]).unwrap();
        assert_eq!(g.components(), vec![0, 0, 0, 1, 1]);
    }
}
