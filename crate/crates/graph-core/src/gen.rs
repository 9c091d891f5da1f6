//! Seeded benchmark graph generators.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::GraphError;
use crate::graph::WeightedGraph;

/// Planted-partition (stochastic block) graph: unit-weight edges drawn
/// independently with probability `p_in` inside a block and `p_out` across
/// blocks. Returns the graph and the planted block label per node.
///
/// A node that ends up isolated is attached to the next node of its own
/// block, keeping construction total; with benchmark-scale parameters this
/// never fires.
pub fn planted_partition(
    blocks: &[usize],
    p_in: f64,
    p_out: f64,
    seed: u64,
) -> Result<(WeightedGraph, Vec<u32>), GraphError> {
    if blocks.iter().any(|&b| b < 2) {
        return Err(GraphError::ParseError(
            "block too small: every block needs at least 2 nodes".into(),
        ));
    }
    let n: usize = blocks.iter().sum();
    let mut label = Vec::with_capacity(n);
    for (b, &size) in blocks.iter().enumerate() {
        label.extend(std::iter::repeat(b as u32).take(size));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<(usize, usize, f64)> = Vec::new();
    let mut incident = vec![false; n];
    for i in 0..n {
        for j in (i + 1)..n {
            let p = if label[i] == label[j] { p_in } else { p_out };
            if rng.gen::<f64>() < p {
                edges.push((i, j, 1.0));
                incident[i] = true;
                incident[j] = true;
            }
        }
    }
    for i in 0..n {
        if !incident[i] {
            let j = (0..n)
                .find(|&j| j != i && label[j] == label[i])
                .expect("block has >= 2 nodes");
            edges.push((i.min(j), i.max(j), 1.0));
            incident[i] = true;
            incident[j] = true;
        }
    }
    let g = WeightedGraph::from_edges(n, &edges)?;
    Ok((g, label))
}

/// Union of disjoint cliques with unit weights; returns graph and component
/// label per node.
pub fn disjoint_cliques(sizes: &[usize]) -> Result<(WeightedGraph, Vec<u32>), GraphError> {
    let n: usize = sizes.iter().sum();
    let mut edges = Vec::new();
    let mut label = Vec::with_capacity(n);
    let mut base = 0;
    for (c, &size) in sizes.iter().enumerate() {
        for i in 0..size {
            label.push(c as u32);
            for j in (i + 1)..size {
                edges.push((base + i, base + j, 1.0));
            }
        }
        base += size;
    }
    let g = WeightedGraph::from_edges(n, &edges)?;
    Ok((g, label))
}
