//! Graph file formats.
//!
//! Edge-list format: first line `n m`, then `m` lines `i j w` with 0-based
//! node indices, whitespace-separated, each undirected edge listed once.
//!
//! Matrix format: first line `n`, then `n` rows of `n` whitespace-separated
//! weights.

use std::io::{BufRead, BufReader, Read, Write};
use std::path::Path;

use nalgebra::DMatrix;

use crate::error::GraphError;
use crate::graph::WeightedGraph;

pub fn read_edge_list<R: Read>(reader: R) -> Result<WeightedGraph, GraphError> {
    let mut lines = BufReader::new(reader).lines();
    let header = lines
        .next()
        .ok_or_else(|| GraphError::ParseError("empty file".into()))??;
    let mut it = header.split_whitespace();
    let n: usize = parse_field(it.next(), "node count")?;
    let m: usize = parse_field(it.next(), "edge count")?;
    let mut edges = Vec::with_capacity(m);
    for line in lines {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut it = trimmed.split_whitespace();
        let i: usize = parse_field(it.next(), "edge source")?;
        let j: usize = parse_field(it.next(), "edge target")?;
        let w: f64 = parse_field(it.next(), "edge weight")?;
        edges.push((i, j, w));
    }
    if edges.len() != m {
        return Err(GraphError::ParseError(format!(
            "header promised {m} edges, file has {}",
            edges.len()
        )));
    }
    WeightedGraph::from_edges(n, &edges)
}

pub fn read_edge_list_file(path: &Path) -> Result<WeightedGraph, GraphError> {
    read_edge_list(std::fs::File::open(path)?)
}

pub fn write_edge_list<W: Write>(g: &WeightedGraph, mut out: W) -> Result<(), GraphError> {
    let n = g.node_count();
    writeln!(out, "{} {}", n, g.edge_count())?;
    for i in 0..n {
        for &(j, w) in g.neighbors(i) {
            if j > i {
                writeln!(out, "{i} {j} {w}")?;
            }
        }
    }
    Ok(())
}

pub fn write_edge_list_file(g: &WeightedGraph, path: &Path) -> Result<(), GraphError> {
    write_edge_list(g, std::fs::File::create(path)?)
}

/// Dense whitespace matrix file, `n` on the first line.
pub fn read_matrix<R: Read>(reader: R) -> Result<DMatrix<f64>, GraphError> {
    let mut lines = BufReader::new(reader).lines();
    let header = lines
        .next()
        .ok_or_else(|| GraphError::ParseError("empty file".into()))??;
    let n: usize = parse_field(header.split_whitespace().next(), "matrix size")?;
    let mut values = Vec::with_capacity(n * n);
    for line in lines {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        for tok in trimmed.split_whitespace() {
            values.push(tok.parse::<f64>().map_err(|_| {
                GraphError::ParseError(format!("bad matrix entry {tok:?}"))
            })?);
        }
    }
    if values.len() != n * n {
        return Err(GraphError::ParseError(format!(
            "matrix file has {} entries, expected {}",
            values.len(),
            n * n
        )));
    }
    Ok(DMatrix::from_row_slice(n, n, &values))
}

pub fn read_matrix_file(path: &Path) -> Result<DMatrix<f64>, GraphError> {
    read_matrix(std::fs::File::open(path)?)
}

fn parse_field<T: std::str::FromStr>(tok: Option<&str>, what: &str) -> Result<T, GraphError> {
    tok.ok_or_else(|| GraphError::ParseError(format!("missing {what}")))?
        .parse::<T>()
        .map_err(|_| GraphError::ParseError(format!("bad {what}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_round_trip() {
        let g = WeightedGraph::from_edges(3, &[(0, 1, 1.5), (1, 2, 0.25)]).unwrap();
        let mut buf = Vec::new();
        write_edge_list(&g, &mut buf).unwrap();
        let g2 = read_edge_list(&buf[..]).unwrap();
        assert_eq!(g.weights(), g2.weights());
    }

    #[test]
    fn edge_list_rejects_inconsistent_header() {
        let text = "3 2\n0 1 1.0\n";
        assert!(matches!(
            read_edge_list(text.as_bytes()),
            Err(GraphError::ParseError(_))
        ));
    }

    #[test]
    fn matrix_parse() {
        let text = "2\n0 1.5\n1.5 0\n";
        let m = read_matrix(text.as_bytes()).unwrap();
        assert_eq!(m[(0, 1)], 1.5);
        assert_eq!(m[(1, 1)], 0.0);
        let g = WeightedGraph::from_weights(m).unwrap();
        assert_eq!(g.edge_count(), 1);
    }
}
