/// Cluster labels per node, encoded from eigenvector sign patterns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClusterAssignment {
    /// Label of each node; `labels[i] < 2^k_used`.
    pub labels: Vec<u32>,
    /// Number of sign bits that went into each label.
    pub k_used: usize,
}

impl ClusterAssignment {
    /// Number of distinct labels present.
    pub fn cluster_count(&self) -> usize {
        let mut seen: Vec<u32> = self.labels.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }
}

/// Binary sign encoding of `k` eigenvectors (the constant mode excluded by
/// the caller): node `i` gets bit `j` set when the `j`-th vector is
/// nonnegative at `i`, and the label is the resulting binary number. Zero
/// entries count as positive.
pub fn sign_cluster(modes: &[Vec<f64>]) -> ClusterAssignment {
    assert!(!modes.is_empty(), "need at least one eigenvector");
    let n = modes[0].len();
    let mut labels = vec![0u32; n];
    for (j, v) in modes.iter().enumerate() {
        assert_eq!(v.len(), n, "eigenvector length mismatch");
        for i in 0..n {
            if v[i] >= 0.0 {
                labels[i] |= 1 << j;
            }
        }
    }
    ClusterAssignment {
        labels,
        k_used: modes.len(),
    }
}

/// Whether two labelings induce the same partition of the node set.
pub fn partitions_equal(a: &[u32], b: &[u32]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let canon = |labels: &[u32]| -> Vec<u32> {
        let mut map = std::collections::HashMap::new();
        labels
            .iter()
            .map(|&l| {
                let next = map.len() as u32;
                *map.entry(l).or_insert(next)
            })
            .collect()
    };
    canon(a) == canon(b)
}

/// Best node agreement between two labelings over injective label maps from
/// the smaller label set into the larger one. Exact (exhaustive) for up to 8
/// labels on the smaller side, greedy beyond that.
pub fn best_bijection_agreement(a: &[u32], b: &[u32]) -> f64 {
    assert_eq!(a.len(), b.len());
    assert!(!a.is_empty());
    let distinct = |xs: &[u32]| -> Vec<u32> {
        let mut v = xs.to_vec();
        v.sort_unstable();
        v.dedup();
        v
    };
    let (small, large, swapped) = {
        let da = distinct(a);
        let db = distinct(b);
        if da.len() <= db.len() {
            (da, db, false)
        } else {
            (db, da, true)
        }
    };
    let (xs, ys) = if swapped { (b, a) } else { (a, b) };

    // counts[s][l] = number of nodes with small-side label s and large-side label l
    let mut counts = vec![vec![0usize; large.len()]; small.len()];
    let sidx = |l: u32| small.binary_search(&l).unwrap();
    let lidx = |l: u32| large.binary_search(&l).unwrap();
    for (&x, &y) in xs.iter().zip(ys) {
        counts[sidx(x)][lidx(y)] += 1;
    }

    let matched = if small.len() <= 8 {
        max_assignment_exact(&counts)
    } else {
        max_assignment_greedy(&counts)
    };
    matched as f64 / a.len() as f64
}

fn max_assignment_exact(counts: &[Vec<usize>]) -> usize {
    fn rec(counts: &[Vec<usize>], row: usize, used: &mut Vec<bool>) -> usize {
        if row == counts.len() {
            return 0;
        }
        let mut best = 0;
        for col in 0..counts[row].len() {
            if !used[col] {
                used[col] = true;
                best = best.max(counts[row][col] + rec(counts, row + 1, used));
                used[col] = false;
            }
        }
        best
    }
    let mut used = vec![false; counts[0].len()];
    rec(counts, 0, &mut used)
}

fn max_assignment_greedy(counts: &[Vec<usize>]) -> usize {
    let mut cells: Vec<(usize, usize, usize)> = Vec::new();
    for (r, row) in counts.iter().enumerate() {
        for (c, &v) in row.iter().enumerate() {
            cells.push((v, r, c));
        }
    }
    cells.sort_unstable_by(|a, b| b.0.cmp(&a.0));
    let mut used_r = vec![false; counts.len()];
    let mut used_c = vec![false; counts[0].len()];
    let mut total = 0;
    for (v, r, c) in cells {
        if !used_r[r] && !used_c[c] {
            used_r[r] = true;
            used_c[c] = true;
            total += v;
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fiedler_sign_encoding() {
        let assignment = sign_cluster(&[vec![0.3, 0.1, -0.2, -0.4]]);
        assert_eq!(assignment.labels, vec![1, 1, 0, 0]);
        assert_eq!(assignment.k_used, 1);
    }

    #[test]
    fn two_mode_binary_encoding() {
        // Node signs (+,+) / (-,+) / (-,-) -> labels 3 / 2 / 0.
        let v1 = vec![1.0, -1.0, -1.0];
        let v2 = vec![1.0, 1.0, -1.0];
        let assignment = sign_cluster(&[v1, v2]);
        assert_eq!(assignment.labels, vec![3, 2, 0]);
    }

    #[test]
    fn zero_entries_count_positive() {
        let assignment = sign_cluster(&[vec![0.0, -0.5]]);
        assert_eq!(assignment.labels, vec![1, 0]);
    }

    #[test]
    fn partition_comparison() {
        assert!(partitions_equal(&[0, 0, 1, 1], &[3, 3, 1, 1]));
        assert!(!partitions_equal(&[0, 0, 1, 1], &[0, 1, 1, 0]));
        assert!(partitions_equal(&[2, 1, 2], &[0, 7, 0]));
    }

    #[test]
    fn agreement_scores() {
        assert_eq!(best_bijection_agreement(&[0, 0, 1, 1], &[1, 1, 0, 0]), 1.0);
        assert_eq!(best_bijection_agreement(&[0, 0, 1, 1], &[1, 0, 0, 0]), 0.75);
        // Differing label-set sizes: injective map from the smaller side.
        assert_eq!(
            best_bijection_agreement(&[0, 0, 0, 1], &[5, 5, 2, 9]),
            0.75
        );
    }
}
