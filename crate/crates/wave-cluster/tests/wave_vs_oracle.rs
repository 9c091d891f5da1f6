//! Wave clustering must reproduce the dense-eigensolver reference.

use graph_core::{
    dense_spectrum, gen, partitions_equal, sign_cluster, NormalizedLaplacian, WeightedGraph,
};
use wave_cluster::{auto_config, cluster_by_wave, extract_modes, wave_run, WaveConfig};

fn laplacian_of(g: &WeightedGraph) -> NormalizedLaplacian {
    NormalizedLaplacian::from_graph(g).unwrap()
}

#[test]
fn disjoint_triangles_split_into_components() {
    let (g, labels) = gen::disjoint_cliques(&[3, 3]).unwrap();
    let l = laplacian_of(&g);
    let cfg = WaveConfig::new(1.0, 256, 1, 11).unwrap();
    let result = cluster_by_wave(&l, &cfg).unwrap();
    assert!(partitions_equal(&result.assignment.labels, &labels));

    // Same partition as the dense oracle path.
    let spectrum = dense_spectrum(&l, 2).unwrap();
    let oracle = sign_cluster(&spectrum.non_constant_modes(1));
    assert!(partitions_equal(&result.assignment.labels, &oracle.labels));
}

#[test]
fn planted_two_block_graph_recovered() {
    let (g, truth) = gen::planted_partition(&[68, 32], 0.3, 0.01, 5).unwrap();
    let l = laplacian_of(&g);
    let cfg = auto_config(&l, 1.0, 1, 8, 17).unwrap();
    let result = cluster_by_wave(&l, &cfg).unwrap();
    assert!(
        partitions_equal(&result.assignment.labels, &truth),
        "wave partition missed the planted cut"
    );

    // Sign agreement with the dense Fiedler vector on well-determined
    // entries: at least 99% of nodes whose oracle entry exceeds 1e-6.
    let spectrum = dense_spectrum(&l, 2).unwrap();
    let fiedler: Vec<f64> = spectrum.eigenvectors.column(1).iter().copied().collect();
    let wave_amp = &result.modes.modes[0].amplitudes;
    let dot: f64 = fiedler.iter().zip(wave_amp).map(|(a, b)| a * b).sum();
    let orient = if dot < 0.0 { -1.0 } else { 1.0 };
    let mut considered = 0;
    let mut agree = 0;
    for (f, w) in fiedler.iter().zip(wave_amp) {
        if f.abs() >= 1e-6 {
            considered += 1;
            if (f * orient * w) > 0.0 {
                agree += 1;
            }
        }
    }
    assert!(considered > 0);
    assert!(
        agree as f64 >= 0.99 * considered as f64,
        "sign agreement {agree}/{considered}"
    );
}

#[test]
fn four_planted_blocks_need_two_modes() {
    let (g, truth) = gen::planted_partition(&[40, 30, 24, 18], 0.55, 0.01, 23).unwrap();
    let l = laplacian_of(&g);
    let cfg = auto_config(&l, 1.0, 2, 8, 3).unwrap();
    let result = cluster_by_wave(&l, &cfg).unwrap();
    assert_eq!(result.assignment.cluster_count(), 4);
    assert!(partitions_equal(&result.assignment.labels, &truth));

    let spectrum = dense_spectrum(&l, 3).unwrap();
    let oracle = sign_cluster(&spectrum.non_constant_modes(2));
    assert!(partitions_equal(&result.assignment.labels, &oracle.labels));
}

#[test]
fn near_critical_speed_stays_bounded() {
    let g = WeightedGraph::from_edges(2, &[(0, 1, 1.0)]).unwrap();
    let l = laplacian_of(&g);
    let c = std::f64::consts::SQRT_2 * (1.0 - 1e-3);
    let cfg = WaveConfig::new(c, 10_000, 1, 9).unwrap();
    let trace = wave_run(&l, &cfg).unwrap();
    // Initial displacement is uniform [0,1), so max |u(0)| <= 1.
    assert!(trace.max_abs() < 1e3);
}

#[test]
fn supercritical_speed_blows_up_within_budget() {
    let g = WeightedGraph::from_edges(2, &[(0, 1, 1.0)]).unwrap();
    let l = laplacian_of(&g);
    let c = std::f64::consts::SQRT_2 * (1.0 + 1e-2);
    let cfg = WaveConfig::unvalidated(c, 10_000, 1, 8, 9);
    match wave_run(&l, &cfg) {
        Err(wave_cluster::WaveError::Unstable { step }) => assert!(step <= 10_000),
        other => panic!("expected divergence, got {other:?}"),
    }
}

#[test]
fn fft_eigenvalues_match_dense_within_bin_bound() {
    // Structured random graphs with separated low eigenvalues.
    for seed in [1u64, 2, 3] {
        let (g, _) = gen::planted_partition(&[50, 35, 25], 0.5, 0.015, seed).unwrap();
        let l = laplacian_of(&g);
        let cfg = auto_config(&l, 1.0, 3, 8, seed + 100).unwrap();
        let trace = wave_run(&l, &cfg).unwrap();
        let est = extract_modes(&trace, 3).unwrap();
        let spectrum = dense_spectrum(&l, 4).unwrap();
        let t_max = cfg.t_max as f64;
        let bin = 2.0 * std::f64::consts::PI / t_max;
        for (m, mode) in est.modes.iter().enumerate() {
            let dense = spectrum.eigenvalues[m + 1];
            let bound = 2.0 * bin / (cfg.c * cfg.c) * mode.theta.sin().abs() + bin;
            assert!(
                (mode.lambda - dense).abs() <= bound,
                "seed {seed} mode {m}: fft {} vs dense {dense}, bound {bound}",
                mode.lambda
            );
        }
    }
}

#[test]
fn wave_trace_is_deterministic() {
    let (g, _) = gen::planted_partition(&[20, 20], 0.5, 0.05, 7).unwrap();
    let l = laplacian_of(&g);
    let cfg = WaveConfig::new(1.2, 512, 1, 99).unwrap();
    let a = wave_run(&l, &cfg).unwrap();
    let b = wave_run(&l, &cfg).unwrap();
    for i in 0..g.node_count() {
        assert_eq!(a.node_series(i), b.node_series(i));
    }
}
