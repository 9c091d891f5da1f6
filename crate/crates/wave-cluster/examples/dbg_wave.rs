use graph_core::{dense_spectrum, gen, NormalizedLaplacian};
use wave_cluster::{auto_config, extract_modes, wave_run};

fn main() {
    let (g, truth) = gen::planted_partition(&[68, 32], 0.3, 0.01, 5).unwrap();
    let l = NormalizedLaplacian::from_graph(&g).unwrap();
    let s = dense_spectrum(&l, 2).unwrap();
    let cfg = auto_config(&l, 1.0, 1, 8, 17).unwrap();
    println!("t_max {}", cfg.t_max);
    let trace = wave_run(&l, &cfg).unwrap();
    let est = extract_modes(&trace, 1).unwrap();
    let amp = &est.modes[0].amplitudes;
    let fied: Vec<f64> = s.eigenvectors.column(1).iter().copied().collect();
    let dot: f64 = fied.iter().zip(amp).map(|(a, b)| a * b).sum();
    let orient = if dot < 0.0 { -1.0 } else { 1.0 };
    let mut wrong = 0;
    for i in 0..fied.len() {
        let f = fied[i];
        let w = amp[i] * orient;
        if f * w <= 0.0 {
            wrong += 1;
            if wrong < 12 {
                println!(
                    "node {i} truth {} fiedler {f:+.4} wave {w:+.4}",
                    truth[i]
                );
            }
        }
    }
    println!("wrong signs: {wrong}/{}", fied.len());
    println!("lambda fft {:.5} dense {:.5}", est.modes[0].lambda, s.eigenvalues[1]);
    // amplitude scale distribution
    let mut mags: Vec<f64> = amp.iter().map(|a| a.abs()).collect();
    mags.sort_by(f64::total_cmp);
    println!("amp quartiles: {:.4} {:.4} {:.4}", mags[25], mags[50], mags[75]);
    let mut fm: Vec<f64> = fied.iter().map(|a| a.abs()).collect();
    fm.sort_by(f64::total_cmp);
    println!("fiedler quartiles: {:.5} {:.5} {:.5}", fm[25], fm[50], fm[75]);
}
