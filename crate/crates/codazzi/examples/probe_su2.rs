//! Metric-space probe on su(2): minimize the Codazzi defect of the Ricci
//! operator over left-invariant metrics. The round (bi-invariant) metrics
//! are Einstein, so the search should reach defect ~0 with a parallel Ricci
//! operator.
//!
//! ```bash
//! cargo run --release -p codazzi --example probe_su2
//! ```

use codazzi::probe::{minimize, ProbeConfig};
use codazzi::catalog;

fn main() {
    let alg = catalog::named::<f64>("su2_biinvariant", None)
        .unwrap()
        .algebra()
        .clone();
    let config = ProbeConfig {
        seed: 7,
        restarts: 6,
        max_iters: 300,
        ..Default::default()
    };
    let result = minimize(&alg, &config).unwrap();
    println!("classification: {:?}", result.classification);
    println!("defect norm     = {:.3e}", result.defect);
    println!("∇Ric norm       = {:.3e}", result.parallel_norm);
    println!("best restart used {} iterations", result.iterations);
    println!("\nper-restart summary:");
    for t in &result.restarts {
        println!(
            "  restart {}: {:.3e} -> {:.3e} in {} iterations (converged: {})",
            t.restart, t.initial_objective, t.final_objective, t.iterations, t.converged
        );
    }
    println!("\nbest parameters (log-diagonal first): {:?}", result.best_params);
}
