//! Graphs above the dense limit go through power iteration.

use irregularity::bounds::{bound_report, ReportOptions};
use irregularity::exec::Execution;
use irregularity::generators::{complete_bipartite, random_graph, star};
use irregularity::spectral::{lambda_max, lambda_max_with, Method, DEFAULT_REL_TOL, DENSE_LIMIT};

#[test]
fn star_and_bipartite_reach_n() {
    for g in [star(700).unwrap(), complete_bipartite(300, 400).unwrap()] {
        assert!(g.n() > DENSE_LIMIT);
        let r = lambda_max(&g, DEFAULT_REL_TOL).unwrap();
        assert_eq!(r.method, Method::PowerIteration);
        assert!((r.lambda_max - 700.0).abs() < 1e-7 * 700.0, "{}", r.lambda_max);
    }
}

#[test]
fn random_graph_agrees_with_forced_dense() {
    let g = random_graph(600, 0.05, 7).unwrap();
    let power = lambda_max(&g, DEFAULT_REL_TOL).unwrap();
    let dense = lambda_max_with(&g, DEFAULT_REL_TOL, Method::DenseEig, Execution::Sequential).unwrap();
    assert_eq!(power.method, Method::PowerIteration);
    assert!(
        (power.lambda_max - dense.lambda_max).abs() <= 1e-8 * dense.lambda_max,
        "power {} dense {}",
        power.lambda_max,
        dense.lambda_max
    );
}

#[test]
fn bound_report_on_large_graph_is_sound() {
    let g = random_graph(550, 0.02, 3).unwrap();
    let r = bound_report(&g, ReportOptions::default()).unwrap();
    assert!(r.irregularity as f64 <= r.laplacian_new.raw);
    assert!(r.laplacian_new.raw <= r.zhou_luo.raw + 1e-9);
    assert!(r.irregularity <= r.laplacian_new.truncated);
}
