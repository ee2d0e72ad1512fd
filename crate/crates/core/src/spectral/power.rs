//! Power iteration on the Laplacian for graphs too large for the dense
//! solver.
//!
//! The Laplacian is positive semidefinite, so its largest eigenvalue is
//! also its dominant one and the Rayleigh quotients of the iterates rise
//! monotonically towards it. The error of the current quotient is estimated
//! from the ratio of successive increments (geometric tail).

use crate::exec::{map_range, Execution};
use crate::graph::Graph;

pub(crate) struct PowerOutcome {
    pub lambda: f64,
    pub error_estimate: f64,
    pub iterations: usize,
}

pub(crate) const MAX_ITERATIONS: usize = 500_000;

/// `y = L x`, one independent row per vertex.
pub(crate) fn laplacian_apply(g: &Graph, x: &[f64], exec: Execution) -> Vec<f64> {
    map_range(g.n(), exec, |i| {
        let nbrs = g.neighbors(i);
        let mut acc = nbrs.len() as f64 * x[i];
        for &j in nbrs {
            acc -= x[j];
        }
        acc
    })
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn normalize(x: &mut [f64]) -> f64 {
    let norm = dot(x, x).sqrt();
    if norm > 0.0 {
        for xi in x.iter_mut() {
            *xi /= norm;
        }
    }
    norm
}

fn remove_mean(x: &mut [f64]) {
    let mean = x.iter().sum::<f64>() / x.len() as f64;
    for xi in x.iter_mut() {
        *xi -= mean;
    }
}

pub(crate) fn power_iteration(g: &Graph, rel_tol: f64, exec: Execution) -> PowerOutcome {
    let n = g.n();
    if g.m() == 0 {
        return PowerOutcome {
            lambda: 0.0,
            error_estimate: 0.0,
            iterations: 0,
        };
    }
    // All-ones is the null vector; the bump at index 0 gives it a component
    // outside the kernel.
    let mut x = vec![1.0; n];
    x[0] += 1.0;
    remove_mean(&mut x);
    normalize(&mut x);

    let mut rho_prev = f64::NAN;
    let mut step_prev = f64::NAN;
    let mut error_estimate = f64::INFINITY;
    let mut rho = 0.0;
    let mut iterations = 0;

    while iterations < MAX_ITERATIONS {
        iterations += 1;
        let mut y = laplacian_apply(g, &x, exec);
        rho = dot(&x, &y);
        remove_mean(&mut y);
        if normalize(&mut y) == 0.0 {
            // x landed in the kernel; the graph has no positive eigenvalue reachable.
            error_estimate = 0.0;
            break;
        }
        x = y;

        if rho_prev.is_finite() {
            let step = (rho - rho_prev).abs();
            if step_prev.is_finite() && step_prev > 0.0 {
                let ratio = (step / step_prev).min(0.999_999);
                error_estimate = step * ratio / (1.0 - ratio);
            }
            if step == 0.0 {
                error_estimate = 0.0;
            }
            if error_estimate <= rel_tol * rho.max(1.0) && step <= rel_tol * rho.max(1.0) {
                break;
            }
            step_prev = step;
        }
        rho_prev = rho;
    }

    PowerOutcome {
        lambda: rho.max(0.0),
        error_estimate,
        iterations,
    }
}
