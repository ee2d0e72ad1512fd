//! The combinatorial Laplacian `L = D - A` and its largest eigenvalue.
//!
//! Besides the eigenvalue itself this module exposes the identities that
//! tie `L` to the degree sequence: the edge-wise quadratic form
//! `x^T L x = sum over edges (x(u) - x(v))^2`, the ordered pairwise
//! difference sum `sum_u sum_v (x(u) - x(v))^2`, and their ratio scaled by
//! `2n`, which never exceeds `lambda_max` and attains it at the top
//! eigenvector.

mod eigen;
mod power;

use serde::Serialize;

pub use eigen::SymmetricEigen;

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::graph::Graph;

/// Default relative tolerance for [`lambda_max`].
pub const DEFAULT_REL_TOL: f64 = 1e-10;

/// Largest graph handled by the dense solver; bigger graphs use power
/// iteration.
pub const DENSE_LIMIT: usize = 512;

/// Row-major integer Laplacian.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaplacianMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl LaplacianMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn trace(&self) -> i64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.entries.iter().map(|&x| x as f64).collect()
    }

    /// `x^T L x` by explicit matrix-vector products.
    pub fn quadratic_form(&self, x: &[f64]) -> Result<f64> {
        check_len(self.n, x)?;
        Ok((0..self.n)
            .map(|i| {
                let row: f64 = self
                    .row(i)
                    .iter()
                    .zip(x)
                    .map(|(&l, &xj)| l as f64 * xj)
                    .sum();
                x[i] * row
            })
            .sum())
    }
}

pub fn laplacian(g: &Graph) -> LaplacianMatrix {
    let n = g.n();
    let mut entries = vec![0i64; n * n];
    for v in 0..n {
        entries[v * n + v] = g.degree(v) as i64;
    }
    for &(u, v) in g.edges() {
        entries[u * n + v] = -1;
        entries[v * n + u] = -1;
    }
    LaplacianMatrix { n, entries }
}

fn check_len(n: usize, x: &[f64]) -> Result<()> {
    if x.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: x.len(),
        });
    }
    Ok(())
}

/// `sum over edges (x(u) - x(v))^2`, evaluated edge by edge.
pub fn quadratic_form(g: &Graph, x: &[f64]) -> Result<f64> {
    check_len(g.n(), x)?;
    Ok(g.edges()
        .iter()
        .map(|&(u, v)| (x[u] - x[v]).powi(2))
        .sum())
}

/// `sum_u sum_v (x(u) - x(v))^2` over ordered pairs.
pub fn pairwise_difference_sum_of(x: &[f64]) -> f64 {
    x.iter()
        .map(|&xu| x.iter().map(|&xv| (xu - xv).powi(2)).sum::<f64>())
        .sum()
}

/// `sum_u sum_v (d(u) - d(v))^2` over ordered vertex pairs, in exact integer
/// arithmetic. Equals `2 (n Z_G - 4 m^2)`.
pub fn pairwise_difference_sum(g: &Graph) -> u64 {
    let degrees = g.degrees();
    degrees
        .iter()
        .map(|&du| {
            degrees
                .iter()
                .map(|&dv| {
                    let diff = du.abs_diff(dv) as u64;
                    diff * diff
                })
                .sum::<u64>()
        })
        .sum()
}

/// `2n * x^T L x / sum_u sum_v (x(u) - x(v))^2` for a nonconstant `x`.
/// Bounded above by `lambda_max`.
pub fn fiedler_quotient(g: &Graph, x: &[f64]) -> Result<f64> {
    check_len(g.n(), x)?;
    let (lo, hi) = x
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| {
            (lo.min(v), hi.max(v))
        });
    if x.is_empty() || hi - lo <= 0.0 {
        return Err(Error::ConstantVector);
    }
    let numerator = quadratic_form(g, x)?;
    Ok(2.0 * g.n() as f64 * numerator / pairwise_difference_sum_of(x))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    DenseEig,
    PowerIteration,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpectralResult {
    pub lambda_max: f64,
    /// Estimated absolute error of `lambda_max`.
    pub tolerance_achieved: f64,
    pub method: Method,
    pub iterations: usize,
}

fn check_tolerance(rel_tol: f64) -> Result<()> {
    if !(1e-13..=1e-3).contains(&rel_tol) {
        return Err(Error::InvalidTolerance(rel_tol));
    }
    Ok(())
}

/// Largest Laplacian eigenvalue, dense up to [`DENSE_LIMIT`] vertices and by
/// power iteration above.
pub fn lambda_max(g: &Graph, rel_tol: f64) -> Result<SpectralResult> {
    let method = if g.n() <= DENSE_LIMIT {
        Method::DenseEig
    } else {
        Method::PowerIteration
    };
    lambda_max_with(g, rel_tol, method, Execution::default())
}

pub fn lambda_max_with(
    g: &Graph,
    rel_tol: f64,
    method: Method,
    exec: Execution,
) -> Result<SpectralResult> {
    check_tolerance(rel_tol)?;
    let n = g.n();
    if n == 0 {
        return Err(Error::EmptyGraphDimension);
    }
    if g.m() == 0 {
        return Ok(SpectralResult {
            lambda_max: 0.0,
            tolerance_achieved: 0.0,
            method,
            iterations: 0,
        });
    }
    match method {
        Method::DenseEig => {
            let eig = SymmetricEigen::new(&laplacian(g).to_f64(), n, false);
            let lambda = eig.largest().unwrap_or(0.0).max(0.0);
            Ok(SpectralResult {
                lambda_max: lambda,
                tolerance_achieved: dense_error_bound(n, lambda),
                method,
                iterations: eig.iterations,
            })
        }
        Method::PowerIteration => {
            let out = power::power_iteration(g, rel_tol, exec);
            Ok(SpectralResult {
                lambda_max: out.lambda,
                tolerance_achieved: out.error_estimate,
                method,
                iterations: out.iterations,
            })
        }
    }
}

// Backward-stable dense solvers are accurate to a small multiple of
// eps * ||L||; ||L|| <= 2 * max degree <= 2n.
fn dense_error_bound(n: usize, lambda: f64) -> f64 {
    4.0 * n as f64 * f64::EPSILON * lambda.max(1.0)
}

/// Full Laplacian spectrum in ascending order (dense solver).
pub fn laplacian_spectrum(g: &Graph) -> Vec<f64> {
    SymmetricEigen::new(&laplacian(g).to_f64(), g.n(), false).values
}

/// Largest Laplacian eigenvalue together with a unit eigenvector.
pub fn top_eigenpair(g: &Graph) -> Result<(f64, Vec<f64>)> {
    let n = g.n();
    if n == 0 {
        return Err(Error::EmptyGraphDimension);
    }
    let eig = SymmetricEigen::new(&laplacian(g).to_f64(), n, true);
    let vector = eig.vector(n - 1).map(<[f64]>::to_vec).unwrap_or_default();
    Ok((eig.values[n - 1], vector))
}

/// `max_v d(v) + m(v)`, with `m(v)` the mean degree of the neighbours of
/// `v` and `m(v) = 0` for isolated vertices. An upper bound on
/// `lambda_max`.
pub fn merris_bound(g: &Graph) -> f64 {
    (0..g.n())
        .map(|v| {
            let d = g.degree(v);
            if d == 0 {
                return 0.0;
            }
            let neighbor_sum: usize = g.neighbors(v).iter().map(|&w| g.degree(w)).sum();
            d as f64 + neighbor_sum as f64 / d as f64
        })
        .fold(0.0, f64::max)
}
