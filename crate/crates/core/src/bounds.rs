//! Upper bounds on the irregularity `I(G)`.
//!
//! | bound | value |
//! |-------|-------|
//! | [`albertson_bound`] | `4 n^3 / 27` |
//! | [`acd_bound`] | `floor(n/3) * ceil(2n/3) * (ceil(2n/3) - 1)` |
//! | [`zhou_luo_bound`] | `sqrt(m (n Z_G - 4 m^2))` |
//! | [`laplacian_bound`] | `sqrt(m (n Z_G - 4 m^2) * lambda_max / n)` |
//! | [`tree_pendant_bound`] | `p (p - 1)`, trees only |
//!
//! Since `I(G)` is always even, any bound may be replaced by the largest
//! even integer below it ([`trunc_even`]).

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{DegreeProfile, Graph};
use crate::spectral::{self, DEFAULT_REL_TOL};

/// Slack absorbed by [`trunc_even`] so that float renderings of exact
/// integers do not drop by two.
pub const TRUNC_EPSILON: f64 = 1e-9;

/// Tolerance on `lambda <= n` accepted by [`laplacian_bound`].
pub const LAMBDA_SLACK: f64 = 1e-7;

pub fn albertson_bound(n: usize) -> f64 {
    let n = n as f64;
    4.0 * n * n * n / 27.0
}

pub fn acd_bound(n: usize) -> u64 {
    let n = n as u64;
    let third = n / 3;
    let two_thirds_up = (2 * n).div_ceil(3);
    third * two_thirds_up * two_thirds_up.saturating_sub(1)
}

fn radicand(profile: &DegreeProfile) -> Result<f64> {
    let term = profile.degree_variance_term();
    if term < 0 {
        return Err(Error::NegativeRadicand(term));
    }
    Ok(profile.m as f64 * term as f64)
}

pub fn zhou_luo_bound(profile: &DegreeProfile) -> Result<f64> {
    Ok(radicand(profile)?.sqrt())
}

/// The Laplacian-spectral bound. `lambda` must lie in `[0, n]` up to
/// [`LAMBDA_SLACK`]; the graph on zero vertices yields 0.
pub fn laplacian_bound(profile: &DegreeProfile, lambda: f64) -> Result<f64> {
    let n = profile.n();
    if !(lambda >= 0.0 && lambda <= n as f64 + LAMBDA_SLACK) {
        return Err(Error::LambdaOutOfRange { lambda, n });
    }
    let r = radicand(profile)?;
    if n == 0 {
        return Ok(0.0);
    }
    Ok((r * lambda / n as f64).sqrt())
}

pub fn tree_pendant_bound(pendants: usize) -> u64 {
    let p = pendants as u64;
    p * p.saturating_sub(1)
}

/// Largest even integer not exceeding `x + TRUNC_EPSILON`.
pub fn trunc_even(x: f64) -> Result<u64> {
    if x.is_nan() || x < 0.0 {
        return Err(Error::NegativeInput(x));
    }
    let floor = (x + TRUNC_EPSILON).floor() as u64;
    Ok(floor - floor % 2)
}

/// A bound as computed and after even truncation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundValue {
    pub raw: f64,
    pub truncated: u64,
}

impl BoundValue {
    fn new(raw: f64) -> Result<Self> {
        Ok(BoundValue {
            raw,
            truncated: trunc_even(raw)?,
        })
    }
}

/// Where the eigenvalue fed into the Laplacian bound comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LambdaSource {
    /// The computed largest Laplacian eigenvalue.
    #[default]
    Computed,
    /// `min(n, merris_bound)`, a closed-form cap that is never below
    /// `lambda_max`.
    MerrisCap,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReportOptions {
    pub rel_tol: f64,
    pub lambda: LambdaSource,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            rel_tol: DEFAULT_REL_TOL,
            lambda: LambdaSource::Computed,
        }
    }
}

/// Irregularity of one graph next to every applicable bound.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub n: usize,
    pub m: usize,
    pub irregularity: u64,
    pub albertson: BoundValue,
    pub acd: BoundValue,
    pub zhou_luo: BoundValue,
    pub laplacian_new: BoundValue,
    /// `p (p - 1)`; present iff the graph is a tree.
    pub tree_pendant: Option<u64>,
    /// Irregularity equals the pendant bound.
    pub tree_pendant_tight: bool,
    pub lambda_max_used: f64,
    pub lambda_source: LambdaSource,
    pub empty_graph: bool,
}

pub fn bound_report(g: &Graph, options: ReportOptions) -> Result<BoundReport> {
    let n = g.n();
    let profile = g.degree_profile();
    let irregularity = g.irregularity();

    if n == 0 {
        let zero = BoundValue {
            raw: 0.0,
            truncated: 0,
        };
        return Ok(BoundReport {
            n,
            m: 0,
            irregularity,
            albertson: zero,
            acd: zero,
            zhou_luo: zero,
            laplacian_new: zero,
            tree_pendant: None,
            tree_pendant_tight: false,
            lambda_max_used: 0.0,
            lambda_source: options.lambda,
            empty_graph: true,
        });
    }

    let lambda = match options.lambda {
        LambdaSource::Computed => spectral::lambda_max(g, options.rel_tol)?.lambda_max,
        LambdaSource::MerrisCap => spectral::merris_bound(g).min(n as f64),
    };
    // the dense solver may overshoot n by rounding
    let lambda = lambda.min(n as f64);

    let acd = acd_bound(n);
    let tree_pendant = g.is_tree().then(|| tree_pendant_bound(profile.pendants));

    Ok(BoundReport {
        n,
        m: profile.m,
        irregularity,
        albertson: BoundValue::new(albertson_bound(n))?,
        acd: BoundValue {
            raw: acd as f64,
            truncated: acd - acd % 2,
        },
        zhou_luo: BoundValue::new(zhou_luo_bound(&profile)?)?,
        laplacian_new: BoundValue::new(laplacian_bound(&profile, lambda)?)?,
        tree_pendant,
        tree_pendant_tight: tree_pendant == Some(irregularity),
        lambda_max_used: lambda,
        lambda_source: options.lambda,
        empty_graph: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    #[test]
    fn albertson_values() {
        assert!((albertson_bound(10) - 4000.0 / 27.0).abs() < 1e-12);
        assert_eq!(albertson_bound(0), 0.0);
        assert_eq!(albertson_bound(3), 4.0);
    }

    #[test]
    fn acd_values() {
        assert_eq!(acd_bound(10), 126);
        assert_eq!(acd_bound(3), 2);
        assert_eq!(acd_bound(0), 0);
        assert_eq!(acd_bound(1), 0);
    }

    #[test]
    fn zhou_luo_values() {
        let p4 = path(4).degree_profile();
        assert!((zhou_luo_bound(&p4).unwrap() - 12f64.sqrt()).abs() < 1e-15);
        let cycle = Graph::new(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        assert_eq!(zhou_luo_bound(&cycle.degree_profile()), Ok(0.0));
    }

    #[test]
    fn corrupted_profile_is_rejected() {
        let bad = DegreeProfile {
            degrees: vec![1, 1],
            m: 5,
            zagreb: 2,
            pendants: 2,
            max_degree: 1,
        };
        assert_eq!(zhou_luo_bound(&bad), Err(Error::NegativeRadicand(4 - 100)));
    }

    #[test]
    fn laplacian_bound_range_checks() {
        let p4 = path(4).degree_profile();
        assert!(matches!(
            laplacian_bound(&p4, 4.1),
            Err(Error::LambdaOutOfRange { .. })
        ));
        assert!(matches!(
            laplacian_bound(&p4, -0.5),
            Err(Error::LambdaOutOfRange { .. })
        ));
        assert_eq!(laplacian_bound(&p4, 0.0), Ok(0.0));
        assert!((laplacian_bound(&p4, 4.0).unwrap() - 12f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn pendant_bound_values() {
        assert_eq!(tree_pendant_bound(7), 42);
        assert_eq!(tree_pendant_bound(2), 2);
        assert_eq!(tree_pendant_bound(0), 0);
    }

    #[test]
    fn trunc_even_values() {
        assert_eq!(trunc_even(27.8614), Ok(26));
        assert_eq!(trunc_even(42.0), Ok(42));
        assert_eq!(trunc_even(2.0 - 1e-12), Ok(2));
        assert_eq!(trunc_even(1.999), Ok(0));
        assert_eq!(trunc_even(0.0), Ok(0));
        assert_eq!(trunc_even(-1.0), Err(Error::NegativeInput(-1.0)));
        assert!(trunc_even(f64::NAN).is_err());
    }

    #[test]
    fn report_for_path_and_complete() {
        let r = bound_report(&path(10), ReportOptions::default()).unwrap();
        assert_eq!(r.irregularity, 2);
        assert_eq!(r.tree_pendant, Some(2));
        assert!(r.tree_pendant_tight);
        assert!(r.laplacian_new.raw <= r.zhou_luo.raw);

        let k5 = Graph::new(5, (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v)))).unwrap();
        let r = bound_report(&k5, ReportOptions::default()).unwrap();
        assert_eq!(r.irregularity, 0);
        assert_eq!(r.zhou_luo.raw, 0.0);
        assert_eq!(r.laplacian_new.raw, 0.0);
        assert_eq!(r.tree_pendant, None);

        let merris = ReportOptions {
            lambda: LambdaSource::MerrisCap,
            ..Default::default()
        };
        // Merris gives 2(n-1) = 8 for K_5, capped at n
        assert_eq!(bound_report(&k5, merris).unwrap().lambda_max_used, 5.0);
    }

    #[test]
    fn report_for_empty_vertex_set() {
        let r = bound_report(&Graph::empty(0), ReportOptions::default()).unwrap();
        assert!(r.empty_graph);
        assert_eq!(r.laplacian_new.raw, 0.0);
    }
}
