//! Albertson irregularity of simple graphs and its upper bounds.
//!
//! The irregularity `I(G)` sums `|d(u) - d(v)|` over the edges of `G`. This
//! crate computes it together with the classical degree-based bounds and
//! the sharper bound that multiplies the Zhou–Luo radicand by
//! `lambda_max / n`, where `lambda_max` is the largest eigenvalue of the
//! Laplacian. The [`study`] module runs those bounds over free trees and
//! over the yoke and path families.
//!
//! ```
//! use irregularity::{bounds, generators};
//!
//! let g = generators::yoke(7, 5).unwrap();
//! let report = bounds::bound_report(&g, Default::default()).unwrap();
//! assert_eq!(report.irregularity, 4);
//! assert!(report.laplacian_new.raw <= report.zhou_luo.raw);
//! ```
//!
//! The `parallel` feature (default) spreads per-graph work over rayon;
//! disabling it keeps everything on the calling thread with identical
//! results.

pub mod bounds;
pub mod edgelist;
pub mod error;
pub mod exec;
pub mod generators;
pub mod graph;
pub mod spectral;
pub mod study;

pub use error::{Error, Result};
pub use exec::Execution;
pub use graph::{DegreeProfile, Graph};
