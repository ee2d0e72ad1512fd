//! Bound comparisons over whole families of graphs.
//!
//! [`tree_bound_study`] pits the even-truncated Laplacian bound against the
//! pendant bound `p (p - 1)` on every free tree of a given order.
//! [`find_t15_candidates`] searches the trees of one order for those with a
//! prescribed pendant count, irregularity and Laplacian bound window.
//! [`family_asymptotics`] tabulates both spectral bounds along the yoke and
//! path families.

use std::io::Write;

use serde::Serialize;

use crate::bounds::{laplacian_bound, tree_pendant_bound, trunc_even, zhou_luo_bound};
use crate::error::Result;
use crate::exec::{map_slice, Execution};
use crate::generators::{self, free_trees, LevelSequence};
use crate::graph::Graph;
use crate::spectral::{self, DEFAULT_REL_TOL};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Winner {
    /// Truncated Laplacian bound strictly below the pendant bound.
    New,
    Equal,
    /// Pendant bound strictly below the truncated Laplacian bound.
    Tree,
}

impl Winner {
    pub fn as_str(self) -> &'static str {
        match self {
            Winner::New => "new",
            Winner::Equal => "equal",
            Winner::Tree => "tree",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TreeRow {
    /// Level sequence of the enumerated representative, dash separated.
    pub canonical_id: String,
    pub n: usize,
    pub p: usize,
    pub irregularity: u64,
    pub zhou_luo: f64,
    pub laplacian_new: f64,
    pub laplacian_trunc: u64,
    pub pendant_bound: u64,
    pub lambda_max: f64,
    pub winner: Winner,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct StudyCounts {
    pub new_better: usize,
    pub equal: usize,
    pub tree_better: usize,
}

impl StudyCounts {
    pub fn total(&self) -> usize {
        self.new_better + self.equal + self.tree_better
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StudyOutcome {
    pub n: usize,
    pub rel_tol: f64,
    pub rows: Vec<TreeRow>,
    pub counts: StudyCounts,
}

pub fn tree_row(seq: &LevelSequence, rel_tol: f64) -> Result<TreeRow> {
    let g = seq.to_graph();
    evaluate_tree(&g, seq.to_string(), rel_tol)
}

fn evaluate_tree(g: &Graph, canonical_id: String, rel_tol: f64) -> Result<TreeRow> {
    let profile = g.degree_profile();
    let lambda = spectral::lambda_max(g, rel_tol)?.lambda_max.min(g.n() as f64);
    let laplacian_new = laplacian_bound(&profile, lambda)?;
    let laplacian_trunc = trunc_even(laplacian_new)?;
    let pendant_bound = tree_pendant_bound(profile.pendants);
    let winner = match laplacian_trunc.cmp(&pendant_bound) {
        std::cmp::Ordering::Less => Winner::New,
        std::cmp::Ordering::Equal => Winner::Equal,
        std::cmp::Ordering::Greater => Winner::Tree,
    };
    Ok(TreeRow {
        canonical_id,
        n: g.n(),
        p: profile.pendants,
        irregularity: g.irregularity(),
        zhou_luo: zhou_luo_bound(&profile)?,
        laplacian_new,
        laplacian_trunc,
        pendant_bound,
        lambda_max: lambda,
        winner,
    })
}

fn evaluate_all(n: usize, rel_tol: f64, exec: Execution) -> Result<Vec<TreeRow>> {
    let trees: Vec<LevelSequence> = free_trees(n)?.collect();
    map_slice(&trees, exec, |seq| tree_row(seq, rel_tol))
        .into_iter()
        .collect()
}

/// Compares the truncated Laplacian bound with the pendant bound on every
/// free tree with `n` vertices. Rows follow the enumeration order.
pub fn tree_bound_study(n: usize) -> Result<StudyOutcome> {
    tree_bound_study_with(n, DEFAULT_REL_TOL, Execution::default())
}

pub fn tree_bound_study_with(n: usize, rel_tol: f64, exec: Execution) -> Result<StudyOutcome> {
    let rows = evaluate_all(n, rel_tol, exec)?;
    let mut counts = StudyCounts::default();
    for row in &rows {
        match row.winner {
            Winner::New => counts.new_better += 1,
            Winner::Equal => counts.equal += 1,
            Winner::Tree => counts.tree_better += 1,
        }
    }
    Ok(StudyOutcome {
        n,
        rel_tol,
        rows,
        counts,
    })
}

/// Invariants of the worked tree example: order, pendant count,
/// irregularity, and a window on the raw Laplacian bound.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TreeQuery {
    pub n: usize,
    pub pendants: usize,
    pub irregularity: u64,
    pub bound_low: f64,
    pub bound_high: f64,
}

impl TreeQuery {
    /// The worked example searched among trees of order `n`.
    pub fn t15_on(n: usize) -> Self {
        TreeQuery {
            n,
            pendants: 7,
            irregularity: 22,
            bound_low: 27.855,
            bound_high: 27.867,
        }
    }

    pub fn matches(&self, row: &TreeRow) -> bool {
        row.p == self.pendants
            && row.irregularity == self.irregularity
            && (self.bound_low..=self.bound_high).contains(&row.laplacian_new)
    }
}

impl Default for TreeQuery {
    fn default() -> Self {
        TreeQuery::t15_on(15)
    }
}

pub fn find_trees(query: &TreeQuery, exec: Execution) -> Result<Vec<TreeRow>> {
    Ok(evaluate_all(query.n, DEFAULT_REL_TOL, exec)?
        .into_iter()
        .filter(|row| query.matches(row))
        .collect())
}

/// All 15-vertex trees with seven pendants, irregularity 22 and a raw
/// Laplacian bound in `[27.855, 27.867]`.
pub fn find_t15_candidates() -> Result<Vec<TreeRow>> {
    find_trees(&TreeQuery::default(), Execution::default())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// `Y(ceil(n/2), floor(n/2))`.
    YokeBalanced,
    Path,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LambdaMode {
    /// Eigensolve every member.
    Computed,
    /// Closed-form stand-in: `2 (1 + cos(pi / n))` for paths, the Merris cap
    /// `16/3` for yokes. No eigensolve.
    ClosedForm,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AsymptoticRow {
    pub n: usize,
    pub m: usize,
    pub zagreb: u64,
    pub irregularity: u64,
    pub lambda: f64,
    pub zhou_luo: f64,
    pub laplacian_new: f64,
    /// Closed form of the Zhou–Luo bound for the family.
    pub zhou_luo_reference: f64,
    /// Closed-form Laplacian bound reference: the Merris-capped value for
    /// yokes (an upper bound), the exact-eigenvalue value for paths.
    pub laplacian_reference: f64,
    /// Large-`n` limit of the path bound, `sqrt(8 (n-1)(n-2) / n)`; yokes
    /// repeat the Merris-capped value.
    pub laplacian_limit: f64,
}

pub fn path_lambda_closed_form(n: usize) -> f64 {
    2.0 * (1.0 + (std::f64::consts::PI / n as f64).cos())
}

pub const YOKE_MERRIS_CAP: f64 = 16.0 / 3.0;

fn family_member(family: Family, n: usize) -> Result<Graph> {
    match family {
        Family::YokeBalanced => generators::yoke(n.div_ceil(2), n / 2),
        Family::Path => generators::path(n),
    }
}

pub fn family_row(family: Family, n: usize, mode: LambdaMode, rel_tol: f64) -> Result<AsymptoticRow> {
    let g = family_member(family, n)?;
    let profile = g.degree_profile();
    let nf = n as f64;
    let lambda = match mode {
        LambdaMode::Computed => spectral::lambda_max(&g, rel_tol)?.lambda_max.min(nf),
        LambdaMode::ClosedForm => match family {
            Family::YokeBalanced => YOKE_MERRIS_CAP,
            Family::Path => path_lambda_closed_form(n),
        },
    };
    let (zhou_luo_reference, laplacian_reference, laplacian_limit) = match family {
        Family::YokeBalanced => {
            let zl = (2.0 * (nf + 1.0) * (nf - 2.0)).sqrt();
            let capped = (32.0 / 3.0 * (nf + 1.0) * (nf - 2.0) / nf).sqrt();
            (zl, capped, capped)
        }
        Family::Path => {
            let zl = (2.0 * (nf - 1.0) * (nf - 2.0)).sqrt();
            let exact = (zl * zl * path_lambda_closed_form(n) / nf).sqrt();
            let limit = (8.0 * (nf - 1.0) * (nf - 2.0) / nf).sqrt();
            (zl, exact, limit)
        }
    };
    Ok(AsymptoticRow {
        n,
        m: profile.m,
        zagreb: profile.zagreb,
        irregularity: g.irregularity(),
        lambda,
        zhou_luo: zhou_luo_bound(&profile)?,
        laplacian_new: laplacian_bound(&profile, lambda)?,
        zhou_luo_reference,
        laplacian_reference,
        laplacian_limit,
    })
}

pub fn family_asymptotics(family: Family, n_values: &[usize], mode: LambdaMode) -> Result<Vec<AsymptoticRow>> {
    n_values
        .iter()
        .map(|&n| family_row(family, n, mode, DEFAULT_REL_TOL))
        .collect()
}

pub const CSV_HEADER: [&str; 9] = [
    "canonical_id",
    "n",
    "p",
    "I",
    "zl_raw",
    "new_raw",
    "new_trunc",
    "pendant_bound",
    "winner",
];

/// One CSV row per tree, columns as in [`CSV_HEADER`]. Floats use the
/// shortest representation that round-trips.
pub fn write_rows_csv<W: Write>(rows: &[TreeRow], out: W) -> csv::Result<()> {
    let mut writer = csv::Writer::from_writer(out);
    writer.write_record(CSV_HEADER)?;
    for row in rows {
        writer.write_record([
            row.canonical_id.clone(),
            row.n.to_string(),
            row.p.to_string(),
            row.irregularity.to_string(),
            row.zhou_luo.to_string(),
            row.laplacian_new.to_string(),
            row.laplacian_trunc.to_string(),
            row.pendant_bound.to_string(),
            row.winner.as_str().to_string(),
        ])?;
    }
    writer.flush()?;
    Ok(())
}

/// `{"n", "trees", "rel_tol", "counts": {"new_better", "equal", "tree_better"}}`
pub fn summary_json(outcome: &StudyOutcome) -> serde_json::Value {
    serde_json::json!({
        "n": outcome.n,
        "trees": outcome.rows.len(),
        "rel_tol": outcome.rel_tol,
        "counts": outcome.counts,
    })
}

pub fn summary_line(counts: &StudyCounts) -> String {
    format!(
        "new_better={} equal={} tree_better={}",
        counts.new_better, counts.equal, counts.tree_better
    )
}
