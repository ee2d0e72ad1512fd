//! Deterministic graph families, seeded random graphs and free trees.

mod trees;

pub use trees::{canonical_form, free_trees, tree_from_pruefer, LevelSequence, TreeStream};

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn at_least(family: &'static str, min: usize, got: usize) -> Result<()> {
    if got < min {
        return Err(Error::SizeTooSmall { family, min, got });
    }
    Ok(())
}

fn cycle_edges(offset: usize, len: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..len).map(move |i| (offset + i, offset + (i + 1) % len))
}

/// Two cycles of lengths `n1` and `n2` joined by a bridge.
///
/// The first cycle occupies vertices `0..n1`, the second `n1..n1 + n2`, and
/// the bridge joins vertex `0` to vertex `n1`.
pub fn yoke(n1: usize, n2: usize) -> Result<Graph> {
    for len in [n1, n2] {
        if len < 3 {
            return Err(Error::CycleTooShort(len));
        }
    }
    let edges = cycle_edges(0, n1)
        .chain(cycle_edges(n1, n2))
        .chain([(0, n1)]);
    Graph::new(n1 + n2, edges)
}

pub fn path(n: usize) -> Result<Graph> {
    at_least("path", 1, n)?;
    Graph::new(n, (1..n).map(|i| (i - 1, i)))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::CycleTooShort(n));
    }
    Graph::new(n, cycle_edges(0, n))
}

/// Star on `n` vertices centred at vertex 0.
pub fn star(n: usize) -> Result<Graph> {
    at_least("star", 1, n)?;
    Graph::new(n, (1..n).map(|v| (0, v)))
}

pub fn complete(n: usize) -> Result<Graph> {
    at_least("complete", 1, n)?;
    Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// `K_{a,b}` with parts `0..a` and `a..a + b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    at_least("complete_bipartite", 1, a.min(b))?;
    Graph::new(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
}

/// Uniform double in `[0, 1)` from the top 53 bits of a SplitMix64 output.
fn unit_interval(rng: &mut SplitMix64) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Erdős–Rényi `G(n, p)`.
///
/// A SplitMix64 stream seeded with `seed` draws one double per unordered
/// pair, visiting pairs `(u, v)` with `u < v` in lexicographic order; the
/// pair becomes an edge when the draw is below `edge_prob`. The double is
/// `(x >> 11) * 2^-53` for the raw 64-bit output `x`, so any
/// implementation of SplitMix64 reproduces the same graph.
pub fn random_graph(n: usize, edge_prob: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&edge_prob) {
        return Err(Error::InvalidProbability(edge_prob));
    }
    let mut rng = SplitMix64::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if unit_interval(&mut rng) < edge_prob {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges)
}
