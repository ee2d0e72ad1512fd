//! Simple undirected graphs and their degree-based invariants.
//!
//! Vertices are the dense labels `0..n`. Isolated vertices are allowed and
//! disconnected graphs are ordinary values; only [`Graph::is_tree`] cares
//! about connectivity.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};

/// A simple undirected graph on vertices `0..n`.
///
/// The edge list is kept sorted lexicographically with `u < v` in every
/// pair, and each adjacency list is sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adjacency: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, repeated edges (in either
    /// orientation) and endpoints outside `0..n`.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        Self::build(n, edges, false)
    }

    /// Like [`Graph::new`] but silently merges repeated edges.
    pub fn new_merging_duplicates(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        Self::build(n, edges, true)
    }

    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adjacency: vec![Vec::new(); n],
            edges: Vec::new(),
        }
    }

    fn build(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
        merge_duplicates: bool,
    ) -> Result<Self> {
        let mut normalized = Vec::new();
        for (u, v) in edges {
            for vertex in [u, v] {
                if vertex >= n {
                    return Err(Error::VertexOutOfRange { vertex, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        if merge_duplicates {
            normalized.dedup();
        } else if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }

        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &normalized {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            adjacency,
            edges: normalized,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        DegreeProfile::from_degrees(self.degrees())
    }

    /// `|d(u) - d(v)|` for an edge of the graph.
    pub fn imbalance(&self, u: usize, v: usize) -> Result<usize> {
        if !self.has_edge(u, v) {
            return Err(Error::EdgeNotPresent(u, v));
        }
        Ok(self.degree(u).abs_diff(self.degree(v)))
    }

    /// Albertson irregularity: the sum of `|d(u) - d(v)|` over all edges.
    /// Always even.
    pub fn irregularity(&self) -> u64 {
        self.edges
            .iter()
            .map(|&(u, v)| self.degree(u).abs_diff(self.degree(v)) as u64)
            .sum()
    }

    /// Number of degree-one vertices.
    pub fn pendant_count(&self) -> usize {
        self.adjacency.iter().filter(|a| a.len() == 1).count()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for &w in &self.adjacency[u] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        reached == self.n
    }

    /// Connected with exactly `n - 1` edges. The graph on zero vertices is
    /// not a tree.
    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.m() == self.n - 1 && self.is_connected()
    }
}

/// Degree sequence of a graph together with the invariants derived from it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeProfile {
    pub degrees: Vec<usize>,
    /// Edge count, half the degree sum.
    pub m: usize,
    /// First Zagreb index, the sum of squared degrees.
    pub zagreb: u64,
    pub pendants: usize,
    pub max_degree: usize,
}

impl DegreeProfile {
    /// Derives the invariants from a degree sequence whose sum is even.
    pub fn from_degrees(degrees: Vec<usize>) -> Self {
        let sum: usize = degrees.iter().sum();
        debug_assert!(sum.is_multiple_of(2), "odd degree sum {sum}");
        DegreeProfile {
            m: sum / 2,
            zagreb: degrees.iter().map(|&d| (d as u64) * (d as u64)).sum(),
            pendants: degrees.iter().filter(|&&d| d == 1).count(),
            max_degree: degrees.iter().copied().max().unwrap_or(0),
            degrees,
        }
    }

    pub fn n(&self) -> usize {
        self.degrees.len()
    }

    /// `n * Z_G - 4 m^2`, exact. Nonnegative for every degree sequence and
    /// zero exactly when all degrees agree.
    pub fn degree_variance_term(&self) -> i128 {
        let n = self.n() as i128;
        let m = self.m as i128;
        n * self.zagreb as i128 - 4 * m * m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Graph {
        Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    #[test]
    fn builds_triangle() {
        let g = triangle();
        assert_eq!(g.m(), 3);
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(g.neighbors(1), &[0, 2]);
    }

    #[test]
    fn rejects_invalid_edges() {
        assert_eq!(Graph::new(2, [(0, 0)]), Err(Error::SelfLoop(0)));
        assert_eq!(
            Graph::new(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(
            Graph::new(3, [(0, 1), (2, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        let merged = Graph::new_merging_duplicates(3, [(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(merged.m(), 2);
    }

    #[test]
    fn edges_are_normalized_and_sorted() {
        let g = Graph::new(4, [(3, 2), (1, 0), (2, 0)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (2, 3)]);
    }

    #[test]
    fn empty_and_degenerate_graphs() {
        let g = Graph::empty(5);
        let p = g.degree_profile();
        assert_eq!(p.degrees, vec![0; 5]);
        assert_eq!((p.m, p.zagreb, p.pendants, p.max_degree), (0, 0, 0, 0));
        assert_eq!(g.irregularity(), 0);
        for n in [0, 1] {
            let g = Graph::empty(n);
            assert_eq!(g.irregularity(), 0);
            assert_eq!(g.degree_profile().zagreb, 0);
        }
        assert!(!Graph::empty(0).is_tree());
        assert!(Graph::empty(1).is_tree());
    }

    #[test]
    fn imbalance_of_edges() {
        // star S_5 centered at 0
        let star = Graph::new(5, (1..5).map(|v| (0, v))).unwrap();
        assert_eq!(star.imbalance(0, 3), Ok(3));
        assert_eq!(star.imbalance(3, 0), Ok(3));
        assert_eq!(star.imbalance(1, 2), Err(Error::EdgeNotPresent(1, 2)));
    }

    #[test]
    fn irregularity_is_sum_of_imbalances() {
        let g = Graph::new(6, [(0, 1), (1, 2), (1, 3), (3, 4), (4, 5), (2, 4)]).unwrap();
        let by_edge: usize = g
            .edges()
            .iter()
            .map(|&(u, v)| g.imbalance(u, v).unwrap())
            .sum();
        assert_eq!(g.irregularity(), by_edge as u64);
        assert_eq!(g.irregularity() % 2, 0);
    }

    #[test]
    fn irregularity_zero_without_global_regularity() {
        // K_3 plus a disjoint K_2: every edge joins equal degrees, degrees differ globally.
        let g = Graph::new(5, [(0, 1), (1, 2), (0, 2), (3, 4)]).unwrap();
        assert_eq!(g.irregularity(), 0);
        assert!(g.degree_profile().degree_variance_term() > 0);
    }

    #[test]
    fn pendant_counts() {
        assert_eq!(triangle().pendant_count(), 0);
        let star = Graph::new(6, (1..6).map(|v| (0, v))).unwrap();
        assert_eq!(star.pendant_count(), 5);
    }

    #[test]
    fn tree_detection() {
        let path = Graph::new(10, (0..9).map(|i| (i, i + 1))).unwrap();
        assert!(path.is_tree());
        assert!(!triangle().is_tree());
        let two_edges = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!two_edges.is_tree());
        // connected count is right but a cycle leaves a vertex isolated
        let cyc_plus_iso = Graph::new(4, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(!cyc_plus_iso.is_tree());
    }

    #[test]
    fn profile_invariants() {
        let g = Graph::new(5, [(0, 1), (0, 2), (0, 3), (3, 4)]).unwrap();
        let p = g.degree_profile();
        assert_eq!(p.degrees, vec![3, 1, 1, 2, 1]);
        assert_eq!(p.degrees.iter().sum::<usize>(), 2 * p.m);
        assert_eq!(p.zagreb, 9 + 1 + 1 + 4 + 1);
        assert_eq!(p.pendants, 3);
        assert_eq!(p.max_degree, 3);
        // 5 * 16 - 4 * 16
        assert_eq!(p.degree_variance_term(), 16);
    }
}
