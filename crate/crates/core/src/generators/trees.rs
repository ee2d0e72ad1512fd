//! Free trees: enumeration up to isomorphism, Prüfer decoding and a
//! centroid-rooted canonical form.
//!
//! Enumeration follows Wright, Richmond, Odlyzko and McKay: every free tree
//! is represented by the level sequence of a particular rooting at its
//! centre, and the Beyer–Hedetniemi successor on rooted level sequences is
//! used to step (and, for invalid candidates, jump) from one such
//! representative to the next.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_TREE_SIZE: usize = 20;

/// Preorder depths of a rooted tree; entry 0 is the root at depth 0.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LevelSequence(Vec<usize>);

impl LevelSequence {
    pub fn levels(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Vertex `i` of the tree is the `i`-th entry; its parent is the
    /// closest earlier vertex one level up.
    pub fn to_graph(&self) -> Graph {
        let levels = &self.0;
        let mut stack: Vec<usize> = Vec::with_capacity(levels.len());
        let mut edges = Vec::with_capacity(levels.len().saturating_sub(1));
        for (i, &level) in levels.iter().enumerate() {
            while let Some(&top) = stack.last() {
                if levels[top] >= level {
                    stack.pop();
                } else {
                    break;
                }
            }
            if let Some(&parent) = stack.last() {
                edges.push((parent, i));
            }
            stack.push(i);
        }
        Graph::new(levels.len(), edges).expect("level sequence yields a simple tree")
    }
}

impl fmt::Display for LevelSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, level) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("-")?;
            }
            write!(f, "{level}")?;
        }
        Ok(())
    }
}

/// Lazily enumerates the free trees on `n` vertices, one per isomorphism
/// class, in decreasing lexicographic order of their level sequences.
#[derive(Debug, Clone)]
pub struct TreeStream {
    n: usize,
    pending: Option<Vec<usize>>,
}

pub fn free_trees(n: usize) -> Result<TreeStream> {
    if !(1..=MAX_TREE_SIZE).contains(&n) {
        return Err(Error::SizeOutOfRange(n));
    }
    // the path rooted at its centre
    let start = (0..=n / 2).chain(1..n.div_ceil(2)).collect();
    Ok(TreeStream {
        n,
        pending: Some(start),
    })
}

impl TreeStream {
    pub fn n(&self) -> usize {
        self.n
    }
}

impl Iterator for TreeStream {
    type Item = LevelSequence;

    fn next(&mut self) -> Option<LevelSequence> {
        let candidate = self.pending.take()?;
        if self.n == 1 {
            return Some(LevelSequence(candidate));
        }
        let tree = next_free_tree(candidate);
        self.pending = next_rooted_tree(&tree, None);
        Some(LevelSequence(tree))
    }
}

/// Beyer–Hedetniemi successor. With `p` given, the step starts at that
/// position instead of the last non-leaf-of-root entry.
fn next_rooted_tree(levels: &[usize], p: Option<usize>) -> Option<Vec<usize>> {
    let p = p.unwrap_or_else(|| {
        let mut p = levels.len() - 1;
        while levels[p] == 1 {
            p -= 1;
        }
        p
    });
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while levels[q] != levels[p] - 1 {
        q -= 1;
    }
    let mut next = levels.to_vec();
    for i in p..next.len() {
        next[i] = next[i - p + q];
    }
    Some(next)
}

/// Splits off the first subtree of the root. Returns that subtree (depths
/// relative to its own root) and the rest of the tree, plus the length of
/// the first subtree.
fn split_first_subtree(levels: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let second_child = levels
        .iter()
        .enumerate()
        .skip(2)
        .find(|&(_, &l)| l == 1)
        .map_or(levels.len(), |(i, _)| i);
    let left = levels[1..second_child].iter().map(|l| l - 1).collect();
    let rest = std::iter::once(0)
        .chain(levels[second_child..].iter().copied())
        .collect();
    (left, rest)
}

/// Returns `candidate` if it is the representative of a free tree,
/// otherwise jumps to the next representative.
fn next_free_tree(candidate: Vec<usize>) -> Vec<usize> {
    let (left, rest) = split_first_subtree(&candidate);
    let left_height = left.iter().copied().max().unwrap_or(0);
    let rest_height = rest.iter().copied().max().unwrap_or(0);
    let valid = rest_height > left_height
        || (rest_height == left_height
            && (left.len() < rest.len() || (left.len() == rest.len() && left <= rest)));
    if valid {
        return candidate;
    }

    let p = left.len();
    let mut next = next_rooted_tree(&candidate, Some(p))
        .expect("an invalid candidate always has a successor");
    if candidate[p] > 2 {
        let (new_left, _) = split_first_subtree(&next);
        let new_left_height = new_left.iter().copied().max().unwrap_or(0);
        let len = next.len();
        for (slot, level) in next[len - new_left_height - 1..].iter_mut().zip(1..) {
            *slot = level;
        }
    }
    next
}

/// Decodes a Prüfer sequence into the labelled tree on `len + 2` vertices.
pub fn tree_from_pruefer(seq: &[usize]) -> Result<Graph> {
    let n = seq.len() + 2;
    let mut degree = vec![1usize; n];
    for &x in seq {
        if x >= n {
            return Err(Error::EntryOutOfRange { entry: x, n });
        }
        degree[x] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> = (0..n)
        .filter(|&v| degree[v] == 1)
        .map(Reverse)
        .collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let Reverse(leaf) = leaves.pop().expect("a leaf remains while decoding");
        edges.push((leaf, x));
        degree[x] -= 1;
        if degree[x] == 1 {
            leaves.push(Reverse(x));
        }
    }
    let Reverse(a) = leaves.pop().expect("two leaves remain");
    let Reverse(b) = leaves.pop().expect("two leaves remain");
    edges.push((a, b));
    Graph::new(n, edges)
}

/// Vertices whose removal leaves no component larger than `n / 2`.
fn centroids(t: &Graph) -> Vec<usize> {
    let n = t.n();
    let (order, parent) = bfs_order(t, 0, None);
    let mut size = vec![1usize; n];
    let mut heaviest = vec![0usize; n];
    for &v in order.iter().rev() {
        if let Some(p) = parent[v] {
            size[p] += size[v];
            heaviest[p] = heaviest[p].max(size[v]);
        }
    }
    (0..n)
        .filter(|&v| heaviest[v].max(n - size[v]) <= n / 2)
        .collect()
}

fn bfs_order(t: &Graph, root: usize, blocked: Option<usize>) -> (Vec<usize>, Vec<Option<usize>>) {
    let mut parent = vec![None; t.n()];
    let mut seen = vec![false; t.n()];
    let mut order = Vec::with_capacity(t.n());
    let mut queue = VecDeque::from([root]);
    seen[root] = true;
    if let Some(b) = blocked {
        seen[b] = true;
    }
    while let Some(u) = queue.pop_front() {
        order.push(u);
        for &w in t.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = Some(u);
                queue.push_back(w);
            }
        }
    }
    (order, parent)
}

/// Lexicographically largest level sequence of the tree rooted at `root`,
/// not crossing into `blocked`.
fn rooted_code(t: &Graph, root: usize, blocked: Option<usize>) -> Vec<usize> {
    let (order, parent) = bfs_order(t, root, blocked);
    let mut depth = vec![0usize; t.n()];
    for &v in &order {
        if let Some(p) = parent[v] {
            depth[v] = depth[p] + 1;
        }
    }
    let mut children: Vec<Vec<Vec<usize>>> = vec![Vec::new(); t.n()];
    let mut root_code = Vec::new();
    for &v in order.iter().rev() {
        let mut kids = std::mem::take(&mut children[v]);
        kids.sort_unstable_by(|a, b| b.cmp(a));
        let mut code = Vec::with_capacity(1 + kids.iter().map(Vec::len).sum::<usize>());
        code.push(depth[v]);
        for kid in kids {
            code.extend(kid);
        }
        match parent[v] {
            Some(p) => children[p].push(code),
            None => root_code = code,
        }
    }
    root_code
}

/// Isomorphism key for trees: a centroid count followed by the canonical
/// level sequence(s) of the tree rooted at its centroid. With two
/// centroids the tree is cut at the edge between them and the two halves
/// are listed larger first.
pub fn canonical_form(t: &Graph) -> Result<Vec<usize>> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let c = centroids(t);
    let mut form = vec![c.len()];
    match c[..] {
        [root] => form.extend(rooted_code(t, root, None)),
        [a, b] => {
            let mut halves = [rooted_code(t, a, Some(b)), rooted_code(t, b, Some(a))];
            halves.sort_unstable_by(|x, y| y.cmp(x));
            for half in halves {
                form.extend(half);
            }
        }
        _ => unreachable!("a tree has one or two centroids"),
    }
    Ok(form)
}
