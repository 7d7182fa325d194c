//! Free trees up to isomorphism.
//!
//! Rooted trees are generated as canonical level sequences with the
//! Beyer–Hedetniemi successor rule. A rooted tree is kept when its root is
//! a centroid and, for bicentroidal trees, when its sequence is the larger
//! of the two centroid rootings; every free tree survives exactly once.

use crate::embedding;
use crate::error::{Error, Result};
use crate::graph::{self, Graph};

pub const MAX_TREE_ORDER: usize = 16;

#[derive(Clone, Debug)]
pub struct TreeSet {
    pub n: usize,
    /// Pairwise non-isomorphic, ordered by canonical level sequence.
    pub trees: Vec<Graph>,
    pub level_sequences: Vec<Vec<usize>>,
}

impl TreeSet {
    pub fn len(&self) -> usize {
        self.trees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trees.is_empty()
    }
}

/// Depth-first level sequence -> parent array (`parent[0] = None`).
fn parents(levels: &[usize]) -> Vec<Option<usize>> {
    let mut last_at: Vec<usize> = Vec::new();
    levels
        .iter()
        .enumerate()
        .map(|(i, &d)| {
            last_at.truncate(d);
            let parent = d.checked_sub(1).map(|p| last_at[p]);
            last_at.push(i);
            parent
        })
        .collect()
}

pub fn tree_from_levels(levels: &[usize]) -> Result<Graph> {
    let edges: Vec<_> = parents(levels).into_iter().enumerate().filter_map(|(i, p)| p.map(|p| (p, i))).collect();
    Graph::from_edges(levels.len(), edges)
}

/// Canonical (lexicographically largest) level sequence of `t` rooted at
/// `root`: children are listed in decreasing order of their own sequences.
fn rooted_sequence(t: &Graph, root: usize) -> Vec<usize> {
    fn walk(t: &Graph, v: usize, from: Option<usize>, depth: usize) -> Vec<usize> {
        let mut kids: Vec<Vec<usize>> =
            t.neighbors(v).filter(|&w| Some(w) != from).map(|w| walk(t, w, Some(v), depth + 1)).collect();
        kids.sort_unstable_by(|a, b| b.cmp(a));
        let mut out = vec![depth];
        kids.into_iter().for_each(|k| out.extend(k));
        out
    }
    walk(t, root, None, 0)
}

/// Vertices minimizing the largest component left after their removal.
fn centroids(t: &Graph) -> Vec<usize> {
    let n = t.order();
    let worst: Vec<usize> = (0..n)
        .map(|v| {
            let mut rest = t.clone();
            let nbrs: Vec<_> = t.neighbors(v).collect();
            nbrs.iter().for_each(|&w| rest.remove_edge(v, w));
            rest.component_masks()
                .into_iter()
                .filter(|m| m >> v & 1 == 0)
                .map(|m| m.count_ones() as usize)
                .max()
                .unwrap_or(0)
        })
        .collect();
    let best = worst.iter().copied().min().unwrap_or(0);
    (0..n).filter(|&v| worst[v] == best).collect()
}

/// Canonical level sequence of a free tree: rooted at the centroid, or the
/// larger of the two rootings when there are two centroids.
pub fn free_tree_sequence(t: &Graph) -> Result<Vec<usize>> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    Ok(centroids(t).into_iter().map(|c| rooted_sequence(t, c)).max().unwrap())
}

/// Beyer–Hedetniemi successor on canonical rooted level sequences; `None`
/// after the star.
fn next_rooted(levels: &mut [usize]) -> bool {
    let n = levels.len();
    let Some(p) = (1..n).rev().find(|&i| levels[i] > 1) else {
        return false;
    };
    let q = (0..p).rev().find(|&i| levels[i] == levels[p] - 1).unwrap();
    let shift = p - q;
    for i in p..n {
        levels[i] = levels[i - shift];
    }
    true
}

pub fn enumerate_free_trees(n: usize) -> Result<TreeSet> {
    if !(1..=MAX_TREE_ORDER).contains(&n) {
        return Err(Error::invalid(format!("tree order must be in 1..={MAX_TREE_ORDER}, got {n}")));
    }
    let mut levels: Vec<usize> = (0..n).collect();
    let mut kept: Vec<Vec<usize>> = Vec::new();
    loop {
        let t = tree_from_levels(&levels)?;
        let cs = centroids(&t);
        if cs.contains(&0) {
            let keep = match cs.as_slice() {
                [_] => true,
                _ => cs.iter().all(|&c| rooted_sequence(&t, c) <= levels),
            };
            if keep {
                kept.push(levels.clone());
            }
        }
        if !next_rooted(&mut levels) {
            break;
        }
    }
    kept.sort();
    let trees = kept.iter().map(|l| tree_from_levels(l)).collect::<Result<_>>()?;
    Ok(TreeSet { n, trees, level_sequences: kept })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TreeShape {
    pub is_path: bool,
    pub contains_claw: bool,
}

/// Path-or-claw dichotomy, computed two ways: a walk from a leaf for the
/// path test, a subgraph search for `K_{1,3}`.
pub fn tree_structure_fact(t: &Graph) -> Result<TreeShape> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let n = t.order();
    let is_path = n <= 1 || {
        let start = (0..n).find(|&v| t.degree(v) == 1).unwrap();
        let (mut prev, mut cur, mut seen) = (usize::MAX, start, 1);
        while let Some(next) = t.neighbors(cur).find(|&w| w != prev) {
            if t.degree(cur) > 2 {
                break;
            }
            prev = cur;
            cur = next;
            seen += 1;
        }
        seen == n
    };
    let claw = graph::star(4)?;
    let contains_claw = embedding::find_embedding(&claw, t).is_some();
    Ok(TreeShape { is_path, contains_claw })
}
