//! Exhaustive arrowing and exact small Ramsey numbers.
//!
//! `K_N -> (G, H)` is checked over isomorphism classes of red graphs `F` on
//! `N` vertices: the property "`G ⊆ F` or `H ⊆ complement(F)`" is invariant
//! under relabeling, so one representative per class suffices.
//!
//! Classes are generated by canonical augmentation: a child obtained by
//! adding a vertex is kept when the new vertex lies in the automorphism
//! orbit of the canonical deletion vertex (the max-degree vertex with the
//! largest canonical label), and isomorphic children of one parent are
//! merged.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::canonical;
use crate::colorings::TwoColoring;
use crate::embedding::find_embedding;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_ARROWING_ORDER: usize = 9;

fn check_order(n: usize) -> Result<()> {
    if n > MAX_ARROWING_ORDER {
        return Err(Error::AboveBound { order: n, bound: MAX_ARROWING_ORDER });
    }
    Ok(())
}

/// Children of `parent` kept by canonical augmentation, canonically labeled.
fn augment(parent: &Graph) -> Vec<Graph> {
    let n = parent.order();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for nbrs in 0u64..1 << n {
        let mut rows: Vec<u64> = (0..n).map(|u| parent.row(u) | (nbrs >> u & 1) << n).collect();
        rows.push(nbrs);
        let child = Graph::from_rows(rows);
        let max_deg = child.max_degree();
        if child.degree(n) != max_deg {
            continue;
        }
        let c = canonical(&child);
        let deletion = (0..=n).filter(|&u| child.degree(u) == max_deg).max_by_key(|&u| c.position[u]).unwrap();
        if c.orbit[n] != c.orbit[deletion] {
            continue;
        }
        if seen.insert(c.form) {
            out.push(c.graph);
        }
    }
    out
}

/// Isomorphism classes of graphs on `0..=n` vertices, level by level.
pub fn enumerate_graphs_upto(n: usize) -> Result<Vec<Vec<Graph>>> {
    check_order(n)?;
    let mut levels = vec![vec![Graph::empty(0)?]];
    for _ in 0..n {
        let next: Vec<Graph> =
            levels.last().unwrap().par_iter().map(augment).collect::<Vec<_>>().into_iter().flatten().collect();
        levels.push(next);
    }
    Ok(levels)
}

/// One canonically labeled representative per isomorphism class.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>> {
    Ok(enumerate_graphs_upto(n)?.pop().unwrap())
}

#[derive(Clone, Debug, Serialize)]
pub struct ArrowingResult {
    pub n: usize,
    pub arrows: bool,
    /// A colouring with no red `G` and no blue `H`, when `arrows` is false.
    pub counterexample: Option<TwoColoring>,
}

/// Red `g` or blue `h` in the colouring whose red graph is `red`.
fn forced(red: &Graph, g: &Graph, h: &Graph) -> bool {
    find_embedding(g, red).is_some() || find_embedding(h, &red.complement()).is_some()
}

fn arrows_over(n: usize, classes: &[Graph], g: &Graph, h: &Graph) -> ArrowingResult {
    let bad = classes.par_iter().find_first(|f| !forced(f, g, h));
    ArrowingResult { n, arrows: bad.is_none(), counterexample: bad.map(|f| TwoColoring::from_red(f.clone())) }
}

/// Does every red/blue colouring of `K_n` contain a red `g` or a blue `h`?
pub fn arrows(n: usize, g: &Graph, h: &Graph) -> Result<ArrowingResult> {
    let classes = enumerate_graphs(n)?;
    Ok(arrows_over(n, &classes, g, h))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RamseyStatus {
    Exact,
    LowerBoundOnly,
}

#[derive(Clone, Debug, Serialize)]
pub struct RamseyValue {
    /// `r(g, h)` when determined within the search range.
    pub value: Option<usize>,
    /// Best proven lower bound (equals `value` when exact).
    pub lower_bound: usize,
    /// A critical colouring on `lower_bound - 1` vertices.
    pub lower_witness: TwoColoring,
    pub status: RamseyStatus,
}

pub fn ramsey_number(g: &Graph, h: &Graph, n_max: usize) -> Result<RamseyValue> {
    let levels = enumerate_graphs_upto(n_max)?;
    let mut witness = TwoColoring::from_red(Graph::empty(0)?);
    for (n, classes) in levels.iter().enumerate().skip(1) {
        let result = arrows_over(n, classes, g, h);
        match result.counterexample {
            None => {
                return Ok(RamseyValue {
                    value: Some(n),
                    lower_bound: n,
                    lower_witness: witness,
                    status: RamseyStatus::Exact,
                })
            }
            Some(c) => witness = c,
        }
    }
    Ok(RamseyValue {
        value: None,
        lower_bound: n_max + 1,
        lower_witness: witness,
        status: RamseyStatus::LowerBoundOnly,
    })
}

/// True when the colouring has neither a red `g` nor a blue `h`.
pub fn is_critical(c: &TwoColoring, g: &Graph, h: &Graph) -> bool {
    c.is_complementary() && find_embedding(g, c.red()).is_none() && find_embedding(h, c.blue()).is_none()
}

/// Every vertex has degree at most one.
pub fn is_matching(g: &Graph) -> bool {
    g.max_degree() <= 1
}
