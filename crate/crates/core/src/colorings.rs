//! Extremal red/blue colourings of complete graphs.
//!
//! [`burr_coloring`] witnesses the general lower bound
//! `r(G, H) > (chi(G) - 1)(v(H) - 1) + s(G) - 1`. [`necessity_coloring`]
//! builds, for a tree `T` on `snd(alpha)` vertices, a colouring of
//! `K_{k(pα+nh-1)+1}` with no blue `K_p(α) + nH` whose red graph is
//! `(tT ∪ qK_1) + K_{k-1}(pα+nh-1)`.
//!
//! Vertex layout of the necessity colouring: the `k - 1` blue cliques of
//! order `pα+nh-1` come first, then the block of `pα+nh` vertices with the
//! `t` deleted tree copies on consecutive ranges, the `q` leftover vertices
//! last.

use serde::Serialize;

use crate::embedding::{contains_multipartite_explained, find_embedding_with_budget, Embedding};
use crate::embedding::{MultipartiteOutcome, SearchBudget};
use crate::error::{Error, Result};
use crate::goodness::snd;
use crate::graph::MAX_ORDER;
use crate::graph::{complete, complete_multipartite, copies, disjoint_union, join, Graph, PartSizes};
use crate::invariants::ChromaticProfile;

/// Red/blue partition of the edges of `K_N`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwoColoring {
    red: Graph,
    blue: Graph,
}

impl TwoColoring {
    pub fn from_red(red: Graph) -> Self {
        let blue = red.complement();
        TwoColoring { red, blue }
    }

    pub fn from_blue(blue: Graph) -> Self {
        let red = blue.complement();
        TwoColoring { red, blue }
    }

    /// Fails unless the two graphs partition the edges of one complete graph.
    pub fn from_parts(red: Graph, blue: Graph) -> Result<Self> {
        let c = TwoColoring { red, blue };
        if !c.is_complementary() {
            return Err(Error::invalid("red and blue are not edge-complementary"));
        }
        Ok(c)
    }

    pub fn order(&self) -> usize {
        self.red.order()
    }

    pub fn red(&self) -> &Graph {
        &self.red
    }

    pub fn blue(&self) -> &Graph {
        &self.blue
    }

    /// Every pair of distinct vertices has exactly one colour.
    pub fn is_complementary(&self) -> bool {
        let n = self.red.order();
        self.blue.order() == n
            && (0..n).all(|v| {
                let (r, b) = (self.red.row(v), self.blue.row(v));
                r & b == 0 && (r | b) == self.red.vertex_mask() & !(1 << v)
            })
    }
}

/// Blue: `chi - 1` cliques on `h_order - 1` vertices and one on `s - 1`;
/// red: everything between the cliques. Order `(chi-1)(h_order-1) + s - 1`.
pub fn burr_coloring(profile: &ChromaticProfile, h_order: usize) -> Result<TwoColoring> {
    if profile.chi < 2 {
        return Err(Error::invalid("chi(G) >= 2 required"));
    }
    if h_order < profile.s {
        return Err(Error::invalid(format!("v(H) = {h_order} is below s(G) = {}", profile.s)));
    }
    let mut blocks = vec![complete(h_order - 1)?; profile.chi - 1];
    blocks.push(complete(profile.s - 1)?);
    let order: usize = blocks.iter().map(Graph::order).sum();
    if order > MAX_ORDER {
        return Err(Error::TooLarge { order, max: MAX_ORDER });
    }
    Ok(TwoColoring::from_blue(disjoint_union(&blocks)?))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NecessityCase {
    /// `snd(alpha)` divides `pα + nh`.
    Divisible,
    /// `q = (pα + nh) mod snd(alpha)` leftover vertices.
    Remainder,
}

impl NecessityCase {
    pub fn number(self) -> u8 {
        match self {
            NecessityCase::Divisible => 1,
            NecessityCase::Remainder => 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NecessityParams {
    pub alpha: usize,
    pub p: usize,
    pub k: usize,
    pub n: usize,
    pub h: usize,
    pub tree: Graph,
    pub snd: usize,
    /// Number of deleted tree copies.
    pub t: usize,
    /// Leftover vertices, `0 <= q < snd`.
    pub q: usize,
}

impl NecessityParams {
    pub fn new(alpha: usize, p: usize, k: usize, n: usize, h: usize, tree: Graph) -> Result<Self> {
        if alpha == 0 || p == 0 || k == 0 || n == 0 || h == 0 {
            return Err(Error::invalid("alpha, p, k, n and h must all be positive"));
        }
        if !tree.is_tree() {
            return Err(Error::NotATree);
        }
        let snd = snd(alpha as u64)? as usize;
        if tree.order() != snd {
            return Err(Error::invalid(format!("tree has {} vertices, snd({alpha}) = {snd}", tree.order())));
        }
        let block = p * alpha + n * h;
        let (t, q) = (block / snd, block % snd);
        if t == 0 {
            return Err(Error::invalid("no tree copy fits in the block"));
        }
        let params = NecessityParams { alpha, p, k, n, h, tree, snd, t, q };
        let order = params.order();
        if order > MAX_ORDER {
            return Err(Error::TooLarge { order, max: MAX_ORDER });
        }
        Ok(params)
    }

    /// `pα + nh`, the order of the blue target.
    pub fn block(&self) -> usize {
        self.p * self.alpha + self.n * self.h
    }

    /// `k(pα + nh - 1) + 1`.
    pub fn order(&self) -> usize {
        self.k * (self.block() - 1) + 1
    }

    pub fn case(&self) -> NecessityCase {
        if self.q == 0 {
            NecessityCase::Divisible
        } else {
            NecessityCase::Remainder
        }
    }

    /// Parts `[alpha; p] + [n h]`: a spanning complete multipartite
    /// subgraph of the blue target `K_p(α) + nH` on the same vertex count.
    pub fn target_parts(&self) -> PartSizes {
        let mut parts = vec![self.alpha; self.p];
        parts.push(self.n * self.h);
        PartSizes::new(parts).expect("positive parts")
    }

    /// `(tT ∪ qK_1) + K_{k-1}(pα+nh-1)`, assembled from the graph operations.
    pub fn expected_red(&self) -> Result<Graph> {
        let forest = disjoint_union(&[copies(&self.tree, self.t)?, Graph::empty(self.q)?])?;
        if self.k == 1 {
            return Ok(forest);
        }
        let rest = complete_multipartite(&PartSizes::repeated(self.block() - 1, self.k - 1)?)?;
        join(&forest, &rest)
    }
}

pub fn necessity_coloring(params: &NecessityParams) -> Result<TwoColoring> {
    let n_total = params.order();
    let block = params.block();
    let mut blue = Graph::empty(n_total)?;
    for b in 0..params.k - 1 {
        let start = b * (block - 1);
        for u in start..start + block - 1 {
            for v in u + 1..start + block - 1 {
                blue.add_edge(u, v);
            }
        }
    }
    let start = (params.k - 1) * (block - 1);
    for u in start..n_total {
        for v in u + 1..n_total {
            blue.add_edge(u, v);
        }
    }
    for copy in 0..params.t {
        let offset = start + copy * params.snd;
        for (u, v) in params.tree.edges() {
            blue.remove_edge(offset + u, offset + v);
        }
    }
    Ok(TwoColoring::from_blue(blue))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlueTargetReport {
    /// True when the blue graph has no copy of the target.
    pub absent: bool,
    pub explanation: String,
}

pub fn verify_no_blue_target(c: &TwoColoring, parts: &PartSizes) -> Result<BlueTargetReport> {
    verify_no_blue_target_with_budget(c, parts, SearchBudget::UNLIMITED)
}

pub fn verify_no_blue_target_with_budget(
    c: &TwoColoring,
    parts: &PartSizes,
    budget: SearchBudget,
) -> Result<BlueTargetReport> {
    Ok(match contains_multipartite_explained(c.blue(), parts, budget)? {
        MultipartiteOutcome::Found(a) => {
            let used: Vec<String> =
                a.part_of.iter().enumerate().filter_map(|(v, p)| p.map(|p| format!("{v}:{p}"))).collect();
            BlueTargetReport {
                absent: false,
                explanation: format!("blue target present, vertex:part {}", used.join(" ")),
            }
        }
        MultipartiteOutcome::Absent(ob) => BlueTargetReport { absent: true, explanation: ob.to_string() },
    })
}

/// `(true, None)` when the red graph has no copy of `g`; otherwise
/// `(false, Some(witness))`.
pub fn red_avoids(c: &TwoColoring, g: &Graph, budget: SearchBudget) -> Result<(bool, Option<Embedding>)> {
    Ok(match find_embedding_with_budget(g, c.red(), budget)? {
        Some(e) => (false, Some(e)),
        None => (true, None),
    })
}
