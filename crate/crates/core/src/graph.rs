//! Simple undirected graphs on at most [`MAX_ORDER`] vertices, stored as one
//! `u64` adjacency row per vertex, and the constructors for the graph
//! families used throughout the crate.
//!
//! Labeling conventions are fixed so that fixtures are byte-stable:
//! `disjoint_union` and `join` place their operands in argument order, and
//! `complete_multipartite` lays parts out on consecutive vertex ranges.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported order; one-byte graph6 headers stop here.
pub const MAX_ORDER: usize = 62;

/// Iterate the indices of the set bits of `mask` in increasing order.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_ORDER {
        Err(Error::TooLarge { order: n, max: MAX_ORDER })
    } else {
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(Graph { n, rows: vec![0; n] })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, order: n });
                }
            }
            if u == v {
                return Err(Error::invalid(format!("self-loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub(crate) fn from_rows(rows: Vec<u64>) -> Self {
        debug_assert!(rows.len() <= MAX_ORDER);
        Graph { n: rows.len(), rows }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u] >> v & 1 == 1
    }

    /// Neighbourhood of `v` as a bit row.
    #[inline]
    pub fn row(&self, v: usize) -> u64 {
        self.rows[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> {
        bits(self.rows[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// All vertices as a bit mask.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        low_mask(self.n)
    }

    /// # Panics
    /// If either endpoint is out of range or `u == v`.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "edge ({u},{v}) out of range");
        assert_ne!(u, v, "self-loop at {u}");
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
    }

    /// # Panics
    /// If either endpoint is out of range.
    pub fn remove_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "edge ({u},{v}) out of range");
        self.rows[u] &= !(1 << v);
        self.rows[v] &= !(1 << u);
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| bits(self.rows[u] >> u >> 1).map(move |d| (u, u + 1 + d)))
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertex_mask();
        let rows = (0..self.n).map(|v| !self.rows[v] & all & !(1u64 << v)).collect();
        Graph { n: self.n, rows }
    }

    /// The subgraph induced by `vs`, relabeled so that `vs[i]` becomes `i`.
    pub fn induced_subgraph(&self, vs: &[usize]) -> Result<Graph> {
        let mut seen = 0u64;
        for &v in vs {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { vertex: v, order: self.n });
            }
            if seen >> v & 1 == 1 {
                return Err(Error::invalid(format!("vertex {v} listed twice")));
            }
            seen |= 1 << v;
        }
        let mut g = Graph::empty(vs.len())?;
        for (i, &u) in vs.iter().enumerate() {
            for (j, &v) in vs.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        Ok(g)
    }

    /// Apply the relabeling `old v -> perm[v]`.
    ///
    /// # Panics
    /// If `perm` is not a permutation of `0..order`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut rows = vec![0u64; self.n];
        for (u, v) in self.edges() {
            let (a, b) = (perm[u], perm[v]);
            rows[a] |= 1 << b;
            rows[b] |= 1 << a;
        }
        Graph { n: self.n, rows }
    }

    /// Connected components as bit masks, ordered by smallest vertex.
    pub fn component_masks(&self) -> Vec<u64> {
        let mut left = self.vertex_mask();
        let mut out = Vec::new();
        while left != 0 {
            let start = left.trailing_zeros() as usize;
            let mut comp = 1u64 << start;
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0;
                for v in bits(frontier) {
                    next |= self.rows[v];
                }
                frontier = next & !comp;
                comp |= next;
            }
            left &= !comp;
            out.push(comp);
        }
        out
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        self.component_masks().into_iter().map(|m| bits(m).collect()).collect()
    }

    pub fn is_connected(&self) -> bool {
        self.component_masks().len() <= 1
    }

    /// Connected and acyclic, with at least one vertex.
    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edge_count() == self.n - 1 && self.is_connected()
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::graph6::encode(self))
    }
}

/// Serialized as its graph6 string.
impl serde::Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&crate::graph6::encode(self))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}, {:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

/// Sizes of the partite sets of a complete multipartite graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PartSizes(Vec<usize>);

impl PartSizes {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::invalid("at least one part required"));
        }
        if parts.contains(&0) {
            return Err(Error::invalid("part sizes must be positive"));
        }
        Ok(PartSizes(parts))
    }

    /// `count` parts of `size` each, i.e. the parts of `K_count(size)`.
    pub fn repeated(size: usize, count: usize) -> Result<Self> {
        PartSizes::new(vec![size; count])
    }

    /// Parts of `K_{p+1}(alpha; n)`: `p` parts of `alpha` then one of `n`.
    pub fn with_large_part(alpha: usize, p: usize, n: usize) -> Result<Self> {
        let mut parts = vec![alpha; p];
        parts.push(n);
        PartSizes::new(parts)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }
}

pub fn disjoint_union(gs: &[Graph]) -> Result<Graph> {
    let total = gs.iter().map(Graph::order).sum();
    check_order(total)?;
    let mut rows = Vec::with_capacity(total);
    let mut offset = 0;
    for g in gs {
        rows.extend(g.rows.iter().map(|r| r << offset));
        offset += g.n;
    }
    Ok(Graph::from_rows(rows))
}

/// `g1 + g2`: `g1` on the low labels, `g2` above it, all cross edges added.
pub fn join(g1: &Graph, g2: &Graph) -> Result<Graph> {
    let n1 = g1.n;
    let mut g = disjoint_union(&[g1.clone(), g2.clone()])?;
    let low = low_mask(n1);
    let high = g.vertex_mask() & !low;
    for v in 0..g.n {
        g.rows[v] |= if v < n1 { high } else { low };
    }
    Ok(g)
}

/// `nG`: `count` disjoint copies of `g`.
pub fn copies(g: &Graph, count: usize) -> Result<Graph> {
    check_order(g.n * count)?;
    disjoint_union(&vec![g.clone(); count])
}

pub fn complete_multipartite(parts: &PartSizes) -> Result<Graph> {
    let total = parts.total();
    check_order(total)?;
    let all = low_mask(total);
    let mut rows = Vec::with_capacity(total);
    let mut start = 0;
    for &size in parts.as_slice() {
        let own = low_mask(size) << start;
        rows.extend(std::iter::repeat_n(all & !own, size));
        start += size;
    }
    Ok(Graph::from_rows(rows))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StandardKind {
    Path,
    /// `K_{1,n-1}` centred at vertex 0.
    Star,
    Cycle,
    Complete,
    Empty,
}

pub fn standard_graph(kind: StandardKind, n: usize) -> Result<Graph> {
    let mut g = Graph::empty(n)?;
    match kind {
        StandardKind::Path => (1..n).for_each(|v| g.add_edge(v - 1, v)),
        StandardKind::Star => (1..n).for_each(|v| g.add_edge(0, v)),
        StandardKind::Cycle => {
            if n < 3 {
                return Err(Error::invalid(format!("cycle needs at least 3 vertices, got {n}")));
            }
            (1..n).for_each(|v| g.add_edge(v - 1, v));
            g.add_edge(n - 1, 0);
        }
        StandardKind::Complete => {
            let all = g.vertex_mask();
            for v in 0..n {
                g.rows[v] = all & !(1 << v);
            }
        }
        StandardKind::Empty => {}
    }
    Ok(g)
}

pub fn path(n: usize) -> Result<Graph> {
    standard_graph(StandardKind::Path, n)
}

pub fn star(n: usize) -> Result<Graph> {
    standard_graph(StandardKind::Star, n)
}

pub fn cycle(n: usize) -> Result<Graph> {
    standard_graph(StandardKind::Cycle, n)
}

pub fn complete(n: usize) -> Result<Graph> {
    standard_graph(StandardKind::Complete, n)
}
