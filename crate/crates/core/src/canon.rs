//! Canonical labeling by partition refinement with individualization.
//!
//! The search explores the refinement tree and keeps the lexicographically
//! largest relabeled adjacency matrix among its leaves. Leaves that
//! reproduce the first or the best leaf yield automorphisms, which prune
//! sibling branches lying in a common orbit of the pointwise stabilizer of
//! the current prefix.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{bits, Graph};

/// Default exact bound for [`canonical_form`].
pub const DEFAULT_CANON_BOUND: usize = 12;

/// Canonical graph6 bytes: equal iff the graphs are isomorphic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// The canonical representative, decoded.
    pub fn to_graph(&self) -> Graph {
        crate::graph6::decode(self.as_str()).expect("canonical form is valid graph6")
    }

    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.0).expect("graph6 is ASCII")
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.as_str())
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Full output of the canonical labeling search.
#[derive(Clone, Debug)]
pub struct Canonical {
    pub form: CanonicalForm,
    /// `position[v]` is the canonical label of vertex `v`.
    pub position: Vec<usize>,
    /// `orbit[v]` is the smallest vertex in the automorphism orbit of `v`.
    pub orbit: Vec<usize>,
    pub graph: Graph,
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    canonical_form_bounded(g, DEFAULT_CANON_BOUND)
}

pub fn canonical_form_bounded(g: &Graph, bound: usize) -> Result<CanonicalForm> {
    if g.order() > bound {
        return Err(Error::AboveBound { order: g.order(), bound });
    }
    Ok(canonical(g).form)
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order() && a.edge_count() == b.edge_count() && canonical(a).form == canonical(b).form
}

/// Canonical labeling without an order bound (any graph up to 62 vertices).
pub fn canonical(g: &Graph) -> Canonical {
    let n = g.order();
    let mut search = Search { g, first: None, best: None, automorphisms: Vec::new() };
    let cells = if n == 0 { Vec::new() } else { refine(g, vec![(0..n).collect()]) };
    let mut prefix = Vec::new();
    search.visit(cells, &mut prefix);

    let (best_code, best_perm) = search.best.expect("search reaches a leaf");
    let mut position = vec![0; n];
    for (pos, &v) in best_perm.iter().enumerate() {
        position[v] = pos;
    }
    let graph = Graph::from_rows(best_code);
    let mut uf = UnionFind::new(n);
    for a in &search.automorphisms {
        for (v, &w) in a.iter().enumerate() {
            uf.union(v, w);
        }
    }
    let orbit = (0..n).map(|v| uf.min_of(v)).collect();
    Canonical { form: CanonicalForm(crate::graph6::encode(&graph).into_bytes()), position, orbit, graph }
}

type Cells = Vec<Vec<usize>>;

/// Equitable refinement: split cells by neighbour counts into other cells
/// until stable. Sub-cells are ordered by increasing count, which keeps the
/// result independent of vertex labels.
fn refine(g: &Graph, mut cells: Cells) -> Cells {
    'outer: loop {
        let masks: Vec<u64> = cells.iter().map(|c| c.iter().fold(0, |m, &v| m | 1 << v)).collect();
        for &splitter in &masks {
            for ci in 0..cells.len() {
                if cells[ci].len() < 2 {
                    continue;
                }
                let count = |v: usize| (g.row(v) & splitter).count_ones();
                let c0 = count(cells[ci][0]);
                if cells[ci].iter().all(|&v| count(v) == c0) {
                    continue;
                }
                let mut keyed: Vec<(u32, usize)> = cells[ci].iter().map(|&v| (count(v), v)).collect();
                keyed.sort_unstable();
                let mut pieces: Cells = Vec::new();
                let mut last = None;
                for (k, v) in keyed {
                    if last != Some(k) {
                        pieces.push(Vec::new());
                        last = Some(k);
                    }
                    pieces.last_mut().unwrap().push(v);
                }
                cells.splice(ci..=ci, pieces);
                continue 'outer;
            }
        }
        return cells;
    }
}

struct Search<'a> {
    g: &'a Graph,
    first: Option<(Vec<u64>, Vec<usize>)>,
    best: Option<(Vec<u64>, Vec<usize>)>,
    /// Each as a map `v -> image`.
    automorphisms: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn visit(&mut self, cells: Cells, prefix: &mut Vec<usize>) {
        let target =
            cells.iter().enumerate().filter(|(_, c)| c.len() > 1).min_by_key(|(i, c)| (c.len(), *i)).map(|(i, _)| i);
        let Some(ti) = target else {
            self.leaf(cells.into_iter().map(|c| c[0]).collect());
            return;
        };
        let mut explored: Vec<usize> = Vec::new();
        let candidates = cells[ti].clone();
        for &v in &candidates {
            if !explored.is_empty() && self.equivalent_to_explored(v, &explored, prefix) {
                continue;
            }
            let rest: Vec<usize> = candidates.iter().copied().filter(|&w| w != v).collect();
            let mut next = cells.clone();
            next.splice(ti..=ti, [vec![v], rest]);
            let next = refine(self.g, next);
            prefix.push(v);
            self.visit(next, prefix);
            prefix.pop();
            explored.push(v);
        }
    }

    fn equivalent_to_explored(&self, v: usize, explored: &[usize], prefix: &[usize]) -> bool {
        let n = self.g.order();
        let mut uf = UnionFind::new(n);
        let mut any = false;
        for a in &self.automorphisms {
            if prefix.iter().all(|&x| a[x] == x) {
                any = true;
                for (x, &y) in a.iter().enumerate() {
                    uf.union(x, y);
                }
            }
        }
        any && explored.iter().any(|&u| uf.find(u) == uf.find(v))
    }

    fn leaf(&mut self, perm: Vec<usize>) {
        let code = relabeled_rows(self.g, &perm);
        for reference in [&self.first, &self.best].into_iter().flatten() {
            if reference.0 == code {
                // reference[pos] -> perm[pos]
                let mut a = vec![0; perm.len()];
                for (pos, &v) in reference.1.iter().enumerate() {
                    a[v] = perm[pos];
                }
                if a.iter().enumerate().any(|(i, &x)| i != x) && !self.automorphisms.contains(&a) {
                    self.automorphisms.push(a);
                }
                return;
            }
        }
        if self.first.is_none() {
            self.first = Some((code.clone(), perm.clone()));
        }
        match &self.best {
            Some((b, _)) if *b >= code => {}
            _ => self.best = Some((code, perm)),
        }
    }
}

/// Rows of the graph with vertex `perm[pos]` moved to label `pos`.
fn relabeled_rows(g: &Graph, perm: &[usize]) -> Vec<u64> {
    let n = perm.len();
    let mut position = vec![0; n];
    for (pos, &v) in perm.iter().enumerate() {
        position[v] = pos;
    }
    perm.iter().map(|&v| bits(g.row(v)).fold(0u64, |m, w| m | 1 << position[w])).collect()
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // keep the smaller index as root so min_of is a find
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }

    fn min_of(&mut self, x: usize) -> usize {
        self.find(x)
    }
}
