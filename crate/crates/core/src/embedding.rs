//! Subgraph containment with witnesses.
//!
//! [`find_embedding`] is a backtracking search over pattern vertices in a
//! connectivity-first order; candidates for each vertex are the bitwise AND
//! of the host rows of its already-placed neighbours, filtered by degree.
//!
//! [`contains_multipartite`] decides `K_{n_1,...,n_k} ⊆ host`. In the
//! spanning case two host vertices that are not adjacent must share a part,
//! so every component of the host's complement sits inside one part and the
//! question is an exact packing of component sizes into part sizes.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bits, complete_multipartite, Graph, PartSizes};

/// `map[v]` is the host vertex assigned to pattern vertex `v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Embedding(pub Vec<usize>);

impl Embedding {
    pub fn image(&self, v: usize) -> usize {
        self.0[v]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

/// Optional cap on the number of search nodes expanded per call.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_nodes: Option<u64>,
}

impl SearchBudget {
    pub const UNLIMITED: SearchBudget = SearchBudget { max_nodes: None };

    pub fn nodes(limit: u64) -> Self {
        SearchBudget { max_nodes: Some(limit) }
    }
}

/// Exhaustive search; `None` means no embedding exists.
pub fn find_embedding(pattern: &Graph, host: &Graph) -> Option<Embedding> {
    find_embedding_with_budget(pattern, host, SearchBudget::UNLIMITED).expect("an unlimited search always decides")
}

pub fn find_embedding_with_budget(pattern: &Graph, host: &Graph, budget: SearchBudget) -> Result<Option<Embedding>> {
    if pattern.order() > host.order() || pattern.edge_count() > host.edge_count() {
        return Ok(None);
    }
    if pattern.max_degree() > host.max_degree() {
        return Ok(None);
    }
    Matcher::new(pattern, host, budget).run()
}

/// Pattern vertices: highest degree first, then repeatedly the vertex with
/// the most already-ordered neighbours (ties: degree, then index).
fn search_order(pattern: &Graph) -> Vec<usize> {
    let n = pattern.order();
    let mut order = Vec::with_capacity(n);
    let mut placed = 0u64;
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| placed >> v & 1 == 0)
            .max_by_key(|&v| {
                let back = (pattern.row(v) & placed).count_ones();
                (back, pattern.degree(v), std::cmp::Reverse(v))
            })
            .unwrap();
        placed |= 1 << next;
        order.push(next);
    }
    order
}

struct Matcher<'a> {
    host: &'a Graph,
    order: Vec<usize>,
    /// Depths of earlier pattern neighbours, per depth.
    back: Vec<Vec<usize>>,
    /// Host vertices of sufficient degree, per depth.
    allowed: Vec<u64>,
    /// First depth from which the remaining pattern vertices are isolated.
    isolated_from: usize,
    image: Vec<usize>,
    nodes: u64,
    limit: Option<u64>,
}

impl<'a> Matcher<'a> {
    fn new(pattern: &Graph, host: &'a Graph, budget: SearchBudget) -> Self {
        let order = search_order(pattern);
        let mut depth_of = vec![0; pattern.order()];
        for (d, &v) in order.iter().enumerate() {
            depth_of[v] = d;
        }
        let back = order
            .iter()
            .enumerate()
            .map(|(d, &v)| pattern.neighbors(v).map(|w| depth_of[w]).filter(|&e| e < d).collect())
            .collect();
        let allowed = order
            .iter()
            .map(|&v| {
                let need = pattern.degree(v);
                (0..host.order()).filter(|&h| host.degree(h) >= need).fold(0u64, |m, h| m | 1 << h)
            })
            .collect();
        let isolated_from = order.iter().position(|&v| pattern.degree(v) == 0).unwrap_or(order.len());
        Matcher {
            host,
            back,
            allowed,
            isolated_from,
            image: vec![0; order.len()],
            order,
            nodes: 0,
            limit: budget.max_nodes,
        }
    }

    fn run(mut self) -> Result<Option<Embedding>> {
        if !self.extend(0, 0)? {
            return Ok(None);
        }
        let mut map = vec![0; self.order.len()];
        for (d, &v) in self.order.iter().enumerate() {
            map[v] = self.image[d];
        }
        Ok(Some(Embedding(map)))
    }

    fn extend(&mut self, depth: usize, used: u64) -> Result<bool> {
        if depth == self.isolated_from {
            let free = self.host.vertex_mask() & !used;
            let needed = self.order.len() - depth;
            if (free.count_ones() as usize) < needed {
                return Ok(false);
            }
            for (d, h) in (depth..self.order.len()).zip(bits(free)) {
                self.image[d] = h;
            }
            return Ok(true);
        }
        let mut cand = self.allowed[depth] & !used;
        for &j in &self.back[depth] {
            cand &= self.host.row(self.image[j]);
        }
        for h in bits(cand) {
            self.nodes += 1;
            if let Some(limit) = self.limit {
                if self.nodes > limit {
                    return Err(Error::BudgetExceeded { limit });
                }
            }
            self.image[depth] = h;
            if self.extend(depth + 1, used | 1 << h)? {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// True iff `e` is injective and maps every pattern edge onto a host edge.
/// Errors when the map's domain or range does not fit the graphs.
pub fn verify_embedding(pattern: &Graph, host: &Graph, e: &Embedding) -> Result<bool> {
    if e.0.len() != pattern.order() {
        return Err(Error::invalid(format!(
            "map has {} entries for a pattern on {} vertices",
            e.0.len(),
            pattern.order()
        )));
    }
    if let Some(&bad) = e.0.iter().find(|&&h| h >= host.order()) {
        return Err(Error::VertexOutOfRange { vertex: bad, order: host.order() });
    }
    let distinct: HashSet<_> = e.0.iter().collect();
    if distinct.len() != e.0.len() {
        return Ok(false);
    }
    Ok(pattern.edges().all(|(u, v)| host.has_edge(e.0[u], e.0[v])))
}

/// Placement of host vertices into the parts of a complete multipartite
/// target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartAssignment {
    pub parts: PartSizes,
    /// `part_of[v]` for every host vertex; `None` if unused.
    pub part_of: Vec<Option<usize>>,
}

impl PartAssignment {
    /// Re-check occupancies and cross-part adjacency edge by edge.
    pub fn is_valid_in(&self, host: &Graph) -> bool {
        if self.part_of.len() != host.order() {
            return false;
        }
        let mut counts = vec![0; self.parts.len()];
        for p in self.part_of.iter().flatten() {
            match counts.get_mut(*p) {
                Some(c) => *c += 1,
                None => return false,
            }
        }
        if counts != self.parts.as_slice() {
            return false;
        }
        let chosen: Vec<(usize, usize)> =
            self.part_of.iter().enumerate().filter_map(|(v, p)| p.map(|p| (v, p))).collect();
        chosen
            .iter()
            .enumerate()
            .all(|(i, &(u, pu))| chosen[i + 1..].iter().all(|&(v, pv)| pu == pv || host.has_edge(u, v)))
    }

    /// The assignment as an embedding of `complete_multipartite(parts)`,
    /// whose parts occupy consecutive labels.
    pub fn to_embedding(&self) -> Embedding {
        let mut next: Vec<usize> = self
            .parts
            .as_slice()
            .iter()
            .scan(0, |acc, &s| {
                let start = *acc;
                *acc += s;
                Some(start)
            })
            .collect();
        let mut map = vec![0; self.parts.total()];
        for (v, p) in self.part_of.iter().enumerate() {
            if let Some(p) = *p {
                map[next[p]] = v;
                next[p] += 1;
            }
        }
        Embedding(map)
    }
}

/// Why a multipartite target is absent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Obstruction {
    /// Spanning case: complement components cannot be packed into parts.
    Packing { components: Vec<usize>, bins: Vec<usize> },
    /// No host component is large enough for a connected target.
    ComponentsTooSmall { largest: usize, needed: usize },
    /// Exhaustive search over the candidate components found nothing.
    Exhausted,
}

impl std::fmt::Display for Obstruction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        fn list(xs: &[usize]) -> String {
            xs.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
        }
        match self {
            Obstruction::Packing { components, bins } => {
                write!(f, "components {} vs bins {}", list(components), list(bins))
            }
            Obstruction::ComponentsTooSmall { largest, needed } => {
                write!(f, "largest component has {largest} vertices, target needs {needed}")
            }
            Obstruction::Exhausted => f.write_str("exhaustive search found no placement"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MultipartiteOutcome {
    Found(PartAssignment),
    Absent(Obstruction),
}

pub fn contains_multipartite(host: &Graph, parts: &PartSizes) -> Result<Option<PartAssignment>> {
    Ok(match contains_multipartite_explained(host, parts, SearchBudget::UNLIMITED)? {
        MultipartiteOutcome::Found(a) => Some(a),
        MultipartiteOutcome::Absent(_) => None,
    })
}

pub fn contains_multipartite_explained(
    host: &Graph,
    parts: &PartSizes,
    budget: SearchBudget,
) -> Result<MultipartiteOutcome> {
    let total = parts.total();
    let n = host.order();
    if total > n {
        return Err(Error::invalid(format!("target has {total} vertices, host only {n}")));
    }
    if parts.len() == 1 {
        // edgeless target
        let part_of = (0..n).map(|v| (v < total).then_some(0)).collect();
        return Ok(MultipartiteOutcome::Found(PartAssignment { parts: parts.clone(), part_of }));
    }

    // with at least two parts the target is connected
    let comps = host.component_masks();
    let largest = comps.iter().map(|m| m.count_ones() as usize).max().unwrap_or(0);
    let candidates: Vec<u64> = comps.into_iter().filter(|m| m.count_ones() as usize >= total).collect();
    if candidates.is_empty() {
        return Ok(MultipartiteOutcome::Absent(Obstruction::ComponentsTooSmall { largest, needed: total }));
    }
    let mut last_packing = None;
    for &comp in &candidates {
        let vs: Vec<usize> = bits(comp).collect();
        let sub = host.induced_subgraph(&vs)?;
        let local = if vs.len() == total {
            match pack_spanning(&sub, parts) {
                Ok(a) => Some(a),
                Err(obstruction) => {
                    last_packing = Some(obstruction);
                    None
                }
            }
        } else {
            let target = complete_multipartite(parts)?;
            find_embedding_with_budget(&target, &sub, budget)?.map(|e| {
                let mut part_of = vec![None; sub.order()];
                let mut label = 0;
                for (p, &size) in parts.as_slice().iter().enumerate() {
                    for _ in 0..size {
                        part_of[e.image(label)] = Some(p);
                        label += 1;
                    }
                }
                PartAssignment { parts: parts.clone(), part_of }
            })
        };
        if let Some(a) = local {
            let mut part_of = vec![None; n];
            for (i, &v) in vs.iter().enumerate() {
                part_of[v] = a.part_of[i];
            }
            return Ok(MultipartiteOutcome::Found(PartAssignment { parts: parts.clone(), part_of }));
        }
    }
    let obstruction = match (candidates.len(), last_packing) {
        (1, Some(p)) => p,
        _ => Obstruction::Exhausted,
    };
    Ok(MultipartiteOutcome::Absent(obstruction))
}

/// Spanning case: pack complement components whole into parts.
fn pack_spanning(host: &Graph, parts: &PartSizes) -> std::result::Result<PartAssignment, Obstruction> {
    let comps = host.complement().component_masks();
    let sizes: Vec<usize> = comps.iter().map(|m| m.count_ones() as usize).collect();
    let Some(bin_of) = exact_packing(&sizes, parts.as_slice()) else {
        let mut components = sizes;
        components.sort_unstable_by(|a, b| b.cmp(a));
        let mut bins = parts.as_slice().to_vec();
        bins.sort_unstable();
        return Err(Obstruction::Packing { components, bins });
    };
    let mut part_of = vec![None; host.order()];
    for (mask, bin) in comps.iter().zip(bin_of) {
        for v in bits(*mask) {
            part_of[v] = Some(bin);
        }
    }
    Ok(PartAssignment { parts: parts.clone(), part_of })
}

/// Assign every item to a bin so that each bin is filled exactly. Returns
/// `bin_of[item]`. Among bins with equal remaining capacity only the first
/// is tried, so ties go to the lowest bin index.
pub fn exact_packing(items: &[usize], bins: &[usize]) -> Option<Vec<usize>> {
    if items.iter().sum::<usize>() != bins.iter().sum::<usize>() {
        return None;
    }
    let mut order: Vec<usize> = (0..items.len()).collect();
    order.sort_by_key(|&i| (std::cmp::Reverse(items[i]), i));
    let mut remaining = bins.to_vec();
    let mut assign = vec![0; items.len()];
    let mut failed: HashSet<(usize, Vec<usize>)> = HashSet::new();

    fn go(
        k: usize,
        order: &[usize],
        items: &[usize],
        remaining: &mut Vec<usize>,
        assign: &mut [usize],
        failed: &mut HashSet<(usize, Vec<usize>)>,
    ) -> bool {
        if k == order.len() {
            return remaining.iter().all(|&r| r == 0);
        }
        let mut key = remaining.clone();
        key.sort_unstable();
        if failed.contains(&(k, key.clone())) {
            return false;
        }
        let size = items[order[k]];
        let mut tried: Vec<usize> = Vec::new();
        for b in 0..remaining.len() {
            let r = remaining[b];
            if r < size || tried.contains(&r) {
                continue;
            }
            tried.push(r);
            remaining[b] -= size;
            assign[order[k]] = b;
            if go(k + 1, order, items, remaining, assign, failed) {
                return true;
            }
            remaining[b] += size;
        }
        failed.insert((k, key));
        false
    }

    go(0, &order, items, &mut remaining, &mut assign, &mut failed).then_some(assign)
}
