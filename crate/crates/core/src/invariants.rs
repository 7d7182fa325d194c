//! Chromatic number and chromatic surplus.
//!
//! Both searches colour vertices in a fixed order (descending degree) and
//! only open colour `c + 1` after colour `c` is in use, so each partition
//! into colour classes is visited once.

use crate::error::{Error, Result};
use crate::graph::{bits, Graph};

/// Default exact bound on the order for colouring computations.
pub const DEFAULT_CHROMATIC_BOUND: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChromaticProfile {
    pub chi: usize,
    /// Minimum class size over all proper `chi`-colourings.
    pub s: usize,
    /// A proper `chi`-colouring attaining `s`, as vertex -> class.
    pub witness: Vec<usize>,
}

impl ChromaticProfile {
    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.chi];
        for &c in &self.witness {
            sizes[c] += 1;
        }
        sizes
    }
}

fn check_input(g: &Graph, bound: usize) -> Result<()> {
    if g.order() == 0 {
        return Err(Error::invalid("colouring of the graph on zero vertices"));
    }
    if g.order() > bound {
        return Err(Error::AboveBound { order: g.order(), bound });
    }
    Ok(())
}

fn search_order(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.order()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    order
}

/// Size of a greedily grown clique; a lower bound on chi.
fn greedy_clique(g: &Graph) -> usize {
    (0..g.order())
        .map(|start| {
            let mut cand = g.row(start);
            let mut size = 1;
            while cand != 0 {
                let v = bits(cand).max_by_key(|&v| (g.row(v) & cand).count_ones()).unwrap();
                size += 1;
                cand &= g.row(v);
            }
            size
        })
        .max()
        .unwrap_or(0)
}

struct Colouring<'a> {
    g: &'a Graph,
    order: Vec<usize>,
    k: usize,
    classes: Vec<u64>,
    colour: Vec<usize>,
}

impl<'a> Colouring<'a> {
    fn new(g: &'a Graph, k: usize) -> Self {
        Colouring { g, order: search_order(g), k, classes: vec![0; k], colour: vec![usize::MAX; g.order()] }
    }

    fn find(&mut self, depth: usize, used: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        for c in 0..(used + 1).min(self.k) {
            if self.g.row(v) & self.classes[c] == 0 {
                self.classes[c] |= 1 << v;
                self.colour[v] = c;
                if self.find(depth + 1, used.max(c + 1)) {
                    return true;
                }
                self.classes[c] &= !(1 << v);
            }
        }
        false
    }

    /// Branch and bound for the smallest achievable minimum class size among
    /// colourings using all `k` classes.
    fn min_class(&mut self, depth: usize, used: usize, best: &mut Option<(usize, Vec<usize>)>) {
        let remaining = self.order.len() - depth;
        if self.k - used > remaining {
            return;
        }
        let current_bound =
            if used < self.k { 1 } else { self.classes.iter().map(|c| c.count_ones() as usize).min().unwrap() };
        if let Some((b, _)) = best {
            if current_bound >= *b {
                return;
            }
        }
        if depth == self.order.len() {
            *best = Some((current_bound, self.colour.clone()));
            return;
        }
        let v = self.order[depth];
        for c in 0..(used + 1).min(self.k) {
            if self.g.row(v) & self.classes[c] == 0 {
                self.classes[c] |= 1 << v;
                self.colour[v] = c;
                self.min_class(depth + 1, used.max(c + 1), best);
                self.classes[c] &= !(1 << v);
                if matches!(best, Some((1, _))) {
                    return;
                }
            }
        }
    }
}

pub fn is_colourable(g: &Graph, k: usize) -> bool {
    if g.order() == 0 {
        return true;
    }
    if k == 0 {
        return false;
    }
    Colouring::new(g, k).find(0, 0)
}

pub fn chromatic_number(g: &Graph) -> Result<usize> {
    chromatic_number_bounded(g, DEFAULT_CHROMATIC_BOUND)
}

pub fn chromatic_number_bounded(g: &Graph, bound: usize) -> Result<usize> {
    check_input(g, bound)?;
    let mut k = greedy_clique(g).max(1);
    while !is_colourable(g, k) {
        k += 1;
    }
    Ok(k)
}

pub fn min_color_class(g: &Graph) -> Result<ChromaticProfile> {
    min_color_class_bounded(g, DEFAULT_CHROMATIC_BOUND)
}

pub fn min_color_class_bounded(g: &Graph, bound: usize) -> Result<ChromaticProfile> {
    let chi = chromatic_number_bounded(g, bound)?;
    let mut search = Colouring::new(g, chi);
    let mut best = None;
    search.min_class(0, 0, &mut best);
    let (s, witness) = best.expect("a chi-colouring exists");
    Ok(ChromaticProfile { chi, s, witness })
}

/// `(chi(g) - 1)(h_order - 1) + s(g)`.
pub fn burr_lower_bound(g: &Graph, h_order: usize) -> Result<usize> {
    let profile = min_color_class(g)?;
    burr_value(&profile, h_order)
}

pub fn burr_value(profile: &ChromaticProfile, h_order: usize) -> Result<usize> {
    if h_order < profile.s {
        return Err(Error::invalid(format!("v(H) = {h_order} is below s(G) = {}", profile.s)));
    }
    Ok((profile.chi - 1) * (h_order.max(1) - 1) + profile.s)
}
