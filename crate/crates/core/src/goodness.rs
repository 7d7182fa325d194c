//! Deciding goodness of `K_{p+1}(alpha; n)` and `K_p(alpha) + nH` against a
//! target `G` through the tree-embedding criterion.
//!
//! For `G` with `v(G) = m`, `chi(G) = k + 1 >= 2` and `s(G) = 1`, and
//! `p >= snd(alpha)`, the host is good for large `n` iff `G` embeds in
//! `mT + K_{k-1}(m)` for every tree `T` on `snd(alpha)` vertices. The large-n
//! threshold is not effective, so a certificate carries the verdict and the
//! value `k(pα + nh - 1) + 1` as a linear form in `n`, never a concrete
//! `n_0`.

use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;
use serde::Serialize;

use crate::colorings::{necessity_coloring, red_avoids, verify_no_blue_target_with_budget, NecessityParams};
use crate::embedding::{find_embedding_with_budget, verify_embedding, Embedding, SearchBudget};
use crate::error::{Error, Hypothesis, Result};
use crate::graph::{complete_multipartite, copies, join, Graph, PartSizes, MAX_ORDER};
use crate::invariants::{min_color_class, ChromaticProfile};
use crate::trees::enumerate_free_trees;

/// Smallest positive integer that does not divide `alpha`.
pub fn snd(alpha: u64) -> Result<u64> {
    if alpha == 0 {
        return Err(Error::invalid("alpha must be at least 1"));
    }
    Ok((2..).find(|d| !alpha.is_multiple_of(*d)).unwrap())
}

/// `mT + K_{k-1}(m)`: `m` copies of `t` on the low labels, joined with the
/// complete `(k-1)`-partite graph with parts of size `m`.
pub fn host_template(m: usize, k_minus_1: usize, t: &Graph) -> Result<Graph> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    if m == 0 {
        return Err(Error::invalid("m must be at least 1"));
    }
    let order = m * t.order() + m * k_minus_1;
    if order > MAX_ORDER {
        return Err(Error::TooLarge { order, max: MAX_ORDER });
    }
    let forest = copies(t, m)?;
    if k_minus_1 == 0 {
        return Ok(forest);
    }
    join(&forest, &complete_multipartite(&PartSizes::repeated(m, k_minus_1)?)?)
}

/// The graph `H` in `K_p(alpha) + nH`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum HostFamily {
    /// `H = K_1`, i.e. the host is `K_{p+1}(alpha; n)`.
    K1,
    /// `H = K_{q+1}(alpha; beta)`; `beta = 0` is read as `K_q(alpha)`.
    Multipartite { q: u64, beta: u64 },
}

impl HostFamily {
    /// `h = v(H)`.
    pub fn order(&self, alpha: u64) -> u64 {
        match *self {
            HostFamily::K1 => 1,
            HostFamily::Multipartite { q, beta } => q * alpha + beta,
        }
    }
}

#[derive(Clone, Debug)]
pub struct GoodnessProblem {
    pub g: Graph,
    pub alpha: u64,
    pub p: u64,
    pub family: HostFamily,
    profile: ChromaticProfile,
    snd: u64,
}

impl GoodnessProblem {
    /// Checks the hypotheses `s(G) = 1`, `chi(G) >= 2`, `p >= snd(alpha)`.
    pub fn new(g: Graph, alpha: u64, p: u64, family: HostFamily) -> Result<Self> {
        let snd = snd(alpha)?;
        if let HostFamily::Multipartite { q, .. } = family {
            if q == 0 {
                return Err(Error::invalid("family K_{q+1}(alpha; beta) needs q >= 1"));
            }
        }
        let profile = check_target(&g)?;
        if p < snd {
            return Err(Error::Hypothesis(Hypothesis::MultiplicityBelowSnd { p, snd }));
        }
        Ok(GoodnessProblem { g, alpha, p, family, profile, snd })
    }

    pub fn profile(&self) -> &ChromaticProfile {
        &self.profile
    }

    pub fn snd(&self) -> u64 {
        self.snd
    }

    /// `k = chi(G) - 1`.
    pub fn k(&self) -> usize {
        self.profile.chi - 1
    }

    pub fn claimed_value(&self) -> ClaimedValue {
        let k = self.k() as u64;
        ClaimedValue { slope: k * self.family.order(self.alpha), intercept: k * (self.p * self.alpha - 1) + 1 }
    }
}

fn check_target(g: &Graph) -> Result<ChromaticProfile> {
    let profile = min_color_class(g)?;
    if profile.chi < 2 {
        return Err(Error::Hypothesis(Hypothesis::ChromaticBelowTwo { chi: profile.chi }));
    }
    if profile.s != 1 {
        return Err(Error::Hypothesis(Hypothesis::SurplusNotOne { s: profile.s }));
    }
    Ok(profile)
}

/// `slope * n + intercept`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimedValue {
    pub slope: u64,
    pub intercept: u64,
}

impl ClaimedValue {
    pub fn at(&self, n: u64) -> u64 {
        self.slope * n + self.intercept
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GoodnessOptions {
    pub budget: SearchBudget,
    /// Check every tree even after one fails.
    pub exhaustive: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Good,
    NotGood,
    /// One-way criterion satisfied (several part sizes).
    Sufficient,
    /// One-way criterion not satisfied; goodness is not decided.
    NotSufficient,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TreeOutcome {
    Embedded(Embedding),
    NoEmbedding,
    /// Not examined because an earlier tree already failed.
    Skipped,
}

/// Per-tree results of the embedding criterion.
#[derive(Clone, Debug)]
pub struct TreeChecks {
    pub trees: Vec<Graph>,
    pub outcomes: Vec<TreeOutcome>,
    /// Index of the first tree without an embedding.
    pub failing: Option<usize>,
}

impl TreeChecks {
    pub fn embeddings(&self) -> Vec<Option<Embedding>> {
        self.outcomes
            .iter()
            .map(|o| match o {
                TreeOutcome::Embedded(e) => Some(e.clone()),
                _ => None,
            })
            .collect()
    }
}

/// Run the criterion for each tree. Trees are checked in parallel; once a
/// tree fails, later trees are skipped unless `exhaustive`. Every tree before
/// the first failure is always checked, so the result does not depend on
/// scheduling.
pub fn check_trees(g: &Graph, k: usize, trees: &[Graph], opts: GoodnessOptions) -> Result<TreeChecks> {
    let m = g.order();
    let first_fail = AtomicUsize::new(usize::MAX);
    let results: Vec<Result<TreeOutcome>> = trees
        .par_iter()
        .enumerate()
        .map(|(i, t)| {
            if !opts.exhaustive && i > first_fail.load(Ordering::Relaxed) {
                return Ok(TreeOutcome::Skipped);
            }
            let host = host_template(m, k - 1, t)?;
            match find_embedding_with_budget(g, &host, opts.budget)? {
                Some(e) => Ok(TreeOutcome::Embedded(e)),
                None => {
                    first_fail.fetch_min(i, Ordering::Relaxed);
                    Ok(TreeOutcome::NoEmbedding)
                }
            }
        })
        .collect();
    let failing = results.iter().position(|r| matches!(r, Ok(TreeOutcome::NoEmbedding)));
    let mut outcomes = Vec::with_capacity(trees.len());
    for (i, r) in results.into_iter().enumerate() {
        match r {
            Ok(TreeOutcome::Skipped) if failing.is_none_or(|f| i < f) => {
                unreachable!("trees before the first failure are never skipped")
            }
            Ok(outcome) => outcomes.push(outcome),
            // a failing tree decides the verdict regardless of later budgets
            Err(e) if e.is_budget() && failing.is_some_and(|f| i > f) => outcomes.push(TreeOutcome::Skipped),
            Err(e) => return Err(e),
        }
    }
    if !opts.exhaustive {
        if let Some(f) = failing {
            outcomes.iter_mut().skip(f + 1).for_each(|o| *o = TreeOutcome::Skipped);
        }
    }
    Ok(TreeChecks { trees: trees.to_vec(), outcomes, failing })
}

/// Concrete colouring refuting goodness at the smallest `n` that fits.
#[derive(Clone, Debug, Serialize)]
pub struct Refutation {
    pub tree: Graph,
    pub n: usize,
    pub h: usize,
    pub k: usize,
    /// `k(pα + nh - 1) + 1`, the claimed value at this `n`.
    pub order: usize,
    pub red_g6: Graph,
    pub blue_g6: Graph,
    /// `None` when the red-side search ran out of budget.
    pub red_avoids_g: Option<bool>,
    pub no_blue_target: bool,
    pub obstruction: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct GoodnessCertificate {
    pub verdict: Verdict,
    pub alpha: u64,
    pub snd: u64,
    pub p: u64,
    pub family: HostFamily,
    pub h: u64,
    pub chi: usize,
    pub s: usize,
    pub m: usize,
    pub claimed_value: ClaimedValue,
    pub trees: Vec<Graph>,
    pub embeddings: Vec<Option<Embedding>>,
    pub failing_tree: Option<Graph>,
    pub refutation: Option<Refutation>,
    pub notes: Vec<String>,
}

impl GoodnessCertificate {
    /// Rebuild every host and re-check every stored embedding; for a
    /// negative verdict, also re-check the refuting colouring.
    pub fn reverify(&self, g: &Graph) -> Result<bool> {
        let k = self.chi - 1;
        for (t, e) in self.trees.iter().zip(&self.embeddings) {
            if let Some(e) = e {
                if !verify_embedding(g, &host_template(self.m, k - 1, t)?, e)? {
                    return Ok(false);
                }
            }
        }
        Ok(match self.verdict {
            Verdict::Good => self.embeddings.iter().all(Option::is_some),
            Verdict::NotGood => {
                let Some(t) = &self.failing_tree else { return Ok(false) };
                let host = host_template(self.m, k - 1, t)?;
                crate::embedding::find_embedding(g, &host).is_none()
                    && self.refutation.as_ref().is_none_or(|r| r.red_avoids_g == Some(true) && r.no_blue_target)
            }
            _ => false,
        })
    }
}

pub fn decide_goodness(prob: &GoodnessProblem, opts: GoodnessOptions) -> Result<GoodnessCertificate> {
    let trees = enumerate_free_trees(prob.snd as usize)?.trees;
    decide_goodness_with_trees(prob, &trees, opts)
}

/// As [`decide_goodness`] with the tree list supplied by the caller.
pub fn decide_goodness_with_trees(
    prob: &GoodnessProblem,
    trees: &[Graph],
    opts: GoodnessOptions,
) -> Result<GoodnessCertificate> {
    let k = prob.k();
    let checks = check_trees(&prob.g, k, trees, opts)?;
    let mut notes = Vec::new();
    if let HostFamily::Multipartite { q, beta: 0 } = prob.family {
        notes.push(format!("beta = 0: K_{{{}}}(alpha; 0) read as K_{q}(alpha)", q + 1));
    }
    let (verdict, failing_tree, refutation) = match checks.failing {
        None => (Verdict::Good, None, None),
        Some(f) => {
            let tree = checks.trees[f].clone();
            let refutation = refute(prob, &tree, opts.budget)?;
            if refutation.is_none() {
                notes.push("no refuting colouring fits within 62 vertices".into());
            }
            (Verdict::NotGood, Some(tree), refutation)
        }
    };
    Ok(GoodnessCertificate {
        verdict,
        alpha: prob.alpha,
        snd: prob.snd,
        p: prob.p,
        family: prob.family,
        h: prob.family.order(prob.alpha),
        chi: prob.profile.chi,
        s: prob.profile.s,
        m: prob.g.order(),
        claimed_value: prob.claimed_value(),
        embeddings: checks.embeddings(),
        trees: checks.trees,
        failing_tree,
        refutation,
        notes,
    })
}

fn refute(prob: &GoodnessProblem, tree: &Graph, budget: SearchBudget) -> Result<Option<Refutation>> {
    let h = prob.family.order(prob.alpha) as usize;
    let k = prob.k();
    let base = (prob.p * prob.alpha) as usize;
    // smallest n whose colouring fits
    if k * (base + h - 1) + 1 > MAX_ORDER {
        return Ok(None);
    }
    let params = NecessityParams::new(prob.alpha as usize, prob.p as usize, k, 1, h, tree.clone())?;
    let c = necessity_coloring(&params)?;
    let red = match red_avoids(&c, &prob.g, budget) {
        Ok((avoids, _)) => Some(avoids),
        Err(e) if e.is_budget() => None,
        Err(e) => return Err(e),
    };
    let blue = verify_no_blue_target_with_budget(&c, &params.target_parts(), budget)?;
    Ok(Some(Refutation {
        tree: tree.clone(),
        n: params.n,
        h,
        k,
        order: params.order(),
        red_g6: c.red().clone(),
        blue_g6: c.blue().clone(),
        red_avoids_g: red,
        no_blue_target: blue.absent,
        obstruction: blue.explanation,
    }))
}

/// Sufficiency-only check for `K_{α_1,...,α_p,n}`: trees of order
/// `min snd(α_i)`.
#[derive(Clone, Debug, Serialize)]
pub struct SufficiencyCertificate {
    pub verdict: Verdict,
    pub part_sizes: Vec<u64>,
    pub snd: u64,
    pub chi: usize,
    pub s: usize,
    pub m: usize,
    pub claimed_value: ClaimedValue,
    pub trees: Vec<Graph>,
    pub embeddings: Vec<Option<Embedding>>,
    pub failing_tree: Option<Graph>,
    pub one_way: bool,
    pub notes: Vec<String>,
}

pub fn decide_goodness_multisize(
    g: &Graph,
    part_sizes: &[u64],
    opts: GoodnessOptions,
) -> Result<SufficiencyCertificate> {
    if part_sizes.is_empty() {
        return Err(Error::invalid("at least one part size required"));
    }
    let snd = part_sizes.iter().map(|&a| snd(a)).collect::<Result<Vec<_>>>()?.into_iter().min().unwrap();
    let profile = check_target(g)?;
    let k = profile.chi - 1;
    let trees = enumerate_free_trees(snd as usize)?.trees;
    let checks = check_trees(g, k, &trees, opts)?;
    let total: u64 = part_sizes.iter().sum();
    let verdict = if checks.failing.is_none() { Verdict::Sufficient } else { Verdict::NotSufficient };
    Ok(SufficiencyCertificate {
        verdict,
        part_sizes: part_sizes.to_vec(),
        snd,
        chi: profile.chi,
        s: profile.s,
        m: g.order(),
        claimed_value: ClaimedValue { slope: k as u64, intercept: k as u64 * (total - 1) + 1 },
        embeddings: checks.embeddings(),
        failing_tree: checks.failing.map(|f| checks.trees[f].clone()),
        trees: checks.trees,
        one_way: true,
        notes: vec!["sufficient condition only: a negative result does not refute goodness".into()],
    })
}
