//! Ramsey goodness of complete multipartite graphs with one large part.
//!
//! `K_{p+1}(alpha; n)` is `G`-good for large `n` (given `s(G) = 1`,
//! `chi(G) = k + 1` and `p >= snd(alpha)`) exactly when `G` embeds in
//! `mT + K_{k-1}(m)` for every tree `T` on `snd(alpha)` vertices, where
//! `m = v(G)`. This crate decides that condition with checkable witnesses,
//! builds the two-colourings that refute goodness when it fails, and
//! computes small Ramsey numbers exhaustively as ground truth.

pub mod canon;
pub mod colorings;
pub mod embedding;
pub mod error;
pub mod goodness;
pub mod graph;
pub mod graph6;
pub mod invariants;
pub mod ramsey;
pub mod trees;

pub use canon::{canonical_form, CanonicalForm};
pub use colorings::{NecessityParams, TwoColoring};
pub use embedding::{find_embedding, verify_embedding, Embedding, PartAssignment, SearchBudget};
pub use error::{Error, Hypothesis, Result};
pub use goodness::{GoodnessCertificate, GoodnessProblem, HostFamily, Verdict};
pub use graph::{Graph, PartSizes, MAX_ORDER};
pub use invariants::ChromaticProfile;
pub use ramsey::{ArrowingResult, RamseyValue};
pub use trees::TreeSet;
