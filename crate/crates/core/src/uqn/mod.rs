//! The negative half of the quantized enveloping algebra of type A in a
//! finite window: weight spaces of the free algebra modulo the quantum Serre
//! ideal, PBW monomials indexed by multisegments, the bar involution, and
//! the canonical-basis transition matrix with its inverse.
//!
//! Two realizations are kept side by side. [`free`] works in the free
//! algebra and constructs weight spaces as explicit complements of the Serre
//! span. [`canonical`] embeds the algebra into the quantum shuffle algebra,
//! where the Serre relations hold identically; the transition-matrix
//! computation runs there for speed, and the two routes are compared on
//! small weights in the test suite.
//!
//! Everything is a pure function of its inputs, so weight spaces can be
//! processed concurrently by callers.

pub mod canonical;
pub mod free;

use std::collections::BTreeMap;

use thiserror::Error;

use crate::multisegments::{multisegments_with_dim_vector, Multisegment, Segment};

pub use canonical::{canonical_k, KMatrix};
pub use free::{bar_element, pbw_expand, weight_basis, FreeElement, WeightSpace, Word};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum UqnError {
    #[error("window rank must be at least 2, max degree at least 1")]
    BadWindow,
    #[error("segment {0} does not fit in window of rank {1}")]
    SegmentOutOfWindow(Segment, usize),
    #[error("weight exceeds the window's degree bound")]
    WeightTooLarge,
    #[error("PBW monomials are not independent at weight {0:?}; convention bug")]
    PbwDependent(Vec<u64>),
    #[error("bar transition is not unitriangular at weight {0:?}; convention bug")]
    BarNotTriangular(Vec<u64>),
    #[error("bar-invariance correction failed at weight {0:?}; convention bug")]
    CorrectionFailed(Vec<u64>),
    #[error("transition entry is not a Laurent polynomial; convention bug")]
    NotLaurent,
}

/// A finite window of the infinite-rank algebra: simple roots are indexed
/// by `1..=rank-1` and weights are capped at `max_degree`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Window {
    rank: usize,
    max_degree: usize,
}

impl Window {
    pub fn new(rank: usize, max_degree: usize) -> Result<Self, UqnError> {
        if rank < 2 || max_degree == 0 {
            return Err(UqnError::BadWindow);
        }
        Ok(Window { rank, max_degree })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    /// Number of simple-root letters.
    pub fn letters(&self) -> usize {
        self.rank - 1
    }

    pub fn contains_segment(&self, s: &Segment) -> bool {
        s.start() >= 1 && (s.end() as usize) <= self.letters()
    }
}

/// Weight: multiplicity of each simple root `alpha_1..alpha_{rank-1}`.
pub type Weight = Vec<u64>;

pub fn weight_degree(w: &Weight) -> u64 {
    w.iter().sum()
}

/// Weight of a multisegment inside a window.
pub fn weight_of_multisegment(window: &Window, m: &Multisegment) -> Result<Weight, UqnError> {
    let mut w = vec![0u64; window.letters()];
    for (s, c) in m.iter() {
        if !window.contains_segment(s) {
            return Err(UqnError::SegmentOutOfWindow(*s, window.rank));
        }
        for p in s.start()..=s.end() {
            w[(p - 1) as usize] += c;
        }
    }
    Ok(w)
}

/// Multisegments of a weight, sorted ascending in the degeneration-refining
/// order (sum of squared lengths, then segment lists). This is the index
/// order shared by every transition matrix.
pub fn multisegments_of_weight(
    window: &Window,
    weight: &Weight,
) -> Result<Vec<Multisegment>, UqnError> {
    if weight.len() != window.letters() {
        return Err(UqnError::BadWindow);
    }
    if weight_degree(weight) > window.max_degree as u64 {
        return Err(UqnError::WeightTooLarge);
    }
    let dim: BTreeMap<i64, u64> = weight
        .iter()
        .enumerate()
        .filter(|(_, &c)| c > 0)
        .map(|(i, &c)| ((i + 1) as i64, c))
        .collect();
    let mut out = multisegments_with_dim_vector(&dim);
    out.sort_by_key(|m| m.order_key());
    Ok(out)
}

/// Cartan pairing of simple roots in type A.
pub(crate) fn cartan(a: u8, b: u8) -> i64 {
    if a == b {
        2
    } else if a.abs_diff(b) == 1 {
        -1
    } else {
        0
    }
}
