//! Closed-form witnesses for the chorded-cycle and grid families.
//!
//! Every constructor builds its sets directly from the family parameters and
//! then recounts them on the generated graph. A construction that does not
//! recount correctly is reported as [`Error::Construction`] instead of being
//! returned.

mod circulant;
mod grid;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use circulant::circulant_witness;
pub use grid::{rect_grid_witness, rect_quotas, tri_a_set, tri_b_set, tri_grid_witness, RectQuotas};

use crate::error::{Error, Result};
use crate::graph::{FamilyParams, Graph, VertexSet};
use crate::oracle::BalanceWitness;

/// Which case of the case analysis produced a result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LemmaId {
    L12,
    L13,
    L14,
    L15,
    L16,
    L17,
    L18,
    L19,
    RectCase1,
    RectCase2,
    RectCase3,
    TriCase1,
    TriCase2,
    TriObstruction,
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FamilyVerdict {
    Balanceable,
    NotBalanceable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionResult {
    pub verdict: FamilyVerdict,
    pub lemma: LemmaId,
    pub witness: Option<BalanceWitness>,
    /// The independent set `I` with degree sum `m/2`, when the construction
    /// goes through one (then `X = I` and `W = V \ I`).
    pub independent_set: Option<VertexSet>,
    pub notes: Vec<String>,
}

impl ConstructionResult {
    pub fn is_balanceable(&self) -> bool {
        self.verdict == FamilyVerdict::Balanceable
    }

    pub(crate) fn not_balanceable(lemma: LemmaId, notes: Vec<String>) -> Self {
        ConstructionResult {
            verdict: FamilyVerdict::NotBalanceable,
            lemma,
            witness: None,
            independent_set: None,
            notes,
        }
    }

    /// Checks an explicit `(X, W)` pair on `g`.
    pub(crate) fn from_pair(
        g: &Graph,
        lemma: LemmaId,
        x: Vec<usize>,
        w: Vec<usize>,
        notes: Vec<String>,
    ) -> Result<Self> {
        let n = g.n();
        let bug = |detail: String| Error::Construction {
            lemma: lemma.to_string(),
            detail,
        };
        let xs = VertexSet::from_indices(n, x.iter().copied()).map_err(|e| bug(format!("X = {x:?}: {e}")))?;
        let ws = VertexSet::from_indices(n, w.iter().copied()).map_err(|e| bug(format!("W = {w:?}: {e}")))?;
        let witness = BalanceWitness::new(g, xs, ws).map_err(|e| bug(format!("X = {x:?}, W = {w:?}: {e}")))?;
        Ok(ConstructionResult {
            verdict: FamilyVerdict::Balanceable,
            lemma,
            witness: Some(witness),
            independent_set: None,
            notes,
        })
    }

    /// Checks that `i` is independent with degree sum `m/2`, then derives
    /// `X = I`, `W = V \ I`.
    pub(crate) fn from_independent(g: &Graph, lemma: LemmaId, i: Vec<usize>, notes: Vec<String>) -> Result<Self> {
        let bug = |detail: String| Error::Construction {
            lemma: lemma.to_string(),
            detail,
        };
        let set = VertexSet::from_indices(g.n(), i.iter().copied()).map_err(|e| bug(format!("I = {i:?}: {e}")))?;
        if set.len() != i.len() {
            return Err(bug(format!("I = {i:?} repeats a vertex")));
        }
        if !g.is_independent(&set)? {
            return Err(bug(format!("I = {i:?} is not independent")));
        }
        let sum = g.degree_sum(&set)?;
        if 2 * sum != g.m() {
            return Err(bug(format!("I = {i:?} has degree sum {sum}, need {}/2", g.m())));
        }
        let rest = set.complement();
        let witness = BalanceWitness::new(g, set.clone(), rest).map_err(|e| bug(format!("I = {i:?}: {e}")))?;
        Ok(ConstructionResult {
            verdict: FamilyVerdict::Balanceable,
            lemma,
            witness: Some(witness),
            independent_set: Some(set),
            notes,
        })
    }
}

/// Scans `candidates` in order and keeps a vertex whenever it lies outside
/// the closed neighborhoods of `reserved` and of everything kept so far.
/// `None` when fewer than `count` vertices qualify.
pub(crate) fn greedy_independent(
    g: &Graph,
    reserved: &[usize],
    count: usize,
    candidates: impl IntoIterator<Item = usize>,
) -> Option<Vec<usize>> {
    let mut blocked = VertexSet::empty(g.n());
    let block = |v: usize, blocked: &mut VertexSet| {
        blocked.insert(v);
        for u in g.neighbors(v).iter() {
            blocked.insert(u);
        }
    };
    for &r in reserved {
        block(r, &mut blocked);
    }
    let mut out = Vec::with_capacity(count);
    for v in candidates {
        if out.len() == count {
            break;
        }
        if !blocked.contains(v) {
            out.push(v);
            block(v, &mut blocked);
        }
    }
    (out.len() == count).then_some(out)
}

/// Runs the construction matching `params`, when the family has one.
///
/// Chorded cycles (including Möbius ladders and antiprisms), rectangular
/// grids and triangular grids are covered; anything else is a parameter error.
pub fn family_witness(params: &FamilyParams) -> Result<ConstructionResult> {
    params.validate()?;
    if let Some((k, l)) = params.as_chorded() {
        return circulant_witness(k, l);
    }
    match params {
        FamilyParams::RectGrid { rows, cols } => rect_grid_witness(*rows, *cols),
        FamilyParams::TriGrid { h } => tri_grid_witness(*h),
        other => Err(Error::param(format!("no closed-form construction for {other}"))),
    }
}
