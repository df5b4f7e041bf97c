//! Exact decision of balanceability: a graph with `m` edges is balanceable iff
//! it has a cut crossed by `⌊m/2⌋` or `⌈m/2⌉` edges and a vertex set inducing
//! `⌊m/2⌋` or `⌈m/2⌉` edges. Both halves are found by exhaustive search.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::conditions::parity_obstruction;
use crate::error::{Error, Result};
use crate::graph::{half_targets, Graph, VertexSet};
use crate::scan::{Count, Space};

/// Cap on the number of subsets (or search nodes) an exhaustive search may visit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget(pub u64);

impl Budget {
    pub const DEFAULT_LOG2: u32 = 28;

    pub fn from_log2(bits: u32) -> Self {
        Budget(1u64.checked_shl(bits).unwrap_or(u64::MAX))
    }

    pub fn unlimited() -> Self {
        Budget(u64::MAX)
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::from_log2(Self::DEFAULT_LOG2)
    }
}

/// A certified pair `(X, W)`: `X` is one side of a half-cut and `W` induces
/// half of the edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BalanceWitness {
    pub cut_side: VertexSet,
    pub induced_set: VertexSet,
    pub cut_edges: usize,
    pub induced_edges: usize,
}

impl BalanceWitness {
    /// Counts both halves on `g` and checks them against `⌊m/2⌋, ⌈m/2⌉`.
    pub fn new(g: &Graph, cut_side: VertexSet, induced_set: VertexSet) -> Result<Self> {
        let cut_edges = g.e_cut(&cut_side)?;
        let induced_edges = g.e_induced(&induced_set)?;
        let w = BalanceWitness {
            cut_side,
            induced_set,
            cut_edges,
            induced_edges,
        };
        if !w.verify(g) {
            let (lo, hi) = half_targets(g.m());
            return Err(Error::param(format!(
                "witness counts e(X,Y)={cut_edges}, e(G[W])={induced_edges} miss the targets {{{lo}, {hi}}}"
            )));
        }
        Ok(w)
    }

    /// Recomputes both counts on `g`; true iff they match the stored values
    /// and hit the half-edge targets.
    pub fn verify(&self, g: &Graph) -> bool {
        let (lo, hi) = half_targets(g.m());
        let ok = |v: usize| v == lo || v == hi;
        matches!(g.e_cut(&self.cut_side), Ok(c) if c == self.cut_edges && ok(c))
            && matches!(g.e_induced(&self.induced_set), Ok(c) if c == self.induced_edges && ok(c))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ObstructionKind {
    NoHalfCut,
    NoHalfInduced,
    /// Eulerian, `m` even and `m/2` odd: no cut can have `m/2` edges.
    ParityEulerian,
    Both,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Obstruction {
    pub kind: ObstructionKind,
    pub detail: String,
}

impl fmt::Display for ObstructionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ObstructionKind::NoHalfCut => "no half-cut",
            ObstructionKind::NoHalfInduced => "no induced half-set",
            ObstructionKind::ParityEulerian => "ParityEulerian",
            ObstructionKind::Both => "no half-cut and no induced half-set",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", content = "detail")]
pub enum Verdict {
    Balanceable(BalanceWitness),
    NotBalanceable(Obstruction),
    /// The search budget ran out before either half was settled.
    Undecided(String),
}

impl Verdict {
    pub fn is_balanceable(&self) -> bool {
        matches!(self, Verdict::Balanceable(_))
    }

    pub fn is_not_balanceable(&self) -> bool {
        matches!(self, Verdict::NotBalanceable(_))
    }

    pub fn is_undecided(&self) -> bool {
        matches!(self, Verdict::Undecided(_))
    }

    /// `Some(true)` / `Some(false)` for a decided verdict, `None` when undecided.
    pub fn decided(&self) -> Option<bool> {
        match self {
            Verdict::Balanceable(_) => Some(true),
            Verdict::NotBalanceable(_) => Some(false),
            Verdict::Undecided(_) => None,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Balanceable(_) => write!(f, "Balanceable"),
            Verdict::NotBalanceable(o) => write!(f, "NotBalanceable ({})", o.kind),
            Verdict::Undecided(reason) => write!(f, "Undecided ({reason})"),
        }
    }
}

fn cut_space(g: &Graph) -> Space {
    Space::new(g, Count::Cut, 1, (1..g.n()).collect())
}

fn induced_space(g: &Graph) -> Space {
    Space::new(g, Count::Induced, 0, (0..g.n()).collect())
}

fn search(g: &Graph, space: impl FnOnce(&Graph) -> Space, budget: Budget) -> Result<Option<VertexSet>> {
    let n = g.n();
    if g.m() == 0 {
        return Ok(Some(VertexSet::empty(n)));
    }
    if n > 64 {
        return Err(Error::BudgetExceeded { budget: budget.0 });
    }
    let (lo, hi) = half_targets(g.m());
    let sp = space(g);
    let found = sp.find_min(lo as i64, hi as i64, 0..sp.blocks(), Some(budget.0))?;
    Ok(found.map(|m| VertexSet::from_mask(n, m).expect("mask within universe")))
}

/// The numerically smallest `X` (vertex 0 pinned inside) with
/// `e(X, V \ X) ∈ {⌊m/2⌋, ⌈m/2⌉}`, or `None` when no such cut exists.
///
/// Visits at most `2^(n-1)` subsets; [`Error::BudgetExceeded`] means the
/// search gave up, which is different from `Ok(None)`. Edgeless graphs get
/// the empty set.
pub fn find_half_cut(g: &Graph, budget: Budget) -> Result<Option<VertexSet>> {
    search(g, cut_space, budget)
}

/// The numerically smallest `W` with `e(G[W]) ∈ {⌊m/2⌋, ⌈m/2⌉}`, or `None`.
pub fn find_half_induced(g: &Graph, budget: Budget) -> Result<Option<VertexSet>> {
    search(g, induced_space, budget)
}

fn sharded(g: &Graph, space: impl FnOnce(&Graph) -> Space, budget: Budget, shards: usize) -> Result<Option<VertexSet>> {
    let n = g.n();
    if g.m() == 0 {
        return Ok(Some(VertexSet::empty(n)));
    }
    if n > 64 {
        return Err(Error::BudgetExceeded { budget: budget.0 });
    }
    let sp = space(g);
    if sp.size() > budget.0 as u128 {
        return Err(Error::BudgetExceeded { budget: budget.0 });
    }
    let (lo, hi) = half_targets(g.m());
    let blocks = sp.blocks();
    let shards = (shards.max(1) as u64).min(blocks);
    let ranges: Vec<_> = (0..shards)
        .map(|i| (i * blocks / shards)..((i + 1) * blocks / shards))
        .collect();
    let hits: Vec<Option<u64>> = ranges
        .into_par_iter()
        .map(|r| {
            sp.find_min(lo as i64, hi as i64, r, None)
                .expect("no budget inside a shard")
        })
        .collect();
    let best = hits.into_iter().flatten().min();
    Ok(best.map(|m| VertexSet::from_mask(n, m).expect("mask within universe")))
}

/// [`find_half_cut`] with the subset space split into `shards` contiguous
/// ranges searched in parallel.
///
/// The whole space must fit in the budget up front, so the answer is the same
/// for every shard count (and equals the sequential answer).
pub fn find_half_cut_sharded(g: &Graph, budget: Budget, shards: usize) -> Result<Option<VertexSet>> {
    sharded(g, cut_space, budget, shards)
}

pub fn find_half_induced_sharded(g: &Graph, budget: Budget, shards: usize) -> Result<Option<VertexSet>> {
    sharded(g, induced_space, budget, shards)
}

fn combine(g: &Graph, cut: Result<Option<VertexSet>>, induced: Result<Option<VertexSet>>) -> Verdict {
    let (lo, hi) = half_targets(g.m());
    let targets = if lo == hi {
        format!("{lo}")
    } else {
        format!("{lo} or {hi}")
    };
    match (cut, induced) {
        (Ok(Some(x)), Ok(Some(w))) => {
            Verdict::Balanceable(BalanceWitness::new(g, x, w).expect("search results re-verify"))
        }
        (Ok(None), Ok(None)) => Verdict::NotBalanceable(Obstruction {
            kind: ObstructionKind::Both,
            detail: format!("no cut and no induced subgraph has {targets} edges"),
        }),
        (Ok(None), _) => Verdict::NotBalanceable(Obstruction {
            kind: ObstructionKind::NoHalfCut,
            detail: format!("no cut is crossed by {targets} edges"),
        }),
        (_, Ok(None)) => Verdict::NotBalanceable(Obstruction {
            kind: ObstructionKind::NoHalfInduced,
            detail: format!("no induced subgraph has {targets} edges"),
        }),
        (Err(e), _) | (_, Err(e)) => Verdict::Undecided(e.to_string()),
    }
}

/// Decides balanceability exactly, within `budget` subsets per search.
///
/// The parity obstruction is checked first and needs no search. Otherwise both
/// searches run; a half proved absent gives `NotBalanceable` even when the
/// other half ran out of budget.
pub fn decide_balanceable(g: &Graph, budget: Budget) -> Verdict {
    if let Some(o) = parity_obstruction(g) {
        return Verdict::NotBalanceable(o);
    }
    combine(g, find_half_cut(g, budget), find_half_induced(g, budget))
}

/// [`decide_balanceable`] using the sharded searches.
pub fn decide_balanceable_sharded(g: &Graph, budget: Budget, shards: usize) -> Verdict {
    if let Some(o) = parity_obstruction(g) {
        return Verdict::NotBalanceable(o);
    }
    combine(
        g,
        find_half_cut_sharded(g, budget, shards),
        find_half_induced_sharded(g, budget, shards),
    )
}
