//! Max-cut reduces to exact-cut: `G` has a cut of at least `k` edges iff
//! `G ⊔ K_{1,m}` has a cut of exactly `k + m` edges. The star can top up any
//! cut of `G` by `m - j` for every `0 <= j <= m`, and contributes at most `m`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{build_family, FamilyParams, Graph};
use crate::oracle::Budget;
use crate::scan::{Count, Space};

/// A graph and a target cut size `k` with `k <= m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutInstance {
    pub graph: Graph,
    pub k: usize,
}

impl CutInstance {
    pub fn new(graph: Graph, k: usize) -> Result<Self> {
        if k > graph.m() {
            return Err(Error::param(format!(
                "target {k} exceeds the {} edges of the graph",
                graph.m()
            )));
        }
        Ok(CutInstance { graph, k })
    }
}

/// `(G, k) -> (G ⊔ K_{1,m}, k + m)`, the star's hub at index `n` and its
/// leaves after it.
pub fn reduce_maxcut_to_exactcut(inst: &CutInstance) -> CutInstance {
    let m = inst.graph.m();
    let star = build_family(&FamilyParams::Star { leaves: m }).expect("stars are always valid");
    let graph = inst.graph.disjoint_union(&star);
    debug_assert_eq!((graph.n(), graph.m()), (inst.graph.n() + m + 1, 2 * m));
    CutInstance { graph, k: inst.k + m }
}

/// `spectrum[c]` is true iff some cut of `g` is crossed by exactly `c` edges.
///
/// A cut value is a sum of one cut value per connected component, so each
/// component is enumerated on its own (its smallest vertex pinned to one
/// side) and the results are combined. `budget` caps the total number of
/// subsets visited across components.
pub fn cut_spectrum(g: &Graph, budget: Budget) -> Result<Vec<bool>> {
    let mut total = vec![false; g.m() + 1];
    total[0] = true;
    let mut reach = 0;
    let mut spent: u128 = 0;
    for comp in g.components() {
        if comp.len() == 1 {
            continue;
        }
        if comp.len() > 64 {
            return Err(Error::BudgetExceeded { budget: budget.0 });
        }
        let h = g.induced_subgraph(&comp)?;
        let space = Space::new(&h, Count::Cut, 1, (1..h.n()).collect());
        spent += space.size();
        if spent > budget.0 as u128 {
            return Err(Error::BudgetExceeded { budget: budget.0 });
        }
        let mut local = vec![false; h.m() + 1];
        space.for_each(|c| local[c as usize] = true);
        let mut next = vec![false; g.m() + 1];
        for (a, _) in total.iter().enumerate().take(reach + 1).filter(|(_, &t)| t) {
            for (b, _) in local.iter().enumerate().filter(|(_, &l)| l) {
                next[a + b] = true;
            }
        }
        reach += h.m();
        total = next;
    }
    Ok(total)
}

/// Whether some cut of `g` is crossed by exactly `k` edges.
pub fn has_cut_exactly(g: &Graph, k: usize, budget: Budget) -> Result<bool> {
    Ok(k <= g.m() && cut_spectrum(g, budget)?[k])
}

/// Whether the maximum cut of `g` has at least `k` edges.
pub fn has_cut_at_least(g: &Graph, k: usize, budget: Budget) -> Result<bool> {
    Ok(max_cut(g, budget)? >= k)
}

pub fn max_cut(g: &Graph, budget: Budget) -> Result<usize> {
    let spectrum = cut_spectrum(g, budget)?;
    Ok(spectrum.iter().rposition(|&b| b).unwrap_or(0))
}
