//! One-sided sufficient conditions for (non-)balanceability.
//!
//! None of these is complete. A graph on which every condition is
//! inapplicable can still go either way, and [`crate::decide_balanceable`]
//! remains the ground truth.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::oracle::{Budget, Obstruction, ObstructionKind};

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

struct IndependentSearch<'g> {
    g: &'g Graph,
    nodes: u64,
    budget: u64,
    chosen: Vec<usize>,
}

impl IndependentSearch<'_> {
    fn run(&mut self, mut cand: VertexSet, need: usize) -> Result<bool> {
        loop {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::BudgetExceeded { budget: self.budget });
            }
            if need == 0 {
                return Ok(true);
            }
            let (mut total, mut div) = (0, 0);
            for v in cand.iter() {
                let d = self.g.degree(v);
                total += d;
                div = gcd(div, d);
            }
            if total < need || div == 0 || !need.is_multiple_of(div) {
                return Ok(false);
            }
            let v = cand.iter().next().expect("total > 0 means a candidate");
            cand.remove(v);
            let d = self.g.degree(v);
            if d <= need {
                let next = cand.difference(self.g.neighbors(v));
                self.chosen.push(v);
                if self.run(next, need - d)? {
                    return Ok(true);
                }
                self.chosen.pop();
            }
        }
    }
}

/// Lexicographically smallest independent set `I` (as a sorted list) with
/// `Σ_{v∈I} d(v) = target`, ignoring isolated vertices.
///
/// Exact branch and bound: a branch is cut when the target is overshot, when
/// the remaining candidates' degrees cannot reach it, or when their gcd does
/// not divide what is left. Each search node counts against `budget`.
pub fn independent_degree_sum(g: &Graph, target: usize, budget: Budget) -> Result<Option<VertexSet>> {
    let cand = VertexSet::from_indices(g.n(), (0..g.n()).filter(|&v| g.degree(v) > 0))?;
    let mut s = IndependentSearch {
        g,
        nodes: 0,
        budget: budget.0,
        chosen: Vec::new(),
    };
    if s.run(cand, target)? {
        Ok(Some(VertexSet::from_indices(g.n(), s.chosen)?))
    } else {
        Ok(None)
    }
}

/// Smallest vertex of degree exactly `m/2`; `None` when `m` is odd or no
/// vertex qualifies.
pub fn big_vertex(g: &Graph) -> Option<usize> {
    let m = g.m();
    if m % 2 == 1 {
        return None;
    }
    (0..g.n()).find(|&v| g.degree(v) == m / 2)
}

/// Eulerian graphs with `m/2` odd have no cut crossed by `m/2` edges, since
/// every cut of an eulerian graph is even.
pub fn parity_obstruction(g: &Graph) -> Option<Obstruction> {
    let m = g.m();
    (g.is_eulerian() && m % 4 == 2).then(|| Obstruction {
        kind: ObstructionKind::ParityEulerian,
        detail: format!("every vertex has even degree and m/2 = {} is odd", m / 2),
    })
}

/// True iff every `d`-regular graph on `n` vertices is non-balanceable by the
/// parity argument: `d ≡ n ≡ 2 (mod 4)`, or `d = 4a` with `a` odd and `n` odd.
///
/// Requires `d` even, `d·n/2` even and `d < n`.
pub fn regular_obstruction(d: usize, n: usize) -> Result<bool> {
    if d % 2 == 1 {
        return Err(Error::param(format!("degree {d} must be even")));
    }
    if (d * n / 2) % 2 == 1 {
        return Err(Error::param(format!(
            "a {d}-regular graph on {n} vertices has an odd number of edges"
        )));
    }
    if d >= n {
        return Err(Error::param(format!("degree {d} must be below the order {n}")));
    }
    Ok((d % 4 == 2 && n % 4 == 2) || (d.is_multiple_of(4) && (d / 4) % 2 == 1 && n % 2 == 1))
}

/// [`regular_obstruction`] on a concrete graph; `None` when the graph is not
/// regular or the arithmetic preconditions fail.
pub fn regular_obstruction_for(g: &Graph) -> Option<bool> {
    let d = g.regular_degree()?;
    regular_obstruction(d, g.n()).ok()
}

/// For a bipartite regular graph on `4t` vertices, the first `t` vertices of
/// the part containing vertex 0. Their degree sum is `t·d = m/2`.
pub fn bipartite_regular_4n(g: &Graph) -> Option<VertexSet> {
    let n = g.n();
    if n == 0 || !n.is_multiple_of(4) {
        return None;
    }
    g.regular_degree()?;
    let part = g.bipartition()?;
    VertexSet::from_indices(n, part.iter().take(n / 4)).ok()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ConditionId {
    DegreeHalfEdges,
    BigVertex,
    ParityEulerian,
    RegularObstruction,
    BipartiteRegular4n,
}

impl ConditionId {
    pub const ALL: [ConditionId; 5] = [
        ConditionId::DegreeHalfEdges,
        ConditionId::BigVertex,
        ConditionId::ParityEulerian,
        ConditionId::RegularObstruction,
        ConditionId::BipartiteRegular4n,
    ];
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    ImpliesBalanceable,
    ImpliesNotBalanceable,
    Inapplicable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionReport {
    pub id: ConditionId,
    pub outcome: Outcome,
    /// The set `I` (a singleton for [`ConditionId::BigVertex`]).
    pub witness: Option<VertexSet>,
    pub detail: String,
}

impl ConditionReport {
    fn inapplicable(id: ConditionId, detail: impl Into<String>) -> Self {
        ConditionReport {
            id,
            outcome: Outcome::Inapplicable,
            witness: None,
            detail: detail.into(),
        }
    }

    fn balanceable(id: ConditionId, witness: VertexSet, detail: impl Into<String>) -> Self {
        ConditionReport {
            id,
            outcome: Outcome::ImpliesBalanceable,
            witness: Some(witness),
            detail: detail.into(),
        }
    }

    fn not_balanceable(id: ConditionId, detail: impl Into<String>) -> Self {
        ConditionReport {
            id,
            outcome: Outcome::ImpliesNotBalanceable,
            witness: None,
            detail: detail.into(),
        }
    }
}

pub fn evaluate(g: &Graph, id: ConditionId, budget: Budget) -> ConditionReport {
    let m = g.m();
    match id {
        ConditionId::DegreeHalfEdges => {
            if m % 2 == 1 {
                return ConditionReport::inapplicable(id, format!("m = {m} is odd"));
            }
            match independent_degree_sum(g, m / 2, budget) {
                Ok(Some(i)) => {
                    ConditionReport::balanceable(id, i, format!("independent set with degree sum {}", m / 2))
                }
                Ok(None) => ConditionReport::inapplicable(id, format!("no independent set has degree sum {}", m / 2)),
                Err(e) => ConditionReport::inapplicable(id, e.to_string()),
            }
        }
        ConditionId::BigVertex => match big_vertex(g) {
            Some(v) => ConditionReport::balanceable(
                id,
                VertexSet::from_indices(g.n(), [v]).expect("vertex in range"),
                format!("vertex {v} has degree {}", m / 2),
            ),
            None => ConditionReport::inapplicable(id, "no vertex of degree m/2"),
        },
        ConditionId::ParityEulerian => match parity_obstruction(g) {
            Some(o) => ConditionReport::not_balanceable(id, o.detail),
            None => ConditionReport::inapplicable(id, "not eulerian, or m/2 is not an odd integer"),
        },
        ConditionId::RegularObstruction => match (g.regular_degree(), regular_obstruction_for(g)) {
            (Some(d), Some(true)) => ConditionReport::not_balanceable(id, format!("{d}-regular on {} vertices", g.n())),
            (Some(d), _) => {
                ConditionReport::inapplicable(id, format!("(d, n) = ({d}, {}) is not an obstructed pair", g.n()))
            }
            (None, _) => ConditionReport::inapplicable(id, "not regular"),
        },
        ConditionId::BipartiteRegular4n => match bipartite_regular_4n(g) {
            Some(i) => ConditionReport::balanceable(id, i, format!("bipartite regular on {} vertices", g.n())),
            None => ConditionReport::inapplicable(id, "not bipartite regular on 4t vertices"),
        },
    }
}

/// Every condition, in [`ConditionId::ALL`] order.
pub fn evaluate_all(g: &Graph, budget: Budget) -> Vec<ConditionReport> {
    ConditionId::ALL.iter().map(|&id| evaluate(g, id, budget)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_family;
    use crate::oracle::decide_balanceable;
    use proptest::prelude::*;

    fn fam(s: &str) -> Graph {
        build_family(&s.parse().unwrap()).unwrap()
    }

    fn ids(g: &Graph, target: usize) -> Option<Vec<usize>> {
        independent_degree_sum(g, target, Budget::default())
            .unwrap()
            .map(|s| s.to_vec())
    }

    #[test]
    fn independent_degree_sum_examples() {
        assert_eq!(ids(&fam("cycle:8"), 4), Some(vec![0, 2]));
        assert_eq!(ids(&fam("chorded:8,4"), 6), Some(vec![0, 2]));
        assert_eq!(ids(&fam("complete:5"), 5), None);
        assert_eq!(ids(&fam("cycle:5"), 6), None);
        assert_eq!(ids(&fam("cycle:5"), 0), Some(vec![]));
    }

    #[test]
    fn grid_4x8_has_half_degree_independent_set() {
        let g = fam("grid:4x8");
        assert_eq!(g.m(), 52);
        let i = independent_degree_sum(&g, 26, Budget::default()).unwrap().unwrap();
        assert!(g.is_independent(&i).unwrap());
        assert_eq!(g.degree_sum(&i).unwrap(), 26);
    }

    #[test]
    fn isolated_vertices_are_skipped() {
        let g = Graph::from_edges(5, [(2, 3), (3, 4)]).unwrap();
        assert_eq!(ids(&g, 1), Some(vec![2]));
    }

    #[test]
    fn budget_counts_nodes() {
        let g = fam("complete:5");
        assert!(matches!(
            independent_degree_sum(&g, 8, Budget(1)),
            Err(Error::BudgetExceeded { budget: 1 })
        ));
    }

    #[test]
    fn big_vertex_examples() {
        assert_eq!(big_vertex(&fam("wheel:4")), Some(4));
        assert_eq!(big_vertex(&fam("cycle:4")), Some(0));
        assert_eq!(big_vertex(&fam("complete:4")), Some(0));
        assert_eq!(big_vertex(&fam("complete:3")), None);
        assert_eq!(big_vertex(&fam("cycle:6")), None);
    }

    #[test]
    fn parity_examples() {
        assert!(parity_obstruction(&fam("cycle:6")).is_some());
        assert!(parity_obstruction(&fam("tri:4")).is_some());
        assert!(parity_obstruction(&fam("cycle:8")).is_none());
        assert!(parity_obstruction(&fam("cycle:5")).is_none());
    }

    #[test]
    fn regular_obstruction_examples() {
        assert!(regular_obstruction(2, 6).unwrap());
        assert!(regular_obstruction(4, 5).unwrap());
        assert!(!regular_obstruction(4, 8).unwrap());
        assert!(regular_obstruction(3, 8).is_err());
        assert!(regular_obstruction(2, 2).is_err());
        assert!(regular_obstruction(6, 7).is_err());
        assert_eq!(regular_obstruction_for(&fam("complete:5")), Some(true));
        assert_eq!(regular_obstruction_for(&fam("wheel:5")), None);
    }

    #[test]
    fn bipartite_regular_examples() {
        let g = fam("chorded:8,3");
        let i = bipartite_regular_4n(&g).unwrap();
        assert_eq!(i.to_vec(), vec![0, 2]);
        assert_eq!(g.degree_sum(&i).unwrap() * 2, g.m());
        assert_eq!(bipartite_regular_4n(&fam("cycle:8")).unwrap().len(), 2);
        assert_eq!(bipartite_regular_4n(&fam("complete:4")), None);
        assert_eq!(bipartite_regular_4n(&fam("cycle:6")), None);
    }

    #[test]
    fn reports_for_wheel() {
        let reports = evaluate_all(&fam("wheel:4"), Budget::default());
        assert_eq!(reports.len(), 5);
        assert_eq!(reports[1].outcome, Outcome::ImpliesBalanceable);
        assert_eq!(reports[1].witness.as_ref().unwrap().to_vec(), vec![4]);
        assert_eq!(reports[2].outcome, Outcome::Inapplicable);
        for r in &reports {
            assert_eq!(r.witness.is_some(), r.outcome == Outcome::ImpliesBalanceable);
        }
        let json = serde_json::to_string(&reports).unwrap();
        assert!(json.contains("\"implies-balanceable\""));
        assert_eq!(serde_json::from_str::<Vec<ConditionReport>>(&json).unwrap(), reports);
    }

    #[test]
    fn reports_for_k5() {
        let reports = evaluate_all(&fam("complete:5"), Budget::default());
        let out: Vec<_> = reports.iter().map(|r| r.outcome).collect();
        assert_eq!(
            out,
            [
                Outcome::Inapplicable,
                Outcome::Inapplicable,
                Outcome::ImpliesNotBalanceable,
                Outcome::ImpliesNotBalanceable,
                Outcome::Inapplicable
            ]
        );
    }

    #[test]
    fn regular_arithmetic_matches_parity() {
        for d in (0..=12).step_by(2) {
            for n in d + 1..=40 {
                let Ok(obstructed) = regular_obstruction(d, n) else {
                    continue;
                };
                let m = d * n / 2;
                assert_eq!(obstructed, m % 4 == 2, "d={d} n={n}");
            }
        }
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (1usize..=10, proptest::collection::vec(any::<bool>(), 45)).prop_map(|(n, bits)| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    }

    proptest! {
        #[test]
        fn half_degree_set_implies_balanceable(g in arb_graph()) {
            let m = g.m();
            if m % 2 == 0 {
                if let Some(i) = independent_degree_sum(&g, m / 2, Budget::default()).unwrap() {
                    prop_assert!(g.is_independent(&i).unwrap());
                    prop_assert_eq!(g.degree_sum(&i).unwrap(), m / 2);
                    prop_assert!(decide_balanceable(&g, Budget::default()).is_balanceable());
                }
            }
        }

        #[test]
        fn big_vertex_is_a_singleton_half_set(g in arb_graph()) {
            if let Some(v) = big_vertex(&g).filter(|_| g.m() > 0) {
                let i = independent_degree_sum(&g, g.m() / 2, Budget::default()).unwrap().unwrap();
                // the canonical set is no larger than the singleton and starts no later
                prop_assert!(i.to_vec()[0] <= v);
                prop_assert!(decide_balanceable(&g, Budget::default()).is_balanceable());
            }
        }

        #[test]
        fn parity_matches_exhaustive_cut(g in arb_graph()) {
            if parity_obstruction(&g).is_some() {
                prop_assert_eq!(crate::oracle::find_half_cut(&g, Budget::default()).unwrap(), None);
            }
        }

        #[test]
        fn bipartite_set_has_half_degree(g in arb_graph()) {
            if let Some(i) = bipartite_regular_4n(&g) {
                prop_assert!(g.is_independent(&i).unwrap());
                prop_assert_eq!(2 * g.degree_sum(&i).unwrap(), g.m());
            }
        }
    }
}
