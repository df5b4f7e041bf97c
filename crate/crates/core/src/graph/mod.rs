//! Dense simple undirected graphs and the two edge-counting primitives
//! `e(X, V \ X)` and `e(G[W])`.

mod edgelist;
pub(crate) mod family;
mod vertex_set;

use std::collections::{BTreeMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use edgelist::{parse_edge_list, write_edge_list};
pub use family::{build_family, FamilyParams};
pub use vertex_set::{Iter, VertexSet};

/// A finite simple undirected graph on vertices `0..n`.
///
/// Adjacency is kept as one bitrow per vertex. Graphs are immutable once built.
/// Serialized as `{"n": .., "edges": [[u, v], ..]}`.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "GraphRepr", try_from = "GraphRepr")]
pub struct Graph {
    rows: Vec<VertexSet>,
    m: usize,
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl From<Graph> for GraphRepr {
    fn from(g: Graph) -> Self {
        GraphRepr {
            n: g.n(),
            edges: g.edges().collect(),
        }
    }
}

impl TryFrom<GraphRepr> for Graph {
    type Error = Error;

    fn try_from(r: GraphRepr) -> Result<Self> {
        Graph::from_edges(r.n, r.edges)
    }
}

/// Degree-level facts used by the sufficient conditions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasicPredicates {
    pub is_eulerian: bool,
    /// `Some(d)` when every vertex has degree `d`.
    pub regular_degree: Option<usize>,
    /// One side of a proper 2-coloring (the side holding vertex 0), when the graph is bipartite.
    pub bipartition: Option<VertexSet>,
    pub degree_histogram: BTreeMap<usize, usize>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            rows: vec![VertexSet::empty(n); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list. Repeated edges collapse; loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::param(format!("edge ({u}, {v}) has an endpoint outside 0..{n}")));
            }
            if u == v {
                return Err(Error::param(format!("self-loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        if !self.rows[u].contains(v) {
            self.rows[u].insert(v);
            self.rows[v].insert(u);
            self.m += 1;
        }
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.rows.iter().map(VertexSet::len).collect()
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.rows[u].contains(v)
    }

    /// Neighbour bitrow of `v` as a single word. Only valid when `n <= 64`.
    #[inline]
    pub(crate) fn row_mask(&self, v: usize) -> u64 {
        self.rows[v].as_mask().expect("row_mask requires n <= 64")
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Closed neighbourhood `N[v]`.
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut s = self.rows[v].clone();
        s.insert(v);
        s
    }

    fn check(&self, s: &VertexSet) -> Result<()> {
        if s.universe() != self.n() {
            return Err(Error::SizeMismatch {
                set: s.universe(),
                graph: self.n(),
            });
        }
        Ok(())
    }

    /// `e(X, V \ X)`: the number of edges with exactly one endpoint in `x`.
    pub fn e_cut(&self, x: &VertexSet) -> Result<usize> {
        self.check(x)?;
        Ok(x.iter()
            .map(|u| self.rows[u].len() - self.rows[u].intersection_len(x))
            .sum())
    }

    /// `e(G[W])`: the number of edges with both endpoints in `w`.
    pub fn e_induced(&self, w: &VertexSet) -> Result<usize> {
        self.check(w)?;
        let twice: usize = w.iter().map(|u| self.rows[u].intersection_len(w)).sum();
        Ok(twice / 2)
    }

    /// Whether no two members of `s` are adjacent.
    pub fn is_independent(&self, s: &VertexSet) -> Result<bool> {
        self.check(s)?;
        Ok(s.iter().all(|u| self.rows[u].is_disjoint(s)))
    }

    pub fn degree_sum(&self, s: &VertexSet) -> Result<usize> {
        self.check(s)?;
        Ok(s.iter().map(|v| self.degree(v)).sum())
    }

    pub fn is_eulerian(&self) -> bool {
        self.rows.iter().all(|r| r.len() % 2 == 0)
    }

    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.rows.first().map_or(0, VertexSet::len);
        self.rows.iter().all(|r| r.len() == d).then_some(d)
    }

    /// A proper 2-coloring by BFS; returns the color-0 class (vertex 0 and
    /// the lowest vertex of each component are colored 0).
    pub fn bipartition(&self) -> Option<VertexSet> {
        let n = self.n();
        let mut color: Vec<Option<bool>> = vec![None; n];
        let mut queue = VecDeque::new();
        for s in 0..n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for v in self.rows[u].iter() {
                    match color[v] {
                        None => {
                            color[v] = Some(!cu);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let side = color
            .iter()
            .enumerate()
            .filter(|(_, c)| **c == Some(false))
            .map(|(v, _)| v);
        Some(VertexSet::from_indices(n, side).expect("indices in range"))
    }

    pub fn degree_histogram(&self) -> BTreeMap<usize, usize> {
        let mut hist = BTreeMap::new();
        for r in &self.rows {
            *hist.entry(r.len()).or_insert(0) += 1;
        }
        hist
    }

    pub fn basic_predicates(&self) -> BasicPredicates {
        BasicPredicates {
            is_eulerian: self.is_eulerian(),
            regular_degree: self.regular_degree(),
            bipartition: self.bipartition(),
            degree_histogram: self.degree_histogram(),
        }
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let offset = self.n();
        let mut g = Graph::empty(offset + other.n());
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(u + offset, v + offset);
        }
        g
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.n();
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::param("relabeling is not a permutation of the vertices"));
        }
        Graph::from_edges(n, self.edges().map(|(u, v)| (perm[u], perm[v])))
    }

    /// Connected components as vertex sets, in order of their smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let n = self.n();
        let mut seen = VertexSet::empty(n);
        let mut out = Vec::new();
        for s in 0..n {
            if seen.contains(s) {
                continue;
            }
            let mut comp = VertexSet::empty(n);
            let mut stack = vec![s];
            seen.insert(s);
            while let Some(u) = stack.pop() {
                comp.insert(u);
                for v in self.rows[u].iter() {
                    if !seen.contains(v) {
                        seen.insert(v);
                        stack.push(v);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// The subgraph induced by `s`, relabeled to `0..|s|` in increasing order.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Graph> {
        self.check(s)?;
        let verts = s.to_vec();
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in verts.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::empty(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            for v in self.rows[u].iter() {
                let j = index[v];
                if j != usize::MAX && j > i {
                    g.add_edge(i, j);
                }
            }
        }
        Ok(g)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Graph(n={}, m={}, edges={:?})",
            self.n(),
            self.m,
            self.edges().collect::<Vec<_>>()
        )
    }
}

/// The two acceptable half-edge counts `⌊m/2⌋` and `⌈m/2⌉`.
pub fn half_targets(m: usize) -> (usize, usize) {
    (m / 2, m.div_ceil(2))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, v: &[usize]) -> VertexSet {
        VertexSet::from_indices(n, v.iter().copied()).unwrap()
    }

    fn chorded(k: usize, l: usize) -> Graph {
        build_family(&FamilyParams::Chorded { k, l }).unwrap()
    }

    #[test]
    fn cut_of_c4_alternate_vertices() {
        let c4 = build_family(&FamilyParams::Cycle { n: 4 }).unwrap();
        assert_eq!(c4.e_cut(&set(4, &[0, 2])).unwrap(), 4);
        assert_eq!(c4.e_cut(&VertexSet::empty(4)).unwrap(), 0);
    }

    #[test]
    fn induced_counts_from_c62_table() {
        let g = chorded(6, 2);
        assert_eq!(g.e_induced(&set(6, &[0, 1, 2, 3])).unwrap(), 5);
        assert_eq!(g.e_induced(&set(6, &[0, 3])).unwrap(), 0);
    }

    #[test]
    fn c10_3_prefix_has_ten_edges() {
        let g = chorded(10, 3);
        assert_eq!(g.e_induced(&set(10, &[0, 1, 2, 3, 4, 5, 6])).unwrap(), 10);
    }

    #[test]
    fn size_mismatch_is_an_error() {
        let g = chorded(6, 2);
        let err = g.e_cut(&VertexSet::empty(5)).unwrap_err();
        assert_eq!(err, Error::SizeMismatch { set: 5, graph: 6 });
        assert!(g.e_induced(&VertexSet::empty(7)).is_err());
    }

    #[test]
    fn predicates_of_named_graphs() {
        let p = chorded(10, 2).basic_predicates();
        assert!(p.is_eulerian);
        assert_eq!(p.regular_degree, Some(4));
        assert!(p.bipartition.is_none());

        let p = chorded(8, 3).basic_predicates();
        assert_eq!(p.bipartition.unwrap().to_vec(), vec![0, 2, 4, 6]);

        let k4 = build_family(&FamilyParams::Complete { n: 4 }).unwrap();
        assert!(!k4.is_eulerian());
        assert_eq!(k4.degree_histogram(), BTreeMap::from([(3, 4)]));
    }

    #[test]
    fn json_round_trip() {
        let g = chorded(8, 3);
        let json = serde_json::to_string(&g).unwrap();
        assert!(json.starts_with("{\"n\":8,\"edges\":[[0,1],"));
        assert_eq!(serde_json::from_str::<Graph>(&json).unwrap(), g);
        assert!(serde_json::from_str::<Graph>(r#"{"n":2,"edges":[[0,2]]}"#).is_err());
    }

    #[test]
    fn disjoint_union_counts() {
        let k3 = build_family(&FamilyParams::Complete { n: 3 }).unwrap();
        let star = build_family(&FamilyParams::Star { leaves: 3 }).unwrap();
        let u = k3.disjoint_union(&star);
        assert_eq!((u.n(), u.m()), (7, 6));
        assert!(u.has_edge(3, 4) && !u.has_edge(2, 3));

        assert_eq!(k3.disjoint_union(&Graph::empty(0)), k3);

        let c4 = build_family(&FamilyParams::Cycle { n: 4 }).unwrap();
        let cc = c4.disjoint_union(&c4);
        assert_eq!((cc.n(), cc.m()), (8, 8));
        assert_eq!(cc.components().len(), 2);
    }

    #[test]
    fn from_edges_rejects_loops_and_range() {
        assert!(Graph::from_edges(3, [(0, 0)]).is_err());
        assert!(Graph::from_edges(3, [(0, 3)]).is_err());
        let g = Graph::from_edges(3, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.m(), 1);
    }

    #[test]
    fn relabel_rejects_non_permutations() {
        let g = chorded(6, 2);
        assert!(g.relabel(&[0, 0, 1, 2, 3, 4]).is_err());
        assert!(g.relabel(&[0, 1, 2]).is_err());
        let h = g.relabel(&[5, 4, 3, 2, 1, 0]).unwrap();
        assert_eq!(h.m(), g.m());
    }

    #[test]
    fn induced_subgraph_relabels() {
        let g = chorded(6, 2);
        let h = g.induced_subgraph(&set(6, &[0, 1, 2, 3])).unwrap();
        assert_eq!((h.n(), h.m()), (4, 5));
    }
}
