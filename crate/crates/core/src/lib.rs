//! Balanceable graphs: exact decision, sufficient conditions and explicit
//! constructions for circulant and grid families.
//!
//! A graph `G` with `m` edges is *balanceable* when every 2-coloring of a
//! large enough complete graph with enough edges of each color contains a copy
//! of `G` with `⌊m/2⌋` red and `⌈m/2⌉` blue edges (or vice versa). That holds
//! exactly when `G` has a cut and an induced subgraph each carrying half of
//! the edges, which is what [`decide_balanceable`] searches for.
//!
//! ```
//! use balanceable::{build_family, decide_balanceable, Budget};
//!
//! let g = build_family(&"chorded:6,2".parse().unwrap()).unwrap();
//! let v = decide_balanceable(&g, Budget::default());
//! assert_eq!(v.to_string(), "NotBalanceable (no induced half-set)");
//! ```

pub mod conditions;
mod error;
pub mod graph;
pub mod oracle;
pub mod ramsey;
pub mod reduction;
mod scan;
pub mod witness;

pub use error::{Error, Result};
pub use graph::{build_family, half_targets, parse_edge_list, write_edge_list, FamilyParams, Graph, VertexSet};
pub use oracle::{
    decide_balanceable, decide_balanceable_sharded, find_half_cut, find_half_cut_sharded, find_half_induced,
    find_half_induced_sharded, BalanceWitness, Budget, Obstruction, ObstructionKind, Verdict,
};
pub use witness::{family_witness, ConstructionResult, FamilyVerdict, LemmaId};
