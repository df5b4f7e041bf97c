//! Balanced copies in 2-colored complete graphs, and `bal(n, G)` for tiny `n`.
//!
//! `bal(n, G)` is the least integer `b` such that every red/blue coloring of
//! `K_n` with more than `b` edges of each color contains a copy of `G` whose
//! red edges number `⌊m/2⌋` or `⌈m/2⌉`.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{half_targets, Graph};

/// Largest `n` whose edge slots fit a `u64`.
pub const MAX_COLORING_ORDER: usize = 11;
/// Largest `n` for which [`bal_number`] enumerates colorings.
pub const MAX_BAL_ORDER: usize = 7;

/// A red/blue coloring of `E(K_n)`. Bit `s` of `red` is slot `s`, slots
/// listing pairs `(u, v)`, `u < v`, lexicographically; unset bits are blue.
/// Serialized as `{"n": .., "red": "0x.."}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "ColoringRepr", try_from = "ColoringRepr")]
pub struct Coloring {
    n: usize,
    red: u64,
}

#[derive(Serialize, Deserialize)]
struct ColoringRepr {
    n: usize,
    red: String,
}

impl From<Coloring> for ColoringRepr {
    fn from(c: Coloring) -> Self {
        ColoringRepr {
            n: c.n,
            red: c.to_hex(),
        }
    }
}

impl TryFrom<ColoringRepr> for Coloring {
    type Error = Error;

    fn try_from(r: ColoringRepr) -> Result<Self> {
        Coloring::from_hex(r.n, &r.red)
    }
}

fn slot_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

impl Coloring {
    pub fn new(n: usize, red: u64) -> Result<Self> {
        if n > MAX_COLORING_ORDER {
            return Err(Error::param(format!(
                "colorings support n <= {MAX_COLORING_ORDER}, got {n}"
            )));
        }
        let slots = slot_count(n);
        if slots < 64 && red >> slots != 0 {
            return Err(Error::param(format!(
                "red mask {red:#x} has bits beyond the {slots} slots of K_{n}"
            )));
        }
        Ok(Coloring { n, red })
    }

    pub fn all_blue(n: usize) -> Result<Self> {
        Self::new(n, 0)
    }

    pub fn all_red(n: usize) -> Result<Self> {
        Self::new(n, Self::full_mask(n))
    }

    fn full_mask(n: usize) -> u64 {
        let s = slot_count(n);
        if s == 64 {
            u64::MAX
        } else {
            (1u64 << s) - 1
        }
    }

    /// Parses a hex mask, with or without a `0x` prefix.
    pub fn from_hex(n: usize, hex: &str) -> Result<Self> {
        let digits = hex.trim().trim_start_matches("0x").trim_start_matches("0X");
        let red =
            u64::from_str_radix(digits, 16).map_err(|e| Error::param(format!("bad hex coloring {hex:?}: {e}")))?;
        Self::new(n, red)
    }

    pub fn to_hex(&self) -> String {
        format!("{:#x}", self.red)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn red_mask(&self) -> u64 {
        self.red
    }

    pub fn slots(&self) -> usize {
        slot_count(self.n)
    }

    /// Slot index of the pair `{u, v}`.
    pub fn slot(&self, u: usize, v: usize) -> usize {
        let (u, v) = if u < v { (u, v) } else { (v, u) };
        debug_assert!(v < self.n);
        u * (2 * self.n - u - 1) / 2 + (v - u - 1)
    }

    pub fn is_red(&self, u: usize, v: usize) -> bool {
        self.red >> self.slot(u, v) & 1 == 1
    }

    pub fn red_count(&self) -> usize {
        self.red.count_ones() as usize
    }

    pub fn blue_count(&self) -> usize {
        self.slots() - self.red_count()
    }

    pub fn with_red(mut self, u: usize, v: usize) -> Self {
        self.red |= 1 << self.slot(u, v);
        self
    }

    /// Red and blue exchanged.
    pub fn swapped(&self) -> Self {
        Coloring {
            n: self.n,
            red: !self.red & Self::full_mask(self.n),
        }
    }

    /// The coloring with vertex `v` renamed `perm[v]`.
    pub fn relabeled(&self, perm: &[usize]) -> Result<Self> {
        let mut seen = vec![false; self.n];
        if perm.len() != self.n
            || perm
                .iter()
                .any(|&p| p >= self.n || std::mem::replace(&mut seen[p], true))
        {
            return Err(Error::param("relabeling must be a permutation of 0..n"));
        }
        let mut out = Coloring { n: self.n, red: 0 };
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.is_red(u, v) {
                    out = out.with_red(perm[u], perm[v]);
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Debug for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Coloring(K_{}, red {})", self.n, self.to_hex())
    }
}

/// `embedding[v]` is the vertex of `K_n` that hosts vertex `v` of `G`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BalancedCopy {
    pub embedding: Vec<usize>,
    pub red_edges: usize,
}

struct CopySearch<'a> {
    c: &'a Coloring,
    order: Vec<usize>,
    /// For each position in `order`, the already-placed neighbors.
    back: Vec<Vec<usize>>,
    /// Edges not yet placed after finishing each position.
    left_after: Vec<usize>,
    lo: usize,
    hi: usize,
    host: Vec<usize>,
    used: u64,
}

impl CopySearch<'_> {
    fn run(&mut self, depth: usize, red: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        for h in 0..self.c.n {
            if self.used >> h & 1 == 1 {
                continue;
            }
            let added = self.back[depth]
                .iter()
                .filter(|&&u| self.c.is_red(self.host[u], h))
                .count();
            let r = red + added;
            if r > self.hi || r + self.left_after[depth] < self.lo {
                continue;
            }
            self.host[v] = h;
            self.used |= 1 << h;
            if self.run(depth + 1, r) {
                return true;
            }
            self.used &= !(1 << h);
        }
        false
    }
}

/// The first balanced copy of `g` in `c`, trying host vertices in increasing
/// order and placing the vertices of `g` by decreasing degree.
pub fn find_balanced_copy(c: &Coloring, g: &Graph) -> Result<Option<BalancedCopy>> {
    if g.n() > c.n() {
        return Err(Error::param(format!("G has {} vertices, more than K_{}", g.n(), c.n())));
    }
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut pos = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let back: Vec<Vec<usize>> = order
        .iter()
        .enumerate()
        .map(|(i, &v)| g.neighbors(v).iter().filter(|&u| pos[u] < i).collect())
        .collect();
    let mut left = g.m();
    let left_after = back
        .iter()
        .map(|b| {
            left -= b.len();
            left
        })
        .collect();
    let (lo, hi) = half_targets(g.m());
    let mut s = CopySearch {
        c,
        order,
        back,
        left_after,
        lo,
        hi,
        host: vec![0; g.n()],
        used: 0,
    };
    if !s.run(0, 0) {
        return Ok(None);
    }
    let red_edges = g.edges().filter(|&(u, v)| c.is_red(s.host[u], s.host[v])).count();
    Ok(Some(BalancedCopy {
        embedding: s.host,
        red_edges,
    }))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum BalOutcome {
    /// `bal(n, G) = value`; `extremal` lacks a balanced copy and has
    /// `min(|R|, |B|) = value` (smallest red mask among such colorings).
    Threshold { value: usize, extremal: Coloring },
    /// Every coloring of `K_n`, monochromatic ones included, contains a
    /// balanced copy, so no threshold is needed.
    AlwaysPresent,
}

/// Exact `bal(n, G)` by enumerating every coloring of `K_n`, up to swapping
/// the colors, for `n <= 7`.
pub fn bal_number(n: usize, g: &Graph) -> Result<BalOutcome> {
    if n > MAX_BAL_ORDER {
        return Err(Error::BudgetExceeded {
            budget: 1 << (slot_count(MAX_BAL_ORDER) - 1),
        });
    }
    if g.n() > n {
        return Err(Error::param(format!("G has {} vertices, more than K_{n}", g.n())));
    }
    let slots = slot_count(n);
    if slots == 0 {
        // K_0 or K_1: a single, empty coloring
        let c = Coloring::new(n, 0)?;
        return Ok(match find_balanced_copy(&c, g)? {
            Some(_) => BalOutcome::AlwaysPresent,
            None => BalOutcome::Threshold { value: 0, extremal: c },
        });
    }
    // colorings with the last slot blue; swapping colors covers the rest
    let half = 1u64 << (slots - 1);
    let chunk = (half / 64).max(1);
    let best = (0..half.div_ceil(chunk))
        .into_par_iter()
        .map(|j| {
            let mut best: Option<(usize, u64)> = None;
            for red in j * chunk..((j + 1) * chunk).min(half) {
                let c = Coloring { n, red };
                let value = c.red_count().min(c.blue_count());
                if best.is_some_and(|(b, _)| b >= value) {
                    continue;
                }
                if find_balanced_copy(&c, g).expect("sizes checked").is_none() {
                    best = Some((value, red));
                }
            }
            best
        })
        .reduce(
            || None,
            |a, b| match (a, b) {
                (Some(x), Some(y)) => Some(if y.0 > x.0 || (y.0 == x.0 && y.1 < x.1) { y } else { x }),
                (x, None) => x,
                (None, y) => y,
            },
        );
    Ok(match best {
        Some((value, red)) => BalOutcome::Threshold {
            value,
            extremal: Coloring { n, red },
        },
        None => BalOutcome::AlwaysPresent,
    })
}
