//! Incremental subset enumeration over graphs with at most 64 vertices.
//!
//! Free vertices are split into a low block (the `LOW_BITS` smallest) walked
//! in reflected Gray order and a high part walked by counting. Every step
//! toggles one vertex, so cut and induced counts update with one popcount.
//! Because the high part only increases, the first block containing a hit
//! holds the numerically smallest qualifying mask.

use std::ops::Range;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub(crate) const LOW_BITS: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Count {
    /// `e(X, V \ X)` for the current mask `X`.
    Cut,
    /// `e(G[W])` for the current mask `W`.
    Induced,
}

pub(crate) struct Space {
    rows: Vec<u64>,
    degs: Vec<i64>,
    count: Count,
    fixed: u64,
    low: Vec<usize>,
    high: Vec<usize>,
}

impl Space {
    /// Builds the enumeration space. `fixed` vertices are always members and
    /// `free` (ascending, all above any fixed vertex) are enumerated.
    pub(crate) fn new(g: &Graph, count: Count, fixed: u64, free: Vec<usize>) -> Self {
        debug_assert!(g.n() <= 64);
        let rows: Vec<u64> = (0..g.n()).map(|v| g.row_mask(v)).collect();
        let degs = rows.iter().map(|r| r.count_ones() as i64).collect();
        let b = free.len().min(LOW_BITS);
        let high = free[b..].to_vec();
        let mut low = free;
        low.truncate(b);
        Space {
            rows,
            degs,
            count,
            fixed,
            low,
            high,
        }
    }

    /// Number of high-part blocks.
    pub(crate) fn blocks(&self) -> u64 {
        1u64 << self.high.len()
    }

    /// Total number of subsets in the space.
    pub(crate) fn size(&self) -> u128 {
        1u128 << (self.low.len() + self.high.len())
    }

    fn deposit(&self, h: u64) -> u64 {
        let mut out = 0;
        for (i, &p) in self.high.iter().enumerate() {
            if h >> i & 1 == 1 {
                out |= 1 << p;
            }
        }
        out
    }

    fn eval(&self, mask: u64) -> i64 {
        let mut twice_inside = 0i64;
        let mut deg_sum = 0i64;
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            twice_inside += (self.rows[v] & mask).count_ones() as i64;
            deg_sum += self.degs[v];
        }
        match self.count {
            Count::Cut => deg_sum - twice_inside,
            Count::Induced => twice_inside / 2,
        }
    }

    #[inline]
    fn toggle(&self, v: usize, mask: &mut u64, value: &mut i64) {
        let bit = 1u64 << v;
        let adding = *mask & bit == 0;
        let others = (*mask & !bit & self.rows[v]).count_ones() as i64;
        let delta = match self.count {
            Count::Cut => self.degs[v] - 2 * others,
            Count::Induced => others,
        };
        if adding {
            *value += delta;
        } else {
            *value -= delta;
        }
        *mask ^= bit;
    }

    /// Smallest mask in blocks `blocks` whose count lies in `lo..=hi`.
    ///
    /// With `budget = Some(b)` at most `b` subsets are visited before giving up.
    pub(crate) fn find_min(&self, lo: i64, hi: i64, blocks: Range<u64>, budget: Option<u64>) -> Result<Option<u64>> {
        if blocks.is_empty() {
            return Ok(None);
        }
        let mut mask = self.fixed | self.deposit(blocks.start);
        let mut value = self.eval(mask);
        let block_len = 1u64 << self.low.len();
        let mut visits = 0u64;
        for h in blocks.clone() {
            let mut best: Option<u64> = None;
            for t in 0..block_len {
                if t > 0 {
                    let v = self.low[(t.trailing_zeros()) as usize];
                    self.toggle(v, &mut mask, &mut value);
                }
                if let Some(b) = budget {
                    if visits == b {
                        return Err(Error::BudgetExceeded { budget: b });
                    }
                }
                visits += 1;
                if value >= lo && value <= hi && best.is_none_or(|b| mask < b) {
                    best = Some(mask);
                }
            }
            if best.is_some() {
                return Ok(best);
            }
            if h + 1 == blocks.end {
                break;
            }
            // the Gray walk ends on the top low bit; clear it, then step the counter
            if let Some(&top) = self.low.last() {
                self.toggle(top, &mut mask, &mut value);
            }
            let mut changed = h ^ (h + 1);
            while changed != 0 {
                let i = changed.trailing_zeros() as usize;
                changed &= changed - 1;
                self.toggle(self.high[i], &mut mask, &mut value);
            }
            debug_assert_eq!(value, self.eval(mask));
        }
        Ok(None)
    }

    /// Calls `visit(count)` for every subset in the space, in Gray order.
    pub(crate) fn for_each(&self, mut visit: impl FnMut(i64)) {
        let free: Vec<usize> = self.low.iter().chain(&self.high).copied().collect();
        let mut mask = self.fixed;
        let mut value = self.eval(mask);
        visit(value);
        let total = 1u64 << free.len();
        for t in 1..total {
            let v = free[t.trailing_zeros() as usize];
            self.toggle(v, &mut mask, &mut value);
            visit(value);
        }
    }
}
