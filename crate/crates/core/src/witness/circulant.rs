//! Chorded cycles `C_{k,l}`: balanceable iff `k` is even and `(k, l) != (6, 2)`.

use super::{greedy_independent, ConstructionResult, LemmaId};
use crate::conditions::parity_obstruction;
use crate::error::{Error, Result};
use crate::graph::{build_family, FamilyParams, Graph};
use crate::oracle::{find_half_induced, Budget};

fn complement(k: usize, s: &[usize]) -> Vec<usize> {
    (0..k).filter(|v| !s.contains(v)).collect()
}

/// Builds the witness (or the obstruction) for `C_{k,l}`.
///
/// Requires `k > 3` and `2 <= l <= k - 2`; `l` is replaced by `min(l, k - l)`
/// first, since both give the same graph.
pub fn circulant_witness(k: usize, l: usize) -> Result<ConstructionResult> {
    let params = FamilyParams::Chorded { k, l };
    let g = build_family(&params)?;
    let mut notes = Vec::new();
    if 2 * l > k {
        notes.push(format!("l normalized to k - l = {}", k - l));
    }
    let l = l.min(k - l);

    if k % 2 == 1 {
        return odd(&g, k, notes);
    }
    if 2 * l == k {
        return if k.is_multiple_of(4) {
            antipodal_4a(&g, k, notes)
        } else {
            antipodal_4a2(&g, k, notes)
        };
    }
    if k.is_multiple_of(4) {
        return if l % 2 == 1 {
            odd_chords_4a(&g, k, notes)
        } else {
            even_chords_4a(&g, k, l, notes)
        };
    }
    if l % 2 == 1 {
        odd_chords_4a2(&g, k, l, notes)
    } else if l == 2 {
        square_chords_4a2(&g, k, notes)
    } else {
        even_chords_4a2(&g, k, l, notes)
    }
}

/// `k` odd: 4-regular with `m/2 = k` odd.
fn odd(g: &Graph, k: usize, mut notes: Vec<String>) -> Result<ConstructionResult> {
    let o = parity_obstruction(g).ok_or_else(|| Error::Construction {
        lemma: LemmaId::L14.to_string(),
        detail: format!("C_{{{k},l}} should be eulerian with m/2 odd"),
    })?;
    notes.push(o.detail);
    Ok(ConstructionResult::not_balanceable(LemmaId::L14, notes))
}

/// `k = 4a`, `l = 2a`: the 3-regular graph has `m/2 = 3a`, met by `a`
/// vertices `u_0, u_2, ..., u_{2a-2}`.
fn antipodal_4a(g: &Graph, k: usize, notes: Vec<String>) -> Result<ConstructionResult> {
    let a = k / 4;
    let i: Vec<usize> = (0..a).map(|j| 2 * j).collect();
    ConstructionResult::from_independent(g, LemmaId::L12, i, notes)
}

/// `k = 4a + 2`, `l = 2a + 1`: odd `m = 6a + 3`, so the targets are `3a + 1`
/// and `3a + 2`. The cut side takes every other vertex of `u_0..u_{2a-4}`
/// plus the edge `u_{2a-2} u_{2a-1}`; `W` is a prefix of the cycle.
fn antipodal_4a2(g: &Graph, k: usize, mut notes: Vec<String>) -> Result<ConstructionResult> {
    let a = (k - 2) / 4;
    let mut x: Vec<usize> = (0..a.saturating_sub(1)).map(|j| 2 * j).collect();
    x.extend([2 * a - 2, 2 * a - 1]);
    let top = if a.is_multiple_of(2) {
        2 * a + a / 2 + 1
    } else {
        2 * a + (a - 1) / 2 + 1
    };
    notes.push(format!(
        "a = {a} is {}; W = u_0..u_{top}",
        if a.is_multiple_of(2) { "even" } else { "odd" }
    ));
    ConstructionResult::from_pair(g, LemmaId::L13, x, (0..=top).collect(), notes)
}

/// `k = 4a`, `l` odd: the graph is bipartite 3-regular on `4a` vertices, so
/// `a` vertices of one side have degree sum `3a = m/2`.
fn odd_chords_4a(g: &Graph, k: usize, notes: Vec<String>) -> Result<ConstructionResult> {
    let a = k / 4;
    let i: Vec<usize> = (0..a).map(|j| 2 * j).collect();
    ConstructionResult::from_independent(g, LemmaId::L15, i, notes)
}

/// Start indices of the `L16` blocks: block `j` starts at `j (2b + 1)` and
/// holds `b` vertices two apart; the first `count` are taken.
pub(crate) fn spaced_blocks(b: usize, count: usize) -> Vec<usize> {
    (0..count).map(|t| (t / b) * (2 * b + 1) + 2 * (t % b)).collect()
}

/// `k = 4a`, `l = 2b` even: `a` vertices in blocks of `b`, each block a run
/// of every other vertex, one extra vertex skipped between blocks.
fn even_chords_4a(g: &Graph, k: usize, l: usize, mut notes: Vec<String>) -> Result<ConstructionResult> {
    let (a, b) = (k / 4, l / 2);
    let i = spaced_blocks(b, a);
    let i_max = *i.last().expect("a >= 2");
    if i_max >= 4 * a - 2 * b {
        return Err(Error::Construction {
            lemma: LemmaId::L16.to_string(),
            detail: format!(
                "last selected vertex u_{i_max} is not below 4a - 2b = {}",
                4 * a - 2 * b
            ),
        });
    }
    notes.push(format!("a = {a}, b = {b}, last vertex u_{i_max}"));
    ConstructionResult::from_independent(g, LemmaId::L16, i, notes)
}

/// `k = 4a + 2`, `l` odd below `k/2`: 4-regular, `m/2 = 4a + 2`, which no
/// independent set can reach. `X` is the edge `u_0 u_1` plus `a - 1` more
/// independent even vertices; `W` leaves out two edges and `a - 3` vertices.
fn odd_chords_4a2(g: &Graph, k: usize, l: usize, mut notes: Vec<String>) -> Result<ConstructionResult> {
    let a = (k - 2) / 4;
    let bug = |what: &str| Error::Construction {
        lemma: LemmaId::L17.to_string(),
        detail: format!("C_{{{k},{l}}}: not enough independent even vertices for {what}"),
    };
    let mut x = vec![0, 1];
    x.extend(greedy_independent(g, &[0, 1], a - 1, (0..k).step_by(2)).ok_or_else(|| bug("X"))?);
    let w = if k == 10 {
        notes.push("k = 10: W = u_0..u_6".into());
        (0..7).collect()
    } else {
        let pairs: Vec<usize> = if l == 3 { vec![0, 1, 5, 6] } else { vec![0, 1, 3, 4] };
        let mut out = pairs.clone();
        out.extend(greedy_independent(g, &pairs, a - 3, (0..k).step_by(2)).ok_or_else(|| bug("V \\ W"))?);
        notes.push(format!("V \\ W = {out:?}"));
        complement(k, &out)
    };
    ConstructionResult::from_pair(g, LemmaId::L17, x, w, notes)
}

/// `k = 4a + 2`, `l = 2`. `C_{6,2}` (the octahedron) has no induced subgraph
/// with 6 edges. Otherwise `X` is `a - 1` independent vertices plus the edge
/// `u_{4a-1} u_{4a}`, and `V \ W` is every third vertex of a prefix plus
/// two edges near the end.
fn square_chords_4a2(g: &Graph, k: usize, mut notes: Vec<String>) -> Result<ConstructionResult> {
    let a = (k - 2) / 4;
    if k == 6 {
        if find_half_induced(g, Budget::default())?.is_some() {
            return Err(Error::Construction {
                lemma: LemmaId::L18.to_string(),
                detail: "C_{6,2} unexpectedly has a half induced set".into(),
            });
        }
        notes.push("C_{6,2}: no induced subgraph has 6 edges (checked over all 64 subsets)".into());
        return Ok(ConstructionResult::not_balanceable(LemmaId::L18, notes));
    }
    let pair = [4 * a - 1, 4 * a];
    let mut x = greedy_independent(g, &pair, a - 1, 0..k).ok_or_else(|| Error::Construction {
        lemma: LemmaId::L18.to_string(),
        detail: format!("C_{{{k},2}}: not enough vertices for X"),
    })?;
    x.extend(pair);
    let w = if k == 10 {
        notes.push("k = 10: W = {u_0, u_1, u_2, u_3, u_4, u_6, u_8}".into());
        vec![0, 1, 2, 3, 4, 6, 8]
    } else {
        let mut out: Vec<usize> = if a >= 4 {
            (0..=a - 4).map(|j| 3 * j).collect()
        } else {
            Vec::new()
        };
        out.extend([4 * a - 6, 4 * a - 5, 4 * a - 2, 4 * a - 1]);
        notes.push(format!("V \\ W = {out:?}"));
        complement(k, &out)
    };
    ConstructionResult::from_pair(g, LemmaId::L18, x, w, notes)
}

/// `k = 4a + 2`, `l` even with `2 < l < k/2`. Both sets mix independent
/// vertices with one or two edges; vertices that would touch an edge are
/// skipped and the scan moves on to the next free position.
fn even_chords_4a2(g: &Graph, k: usize, l: usize, mut notes: Vec<String>) -> Result<ConstructionResult> {
    let a = (k - 2) / 4;
    let bug = |what: &str| Error::Construction {
        lemma: LemmaId::L19.to_string(),
        detail: format!("C_{{{k},{l}}}: not enough free vertices for {what}"),
    };
    let pair = [4 * a - 1, 4 * a];
    let mut x = greedy_independent(g, &pair, a - 1, 0..k).ok_or_else(|| bug("X"))?;
    x.extend(pair);
    let w = if k == 10 {
        notes.push("k = 10: W = {u_0, u_1, u_2, u_4, u_5, u_6, u_8}".into());
        vec![0, 1, 2, 4, 5, 6, 8]
    } else {
        let mut reserved: Vec<usize> = if l > 4 {
            vec![4 * a - 4, 4 * a - 3]
        } else {
            vec![4 * a - 7, 4 * a - 6]
        };
        reserved.extend(pair);
        let mut out = greedy_independent(g, &reserved, a - 3, 0..k).ok_or_else(|| bug("V \\ W"))?;
        out.extend(reserved);
        notes.push(format!("V \\ W = {out:?}"));
        complement(k, &out)
    };
    ConstructionResult::from_pair(g, LemmaId::L19, x, w, notes)
}
