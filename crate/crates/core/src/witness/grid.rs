//! Rectangular grids `G_{rows,cols}` with `rows ≡ cols (mod 2)` and triangular
//! grids `T_h` with `h mod 8 ∈ {0, 1, 4, 5}`: the grids with an even number of
//! edges.

use serde::{Deserialize, Serialize};

use super::{ConstructionResult, LemmaId};
use crate::conditions::parity_obstruction;
use crate::error::{Error, Result};
use crate::graph::family::tri_index;
use crate::graph::{build_family, FamilyParams, Graph};

/// How many corners (degree 2), side vertices (degree 3) and inside vertices
/// (degree 4) go into the independent set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RectQuotas {
    pub corners: usize,
    pub sides: usize,
    pub inside: usize,
}

impl RectQuotas {
    pub fn degree_sum(&self) -> usize {
        2 * self.corners + 3 * self.sides + 4 * self.inside
    }
}

/// The case and the quotas for `G_{rows,cols}`; with `s = rows + cols` and
/// `p = rows * cols`:
///
/// | case | parity | corners | sides | inside |
/// |---|---|---|---|---|
/// | 1 | both even | 1 | s/2 - 2 | p/4 - s/2 + 1 |
/// | 2 | both odd, `4 ∤ s` | 1 | s/2 - 3 | (p + 7)/4 - s/2 |
/// | 3 | both odd, `4 ∣ s` | 2 | s/2 - 3 | (p + 5)/4 - s/2 |
pub fn rect_quotas(rows: usize, cols: usize) -> Result<(LemmaId, RectQuotas)> {
    if rows < 2 || cols < 2 {
        return Err(Error::param(format!("grid needs rows, cols >= 2, got {rows}x{cols}")));
    }
    if rows % 2 != cols % 2 {
        return Err(Error::param(format!(
            "{rows}x{cols} grid has an odd number of edges (rows and cols differ in parity)"
        )));
    }
    let (s, p) = (rows + cols, rows * cols);
    Ok(if rows.is_multiple_of(2) {
        (
            LemmaId::RectCase1,
            RectQuotas {
                corners: 1,
                sides: s / 2 - 2,
                inside: p / 4 + 1 - s / 2,
            },
        )
    } else if s % 4 != 0 {
        (
            LemmaId::RectCase2,
            RectQuotas {
                corners: 1,
                sides: s / 2 - 3,
                inside: (p + 7) / 4 - s / 2,
            },
        )
    } else {
        (
            LemmaId::RectCase3,
            RectQuotas {
                corners: 2,
                sides: s / 2 - 3,
                inside: (p + 5) / 4 - s / 2,
            },
        )
    })
}

/// An independent set from the checkerboard class of `(0, 0)`, filled
/// row-major within each degree class to the case quotas.
///
/// The class is independent, so only the counts matter. If the class runs
/// short of some degree, every other split `2c + 3s + 4i = m/2` that fits is
/// tried before giving up.
pub fn rect_grid_witness(rows: usize, cols: usize) -> Result<ConstructionResult> {
    let (lemma, q) = rect_quotas(rows, cols)?;
    let g = build_family(&FamilyParams::RectGrid { rows, cols })?;
    let mut by_degree: [Vec<usize>; 5] = Default::default();
    for r in 0..rows {
        for c in (r % 2..cols).step_by(2) {
            let v = r * cols + c;
            by_degree[g.degree(v)].push(v);
        }
    }
    let [_, _, corners, sides, inside] = &by_degree;
    let mut notes = vec![format!(
        "quotas: {} corner, {} side, {} inside",
        q.corners, q.sides, q.inside
    )];
    let fits = |q: &RectQuotas| q.corners <= corners.len() && q.sides <= sides.len() && q.inside <= inside.len();
    let q = if fits(&q) {
        q
    } else {
        let target = g.m() / 2;
        let alt = (0..=corners.len())
            .flat_map(|c| (0..=sides.len()).map(move |s| (c, s)))
            .find_map(|(c, s)| {
                let rest = target.checked_sub(2 * c + 3 * s)?;
                (rest % 4 == 0 && rest / 4 <= inside.len()).then_some(RectQuotas {
                    corners: c,
                    sides: s,
                    inside: rest / 4,
                })
            })
            .ok_or_else(|| Error::Construction {
                lemma: lemma.to_string(),
                detail: format!("no quota split fits the checkerboard class of {rows}x{cols}"),
            })?;
        notes.push(format!(
            "fallback quotas: {} corner, {} side, {} inside",
            alt.corners, alt.sides, alt.inside
        ));
        alt
    };
    let mut i: Vec<usize> = corners[..q.corners]
        .iter()
        .chain(&sides[..q.sides])
        .chain(&inside[..q.inside])
        .copied()
        .collect();
    i.sort_unstable();
    ConstructionResult::from_independent(&g, lemma, i, notes)
}

fn tri_row_check(h: usize, row: usize) -> Result<()> {
    if row < 3 || row + 1 > h {
        return Err(Error::param(format!(
            "A- and B-sets live on rows 3..={} of T_{h}, got row {row}",
            h.saturating_sub(1)
        )));
    }
    Ok(())
}

/// The A-set of row `row` of `T_h`: positions 1, 3, 5, ... (1-based).
pub fn tri_a_set(h: usize, row: usize) -> Result<Vec<usize>> {
    tri_row_check(h, row)?;
    Ok((1..=row).step_by(2).map(|pos| tri_index(row, pos)).collect())
}

/// The B-set of row `row` of `T_h`: positions 2, 4, ... (1-based).
pub fn tri_b_set(h: usize, row: usize) -> Result<Vec<usize>> {
    tri_row_check(h, row)?;
    Ok((2..=row).step_by(2).map(|pos| tri_index(row, pos)).collect())
}

/// On an odd row, an A-set holds two degree-4 vertices and `(row-3)/2` of
/// degree 6, and a B-set holds `(row-1)/2` vertices, all of degree 6.
fn check_row_set(g: &Graph, lemma: LemmaId, row: usize, set: &[usize], is_a: bool) -> Result<()> {
    let fours = set.iter().filter(|&&v| g.degree(v) == 4).count();
    let sixes = set.iter().filter(|&&v| g.degree(v) == 6).count();
    let expected = if is_a { (2, (row - 3) / 2) } else { (0, (row - 1) / 2) };
    if (fours, sixes) != expected || fours + sixes != set.len() {
        return Err(Error::Construction {
            lemma: lemma.to_string(),
            detail: format!(
                "{}-set of row {row} has {fours} vertices of degree 4 and {sixes} of degree 6, expected {expected:?}",
                if is_a { "A" } else { "B" }
            ),
        });
    }
    Ok(())
}

/// `T_h` for `h mod 8 ∈ {0, 1, 4, 5}`.
///
/// `h ≡ 4, 5` is eulerian with `m/2` odd. `h = 8k` takes the apex, B-sets on
/// rows `3, 5, ..., 2k+1` and A-sets on rows `2k+3, ..., h-1`. `h = 8k+1` takes
/// the apex, A-sets on rows `3, ..., h-2` with `k` degree-6 vertices dropped
/// (rightmost first, from the bottom selected row up) and every other vertex
/// of the last row.
pub fn tri_grid_witness(h: usize) -> Result<ConstructionResult> {
    if h == 0 {
        return Err(Error::param("triangular grid needs h >= 1"));
    }
    if matches!(h % 8, 2 | 3 | 6 | 7) {
        return Err(Error::param(format!(
            "T_{h} has an odd number of edges ({}); only h mod 8 in {{0, 1, 4, 5}} is covered",
            3 * h * (h - 1) / 2
        )));
    }
    let g = build_family(&FamilyParams::TriGrid { h })?;
    let k = h / 8;
    match h % 8 {
        4 | 5 => {
            let o = parity_obstruction(&g).ok_or_else(|| Error::Construction {
                lemma: LemmaId::TriObstruction.to_string(),
                detail: format!("T_{h} should be eulerian with m/2 odd"),
            })?;
            Ok(ConstructionResult::not_balanceable(
                LemmaId::TriObstruction,
                vec![o.detail],
            ))
        }
        0 => {
            let lemma = LemmaId::TriCase1;
            let mut i = vec![tri_index(1, 1)];
            for row in (3..=2 * k + 1).step_by(2) {
                let b = tri_b_set(h, row)?;
                check_row_set(&g, lemma, row, &b, false)?;
                i.extend(b);
            }
            for row in (2 * k + 3..h).step_by(2) {
                let a = tri_a_set(h, row)?;
                check_row_set(&g, lemma, row, &a, true)?;
                i.extend(a);
            }
            let notes = vec![format!(
                "k = {k}: B-sets on rows 3..={}, A-sets on rows {}..={}",
                2 * k + 1,
                2 * k + 3,
                h - 1
            )];
            ConstructionResult::from_independent(&g, lemma, i, notes)
        }
        _ if h == 1 => {
            ConstructionResult::from_pair(&g, LemmaId::TriCase2, vec![], vec![], vec!["T_1 has no edges".into()])
        }
        _ => {
            let lemma = LemmaId::TriCase2;
            let mut rows = Vec::new();
            for row in (3..=h - 2).step_by(2) {
                let a = tri_a_set(h, row)?;
                check_row_set(&g, lemma, row, &a, true)?;
                rows.push(a);
            }
            let mut dropped = Vec::new();
            'outer: for a in rows.iter_mut().rev() {
                while dropped.len() < k {
                    let Some(pos) = a.iter().rposition(|&v| g.degree(v) == 6) else {
                        continue 'outer;
                    };
                    dropped.push(a.remove(pos));
                }
                break;
            }
            if dropped.len() < k {
                return Err(Error::Construction {
                    lemma: lemma.to_string(),
                    detail: format!("only {} degree-6 vertices available to drop, need {k}", dropped.len()),
                });
            }
            let mut i = vec![tri_index(1, 1)];
            i.extend(rows.into_iter().flatten());
            i.extend((1..=h).step_by(2).map(|pos| tri_index(h, pos)));
            i.sort_unstable();
            let notes = vec![format!("k = {k}: dropped degree-6 vertices {dropped:?}")];
            ConstructionResult::from_independent(&g, lemma, i, notes)
        }
    }
}
