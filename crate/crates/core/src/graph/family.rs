use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

/// Parameters of the graph families this crate can generate.
///
/// Labeling conventions (fixed, so constructed witnesses are reproducible):
/// cycles, circulants and chorded cycles list `u_0..u_{k-1}` in cyclic order;
/// rectangular grids are row-major, `(r, c) -> r * cols + c`; triangular grids
/// go row by row from the apex, the `i`-th vertex (1-based) of row `j` being
/// `(j - 1) j / 2 + (i - 1)`; wheels put the hub last; stars put the hub first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum FamilyParams {
    Cycle {
        n: usize,
    },
    Complete {
        n: usize,
    },
    /// `W_rim`: a cycle on `rim` vertices plus a hub adjacent to all of them.
    Wheel {
        rim: usize,
    },
    /// `K_{1,leaves}`.
    Star {
        leaves: usize,
    },
    /// A path with `edges` edges.
    Path {
        edges: usize,
    },
    /// `Ci_k(L)`: `i ~ (i + j) mod k` for every `j` in `steps`.
    Circulant {
        k: usize,
        steps: Vec<usize>,
    },
    /// `C_{k,l}`: the cycle `C_k` plus the chords `u_i u_{i+l}`.
    Chorded {
        k: usize,
        l: usize,
    },
    RectGrid {
        rows: usize,
        cols: usize,
    },
    /// `T_h`: the triangular grid with `h` vertices per side.
    TriGrid {
        h: usize,
    },
    /// Möbius ladder on `n` vertices, `C_{n, n/2}`.
    Moebius {
        n: usize,
    },
    /// `Ci_{2k}(1, 2)`.
    Antiprism {
        k: usize,
    },
    Petersen,
}

impl FamilyParams {
    pub fn validate(&self) -> Result<()> {
        use FamilyParams::*;
        let bad = |msg: String| Err(Error::Param(msg));
        match self {
            Cycle { n } if *n < 3 => bad(format!("cycle needs n >= 3, got {n}")),
            Complete { n } if *n < 1 => bad("complete graph needs n >= 1".into()),
            Wheel { rim } if *rim < 3 => bad(format!("wheel needs a rim of >= 3 vertices, got {rim}")),
            Circulant { k, steps } => {
                if *k < 1 {
                    return bad("circulant needs k >= 1".into());
                }
                for (i, &j) in steps.iter().enumerate() {
                    if j < 1 || j > k / 2 {
                        return bad(format!(
                            "circulant step {j} must satisfy 1 <= j <= floor(k/2) = {}",
                            k / 2
                        ));
                    }
                    if steps[..i].contains(&j) {
                        return bad(format!("circulant step {j} listed twice"));
                    }
                }
                Ok(())
            }
            Chorded { k, l } => {
                if *k <= 3 {
                    bad(format!("chorded cycle needs k > 3, got {k}"))
                } else if *l < 2 || *l > k - 2 {
                    bad(format!("chorded cycle needs 2 <= l <= k - 2 = {}, got {l}", k - 2))
                } else {
                    Ok(())
                }
            }
            RectGrid { rows, cols } if *rows < 2 || *cols < 2 => {
                bad(format!("rectangular grid needs rows, cols >= 2, got {rows}x{cols}"))
            }
            TriGrid { h } if *h < 1 => bad("triangular grid needs h >= 1".into()),
            Moebius { n } if *n < 4 || n % 2 == 1 => bad(format!("Möbius ladder needs an even n >= 4, got {n}")),
            Antiprism { k } if *k < 3 => bad(format!("antiprism needs k >= 3, got {k}")),
            _ => Ok(()),
        }
    }

    /// The chorded-cycle parameters `(k, l)` when this family is one, with `l`
    /// as given (not normalized).
    pub fn as_chorded(&self) -> Option<(usize, usize)> {
        match self {
            FamilyParams::Chorded { k, l } => Some((*k, *l)),
            FamilyParams::Moebius { n } => Some((*n, n / 2)),
            FamilyParams::Antiprism { k } => Some((2 * k, 2)),
            FamilyParams::Circulant { k, steps } if steps.len() == 2 && steps.contains(&1) => {
                let l = if steps[0] == 1 { steps[1] } else { steps[0] };
                (*k > 3 && l >= 2).then_some((*k, l))
            }
            _ => None,
        }
    }
}

/// Index of the `pos`-th vertex (1-based) in row `row` (1-based) of a triangular grid.
pub(crate) fn tri_index(row: usize, pos: usize) -> usize {
    debug_assert!(pos >= 1 && pos <= row);
    (row - 1) * row / 2 + (pos - 1)
}

fn circulant(k: usize, steps: &[usize]) -> Graph {
    let mut g = Graph::empty(k);
    for i in 0..k {
        for &j in steps {
            let t = (i + j) % k;
            if t != i {
                g.add_edge(i, t);
            }
        }
    }
    g
}

/// Generates the graph described by `params`.
pub fn build_family(params: &FamilyParams) -> Result<Graph> {
    use FamilyParams::*;
    params.validate()?;
    let g = match params {
        Cycle { n } => circulant(*n, &[1]),
        Complete { n } => {
            let mut g = Graph::empty(*n);
            for u in 0..*n {
                for v in u + 1..*n {
                    g.add_edge(u, v);
                }
            }
            g
        }
        Wheel { rim } => {
            let mut g = Graph::empty(rim + 1);
            for i in 0..*rim {
                g.add_edge(i, (i + 1) % rim);
                g.add_edge(i, *rim);
            }
            g
        }
        Star { leaves } => {
            let mut g = Graph::empty(leaves + 1);
            for v in 1..=*leaves {
                g.add_edge(0, v);
            }
            g
        }
        Path { edges } => {
            let mut g = Graph::empty(edges + 1);
            for v in 0..*edges {
                g.add_edge(v, v + 1);
            }
            g
        }
        Circulant { k, steps } => circulant(*k, steps),
        Chorded { k, l } => circulant(*k, &[1, (*l).min(k - l)]),
        RectGrid { rows, cols } => {
            let mut g = Graph::empty(rows * cols);
            for r in 0..*rows {
                for c in 0..*cols {
                    let v = r * cols + c;
                    if c + 1 < *cols {
                        g.add_edge(v, v + 1);
                    }
                    if r + 1 < *rows {
                        g.add_edge(v, v + cols);
                    }
                }
            }
            g
        }
        TriGrid { h } => {
            let mut g = Graph::empty(h * (h + 1) / 2);
            for row in 1..=*h {
                for pos in 1..=row {
                    let v = tri_index(row, pos);
                    if pos < row {
                        g.add_edge(v, tri_index(row, pos + 1));
                    }
                    if row < *h {
                        g.add_edge(v, tri_index(row + 1, pos));
                        g.add_edge(v, tri_index(row + 1, pos + 1));
                    }
                }
            }
            g
        }
        Moebius { n } => circulant(*n, &[1, n / 2]),
        Antiprism { k } => circulant(2 * k, &[1, 2]),
        Petersen => {
            let mut g = Graph::empty(10);
            for i in 0..5 {
                g.add_edge(i, (i + 1) % 5);
                g.add_edge(i, i + 5);
                g.add_edge(i + 5, (i + 2) % 5 + 5);
            }
            g
        }
    };
    Ok(g)
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilyParams::*;
        match self {
            Cycle { n } => write!(f, "cycle:{n}"),
            Complete { n } => write!(f, "complete:{n}"),
            Wheel { rim } => write!(f, "wheel:{rim}"),
            Star { leaves } => write!(f, "star:{leaves}"),
            Path { edges } => write!(f, "path:{edges}"),
            Circulant { k, steps } => {
                let steps: Vec<String> = steps.iter().map(ToString::to_string).collect();
                write!(f, "circulant:{k},{}", steps.join("+"))
            }
            Chorded { k, l } => write!(f, "chorded:{k},{l}"),
            RectGrid { rows, cols } => write!(f, "grid:{rows}x{cols}"),
            TriGrid { h } => write!(f, "tri:{h}"),
            Moebius { n } => write!(f, "moebius:{n}"),
            Antiprism { k } => write!(f, "antiprism:{k}"),
            Petersen => write!(f, "petersen"),
        }
    }
}

fn parse_err(column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line: 1,
        column,
        message: message.into(),
    }
}

/// Parses an unsigned integer token that starts at 1-based `column`.
fn parse_num(tok: &str, column: usize) -> Result<usize> {
    tok.trim()
        .parse()
        .map_err(|_| parse_err(column, format!("expected a non-negative integer, found {tok:?}")))
}

impl FromStr for FamilyParams {
    type Err = Error;

    /// Grammar: `cycle:12`, `complete:5`, `wheel:7`, `star:4`, `path:2`,
    /// `circulant:38,1+8`, `chorded:38,8`, `grid:4x8`, `tri:9`, `moebius:12`,
    /// `antiprism:6`, `petersen`. Parameters are validated after parsing.
    fn from_str(s: &str) -> Result<Self> {
        use FamilyParams::*;
        let s = s.trim();
        let (name, args) = match s.split_once(':') {
            Some((name, args)) => (name, Some(args)),
            None => (s, None),
        };
        // 1-based column of the first argument character
        let col = name.len() + 2;
        let need =
            || args.ok_or_else(|| parse_err(name.len() + 1, format!("family {name:?} needs parameters after ':'")));
        let two = |sep: char| -> Result<(usize, usize)> {
            let a = need()?;
            let (x, y) = a
                .split_once(sep)
                .ok_or_else(|| parse_err(col, format!("expected two values separated by '{sep}'")))?;
            Ok((parse_num(x, col)?, parse_num(y, col + x.len() + 1)?))
        };
        let params = match name {
            "cycle" => Cycle {
                n: parse_num(need()?, col)?,
            },
            "complete" => Complete {
                n: parse_num(need()?, col)?,
            },
            "wheel" => Wheel {
                rim: parse_num(need()?, col)?,
            },
            "star" => Star {
                leaves: parse_num(need()?, col)?,
            },
            "path" => Path {
                edges: parse_num(need()?, col)?,
            },
            "tri" => TriGrid {
                h: parse_num(need()?, col)?,
            },
            "moebius" => Moebius {
                n: parse_num(need()?, col)?,
            },
            "antiprism" => Antiprism {
                k: parse_num(need()?, col)?,
            },
            "chorded" => {
                let (k, l) = two(',')?;
                Chorded { k, l }
            }
            "grid" => {
                let (rows, cols) = two('x')?;
                RectGrid { rows, cols }
            }
            "circulant" => {
                let a = need()?;
                let (k, rest) = a
                    .split_once(',')
                    .ok_or_else(|| parse_err(col, "expected 'k,j1+j2+...'"))?;
                let k = parse_num(k, col)?;
                let mut steps = Vec::new();
                let mut c = col + a.find(',').unwrap() + 1;
                if !rest.trim().is_empty() {
                    for tok in rest.split('+') {
                        steps.push(parse_num(tok, c)?);
                        c += tok.len() + 1;
                    }
                }
                Circulant { k, steps }
            }
            "petersen" if args.is_none() => Petersen,
            _ => return Err(parse_err(1, format!("unknown graph family {name:?}"))),
        };
        params.validate()?;
        Ok(params)
    }
}
