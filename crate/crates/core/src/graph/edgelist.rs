//! Plain-text edge lists: a header line `n m`, then `m` lines `u v` with
//! `0 <= u < v < n`. Blank lines and lines starting with `#` are ignored.

use std::fmt::Write as _;

use super::Graph;
use crate::error::{Error, Result};

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Splits a line into whitespace-separated tokens with their 1-based columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s + 1, &line[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

fn two_numbers(line_no: usize, line: &str, what: &str) -> Result<(usize, usize)> {
    let toks = tokens(line);
    if toks.len() != 2 {
        let col = toks.get(2).map_or(line.len() + 1, |t| t.0);
        return Err(err(
            line_no,
            col,
            format!("expected two integers ({what}), found {} tokens", toks.len()),
        ));
    }
    let num = |(col, t): (usize, &str)| {
        t.parse::<usize>()
            .map_err(|_| err(line_no, col, format!("expected a non-negative integer, found {t:?}")))
    };
    Ok((num(toks[0])?, num(toks[1])?))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));

    let (hline, header) = lines.next().ok_or_else(|| err(1, 1, "missing 'n m' header"))?;
    let (n, m) = two_numbers(hline, header, "n m")?;
    let mut g = Graph::empty(n);
    let mut count = 0;
    for (line_no, line) in lines {
        if count == m {
            return Err(err(line_no, 1, format!("more than the declared {m} edges")));
        }
        let (u, v) = two_numbers(line_no, line, "u v")?;
        let vcol = tokens(line)[1].0;
        if u >= v {
            return Err(err(line_no, 1, format!("edge ({u}, {v}) must satisfy u < v")));
        }
        if v >= n {
            return Err(err(line_no, vcol, format!("vertex {v} out of range 0..{n}")));
        }
        if g.has_edge(u, v) {
            return Err(err(line_no, 1, format!("duplicate edge ({u}, {v})")));
        }
        g.add_edge(u, v);
        count += 1;
    }
    if count != m {
        let last = text.lines().count().max(1);
        return Err(err(last, 1, format!("header declares {m} edges, found {count}")));
    }
    Ok(g)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
