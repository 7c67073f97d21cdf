//! Plain edge-list text: a header line `n m`, then `m` lines `u v` (0-based).

use super::Graph;
use crate::error::{Error, Result};

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::EdgeList {
        line,
        message: message.into(),
    }
}

fn pair(line_no: usize, line: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace();
    let mut next = |what: &str| -> Result<usize> {
        let tok = it.next().ok_or_else(|| err(line_no, format!("missing {what}")))?;
        tok.parse()
            .map_err(|_| err(line_no, format!("{what} {tok:?} is not a nonnegative integer")))
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if it.next().is_some() {
        return Err(err(line_no, "expected exactly two fields"));
    }
    Ok((a, b))
}

/// Parses the edge-list format. Blank lines and lines starting with `#` are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or_else(|| err(1, "missing header `n m`"))?;
    let (n, m) = pair(hline, header)?;
    let mut edges = Vec::with_capacity(m);
    for (line_no, line) in lines {
        let (u, v) = pair(line_no, line)?;
        if u >= n || v >= n {
            return Err(err(line_no, format!("vertex out of range for n={n}")));
        }
        if u == v {
            return Err(err(line_no, format!("loop at vertex {u}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(err(
            hline,
            format!("header declares {m} edges, found {}", edges.len()),
        ));
    }
    Graph::new(n, edges)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
