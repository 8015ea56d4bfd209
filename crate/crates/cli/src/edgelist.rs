//! Edge-list text format: the order on the first line, then one `u v` line
//! per edge, every line terminated by `\n`.

use std::fmt::Write as _;

use chemtree::{ChemicalTree, TreeError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum EdgeListError {
    #[error("line {line}: {reason}")]
    Syntax { line: usize, reason: String },
    #[error("expected {expected} edges, found {found}")]
    EdgeCount { expected: usize, found: usize },
    #[error(transparent)]
    Tree(#[from] TreeError),
}

fn syntax(line: usize, reason: impl Into<String>) -> EdgeListError {
    EdgeListError::Syntax { line, reason: reason.into() }
}

pub fn format(t: &ChemicalTree) -> String {
    let mut out = String::new();
    writeln!(out, "{}", t.order()).unwrap();
    for (u, v) in t.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// Parses one tree. Blank lines after the last edge are ignored.
pub fn parse(text: &str) -> Result<ChemicalTree, EdgeListError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
    let (_, first) = lines.next().ok_or_else(|| syntax(1, "empty input"))?;
    let order: usize = first.parse().map_err(|_| syntax(1, format!("expected the order, found {first:?}")))?;
    let mut edges = Vec::new();
    let mut blank_seen = false;
    for (no, line) in lines {
        if line.is_empty() {
            blank_seen = true;
            continue;
        }
        if blank_seen {
            return Err(syntax(no, "content after a blank line"));
        }
        let mut fields = line.split_whitespace();
        let mut id = || -> Result<usize, EdgeListError> {
            let f = fields.next().ok_or_else(|| syntax(no, "expected two vertex ids"))?;
            f.parse().map_err(|_| syntax(no, format!("bad vertex id {f:?}")))
        };
        let (u, v) = (id()?, id()?);
        if fields.next().is_some() {
            return Err(syntax(no, "expected two vertex ids"));
        }
        edges.push((u, v));
    }
    if edges.len() + 1 != order.max(1) {
        return Err(EdgeListError::EdgeCount { expected: order.saturating_sub(1), found: edges.len() });
    }
    Ok(ChemicalTree::new(order, &edges)?)
}
