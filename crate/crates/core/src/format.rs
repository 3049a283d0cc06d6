//! Text format for graphs:
//!
//! ```text
//! # optional comments
//! vertices: 1,2,3
//! 1 2
//! 2 3
//! ```
//!
//! Vertex ids are `b` or `b.p`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::var::Var;

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Whitespace-separated tokens with their 1-based columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices().chain([(line.len(), ' ')]) {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((line[..s].chars().count() + 1, &line[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    out
}

impl Graph {
    pub fn parse_text(text: &str) -> Result<Graph> {
        let mut vertices: Option<Vec<Var>> = None;
        let mut edges: BTreeSet<(Var, Var)> = BTreeSet::new();
        let mut last_line = 0;
        for (ln, line) in text.lines().enumerate() {
            let ln = ln + 1;
            last_line = ln;
            let trimmed = line.trim_start();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let indent = line.len() - trimmed.len();
            let Some(vs) = &vertices else {
                let Some(rest) = trimmed.strip_prefix("vertices:") else {
                    return Err(err(ln, indent + 1, "expected `vertices: <id>,<id>,...`"));
                };
                vertices = Some(parse_vertex_list(rest, ln, indent + "vertices:".len())?);
                continue;
            };
            let toks = tokens(line);
            if toks.len() != 2 {
                let col = toks.get(2).map_or(indent + 1, |t| t.0);
                return Err(err(ln, col, "an edge line has exactly two vertex ids"));
            }
            let mut ends = [Var::plain(1); 2];
            for (k, &(col, tok)) in toks.iter().enumerate() {
                let v: Var = tok
                    .parse()
                    .map_err(|_| err(ln, col, format!("bad vertex id `{tok}`")))?;
                if vs.binary_search(&v).is_err() {
                    return Err(err(ln, col, format!("vertex {v} is not declared")));
                }
                ends[k] = v;
            }
            let [u, v] = ends;
            if u == v {
                return Err(err(ln, toks[1].0, format!("loop at vertex {u}")));
            }
            let e = if u < v { (u, v) } else { (v, u) };
            if !edges.insert(e) {
                return Err(err(ln, toks[0].0, format!("duplicate edge {u} {v}")));
            }
        }
        let Some(vs) = vertices else {
            return Err(err(last_line.max(1), 1, "missing `vertices:` line"));
        };
        Graph::new(vs, edges)
    }

    /// Inverse of [`Graph::parse_text`].
    pub fn to_text(&self) -> String {
        let ids: Vec<String> = self.vertices().iter().map(Var::to_string).collect();
        let mut s = format!("vertices: {}\n", ids.join(","));
        for (u, v) in self.edges() {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }
}

fn parse_vertex_list(rest: &str, ln: usize, offset: usize) -> Result<Vec<Var>> {
    let mut out: Vec<Var> = Vec::new();
    if rest.trim().is_empty() {
        return Ok(out);
    }
    let mut col = offset + 1;
    for part in rest.split(',') {
        let lead = part.len() - part.trim_start().len();
        let id = part.trim();
        let v: Var = id
            .parse()
            .map_err(|_| err(ln, col + lead, format!("bad vertex id `{id}`")))?;
        if out.contains(&v) {
            return Err(err(ln, col + lead, format!("duplicate vertex {v}")));
        }
        out.push(v);
        col += part.chars().count() + 1;
    }
    Ok(out)
}
