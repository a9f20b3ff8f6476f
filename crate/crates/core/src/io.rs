//! Plain-text formats for parent graphs, orientations and scripts.
//!
//! Parent graph:
//! ```text
//! graph <n>
//! edges <m>
//! <i> <j>        (m lines, 1-based parent vertices)
//! mult <p1> ... <pn>
//! ```
//!
//! Orientation: one arc per line, `<i>.<a> -> <j>.<b>`.
//!
//! Script: one step per line, `<k>:<directed|oriented|tt3>: <v1> <v2> ... <vk>`.
//!
//! Blank lines and lines starting with `#` are ignored everywhere.

use crate::graph_core::{MultGraph, ParentGraph, VertexId};
use crate::orientation::{Arc, Orientation};
use crate::refine::{FamilyTag, Step};
use crate::{Error, Result};
use std::fmt::Write as _;

fn err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

/// Numbered, non-blank, non-comment lines.
fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_num<T: std::str::FromStr>(line: usize, tok: &str, what: &str) -> Result<T> {
    tok.parse().map_err(|_| err(line, format!("expected {what}, got `{tok}`")))
}

pub fn parse_mult_graph(text: &str) -> Result<MultGraph> {
    let mut it = lines(text);
    let (ln, l) = it.next().ok_or_else(|| err(1, "empty input"))?;
    let n: usize = match l.split_whitespace().collect::<Vec<_>>()[..] {
        ["graph", tok] => parse_num(ln, tok, "vertex count")?,
        _ => return Err(err(ln, "expected `graph <n>`")),
    };
    let (ln, l) = it.next().ok_or_else(|| err(ln, "missing `edges <m>` line"))?;
    let m: usize = match l.split_whitespace().collect::<Vec<_>>()[..] {
        ["edges", tok] => parse_num(ln, tok, "edge count")?,
        _ => return Err(err(ln, "expected `edges <m>`")),
    };
    let mut edges = Vec::with_capacity(m);
    let mut last = ln;
    for _ in 0..m {
        let (ln, l) = it.next().ok_or_else(|| err(last, "missing edge line"))?;
        last = ln;
        match l.split_whitespace().collect::<Vec<_>>()[..] {
            [a, b] => edges.push((
                parse_num::<usize>(ln, a, "vertex")?,
                parse_num::<usize>(ln, b, "vertex")?,
            )),
            _ => return Err(err(ln, "expected `<i> <j>`")),
        }
    }
    let (ln, l) = it.next().ok_or_else(|| err(last, "missing `mult ...` line"))?;
    let mut toks = l.split_whitespace();
    if toks.next() != Some("mult") {
        return Err(err(ln, "expected `mult <p1> ... <pn>`"));
    }
    let p: Vec<usize> = toks
        .map(|t| parse_num(ln, t, "multiplicity"))
        .collect::<Result<_>>()?;
    if let Some((ln, _)) = it.next() {
        return Err(err(ln, "trailing content"));
    }
    let parent = ParentGraph::new(n, edges)?;
    MultGraph::new(parent, p)
}

pub fn emit_mult_graph(m: &MultGraph) -> String {
    let g = m.parent();
    let mut out = String::new();
    writeln!(out, "graph {}", g.n()).unwrap();
    writeln!(out, "edges {}", g.edges().count()).unwrap();
    for (a, b) in g.edges() {
        writeln!(out, "{a} {b}").unwrap();
    }
    let ps: Vec<String> = m.multiplicities().iter().map(|p| p.to_string()).collect();
    writeln!(out, "mult {}", ps.join(" ")).unwrap();
    out
}

fn parse_vertex(line: usize, tok: &str) -> Result<VertexId> {
    let (a, b) = tok
        .split_once('.')
        .ok_or_else(|| err(line, format!("expected `<i>.<a>` vertex, got `{tok}`")))?;
    Ok(VertexId::new(
        parse_num(line, a, "partite index")?,
        parse_num(line, b, "copy index")?,
    ))
}

pub fn parse_orientation(m: &MultGraph, text: &str) -> Result<Orientation> {
    let mut arcs = Vec::new();
    for (ln, l) in lines(text) {
        match l.split_whitespace().collect::<Vec<_>>()[..] {
            [t, "->", h] => arcs.push(Arc::new(parse_vertex(ln, t)?, parse_vertex(ln, h)?)),
            _ => return Err(err(ln, "expected `<i>.<a> -> <j>.<b>`")),
        }
    }
    Orientation::from_arcs(m, arcs)
}

pub fn emit_orientation(d: &Orientation) -> String {
    let mut out = String::new();
    for a in d.arcs() {
        writeln!(out, "{a}").unwrap();
    }
    out
}

pub fn parse_script_steps(text: &str) -> Result<Vec<Step>> {
    let mut steps = Vec::new();
    for (ln, l) in lines(text) {
        let mut parts = l.splitn(3, ':');
        let k: usize = parse_num(ln, parts.next().unwrap_or("").trim(), "step length")?;
        let tag = match parts.next().map(str::trim) {
            Some("directed") => FamilyTag::Directed,
            Some("oriented") => FamilyTag::Oriented,
            Some("tt3") => FamilyTag::Tt3,
            other => {
                return Err(err(
                    ln,
                    format!("expected tag directed|oriented|tt3, got `{}`", other.unwrap_or("")),
                ))
            }
        };
        let verts: Vec<VertexId> = parts
            .next()
            .unwrap_or("")
            .split_whitespace()
            .map(|t| parse_vertex(ln, t))
            .collect::<Result<_>>()?;
        if verts.len() != k {
            return Err(err(ln, format!("step declares {k} vertices but lists {}", verts.len())));
        }
        if k < 3 {
            return Err(err(ln, "step needs at least 3 vertices"));
        }
        steps.push(Step { vertices: verts, tag });
    }
    Ok(steps)
}

pub fn emit_script_steps(steps: &[Step]) -> String {
    let mut out = String::new();
    for s in steps {
        writeln!(out, "{s}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph_core::ParentGraph;

    #[test]
    fn mult_graph_round_trip() {
        let m = MultGraph::new(ParentGraph::complete(3), vec![2, 1, 2]).unwrap();
        let text = emit_mult_graph(&m);
        let back = parse_mult_graph(&text).unwrap();
        assert_eq!(back.multiplicities(), m.multiplicities());
        assert_eq!(back.edges(), m.edges());
        assert_eq!(emit_mult_graph(&back), text);
    }

    #[test]
    fn orientation_round_trip_ignores_comments() {
        let m = MultGraph::new(ParentGraph::path(3), vec![1, 2, 1]).unwrap();
        let d = Orientation::ascending(&m);
        let text = format!("# balanced: exact\n{}", emit_orientation(&d));
        assert_eq!(parse_orientation(&m, &text).unwrap(), d);
    }

    #[test]
    fn script_round_trip() {
        let text = "4:directed: 1.1 2.1 1.2 2.2\n3:tt3: 1.1 2.1 3.1\n3:oriented: 1.1 2.1 3.1\n";
        let steps = parse_script_steps(text).unwrap();
        assert_eq!(steps.len(), 3);
        assert_eq!(emit_script_steps(&steps), text);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        assert!(matches!(
            parse_mult_graph("graph 3\nedges 1\n1 x\nmult 1 1 1"),
            Err(Error::Parse { line: 3, .. })
        ));
        let m = MultGraph::new(ParentGraph::path(2), vec![1, 1]).unwrap();
        assert!(matches!(
            parse_orientation(&m, "1.1 => 2.1"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_script_steps("3:weird: 1.1 2.1 3.1"),
            Err(Error::Parse { line: 1, .. })
        ));
    }
}
