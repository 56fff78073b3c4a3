//! Line-oriented graph files.
//!
//! ```text
//! # comment
//! vertex <id> euler=<int> [genus=<int>]
//! edge <id> <id>                 # repeat for multi-edges
//! arrow <id>                     # repeatable
//! cycle <label> <id>=<p/q> ...   # unlisted vertices get 0
//! ```

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::jumping::JumpInput;
use crate::lattice::{QCycle, ResolutionGraph, Vertex};
use crate::rational::{self, Rational};

#[derive(Debug, Clone, PartialEq)]
pub struct GraphFile {
    pub graph: ResolutionGraph,
    /// Named cycles in declaration order.
    pub cycles: Vec<(String, QCycle)>,
    /// Vertex index of every arrow, in declaration order.
    pub arrows: Vec<usize>,
}

#[derive(Clone, Copy)]
struct Pos {
    line: usize,
    column: usize,
}

fn err(pos: Pos, message: impl Into<String>) -> Error {
    Error::Parse {
        line: pos.line,
        column: pos.column,
        message: message.into(),
    }
}

/// Whitespace-separated tokens with their 1-based columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s, &line[s..]));
    }
    out.into_iter()
        .map(|(s, t)| (line[..s].chars().count() + 1, t))
        .collect()
}

fn key_value(tok: &str, pos: Pos) -> Result<(&str, &str)> {
    tok.split_once('=')
        .ok_or_else(|| err(pos, format!("expected key=value, got `{tok}`")))
}

fn parse_int<T: std::str::FromStr>(s: &str, pos: Pos, what: &str) -> Result<T> {
    s.parse()
        .map_err(|_| err(pos, format!("invalid {what} `{s}`")))
}

pub fn parse_graph(text: &str) -> Result<GraphFile> {
    let mut vertices: Vec<Vertex> = Vec::new();
    let mut edges: Vec<((String, Pos), (String, Pos))> = Vec::new();
    let mut arrows: Vec<(String, Pos)> = Vec::new();
    let mut cycles: Vec<(String, Vec<(String, Pos, Rational)>)> = Vec::new();

    for (n, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("");
        let toks = tokens(content);
        let Some(&(col, keyword)) = toks.first() else {
            continue;
        };
        let at = |c: usize| Pos {
            line: n + 1,
            column: c,
        };
        let line_end = at(content.trim_end().chars().count() + 1);
        match keyword {
            "vertex" => {
                let &(c, id) = toks
                    .get(1)
                    .ok_or_else(|| err(line_end, "missing vertex id"))?;
                if vertices.iter().any(|v| v.id == id) {
                    return Err(err(at(c), format!("duplicate vertex `{id}`")));
                }
                let (mut euler, mut genus) = (None, 0u32);
                for &(c, tok) in &toks[2..] {
                    let (k, v) = key_value(tok, at(c))?;
                    let vpos = at(c + k.chars().count() + 1);
                    match k {
                        "euler" => euler = Some(parse_int::<i64>(v, vpos, "Euler number")?),
                        "genus" => genus = parse_int::<u32>(v, vpos, "genus")?,
                        _ => return Err(err(at(c), format!("unknown vertex attribute `{k}`"))),
                    }
                }
                let euler = euler.ok_or_else(|| err(line_end, "missing euler=<int>"))?;
                vertices.push(Vertex::new(id, euler, genus));
            }
            "edge" => {
                if toks.len() != 3 {
                    return Err(err(at(col), "expected `edge <id> <id>`"));
                }
                let (a, b) = (toks[1], toks[2]);
                edges.push(((a.1.to_string(), at(a.0)), (b.1.to_string(), at(b.0))));
            }
            "arrow" => {
                if toks.len() != 2 {
                    return Err(err(at(col), "expected `arrow <id>`"));
                }
                arrows.push((toks[1].1.to_string(), at(toks[1].0)));
            }
            "cycle" => {
                let &(c, label) = toks
                    .get(1)
                    .ok_or_else(|| err(line_end, "missing cycle label"))?;
                if cycles.iter().any(|(l, _)| l == label) {
                    return Err(err(at(c), format!("duplicate cycle `{label}`")));
                }
                let mut entries = Vec::new();
                for &(c, tok) in &toks[2..] {
                    let (k, v) = key_value(tok, at(c))?;
                    let vpos = at(c + k.chars().count() + 1);
                    let value = rational::parse(v).map_err(|m| err(vpos, m))?;
                    entries.push((k.to_string(), at(c), value));
                }
                cycles.push((label.to_string(), entries));
            }
            other => return Err(err(at(col), format!("unknown keyword `{other}`"))),
        }
    }

    let index = |id: &str, pos: Pos| -> Result<usize> {
        vertices
            .iter()
            .position(|v| v.id == id)
            .ok_or_else(|| err(pos, format!("unknown vertex `{id}`")))
    };
    let mut edge_idx = Vec::new();
    for ((a, pa), (b, pb)) in &edges {
        let (i, j) = (index(a, *pa)?, index(b, *pb)?);
        if i == j {
            return Err(err(*pb, format!("self-loop at `{a}`")));
        }
        edge_idx.push((i, j));
    }
    let arrow_idx = arrows
        .iter()
        .map(|(a, p)| index(a, *p))
        .collect::<Result<Vec<_>>>()?;
    let mut named = Vec::new();
    for (label, entries) in cycles {
        let mut coeffs = vec![Rational::zero(); vertices.len()];
        for (id, pos, value) in entries {
            let i = index(&id, pos)?;
            coeffs[i] = value;
        }
        named.push((label, QCycle::new(coeffs)));
    }
    if vertices.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let graph = ResolutionGraph::new(vertices, edge_idx)?;
    Ok(GraphFile {
        graph,
        cycles: named,
        arrows: arrow_idx,
    })
}

impl GraphFile {
    pub fn cycle(&self, label: &str) -> Result<&QCycle> {
        self.cycles
            .iter()
            .find(|(l, _)| l == label)
            .map(|(_, c)| c)
            .ok_or_else(|| Error::precondition(format!("no cycle named `{label}`")))
    }

    /// `sum_a E*_{i(a)}` over the declared arrows.
    pub fn arrow_cycle(&self) -> Result<QCycle> {
        if self.arrows.is_empty() {
            return Err(Error::precondition("graph file declares no arrows"));
        }
        Ok(self.arrows.iter().fold(self.graph.zero_cycle(), |acc, &v| {
            acc + self.graph.dual_cycle(v)
        }))
    }

    /// Jump input for the arrows, scaled to integrality. Returns the scale `r`;
    /// exponents for the unscaled cycle are `r` times those of the input.
    pub fn arrow_input(&self) -> Result<(JumpInput, BigInt)> {
        JumpInput::from_rational(self.graph.clone(), &self.arrow_cycle()?)
    }

    /// Jump input for a named cycle, or for the arrows when `label` is `None`,
    /// cleared to integrality as in [`GraphFile::arrow_input`].
    pub fn jump_input(&self, label: Option<&str>) -> Result<(JumpInput, BigInt)> {
        match label {
            Some(l) => JumpInput::from_rational(self.graph.clone(), self.cycle(l)?),
            None => self.arrow_input(),
        }
    }

    /// Canonical text form; parsing it gives back an identical `GraphFile`.
    pub fn print(&self) -> String {
        let g = &self.graph;
        let mut out = String::new();
        for v in g.vertices() {
            writeln!(out, "vertex {} euler={} genus={}", v.id, v.euler, v.genus).unwrap();
        }
        for &(a, b) in g.edges() {
            writeln!(out, "edge {} {}", g.vertex(a).id, g.vertex(b).id).unwrap();
        }
        for &a in &self.arrows {
            writeln!(out, "arrow {}", g.vertex(a).id).unwrap();
        }
        for (label, c) in &self.cycles {
            write!(out, "cycle {label}").unwrap();
            for (v, x) in g.vertices().iter().zip(c.coeffs()) {
                if !x.is_zero() {
                    write!(out, " {}={}", v.id, rational::render(x)).unwrap();
                }
            }
            out.push('\n');
        }
        out
    }
}
