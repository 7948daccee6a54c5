//! Text formats for instances, graphs and solutions.
//!
//! ```text
//! c vertex-deletion instance, vertices 1..=n
//! p dagmc <n> <r> <p>
//! a <u> <v>
//! t <s> <t>
//!
//! c weighted arc-deletion instance
//! p dagmc-w <n> <r> <p>
//! a <u> <v> <w|inf>
//! t <s> <t>
//!
//! c undirected graph, 1-indexed in the file
//! p graph <n> <m>
//! e <u> <v>
//!
//! s YES | s NO
//! v <id>
//! ```

use std::fmt::Write as _;

use thiserror::Error;

use crate::dag::{CutSet, DagError, DagInstance, Vertex};
use crate::gadgets::{GadgetError, UndirectedGraph};
use crate::oracle::{Answer, ArcWeight, WeightedArcInstance, WeightedError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error(transparent)]
    Graph(#[from] DagError),
    #[error(transparent)]
    Weighted(#[from] WeightedError),
    #[error(transparent)]
    Gadget(#[from] GadgetError),
    #[error("vertex IDs must be exactly 1..={0} to render")]
    NonContiguousIds(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParsedInstance {
    Vertex(DagInstance),
    Weighted(WeightedArcInstance),
}

struct Token<'a> {
    text: &'a str,
    column: usize,
}

struct Line<'a> {
    number: usize,
    tokens: Vec<Token<'a>>,
}

impl<'a> Line<'a> {
    fn error(&self, k: usize, message: impl Into<String>) -> FormatError {
        FormatError::Parse {
            line: self.number,
            column: self.tokens.get(k).map_or(1, |t| t.column),
            message: message.into(),
        }
    }

    fn arity(&self, n: usize) -> Result<(), FormatError> {
        if self.tokens.len() == n {
            return Ok(());
        }
        let k = self.tokens.len().min(n);
        Err(self.error(k, format!(
            "'{}' line takes {} fields, found {}",
            self.tokens[0].text,
            n - 1,
            self.tokens.len() - 1
        )))
    }

    fn number<T: std::str::FromStr>(&self, k: usize) -> Result<T, FormatError> {
        self.tokens[k]
            .text
            .parse()
            .map_err(|_| self.error(k, format!("expected a nonnegative integer, found '{}'", self.tokens[k].text)))
    }

    fn vertex(&self, k: usize, n: usize) -> Result<Vertex, FormatError> {
        let v: usize = self.number(k)?;
        if v == 0 || v > n {
            return Err(self.error(k, format!("vertex {v} is outside 1..={n}")));
        }
        Ok(v as Vertex)
    }
}

fn lines(text: &str) -> impl Iterator<Item = Line<'_>> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let mut tokens = Vec::new();
        let mut offset = 0;
        for piece in raw.split_whitespace() {
            let start = raw[offset..].find(piece).expect("token") + offset;
            tokens.push(Token {
                text: piece,
                column: start + 1,
            });
            offset = start + piece.len();
        }
        match tokens.first() {
            None => None,
            Some(t) if t.text == "c" => None,
            Some(_) => Some(Line { number: i + 1, tokens }),
        }
    })
}

fn header<'a>(lines: &mut impl Iterator<Item = Line<'a>>) -> Result<Line<'a>, FormatError> {
    let line = lines.next().ok_or(FormatError::Parse {
        line: 1,
        column: 1,
        message: "missing 'p' header".into(),
    })?;
    if line.tokens[0].text != "p" || line.tokens.len() < 2 {
        return Err(line.error(0, "expected a 'p' header line"));
    }
    Ok(line)
}

/// Parses a vertex or weighted instance, chosen by the header.
pub fn parse_instance(text: &str) -> Result<ParsedInstance, FormatError> {
    let mut it = lines(text);
    let head = header(&mut it)?;
    let weighted = match head.tokens[1].text {
        "dagmc" => false,
        "dagmc-w" => true,
        other => return Err(head.error(1, format!("unknown format '{other}'"))),
    };
    head.arity(5)?;
    let n: usize = head.number(2)?;
    let r: usize = head.number(3)?;
    let p: u64 = head.number(4)?;
    if n > u32::MAX as usize {
        return Err(head.error(2, "too many vertices"));
    }

    let mut arcs = Vec::new();
    let mut pairs = Vec::new();
    let mut last = head.number;
    for line in it {
        last = line.number;
        match line.tokens[0].text {
            "a" => {
                line.arity(if weighted { 4 } else { 3 })?;
                let u = line.vertex(1, n)?;
                let v = line.vertex(2, n)?;
                let w = if weighted {
                    match line.tokens[3].text {
                        "inf" => ArcWeight::Infinite,
                        _ => {
                            let w: u64 = line.number(3)?;
                            if w == 0 {
                                return Err(line.error(3, "arc weight must be positive"));
                            }
                            ArcWeight::Finite(w)
                        }
                    }
                } else {
                    ArcWeight::Infinite
                };
                arcs.push((u, v, w));
            }
            "t" => {
                line.arity(3)?;
                if pairs.len() == r {
                    return Err(line.error(0, format!("more than the declared {r} terminal pairs")));
                }
                pairs.push((line.vertex(1, n)?, line.vertex(2, n)?));
            }
            "p" => return Err(line.error(0, "repeated header")),
            other => return Err(line.error(0, format!("unknown line type '{other}'"))),
        }
    }
    if pairs.len() != r {
        return Err(FormatError::Parse {
            line: last,
            column: 1,
            message: format!("declared {r} terminal pairs, found {}", pairs.len()),
        });
    }
    let vertices: Vec<Vertex> = (1..=n as Vertex).collect();
    if weighted {
        Ok(ParsedInstance::Weighted(WeightedArcInstance::new(vertices, arcs, pairs, p)?))
    } else {
        let p = usize::try_from(p).map_err(|_| head.error(4, "budget too large"))?;
        let arcs = arcs.into_iter().map(|(u, v, _)| (u, v));
        Ok(ParsedInstance::Vertex(DagInstance::build(vertices, arcs, pairs, p)?))
    }
}

/// Parses an undirected graph; file vertices `1..=n` become `0..n`.
pub fn parse_graph(text: &str) -> Result<UndirectedGraph, FormatError> {
    let mut it = lines(text);
    let head = header(&mut it)?;
    if head.tokens[1].text != "graph" {
        return Err(head.error(1, format!("expected 'graph', found '{}'", head.tokens[1].text)));
    }
    head.arity(4)?;
    let n: usize = head.number(2)?;
    let m: usize = head.number(3)?;
    let mut edges = Vec::new();
    let mut last = head.number;
    for line in it {
        last = line.number;
        match line.tokens[0].text {
            "e" => {
                line.arity(3)?;
                let u = line.vertex(1, n)? as usize - 1;
                let v = line.vertex(2, n)? as usize - 1;
                if u == v {
                    return Err(line.error(2, "self-loop"));
                }
                edges.push((u, v));
            }
            other => return Err(line.error(0, format!("unknown line type '{other}'"))),
        }
    }
    if edges.len() != m {
        return Err(FormatError::Parse {
            line: last,
            column: 1,
            message: format!("declared {m} edges, found {}", edges.len()),
        });
    }
    Ok(UndirectedGraph::new(n, edges)?)
}

/// Parses solver output. `s NO` yields `Answer::No`.
pub fn parse_solution(text: &str) -> Result<Answer, FormatError> {
    let mut status = None;
    let mut cut = CutSet::new();
    for line in lines(text) {
        match line.tokens[0].text {
            "s" => {
                line.arity(2)?;
                if status.is_some() {
                    return Err(line.error(0, "repeated status line"));
                }
                status = Some(match line.tokens[1].text {
                    "YES" => true,
                    "NO" => false,
                    other => return Err(line.error(1, format!("unknown status '{other}'"))),
                });
            }
            "v" => {
                line.arity(2)?;
                let v: Vertex = line.number(1)?;
                cut.insert(v);
            }
            other => return Err(line.error(0, format!("unknown line type '{other}'"))),
        }
    }
    match status {
        Some(true) => Ok(Answer::Yes(cut)),
        Some(false) if cut.is_empty() => Ok(Answer::No),
        Some(false) => Err(FormatError::Parse {
            line: 1,
            column: 1,
            message: "'s NO' with vertex lines".into(),
        }),
        None => Err(FormatError::Parse {
            line: 1,
            column: 1,
            message: "missing 's' status line".into(),
        }),
    }
}

fn contiguous(ids: impl Iterator<Item = Vertex>, n: usize) -> Result<(), FormatError> {
    let mut ids: Vec<Vertex> = ids.collect();
    ids.sort_unstable();
    if ids.iter().enumerate().all(|(k, &v)| v as usize == k + 1) {
        Ok(())
    } else {
        Err(FormatError::NonContiguousIds(n))
    }
}

/// Canonical text of a vertex instance: arcs sorted by IDs.
pub fn render_instance(g: &DagInstance) -> Result<String, FormatError> {
    contiguous(g.vertices().iter().copied(), g.len())?;
    let mut out = String::new();
    writeln!(out, "p dagmc {} {} {}", g.len(), g.num_pairs(), g.budget()).expect("string");
    for (u, v) in g.arcs() {
        writeln!(out, "a {u} {v}").expect("string");
    }
    for (s, t) in g.terminal_pairs() {
        writeln!(out, "t {s} {t}").expect("string");
    }
    Ok(out)
}

/// Relabels `g` onto `1..=n` preserving ID order. Entry `k` of the returned
/// vector is the original ID of new vertex `k + 1`.
pub fn compact(g: &DagInstance) -> (DagInstance, Vec<Vertex>) {
    let mut old: Vec<Vertex> = g.vertices().to_vec();
    old.sort_unstable();
    let new_of = |v: Vertex| old.binary_search(&v).expect("vertex of g") as Vertex + 1;
    let h = DagInstance::build(
        1..=old.len() as Vertex,
        g.arcs().into_iter().map(|(u, v)| (new_of(u), new_of(v))),
        g.terminal_pairs().iter().map(|&(s, t)| (new_of(s), new_of(t))),
        g.budget(),
    )
    .expect("relabeling keeps a valid instance");
    (h, old)
}

/// Text of a weighted instance, arcs in stored order.
pub fn render_weighted(inst: &WeightedArcInstance) -> Result<String, FormatError> {
    let n = inst.vertices().len();
    contiguous(inst.vertices().iter().copied(), n)?;
    let mut out = String::new();
    writeln!(out, "p dagmc-w {} {} {}", n, inst.terminal_pairs().len(), inst.budget()).expect("string");
    for (u, v, w) in inst.arcs() {
        writeln!(out, "a {u} {v} {w}").expect("string");
    }
    for (s, t) in inst.terminal_pairs() {
        writeln!(out, "t {s} {t}").expect("string");
    }
    Ok(out)
}

/// Text of an undirected graph, 1-indexed.
pub fn render_graph(g: &UndirectedGraph) -> String {
    let mut out = format!("p graph {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).expect("string");
    }
    out
}

/// `s YES` followed by the cut in topological order, or `s NO`.
pub fn render_answer(g: &DagInstance, answer: &Answer) -> String {
    match answer {
        Answer::No => "s NO\n".into(),
        Answer::Yes(cut) => {
            let mut out = String::from("s YES\n");
            for v in g.in_topological_order(cut.iter()) {
                writeln!(out, "v {v}").expect("string");
            }
            out
        }
    }
}
