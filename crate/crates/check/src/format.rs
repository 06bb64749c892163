//! Line-oriented pattern files.
//!
//! ```text
//! # comment
//! pattern P232
//! vertices 3
//! edge 0 1
//! edge 1 2
//! half 0        # half-edges in cyclic frontier order
//! half 1
//! half 2
//! sym 2 1 0     # image of each frontier index; identity is implied
//! ```

use std::fmt::Write as _;

use kempe_core::{Pattern, PatternError, Symmetry};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("empty pattern file")]
    Empty,
    #[error("{}invalid pattern: {source}", line.map(|l| format!("line {l}: ")).unwrap_or_default())]
    Invalid {
        line: Option<usize>,
        #[source]
        source: PatternError,
    },
}

struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokens(line: &str) -> Vec<Token<'_>> {
    let content = line.split('#').next().unwrap_or("");
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in content.char_indices().chain(std::iter::once((content.len(), ' '))) {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push(Token { text: &content[s..i], column: content[..s].chars().count() + 1 });
                start = None;
            }
            _ => {}
        }
    }
    out
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax { line, column, message: message.into() }
}

fn number(line: usize, tok: &Token<'_>) -> Result<usize, ParseError> {
    tok.text
        .parse()
        .map_err(|_| syntax(line, tok.column, format!("expected a non-negative integer, found {:?}", tok.text)))
}

fn arity(line: usize, toks: &[Token<'_>], expected: usize) -> Result<(), ParseError> {
    if toks.len() - 1 == expected {
        return Ok(());
    }
    let column = toks.get(expected + 1).map_or(toks[0].column + toks[0].text.len(), |t| t.column);
    Err(syntax(line, column, format!("`{}` takes {expected} argument(s), found {}", toks[0].text, toks.len() - 1)))
}

/// Parses and validates a pattern file.
pub fn parse_pattern(text: &str) -> Result<Pattern, ParseError> {
    let mut name: Option<String> = None;
    let mut vertices: Option<usize> = None;
    let mut edges = Vec::new();
    let mut edge_lines = Vec::new();
    let mut halves = Vec::new();
    let mut half_lines = Vec::new();
    let mut syms = Vec::new();
    let mut sym_lines = Vec::new();
    let mut saw_directive = false;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let toks = tokens(raw);
        let Some(head) = toks.first() else { continue };
        saw_directive = true;
        match head.text {
            "pattern" => {
                if name.is_some() {
                    return Err(syntax(line, head.column, "duplicate `pattern` header"));
                }
                arity(line, &toks, 1)?;
                name = Some(toks[1].text.to_string());
            }
            "vertices" => {
                if vertices.is_some() {
                    return Err(syntax(line, head.column, "duplicate `vertices` line"));
                }
                arity(line, &toks, 1)?;
                vertices = Some(number(line, &toks[1])?);
            }
            "edge" => {
                arity(line, &toks, 2)?;
                edges.push((number(line, &toks[1])?, number(line, &toks[2])?));
                edge_lines.push(line);
            }
            "half" => {
                arity(line, &toks, 1)?;
                halves.push(number(line, &toks[1])?);
                half_lines.push(line);
            }
            "sym" => {
                if toks.len() < 2 {
                    return Err(syntax(line, head.column + 3, "`sym` needs the image of every frontier index"));
                }
                let images = toks[1..].iter().map(|t| number(line, t)).collect::<Result<Vec<_>, _>>()?;
                syms.push(Symmetry::from_images(images));
                sym_lines.push(line);
            }
            other => return Err(syntax(line, head.column, format!("unknown directive {other:?}"))),
        }
    }

    if !saw_directive {
        return Err(ParseError::Empty);
    }
    let last = text.lines().count().max(1);
    let name = name.ok_or_else(|| syntax(1, 1, "missing `pattern <name>` header"))?;
    let vertex_count = vertices.ok_or_else(|| syntax(last, 1, "missing `vertices <n>` line"))?;

    let m = halves.len();
    let mut symmetries = syms.clone();
    if !symmetries.iter().any(|s| s.image().len() == m && s.is_identity()) {
        symmetries.push(Symmetry::identity(m));
    }

    Pattern::new(name, vertex_count, edges.clone(), halves.clone(), symmetries).map_err(|source| {
        let sym_line = |s: &[usize]| syms.iter().position(|x| x.image() == s).map(|i| sym_lines[i]);
        let line = match &source {
            PatternError::DuplicateEdge { u, v } => {
                edges.iter().rposition(|e| e == &(*u, *v)).map(|i| edge_lines[i])
            }
            PatternError::SelfLoop { vertex } => edges.iter().position(|e| e == &(*vertex, *vertex)).map(|i| edge_lines[i]),
            PatternError::DuplicateHalfEdge { vertex } => halves.iter().rposition(|h| h == vertex).map(|i| half_lines[i]),
            PatternError::VertexOutOfRange { vertex, .. } => edges
                .iter()
                .position(|&(u, v)| u == *vertex || v == *vertex)
                .map(|i| edge_lines[i])
                .or_else(|| halves.iter().position(|h| h == vertex).map(|i| half_lines[i])),
            PatternError::NotAPermutation { symmetry }
            | PatternError::NotDihedral { symmetry }
            | PatternError::NotInduced { symmetry } => sym_line(symmetry),
            PatternError::NotClosed { a, .. } => sym_line(a),
            _ => None,
        };
        ParseError::Invalid { line, source }
    })
}

/// Renders a pattern in the file format; `parse_pattern` reads it back to an equal value.
pub fn write_pattern(pattern: &Pattern) -> String {
    let mut out = String::new();
    let name = if pattern.name().is_empty() { "unnamed" } else { pattern.name() };
    writeln!(out, "pattern {name}").unwrap();
    writeln!(out, "vertices {}", pattern.vertex_count()).unwrap();
    for (u, v) in pattern.internal_edges() {
        writeln!(out, "edge {u} {v}").unwrap();
    }
    for v in pattern.frontier() {
        writeln!(out, "half {v}").unwrap();
    }
    for s in pattern.symmetries().iter().filter(|s| !s.is_identity()) {
        let images: Vec<String> = s.image().iter().map(ToString::to_string).collect();
        writeln!(out, "sym {}", images.join(" ")).unwrap();
    }
    out
}
