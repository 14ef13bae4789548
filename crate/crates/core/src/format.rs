//! The line-oriented `kgraph 1` text format.
//!
//! ```text
//! kgraph 1
//! k 2
//! vertex v
//! edge b 1 v v        # edge <id> <color> <source> <range>
//! edge r 2 v v
//! square b r r b      # b r = r b
//! ```
//!
//! `#` starts a comment and blank lines are ignored. [`serialize_kgraph`]
//! writes vertices, edges and squares sorted by id with no comments, so two
//! equal graphs always produce identical bytes.

use std::fmt;
use std::fmt::Write as _;

use crate::graph::{EdgeDecl, KGraph, Presentation, SquareDecl, ValidationReport, VertexDecl};

pub const FORMAT_NAME: &str = "kgraph";
pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyntaxError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseError {
    Syntax(Vec<SyntaxError>),
    Invalid(ValidationReport),
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Syntax(errors) => {
                for e in errors {
                    writeln!(f, "{e}")?;
                }
                Ok(())
            }
            ParseError::Invalid(report) => write!(f, "{report}"),
        }
    }
}

impl std::error::Error for ParseError {}

/// Parses text into an unchecked presentation, recording line numbers.
pub fn parse_presentation(text: &str) -> Result<Presentation, ParseError> {
    let mut errors = Vec::new();
    let mut p = Presentation::default();
    let mut header = false;
    let mut rank_line: Option<usize> = None;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let Some((&keyword, args)) = tokens.split_first() else {
            continue;
        };
        let mut err = |message: String| errors.push(SyntaxError { line, message });

        if !header {
            header = true;
            if keyword != FORMAT_NAME {
                err(format!("expected header \"{FORMAT_NAME} {FORMAT_VERSION}\""));
                continue;
            }
            match args {
                [v] if v.parse::<u32>() == Ok(FORMAT_VERSION) => {}
                _ => err(format!("unsupported format version (expected {FORMAT_VERSION})")),
            }
            continue;
        }

        match (keyword, args) {
            ("k", [n]) => match n.parse::<usize>() {
                Ok(k) if rank_line.is_none() => {
                    p.rank = k;
                    rank_line = Some(line);
                }
                Ok(_) => err("rank declared twice".into()),
                Err(_) => err(format!("invalid rank {n:?}")),
            },
            ("vertex", [id]) => p.vertices.push(VertexDecl {
                id: id.to_string(),
                line: Some(line),
            }),
            ("edge", [id, color, source, range]) => match color.parse::<usize>() {
                Ok(color) => p.edges.push(EdgeDecl {
                    id: id.to_string(),
                    color,
                    source: source.to_string(),
                    range: range.to_string(),
                    line: Some(line),
                }),
                Err(_) => err(format!("invalid color {color:?}")),
            },
            ("square", [a, b, c, d]) => p.squares.push(SquareDecl {
                edges: [a, b, c, d].map(|s| s.to_string()),
                line: Some(line),
            }),
            (kw @ ("k" | "vertex" | "edge" | "square"), _) => {
                let expected = match kw {
                    "k" => "k <rank>",
                    "vertex" => "vertex <id>",
                    "edge" => "edge <id> <color> <source> <range>",
                    _ => "square <a> <b> <c> <d>",
                };
                err(format!("malformed line, expected \"{expected}\""))
            }
            (other, _) => err(format!("unknown keyword {other:?}")),
        }
    }

    if !header {
        errors.push(SyntaxError {
            line: 1,
            message: format!("missing header \"{FORMAT_NAME} {FORMAT_VERSION}\""),
        });
    } else if rank_line.is_none() {
        errors.push(SyntaxError {
            line: text.lines().count().max(1),
            message: "missing rank line \"k <rank>\"".into(),
        });
    }

    if errors.is_empty() {
        Ok(p)
    } else {
        Err(ParseError::Syntax(errors))
    }
}

/// Parses and validates.
pub fn parse_kgraph(text: &str) -> Result<KGraph, ParseError> {
    parse_presentation(text)?
        .build()
        .map_err(ParseError::Invalid)
}

pub fn serialize_kgraph(g: &KGraph) -> String {
    serialize_presentation(&g.presentation())
}

/// Writes a presentation in canonical order. For presentations that came
/// from a valid graph this equals [`serialize_kgraph`].
pub fn serialize_presentation(p: &Presentation) -> String {
    let mut vertices: Vec<&str> = p.vertices.iter().map(|v| v.id.as_str()).collect();
    vertices.sort_unstable();
    let mut edges: Vec<&EdgeDecl> = p.edges.iter().collect();
    edges.sort_by(|a, b| a.id.cmp(&b.id));
    let mut squares: Vec<&[String; 4]> = p.squares.iter().map(|s| &s.edges).collect();
    squares.sort();

    let mut out = String::new();
    let _ = writeln!(out, "{FORMAT_NAME} {FORMAT_VERSION}");
    let _ = writeln!(out, "k {}", p.rank);
    for v in vertices {
        let _ = writeln!(out, "vertex {v}");
    }
    for e in edges {
        let _ = writeln!(out, "edge {} {} {} {}", e.id, e.color, e.source, e.range);
    }
    for [a, b, c, d] in squares {
        let _ = writeln!(out, "square {a} {b} {c} {d}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn t1_parses_and_serializes_to_fixture_bytes() {
        let g = parse_kgraph(fixtures::T1).unwrap();
        assert_eq!(g.rank(), 2);
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.squares().len(), 1);
        assert_eq!(serialize_kgraph(&g), fixtures::T1);
    }

    #[test]
    fn color_out_of_range_has_line_number() {
        let text = "kgraph 1\nk 2\nvertex v\nedge b 3 v v\n";
        let err = parse_kgraph(text).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("line 4"), "{msg}");
        assert!(msg.contains("color out of range"), "{msg}");
    }

    #[test]
    fn syntax_errors() {
        let cases = [
            ("vertex v\n", "expected header"),
            ("kgraph 2\nk 2\n", "unsupported format version"),
            ("kgraph 1\nvertex v\n", "missing rank line"),
            ("kgraph 1\nk 2\nk 2\n", "rank declared twice"),
            ("kgraph 1\nk x\n", "invalid rank"),
            ("kgraph 1\nk 2\nedge b one v v\n", "invalid color"),
            ("kgraph 1\nk 2\nedge b 1 v\n", "malformed line"),
            ("kgraph 1\nk 2\nloop v\n", "unknown keyword"),
            ("", "missing header"),
        ];
        for (text, needle) in cases {
            let msg = parse_presentation(text).unwrap_err().to_string();
            assert!(msg.contains(needle), "{text:?} -> {msg}");
        }
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# leading comment\n\nkgraph 1 # header\nk 1\nvertex v # only vertex\n";
        let g = parse_kgraph(text).unwrap();
        assert_eq!(serialize_kgraph(&g), "kgraph 1\nk 1\nvertex v\n");
    }

    #[test]
    fn serialization_sorts_declarations() {
        let text = "kgraph 1\nk 2\nvertex w\nvertex v\nedge r 2 v v\nedge b 1 v v\nedge r' 2 w w\nedge b' 1 w w\nsquare b' r' r' b'\nsquare b r r b\n";
        let g = parse_kgraph(text).unwrap();
        assert_eq!(serialize_kgraph(&g), fixtures::T1_T1_CANONICAL);
    }
}
