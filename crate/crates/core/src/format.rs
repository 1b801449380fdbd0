//! Text input formats. Blank lines and `#` comments are ignored.
//!
//! ```text
//! graph <n>            complex <n>          tspread t=<t> n=<n> u=<i_1>,...,<i_d>
//! <i> <j>              <v_1> <v_2> ...
//! ```

use std::fmt;

use thiserror::Error;

use crate::graphs::{Graph, GraphError};
use crate::simplicial::{SimplicialComplex, SimplicialError};
use crate::tspread::{BorelSpec, TspreadError};
use crate::varset::MAX_VARS;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Input {
    Graph(Graph),
    Complex(SimplicialComplex),
    Tspread(BorelSpec),
}

impl Input {
    pub fn kind(&self) -> &'static str {
        match self {
            Input::Graph(_) => "graph",
            Input::Complex(_) => "complex",
            Input::Tspread(_) => "tspread",
        }
    }

    pub fn to_text(&self) -> String {
        match self {
            Input::Graph(g) => g.to_text(),
            Input::Complex(c) => c.to_text(),
            Input::Tspread(s) => s.to_text(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("empty input")]
    Empty,
    #[error("unknown header {0:?}; expected graph, complex or tspread")]
    UnknownHeader(String),
    #[error("malformed header: {0}")]
    BadHeader(String),
    #[error("not a positive integer: {0:?}")]
    BadNumber(String),
    #[error("an edge needs exactly two vertices, found {0}")]
    EdgeArity(usize),
    #[error("unexpected content after the tspread line")]
    TrailingContent,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Complex(#[from] SimplicialError),
    #[error(transparent)]
    Tspread(#[from] TspreadError),
}

fn err(line: usize, kind: impl Into<ParseErrorKind>) -> ParseError {
    ParseError {
        line,
        kind: kind.into(),
    }
}

/// Non-empty lines with comments stripped, paired with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap().trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn number(line: usize, tok: &str) -> Result<usize, ParseError> {
    match tok.parse::<usize>() {
        Ok(v) if v > 0 => Ok(v),
        _ => Err(err(line, ParseErrorKind::BadNumber(tok.to_string()))),
    }
}

fn ambient(line: usize, rest: &[&str], what: &str) -> Result<usize, ParseError> {
    let [tok] = rest else {
        return Err(err(line, ParseErrorKind::BadHeader(format!("expected `{what} <n>`"))));
    };
    number(line, tok)
}

pub fn parse_input(text: &str) -> Result<Input, ParseError> {
    let mut lines = content_lines(text);
    let Some((line, header)) = lines.next() else {
        return Err(err(text.lines().count().max(1), ParseErrorKind::Empty));
    };
    let tokens: Vec<&str> = header.split_whitespace().collect();
    match tokens[0] {
        "graph" => parse_graph(ambient(line, &tokens[1..], "graph")?, line, lines).map(Input::Graph),
        "complex" => parse_complex(ambient(line, &tokens[1..], "complex")?, line, lines)
            .map(Input::Complex),
        "tspread" => {
            let spec = parse_tspread_line(line, &tokens[1..])?;
            if let Some((extra, _)) = lines.next() {
                return Err(err(extra, ParseErrorKind::TrailingContent));
            }
            Ok(Input::Tspread(spec))
        }
        other => Err(err(line, ParseErrorKind::UnknownHeader(other.to_string()))),
    }
}

fn check_n(line: usize, n: usize) -> Result<(), ParseError> {
    if n > MAX_VARS {
        return Err(err(line, GraphError::TooManyVertices));
    }
    Ok(())
}

fn parse_graph<'a>(
    n: usize,
    header_line: usize,
    lines: impl Iterator<Item = (usize, &'a str)>,
) -> Result<Graph, ParseError> {
    check_n(header_line, n)?;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (line, body) in lines {
        let toks: Vec<&str> = body.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(err(line, ParseErrorKind::EdgeArity(toks.len())));
        }
        let (a, b) = (number(line, toks[0])?, number(line, toks[1])?);
        edges.push((a, b));
        // validate the prefix so the error points at this line
        Graph::new(n, &edges).map_err(|e| err(line, e))?;
    }
    Graph::new(n, &edges).map_err(|e| err(header_line, e))
}

fn parse_complex<'a>(
    n: usize,
    header_line: usize,
    lines: impl Iterator<Item = (usize, &'a str)>,
) -> Result<SimplicialComplex, ParseError> {
    if n > MAX_VARS {
        return Err(err(header_line, SimplicialError::TooManyVertices));
    }
    let mut facets: Vec<Vec<usize>> = Vec::new();
    for (line, body) in lines {
        let facet = body
            .split_whitespace()
            .map(|tok| number(line, tok))
            .collect::<Result<Vec<_>, _>>()?;
        facets.push(facet);
        SimplicialComplex::new(n, &facets).map_err(|e| err(line, e))?;
    }
    SimplicialComplex::new(n, &facets).map_err(|e| err(header_line, e))
}

fn parse_tspread_line(line: usize, tokens: &[&str]) -> Result<BorelSpec, ParseError> {
    let bad = |msg: &str| err(line, ParseErrorKind::BadHeader(msg.to_string()));
    let expected = "expected `tspread t=<t> n=<n> u=<i_1>,...,<i_d>`";
    let [t, n, u] = tokens else {
        return Err(bad(expected));
    };
    let value = |tok: &'_ str, key: &str| -> Result<String, ParseError> {
        tok.strip_prefix(key)
            .and_then(|r| r.strip_prefix('='))
            .map(str::to_string)
            .ok_or_else(|| bad(expected))
    };
    let t = number(line, &value(t, "t")?)?;
    let n = number(line, &value(n, "n")?)?;
    let indices = value(u, "u")?
        .split(',')
        .map(|tok| number(line, tok))
        .collect::<Result<Vec<_>, _>>()?;
    BorelSpec::new(t, n, indices).map_err(|e| err(line, e))
}

impl fmt::Display for Input {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
