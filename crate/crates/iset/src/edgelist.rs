//! Plain-text edge lists: a header line `n m`, then `m` lines `u v` with
//! 0-based endpoints. Lines starting with `#` are comments.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::Path;

use iset_core::Graph;

#[derive(Debug, thiserror::Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: self-loop ({v}, {v})")]
    SelfLoop { line: usize, v: usize },
    #[error("line {line}: edge ({u}, {v}) has an endpoint outside 0..{n}")]
    OutOfRange { line: usize, u: usize, v: usize, n: usize },
    #[error("header announces {expected} edges but {found} edge lines follow")]
    EdgeCount { expected: usize, found: usize },
    #[error("missing `n m` header")]
    MissingHeader,
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
}

/// A parsed graph with any non-fatal diagnostics.
#[derive(Debug, Clone)]
pub struct Parsed {
    pub graph: Graph,
    pub warnings: Vec<String>,
}

fn numbers(line: usize, text: &str) -> Result<(usize, usize), ParseError> {
    let mut it = text.split_whitespace();
    let mut next = || -> Result<usize, ParseError> {
        let tok = it.next().ok_or_else(|| ParseError::Syntax { line, message: "expected two integers".into() })?;
        tok.parse().map_err(|_| ParseError::Syntax { line, message: format!("`{tok}` is not a non-negative integer") })
    };
    let pair = (next()?, next()?);
    if let Some(extra) = it.next() {
        return Err(ParseError::Syntax { line, message: format!("unexpected token `{extra}`") });
    }
    Ok(pair)
}

pub fn parse(text: &str) -> Result<Parsed, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let (n, m) = numbers(hline, header)?;
    let mut edges = Vec::with_capacity(m);
    let mut seen = BTreeSet::new();
    let mut warnings = Vec::new();
    let mut found = 0;
    for (line, text) in lines {
        found += 1;
        let (u, v) = numbers(line, text)?;
        if u >= n || v >= n {
            return Err(ParseError::OutOfRange { line, u, v, n });
        }
        if u == v {
            return Err(ParseError::SelfLoop { line, v });
        }
        if !seen.insert((u.min(v), u.max(v))) {
            warnings.push(format!("line {line}: duplicate edge ({u}, {v}) ignored"));
            continue;
        }
        edges.push((u, v));
    }
    if found != m {
        return Err(ParseError::EdgeCount { expected: m, found });
    }
    let graph = Graph::from_edge_list(n, &edges).expect("endpoints validated");
    Ok(Parsed { graph, warnings })
}

pub fn read(path: &Path) -> Result<Parsed, ParseError> {
    let text = std::fs::read_to_string(path)
        .map_err(|source| ParseError::Io { path: path.display().to_string(), source })?;
    parse(&text)
}

/// Serializes `g` with edges as `u v`, `u < v`, in lexicographic order.
pub fn write(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", g.vertex_count(), g.edge_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments_and_duplicates() {
        let text = "# C5\n5 6\n0 1\n1 2\n\n2 3\n# mid\n3 4\n4 0\n1 0\n";
        let p = parse(text).unwrap();
        assert_eq!(p.graph, Graph::cycle(5));
        assert_eq!(p.warnings.len(), 1);
        assert!(p.warnings[0].contains("line 10"));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(parse("3 1\n1 1\n"), Err(ParseError::SelfLoop { line: 2, v: 1 })));
        assert!(matches!(parse("3 1\n0 3\n"), Err(ParseError::OutOfRange { u: 0, v: 3, .. })));
        assert!(matches!(parse("3 2\n0 1\n"), Err(ParseError::EdgeCount { expected: 2, found: 1 })));
        assert!(matches!(parse("# nothing\n"), Err(ParseError::MissingHeader)));
        assert!(matches!(parse("3 1\n0 x\n"), Err(ParseError::Syntax { line: 2, .. })));
        assert!(matches!(parse("3 1\n0 1 2\n"), Err(ParseError::Syntax { line: 2, .. })));
    }

    #[test]
    fn write_then_parse() {
        let g = Graph::petersen();
        let text = write(&g);
        assert!(text.starts_with("10 15\n0 1\n"));
        assert_eq!(parse(&text).unwrap().graph, g);
        assert_eq!(write(&Graph::empty(4)), "4 0\n");
    }
}
