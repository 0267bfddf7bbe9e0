//! Plain-text edge lists: a header line `n m`, then `m` lines `u v` with 0-based endpoints.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn write(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn parse(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .enumerate()
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (_, header) = lines
        .next()
        .ok_or_else(|| Error::Parse("edge list is empty".into()))?;
    let (n, m) = pair(header, 1)?;
    let mut g = Graph::new(n)?;
    let mut seen = 0;
    for (lineno, line) in lines {
        let (u, v) = pair(line, lineno + 1)?;
        g.add_edge(u, v)
            .map_err(|e| Error::Parse(format!("line {}: {e}", lineno + 1)))?;
        seen += 1;
    }
    if seen != m {
        return Err(Error::Parse(format!(
            "header declares {m} edges, found {seen}"
        )));
    }
    Ok(g)
}

fn pair(line: &str, lineno: usize) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace().map(str::parse::<usize>);
    match (it.next(), it.next(), it.next()) {
        (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
        _ => Err(Error::Parse(format!(
            "line {lineno}: expected two non-negative integers, got {line:?}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_triangle() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let text = write(&g);
        assert_eq!(text, "3 3\n0 1\n0 2\n1 2\n");
        assert_eq!(parse(&text).unwrap(), g);
    }

    #[test]
    fn parse_errors() {
        assert!(parse("").is_err());
        assert!(parse("3 1\n0 1\n1 2\n").is_err());
        assert!(parse("3 1\n0 3\n").is_err());
        assert!(parse("3 1\n1 1\n").is_err());
        assert!(parse("3 x\n").is_err());
        assert_eq!(parse("63 0\n"), Err(Error::Size(63)));
    }
}
