//! Plain-text formats for matrices, polytopes and graphs.
//!
//! Blank lines and anything after `#` are ignored everywhere.

use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::{BigInt, IntMatrix, Point};

/// Non-empty content lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn ints(line: usize, s: &str) -> Result<Vec<BigInt>> {
    s.split_whitespace()
        .map(|t| t.parse::<BigInt>().map_err(|_| parse_err(line, format!("'{t}' is not an integer"))))
        .collect()
}

fn counts<const K: usize>(line: usize, s: &str) -> Result<[usize; K]> {
    let v: Vec<usize> = s
        .split_whitespace()
        .map(|t| t.parse::<usize>().map_err(|_| parse_err(line, format!("'{t}' is not a count"))))
        .collect::<Result<_>>()?;
    v.try_into()
        .map_err(|_| parse_err(line, format!("expected {K} counts")))
}

/// `d n`, then `d` rows of `n` integers.
pub fn parse_matrix(text: &str) -> Result<IntMatrix> {
    let mut lines = content_lines(text);
    let (l0, head) = lines.next().ok_or_else(|| parse_err(1, "missing 'd n' header"))?;
    let [d, n] = counts::<2>(l0, head)?;
    let mut rows = Vec::with_capacity(d);
    for (line, s) in lines {
        if rows.len() == d {
            return Err(parse_err(line, format!("more than {d} rows")));
        }
        let row = ints(line, s)?;
        if row.len() != n {
            return Err(parse_err(line, format!("expected {n} entries, found {}", row.len())));
        }
        rows.push(row);
    }
    if rows.len() != d {
        return Err(parse_err(text.lines().count().max(1), format!("expected {d} rows, found {}", rows.len())));
    }
    IntMatrix::new(d, n, rows.into_iter().flatten().collect())
}

pub fn format_matrix(m: &IntMatrix) -> String {
    let mut s = format!("{} {}\n", m.rows(), m.cols());
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(ToString::to_string).collect();
        s.push_str(&row.join(" "));
        s.push('\n');
    }
    s
}

/// `dim d`, then one point of `d` integers per line.
pub fn parse_points(text: &str) -> Result<Vec<Point>> {
    let mut lines = content_lines(text);
    let (l0, head) = lines.next().ok_or_else(|| parse_err(1, "missing 'dim d' header"))?;
    let d = match head.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["dim", d] => d.parse::<usize>().map_err(|_| parse_err(l0, format!("'{d}' is not a dimension")))?,
        _ => return Err(parse_err(l0, "expected 'dim d'")),
    };
    let mut pts = Vec::new();
    for (line, s) in lines {
        let p = ints(line, s)?;
        if p.len() != d {
            return Err(parse_err(line, format!("expected {d} coordinates, found {}", p.len())));
        }
        pts.push(p);
    }
    if pts.is_empty() {
        return Err(Error::EmptyInput);
    }
    Ok(pts)
}

pub fn format_points(points: &[Point]) -> String {
    let d = points.first().map_or(0, Vec::len);
    let mut s = format!("dim {d}\n");
    for p in points {
        let row: Vec<String> = p.iter().map(ToString::to_string).collect();
        s.push_str(&row.join(" "));
        s.push('\n');
    }
    s
}

/// `d m`, then `m` lines `u v` (1-indexed).
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (l0, head) = lines.next().ok_or_else(|| parse_err(1, "missing 'd m' header"))?;
    let [d, m] = counts::<2>(l0, head)?;
    let mut edges = Vec::with_capacity(m);
    for (line, s) in lines {
        if edges.len() == m {
            return Err(parse_err(line, format!("more than {m} edges")));
        }
        let [u, v] = counts::<2>(line, s)?;
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(parse_err(text.lines().count().max(1), format!("expected {m} edges, found {}", edges.len())));
    }
    Graph::new(d, &edges)
}

pub fn format_graph(g: &Graph) -> String {
    g.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_round_trip() {
        let text = "# C3\n3 3\n1 0 1\n1 1 0\n\n0 1 1\n";
        let m = parse_matrix(text).unwrap();
        assert_eq!(m, IntMatrix::from_i64(3, 3, &[1, 0, 1, 1, 1, 0, 0, 1, 1]).unwrap());
        assert_eq!(parse_matrix(&format_matrix(&m)).unwrap(), m);
    }

    #[test]
    fn matrix_errors() {
        assert!(matches!(parse_matrix(""), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_matrix("2 2\n1 0\n0"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_matrix("1 1\nx"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_matrix("1 1\n1\n2"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_matrix("2 1\n1"), Err(Error::Parse { .. })));
    }

    #[test]
    fn points_round_trip() {
        let pts = parse_points("dim 2\n1 0\n0 1\n-1 -1\n").unwrap();
        assert_eq!(pts.len(), 3);
        assert_eq!(parse_points(&format_points(&pts)).unwrap(), pts);
        assert!(matches!(parse_points("2\n1 0"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_points("dim 2\n1"), Err(Error::Parse { line: 2, .. })));
        assert_eq!(parse_points("dim 2\n"), Err(Error::EmptyInput));
    }

    #[test]
    fn graph_round_trip() {
        let g = parse_graph("3 3\n1 2\n2 3\n1 3\n").unwrap();
        assert_eq!(g.edges(), &[(1, 2), (2, 3), (1, 3)]);
        assert_eq!(parse_graph(&format_graph(&g)).unwrap(), g);
        assert!(matches!(parse_graph("2 1\n1 1"), Err(Error::BadParams(_))));
        assert!(matches!(parse_graph("2 2\n1 2"), Err(Error::Parse { .. })));
    }
}
