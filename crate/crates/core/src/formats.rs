//! Text formats: sparse `.smat`, dense `.dmat` and `p graph` edge lists, all 1-indexed.
//!
//! `.smat`: `k l nnz`, then `nnz` lines `i j`. `.dmat`: `k l`, then `k` lines of `l`
//! characters from `{0,1}`. Graphs: `p graph n m`, then `m` lines `e u v`; lines
//! starting with `c` are comments.

use std::collections::HashSet;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::matrix::BinaryMatrix;

fn numbers(line: &str, lineno: usize, want: usize) -> Result<Vec<usize>> {
    let parts: Vec<&str> = line.split_whitespace().collect();
    if parts.len() != want {
        return Err(Error::parse(lineno, format!("expected {want} integers, found {:?}", line.trim())));
    }
    parts
        .iter()
        .map(|p| p.parse::<usize>().map_err(|_| Error::parse(lineno, format!("not a non-negative integer: {p:?}"))))
        .collect()
}

fn trailing_blank<'a>(lines: impl Iterator<Item = (usize, &'a str)>) -> Result<()> {
    for (n, line) in lines {
        if !line.trim().is_empty() {
            return Err(Error::parse(n, "unexpected content after the declared entries"));
        }
    }
    Ok(())
}

pub fn parse_smat(text: &str) -> Result<BinaryMatrix> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (_, head) = lines.next().ok_or_else(|| Error::parse(1, "empty input"))?;
    let h = numbers(head, 1, 3)?;
    let (k, l, nnz) = (h[0], h[1], h[2]);
    let mut rows = vec![Vec::new(); k];
    let mut seen = HashSet::new();
    for _ in 0..nnz {
        let (n, line) = lines.next().ok_or_else(|| Error::parse(nnz + 1, "fewer entries than declared"))?;
        let e = numbers(line, n, 2)?;
        let (i, j) = (e[0], e[1]);
        if i == 0 || i > k || j == 0 || j > l {
            return Err(Error::parse(n, format!("entry ({i}, {j}) outside {k}x{l}")));
        }
        if !seen.insert((i, j)) {
            return Err(Error::parse(n, format!("duplicate entry ({i}, {j})")));
        }
        rows[i - 1].push(j);
    }
    trailing_blank(lines)?;
    BinaryMatrix::from_rows(l, rows)
}

pub fn write_smat(m: &BinaryMatrix) -> String {
    let mut out = format!("{} {} {}\n", m.rows(), m.cols(), m.ones());
    for (i, row) in m.row_lists().iter().enumerate() {
        for &j in row {
            out.push_str(&format!("{} {j}\n", i + 1));
        }
    }
    out
}

pub fn parse_dmat(text: &str) -> Result<BinaryMatrix> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (_, head) = lines.next().ok_or_else(|| Error::parse(1, "empty input"))?;
    let h = numbers(head, 1, 2)?;
    let (k, l) = (h[0], h[1]);
    let mut rows = Vec::with_capacity(k);
    for i in 0..k {
        let (n, line) = lines.next().ok_or_else(|| Error::parse(i + 2, "fewer rows than declared"))?;
        let line = line.trim_end_matches('\r');
        if line.len() != l {
            return Err(Error::parse(n, format!("row has {} characters, expected {l}", line.len())));
        }
        let mut row = Vec::new();
        for (j, ch) in line.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => row.push(j + 1),
                other => return Err(Error::parse(n, format!("invalid character {other:?}"))),
            }
        }
        rows.push(row);
    }
    trailing_blank(lines)?;
    BinaryMatrix::from_rows(l, rows)
}

pub fn write_dmat(m: &BinaryMatrix) -> String {
    let mut out = format!("{} {}\n", m.rows(), m.cols());
    for row in m.to_dense() {
        out.extend(row.iter().map(|&b| if b == 1 { '1' } else { '0' }));
        out.push('\n');
    }
    out
}

/// Either matrix format, told apart by the number of fields in the header.
pub fn parse_matrix(text: &str) -> Result<BinaryMatrix> {
    match text.lines().next().map(|l| l.split_whitespace().count()) {
        Some(3) => parse_smat(text),
        Some(2) => parse_dmat(text),
        _ => Err(Error::parse(1, "header must be \"k l nnz\" (.smat) or \"k l\" (.dmat)")),
    }
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut body = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('c'));
    let (hn, head) = body.next().ok_or_else(|| Error::parse(1, "missing \"p graph n m\" header"))?;
    let h: Vec<&str> = head.split_whitespace().collect();
    if h.len() != 4 || h[0] != "p" || h[1] != "graph" {
        return Err(Error::parse(hn, "header must be \"p graph n m\""));
    }
    let nm = numbers(&h[2..].join(" "), hn, 2)?;
    let (n, m) = (nm[0], nm[1]);
    let mut edges = Vec::with_capacity(m);
    let mut seen = HashSet::new();
    for (ln, line) in body {
        let Some(rest) = line.strip_prefix('e').filter(|r| r.starts_with(char::is_whitespace)) else {
            return Err(Error::parse(ln, "expected an edge line \"e u v\""));
        };
        let e = numbers(rest, ln, 2)?;
        let (u, v) = (e[0], e[1]);
        if u == 0 || u > n || v == 0 || v > n {
            return Err(Error::parse(ln, format!("vertex outside 1..{n}")));
        }
        if u == v {
            return Err(Error::parse(ln, format!("loop at vertex {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(Error::parse(ln, format!("duplicate edge {u}-{v}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::parse(hn, format!("header declares {m} edges, found {}", edges.len())));
    }
    Graph::from_edges(n, &edges)
}

pub fn write_graph(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("p graph {} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("e {u} {v}\n"));
    }
    out
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::parse(0, format!("{}: {e}", path.display())))
}

pub fn read_matrix(path: &Path) -> Result<BinaryMatrix> {
    let text = read(path)?;
    match path.extension().and_then(|e| e.to_str()) {
        Some("smat") => parse_smat(&text),
        Some("dmat") => parse_dmat(&text),
        _ => parse_matrix(&text),
    }
}

pub fn read_graph(path: &Path) -> Result<Graph> {
    parse_graph(&read(path)?)
}
