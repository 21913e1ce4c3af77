//! Exhaustive reference implementations, kept independent of the main algorithms.
//!
//! They refuse anything above [`OracleBudget::DEFAULT`] instead of running for hours.

use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::matrix::BinaryMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_cols: usize,
    pub max_vertices: usize,
    /// Bound on `rows + cols` (matrices) or `n` (graphs) for subset enumeration.
    pub max_subset_bits: usize,
}

impl OracleBudget {
    pub const DEFAULT: OracleBudget = OracleBudget {
        max_cols: 8,
        max_vertices: 8,
        max_subset_bits: 16,
    };
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget::DEFAULT
    }
}

fn over(what: &str, got: usize, limit: usize) -> Error {
    Error::TooLarge(format!("oracle budget: {what} {got} exceeds {limit}"))
}

/// Lexicographic next permutation; false once the last one has been passed.
fn next_perm(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

fn dense_rows(m: &BinaryMatrix) -> Vec<Vec<bool>> {
    m.to_dense()
        .into_iter()
        .map(|r| r.into_iter().map(|b| b == 1).collect())
        .collect()
}

fn linear_ok(row: &[bool], order: &[usize]) -> bool {
    let mut state = 0; // 0 before the block, 1 inside, 2 after
    for &c in order {
        match (state, row[c]) {
            (0, true) => state = 1,
            (1, false) => state = 2,
            (2, true) => return false,
            _ => {}
        }
    }
    true
}

fn circular_ok(row: &[bool], order: &[usize]) -> bool {
    // an arc has at most one 0→1 step around the circle
    let n = order.len();
    let rises = (0..n)
        .filter(|&i| !row[order[i]] && row[order[(i + 1) % n]])
        .count();
    rises <= 1
}

/// Exhaustive consecutive-ones test over all column orders.
pub fn brute_c1p(m: &BinaryMatrix) -> Result<bool> {
    if m.cols() > OracleBudget::DEFAULT.max_cols {
        return Err(over("columns", m.cols(), OracleBudget::DEFAULT.max_cols));
    }
    let rows = dense_rows(m);
    let mut order: Vec<usize> = (0..m.cols()).collect();
    loop {
        if rows.iter().all(|r| linear_ok(r, &order)) {
            return Ok(true);
        }
        if !next_perm(&mut order) {
            return Ok(false);
        }
    }
}

/// Exhaustive circular-ones test: column 1 stays first and reflections are skipped.
pub fn brute_circ1p(m: &BinaryMatrix) -> Result<bool> {
    if m.cols() > OracleBudget::DEFAULT.max_cols {
        return Err(over("columns", m.cols(), OracleBudget::DEFAULT.max_cols));
    }
    if m.cols() <= 3 {
        // every subset of at most three points on a circle is an arc
        return Ok(true);
    }
    let rows = dense_rows(m);
    let mut rest: Vec<usize> = (1..m.cols()).collect();
    loop {
        if rest[0] < rest[rest.len() - 1] {
            let order: Vec<usize> = std::iter::once(0).chain(rest.iter().copied()).collect();
            if rows.iter().all(|r| circular_ok(r, &order)) {
                return Ok(true);
            }
        }
        if !next_perm(&mut rest) {
            return Ok(false);
        }
    }
}

/// Both `m` and its transpose have the circular-ones property.
pub fn brute_circ1p_rows_cols(m: &BinaryMatrix) -> Result<bool> {
    Ok(brute_circ1p(m)? && brute_circ1p(&m.transpose())?)
}

fn closed_nbhd_rows(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.n();
    (1..=n)
        .map(|v| {
            let mut r = vec![false; n];
            r[v - 1] = true;
            for &u in g.neighbors(v) {
                r[u - 1] = true;
            }
            r
        })
        .collect()
}

/// Exhaustive search for a circular enumeration in which every closed neighbourhood
/// is an interval.
pub fn brute_concave_round(g: &Graph) -> Result<bool> {
    let n = g.n();
    if n > OracleBudget::DEFAULT.max_vertices {
        return Err(over("vertices", n, OracleBudget::DEFAULT.max_vertices));
    }
    if n <= 3 {
        return Ok(true);
    }
    let rows = closed_nbhd_rows(g);
    let mut rest: Vec<usize> = (1..n).collect();
    loop {
        if rest[0] < rest[rest.len() - 1] {
            let order: Vec<usize> = std::iter::once(0).chain(rest.iter().copied()).collect();
            if rows.iter().all(|r| circular_ok(r, &order)) {
                return Ok(true);
            }
        }
        if !next_perm(&mut rest) {
            return Ok(false);
        }
    }
}

/// Which hereditary matrix property a minimality audit refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatrixProperty {
    ConsecutiveOnes,
    CircularOnesRows,
    CircularOnesRowsCols,
}

impl MatrixProperty {
    pub fn holds(self, m: &BinaryMatrix) -> Result<bool> {
        match self {
            MatrixProperty::ConsecutiveOnes => brute_c1p(m),
            MatrixProperty::CircularOnesRows => brute_circ1p(m),
            MatrixProperty::CircularOnesRowsCols => brute_circ1p_rows_cols(m),
        }
    }
}

/// `m` fails `prop` while every single-row and single-column deletion satisfies it.
pub fn is_minimal_forbidden(m: &BinaryMatrix, prop: MatrixProperty) -> Result<bool> {
    if prop.holds(m)? {
        return Ok(false);
    }
    let rows: Vec<usize> = (1..=m.rows()).collect();
    let cols: Vec<usize> = (1..=m.cols()).collect();
    for r in 1..=m.rows() {
        let kept: Vec<usize> = rows.iter().copied().filter(|&x| x != r).collect();
        if !prop.holds(&m.select(&kept, &cols)?)? {
            return Ok(false);
        }
    }
    for c in 1..=m.cols() {
        let kept: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        if !prop.holds(&m.select(&rows, &kept)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All minimal forbidden submatrices of `m`, as (row set, column set) pairs.
pub fn brute_minimal_forbidden(
    m: &BinaryMatrix,
    prop: MatrixProperty,
) -> Result<Vec<(Vec<usize>, Vec<usize>)>> {
    let bits = m.rows() + m.cols();
    if bits > OracleBudget::DEFAULT.max_subset_bits {
        return Err(over("rows+cols", bits, OracleBudget::DEFAULT.max_subset_bits));
    }
    let mut out = Vec::new();
    for rmask in 0u32..(1 << m.rows()) {
        let rows: Vec<usize> = (1..=m.rows()).filter(|i| rmask >> (i - 1) & 1 == 1).collect();
        for cmask in 0u32..(1 << m.cols()) {
            let cols: Vec<usize> = (1..=m.cols()).filter(|j| cmask >> (j - 1) & 1 == 1).collect();
            if is_minimal_forbidden(&m.select(&rows, &cols)?, prop)? {
                out.push((rows.clone(), cols));
            }
        }
    }
    Ok(out)
}

/// `g` is not concave-round and every single-vertex deletion is.
pub fn is_minimal_non_concave_round(g: &Graph) -> Result<bool> {
    if brute_concave_round(g)? {
        return Ok(false);
    }
    for v in 1..=g.n() {
        let keep: Vec<usize> = (1..=g.n()).filter(|&u| u != v).collect();
        if !brute_concave_round(&g.induced_subgraph(&keep))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All vertex sets inducing minimal non-concave-round subgraphs of `g`.
pub fn brute_minimal_forbidden_graph(g: &Graph) -> Result<Vec<Vec<usize>>> {
    let n = g.n();
    if n > OracleBudget::DEFAULT.max_vertices {
        return Err(over("vertices", n, OracleBudget::DEFAULT.max_vertices));
    }
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let set: Vec<usize> = (1..=n).filter(|v| mask >> (v - 1) & 1 == 1).collect();
        if is_minimal_non_concave_round(&g.induced_subgraph(&set))? {
            out.push(set);
        }
    }
    Ok(out)
}
