//! Consecutive-ones testing, Tucker matrices and Tucker-submatrix extraction.

mod pqtree;

use std::collections::HashMap;
use std::fmt;

pub use pqtree::PQTree;

use crate::error::{Error, Result};
use crate::matrix::{BinaryMatrix, Embedding, IndexMap};

/// The five Tucker families; the parameter is the number of rows.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TuckerFamily {
    MI(usize),
    MII(usize),
    MIII(usize),
    MIV,
    MV,
}

impl TuckerFamily {
    pub fn rows(&self) -> usize {
        match *self {
            TuckerFamily::MI(k) | TuckerFamily::MII(k) | TuckerFamily::MIII(k) => k,
            TuckerFamily::MIV | TuckerFamily::MV => 4,
        }
    }

    pub fn cols(&self) -> usize {
        match *self {
            TuckerFamily::MI(k) | TuckerFamily::MII(k) => k,
            TuckerFamily::MIII(k) => k + 1,
            TuckerFamily::MIV => 6,
            TuckerFamily::MV => 5,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            TuckerFamily::MI(_) => "MI",
            TuckerFamily::MII(_) => "MII",
            TuckerFamily::MIII(_) => "MIII",
            TuckerFamily::MIV => "MIV",
            TuckerFamily::MV => "MV",
        }
    }
}

impl fmt::Display for TuckerFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TuckerFamily::MI(k) | TuckerFamily::MII(k) | TuckerFamily::MIII(k) => {
                write!(f, "{}({k})", self.name())
            }
            _ => f.write_str(self.name()),
        }
    }
}

pub fn tucker_matrix(f: TuckerFamily) -> Result<BinaryMatrix> {
    let rows: Vec<Vec<usize>> = match f {
        TuckerFamily::MI(k) => {
            if k < 3 {
                return Err(Error::InvalidParameter(format!("MI(k) needs k >= 3, got {k}")));
            }
            let mut r: Vec<Vec<usize>> = (1..k).map(|i| vec![i, i + 1]).collect();
            r.push(vec![1, k]);
            r
        }
        TuckerFamily::MII(k) => {
            if k < 4 {
                return Err(Error::InvalidParameter(format!("MII(k) needs k >= 4, got {k}")));
            }
            let mut r: Vec<Vec<usize>> = (1..=k - 2).map(|i| vec![i, i + 1]).collect();
            r.push((1..=k - 2).chain([k]).collect());
            r.push((2..=k).collect());
            r
        }
        TuckerFamily::MIII(k) => {
            if k < 3 {
                return Err(Error::InvalidParameter(format!("MIII(k) needs k >= 3, got {k}")));
            }
            let mut r: Vec<Vec<usize>> = (1..k).map(|i| vec![i, i + 1]).collect();
            r.push((2..k).chain([k + 1]).collect());
            r
        }
        TuckerFamily::MIV => vec![vec![1, 2], vec![3, 4], vec![5, 6], vec![2, 4, 6]],
        TuckerFamily::MV => vec![vec![1, 2], vec![1, 2, 3, 4], vec![3, 4], vec![1, 4, 5]],
    };
    BinaryMatrix::from_rows(f.cols(), rows)
}

/// Runs the PQ-tree over the rows in order. `Ok` carries a consecutive column order;
/// `Err(i)` reports that rows `1..=i` already admit none.
fn c1p_prefix(m: &BinaryMatrix) -> std::result::Result<Vec<usize>, usize> {
    let mut tree = PQTree::new(m.cols());
    for (i, row) in m.row_lists().iter().enumerate() {
        if !tree.reduce(row) {
            return Err(i + 1);
        }
    }
    Ok(tree.frontier())
}

/// A column order making every row's ones consecutive, or `None` when there is none.
pub fn c1p_test(m: &BinaryMatrix) -> Option<Vec<usize>> {
    c1p_prefix(m).ok()
}

/// Whether `order` is a permutation of the columns under which each row's ones are
/// consecutive.
pub fn is_consecutive_order(m: &BinaryMatrix, order: &[usize]) -> bool {
    let Some(pos) = positions(order, m.cols()) else {
        return false;
    };
    m.row_lists().iter().all(|r| {
        if r.is_empty() {
            return true;
        }
        let (lo, hi) = r.iter().fold((usize::MAX, 0), |(lo, hi), &j| {
            (lo.min(pos[j]), hi.max(pos[j]))
        });
        hi - lo + 1 == r.len()
    })
}

/// Inverse of a permutation of `[n]`, 0-based positions indexed by 1-based values.
pub(crate) fn positions(order: &[usize], n: usize) -> Option<Vec<usize>> {
    if order.len() != n {
        return None;
    }
    let mut pos = vec![usize::MAX; n + 1];
    for (p, &j) in order.iter().enumerate() {
        if j == 0 || j > n || pos[j] != usize::MAX {
            return None;
        }
        pos[j] = p;
    }
    Some(pos)
}

/// A Tucker matrix located exactly (entrywise, in its standard layout) inside a host.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TuckerWitness {
    pub family: TuckerFamily,
    pub embedding: Embedding,
}

impl TuckerWitness {
    pub fn verify(&self, host: &BinaryMatrix) -> bool {
        match (host.submatrix(&self.embedding), tucker_matrix(self.family)) {
            (Ok(s), Ok(t)) => s == t,
            _ => false,
        }
    }
}

/// Locates a Tucker matrix in a matrix without the consecutive-ones property.
///
/// Rows are dropped in ascending order while the rest still fails, then columns; the
/// residue is a Tucker matrix up to permutations and is normalised by
/// [`classify_tucker`].
pub fn find_tucker_submatrix(m: &BinaryMatrix) -> Result<TuckerWitness> {
    let failing = match c1p_prefix(m) {
        Ok(_) => {
            return Err(Error::Precondition(
                "matrix has the consecutive-ones property".into(),
            ))
        }
        Err(i) => i,
    };
    let all_cols: Vec<usize> = (1..=m.cols()).collect();
    let mut rows: Vec<usize> = (1..=failing).collect();
    let mut idx = 0;
    while idx < rows.len() {
        let mut trial = rows.clone();
        trial.remove(idx);
        if c1p_test(&m.select(&trial, &all_cols)?).is_none() {
            rows = trial;
        } else {
            idx += 1;
        }
    }
    let mut used = vec![false; m.cols() + 1];
    for &r in &rows {
        for &j in m.row(r) {
            used[j] = true;
        }
    }
    let mut cols: Vec<usize> = (1..=m.cols()).filter(|&j| used[j]).collect();
    let mut idx = 0;
    while idx < cols.len() {
        let mut trial = cols.clone();
        trial.remove(idx);
        if c1p_test(&m.select(&rows, &trial)?).is_none() {
            cols = trial;
        } else {
            idx += 1;
        }
    }
    let residue = m.select(&rows, &cols)?;
    let (family, rho, sigma) = classify_tucker(&residue).ok_or_else(|| {
        Error::Certificate("minimal non-C1P residue did not classify as a Tucker matrix".into())
    })?;
    let outer = Embedding::new(IndexMap::new(rows)?, IndexMap::new(cols)?);
    let embedding = outer.compose(&Embedding::new(rho, sigma))?;
    Ok(TuckerWitness { family, embedding })
}

/// If `t` is a row and column permutation of a Tucker matrix, the family and the
/// permutations `(ρ, σ)` with `t_{ρ,σ}` equal to it entrywise.
pub fn classify_tucker(t: &BinaryMatrix) -> Option<(TuckerFamily, IndexMap, IndexMap)> {
    let (k, c, ones) = (t.rows(), t.cols(), t.ones());
    let family = if k >= 3 && c == k && ones == 2 * k {
        TuckerFamily::MI(k)
    } else if k >= 4 && c == k && ones == 4 * k - 6 {
        TuckerFamily::MII(k)
    } else if k >= 3 && c == k + 1 && ones == 3 * k - 3 {
        TuckerFamily::MIII(k)
    } else if k == 4 && c == 6 && ones == 9 {
        TuckerFamily::MIV
    } else if k == 4 && c == 5 && ones == 11 {
        TuckerFamily::MV
    } else {
        return None;
    };
    let target = tucker_matrix(family).ok()?;
    let target_cols = target.column_lists();
    let col_rows = t.column_lists();
    for rho in row_order_candidates(t, family, &col_rows) {
        if let Some(sigma) = match_columns(t, &rho, &target_cols) {
            let e = Embedding::new(IndexMap::new_unchecked(rho), IndexMap::new_unchecked(sigma));
            if t.submatrix(&e).ok()? == target {
                return Some((family, e.row_map, e.col_map));
            }
        }
    }
    None
}

/// Finds σ so that column σ(j) of `t`, read in row order `rho`, equals target column `j`.
fn match_columns(t: &BinaryMatrix, rho: &[usize], target_cols: &[Vec<usize>]) -> Option<Vec<usize>> {
    let mut pos = vec![0; t.rows() + 1];
    for (i, &r) in rho.iter().enumerate() {
        pos[r] = i + 1;
    }
    let mut vectors: Vec<Vec<usize>> = vec![Vec::new(); t.cols()];
    for (i, &r) in rho.iter().enumerate() {
        for &j in t.row(r) {
            vectors[j - 1].push(i + 1);
        }
    }
    let mut by_vector: HashMap<&[usize], Vec<usize>> = HashMap::new();
    for (j, v) in vectors.iter().enumerate().rev() {
        by_vector.entry(v.as_slice()).or_default().push(j + 1);
    }
    target_cols
        .iter()
        .map(|v| by_vector.get_mut(v.as_slice()).and_then(Vec::pop))
        .collect()
}

fn row_order_candidates(
    t: &BinaryMatrix,
    family: TuckerFamily,
    col_rows: &[Vec<usize>],
) -> Vec<Vec<usize>> {
    let k = t.rows();
    let mut out = Vec::new();
    match family {
        TuckerFamily::MIV | TuckerFamily::MV => {
            let mut items: Vec<usize> = (1..=4).collect();
            crate::matrix::for_each_permutation(&mut items, &mut |p| out.push(p.to_vec()));
        }
        TuckerFamily::MI(_) => {
            if t.row(1).len() != 2 {
                return out;
            }
            for &exit in t.row(1) {
                if let Some(path) = walk(t, col_rows, 1, exit, k, &|_| true) {
                    out.push(path);
                }
            }
        }
        TuckerFamily::MII(_) | TuckerFamily::MIII(_) => {
            let n_special = if matches!(family, TuckerFamily::MII(_)) { 2 } else { 1 };
            let irregular: Vec<usize> = (1..=k).filter(|&r| t.row(r).len() != 2).collect();
            let special_sets: Vec<Vec<usize>> = if irregular.len() == n_special {
                if n_special == 2 {
                    vec![irregular.clone(), vec![irregular[1], irregular[0]]]
                } else {
                    vec![irregular]
                }
            } else if irregular.is_empty() && n_special == 1 {
                (1..=k).map(|r| vec![r]).collect()
            } else {
                return out;
            };
            for specials in special_sets {
                let in_path = |r: usize| !specials.contains(&r);
                let path_len = k - n_special;
                for start in (1..=k).filter(|&r| in_path(r)) {
                    // an endpoint has a column shared with no other path row
                    for &lone in t.row(start) {
                        if col_rows[lone - 1].iter().any(|&r| r != start && in_path(r)) {
                            continue;
                        }
                        let exit = *t.row(start).iter().find(|&&j| j != lone).unwrap();
                        if let Some(mut path) = walk(t, col_rows, start, exit, path_len, &in_path) {
                            path.extend(&specials);
                            out.push(path);
                        }
                    }
                }
            }
        }
    }
    out
}

/// Follows rows with two ones through shared columns, leaving each row by the column
/// it was not entered by.
fn walk(
    t: &BinaryMatrix,
    col_rows: &[Vec<usize>],
    start: usize,
    mut exit: usize,
    len: usize,
    allowed: &dyn Fn(usize) -> bool,
) -> Option<Vec<usize>> {
    let mut path = vec![start];
    let mut cur = start;
    while path.len() < len {
        let next = *col_rows[exit - 1]
            .iter()
            .find(|&&r| r != cur && allowed(r))?;
        let row = t.row(next);
        if row.len() != 2 || path.contains(&next) {
            return None;
        }
        exit = if row[0] == exit { row[1] } else { row[0] };
        path.push(next);
        cur = next;
    }
    Some(path)
}
