//! Sparse binary matrices and the index maps used to locate one matrix inside another.
//!
//! Rows, columns and map entries are 1-indexed throughout. A matrix is stored as one
//! strictly increasing list of column indices per row, so `size()` (rows + columns +
//! ones) is the natural cost measure of every algorithm in the crate.

use std::collections::VecDeque;
use std::fmt;

use crate::bracelet::BinarySequence;
use crate::error::{Error, Result};

/// A `rows × cols` matrix over {0, 1}, stored as sorted per-row column lists.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryMatrix {
    rows: usize,
    cols: usize,
    row_data: Vec<Vec<usize>>,
}

impl BinaryMatrix {
    /// The all-zero matrix of the given shape.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        BinaryMatrix {
            rows,
            cols,
            row_data: vec![Vec::new(); rows],
        }
    }

    /// Builds a matrix from per-row lists of 1-indexed column positions.
    ///
    /// Lists may be unsorted; duplicates and out-of-range columns are rejected.
    pub fn from_rows(cols: usize, rows: Vec<Vec<usize>>) -> Result<Self> {
        let mut row_data = Vec::with_capacity(rows.len());
        for (i, mut r) in rows.into_iter().enumerate() {
            r.sort_unstable();
            if r.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::Dimension(format!("row {} lists a column twice", i + 1)));
            }
            if let Some(&bad) = r.iter().find(|&&j| j == 0 || j > cols) {
                return Err(Error::Dimension(format!(
                    "row {} references column {} outside [1, {}]",
                    i + 1,
                    bad,
                    cols
                )));
            }
            row_data.push(r);
        }
        Ok(BinaryMatrix {
            rows: row_data.len(),
            cols,
            row_data,
        })
    }

    /// Builds a matrix from dense rows. Every row must have length `cols`.
    pub fn from_dense(cols: usize, dense: &[Vec<u8>]) -> Result<Self> {
        let mut rows = Vec::with_capacity(dense.len());
        for (i, r) in dense.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::Dimension(format!(
                    "row {} has {} entries, expected {}",
                    i + 1,
                    r.len(),
                    cols
                )));
            }
            rows.push(
                r.iter()
                    .enumerate()
                    .filter(|(_, &b)| b != 0)
                    .map(|(j, _)| j + 1)
                    .collect(),
            );
        }
        let mut m = BinaryMatrix::from_rows(cols, rows)?;
        m.rows = dense.len();
        Ok(m)
    }

    /// Parses rows written as `"0110"` strings. Convenient in tests.
    pub fn from_strs(rows: &[&str]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let dense = rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                r.bytes()
                    .map(|b| match b {
                        b'0' => Ok(0),
                        b'1' => Ok(1),
                        _ => Err(Error::parse(i + 1, "expected only 0 and 1")),
                    })
                    .collect::<Result<Vec<u8>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        BinaryMatrix::from_dense(cols, &dense)
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Sorted 1-indexed columns holding a one in row `i` (1-indexed).
    #[inline]
    pub fn row(&self, i: usize) -> &[usize] {
        &self.row_data[i - 1]
    }

    pub fn row_lists(&self) -> &[Vec<usize>] {
        &self.row_data
    }

    /// Entry `(i, j)`, both 1-indexed.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.row_data[i - 1].binary_search(&j).is_ok()
    }

    pub fn ones(&self) -> usize {
        self.row_data.iter().map(Vec::len).sum()
    }

    /// Rows + columns + ones.
    pub fn size(&self) -> usize {
        self.rows + self.cols + self.ones()
    }

    pub fn to_dense(&self) -> Vec<Vec<u8>> {
        self.row_data
            .iter()
            .map(|r| {
                let mut d = vec![0u8; self.cols];
                for &j in r {
                    d[j - 1] = 1;
                }
                d
            })
            .collect()
    }

    /// Column `j` read top-down.
    pub fn column(&self, j: usize) -> BinarySequence {
        BinarySequence::from_bits((1..=self.rows).map(|i| self.get(i, j) as u8).collect())
    }

    /// Per-column lists of rows holding a one.
    pub fn column_lists(&self) -> Vec<Vec<usize>> {
        let mut cols = vec![Vec::new(); self.cols];
        for (i, r) in self.row_data.iter().enumerate() {
            for &j in r {
                cols[j - 1].push(i + 1);
            }
        }
        cols
    }

    pub fn transpose(&self) -> BinaryMatrix {
        BinaryMatrix {
            rows: self.cols,
            cols: self.rows,
            row_data: self.column_lists(),
        }
    }

    pub fn complement(&self) -> BinaryMatrix {
        let row_data = self
            .row_data
            .iter()
            .map(|r| complement_row(r, self.cols))
            .collect();
        BinaryMatrix {
            rows: self.rows,
            cols: self.cols,
            row_data,
        }
    }

    /// Complements exactly the rows `i` with `mask[i] = 1`.
    pub fn row_complement(&self, mask: &BinarySequence) -> Result<BinaryMatrix> {
        if mask.len() != self.rows {
            return Err(Error::Dimension(format!(
                "mask of length {} applied to a matrix with {} rows",
                mask.len(),
                self.rows
            )));
        }
        let row_data = self
            .row_data
            .iter()
            .zip(mask.bits())
            .map(|(r, &b)| if b == 1 { complement_row(r, self.cols) } else { r.clone() })
            .collect();
        Ok(BinaryMatrix {
            rows: self.rows,
            cols: self.cols,
            row_data,
        })
    }

    /// Appends one all-zero column.
    pub fn star_extend(&self) -> BinaryMatrix {
        BinaryMatrix {
            rows: self.rows,
            cols: self.cols + 1,
            row_data: self.row_data.clone(),
        }
    }

    /// The matrix whose `(i, j)` entry is `self(row_map(i), col_map(j))`.
    pub fn submatrix(&self, e: &Embedding) -> Result<BinaryMatrix> {
        e.row_map.check_into(self.rows, "row")?;
        e.col_map.check_into(self.cols, "column")?;
        // position in the selected column list, 1-indexed; 0 = not selected
        let mut col_pos = vec![0usize; self.cols + 1];
        for (j, &c) in e.col_map.targets().iter().enumerate() {
            col_pos[c] = j + 1;
        }
        let row_data = e
            .row_map
            .targets()
            .iter()
            .map(|&i| {
                let mut r: Vec<usize> = self.row_data[i - 1]
                    .iter()
                    .filter_map(|&c| (col_pos[c] != 0).then_some(col_pos[c]))
                    .collect();
                r.sort_unstable();
                r
            })
            .collect();
        Ok(BinaryMatrix {
            rows: e.row_map.len(),
            cols: e.col_map.len(),
            row_data,
        })
    }

    /// Keeps the listed rows and columns, in the listed order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Result<BinaryMatrix> {
        self.submatrix(&Embedding::new(
            IndexMap::new(rows.to_vec())?,
            IndexMap::new(cols.to_vec())?,
        ))
    }

    /// Connected components of the associated bipartite graph, as (rows, columns)
    /// pairs. Isolated rows and columns form singleton components.
    pub fn components(&self) -> Vec<(Vec<usize>, Vec<usize>)> {
        let col_lists = self.column_lists();
        let mut row_seen = vec![false; self.rows];
        let mut col_seen = vec![false; self.cols];
        let mut out = Vec::new();
        // vertices: Ok(row) / Err(col)
        let start = |s: std::result::Result<usize, usize>,
                         row_seen: &mut Vec<bool>,
                         col_seen: &mut Vec<bool>| {
            let mut rs = Vec::new();
            let mut cs = Vec::new();
            let mut queue = VecDeque::from([s]);
            match s {
                Ok(r) => row_seen[r - 1] = true,
                Err(c) => col_seen[c - 1] = true,
            }
            while let Some(v) = queue.pop_front() {
                match v {
                    Ok(r) => {
                        rs.push(r);
                        for &c in &self.row_data[r - 1] {
                            if !col_seen[c - 1] {
                                col_seen[c - 1] = true;
                                queue.push_back(Err(c));
                            }
                        }
                    }
                    Err(c) => {
                        cs.push(c);
                        for &r in &col_lists[c - 1] {
                            if !row_seen[r - 1] {
                                row_seen[r - 1] = true;
                                queue.push_back(Ok(r));
                            }
                        }
                    }
                }
            }
            rs.sort_unstable();
            cs.sort_unstable();
            (rs, cs)
        };
        for r in 1..=self.rows {
            if !row_seen[r - 1] {
                out.push(start(Ok(r), &mut row_seen, &mut col_seen));
            }
        }
        for c in 1..=self.cols {
            if !col_seen[c - 1] {
                out.push(start(Err(c), &mut row_seen, &mut col_seen));
            }
        }
        out
    }

    /// Block-diagonal sum `self ⊕ other`.
    pub fn direct_sum(&self, other: &BinaryMatrix) -> BinaryMatrix {
        let mut row_data = self.row_data.clone();
        row_data.extend(
            other
                .row_data
                .iter()
                .map(|r| r.iter().map(|&j| j + self.cols).collect()),
        );
        BinaryMatrix {
            rows: self.rows + other.rows,
            cols: self.cols + other.cols,
            row_data,
        }
    }

    /// Appends a row given by its 1-indexed ones.
    pub fn push_row(&mut self, mut ones: Vec<usize>) -> Result<()> {
        ones.sort_unstable();
        ones.dedup();
        if ones.iter().any(|&j| j == 0 || j > self.cols) {
            return Err(Error::Dimension("row references a column out of range".into()));
        }
        self.row_data.push(ones);
        self.rows += 1;
        Ok(())
    }
}

fn complement_row(r: &[usize], cols: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(cols - r.len());
    let mut it = r.iter().peekable();
    for j in 1..=cols {
        if it.peek() == Some(&&j) {
            it.next();
        } else {
            out.push(j);
        }
    }
    out
}

impl fmt::Debug for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BinaryMatrix {}x{} [", self.rows, self.cols)?;
        for r in self.to_dense() {
            let s: String = r.iter().map(|&b| if b == 1 { '1' } else { '0' }).collect();
            writeln!(f, "  {s}")?;
        }
        write!(f, "]")
    }
}

/// An injective map `⟨n₁, …, n_s⟩` from `[s]` into the positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IndexMap(Vec<usize>);

impl IndexMap {
    pub fn new(targets: Vec<usize>) -> Result<Self> {
        if targets.contains(&0) {
            return Err(Error::InvalidEmbedding("index maps are 1-indexed".into()));
        }
        let mut sorted = targets.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidEmbedding(format!(
                "map {targets:?} is not injective"
            )));
        }
        Ok(IndexMap(targets))
    }

    pub(crate) fn new_unchecked(targets: Vec<usize>) -> Self {
        IndexMap(targets)
    }

    pub fn identity(n: usize) -> Self {
        IndexMap((1..=n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn targets(&self) -> &[usize] {
        &self.0
    }

    /// Image of `i` (1-indexed).
    #[inline]
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    /// `i ↦ self(inner(i))`: selecting with `inner` inside the matrix already
    /// selected by `self`.
    pub fn compose(&self, inner: &IndexMap) -> Result<IndexMap> {
        inner.check_into(self.len(), "composed")?;
        Ok(IndexMap(inner.0.iter().map(|&i| self.0[i - 1]).collect()))
    }

    pub(crate) fn check_into(&self, dim: usize, what: &str) -> Result<()> {
        let mut seen = vec![false; dim + 1];
        for &t in &self.0 {
            if t == 0 || t > dim {
                return Err(Error::InvalidEmbedding(format!(
                    "{what} map entry {t} outside [1, {dim}]"
                )));
            }
            if std::mem::replace(&mut seen[t], true) {
                return Err(Error::InvalidEmbedding(format!(
                    "{what} map repeats entry {t}"
                )));
            }
        }
        Ok(())
    }
}

impl From<IndexMap> for Vec<usize> {
    fn from(m: IndexMap) -> Self {
        m.0
    }
}

/// A row map and a column map locating a configuration inside a host matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Embedding {
    pub row_map: IndexMap,
    pub col_map: IndexMap,
}

impl Embedding {
    pub fn new(row_map: IndexMap, col_map: IndexMap) -> Self {
        Embedding { row_map, col_map }
    }

    pub fn identity(rows: usize, cols: usize) -> Self {
        Embedding::new(IndexMap::identity(rows), IndexMap::identity(cols))
    }

    /// The embedding of `inner` (taken inside the matrix selected by `self`) into
    /// the host of `self`.
    pub fn compose(&self, inner: &Embedding) -> Result<Embedding> {
        Ok(Embedding {
            row_map: self.row_map.compose(&inner.row_map)?,
            col_map: self.col_map.compose(&inner.col_map)?,
        })
    }

    /// Swaps the roles of rows and columns, for use on the transposed host.
    pub fn transposed(&self) -> Embedding {
        Embedding {
            row_map: self.col_map.clone(),
            col_map: self.row_map.clone(),
        }
    }
}

const CANONICAL_LIMIT: usize = 10;

/// A byte string equal for two matrices exactly when one arises from the other by
/// permuting rows and columns.
///
/// Exhaustive over the permutations of the shorter dimension, sorting the other
/// dimension for each; refuses matrices with more than 10 rows or columns.
pub fn canonical_config(m: &BinaryMatrix) -> Result<Vec<u8>> {
    if m.rows() > CANONICAL_LIMIT || m.cols() > CANONICAL_LIMIT {
        return Err(Error::TooLarge(format!(
            "canonical_config is limited to {CANONICAL_LIMIT}x{CANONICAL_LIMIT}, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    let (permuted, sorted) = if m.rows() <= m.cols() {
        (m.to_dense(), m.cols())
    } else {
        (m.transpose().to_dense(), m.rows())
    };
    let k = permuted.len();
    let mut best: Option<Vec<u16>> = None;
    let mut perm: Vec<usize> = (0..k).collect();
    let mut key = vec![0u16; sorted];
    let mut eval = |perm: &[usize], best: &mut Option<Vec<u16>>| {
        for (j, slot) in key.iter_mut().enumerate() {
            let mut v = 0u16;
            for &r in perm {
                v = (v << 1) | permuted[r][j] as u16;
            }
            *slot = v;
        }
        key.sort_unstable_by(|a, b| b.cmp(a));
        if best.as_ref().is_none_or(|b| key < *b) {
            *best = Some(key.clone());
        }
    };
    for_each_permutation(&mut perm, &mut |p| eval(p, &mut best));
    let mut out = Vec::with_capacity(3 + 2 * sorted);
    out.push(m.rows() as u8);
    out.push(m.cols() as u8);
    out.push((m.rows() <= m.cols()) as u8);
    for v in best.unwrap_or_default() {
        out.extend_from_slice(&v.to_be_bytes());
    }
    Ok(out)
}

/// Heap's algorithm; calls `f` once per permutation of `items`.
pub(crate) fn for_each_permutation<T>(items: &mut [T], f: &mut impl FnMut(&[T])) {
    let n = items.len();
    let mut c = vec![0usize; n];
    f(items);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                items.swap(0, i);
            } else {
                items.swap(c[i], i);
            }
            f(items);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Exhaustive search for an embedding `e` with `submatrix(m, e) = t` entrywise.
///
/// Backtracks over row assignments, pruning as soon as some column of `t` has no
/// compatible host column left, and finishes with a bipartite matching of columns.
/// Meant for oracle use on small patterns.
pub fn contains_config_bruteforce(m: &BinaryMatrix, t: &BinaryMatrix) -> Option<Embedding> {
    if t.rows() > m.rows() || t.cols() > m.cols() {
        return None;
    }
    let md = m.to_dense();
    let td = t.to_dense();
    // compat[d][j][c]: host column c is compatible with pattern column j on the first d rows
    let mut search = BruteContain {
        md: &md,
        td: &td,
        host_cols: m.cols(),
        used_rows: vec![false; m.rows()],
        rho: Vec::with_capacity(t.rows()),
    };
    let all = vec![vec![true; m.cols()]; t.cols()];
    let rho_sigma = search.descend(&all)?;
    Some(Embedding::new(
        IndexMap::new_unchecked(rho_sigma.0),
        IndexMap::new_unchecked(rho_sigma.1),
    ))
}

struct BruteContain<'a> {
    md: &'a [Vec<u8>],
    td: &'a [Vec<u8>],
    host_cols: usize,
    used_rows: Vec<bool>,
    rho: Vec<usize>,
}

impl BruteContain<'_> {
    fn descend(&mut self, compat: &[Vec<bool>]) -> Option<(Vec<usize>, Vec<usize>)> {
        let d = self.rho.len();
        if d == self.td.len() {
            let sigma = match_columns(compat, self.host_cols)?;
            return Some((self.rho.iter().map(|r| r + 1).collect(), sigma));
        }
        for r in 0..self.md.len() {
            if self.used_rows[r] {
                continue;
            }
            let next: Vec<Vec<bool>> = compat
                .iter()
                .enumerate()
                .map(|(j, cs)| {
                    cs.iter()
                        .enumerate()
                        .map(|(c, &ok)| ok && self.md[r][c] == self.td[d][j])
                        .collect()
                })
                .collect();
            if next.iter().any(|cs| !cs.contains(&true)) {
                continue;
            }
            self.used_rows[r] = true;
            self.rho.push(r);
            if let Some(found) = self.descend(&next) {
                return Some(found);
            }
            self.rho.pop();
            self.used_rows[r] = false;
        }
        None
    }
}

/// Simple augmenting-path matching of pattern columns into host columns.
fn match_columns(compat: &[Vec<bool>], host_cols: usize) -> Option<Vec<usize>> {
    fn augment(
        j: usize,
        compat: &[Vec<bool>],
        owner: &mut [Option<usize>],
        seen: &mut [bool],
    ) -> bool {
        for c in 0..owner.len() {
            if compat[j][c] && !seen[c] {
                seen[c] = true;
                if owner[c].is_none_or(|o| augment(o, compat, owner, seen)) {
                    owner[c] = Some(j);
                    return true;
                }
            }
        }
        false
    }
    let mut owner = vec![None; host_cols];
    for j in 0..compat.len() {
        let mut seen = vec![false; host_cols];
        if !augment(j, compat, &mut owner, &mut seen) {
            return None;
        }
    }
    let mut sigma = vec![0; compat.len()];
    for (c, o) in owner.iter().enumerate() {
        if let Some(j) = o {
            sigma[*j] = c + 1;
        }
    }
    Some(sigma)
}
