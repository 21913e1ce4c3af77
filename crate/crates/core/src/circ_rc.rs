//! The circular-ones property for rows and columns.

use std::fmt;

use crate::bracelet::BinarySequence;
use crate::circ_rows::{circ1p_test, find_forbrow, mi_star, mv_star, ForbRowMember};
use crate::error::{Error, Result};
use crate::matrix::{BinaryMatrix, Embedding, IndexMap};

/// The sporadic masks `a` for which `a ⊙ M_I*(|a|)` belongs to `ForbRowCol`.
pub const A_ROW_COL: [&str; 8] = [
    "0001", "0011", "0111", "00001", "00011", "00111", "01111", "000111",
];

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ForbRowColMember {
    MIStar(usize),
    CoMIStar(usize),
    /// `a ⊙ M_I*(|a|)` for `a` in [`A_ROW_COL`].
    Masked(BinarySequence),
    MVStar,
    CoMVStar,
    /// `M_I*(3)ᵀ`, a 4×3 matrix.
    MIStar3T,
    CoMIStar3T,
}

impl ForbRowColMember {
    pub fn kind(&self) -> &'static str {
        match self {
            ForbRowColMember::MIStar(_) => "MI*",
            ForbRowColMember::CoMIStar(_) => "coMI*",
            ForbRowColMember::Masked(_) => "masked",
            ForbRowColMember::MVStar => "MV*",
            ForbRowColMember::CoMVStar => "coMV*",
            ForbRowColMember::MIStar3T => "MI*3T",
            ForbRowColMember::CoMIStar3T => "coMI*3T",
        }
    }

    pub fn is_well_formed(&self) -> bool {
        match self {
            ForbRowColMember::MIStar(k) | ForbRowColMember::CoMIStar(k) => *k >= 3,
            ForbRowColMember::Masked(a) => A_ROW_COL.contains(&a.to_string().as_str()),
            _ => true,
        }
    }

    pub fn realize(&self) -> Result<BinaryMatrix> {
        if !self.is_well_formed() {
            return Err(Error::InvalidMember(format!("{self} is not in ForbRowCol")));
        }
        Ok(match self {
            ForbRowColMember::MIStar(k) => mi_star(*k)?,
            ForbRowColMember::CoMIStar(k) => mi_star(*k)?.complement(),
            ForbRowColMember::Masked(a) => mi_star(a.len())?.row_complement(a)?,
            ForbRowColMember::MVStar => mv_star(),
            ForbRowColMember::CoMVStar => mv_star().complement(),
            ForbRowColMember::MIStar3T => mi_star(3)?.transpose(),
            ForbRowColMember::CoMIStar3T => mi_star(3)?.complement().transpose(),
        })
    }
}

impl fmt::Display for ForbRowColMember {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ForbRowColMember::MIStar(k) => write!(f, "MI*({k})"),
            ForbRowColMember::CoMIStar(k) => write!(f, "coMI*({k})"),
            ForbRowColMember::Masked(a) => write!(f, "{a}⊙MI*({})", a.len()),
            other => f.write_str(other.kind()),
        }
    }
}

/// An entry of a row or column map template.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Term {
    /// `i + j`, taken modulo `k`.
    Offset(usize),
    /// The appended all-zero column `k + 1`.
    Last,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PatternRow {
    pub pattern: &'static str,
    pub rho: [Term; 4],
    pub sigma: [Term; 3],
}

use Term::{Last, Offset as O};

const fn row(pattern: &'static str, rho: [usize; 4], sigma: [Term; 3]) -> PatternRow {
    PatternRow {
        pattern,
        rho: [O(rho[0]), O(rho[1]), O(rho[2]), O(rho[3])],
        sigma,
    }
}

/// Patterns and the maps cutting `M_I*(3)ᵀ` or its complement out of `a ⊙ M_I*(k)`.
pub const PATTERN_TABLE: [PatternRow; 11] = [
    row("xyxy", [0, 1, 2, 3], [O(2), O(1), Last]),
    row("xyxxy", [0, 1, 2, 4], [O(2), O(1), Last]),
    row("yxxyx", [4, 3, 2, 0], [O(3), O(4), Last]),
    row("yxxxxy", [1, 2, 4, 5], [O(4), O(1), O(3)]),
    row("xxxxxy", [1, 2, 4, 5], [O(4), O(1), O(3)]),
    row("xyxxxy", [0, 1, 2, 5], [O(2), O(1), O(4)]),
    row("yxxxyx", [5, 4, 3, 0], [O(4), O(5), O(2)]),
    row("xyyxxx", [0, 3, 5, 2], [O(5), O(1), O(4)]),
    row("xxxyyx", [5, 2, 0, 3], [O(1), O(5), O(2)]),
    row("xyyxxyy", [0, 3, 4, 6], [O(5), O(1), O(3)]),
    row("xyyyxxx", [0, 4, 5, 2], [O(6), O(1), O(4)]),
];

/// Which letter stands for 1 in an occurrence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Polarity {
    /// `x = 1, y = 0`; extraction yields `M_I*(3)ᵀ`.
    XOne,
    /// `x = 0, y = 1`; extraction yields its complement.
    XZero,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternHit {
    pub pattern: &'static str,
    /// 1-indexed starting position.
    pub i: usize,
    pub polarity: Polarity,
}

fn occurs_at(c: &[u8], pattern: &str, i0: usize, x: u8) -> bool {
    let k = c.len();
    pattern
        .bytes()
        .enumerate()
        .all(|(t, ch)| c[(i0 + t) % k] == if ch == b'x' { x } else { 1 - x })
}

/// The first circular occurrence of a pattern in `c`: lowest table row, then
/// lowest position, then `x = 1` before `x = 0`.
pub fn pattern_occurrence(c: &BinarySequence) -> Option<PatternHit> {
    let k = c.len();
    let bits = c.bits();
    for r in &PATTERN_TABLE {
        if k < r.pattern.len() {
            continue;
        }
        for i0 in 0..k {
            for (x, polarity) in [(1, Polarity::XOne), (0, Polarity::XZero)] {
                if occurs_at(bits, r.pattern, i0, x) {
                    return Some(PatternHit {
                        pattern: r.pattern,
                        i: i0 + 1,
                        polarity,
                    });
                }
            }
        }
    }
    None
}

/// The maps of the table row for `pattern`, instantiated at position `i` for `k` rows.
pub fn pattern_extract(pattern: &str, i: usize, k: usize) -> Result<Embedding> {
    let r = PATTERN_TABLE
        .iter()
        .find(|r| r.pattern == pattern)
        .ok_or_else(|| Error::InvalidPattern(pattern.to_string()))?;
    if k < pattern.len() || i == 0 || i > k {
        return Err(Error::InvalidPattern(format!(
            "{pattern} cannot occur at position {i} of a length-{k} sequence"
        )));
    }
    let eval = |t: Term| match t {
        Term::Offset(j) => (i - 1 + j) % k + 1,
        Term::Last => k + 1,
    };
    Ok(Embedding::new(
        IndexMap::new(r.rho.iter().map(|&t| eval(t)).collect())?,
        IndexMap::new(r.sigma.iter().map(|&t| eval(t)).collect())?,
    ))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForbRowColCertificate {
    pub member: ForbRowColMember,
    /// The located matrix is the transpose of `member`.
    pub transposed: bool,
    pub embedding: Embedding,
}

impl ForbRowColCertificate {
    pub fn realize(&self) -> Result<BinaryMatrix> {
        let m = self.member.realize()?;
        Ok(if self.transposed { m.transpose() } else { m })
    }
}

fn precondition() -> Error {
    Error::Precondition("matrix has the circular-ones property for rows".into())
}

/// Finds a member of `ForbRowCol ∪ {M_I*(3)ᵀ, co-M_I*(3)ᵀ}` in a matrix without the
/// circular-ones property for rows.
pub fn find_forbrowcol_rows(m: &BinaryMatrix) -> Result<ForbRowColCertificate> {
    let f = match find_forbrow(m) {
        Err(Error::Precondition(_)) => return Err(precondition()),
        other => other?,
    };
    let e = f.embedding;
    let (member, embedding) = match f.member {
        ForbRowMember::MIStar { k, a } => match pattern_occurrence(&f.c) {
            Some(hit) => {
                let inner = pattern_extract(hit.pattern, hit.i, k)?;
                let member = match hit.polarity {
                    Polarity::XOne => ForbRowColMember::MIStar3T,
                    Polarity::XZero => ForbRowColMember::CoMIStar3T,
                };
                (member, e.compose(&inner)?)
            }
            None => {
                let member = if a.count_ones() == 0 {
                    ForbRowColMember::MIStar(k)
                } else if a.count_ones() == k {
                    ForbRowColMember::CoMIStar(k)
                } else {
                    ForbRowColMember::Masked(a)
                };
                (member, e)
            }
        },
        ForbRowMember::MIV | ForbRowMember::CoMIV => {
            let col_map = e.col_map.compose(&IndexMap::new_unchecked(vec![6, 2, 4]))?;
            let embedding = Embedding::new(e.row_map, col_map);
            let found = m.submatrix(&embedding)?;
            let member = if found == ForbRowColMember::MIStar3T.realize()? {
                ForbRowColMember::MIStar3T
            } else {
                ForbRowColMember::CoMIStar3T
            };
            (member, embedding)
        }
        ForbRowMember::MVStar => (ForbRowColMember::MVStar, e),
        ForbRowMember::CoMVStar => (ForbRowColMember::CoMVStar, e),
    };
    let cert = ForbRowColCertificate {
        member,
        transposed: false,
        embedding,
    };
    if !verify_forbrowcol(m, &cert) {
        return Err(Error::Certificate(format!("extracted {} does not check out", cert.member)));
    }
    Ok(cert)
}

/// Finds a member of `ForbRowCol ∪ ForbRowColᵀ` in a matrix lacking the circular-ones
/// property for rows or for columns.
pub fn find_forbrowcol(m: &BinaryMatrix) -> Result<ForbRowColCertificate> {
    if circ1p_test(m).is_none() {
        return find_forbrowcol_rows(m);
    }
    let t = m.transpose();
    if circ1p_test(&t).is_none() {
        let d = find_forbrowcol_rows(&t)?;
        return Ok(ForbRowColCertificate {
            member: d.member,
            transposed: true,
            embedding: d.embedding.transposed(),
        });
    }
    Err(Error::Precondition(
        "matrix has the circular-ones property for rows and columns".into(),
    ))
}

pub fn verify_forbrowcol(m: &BinaryMatrix, cert: &ForbRowColCertificate) -> bool {
    match (cert.realize(), m.submatrix(&cert.embedding)) {
        (Ok(want), Ok(got)) => want == got,
        _ => false,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FailingSide {
    Rows,
    Columns,
}

/// Circular orders of the columns and of the rows, or the first side that fails.
pub fn circ_rc_test(
    m: &BinaryMatrix,
) -> std::result::Result<(Vec<usize>, Vec<usize>), FailingSide> {
    let cols = circ1p_test(m).ok_or(FailingSide::Rows)?;
    let rows = circ1p_test(&m.transpose()).ok_or(FailingSide::Columns)?;
    Ok((rows, cols))
}
