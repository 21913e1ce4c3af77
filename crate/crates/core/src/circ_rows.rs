//! The circular-ones property for rows: Tucker reductions, recognition and the
//! forbidden submatrices `ForbRow`.

use std::fmt;

use crate::bracelet::{booth_canonical, enumerate_a_k, in_a_k, BinarySequence};
use crate::c1p::{c1p_test, find_tucker_submatrix, tucker_matrix, TuckerFamily, TuckerWitness};
use crate::error::{Error, Result};
use crate::matrix::{BinaryMatrix, Embedding, IndexMap};

/// A member of `ForbRow`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ForbRowMember {
    /// `a ⊙ M_I*(k)` with `a ∈ A_k`.
    MIStar { k: usize, a: BinarySequence },
    MIV,
    CoMIV,
    MVStar,
    CoMVStar,
}

impl ForbRowMember {
    pub fn rows(&self) -> usize {
        match self {
            ForbRowMember::MIStar { k, .. } => *k,
            _ => 4,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            ForbRowMember::MIStar { .. } => "MI*",
            ForbRowMember::MIV => "MIV",
            ForbRowMember::CoMIV => "coMIV",
            ForbRowMember::MVStar => "MV*",
            ForbRowMember::CoMVStar => "coMV*",
        }
    }

    pub fn is_well_formed(&self) -> bool {
        match self {
            ForbRowMember::MIStar { k, a } => a.len() == *k && in_a_k(a),
            _ => true,
        }
    }
}

impl fmt::Display for ForbRowMember {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ForbRowMember::MIStar { a, .. } => write!(f, "{a}⊙MI*({})", a.len()),
            other => f.write_str(other.kind()),
        }
    }
}

pub fn mi_star(k: usize) -> Result<BinaryMatrix> {
    Ok(tucker_matrix(TuckerFamily::MI(k))?.star_extend())
}

pub fn mv_star() -> BinaryMatrix {
    tucker_matrix(TuckerFamily::MV).unwrap().star_extend()
}

pub fn realize(m: &ForbRowMember) -> Result<BinaryMatrix> {
    if !m.is_well_formed() {
        return Err(Error::InvalidMember(format!("{m} is not in ForbRow")));
    }
    Ok(match m {
        ForbRowMember::MIStar { k, a } => mi_star(*k)?.row_complement(a)?,
        ForbRowMember::MIV => tucker_matrix(TuckerFamily::MIV)?,
        ForbRowMember::CoMIV => tucker_matrix(TuckerFamily::MIV)?.complement(),
        ForbRowMember::MVStar => mv_star(),
        ForbRowMember::CoMVStar => mv_star().complement(),
    })
}

/// `M' = a' ⊙ M` where `a'` is column `z` of `M`, so that column `z` of `M'` is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TuckerReduction {
    pub reduced: BinaryMatrix,
    pub z: usize,
    pub a_prime: BinarySequence,
}

/// Tucker reduction on a column with the most ones (lowest index on ties).
pub fn tucker_reduction(m: &BinaryMatrix) -> Result<TuckerReduction> {
    if m.cols() == 0 {
        return Err(Error::Dimension("a Tucker reduction needs at least one column".into()));
    }
    let mut counts = vec![0usize; m.cols() + 1];
    for r in m.row_lists() {
        for &j in r {
            counts[j] += 1;
        }
    }
    let z = (1..=m.cols()).fold(1, |best, j| if counts[j] > counts[best] { j } else { best });
    tucker_reduction_at(m, z)
}

pub fn tucker_reduction_at(m: &BinaryMatrix, z: usize) -> Result<TuckerReduction> {
    if z == 0 || z > m.cols() {
        return Err(Error::Dimension(format!("column {z} outside [1, {}]", m.cols())));
    }
    let a_prime = m.column(z);
    Ok(TuckerReduction {
        reduced: m.row_complement(&a_prime)?,
        z,
        a_prime,
    })
}

/// A circular column order under which every row is an arc, or `None`.
pub fn circ1p_test(m: &BinaryMatrix) -> Option<Vec<usize>> {
    if m.cols() == 0 {
        return Some(Vec::new());
    }
    let red = tucker_reduction(m).ok()?;
    c1p_test(&red.reduced)
}

/// Whether every row's ones form an arc of the circular order `order`.
pub fn is_circular_order(m: &BinaryMatrix, order: &[usize]) -> bool {
    let l = m.cols();
    let Some(pos) = crate::c1p::positions(order, l) else {
        return false;
    };
    m.row_lists().iter().all(|r| {
        if r.len() <= 1 || r.len() == l {
            return true;
        }
        let mut p: Vec<usize> = r.iter().map(|&j| pos[j]).collect();
        p.sort_unstable();
        let inner_gaps = p.windows(2).filter(|w| w[1] - w[0] > 1).count();
        let wrap_gap = (p[0] + l - p[p.len() - 1] > 1) as usize;
        inner_gaps + wrap_gap <= 1
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LiftKind {
    MIStar,
    MVStar,
}

/// Turns a Tucker matrix found in the reduction `M'` into `a ⊙ M_I*(k')` or
/// `a ⊙ M_V*` inside `M`, keeping the row map.
pub fn lift_tucker(
    m: &BinaryMatrix,
    red: &TuckerReduction,
    w: &TuckerWitness,
) -> Result<(LiftKind, BinarySequence, Embedding)> {
    let rho = &w.embedding.row_map;
    let s = w.embedding.col_map.targets();
    let z = red.z;
    let k = rho.len();
    let a_rho = red.a_prime.compose(rho.targets())?;
    let inconsistent = || Error::Certificate("Tucker witness does not fit the reduction".into());
    if s.len() != w.family.cols() || k != w.family.rows() || s.contains(&z) {
        return Err(inconsistent());
    }
    let (kind, sigma, a) = match w.family {
        TuckerFamily::MI(_) => {
            let sigma: Vec<usize> = s.iter().copied().chain([z]).collect();
            (LiftKind::MIStar, sigma, a_rho)
        }
        TuckerFamily::MII(_) => {
            let mut sigma: Vec<usize> = s[..k - 1].to_vec();
            sigma.push(z);
            sigma.push(s[k - 1]);
            (LiftKind::MIStar, sigma, &a_rho + &BinarySequence::trailing_ones(k, 2))
        }
        TuckerFamily::MIII(_) => (
            LiftKind::MIStar,
            s.to_vec(),
            &a_rho + &BinarySequence::trailing_ones(k, 1),
        ),
        TuckerFamily::MIV => (
            LiftKind::MVStar,
            vec![s[1], s[0], s[4], s[5], s[3], s[2]],
            &a_rho + &BinarySequence::parse("0100")?,
        ),
        TuckerFamily::MV => {
            let sigma: Vec<usize> = s.iter().copied().chain([z]).collect();
            (LiftKind::MVStar, sigma, a_rho)
        }
    };
    let e = Embedding::new(rho.clone(), IndexMap::new(sigma)?);
    let expected = match kind {
        LiftKind::MIStar => mi_star(k)?.row_complement(&a)?,
        LiftKind::MVStar => mv_star().row_complement(&a)?,
    };
    if m.submatrix(&e)? != expected {
        return Err(inconsistent());
    }
    Ok((kind, a, e))
}

struct MvRow {
    rho: [usize; 4],
    sigma: [usize; 6],
    member: ForbRowMember,
}

const ID4: [usize; 4] = [1, 2, 3, 4];
const ID6: [usize; 6] = [1, 2, 3, 4, 5, 6];

/// Indexed by the mask read as a binary number, first entry most significant.
fn mvstar_table(mask: usize) -> MvRow {
    use ForbRowMember::*;
    let (rho, sigma, member) = match mask {
        0b0000 => (ID4, ID6, MVStar),
        0b0001 => (ID4, [2, 1, 4, 3, 6, 5], MVStar),
        0b0010 => ([2, 1, 3, 4], [6, 5, 4, 3, 2, 1], CoMVStar),
        0b0011 => ([2, 1, 3, 4], [5, 6, 3, 4, 1, 2], CoMVStar),
        0b0100 => (ID4, [2, 1, 6, 5, 3, 4], MIV),
        0b0101 => (ID4, [1, 2, 5, 6, 4, 3], MIV),
        0b0110 => ([1, 3, 2, 4], [1, 2, 6, 5, 4, 3], MVStar),
        0b0111 => ([1, 3, 2, 4], [2, 1, 5, 6, 3, 4], MVStar),
        0b1000 => ([1, 3, 2, 4], [2, 1, 5, 6, 3, 4], CoMVStar),
        0b1001 => ([1, 3, 2, 4], [1, 2, 6, 5, 4, 3], CoMVStar),
        0b1010 => (ID4, [1, 2, 5, 6, 4, 3], CoMIV),
        0b1011 => (ID4, [2, 1, 6, 5, 3, 4], CoMIV),
        0b1100 => ([2, 1, 3, 4], [5, 6, 3, 4, 1, 2], MVStar),
        0b1101 => ([2, 1, 3, 4], [6, 5, 4, 3, 2, 1], MVStar),
        0b1110 => (ID4, [2, 1, 4, 3, 6, 5], CoMVStar),
        0b1111 => (ID4, ID6, CoMVStar),
        _ => unreachable!("masks have four bits"),
    };
    MvRow { rho, sigma, member }
}

/// Maps `(ρ', σ')` and the member with `(a ⊙ M_V*)_{ρ',σ'}` equal to it, and the last
/// column `c'` of that member.
pub fn mvstar_classify(
    a: &BinarySequence,
) -> Result<(IndexMap, IndexMap, ForbRowMember, BinarySequence)> {
    if a.len() != 4 {
        return Err(Error::Dimension(format!("M_V* has 4 rows, mask has length {}", a.len())));
    }
    let mask = a.bits().iter().fold(0, |acc, &b| (acc << 1) | b as usize);
    let row = mvstar_table(mask);
    let realized = realize(&row.member)?;
    let c = realized.column(realized.cols());
    Ok((
        IndexMap::new_unchecked(row.rho.to_vec()),
        IndexMap::new_unchecked(row.sigma.to_vec()),
        row.member,
        c,
    ))
}

/// A member of `ForbRow` located in a host matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForbRowCertificate {
    pub member: ForbRowMember,
    pub embedding: Embedding,
    /// Last column of the located matrix.
    pub c: BinarySequence,
}

/// Finds a member of `ForbRow` in a matrix without the circular-ones property.
pub fn find_forbrow(m: &BinaryMatrix) -> Result<ForbRowCertificate> {
    let red = tucker_reduction(m)
        .map_err(|_| Error::Precondition("matrix has the circular-ones property".into()))?;
    let w = match find_tucker_submatrix(&red.reduced) {
        Err(Error::Precondition(_)) => {
            return Err(Error::Precondition("matrix has the circular-ones property".into()))
        }
        other => other?,
    };
    let (kind, a, e) = lift_tucker(m, &red, &w)?;
    match kind {
        LiftKind::MIStar => {
            let k = a.len();
            let (canon, pi) = booth_canonical(&a);
            let pi_map = IndexMap::new_unchecked(pi.permutation().to_vec());
            let pi_star = IndexMap::new_unchecked(
                pi.permutation().iter().copied().chain([k + 1]).collect(),
            );
            let row_map = e.row_map.compose(&pi_map)?;
            let col_map = e.col_map.compose(&pi_star)?;
            let (col_map, a_final) = match canon.to_string().as_str() {
                "001" => (
                    col_map.compose(&IndexMap::new_unchecked(vec![3, 4, 1, 2]))?,
                    BinarySequence::ones(3),
                ),
                "011" => (
                    col_map.compose(&IndexMap::new_unchecked(vec![2, 1, 4, 3]))?,
                    BinarySequence::zeros(3),
                ),
                _ => (col_map, canon),
            };
            Ok(ForbRowCertificate {
                member: ForbRowMember::MIStar { k, a: a_final.clone() },
                embedding: Embedding::new(row_map, col_map),
                c: a_final,
            })
        }
        LiftKind::MVStar => {
            let (rho2, sigma2, member, c) = mvstar_classify(&a)?;
            Ok(ForbRowCertificate {
                member,
                embedding: Embedding::new(e.row_map.compose(&rho2)?, e.col_map.compose(&sigma2)?),
                c,
            })
        }
    }
}

/// All members of `ForbRow` with `k` rows, `3 ≤ k ≤ 16`.
pub fn forbrow_enumerate(k: usize) -> Result<Vec<ForbRowMember>> {
    if !(3..=16).contains(&k) {
        return Err(Error::InvalidParameter(format!("forbrow_enumerate needs 3 <= k <= 16, got {k}")));
    }
    let mut out: Vec<ForbRowMember> = enumerate_a_k(k)?
        .into_iter()
        .map(|a| ForbRowMember::MIStar { k, a })
        .collect();
    if k == 4 {
        out.extend([
            ForbRowMember::MIV,
            ForbRowMember::CoMIV,
            ForbRowMember::MVStar,
            ForbRowMember::CoMVStar,
        ]);
    }
    Ok(out)
}

pub fn verify_forbrow(m: &BinaryMatrix, cert: &ForbRowCertificate) -> bool {
    let Ok(expected) = realize(&cert.member) else {
        return false;
    };
    match m.submatrix(&cert.embedding) {
        Ok(found) => found == expected && cert.c == expected.column(expected.cols()),
        Err(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::canonical_config;
    use crate::oracles::{brute_circ1p, is_minimal_forbidden, MatrixProperty};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn s(x: &str) -> BinarySequence {
        BinarySequence::parse(x).unwrap()
    }

    fn random_matrix(rng: &mut StdRng, k: usize, l: usize, p: f64) -> BinaryMatrix {
        let rows = (0..k)
            .map(|_| (1..=l).filter(|_| rng.random_bool(p)).collect())
            .collect();
        BinaryMatrix::from_rows(l, rows).unwrap()
    }

    #[test]
    fn realize_examples() {
        let mis3 = mi_star(3).unwrap();
        assert_eq!(realize(&ForbRowMember::MIStar { k: 3, a: s("000") }).unwrap(), mis3);
        assert_eq!(
            realize(&ForbRowMember::MIStar { k: 3, a: s("111") }).unwrap(),
            mis3.complement()
        );
        assert_eq!(realize(&ForbRowMember::CoMVStar).unwrap(), mv_star().complement());
        assert!(matches!(
            realize(&ForbRowMember::MIStar { k: 3, a: s("001") }),
            Err(Error::InvalidMember(_))
        ));
    }

    #[test]
    fn reduction_examples() {
        let mis3 = mi_star(3).unwrap();
        let red = tucker_reduction_at(&mis3, 4).unwrap();
        assert_eq!((red.reduced.clone(), red.a_prime.clone()), (mis3, s("000")));
        let m = BinaryMatrix::from_strs(&["01", "11"]).unwrap();
        let red = tucker_reduction_at(&m, 1).unwrap();
        assert_eq!(red.a_prime, s("01"));
        assert_eq!(red.reduced, BinaryMatrix::from_strs(&["01", "00"]).unwrap());
        assert_eq!(red.reduced.row_complement(&red.a_prime).unwrap(), m);
        assert!(tucker_reduction(&BinaryMatrix::zeros(2, 0)).is_err());
    }

    #[test]
    fn circ1p_examples() {
        let mi3 = tucker_matrix(TuckerFamily::MI(3)).unwrap();
        let order = circ1p_test(&mi3).unwrap();
        assert!(is_circular_order(&mi3, &order));
        assert!(circ1p_test(&mi_star(3).unwrap()).is_none());
        let ones = BinaryMatrix::from_strs(&["1111"]).unwrap();
        assert!(circ1p_test(&ones).is_some());
    }

    #[test]
    fn mvstar_table_is_exact() {
        let mvs = mv_star();
        for mask in 0..16usize {
            let a = BinarySequence::from_bits((0..4).rev().map(|b| (mask >> b & 1) as u8).collect());
            let (rho, sigma, member, c) = mvstar_classify(&a).unwrap();
            let got = mvs.row_complement(&a).unwrap().submatrix(&Embedding::new(rho, sigma)).unwrap();
            let want = realize(&member).unwrap();
            assert_eq!(got, want, "mask {a}");
            assert_eq!(c, want.column(want.cols()));
        }
        let (rho, sigma, member, _) = mvstar_classify(&s("0100")).unwrap();
        assert_eq!(member, ForbRowMember::MIV);
        assert_eq!(rho.targets(), &[1, 2, 3, 4]);
        assert_eq!(sigma.targets(), &[2, 1, 6, 5, 3, 4]);
        assert_eq!(mvstar_classify(&s("1111")).unwrap().2, ForbRowMember::CoMVStar);
        assert_eq!(mvstar_classify(&s("0000")).unwrap().3, s("0000"));
    }

    #[test]
    fn lift_examples() {
        let mis3 = mi_star(3).unwrap();
        let red = tucker_reduction(&mis3).unwrap();
        let w = find_tucker_submatrix(&red.reduced).unwrap();
        let (kind, a, e) = lift_tucker(&mis3, &red, &w).unwrap();
        assert_eq!(kind, LiftKind::MIStar);
        assert_eq!(a, red.a_prime.compose(w.embedding.row_map.targets()).unwrap());
        assert_eq!(e.col_map.targets()[3], red.z);
        assert_eq!(mis3.submatrix(&e).unwrap(), mis3.row_complement(&a).unwrap());
    }

    #[test]
    fn star_reduction_identities() {
        for k in 4..=8 {
            let mii_star = tucker_matrix(TuckerFamily::MII(k)).unwrap().star_extend();
            let cols: Vec<usize> = (1..k).chain([k + 1, k]).collect();
            let lhs = mii_star
                .row_complement(&BinarySequence::trailing_ones(k, 2))
                .unwrap()
                .select(&(1..=k).collect::<Vec<_>>(), &cols)
                .unwrap();
            assert_eq!(lhs, mi_star(k).unwrap());
        }
        for k in 3..=8 {
            let miii = tucker_matrix(TuckerFamily::MIII(k)).unwrap();
            let lhs = miii.row_complement(&BinarySequence::trailing_ones(k, 1)).unwrap();
            assert_eq!(lhs, mi_star(k).unwrap());
        }
    }

    #[test]
    fn find_examples() {
        let mis3 = mi_star(3).unwrap();
        let cert = find_forbrow(&mis3).unwrap();
        assert_eq!(cert.member, ForbRowMember::MIStar { k: 3, a: s("000") });
        assert_eq!(cert.c, s("000"));
        assert!(verify_forbrow(&mis3, &cert));

        let cert = find_forbrow(&mv_star()).unwrap();
        assert!(verify_forbrow(&mv_star(), &cert));
        assert_eq!(cert.c, realize(&cert.member).unwrap().column(6));

        let co_miv = tucker_matrix(TuckerFamily::MIV).unwrap().complement();
        let cert = find_forbrow(&co_miv).unwrap();
        assert!(matches!(
            cert.member,
            ForbRowMember::MIV | ForbRowMember::CoMIV | ForbRowMember::MVStar | ForbRowMember::CoMVStar
        ));
        assert!(verify_forbrow(&co_miv, &cert));

        assert!(matches!(
            find_forbrow(&tucker_matrix(TuckerFamily::MI(4)).unwrap()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn verify_rejects_tampering() {
        let m = mi_star(5).unwrap().row_complement(&s("00101")).unwrap();
        let mut cert = find_forbrow(&m).unwrap();
        assert!(verify_forbrow(&m, &cert));
        let mut cols: Vec<usize> = cert.embedding.col_map.clone().into();
        cols.swap(0, 1);
        cert.embedding.col_map = IndexMap::new(cols).unwrap();
        assert!(!verify_forbrow(&m, &cert));
        let bad = ForbRowCertificate {
            member: ForbRowMember::MIStar { k: 3, a: s("001") },
            embedding: Embedding::identity(3, 4),
            c: s("001"),
        };
        let host = mi_star(3).unwrap().row_complement(&s("001")).unwrap();
        assert!(!verify_forbrow(&host, &bad));
    }

    #[test]
    fn enumeration_counts() {
        let counts: Vec<usize> = (3..=8).map(|k| forbrow_enumerate(k).unwrap().len()).collect();
        assert_eq!(counts, vec![2, 10, 8, 13, 18, 30]);
        assert!(forbrow_enumerate(2).is_err());
    }

    #[test]
    fn members_fail_and_are_minimal() {
        for k in 3..=6 {
            let members = forbrow_enumerate(k).unwrap();
            let mut keys = std::collections::HashSet::new();
            for m in &members {
                let r = realize(m).unwrap();
                assert!(circ1p_test(&r).is_none(), "{m}");
                assert!(is_minimal_forbidden(&r, MatrixProperty::CircularOnesRows).unwrap(), "{m}");
                assert!(keys.insert(canonical_config(&r).unwrap()), "{m} repeats a configuration");
            }
        }
    }

    #[test]
    fn shift_reversal_closure() {
        let mut rng = StdRng::seed_from_u64(3);
        for _ in 0..200 {
            let k = rng.random_range(3..=7);
            let a = BinarySequence::from_bits((0..k).map(|_| rng.random_range(0..2)).collect());
            let base = canonical_config(&mi_star(k).unwrap().row_complement(&a).unwrap()).unwrap();
            for b in [a.shift(), a.reverse()] {
                let m = mi_star(k).unwrap().row_complement(&b).unwrap();
                assert_eq!(canonical_config(&m).unwrap(), base);
            }
        }
    }

    #[test]
    fn random_agreement_and_certificates() {
        let mut rng = StdRng::seed_from_u64(17);
        for n in 0..2000 {
            let k = rng.random_range(1..=9);
            let l = rng.random_range(1..=7);
            let p = 0.1 + 0.8 * (n % 9) as f64 / 8.0;
            let m = random_matrix(&mut rng, k, l, p);
            let got = circ1p_test(&m);
            assert_eq!(got.is_some(), brute_circ1p(&m).unwrap(), "{m:?}");
            let red = tucker_reduction(&m).unwrap();
            assert_eq!(got.is_some(), c1p_test(&red.reduced).is_some());
            match got {
                Some(order) => assert!(is_circular_order(&m, &order)),
                None => {
                    let cert = find_forbrow(&m).unwrap();
                    assert!(verify_forbrow(&m, &cert), "{m:?} {cert:?}");
                }
            }
        }
    }
}
