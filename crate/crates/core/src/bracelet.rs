//! Binary sequences under shifts and reversals.
//!
//! A bracelet is the lexicographically least member of its orbit under rotation and
//! reversal. `A_k` is the set of bracelets of length `k` for `k ≥ 4`, and `{000, 111}`
//! for `k = 3`.

use std::fmt;
use std::ops::Add;

use crate::error::{Error, Result};

/// A finite sequence over {0, 1}.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BinarySequence {
    bits: Vec<u8>,
}

impl BinarySequence {
    /// Panics if some entry is not 0 or 1.
    pub fn from_bits(bits: Vec<u8>) -> Self {
        assert!(bits.iter().all(|&b| b <= 1), "binary sequence entries must be 0 or 1");
        BinarySequence { bits }
    }

    pub fn parse(s: &str) -> Result<Self> {
        s.bytes()
            .map(|b| match b {
                b'0' => Ok(0),
                b'1' => Ok(1),
                _ => Err(Error::parse(1, format!("{s:?} is not a 0/1 string"))),
            })
            .collect::<Result<Vec<u8>>>()
            .map(|bits| BinarySequence { bits })
    }

    pub fn zeros(k: usize) -> Self {
        BinarySequence { bits: vec![0; k] }
    }

    pub fn ones(k: usize) -> Self {
        BinarySequence { bits: vec![1; k] }
    }

    /// `0…01…1` with `ones` trailing ones.
    pub fn trailing_ones(k: usize, ones: usize) -> Self {
        let mut bits = vec![0; k];
        bits[k - ones..].fill(1);
        BinarySequence { bits }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    /// Entry `i`, 1-indexed.
    #[inline]
    pub fn at(&self, i: usize) -> u8 {
        self.bits[i - 1]
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b == 1).count()
    }

    /// `a₂ a₃ … a_k a₁`.
    pub fn shift(&self) -> Self {
        let mut bits = self.bits.clone();
        if !bits.is_empty() {
            bits.rotate_left(1);
        }
        BinarySequence { bits }
    }

    /// `a_k … a₁`.
    pub fn reverse(&self) -> Self {
        let mut bits = self.bits.clone();
        bits.reverse();
        BinarySequence { bits }
    }

    /// `a_ρ = a_{ρ(1)} … a_{ρ(s)}`.
    pub fn compose(&self, rho: &[usize]) -> Result<Self> {
        rho.iter()
            .map(|&i| {
                if i == 0 || i > self.len() {
                    Err(Error::InvalidEmbedding(format!(
                        "index {i} outside [1, {}]",
                        self.len()
                    )))
                } else {
                    Ok(self.bits[i - 1])
                }
            })
            .collect::<Result<Vec<u8>>>()
            .map(|bits| BinarySequence { bits })
    }

    /// Mod-2 sum; lengths must agree.
    pub fn xor(&self, other: &Self) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::Dimension(format!(
                "adding sequences of lengths {} and {}",
                self.len(),
                other.len()
            )));
        }
        Ok(BinarySequence {
            bits: self.bits.iter().zip(&other.bits).map(|(a, b)| a ^ b).collect(),
        })
    }

    fn from_u64(x: u64, k: usize) -> Self {
        BinarySequence {
            bits: (0..k).rev().map(|s| ((x >> s) & 1) as u8).collect(),
        }
    }
}

impl Add for &BinarySequence {
    type Output = BinarySequence;

    /// Panics on a length mismatch; use [`BinarySequence::xor`] to get an error.
    fn add(self, rhs: &BinarySequence) -> BinarySequence {
        self.xor(rhs).expect("mod-2 sum of sequences of different lengths")
    }
}

impl fmt::Display for BinarySequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinarySequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinarySequence({self})")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PermAtom {
    Shift,
    Reversal,
}

/// A permutation π of `[k]` written as a composition of shifts and reversals.
///
/// The atoms act on sequences left to right; `derived` is what they make of
/// `1 2 … k`, so that `a_π` reads `a` at the positions listed in `derived`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PermRecord {
    atoms: Vec<PermAtom>,
    derived: Vec<usize>,
}

impl PermRecord {
    pub fn identity(k: usize) -> Self {
        PermRecord {
            atoms: Vec::new(),
            derived: (1..=k).collect(),
        }
    }

    pub fn from_atoms(k: usize, atoms: Vec<PermAtom>) -> Self {
        let mut derived: Vec<usize> = (1..=k).collect();
        for a in &atoms {
            match a {
                PermAtom::Shift if k > 0 => derived.rotate_left(1),
                PermAtom::Shift => {}
                PermAtom::Reversal => derived.reverse(),
            }
        }
        PermRecord { atoms, derived }
    }

    pub fn atoms(&self) -> &[PermAtom] {
        &self.atoms
    }

    pub fn permutation(&self) -> &[usize] {
        &self.derived
    }

    pub fn len(&self) -> usize {
        self.derived.len()
    }

    pub fn is_empty(&self) -> bool {
        self.derived.is_empty()
    }

    /// `a_π`.
    pub fn apply(&self, a: &BinarySequence) -> Result<BinarySequence> {
        if a.len() != self.len() {
            return Err(Error::Dimension(format!(
                "permutation of [{}] applied to a sequence of length {}",
                self.len(),
                a.len()
            )));
        }
        a.compose(&self.derived)
    }
}

/// Booth's algorithm: the start of a lexicographically least rotation.
pub fn least_rotation(s: &[u8]) -> usize {
    let n = s.len();
    if n == 0 {
        return 0;
    }
    let mut fail = vec![-1isize; 2 * n];
    let mut k = 0usize;
    for j in 1..2 * n {
        let sj = s[j % n];
        let mut i = fail[j - k - 1];
        while i != -1 && sj != s[(k + i as usize + 1) % n] {
            if sj < s[(k + i as usize + 1) % n] {
                k = j - i as usize - 1;
            }
            i = fail[i as usize];
        }
        if i == -1 && sj != s[k % n] {
            if sj < s[k % n] {
                k = j;
            }
            fail[j - k] = -1;
        } else {
            fail[j - k] = i + 1;
        }
    }
    k % n
}

/// The bracelet of `a` together with a shift/reversal composition π with `a_π` equal
/// to it. Ties between the two orientations go to the unreversed one.
pub fn booth_canonical(a: &BinarySequence) -> (BinarySequence, PermRecord) {
    let k = a.len();
    let fwd = least_rotation(a.bits());
    let rev_seq = a.reverse();
    let bwd = least_rotation(rev_seq.bits());
    let rotated = |bits: &[u8], r: usize| {
        let mut v = bits.to_vec();
        v.rotate_left(r);
        v
    };
    let f = rotated(a.bits(), fwd);
    let b = rotated(rev_seq.bits(), bwd);
    let (canonical, atoms) = if b < f {
        let mut atoms = vec![PermAtom::Reversal];
        atoms.extend(std::iter::repeat_n(PermAtom::Shift, bwd));
        (b, atoms)
    } else {
        (f, vec![PermAtom::Shift; fwd])
    };
    (
        BinarySequence::from_bits(canonical),
        PermRecord::from_atoms(k, atoms),
    )
}

pub fn is_bracelet(a: &BinarySequence) -> bool {
    booth_canonical(a).0 == *a
}

pub fn in_a_k(a: &BinarySequence) -> bool {
    match a.len() {
        0..=2 => false,
        3 => a.count_ones() % 3 == 0,
        _ => is_bracelet(a),
    }
}

const ENUMERATION_LIMIT: usize = 24;

/// All bracelets of length `k`, sorted.
pub fn enumerate_bracelets(k: usize) -> Result<Vec<BinarySequence>> {
    if k > ENUMERATION_LIMIT {
        return Err(Error::TooLarge(format!(
            "bracelet enumeration is limited to length {ENUMERATION_LIMIT}"
        )));
    }
    if k == 0 {
        return Ok(vec![BinarySequence::default()]);
    }
    let mask = (1u64 << k) - 1;
    let reverse = |x: u64| x.reverse_bits() >> (64 - k);
    let rot = |x: u64| ((x << 1) | (x >> (k - 1))) & mask;
    let mut out = Vec::new();
    'outer: for x in 0..=mask {
        let mut y = x;
        let mut r = reverse(x);
        for _ in 0..k {
            if y < x || r < x {
                continue 'outer;
            }
            y = rot(y);
            r = rot(r);
        }
        out.push(BinarySequence::from_u64(x, k));
    }
    Ok(out)
}

/// `A_k`, sorted.
pub fn enumerate_a_k(k: usize) -> Result<Vec<BinarySequence>> {
    if k < 3 {
        return Err(Error::InvalidParameter(format!("A_k needs k >= 3, got {k}")));
    }
    if k == 3 {
        return Ok(vec![BinarySequence::zeros(3), BinarySequence::ones(3)]);
    }
    enumerate_bracelets(k)
}

pub fn euler_totient(d: u64) -> u64 {
    let mut n = d;
    let mut phi = d;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if n > 1 {
        phi -= phi / n;
    }
    phi
}

/// Number of binary bracelets of length `k ≥ 1`, by the necklace divisor sum plus the
/// reflection term.
pub fn bracelet_count(k: u32) -> u128 {
    assert!(k >= 1, "bracelet_count needs k >= 1");
    let kk = k as u128;
    let necklaces: u128 = (1..=k)
        .filter(|d| k % d == 0)
        .map(|d| euler_totient(d as u64) as u128 * (1u128 << (k / d)))
        .sum();
    let reflections = if k % 2 == 0 {
        3 * (1u128 << (k / 2 - 1))
    } else {
        1u128 << k.div_ceil(2)
    };
    (necklaces + kk * reflections) / (2 * kk)
}
