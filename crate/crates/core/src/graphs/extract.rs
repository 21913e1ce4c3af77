//! Turning an induced coH2 or coH4 plus a chordless odd cycle of the complement into
//! a small forbidden induced subgraph.
//!
//! All work happens in `H`, the complement of `G[F ∪ C]`, where `J = H[F]` is `H2`
//! or `H4` with its vertices labelled `x1..x4`, `y1..y4` as in the built-in catalog.

use super::catalog::{find_isomorphism, identify_catalog, Catalog, CatalogName};
use super::recognize::{chordless_odd_cycle, is_chordless_odd_cycle};
use super::Graph;
use crate::error::{Error, Result};

/// Label slots: `x1..x4` are 0..4 and `y1..y4` are 4..8.
const H2_SLOTS: [usize; 7] = [0, 1, 2, 3, 4, 5, 6];
const H4_SLOTS: [usize; 7] = [0, 1, 2, 4, 5, 6, 7];
/// The automorphism of both graphs exchanging `x1 ↔ x2` and `y1 ↔ y2`.
const SWAP: [usize; 8] = [1, 0, 2, 3, 5, 4, 6, 7];
const LAST_CASE: u8 = 18;

/// Given `F` inducing coH2 or coH4 in `g` and a chordless odd cycle `C` of the
/// complement (both as vertex lists, `C` in cyclic order), returns a vertex set
/// inside `F ∪ C` inducing one of C4*, coC6, coH3, coBIII1 or coC(2k+1)*.
pub fn extract_from_h2_h4(g: &Graph, f: &[usize], c: &[usize]) -> Result<Vec<usize>> {
    let n = g.n();
    let mut fs = f.to_vec();
    fs.sort_unstable();
    fs.dedup();
    if fs.len() != f.len() || f.iter().chain(c).any(|&v| v == 0 || v > n) {
        return Err(Error::InvalidParameter("vertex lists must be distinct vertices of the graph".into()));
    }
    let ring: Vec<usize> = (1..=c.len()).collect();
    if !is_chordless_odd_cycle(&g.induced_subgraph(c).complement(), &ring) {
        return Err(Error::InvalidParameter("C is not a chordless odd cycle of the complement".into()));
    }
    let mut verts: Vec<usize> = f.iter().chain(c).copied().collect();
    verts.sort_unstable();
    verts.dedup();
    let local = |v: usize| verts.binary_search(&v).map(|i| i + 1).unwrap_or(0);
    let h = g.induced_subgraph(&verts).complement();
    let j = g.induced_subgraph(f).complement();

    let builtin = Catalog::builtin();
    let (slots, phi) = [(CatalogName::H2, H2_SLOTS), (CatalogName::H4, H4_SLOTS)]
        .into_iter()
        .find_map(|(name, slots)| Some((slots, find_isomorphism(&builtin.graph(name).ok()?, &j)?)))
        .ok_or_else(|| Error::InvalidParameter("F induces neither coH2 nor coH4".into()))?;
    let mut lab = [0usize; 8];
    for (i, &slot) in slots.iter().enumerate() {
        lab[slot] = local(f[phi[i] - 1]);
    }
    let cycle: Vec<usize> = c.iter().map(|&v| local(v)).collect();

    let found = Solver { h: &h, lab }.run(&cycle)?;
    let mut out: Vec<usize> = found.into_iter().map(|v| verts[v - 1]).collect();
    out.sort_unstable();
    match identify_catalog(&g.induced_subgraph(&out)) {
        Some(
            CatalogName::CycleStar(4)
            | CatalogName::CoC2k(3)
            | CatalogName::CoH3
            | CatalogName::CoBIII1
            | CatalogName::CoC2k1Star(_),
        ) => Ok(out),
        other => Err(Error::Certificate(format!("extracted {out:?} induces {other:?}"))),
    }
}

enum Found {
    Set(Vec<usize>),
    /// An odd cycle avoiding the closed neighbourhood of this vertex.
    OddAvoiding(usize),
}

enum Step {
    Found(Found),
    Goto(u8),
}

/// The path `P` in a chosen orientation, with `J` labels after a chosen automorphism.
#[derive(Clone)]
struct Frame {
    p: Vec<usize>,
    lab: [usize; 8],
}

impl Frame {
    fn s(&self) -> usize {
        self.p.len()
    }
    fn a(&self, i: usize) -> usize {
        self.p[i - 1]
    }
    fn slot(&self, slot: usize) -> Result<usize> {
        match self.lab[slot] {
            0 => Err(Error::Certificate("case needs a vertex absent from J".into())),
            v => Ok(v),
        }
    }
    fn x(&self, i: usize) -> Result<usize> {
        self.slot(i - 1)
    }
    fn y(&self, i: usize) -> Result<usize> {
        self.slot(i + 3)
    }
}

fn odd_case(i: usize, j: usize) -> Option<u8> {
    Some(match (i, j) {
        (1, 1) => 1,
        (1, 2) => 2,
        (1, 3) => 3,
        (1, 4) => 4,
        (3, 1) => 5,
        (3, 3) => 6,
        (3, 4) => 7,
        (4, 1) => 8,
        (4, 3) => 9,
        _ => return None,
    })
}

fn even_case(side_y: bool, i: usize, j: usize) -> Option<u8> {
    Some(match (side_y, i, j) {
        (false, 1, 3) => 10,
        (false, 1, 2) => 11,
        (false, 1, 4) => 12,
        (false, 3, 4) => 13,
        (true, 1, 2) => 14,
        (true, 1, 3) => 15,
        (true, 1, 4) => 16,
        (true, 3, 4) => 17,
        _ => return None,
    })
}

struct Solver<'a> {
    h: &'a Graph,
    lab: [usize; 8],
}

impl Solver<'_> {
    fn adj(&self, u: usize, v: usize) -> bool {
        self.h.has_edge(u, v)
    }

    fn run(&self, cycle: &[usize]) -> Result<Vec<usize>> {
        let jverts: Vec<usize> = self.lab.iter().copied().filter(|&v| v != 0).collect();
        if let Some(&v) = jverts.iter().find(|&&v| !cycle.iter().any(|&c| self.adj(v, c))) {
            return self.realize(Found::OddAvoiding(v));
        }
        let near = |c: usize, slots: std::ops::Range<usize>| {
            self.lab[slots].iter().any(|&v| v != 0 && self.adj(v, c))
        };
        let in_wx = |c: usize| near(c, 0..4);
        let in_wy = |c: usize| near(c, 4..8);
        let len = cycle.len();
        let p: Vec<usize> = match cycle.iter().find(|&&c| in_wx(c) && in_wy(c)) {
            Some(&w) => vec![w],
            None => {
                let i0 = cycle
                    .iter()
                    .position(|&c| in_wx(c))
                    .ok_or_else(|| Error::Certificate("no cycle vertex sees X".into()))?;
                let at = |t: usize| cycle[(i0 + t) % len];
                let stop = (1..=len)
                    .find(|&t| (in_wx(at(t)) && t % 2 == 1) || (in_wy(at(t)) && t % 2 == 0))
                    .unwrap_or(len);
                let start = (0..stop).rev().find(|&t| in_wx(at(t)) || in_wy(at(t))).unwrap_or(0);
                let mut p: Vec<usize> = (start..=stop).map(at).collect();
                if p.len() == len {
                    if !in_wx(p[0]) {
                        p.reverse();
                    }
                    let (x1, y1, x2, y2) = (self.lab[0], self.lab[4], self.lab[1], self.lab[5]);
                    return self.realize(Found::Set(vec![p[0], p[1], p[2], x1, y1, x2, y2]));
                }
                p
            }
        };

        let mut frames = Vec::new();
        for reversed in [false, true] {
            for swapped in [false, true] {
                let mut path = p.clone();
                if reversed {
                    path.reverse();
                }
                let lab = if swapped { SWAP.map(|s| self.lab[s]) } else { self.lab };
                frames.push(Frame { p: path, lab });
            }
        }
        let (mut case, mut frame) = frames
            .iter()
            .filter_map(|f| self.candidates(f).into_iter().min().map(|c| (c, f.clone())))
            .min_by_key(|&(c, _)| c)
            .unwrap_or((LAST_CASE, frames[0].clone()));
        loop {
            match self.case(case, &frame)? {
                Step::Found(found) => return self.realize(found),
                Step::Goto(next) => {
                    if next >= case {
                        return Err(Error::Certificate(format!("case {case} did not reduce")));
                    }
                    frame = frames
                        .iter()
                        .find(|f| self.candidates(f).contains(&next))
                        .cloned()
                        .ok_or_else(|| Error::Certificate(format!("case {next} does not apply")))?;
                    case = next;
                }
            }
        }
    }

    /// Case numbers whose defining adjacencies hold in `f`.
    fn candidates(&self, f: &Frame) -> Vec<u8> {
        let (a1, last) = (f.a(1), f.a(f.s()));
        let sees = |a: usize, slot: usize| f.lab[slot] != 0 && self.adj(a, f.lab[slot]);
        let mut out = Vec::new();
        for i in 1..=4 {
            for j in 1..=4 {
                if f.s() % 2 == 1 {
                    if sees(a1, i - 1) && sees(last, j + 3) {
                        out.extend(odd_case(i, j));
                    }
                } else if i != j {
                    if sees(a1, i - 1) && sees(last, j - 1) {
                        out.extend(even_case(false, i, j));
                    }
                    if sees(a1, i + 3) && sees(last, j + 3) {
                        out.extend(even_case(true, i, j));
                    }
                }
            }
        }
        out
    }

    fn realize(&self, found: Found) -> Result<Vec<usize>> {
        match found {
            Found::Set(set) => Ok(set),
            Found::OddAvoiding(v) => {
                let rest: Vec<usize> =
                    (1..=self.h.n()).filter(|&u| u != v && !self.adj(u, v)).collect();
                let cycle = chordless_odd_cycle(&self.h.induced_subgraph(&rest)).ok_or_else(|| {
                    Error::Certificate(format!("no odd cycle avoids the neighbourhood of {v}"))
                })?;
                let mut out: Vec<usize> = cycle.into_iter().map(|u| rest[u - 1]).collect();
                out.push(v);
                Ok(out)
            }
        }
    }

    fn case(&self, case: u8, f: &Frame) -> Result<Step> {
        use Found::{OddAvoiding as Odd, Set};
        let done = |found| Ok(Step::Found(found));
        let adj = |u, v| self.adj(u, v);
        let (s, a1, last) = (f.s(), f.a(1), f.a(f.s()));
        match case {
            1 => {
                let (x1, y1, x2, y2) = (f.x(1)?, f.y(1)?, f.x(2)?, f.y(2)?);
                if !adj(a1, x2) {
                    return done(Odd(x2));
                }
                if !adj(last, y2) {
                    return done(Odd(y2));
                }
                if s == 1 {
                    return done(Set(vec![x1, y1, x2, y2, a1]));
                }
                if !adj(a1, last) {
                    return done(Set(vec![a1, x1, y1, last, y2, x2]));
                }
                done(Set(vec![a1, x1, y1, x2, y2, f.a(2), f.a(3)]))
            }
            2 => {
                if !adj(a1, f.x(3)?) {
                    return done(Odd(f.x(3)?));
                }
                if !adj(last, f.y(1)?) {
                    return done(Odd(f.y(1)?));
                }
                Ok(Step::Goto(1))
            }
            3 => {
                if !adj(last, f.y(2)?) {
                    return done(Odd(f.y(2)?));
                }
                Ok(Step::Goto(2))
            }
            4 => {
                for (end, v) in [(a1, f.x(3)?), (last, f.y(2)?), (last, f.y(1)?)] {
                    if !adj(end, v) {
                        return done(Odd(v));
                    }
                }
                Ok(Step::Goto(1))
            }
            5 => {
                if adj(a1, f.x(1)?) {
                    return Ok(Step::Goto(1));
                }
                if adj(a1, f.x(2)?) {
                    return Ok(Step::Goto(2));
                }
                let (x1, y1, x2, y2, x3, y3) = (f.x(1)?, f.y(1)?, f.x(2)?, f.y(2)?, f.x(3)?, f.y(3)?);
                if s > 1 {
                    return done(Set(vec![x1, y1, x2, y2, x3, y3, a1]));
                }
                // a1 also sees y1, closing the 5-cycle a1 x3 y3 x1 y1.
                if !adj(a1, y2) {
                    return done(Odd(y2));
                }
                if !adj(a1, y3) {
                    return done(Set(vec![a1, y1, x1, y3, x2, y2]));
                }
                done(Set(vec![x1, x2, x3, y1, y2, y3, a1]))
            }
            6 | 7 => {
                if !adj(last, f.y(1)?) {
                    return done(Odd(f.y(1)?));
                }
                Ok(Step::Goto(5))
            }
            8 => {
                if !adj(a1, f.x(2)?) {
                    return done(Odd(f.x(2)?));
                }
                Ok(Step::Goto(2))
            }
            9 => {
                if adj(a1, f.x(1)?) || adj(a1, f.x(2)?) {
                    return Ok(Step::Goto(3));
                }
                if adj(last, f.y(1)?) || adj(last, f.y(2)?) {
                    return Ok(Step::Goto(8));
                }
                let (x1, y1, x2, y2, x4) = (f.x(1)?, f.y(1)?, f.x(2)?, f.y(2)?, f.x(4)?);
                if s == 1 {
                    return done(Set(vec![x1, y1, x2, y2, f.y(3)?, x4, a1]));
                }
                done(Set(vec![x1, y1, x2, y2, x4, a1, f.a(2)]))
            }
            10 => done(Odd(f.y(2)?)),
            11 => {
                let x3 = f.x(3)?;
                if !adj(a1, x3) && !adj(last, x3) {
                    return done(Odd(x3));
                }
                Ok(Step::Goto(10))
            }
            12 => {
                let (x1, y1, x2, y2, x4) = (f.x(1)?, f.y(1)?, f.x(2)?, f.y(2)?, f.x(4)?);
                if adj(last, x2) {
                    return Ok(Step::Goto(11));
                }
                if !adj(a1, x2) {
                    return done(Odd(x2));
                }
                if adj(last, x1) {
                    return Ok(Step::Goto(11));
                }
                if s == 2 {
                    if adj(a1, x4) {
                        return done(Set(vec![x1, x2, y1, y2, x4, a1, f.a(2)]));
                    }
                    return done(Set(vec![a1, x2, y2, x4, y1, x1]));
                }
                done(Set(vec![x1, y1, x2, y2, a1, f.a(2), f.a(3)]))
            }
            13 => {
                if !adj(a1, f.x(1)?) && !adj(a1, f.x(2)?) {
                    return done(Set(vec![f.x(1)?, f.y(1)?, f.x(2)?, f.y(2)?, f.x(3)?, f.y(3)?, a1]));
                }
                Ok(Step::Goto(12))
            }
            14 | 16 => done(Odd(f.x(3)?)),
            15 => {
                let (x1, y1, x2, y2, y3) = (f.x(1)?, f.y(1)?, f.x(2)?, f.y(2)?, f.y(3)?);
                if adj(last, y2) {
                    return Ok(Step::Goto(14));
                }
                if !adj(a1, y2) {
                    return done(Odd(y2));
                }
                if adj(last, y1) {
                    return Ok(Step::Goto(14));
                }
                if s == 2 {
                    if adj(a1, y3) {
                        return done(Set(vec![x1, y1, x2, y2, y3, a1, f.a(2)]));
                    }
                    return done(Set(vec![x1, y1, x2, y2, y3, a1]));
                }
                done(Set(vec![x1, y1, x2, y2, a1, f.a(2), f.a(3)]))
            }
            17 => {
                let (y1, y2) = (f.y(1)?, f.y(2)?);
                if adj(last, y1) || adj(last, y2) {
                    return Ok(Step::Goto(15));
                }
                if adj(a1, y1) || adj(a1, y2) {
                    return Ok(Step::Goto(16));
                }
                if adj(a1, f.y(4)?) || adj(last, f.y(3)?) {
                    // The ends share a neighbour, which closes an odd cycle missing y1.
                    return done(Odd(y1));
                }
                done(Set(vec![f.x(1)?, y1, f.x(2)?, y2, f.y(3)?, a1, f.a(2)]))
            }
            LAST_CASE => {
                let w = *f
                    .lab
                    .iter()
                    .find(|&&v| v != 0 && adj(a1, v))
                    .ok_or_else(|| Error::Certificate("path end sees nothing in J".into()))?;
                let v = *f
                    .lab
                    .iter()
                    .find(|&&v| v != 0 && v != w && !adj(v, w))
                    .ok_or_else(|| Error::Certificate("J has no vertex apart from w".into()))?;
                done(Odd(v))
            }
            _ => Err(Error::Certificate(format!("unknown case {case}"))),
        }
    }
}
