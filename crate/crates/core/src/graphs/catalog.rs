//! Named small graphs: the minimal non-concave-round graphs and their relatives.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use sha2::{Digest, Sha256};

use super::Graph;
use crate::error::{Error, Result};

const BUILTIN: &str = include_str!("../../data/catalog.dat");

/// Environment variable naming a replacement for the built-in catalog file.
pub const CATALOG_ENV: &str = "CIRCONE_CATALOG";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CatalogName {
    Net,
    Tent,
    TentStar,
    H2,
    H3,
    H4,
    CoH2,
    CoH3,
    CoH4,
    BII1,
    BII2,
    BIII1,
    BIII2,
    BIII3,
    CoBII1,
    CoBII2,
    CoBIII1,
    CoBIII2,
    CoBIII3,
    /// `C_k`, `k ≥ 3`.
    Cycle(usize),
    /// `C_k*`, `k ≥ 4`.
    CycleStar(usize),
    /// The complement of `C_2k`, `k ≥ 3`.
    CoC2k(usize),
    /// The complement of `C_{2k+1}*`, `k ≥ 1`.
    CoC2k1Star(usize),
    Claw,
    /// `C_k` plus a vertex adjacent to all of it, `k ≥ 3`.
    Wheel(usize),
}

use CatalogName::*;

const SPORADIC: [CatalogName; 19] = [
    Net, Tent, TentStar, H2, H3, H4, CoH2, CoH3, CoH4, BII1, BII2, BIII1, BIII2, BIII3, CoBII1,
    CoBII2, CoBIII1, CoBIII2, CoBIII3,
];

impl CatalogName {
    pub fn name(&self) -> &'static str {
        match self {
            Net => "net",
            Tent => "tent",
            TentStar => "tentStar",
            H2 => "H2",
            H3 => "H3",
            H4 => "H4",
            CoH2 => "coH2",
            CoH3 => "coH3",
            CoH4 => "coH4",
            BII1 => "BII1",
            BII2 => "BII2",
            BIII1 => "BIII1",
            BIII2 => "BIII2",
            BIII3 => "BIII3",
            CoBII1 => "coBII1",
            CoBII2 => "coBII2",
            CoBIII1 => "coBIII1",
            CoBIII2 => "coBIII2",
            CoBIII3 => "coBIII3",
            Cycle(_) => "Ck",
            CycleStar(_) => "CkStar",
            CoC2k(_) => "coC2k",
            CoC2k1Star(_) => "coC2k1Star",
            Claw => "claw",
            Wheel(_) => "wheel",
        }
    }

    pub fn param(&self) -> Option<usize> {
        match *self {
            Cycle(k) | CycleStar(k) | CoC2k(k) | CoC2k1Star(k) | Wheel(k) => Some(k),
            _ => None,
        }
    }

    /// Parses a name and its parameter, e.g. `("CkStar", Some(4))`.
    pub fn parse(name: &str, k: Option<usize>) -> Result<CatalogName> {
        let bad = || Error::InvalidName(name.to_string());
        let need = |min: usize| -> Result<usize> {
            match k {
                Some(k) if k >= min => Ok(k),
                Some(k) => Err(Error::InvalidParameter(format!("{name} needs k >= {min}, got {k}"))),
                None => Err(Error::InvalidParameter(format!("{name} needs a parameter k"))),
            }
        };
        let fixed = SPORADIC.iter().chain(&[Claw]).find(|c| c.name() == name).copied();
        if let Some(c) = fixed {
            if let Some(k) = k {
                return Err(Error::InvalidParameter(format!("{name} takes no parameter, got {k}")));
            }
            return Ok(c);
        }
        Ok(match name {
            "Ck" => Cycle(need(3)?),
            "CkStar" => CycleStar(need(4)?),
            "coC2k" => CoC2k(need(3)?),
            "coC2k1Star" => CoC2k1Star(need(1)?),
            "wheel" => Wheel(need(3)?),
            _ => return Err(bad()),
        })
    }

    /// Parses `name` or `name(k)`.
    pub fn from_label(label: &str) -> Result<CatalogName> {
        match label.split_once('(') {
            Some((name, rest)) => {
                let k = rest
                    .strip_suffix(')')
                    .and_then(|x| x.parse().ok())
                    .ok_or_else(|| Error::InvalidName(label.to_string()))?;
                CatalogName::parse(name, Some(k))
            }
            None => CatalogName::parse(label, None),
        }
    }

    /// Whether this entry is one of the minimal non-concave-round graphs.
    pub fn is_minimal_obstruction(&self) -> bool {
        matches!(
            self,
            Net | TentStar
                | CoH3
                | CoBII1
                | CoBII2
                | CoBIII1
                | CoBIII2
                | CoBIII3
                | CycleStar(_)
                | CoC2k(_)
                | CoC2k1Star(_)
        )
    }
}

impl fmt::Display for CatalogName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.param() {
            Some(k) => write!(f, "{}({k})", self.name()),
            None => f.write_str(self.name()),
        }
    }
}

/// The minimal non-concave-round graphs with parametrised members instantiated up to `k_max`.
pub fn minimal_obstructions(k_max: usize) -> Vec<CatalogName> {
    let mut out = vec![Net, TentStar, CoH3, CoBII1, CoBII2, CoBIII1, CoBIII2, CoBIII3];
    out.extend((4..=k_max).map(CycleStar));
    out.extend((3..=k_max).map(CoC2k));
    out.extend((1..=k_max).map(CoC2k1Star));
    out
}

/// The sporadic base graphs, read from a checksummed data file.
#[derive(Clone, Debug)]
pub struct Catalog {
    base: BTreeMap<String, Graph>,
}

impl Catalog {
    pub fn parse(text: &str) -> Result<Catalog> {
        let (body, last) = match text.trim_end_matches('\n').rsplit_once('\n') {
            Some(x) => x,
            None => return Err(Error::parse(1, "catalog has no checksum line")),
        };
        let line_count = body.lines().count() + 1;
        let want = last
            .strip_prefix("sha256 ")
            .ok_or_else(|| Error::parse(line_count, "last line must be `sha256 <hex>`"))?;
        let got: String = Sha256::digest(format!("{body}\n").as_bytes())
            .iter()
            .map(|b| format!("{b:02x}"))
            .collect();
        if got != want.trim() {
            return Err(Error::parse(line_count, "catalog checksum mismatch"));
        }
        let mut base = BTreeMap::new();
        for (i, line) in body.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut it = line.split_whitespace();
            let name = it.next().unwrap().to_string();
            let n: usize = it
                .next()
                .and_then(|x| x.parse().ok())
                .ok_or_else(|| Error::parse(i + 1, "expected a vertex count"))?;
            let edges = it
                .map(|e| {
                    e.split_once('-')
                        .and_then(|(u, v)| Some((u.parse().ok()?, v.parse().ok()?)))
                        .ok_or_else(|| Error::parse(i + 1, format!("bad edge `{e}`")))
                })
                .collect::<Result<Vec<(usize, usize)>>>()?;
            let g = Graph::from_edges(n, &edges).map_err(|e| Error::parse(i + 1, e.to_string()))?;
            base.insert(name, g);
        }
        Ok(Catalog { base })
    }

    pub fn builtin() -> Catalog {
        Catalog::parse(BUILTIN).expect("built-in catalog is valid")
    }

    pub fn load(path: &std::path::Path) -> Result<Catalog> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidParameter(format!("{}: {e}", path.display())))?;
        Catalog::parse(&text)
    }

    fn base(&self, name: &str) -> Result<&Graph> {
        self.base
            .get(name)
            .ok_or_else(|| Error::InvalidName(format!("catalog file lacks {name}")))
    }

    pub fn graph(&self, name: CatalogName) -> Result<Graph> {
        Ok(match name {
            Net | Tent | H2 | H3 | H4 | BII1 | BII2 | BIII1 | BIII2 | BIII3 => {
                self.base(name.name())?.clone()
            }
            TentStar => self.base("tent")?.star(),
            CoH2 => self.base("H2")?.complement(),
            CoH3 => self.base("H3")?.complement(),
            CoH4 => self.base("H4")?.complement(),
            CoBII1 => self.base("BII1")?.complement(),
            CoBII2 => self.base("BII2")?.complement(),
            CoBIII1 => self.base("BIII1")?.complement(),
            CoBIII2 => self.base("BIII2")?.complement(),
            CoBIII3 => self.base("BIII3")?.complement(),
            Cycle(k) => Graph::cycle(k),
            CycleStar(k) => Graph::cycle(k).star(),
            CoC2k(k) => Graph::cycle(2 * k).complement(),
            CoC2k1Star(k) => Graph::cycle(2 * k + 1).star().complement(),
            Claw => Graph::cycle(3).star().complement(),
            Wheel(k) => Graph::cycle(k).add_universal(),
        })
    }

    /// The catalog entry isomorphic to `h`, preferring minimal obstructions, so the
    /// claw reads as `coC2k1Star(1)` and the 5-wheel as `coC2k1Star(2)`.
    pub fn identify(&self, h: &Graph) -> Option<CatalogName> {
        if let Some(c) = structural(h, true) {
            return Some(c);
        }
        let sporadic = |obstruction: bool| {
            SPORADIC
                .iter()
                .filter(|c| c.is_minimal_obstruction() == obstruction)
                .copied()
                .find(|&c| self.graph(c).is_ok_and(|g| find_isomorphism(&g, h).is_some()))
        };
        if h.n() <= 30 {
            if let Some(c) = sporadic(true) {
                return Some(c);
            }
        }
        if let Some(c) = structural(h, false) {
            return Some(c);
        }
        if h.n() <= 30 {
            return sporadic(false);
        }
        None
    }
}

/// A cycle through all of `vs` in `g`, checked by degrees and connectivity.
fn is_cycle_on(g: &Graph, vs: &[usize]) -> bool {
    if vs.len() < 3 {
        return false;
    }
    let sub = g.induced_subgraph(vs);
    (1..=sub.n()).all(|v| sub.degree(v) == 2) && sub.is_connected()
}

fn structural(h: &Graph, obstruction: bool) -> Option<CatalogName> {
    let n = h.n();
    let all: Vec<usize> = (1..=n).collect();
    let isolated: Vec<usize> = all.iter().copied().filter(|&v| h.degree(v) == 0).collect();
    let universal: Vec<usize> = all.iter().copied().filter(|&v| h.degree(v) + 1 == n).collect();
    let without = |x: usize| -> Vec<usize> { all.iter().copied().filter(|&v| v != x).collect() };
    if obstruction {
        if isolated.len() == 1 && n >= 5 && is_cycle_on(h, &without(isolated[0])) {
            return Some(CycleStar(n - 1));
        }
        let co = h.complement();
        if n >= 6 && n % 2 == 0 && is_cycle_on(&co, &all) {
            return Some(CoC2k(n / 2));
        }
        if universal.len() == 1 && n >= 4 && n % 2 == 0 && is_cycle_on(&co, &without(universal[0]))
        {
            return Some(CoC2k1Star((n - 2) / 2));
        }
        None
    } else {
        if is_cycle_on(h, &all) {
            return Some(Cycle(n));
        }
        if n >= 4 {
            for &u in &universal {
                if is_cycle_on(h, &without(u)) {
                    return Some(Wheel(n - 1));
                }
            }
        }
        None
    }
}

fn active() -> &'static std::result::Result<Catalog, String> {
    static ACTIVE: OnceLock<std::result::Result<Catalog, String>> = OnceLock::new();
    ACTIVE.get_or_init(|| match std::env::var_os(CATALOG_ENV) {
        Some(path) => Catalog::load(std::path::Path::new(&path)).map_err(|e| e.to_string()),
        None => Ok(Catalog::builtin()),
    })
}

/// The catalog in use: the file named by [`CATALOG_ENV`] if set, otherwise the built-in one.
pub fn active_catalog() -> Result<&'static Catalog> {
    active()
        .as_ref()
        .map_err(|e| Error::InvalidParameter(format!("{CATALOG_ENV}: {e}")))
}

pub fn catalog(name: CatalogName) -> Result<Graph> {
    active_catalog()?.graph(name)
}

pub fn identify_catalog(h: &Graph) -> Option<CatalogName> {
    active_catalog().ok()?.identify(h)
}

/// An isomorphism `a → b` as a vector `phi` with `phi[v - 1]` the image of `v`.
pub fn find_isomorphism(a: &Graph, b: &Graph) -> Option<Vec<usize>> {
    let n = a.n();
    if n != b.n() || a.m() != b.m() {
        return None;
    }
    let profile = |g: &Graph, v: usize| {
        let mut d: Vec<usize> = g.neighbors(v).iter().map(|&u| g.degree(u)).collect();
        d.sort_unstable();
        (g.degree(v), d)
    };
    let pa: Vec<_> = (1..=n).map(|v| profile(a, v)).collect();
    let pb: Vec<_> = (1..=n).map(|v| profile(b, v)).collect();
    let mut sa = pa.clone();
    let mut sb = pb.clone();
    sa.sort();
    sb.sort();
    if sa != sb {
        return None;
    }
    // place vertices of `a` in BFS order so that each has placed neighbours early
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n + 1];
    for s in 1..=n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        order.push(s);
        let mut head = order.len() - 1;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for &u in a.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    order.push(u);
                }
            }
        }
    }
    let mut phi = vec![0usize; n + 1];
    let mut used = vec![false; n + 1];
    fn extend(
        t: usize,
        order: &[usize],
        a: &Graph,
        b: &Graph,
        pa: &[(usize, Vec<usize>)],
        pb: &[(usize, Vec<usize>)],
        phi: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        let Some(&v) = order.get(t) else {
            return true;
        };
        for c in 1..=b.n() {
            if used[c] || pa[v - 1] != pb[c - 1] {
                continue;
            }
            let fits = order[..t].iter().all(|&u| a.has_edge(u, v) == b.has_edge(phi[u], c));
            if fits {
                phi[v] = c;
                used[c] = true;
                if extend(t + 1, order, a, b, pa, pb, phi, used) {
                    return true;
                }
                used[c] = false;
            }
        }
        false
    }
    extend(0, &order, a, b, &pa, &pb, &mut phi, &mut used).then(|| phi[1..].to_vec())
}
