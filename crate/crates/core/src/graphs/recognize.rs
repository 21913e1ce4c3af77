use std::collections::VecDeque;

use super::catalog::{identify_catalog, CatalogName};
use super::{augmented_adjacency, Graph};
use crate::circ_rows::{circ1p_test, is_circular_order};
use crate::error::{Error, Result};

/// A circular enumeration in which every closed neighbourhood is an interval.
pub fn is_concave_round(g: &Graph) -> Option<Vec<usize>> {
    if g.n() == 0 {
        return Some(Vec::new());
    }
    circ1p_test(&augmented_adjacency(g))
}

pub fn is_circular_enumeration(g: &Graph, order: &[usize]) -> bool {
    let n = g.n();
    let mut seen = vec![false; n + 1];
    if order.len() != n || order.iter().any(|&v| v == 0 || v > n || std::mem::replace(&mut seen[v], true)) {
        return false;
    }
    n == 0 || is_circular_order(&augmented_adjacency(g), order)
}

/// A shortest odd cycle, which has no chords; `None` exactly when `g` is bipartite.
pub fn chordless_odd_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    g.bipartition().is_none().then_some(())?;
    let mut best: Option<Vec<usize>> = None;
    let mut dist = vec![usize::MAX; n + 1];
    let mut parent = vec![0usize; n + 1];
    for s in 1..=n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        let limit = best.as_ref().map_or(usize::MAX, |c| c.len());
        'bfs: while let Some(v) = queue.pop_front() {
            if 2 * dist[v] + 1 >= limit {
                break;
            }
            for &u in g.neighbors(v) {
                if dist[u] == usize::MAX {
                    dist[u] = dist[v] + 1;
                    parent[u] = v;
                    queue.push_back(u);
                } else if dist[u] == dist[v] && u > v {
                    let cycle = close_cycle(v, u, &parent, &dist);
                    if best.as_ref().is_none_or(|b| cycle.len() < b.len()) {
                        best = Some(cycle);
                    }
                    break 'bfs;
                }
            }
        }
    }
    best
}

/// Joins the tree paths from `v` and `u` (same BFS depth) at their meeting point.
fn close_cycle(v: usize, u: usize, parent: &[usize], dist: &[usize]) -> Vec<usize> {
    let (mut a, mut b) = (v, u);
    let mut left = vec![a];
    let mut right = vec![b];
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    debug_assert_eq!(dist[a] + left.len() - 1, dist[v]);
    right.pop();
    right.reverse();
    left.extend(right);
    left
}

/// `cycle` lists the vertices of an odd induced cycle of `g`, in cyclic order.
pub fn is_chordless_odd_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    let n = g.n();
    let mut seen = vec![false; n + 1];
    if k < 3 || k % 2 == 0 || cycle.iter().any(|&v| v == 0 || v > n || std::mem::replace(&mut seen[v], true)) {
        return false;
    }
    (0..k).all(|i| {
        (i + 1..k).all(|j| {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            g.has_edge(cycle[i], cycle[j]) == consecutive
        })
    })
}

/// Deletes vertices in ascending order while the rest stays non-concave-round.
pub fn minimal_forbidden_by_deletion(g: &Graph) -> Result<Vec<usize>> {
    minimize_within(g, (1..=g.n()).collect())
}

pub(crate) fn minimize_within(g: &Graph, mut keep: Vec<usize>) -> Result<Vec<usize>> {
    if is_concave_round(&g.induced_subgraph(&keep)).is_some() {
        return Err(Error::Precondition("graph is concave-round".into()));
    }
    let mut i = 0;
    while i < keep.len() {
        let trial: Vec<usize> = keep.iter().copied().enumerate().filter(|&(j, _)| j != i).map(|(_, v)| v).collect();
        if is_concave_round(&g.induced_subgraph(&trial)).is_none() {
            keep = trial;
        } else {
            i += 1;
        }
    }
    Ok(keep)
}

/// Evidence for or against a graph being concave-round.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphCertificate {
    CircularEnumeration(Vec<usize>),
    /// `vertices` induces a graph isomorphic to the entry `name`.
    ForbiddenInduced { name: CatalogName, vertices: Vec<usize> },
    /// A chordless odd cycle of the complement.
    OddCycleInComplement(Vec<usize>),
}

impl GraphCertificate {
    pub(crate) fn forbidden(g: &Graph, mut vertices: Vec<usize>) -> Result<GraphCertificate> {
        vertices.sort_unstable();
        let name = identify_catalog(&g.induced_subgraph(&vertices)).ok_or_else(|| {
            Error::Certificate(format!("vertices {vertices:?} induce no catalog graph"))
        })?;
        Ok(GraphCertificate::ForbiddenInduced { name, vertices })
    }

    pub fn is_negative(&self) -> bool {
        !matches!(self, GraphCertificate::CircularEnumeration(_))
    }

    pub fn verify(&self, g: &Graph) -> bool {
        match self {
            GraphCertificate::CircularEnumeration(order) => is_circular_enumeration(g, order),
            GraphCertificate::ForbiddenInduced { name, vertices } => {
                let n = g.n();
                let mut seen = vec![false; n + 1];
                if vertices.iter().any(|&v| v == 0 || v > n || std::mem::replace(&mut seen[v], true)) {
                    return false;
                }
                identify_catalog(&g.induced_subgraph(vertices)) == Some(*name)
            }
            GraphCertificate::OddCycleInComplement(cycle) => {
                is_chordless_odd_cycle(&g.complement(), cycle)
            }
        }
    }
}

/// A certificate either way.
pub fn certify_concave_round(g: &Graph) -> Result<GraphCertificate> {
    match is_concave_round(g) {
        Some(order) => Ok(GraphCertificate::CircularEnumeration(order)),
        None => super::find_forbidden_concave_round(g),
    }
}
