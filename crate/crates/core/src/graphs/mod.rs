//! Simple graphs, concave-round recognition and forbidden induced subgraphs.

mod catalog;
mod cliques;
mod extract;
mod pipeline;
mod recognize;

pub use catalog::{
    active_catalog, catalog, find_isomorphism, identify_catalog, minimal_obstructions, Catalog,
    CatalogName, CATALOG_ENV,
};
pub use cliques::{clique_matrix, is_proper_helly_ca, maximal_cliques, MAX_CLIQUES};
pub use extract::extract_from_h2_h4;
pub use pipeline::{
    find_forbidden_concave_round, find_forbidden_concave_round_with, forbidden_or_complement_cycle,
};
pub use recognize::{
    certify_concave_round, chordless_odd_cycle, is_chordless_odd_cycle, is_circular_enumeration,
    is_concave_round, minimal_forbidden_by_deletion, GraphCertificate,
};

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::matrix::BinaryMatrix;

/// A simple undirected graph on the vertices `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n] }
    }

    /// Rejects loops, repeated edges and endpoints outside `1..=n`.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u == v {
                return Err(Error::InvalidParameter(format!("loop at vertex {u}")));
            }
            if u == 0 || v == 0 || u > n || v > n {
                return Err(Error::InvalidParameter(format!("edge {u}-{v} outside [1, {n}]")));
            }
            g.adj[u - 1].push(v);
            g.adj[v - 1].push(u);
        }
        for (i, a) in g.adj.iter_mut().enumerate() {
            a.sort_unstable();
            if a.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidParameter(format!(
                    "repeated edge at vertex {}",
                    i + 1
                )));
            }
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        Graph {
            adj: (1..=n).map(|v| (1..=n).filter(|&u| u != v).collect()).collect(),
        }
    }

    /// `C_n` on `1 - 2 - … - n - 1`, for `n ≥ 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least three vertices");
        let edges: Vec<_> = (1..=n).map(|i| (i, i % n + 1)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v - 1]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u - 1].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for u in 1..=self.n() {
            for &v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adj = (1..=n)
            .map(|v| {
                let mut it = self.adj[v - 1].iter().peekable();
                let mut out = Vec::with_capacity(n - 1 - self.adj[v - 1].len());
                for u in 1..=n {
                    if it.peek() == Some(&&u) {
                        it.next();
                    } else if u != v {
                        out.push(u);
                    }
                }
                out
            })
            .collect();
        Graph { adj }
    }

    /// The subgraph induced by `set`; vertex `i` of the result is `set[i - 1]`.
    pub fn induced_subgraph(&self, set: &[usize]) -> Graph {
        let mut pos = vec![0usize; self.n() + 1];
        for (i, &v) in set.iter().enumerate() {
            pos[v] = i + 1;
        }
        let adj = set
            .iter()
            .map(|&v| {
                let mut a: Vec<usize> = self.adj[v - 1]
                    .iter()
                    .filter_map(|&u| (pos[u] != 0).then_some(pos[u]))
                    .collect();
                a.sort_unstable();
                a
            })
            .collect();
        Graph { adj }
    }

    /// `G*`: one extra vertex adjacent to nothing.
    pub fn star(&self) -> Graph {
        let mut adj = self.adj.clone();
        adj.push(Vec::new());
        Graph { adj }
    }

    /// One extra vertex adjacent to everything.
    pub fn add_universal(&self) -> Graph {
        let n = self.n();
        let mut adj = self.adj.clone();
        for a in adj.iter_mut() {
            a.push(n + 1);
        }
        adj.push((1..=n).collect());
        Graph { adj }
    }

    /// Disjoint union, with the vertices of `other` shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n();
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|a| a.iter().map(|&u| u + n).collect()));
        Graph { adj }
    }

    /// Relabels by `perm`: vertex `v` becomes `perm[v - 1]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut adj = vec![Vec::new(); self.n()];
        for v in 1..=self.n() {
            let mut a: Vec<usize> = self.adj[v - 1].iter().map(|&u| perm[u - 1]).collect();
            a.sort_unstable();
            adj[perm[v - 1] - 1] = a;
        }
        Graph { adj }
    }

    /// Two-colouring as 0/1 per vertex (index `v - 1`), if bipartite.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let n = self.n();
        let mut color = vec![u8::MAX; n];
        for s in 0..n {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            let mut queue = VecDeque::from([s + 1]);
            while let Some(v) = queue.pop_front() {
                for &u in self.neighbors(v) {
                    if color[u - 1] == u8::MAX {
                        color[u - 1] = 1 - color[v - 1];
                        queue.push_back(u);
                    } else if color[u - 1] == color[v - 1] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return true;
        }
        let mut seen = vec![false; self.n()];
        seen[0] = true;
        let mut stack = vec![1];
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &u in self.neighbors(v) {
                if !seen[u - 1] {
                    seen[u - 1] = true;
                    count += 1;
                    stack.push(u);
                }
            }
        }
        count == self.n()
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges())
    }
}

pub fn is_cobipartite(g: &Graph) -> bool {
    g.complement().is_bipartite()
}

pub fn complement_graph(g: &Graph) -> Graph {
    g.complement()
}

pub fn induced_subgraph(g: &Graph, set: &[usize]) -> Graph {
    g.induced_subgraph(set)
}

/// `M(G)`: the adjacency matrix with ones on the diagonal.
pub fn augmented_adjacency(g: &Graph) -> BinaryMatrix {
    let rows = (1..=g.n())
        .map(|v| {
            let mut r = g.neighbors(v).to_vec();
            r.push(v);
            r
        })
        .collect();
    BinaryMatrix::from_rows(g.n(), rows).expect("neighbour lists are in range")
}
