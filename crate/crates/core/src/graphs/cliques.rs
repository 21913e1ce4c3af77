use super::Graph;
use crate::circ_rows::circ1p_test;
use crate::error::{Error, Result};
use crate::matrix::BinaryMatrix;

/// Refuses graphs with more maximal cliques than this.
pub const MAX_CLIQUES: usize = 100_000;

/// All maximal cliques as sorted vertex lists, in lexicographic order.
pub fn maximal_cliques(g: &Graph) -> Result<Vec<Vec<usize>>> {
    let n = g.n();
    let mut out = Vec::new();
    let mut r = Vec::new();
    bron_kerbosch(g, &mut r, (1..=n).collect(), Vec::new(), &mut out)?;
    for c in out.iter_mut() {
        c.sort_unstable();
    }
    out.sort();
    Ok(out)
}

fn bron_kerbosch(
    g: &Graph,
    r: &mut Vec<usize>,
    p: Vec<usize>,
    x: Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) -> Result<()> {
    if p.is_empty() {
        if x.is_empty() && !r.is_empty() {
            if out.len() == MAX_CLIQUES {
                return Err(Error::TooLarge(format!("more than {MAX_CLIQUES} maximal cliques")));
            }
            out.push(r.clone());
        }
        return Ok(());
    }
    let pivot = p
        .iter()
        .chain(&x)
        .copied()
        .max_by_key(|&u| p.iter().filter(|&&v| g.has_edge(u, v)).count())
        .unwrap();
    let candidates: Vec<usize> = p.iter().copied().filter(|&v| !g.has_edge(pivot, v)).collect();
    let mut p = p;
    let mut x = x;
    for v in candidates {
        r.push(v);
        let np = p.iter().copied().filter(|&u| g.has_edge(v, u)).collect();
        let nx = x.iter().copied().filter(|&u| g.has_edge(v, u)).collect();
        bron_kerbosch(g, r, np, nx, out)?;
        r.pop();
        p.retain(|&u| u != v);
        x.push(v);
    }
    Ok(())
}

/// `Q(G)`: maximal cliques against vertices.
pub fn clique_matrix(g: &Graph) -> Result<BinaryMatrix> {
    BinaryMatrix::from_rows(g.n(), maximal_cliques(g)?)
}

/// Whether `Q(G)` has the circular-ones property for rows.
pub fn is_proper_helly_ca(g: &Graph) -> Result<bool> {
    Ok(circ1p_test(&clique_matrix(g)?).is_some())
}
