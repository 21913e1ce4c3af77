use super::catalog::{identify_catalog, CatalogName};
use super::extract::extract_from_h2_h4;
use super::recognize::{chordless_odd_cycle, minimal_forbidden_by_deletion, minimize_within, GraphCertificate};
use super::{augmented_adjacency, Graph};
use crate::circ_rc::{find_forbrowcol_rows, ForbRowColMember};
use crate::error::{Error, Result};

/// A minimal non-concave-round induced subgraph of `g`, or a chordless odd cycle of
/// its complement.
pub fn forbidden_or_complement_cycle(g: &Graph) -> Result<GraphCertificate> {
    let cert = match find_forbrowcol_rows(&augmented_adjacency(g)) {
        Err(Error::Precondition(_)) => {
            return Err(Error::Precondition("graph is concave-round".into()))
        }
        other => other?,
    };
    let xs = cert.embedding.row_map.targets();
    let ys = cert.embedding.col_map.targets();
    let k = xs.len();
    if k <= 6 {
        let mut set: Vec<usize> = xs.iter().chain(ys).copied().collect();
        set.sort_unstable();
        set.dedup();
        return GraphCertificate::forbidden(g, minimize_within(g, set)?);
    }
    let (mut set, half): (Vec<usize>, usize) = match cert.member {
        ForbRowColMember::MIStar(_) => (vec![xs[0], xs[1], xs[3], ys[0], ys[2], ys[3]], 3),
        ForbRowColMember::CoMIStar(_) => (xs.iter().chain(&ys[..k]).copied().collect(), k),
        other => {
            return Err(Error::Certificate(format!("unexpected {other} with {k} rows")));
        }
    };
    set.sort_unstable();
    set.dedup();
    let co = g.induced_subgraph(&set).complement();
    match chordless_odd_cycle(&co) {
        None => match GraphCertificate::forbidden(g, set)? {
            found @ GraphCertificate::ForbiddenInduced { name: CatalogName::CoC2k(j), .. } if j == half => {
                Ok(found)
            }
            other => Err(Error::Certificate(format!("expected coC2k({half}), got {other:?}"))),
        },
        Some(c) => Ok(GraphCertificate::OddCycleInComplement(
            c.into_iter().map(|v| set[v - 1]).collect(),
        )),
    }
}

/// A minimal non-concave-round induced subgraph of a non-concave-round graph.
pub fn find_forbidden_concave_round(g: &Graph) -> Result<GraphCertificate> {
    find_forbidden_concave_round_with(g, &minimal_forbidden_by_deletion)
}

/// As [`find_forbidden_concave_round`], with `pca_obstruction` supplying a vertex set
/// that induces a minimal non-proper-circular-arc subgraph when the first pass only
/// yields an odd cycle of the complement.
pub fn find_forbidden_concave_round_with(
    g: &Graph,
    pca_obstruction: &dyn Fn(&Graph) -> Result<Vec<usize>>,
) -> Result<GraphCertificate> {
    let cycle = match forbidden_or_complement_cycle(g)? {
        GraphCertificate::OddCycleInComplement(c) => c,
        found => return Ok(found),
    };
    let mut f = pca_obstruction(g)?;
    f.sort_unstable();
    match identify_catalog(&g.induced_subgraph(&f)) {
        Some(CatalogName::CoH2 | CatalogName::CoH4) => {
            GraphCertificate::forbidden(g, extract_from_h2_h4(g, &f, &cycle)?)
        }
        _ => GraphCertificate::forbidden(g, f),
    }
}
