//! Certificates as JSON documents, and checking them against an instance.

use serde::{Deserialize, Serialize};

use crate::bracelet::BinarySequence;
use crate::c1p::{c1p_test, find_tucker_submatrix, is_consecutive_order, TuckerFamily, TuckerWitness};
use crate::circ_rc::{
    find_forbrowcol, verify_forbrowcol, ForbRowColCertificate, ForbRowColMember,
};
use crate::circ_rows::{circ1p_test, find_forbrow, is_circular_order, verify_forbrow, ForbRowCertificate, ForbRowMember};
use crate::error::{Error, Result};
use crate::graphs::{certify_concave_round, CatalogName, Graph, GraphCertificate};
use crate::matrix::{BinaryMatrix, Embedding, IndexMap};

/// A certificate for one of the four properties, as exchanged in JSON.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "property")]
pub enum Certificate {
    #[serde(rename = "c1p")]
    C1p(C1pVerdict),
    #[serde(rename = "circ1-rows")]
    Circ1Rows(Circ1RowsVerdict),
    #[serde(rename = "circ1-rows-cols")]
    Circ1RowsCols(Circ1RowsColsVerdict),
    #[serde(rename = "concave-round")]
    ConcaveRound(ConcaveRoundVerdict),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "lowercase", deny_unknown_fields)]
pub enum C1pVerdict {
    Yes { col_order: Vec<usize> },
    No { member: TuckerJson, row_map: Vec<usize>, col_map: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", deny_unknown_fields)]
pub enum TuckerJson {
    #[serde(rename = "MI")]
    MI { k: usize },
    #[serde(rename = "MII")]
    MII { k: usize },
    #[serde(rename = "MIII")]
    MIII { k: usize },
    #[serde(rename = "MIV")]
    MIV,
    #[serde(rename = "MV")]
    MV,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "lowercase", deny_unknown_fields)]
pub enum Circ1RowsVerdict {
    Yes { circular_col_order: Vec<usize> },
    No { member: RowMemberJson, row_map: Vec<usize>, col_map: Vec<usize>, c: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", deny_unknown_fields)]
pub enum RowMemberJson {
    #[serde(rename = "MI*")]
    MIStar { k: usize, mask: String },
    #[serde(rename = "MIV")]
    MIV,
    #[serde(rename = "coMIV")]
    CoMIV,
    #[serde(rename = "MV*")]
    MVStar,
    #[serde(rename = "coMV*")]
    CoMVStar,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "lowercase", deny_unknown_fields)]
pub enum Circ1RowsColsVerdict {
    Yes { circular_col_order: Vec<usize>, circular_row_order: Vec<usize> },
    No { member: RowColMemberJson, transposed: bool, row_map: Vec<usize>, col_map: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", deny_unknown_fields)]
pub enum RowColMemberJson {
    #[serde(rename = "MI*")]
    MIStar { k: usize },
    #[serde(rename = "coMI*")]
    CoMIStar { k: usize },
    #[serde(rename = "masked")]
    Masked { mask: String },
    #[serde(rename = "MV*")]
    MVStar,
    #[serde(rename = "coMV*")]
    CoMVStar,
    #[serde(rename = "MI*3T")]
    MIStar3T,
    #[serde(rename = "coMI*3T")]
    CoMIStar3T,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum ConcaveRoundVerdict {
    #[serde(rename = "yes")]
    Yes { circular_order: Vec<usize> },
    #[serde(rename = "no")]
    No(ConcaveRoundEvidence),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", deny_unknown_fields)]
pub enum ConcaveRoundEvidence {
    #[serde(rename = "forbidden-induced")]
    ForbiddenInduced { name: String, params: Params, vertices: Vec<usize> },
    #[serde(rename = "odd-cycle-complement")]
    OddCycleComplement { cycle: Vec<usize> },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Params {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
}

/// What a certificate is checked against.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instance {
    Matrix(BinaryMatrix),
    Graph(Graph),
}

fn embedding(row_map: &[usize], col_map: &[usize]) -> Result<Embedding> {
    Ok(Embedding::new(IndexMap::new(row_map.to_vec())?, IndexMap::new(col_map.to_vec())?))
}

fn maps(e: &Embedding) -> (Vec<usize>, Vec<usize>) {
    (e.row_map.targets().to_vec(), e.col_map.targets().to_vec())
}

impl From<TuckerFamily> for TuckerJson {
    fn from(f: TuckerFamily) -> Self {
        match f {
            TuckerFamily::MI(k) => TuckerJson::MI { k },
            TuckerFamily::MII(k) => TuckerJson::MII { k },
            TuckerFamily::MIII(k) => TuckerJson::MIII { k },
            TuckerFamily::MIV => TuckerJson::MIV,
            TuckerFamily::MV => TuckerJson::MV,
        }
    }
}

impl From<&TuckerJson> for TuckerFamily {
    fn from(t: &TuckerJson) -> Self {
        match *t {
            TuckerJson::MI { k } => TuckerFamily::MI(k),
            TuckerJson::MII { k } => TuckerFamily::MII(k),
            TuckerJson::MIII { k } => TuckerFamily::MIII(k),
            TuckerJson::MIV => TuckerFamily::MIV,
            TuckerJson::MV => TuckerFamily::MV,
        }
    }
}

impl From<&ForbRowMember> for RowMemberJson {
    fn from(m: &ForbRowMember) -> Self {
        match m {
            ForbRowMember::MIStar { k, a } => RowMemberJson::MIStar { k: *k, mask: a.to_string() },
            ForbRowMember::MIV => RowMemberJson::MIV,
            ForbRowMember::CoMIV => RowMemberJson::CoMIV,
            ForbRowMember::MVStar => RowMemberJson::MVStar,
            ForbRowMember::CoMVStar => RowMemberJson::CoMVStar,
        }
    }
}

impl RowMemberJson {
    pub fn to_member(&self) -> Result<ForbRowMember> {
        Ok(match self {
            RowMemberJson::MIStar { k, mask } => {
                let a = BinarySequence::parse(mask)?;
                let m = ForbRowMember::MIStar { k: *k, a };
                if !m.is_well_formed() {
                    return Err(Error::InvalidMember(format!("{m} is not in ForbRow")));
                }
                m
            }
            RowMemberJson::MIV => ForbRowMember::MIV,
            RowMemberJson::CoMIV => ForbRowMember::CoMIV,
            RowMemberJson::MVStar => ForbRowMember::MVStar,
            RowMemberJson::CoMVStar => ForbRowMember::CoMVStar,
        })
    }
}

impl From<&ForbRowColMember> for RowColMemberJson {
    fn from(m: &ForbRowColMember) -> Self {
        match m {
            ForbRowColMember::MIStar(k) => RowColMemberJson::MIStar { k: *k },
            ForbRowColMember::CoMIStar(k) => RowColMemberJson::CoMIStar { k: *k },
            ForbRowColMember::Masked(a) => RowColMemberJson::Masked { mask: a.to_string() },
            ForbRowColMember::MVStar => RowColMemberJson::MVStar,
            ForbRowColMember::CoMVStar => RowColMemberJson::CoMVStar,
            ForbRowColMember::MIStar3T => RowColMemberJson::MIStar3T,
            ForbRowColMember::CoMIStar3T => RowColMemberJson::CoMIStar3T,
        }
    }
}

impl RowColMemberJson {
    pub fn to_member(&self) -> Result<ForbRowColMember> {
        let m = match self {
            RowColMemberJson::MIStar { k } => ForbRowColMember::MIStar(*k),
            RowColMemberJson::CoMIStar { k } => ForbRowColMember::CoMIStar(*k),
            RowColMemberJson::Masked { mask } => ForbRowColMember::Masked(BinarySequence::parse(mask)?),
            RowColMemberJson::MVStar => ForbRowColMember::MVStar,
            RowColMemberJson::CoMVStar => ForbRowColMember::CoMVStar,
            RowColMemberJson::MIStar3T => ForbRowColMember::MIStar3T,
            RowColMemberJson::CoMIStar3T => ForbRowColMember::CoMIStar3T,
        };
        if !m.is_well_formed() {
            return Err(Error::InvalidMember(format!("{m} is not in ForbRowCol")));
        }
        Ok(m)
    }
}

impl From<&TuckerWitness> for Certificate {
    fn from(w: &TuckerWitness) -> Self {
        let (row_map, col_map) = maps(&w.embedding);
        Certificate::C1p(C1pVerdict::No { member: w.family.into(), row_map, col_map })
    }
}

impl From<&ForbRowCertificate> for Certificate {
    fn from(c: &ForbRowCertificate) -> Self {
        let (row_map, col_map) = maps(&c.embedding);
        Certificate::Circ1Rows(Circ1RowsVerdict::No {
            member: (&c.member).into(),
            row_map,
            col_map,
            c: c.c.to_string(),
        })
    }
}

impl From<&ForbRowColCertificate> for Certificate {
    fn from(c: &ForbRowColCertificate) -> Self {
        let (row_map, col_map) = maps(&c.embedding);
        Certificate::Circ1RowsCols(Circ1RowsColsVerdict::No {
            member: (&c.member).into(),
            transposed: c.transposed,
            row_map,
            col_map,
        })
    }
}

impl From<&GraphCertificate> for Certificate {
    fn from(c: &GraphCertificate) -> Self {
        Certificate::ConcaveRound(match c {
            GraphCertificate::CircularEnumeration(order) => {
                ConcaveRoundVerdict::Yes { circular_order: order.clone() }
            }
            GraphCertificate::ForbiddenInduced { name, vertices } => {
                ConcaveRoundVerdict::No(ConcaveRoundEvidence::ForbiddenInduced {
                    name: name.name().to_string(),
                    params: Params { k: name.param() },
                    vertices: vertices.clone(),
                })
            }
            GraphCertificate::OddCycleInComplement(cycle) => {
                ConcaveRoundVerdict::No(ConcaveRoundEvidence::OddCycleComplement { cycle: cycle.clone() })
            }
        })
    }
}

impl Certificate {
    pub fn property(&self) -> &'static str {
        match self {
            Certificate::C1p(_) => "c1p",
            Certificate::Circ1Rows(_) => "circ1-rows",
            Certificate::Circ1RowsCols(_) => "circ1-rows-cols",
            Certificate::ConcaveRound(_) => "concave-round",
        }
    }

    /// Whether the certificate asserts that the property holds.
    pub fn holds(&self) -> bool {
        matches!(
            self,
            Certificate::C1p(C1pVerdict::Yes { .. })
                | Certificate::Circ1Rows(Circ1RowsVerdict::Yes { .. })
                | Certificate::Circ1RowsCols(Circ1RowsColsVerdict::Yes { .. })
                | Certificate::ConcaveRound(ConcaveRoundVerdict::Yes { .. })
        )
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificates always serialize")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificates always serialize")
    }

    pub fn from_json(text: &str) -> Result<Certificate> {
        serde_json::from_str(text).map_err(|e| Error::parse(e.line(), e.to_string()))
    }

    /// The graph certificate this document describes, for concave-round documents.
    pub fn to_graph_certificate(&self) -> Result<GraphCertificate> {
        let Certificate::ConcaveRound(v) = self else {
            return Err(Error::Certificate(format!("{} certificate is not about graphs", self.property())));
        };
        Ok(match v {
            ConcaveRoundVerdict::Yes { circular_order } => {
                GraphCertificate::CircularEnumeration(circular_order.clone())
            }
            ConcaveRoundVerdict::No(ConcaveRoundEvidence::ForbiddenInduced { name, params, vertices }) => {
                GraphCertificate::ForbiddenInduced {
                    name: CatalogName::parse(name, params.k)?,
                    vertices: vertices.clone(),
                }
            }
            ConcaveRoundVerdict::No(ConcaveRoundEvidence::OddCycleComplement { cycle }) => {
                GraphCertificate::OddCycleInComplement(cycle.clone())
            }
        })
    }

    /// Re-checks the certificate against `inst` from scratch.
    pub fn verify(&self, inst: &Instance) -> bool {
        self.check(inst).unwrap_or(false)
    }

    fn check(&self, inst: &Instance) -> Result<bool> {
        let mismatch = || Error::Certificate("certificate and instance kinds differ".into());
        match (self, inst) {
            (Certificate::ConcaveRound(_), Instance::Graph(g)) => {
                Ok(self.to_graph_certificate()?.verify(g))
            }
            (Certificate::ConcaveRound(_), _) | (_, Instance::Graph(_)) => Err(mismatch()),
            (Certificate::C1p(v), Instance::Matrix(m)) => Ok(match v {
                C1pVerdict::Yes { col_order } => is_consecutive_order(m, col_order),
                C1pVerdict::No { member, row_map, col_map } => TuckerWitness {
                    family: member.into(),
                    embedding: embedding(row_map, col_map)?,
                }
                .verify(m),
            }),
            (Certificate::Circ1Rows(v), Instance::Matrix(m)) => Ok(match v {
                Circ1RowsVerdict::Yes { circular_col_order } => is_circular_order(m, circular_col_order),
                Circ1RowsVerdict::No { member, row_map, col_map, c } => verify_forbrow(
                    m,
                    &ForbRowCertificate {
                        member: member.to_member()?,
                        embedding: embedding(row_map, col_map)?,
                        c: BinarySequence::parse(c)?,
                    },
                ),
            }),
            (Certificate::Circ1RowsCols(v), Instance::Matrix(m)) => Ok(match v {
                Circ1RowsColsVerdict::Yes { circular_col_order, circular_row_order } => {
                    is_circular_order(m, circular_col_order)
                        && is_circular_order(&m.transpose(), circular_row_order)
                }
                Circ1RowsColsVerdict::No { member, transposed, row_map, col_map } => verify_forbrowcol(
                    m,
                    &ForbRowColCertificate {
                        member: member.to_member()?,
                        transposed: *transposed,
                        embedding: embedding(row_map, col_map)?,
                    },
                ),
            }),
        }
    }
}

/// Consecutive-ones order, or a Tucker matrix.
pub fn certify_c1p(m: &BinaryMatrix) -> Result<Certificate> {
    match c1p_test(m) {
        Some(col_order) => Ok(Certificate::C1p(C1pVerdict::Yes { col_order })),
        None => Ok((&find_tucker_submatrix(m)?).into()),
    }
}

/// Circular-ones order for rows, or a member of `ForbRow`.
pub fn certify_circ1(m: &BinaryMatrix) -> Result<Certificate> {
    match circ1p_test(m) {
        Some(circular_col_order) => Ok(Certificate::Circ1Rows(Circ1RowsVerdict::Yes { circular_col_order })),
        None => Ok((&find_forbrow(m)?).into()),
    }
}

/// Circular orders for both rows and columns, or a member of `ForbRowCol` or its
/// transpose.
pub fn certify_circ1rc(m: &BinaryMatrix) -> Result<Certificate> {
    match (circ1p_test(m), circ1p_test(&m.transpose())) {
        (Some(circular_col_order), Some(circular_row_order)) => {
            Ok(Certificate::Circ1RowsCols(Circ1RowsColsVerdict::Yes { circular_col_order, circular_row_order }))
        }
        _ => Ok((&find_forbrowcol(m)?).into()),
    }
}

/// Circular enumeration, or a minimal forbidden induced subgraph.
pub fn certify_graph(g: &Graph) -> Result<Certificate> {
    Ok((&certify_concave_round(g)?).into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circ_rows::mi_star;

    #[test]
    fn schemas() {
        let m = mi_star(3).unwrap();
        let c = certify_circ1(&m).unwrap();
        let mut v = serde_json::to_value(&c).unwrap();
        let obj = v.as_object_mut().unwrap();
        assert_eq!(obj.remove("row_map").unwrap().as_array().unwrap().len(), 3);
        assert_eq!(obj.remove("col_map").unwrap().as_array().unwrap().len(), 4);
        assert_eq!(
            v,
            serde_json::json!({
                "property": "circ1-rows", "verdict": "no",
                "member": {"kind": "MI*", "k": 3, "mask": "000"}, "c": "000"
            })
        );
        assert!(c.verify(&Instance::Matrix(m.clone())));
        let rc = certify_circ1rc(&m).unwrap();
        let v = serde_json::to_value(&rc).unwrap();
        assert_eq!(v["property"], "circ1-rows-cols");
        assert_eq!(v["member"]["kind"], "MI*");
        assert_eq!(v["transposed"], false);
        assert!(rc.verify(&Instance::Matrix(m.clone())));
        let t = certify_circ1rc(&m.transpose()).unwrap();
        assert_eq!(serde_json::to_value(&t).unwrap()["transposed"], true);

        let g = Graph::cycle(6).complement();
        let gc = certify_graph(&g).unwrap();
        assert_eq!(
            serde_json::to_value(&gc).unwrap(),
            serde_json::json!({
                "property": "concave-round", "verdict": "no", "kind": "forbidden-induced",
                "name": "coC2k", "params": {"k": 3}, "vertices": [1, 2, 3, 4, 5, 6]
            })
        );
        let yes = certify_graph(&Graph::cycle(5)).unwrap();
        let v = serde_json::to_value(&yes).unwrap();
        assert_eq!(v["verdict"], "yes");
        assert!(v["circular_order"].is_array());
        let odd = Certificate::from(&GraphCertificate::OddCycleInComplement(vec![1, 3, 5]));
        assert_eq!(serde_json::to_value(&odd).unwrap()["kind"], "odd-cycle-complement");
    }

    #[test]
    fn json_round_trip_and_rejections() {
        let m = BinaryMatrix::from_strs(&["110", "011", "101"]).unwrap();
        for c in [certify_c1p(&m).unwrap(), certify_circ1(&m).unwrap(), certify_circ1rc(&m).unwrap()] {
            let back = Certificate::from_json(&c.to_json()).unwrap();
            assert_eq!(back, c);
            assert!(back.verify(&Instance::Matrix(m.clone())));
            assert!(!back.verify(&Instance::Graph(Graph::cycle(3))));
        }
        assert!(Certificate::from_json(r#"{"property":"c1p","verdict":"no"}"#).is_err());
        assert!(Certificate::from_json(r#"{"property":"c1p","verdict":"yes","col_order":[1],"x":1}"#).is_err());
        assert!(Certificate::from_json(r#"{"property":"concave-round","verdict":"no","kind":"forbidden-induced","name":"net","params":{},"vertices":[1,2,3,4,5,6]}"#).is_ok());
    }

    #[test]
    fn wrong_certificates_fail() {
        let m = mi_star(4).unwrap();
        let good = certify_circ1(&m).unwrap();
        let Certificate::Circ1Rows(Circ1RowsVerdict::No { member, row_map, col_map, c }) = good.clone() else {
            panic!()
        };
        let inst = Instance::Matrix(m.clone());
        let bad = [
            Circ1RowsVerdict::No { member: RowMemberJson::MIStar { k: 4, mask: "0011".into() }, row_map: row_map.clone(), col_map: col_map.clone(), c: c.clone() },
            Circ1RowsVerdict::No { member: member.clone(), row_map: vec![2, 1, 3, 4], col_map: col_map.clone(), c: c.clone() },
            Circ1RowsVerdict::No { member: member.clone(), row_map: row_map.clone(), col_map: col_map.clone(), c: "0001".into() },
            Circ1RowsVerdict::No { member, row_map, col_map: vec![1, 2, 3, 9, 5], c },
            Circ1RowsVerdict::Yes { circular_col_order: vec![1, 2, 3, 4, 5] },
        ];
        assert!(good.verify(&inst));
        for b in bad {
            assert!(!Certificate::Circ1Rows(b).verify(&inst));
        }
    }
}
