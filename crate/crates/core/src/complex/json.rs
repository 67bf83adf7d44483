//! JSON form of a complex, for debugging and golden files.
//!
//! ```json
//! {
//!   "orientation": "cohomological",
//!   "min_deg": 0,
//!   "max_deg": 1,
//!   "basis": [["a"], ["b"]],
//!   "differentials": [ { "degree": 0, "rows": 1, "cols": 1, "entries": [[2]] } ]
//! }
//! ```
//!
//! Entries that do not fit in an `i64` are written as decimal strings.
//! Differentials left out of the document are zero.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{Basis, BoundedComplex, Orientation};
use crate::algebra::IntegerMatrix;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexDocument {
    pub orientation: OrientationName,
    pub min_deg: i64,
    pub max_deg: i64,
    pub basis: Vec<Vec<String>>,
    pub differentials: Vec<MatrixDocument>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrientationName {
    Homological,
    Cohomological,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixDocument {
    pub degree: i64,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<Entry>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Small(i64),
    Big(String),
}

impl Entry {
    fn from_bigint(x: &BigInt) -> Self {
        match i64::try_from(x) {
            Ok(v) => Entry::Small(v),
            Err(_) => Entry::Big(x.to_string()),
        }
    }

    fn to_bigint(&self) -> Result<BigInt> {
        match self {
            Entry::Small(v) => Ok(BigInt::from(*v)),
            Entry::Big(s) => s
                .parse()
                .map_err(|_| Error::Json(format!("not an integer: {s:?}"))),
        }
    }
}

impl BoundedComplex {
    pub fn to_document(&self) -> ComplexDocument {
        ComplexDocument {
            orientation: match self.orientation {
                Orientation::Homological => OrientationName::Homological,
                Orientation::Cohomological => OrientationName::Cohomological,
            },
            min_deg: self.min_deg,
            max_deg: self.max_deg(),
            basis: self.basis.iter().map(Basis::labels).collect(),
            differentials: self
                .degrees()
                .filter_map(|d| {
                    let m = &self.differentials[self.idx(d)];
                    (!m.is_empty()).then(|| MatrixDocument {
                        degree: d,
                        rows: m.rows(),
                        cols: m.cols(),
                        entries: m
                            .to_dense()
                            .iter()
                            .map(|r| r.iter().map(Entry::from_bigint).collect())
                            .collect(),
                    })
                })
                .collect(),
        }
    }

    pub fn from_document(doc: &ComplexDocument) -> Result<BoundedComplex> {
        let orientation = match doc.orientation {
            OrientationName::Homological => Orientation::Homological,
            OrientationName::Cohomological => Orientation::Cohomological,
        };
        let n = doc.max_deg - doc.min_deg + 1;
        if n < 0 || doc.basis.len() as i64 != n {
            return Err(Error::Json(format!(
                "basis has {} degrees, range [{}, {}] needs {}",
                doc.basis.len(),
                doc.min_deg,
                doc.max_deg,
                n.max(0)
            )));
        }
        let dim = |d: i64| -> usize {
            if d < doc.min_deg || d > doc.max_deg {
                0
            } else {
                doc.basis[(d - doc.min_deg) as usize].len()
            }
        };
        let step = orientation.step();
        let mut diffs: Vec<IntegerMatrix> = (doc.min_deg..=doc.max_deg)
            .map(|d| IntegerMatrix::zeros(dim(d + step), dim(d)))
            .collect();
        for m in &doc.differentials {
            if m.degree < doc.min_deg || m.degree > doc.max_deg {
                return Err(Error::Json(format!("differential at degree {} out of range", m.degree)));
            }
            let entries = m
                .entries
                .iter()
                .map(|r| r.iter().map(Entry::to_bigint).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            let mat = IntegerMatrix::from_dense(m.rows, m.cols, &entries)
                .map_err(|e| Error::Json(e.to_string()))?;
            diffs[(m.degree - doc.min_deg) as usize] = mat;
        }
        let basis = doc.basis.iter().cloned().map(Basis::Labeled).collect();
        BoundedComplex::new(orientation, doc.min_deg, basis, diffs)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_document()).expect("complex documents always serialize")
    }

    pub fn from_json(text: &str) -> Result<BoundedComplex> {
        let doc: ComplexDocument = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
        Self::from_document(&doc)
    }
}
