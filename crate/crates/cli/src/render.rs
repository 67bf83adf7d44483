//! Output documents and their text, JSON and CSV renderings.

use serde::{Deserialize, Serialize};

use polyext_core::{FgAbGroup, GradedAbGroup, Truncation};

/// One nonzero degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeEntry {
    pub i: i64,
    pub rank: usize,
    pub torsion: Vec<u64>,
}

/// What was asked for. Fields that do not apply to a command are omitted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct QueryDocument {
    pub command: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coefficients: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_degree: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rational: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub method: Option<String>,
}

/// A graded answer with its provenance. `grading` is `"ext"` for Ext
/// queries and `"cohomology"` for group cohomology.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedDocument {
    pub query: QueryDocument,
    pub grading: String,
    pub degrees: Vec<DegreeEntry>,
    pub truncated_above: Option<i64>,
    pub periodicity: Option<String>,
    pub method: String,
    pub warnings: Vec<String>,
}

pub fn degree_entries(g: &GradedAbGroup) -> Vec<DegreeEntry> {
    g.iter()
        .map(|(i, c)| DegreeEntry {
            i,
            rank: c.rank(),
            torsion: c
                .torsion()
                .iter()
                .map(|t| u64::try_from(t).expect("torsion orders fit in 64 bits"))
                .collect(),
        })
        .collect()
}

/// Inverse of [`degree_entries`] plus the truncation marker.
pub fn graded_from_entries(entries: &[DegreeEntry], truncated_above: Option<i64>) -> GradedAbGroup {
    let g = GradedAbGroup::from_components(
        entries
            .iter()
            .map(|e| (e.i, FgAbGroup::new(e.rank, e.torsion.iter().copied()))),
    );
    match truncated_above {
        Some(d) => g.with_truncation(Truncation::TruncatedAbove(d)),
        None => g,
    }
}

impl GradedDocument {
    pub fn value(&self) -> GradedAbGroup {
        graded_from_entries(&self.degrees, self.truncated_above)
    }
}

/// `Z^r ⊕ Z/d_1 ⊕ …`, or the primary decomposition.
pub fn group_text(g: &FgAbGroup, primary: bool, rational: bool) -> String {
    let base = if rational { "Q" } else { "Z" };
    let mut parts = Vec::new();
    match g.rank() {
        0 => {}
        1 => parts.push(base.to_string()),
        r => parts.push(format!("{base}^{r}")),
    }
    if primary {
        if !g.torsion().is_empty() {
            parts.push(FgAbGroup::new(0, g.torsion().iter().cloned()).display_primary());
        }
    } else {
        parts.extend(g.torsion().iter().map(|d| format!("Z/{d}")));
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" ⊕ ")
    }
}

/// Degree lines in ascending order, trivial degrees omitted.
pub fn graded_text(label: &str, g: &GradedAbGroup, primary: bool, rational: bool) -> Vec<String> {
    let mut lines: Vec<String> = g
        .iter()
        .map(|(i, c)| format!("  {label}^{i} = {}", group_text(c, primary, rational)))
        .collect();
    if lines.is_empty() {
        lines.push("  0 in every degree".into());
    }
    lines
}

/// `i,rank,torsion` rows, torsion orders separated by spaces.
pub fn graded_csv(g: &GradedAbGroup) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["i", "rank", "torsion"]).expect("in-memory write");
    for e in degree_entries(g) {
        let torsion: Vec<String> = e.torsion.iter().map(ToString::to_string).collect();
        w.write_record([e.i.to_string(), e.rank.to_string(), torsion.join(" ")])
            .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv output is UTF-8")
}
