//! JSON reports. Every row, column and cluster number in a report is 1-based.

use std::collections::BTreeMap;

use inclust_core::encode::{decode_row, Metric};
use inclust_core::kernelize::{BoundReport, EarlyNo, KernelResult, Rule};
use inclust_core::solve::Answer;
use inclust_core::{Center, ClusteringSolution, CoverCertificate, TriVector, Variant};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::format::InstanceFile;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub instance: InstanceSummary,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub decision: Option<Answer>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cover: Option<Cover>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kernel: Option<KernelReport>,
    /// Anything the run wants a reader to know, e.g. why a YES has no witness.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    /// Milliseconds per phase.
    #[serde(default)]
    pub timings: BTreeMap<String, f64>,
}

impl Report {
    pub fn new(command: &str, instance: InstanceSummary) -> Self {
        Report {
            command: command.into(),
            instance,
            decision: None,
            witness: None,
            cover: None,
            kernel: None,
            note: None,
            timings: BTreeMap::new(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceSummary {
    pub rows: usize,
    pub dim: usize,
    pub k: usize,
    pub r: usize,
    pub variant: Variant,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metric: Option<Metric>,
    /// Whether duplicate rows were kept when the file was read; row numbers
    /// in the report refer to rows as read.
    pub keep_duplicates: bool,
    pub duplicates_dropped: usize,
}

impl InstanceSummary {
    pub fn new(file: &InstanceFile, keep_duplicates: bool, duplicates_dropped: usize) -> Self {
        let (dim, k, r, q, metric) = match file {
            InstanceFile::Boolean(i) => (i.dim(), i.k(), i.r(), None, None),
            InstanceFile::Qary(qi) => (qi.matrix.dim(), qi.k, qi.r, Some(qi.matrix.q()), Some(qi.metric)),
        };
        InstanceSummary {
            rows: file.row_count(),
            dim,
            k,
            r,
            variant: file.variant(),
            q,
            metric,
            keep_duplicates,
            duplicates_dropped,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cover {
    pub value: usize,
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

impl From<&CoverCertificate> for Cover {
    fn from(c: &CoverCertificate) -> Self {
        Cover { value: c.value(), rows: one_based(&c.rows), cols: one_based(&c.cols) }
    }
}

fn one_based(v: &[usize]) -> Vec<usize> {
    v.iter().map(|&i| i + 1).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CenterDoc {
    Row { row: usize },
    Point { point: String },
}

/// A solution in file form. For q-ary instances `completion` holds the
/// encoded Boolean rows and `decoded` the q-ary values.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub completion: Vec<String>,
    pub clusters: Vec<Vec<usize>>,
    #[serde(default)]
    pub centers: Vec<CenterDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub decoded: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error("completion row {row} is not a 0/1 string: `{text}`")]
    Row { row: usize, text: String },
    #[error("center {center} is not a 0/1 string: `{text}`")]
    Center { center: usize, text: String },
    #[error("row numbers are 1-based; found 0 in {0}")]
    ZeroIndex(&'static str),
}

impl Witness {
    pub fn from_solution(sol: &ClusteringSolution) -> Self {
        Witness {
            completion: sol.completion.iter().map(TriVector::to_string).collect(),
            clusters: sol.clusters.iter().map(|c| one_based(c)).collect(),
            centers: sol
                .centers
                .iter()
                .map(|c| match c {
                    Center::Row(i) => CenterDoc::Row { row: i + 1 },
                    Center::Point(p) => CenterDoc::Point { point: p.to_string() },
                })
                .collect(),
            decoded: None,
        }
    }

    /// Adds the q-ary reading of the completion when every block decodes.
    pub fn with_decoding(mut self, q: usize, metric: Metric) -> Self {
        let decoded: Option<Vec<String>> = self
            .completion
            .iter()
            .map(|s| {
                let v = TriVector::parse(s)?;
                let entries = decode_row(&v, q, metric.encoding()).ok()?;
                let cells: Vec<String> =
                    entries.iter().map(|e| e.map_or_else(|| "?".into(), |x| x.to_string())).collect();
                Some(cells.join(" "))
            })
            .collect();
        self.decoded = decoded;
        self
    }

    pub fn to_solution(&self) -> Result<ClusteringSolution, WitnessError> {
        let completion = self
            .completion
            .iter()
            .enumerate()
            .map(|(i, s)| TriVector::parse(s).ok_or_else(|| WitnessError::Row { row: i + 1, text: s.clone() }))
            .collect::<Result<Vec<_>, _>>()?;
        let zero_based = |v: &[usize], what| {
            v.iter().map(|&i| i.checked_sub(1).ok_or(WitnessError::ZeroIndex(what))).collect::<Result<Vec<_>, _>>()
        };
        let clusters = self.clusters.iter().map(|c| zero_based(c, "clusters")).collect::<Result<Vec<_>, _>>()?;
        let centers = self
            .centers
            .iter()
            .enumerate()
            .map(|(ci, c)| match c {
                CenterDoc::Row { row } => {
                    row.checked_sub(1).map(Center::Row).ok_or(WitnessError::ZeroIndex("centers"))
                }
                CenterDoc::Point { point } => TriVector::parse(point)
                    .map(Center::Point)
                    .ok_or_else(|| WitnessError::Center { center: ci + 1, text: point.clone() }),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(ClusteringSolution { completion, clusters, centers })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RemovalDoc {
    pub row: usize,
    pub rule: Rule,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KernelReport {
    pub bounds: BoundReport,
    pub removed: Vec<RemovalDoc>,
    pub restored: Vec<usize>,
    pub kept_rows: Vec<usize>,
    pub kept_coords: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub early_no: Option<EarlyNo>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reduced_rows: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reduced_dim: Option<usize>,
}

impl From<&KernelResult> for KernelReport {
    fn from(kr: &KernelResult) -> Self {
        let early_no = kr.early_no.clone().map(|e| match e {
            EarlyNo::Diameter { diameter, bound, rows } => EarlyNo::Diameter { diameter, bound, rows: one_based(&rows) },
            other => other,
        });
        KernelReport {
            bounds: kr.bounds.clone(),
            removed: kr.removed.iter().map(|x| RemovalDoc { row: x.row + 1, rule: x.rule }).collect(),
            restored: one_based(&kr.restored),
            kept_rows: one_based(&kr.kept_rows),
            kept_coords: one_based(&kr.kept_coords),
            early_no,
            reduced_rows: kr.reduced.as_ref().map(|i| i.rows().len()),
            reduced_dim: kr.reduced.as_ref().map(|i| i.dim()),
        }
    }
}
