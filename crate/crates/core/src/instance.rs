use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::InstanceError;
use crate::tri::TriVector;

/// Which clustering problem an instance asks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    /// Centers must be (completed) rows of the matrix.
    In,
    /// Centers are arbitrary Boolean vectors.
    Any,
    /// Clusters have bounded pairwise distance; no centers.
    Diam,
}

impl Variant {
    pub const ALL: [Variant; 3] = [Variant::In, Variant::Any, Variant::Diam];

    pub fn name(self) -> &'static str {
        match self {
            Variant::In => "in",
            Variant::Any => "any",
            Variant::Diam => "diam",
        }
    }

    /// Distance threshold of the compatibility graph: two rows can share a
    /// cluster only if they are this close.
    pub fn edge_threshold(self, r: usize) -> usize {
        match self {
            Variant::Any => 2 * r,
            Variant::In | Variant::Diam => r,
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown variant `{0}` (expected in, any or diam)")]
pub struct UnknownVariant(pub alloc::string::String);

impl FromStr for Variant {
    type Err = UnknownVariant;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "in" => Ok(Variant::In),
            "any" => Ok(Variant::Any),
            "diam" => Ok(Variant::Diam),
            _ => Err(UnknownVariant(s.into())),
        }
    }
}

/// A clustering-completion instance: rows over `{0,1,MISSING}^d` plus the
/// cluster budget `k`, distance bound `r` and problem variant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    rows: Vec<TriVector>,
    dim: usize,
    k: usize,
    r: usize,
    variant: Variant,
}

impl Instance {
    pub fn new(rows: Vec<TriVector>, k: usize, r: usize, variant: Variant) -> Result<Self, InstanceError> {
        let dim = rows.first().ok_or(InstanceError::Empty)?.dim();
        if dim == 0 {
            return Err(InstanceError::ZeroDimension);
        }
        if k == 0 {
            return Err(InstanceError::ZeroBudget);
        }
        if let Some((row, v)) = rows.iter().enumerate().find(|(_, v)| v.dim() != dim) {
            return Err(InstanceError::RowLength { row, expected: dim, found: v.dim() });
        }
        Ok(Instance { rows, dim, k, r, variant })
    }

    pub fn rows(&self) -> &[TriVector] {
        &self.rows
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn missing_count(&self) -> usize {
        self.rows.iter().map(TriVector::missing_count).sum()
    }

    pub fn with_rows(&self, rows: Vec<TriVector>) -> Result<Self, InstanceError> {
        Instance::new(rows, self.k, self.r, self.variant)
    }

    pub fn with_r(&self, r: usize) -> Self {
        Instance { r, ..self.clone() }
    }

    pub fn with_variant(&self, variant: Variant) -> Self {
        Instance { variant, ..self.clone() }
    }

    /// Same instance without duplicate rows.
    pub fn deduped(&self) -> Self {
        Instance { rows: dedupe(&self.rows), ..self.clone() }
    }
}

/// Keeps the first occurrence of each distinct row, preserving order.
pub fn dedupe(rows: &[TriVector]) -> Vec<TriVector> {
    let mut seen = BTreeSet::new();
    rows.iter().filter(|v| seen.insert(*v)).cloned().collect()
}

/// For each row, the index of its first occurrence.
pub fn first_occurrence(rows: &[TriVector]) -> Vec<usize> {
    let mut first = alloc::collections::BTreeMap::new();
    rows.iter().enumerate().map(|(i, v)| *first.entry(v).or_insert(i)).collect()
}
