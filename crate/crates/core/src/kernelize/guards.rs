//! Early-NO tests on the free rows.

use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::compat::{diameter_unchecked, ThresholdGraph};
use crate::covering::CoverCertificate;
use crate::instance::Variant;
use crate::tri::TriVector;

/// Why a kernel answered NO without solving. Row numbers are 0-based
/// indices into the input instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EarlyNo {
    /// More free rows survived the vector rule than `k` clusters can hold.
    RowGuard { rows: usize, guard: u128 },
    /// The free rows split into more than `k` groups that can never share a cluster.
    Components { components: usize, k: usize },
    /// A component is too wide to be covered by `k` clusters.
    Diameter { diameter: usize, bound: usize, rows: Vec<usize> },
}

/// Largest diameter a connected component of free rows may have.
pub fn diameter_limit(variant: Variant, k: usize, r: usize, missing_cols: usize) -> usize {
    let factor = match variant {
        Variant::In => 3,
        Variant::Any => 4,
        Variant::Diam => 2,
    };
    (factor * r * k + missing_cols).saturating_sub(r)
}

/// Rows of one cluster are pairwise this close, whatever the completion.
pub fn cluster_mate_threshold(variant: Variant, r: usize) -> usize {
    match variant {
        Variant::Diam => r,
        Variant::In | Variant::Any => 2 * r,
    }
}

/// Runs the component-count and component-diameter tests on the free rows
/// in `selection`. Components for the diameter test come from the
/// compatibility graph; the count test uses the cluster-mate graph.
pub fn diameter_no_check(
    rows: &[TriVector],
    selection: &[usize],
    k: usize,
    r: usize,
    cert: &CoverCertificate,
    variant: Variant,
) -> Option<EarlyNo> {
    let free: Vec<usize> = selection.iter().copied().filter(|&i| !cert.contains_row(i)).collect();
    if free.is_empty() {
        return None;
    }
    let mates = ThresholdGraph::build_on(rows, &free, cluster_mate_threshold(variant, r)).components();
    if mates.len() > k {
        return Some(EarlyNo::Components { components: mates.len(), k });
    }
    let bound = diameter_limit(variant, k, r, cert.cols.len());
    let graph = ThresholdGraph::build_on(rows, &free, variant.edge_threshold(r));
    for component in graph.components() {
        let members: Vec<usize> = component.iter().map(|&v| free[v]).collect();
        let diameter = diameter_unchecked(rows, &members);
        if diameter > bound {
            return Some(EarlyNo::Diameter { diameter, bound, rows: members });
        }
    }
    None
}
