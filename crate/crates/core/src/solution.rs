use alloc::vec::Vec;

use thiserror::Error;

use crate::instance::{Instance, Variant};
use crate::tri::TriVector;

/// Center datum of one cluster.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Center {
    /// In: the (completed) row with this index.
    Row(usize),
    /// Any: an arbitrary complete vector.
    Point(TriVector),
}

/// A completion together with a partition into clusters.
///
/// `centers` is parallel to `clusters` for In and Any and empty for Diam.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClusteringSolution {
    pub completion: Vec<TriVector>,
    pub clusters: Vec<Vec<usize>>,
    pub centers: Vec<Center>,
}

/// The first broken solution invariant.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("shape mismatch: {0}")]
    Shape(&'static str),
    #[error("completion row {row} has dimension {found}, expected {expected}")]
    CompletionDimension { row: usize, expected: usize, found: usize },
    #[error("completion row {row} is not complete")]
    Incomplete { row: usize },
    #[error("completion disagrees with row {row} at coordinate {coord}")]
    CompletionDisagrees { row: usize, coord: usize },
    #[error("cluster budget exceeded: {clusters} clusters > k = {k}")]
    ClusterBudget { clusters: usize, k: usize },
    #[error("cluster {cluster} is empty")]
    EmptyCluster { cluster: usize },
    #[error("row {row} is not assigned to exactly one cluster")]
    NotPartition { row: usize },
    #[error("cluster {cluster}: center row {center} is not a member of the cluster")]
    CenterOutsideCluster { cluster: usize, center: usize },
    #[error("cluster {cluster}: center has the wrong kind for this variant")]
    CenterKind { cluster: usize },
    #[error("cluster {cluster}: center vector is not a complete vector of the instance dimension")]
    BadCenterVector { cluster: usize },
    #[error("cluster {cluster}: row {row} is at distance {distance} > r = {r} from the center")]
    TooFarFromCenter { cluster: usize, row: usize, distance: usize, r: usize },
    #[error("cluster {cluster}: rows {a} and {b} are at distance {distance} > r = {r}")]
    DiameterExceeded { cluster: usize, a: usize, b: usize, distance: usize, r: usize },
}

/// Checks every invariant of a clustering solution. Row and coordinate
/// numbers in violations are 0-based.
pub fn verify_solution(inst: &Instance, sol: &ClusteringSolution) -> Result<(), Violation> {
    let n = inst.rows().len();
    let (k, r, d) = (inst.k(), inst.r(), inst.dim());
    if sol.completion.len() != n {
        return Err(Violation::Shape("completion row count differs from instance"));
    }
    match inst.variant() {
        Variant::Diam if !sol.centers.is_empty() => {
            return Err(Violation::Shape("diameter solutions carry no centers"))
        }
        Variant::In | Variant::Any if sol.centers.len() != sol.clusters.len() => {
            return Err(Violation::Shape("one center per cluster required"))
        }
        _ => {}
    }
    for (row, (c, orig)) in sol.completion.iter().zip(inst.rows()).enumerate() {
        if c.dim() != d {
            return Err(Violation::CompletionDimension { row, expected: d, found: c.dim() });
        }
        if !c.is_complete() {
            return Err(Violation::Incomplete { row });
        }
        if let Some(coord) = (0..d).find(|&j| {
            let o = orig.get(j);
            o != crate::tri::Symbol::Missing && o != c.get(j)
        }) {
            return Err(Violation::CompletionDisagrees { row, coord });
        }
    }
    if sol.clusters.len() > k {
        return Err(Violation::ClusterBudget { clusters: sol.clusters.len(), k });
    }
    let mut owner = alloc::vec![usize::MAX; n];
    for (ci, cluster) in sol.clusters.iter().enumerate() {
        if cluster.is_empty() {
            return Err(Violation::EmptyCluster { cluster: ci });
        }
        for &row in cluster {
            if row >= n || owner[row] != usize::MAX {
                return Err(Violation::NotPartition { row });
            }
            owner[row] = ci;
        }
    }
    if let Some(row) = owner.iter().position(|&o| o == usize::MAX) {
        return Err(Violation::NotPartition { row });
    }
    let completion = &sol.completion;
    for (ci, cluster) in sol.clusters.iter().enumerate() {
        let center = match (inst.variant(), sol.centers.get(ci)) {
            (Variant::Diam, _) => {
                for (x, &a) in cluster.iter().enumerate() {
                    for &b in &cluster[x + 1..] {
                        let distance = completion[a].delta(&completion[b]);
                        if distance > r {
                            return Err(Violation::DiameterExceeded { cluster: ci, a, b, distance, r });
                        }
                    }
                }
                continue;
            }
            (Variant::In, Some(Center::Row(c))) => {
                if !cluster.contains(c) {
                    return Err(Violation::CenterOutsideCluster { cluster: ci, center: *c });
                }
                &completion[*c]
            }
            (Variant::Any, Some(Center::Point(p))) => {
                if p.dim() != d || !p.is_complete() {
                    return Err(Violation::BadCenterVector { cluster: ci });
                }
                p
            }
            _ => return Err(Violation::CenterKind { cluster: ci }),
        };
        for &row in cluster {
            let distance = center.delta(&completion[row]);
            if distance > r {
                return Err(Violation::TooFarFromCenter { cluster: ci, row, distance, r });
            }
        }
    }
    Ok(())
}
