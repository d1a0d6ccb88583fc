//! Distance-preserving coordinate selection.
//!
//! Kept: the MISSING columns, every important coordinate of each compatibility
//! component, and for every pair of rows in different components either their
//! whole disagreement set (when it is small enough for the pair to share a
//! cluster) or its lowest `ρ + 1` coordinates (enough to keep them apart).

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::guards::cluster_mate_threshold;
use crate::compat::{diameter_unchecked, important_coordinates, ThresholdGraph};
use crate::covering::CoverCertificate;
use crate::instance::Variant;
use crate::tri::TriVector;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoordinateReduction {
    /// Kept coordinates, 0-based, ascending.
    pub coords: Vec<usize>,
    /// Largest diameter among compatibility components of the selection.
    pub gamma_max: usize,
}

pub fn reduce_coordinates(
    rows: &[TriVector],
    selection: &[usize],
    r: usize,
    cert: &CoverCertificate,
    variant: Variant,
) -> CoordinateReduction {
    let graph = ThresholdGraph::build_on(rows, selection, variant.edge_threshold(r));
    let components = graph.components();
    let mut component_of = alloc::vec![0; selection.len()];
    let mut kept: BTreeSet<usize> = cert.cols.iter().copied().collect();
    let mut gamma_max = 0;
    for (ci, component) in components.iter().enumerate() {
        let members: Vec<usize> = component.iter().map(|&v| selection[v]).collect();
        gamma_max = gamma_max.max(diameter_unchecked(rows, &members));
        kept.extend(important_coordinates(rows, &members));
        for &v in component {
            component_of[v] = ci;
        }
    }
    let pair_radius = cluster_mate_threshold(variant, r);
    for a in 0..selection.len() {
        for b in a + 1..selection.len() {
            if component_of[a] == component_of[b] {
                continue;
            }
            let delta = rows[selection[a]].delta_coords(&rows[selection[b]]);
            let take = if delta.len() <= pair_radius { delta.len() } else { pair_radius + 1 };
            kept.extend(delta.into_iter().take(take));
        }
    }
    CoordinateReduction { coords: kept.into_iter().collect(), gamma_max }
}
