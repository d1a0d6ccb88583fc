//! Kernelization: shrink an instance to a size bounded by `k`, `r` and the
//! covering number while preserving the answer.
//!
//! The pipeline per variant:
//! 1. deduplicate rows and compute a minimum cover `(R, T)` of the MISSING entries;
//! 2. remove irrelevant rows with the sunflower rules ([`vectors`]);
//! 3. answer NO if the surviving free rows exceed the row guard;
//! 4. for In, restore potential centers ([`augment`]);
//! 5. answer NO on the component-count and diameter tests ([`guards`]);
//! 6. drop coordinates that cannot matter ([`coords`]).
//!
//! ```
//! use inclust_core::{kernelize::kernelize, Instance, TriVector, Variant};
//!
//! let rows = ["00000", "10000", "01000", "00100", "00010", "00001"]
//!     .iter()
//!     .map(|s| TriVector::parse(s).unwrap())
//!     .collect();
//! let inst = Instance::new(rows, 1, 1, Variant::In).unwrap();
//! let kernel = kernelize(&inst);
//! assert_eq!(kernel.removed.len(), 1);
//! assert!(kernel.early_no.is_none());
//! ```

pub mod augment;
pub mod bounds;
pub mod coords;
pub mod guards;
pub mod lift;
pub mod vectors;

use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

pub use augment::augment_centers_in;
pub use bounds::BoundReport;
pub use coords::{reduce_coordinates, CoordinateReduction};
pub use guards::{diameter_no_check, EarlyNo};
pub use lift::{lift_solution, LiftError};
pub use vectors::{reduce_vectors_diam, reduce_vectors_in_any};

use crate::covering::{covering_certificate, CoverCertificate};
use crate::instance::{first_occurrence, Instance, Variant};

/// The rule that dropped a row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    Duplicate,
    RadiusSunflower,
    DiameterSunflower,
}

impl Rule {
    pub fn name(self) -> &'static str {
        match self {
            Rule::Duplicate => "duplicate",
            Rule::RadiusSunflower => "radius-sunflower",
            Rule::DiameterSunflower => "diameter-sunflower",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Removal {
    /// 0-based row of the input instance.
    pub row: usize,
    pub rule: Rule,
}

/// Output of [`kernelize`]. Row and coordinate indices are 0-based and refer
/// to the input instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelResult {
    /// The kernel; `None` exactly when `early_no` is set.
    pub reduced: Option<Instance>,
    /// Input rows kept, aligned with the rows of `reduced`.
    pub kept_rows: Vec<usize>,
    /// Input coordinates kept, aligned with the columns of `reduced`.
    pub kept_coords: Vec<usize>,
    /// Removal log in order of application.
    pub removed: Vec<Removal>,
    /// Removed rows brought back as potential centers (In only).
    pub restored: Vec<usize>,
    /// For every input row, the first row equal to it.
    pub representative: Vec<usize>,
    pub early_no: Option<EarlyNo>,
    /// Cover of the deduplicated rows, in input row indices.
    pub certificate: CoverCertificate,
    pub bounds: BoundReport,
}

/// Runs the kernelization pipeline for the instance's variant.
pub fn kernelize(inst: &Instance) -> KernelResult {
    let (k, r, variant) = (inst.k(), inst.r(), inst.variant());
    let representative = first_occurrence(inst.rows());
    let originals: Vec<usize> = (0..inst.rows().len()).filter(|&i| representative[i] == i).collect();
    let rows: Vec<_> = originals.iter().map(|&i| inst.rows()[i].clone()).collect();
    let mut removed: Vec<Removal> = (0..inst.rows().len())
        .filter(|&i| representative[i] != i)
        .map(|row| Removal { row, rule: Rule::Duplicate })
        .collect();

    let cert = covering_certificate(&rows);
    let certificate = CoverCertificate {
        rows: cert.rows.iter().map(|&i| originals[i]).collect(),
        cols: cert.cols.clone(),
    };
    let mut bounds = BoundReport::new(variant, k, r, cert.rows.len(), cert.cols.len());
    let mut alive = alloc::vec![true; rows.len()];
    let (dropped, rule) = match variant {
        Variant::In | Variant::Any => {
            (reduce_vectors_in_any(&rows, &mut alive, k, r, variant, &cert), Rule::RadiusSunflower)
        }
        Variant::Diam => (reduce_vectors_diam(&rows, &mut alive, k, r, &cert), Rule::DiameterSunflower),
    };
    removed.extend(dropped.iter().map(|&i| Removal { row: originals[i], rule }));

    let mut result = KernelResult {
        reduced: None,
        kept_rows: Vec::new(),
        kept_coords: Vec::new(),
        removed,
        restored: Vec::new(),
        representative,
        early_no: None,
        certificate,
        bounds: bounds.clone(),
    };

    let free = vectors::free_rows(&alive, &cert);
    if free.len() as u128 > bounds.row_guard {
        result.early_no = Some(EarlyNo::RowGuard { rows: free.len(), guard: bounds.row_guard });
        return result;
    }

    if variant == Variant::In {
        let graph = crate::compat::ThresholdGraph::build_on(&rows, &free, 2 * r);
        let gamma2 = graph
            .components()
            .iter()
            .map(|c| crate::compat::diameter_unchecked(&rows, &c.iter().map(|&v| free[v]).collect::<Vec<_>>()))
            .max()
            .unwrap_or(0);
        let aug = bounds::augment_bound(k, r, cert.cols.len(), cert.rows.len(), gamma2, free.len());
        bounds.augment_bound = Some(aug);
        bounds.stated_augment_bound =
            Some(bounds::stated_augment_bound(k, r, cert.cols.len(), cert.rows.len(), gamma2, free.len()));
        bounds.row_bound = bounds.row_bound.saturating_add(aug);
        let added = augment_centers_in(&rows, &alive, r, &cert);
        for &i in &added {
            alive[i] = true;
        }
        result.restored = added.iter().map(|&i| originals[i]).collect();
    }

    let selection: Vec<usize> = (0..rows.len()).filter(|&i| alive[i]).collect();
    if let Some(reason) = diameter_no_check(&rows, &selection, k, r, &cert, variant) {
        result.early_no = Some(match reason {
            EarlyNo::Diameter { diameter, bound, rows: members } => {
                EarlyNo::Diameter { diameter, bound, rows: members.iter().map(|&i| originals[i]).collect() }
            }
            other => other,
        });
        result.bounds = bounds;
        return result;
    }

    let reduction = reduce_coordinates(&rows, &selection, r, &cert, variant);
    let pair_radius = guards::cluster_mate_threshold(variant, r);
    bounds.gamma_max = Some(reduction.gamma_max);
    // At least one coordinate survives, see below.
    bounds.coord_bound =
        Some(bounds::coord_bound(selection.len(), reduction.gamma_max, pair_radius, cert.cols.len()).max(1));
    bounds.stated_coord_bound = Some(bounds::stated_coord_bound(
        variant,
        k,
        r,
        reduction.gamma_max,
        cert.rows.len(),
        selection.len(),
        cert.cols.len(),
    ));
    let mut coords = reduction.coords;
    if coords.is_empty() {
        // Every kept row agrees everywhere; one column keeps the dimension positive.
        coords.push(0);
    }
    let reduced_rows = selection.iter().map(|&i| rows[i].restrict(&coords)).collect();
    result.reduced = Some(inst.with_rows(reduced_rows).expect("kernel rows are non-empty and uniform"));
    result.kept_rows = selection.iter().map(|&i| originals[i]).collect();
    result.kept_coords = coords;
    result.bounds = bounds;
    result
}
