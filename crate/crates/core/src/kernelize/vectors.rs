//! Irrelevant-vector removal.
//!
//! Every row outside the cover rows `R` serves as a reference. Its
//! zero-filled copy `v⁰` is complete, so exact-distance neighborhoods of `v⁰`
//! split into families `Δ(v⁰, x)` of uniform size. A large enough sunflower in
//! such a family has a petal whose row can be dropped without changing the
//! answer.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::bounds;
use crate::covering::CoverCertificate;
use crate::instance::Variant;
use crate::sunflower::{find_sunflower, SetFamily};
use crate::tri::TriVector;

/// Rows that are alive and outside `R`, in index order.
pub(crate) fn free_rows(alive: &[bool], cert: &CoverCertificate) -> Vec<usize> {
    (0..alive.len()).filter(|&i| alive[i] && !cert.contains_row(i)).collect()
}

/// Tries one sunflower removal among `members` (all at exact distance `t`
/// from `reference`). Returns the removed row.
fn remove_one_petal(rows: &[TriVector], reference: &TriVector, members: &[usize], petals: usize) -> Option<usize> {
    let family = SetFamily::new(members.iter().map(|&x| reference.delta_coords(&rows[x])).collect()).ok()?;
    let sf = find_sunflower(&family, petals)?;
    sf.petals.iter().map(|&p| members[p]).max()
}

/// Radius rule for In and Any. `alive` is updated in place; the returned rows
/// were removed, in order. Any uses neighborhoods of radius `2r`.
pub fn reduce_vectors_in_any(
    rows: &[TriVector],
    alive: &mut [bool],
    k: usize,
    r: usize,
    variant: Variant,
    cert: &CoverCertificate,
) -> Vec<usize> {
    let radius = bounds::rule_radius(variant, r);
    let tmax = bounds::max_rule_distance(variant, r, cert.cols.len());
    let mut removed = Vec::new();
    let references: Vec<usize> = (0..rows.len()).filter(|&i| !cert.contains_row(i)).collect();
    for &v in &references {
        let reference = rows[v].zero_filled();
        let mut classes: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
        for x in free_rows(alive, cert) {
            classes.entry(rows[x].missing_coords()).or_default().push(x);
        }
        for class in classes.values() {
            for t in 1..=tmax {
                let threshold = bounds::radius_rule_threshold(k, radius, t);
                let mut members: Vec<usize> =
                    class.iter().copied().filter(|&x| alive[x] && reference.delta(&rows[x]) == t).collect();
                while members.len() as u128 >= threshold {
                    let petals = bounds::radius_rule_petals(k, radius, t);
                    let Some(f) = remove_one_petal(rows, &reference, &members, petals) else {
                        break;
                    };
                    alive[f] = false;
                    removed.push(f);
                    members.retain(|&x| x != f);
                }
            }
        }
    }
    removed
}

/// Diameter rule. Neighborhoods are taken over all free rows; the sunflower
/// is searched in the largest MISSING-pattern class of the neighborhood.
pub fn reduce_vectors_diam(rows: &[TriVector], alive: &mut [bool], k: usize, r: usize, cert: &CoverCertificate) -> Vec<usize> {
    let cols = cert.cols.len();
    let mut removed = Vec::new();
    let references: Vec<usize> = (0..rows.len()).filter(|&i| !cert.contains_row(i)).collect();
    for &v in &references {
        let reference = rows[v].zero_filled();
        for t in 1..=r + cols {
            let threshold = bounds::diam_rule_threshold(k, r, cols, t);
            loop {
                let members: Vec<usize> =
                    free_rows(alive, cert).into_iter().filter(|&x| reference.delta(&rows[x]) == t).collect();
                if (members.len() as u128) < threshold {
                    break;
                }
                let mut classes: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
                for &x in &members {
                    classes.entry(rows[x].missing_coords()).or_default().push(x);
                }
                let largest = classes.values().fold(&Vec::new(), |best, c| if c.len() > best.len() { c } else { best }).clone();
                let petals = bounds::diam_rule_petals(k, r, cols, t);
                let Some(f) = remove_one_petal(rows, &reference, &largest, petals) else {
                    break;
                };
                alive[f] = false;
                removed.push(f);
            }
        }
    }
    removed
}
