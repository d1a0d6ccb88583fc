//! Restoring potential centers for In.
//!
//! Removing rows may remove the only row that could serve as a center. For
//! each component of the kept free rows (rows within `2r` of each other can
//! share a cluster), candidate centers are grouped by their trace on the
//! MISSING columns, their capped distance profile to the cover rows, and their
//! trace on the component's important coordinates. Within a class the row
//! closest to the component elsewhere is at least as good as any other, so
//! one per class suffices.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::compat::{important_coordinates, ThresholdGraph};
use crate::covering::CoverCertificate;
use crate::tri::{Symbol, TriVector};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct CoverKey {
    missing_trace: Vec<Symbol>,
    profile: Vec<usize>,
}

fn cover_key(rows: &[TriVector], row: usize, r: usize, cert: &CoverCertificate) -> CoverKey {
    CoverKey {
        missing_trace: cert.cols.iter().map(|&c| rows[row].get(c)).collect(),
        profile: cert.rows.iter().map(|&x| rows[row].delta(&rows[x]).min(r + 1)).collect(),
    }
}

/// Rows to add to the kept set so that a center subset of all rows covering
/// the kept rows exists iff one exists among kept plus added rows. Candidates
/// are the dropped rows; the result is ascending.
pub fn augment_centers_in(rows: &[TriVector], alive: &[bool], r: usize, cert: &CoverCertificate) -> Vec<usize> {
    let free_all: Vec<usize> = (0..rows.len()).filter(|&i| !cert.contains_row(i)).collect();
    let keys: BTreeMap<usize, CoverKey> = free_all.iter().map(|&i| (i, cover_key(rows, i, r, cert))).collect();
    let mut chosen = BTreeSet::new();

    let mut by_key: BTreeMap<&CoverKey, usize> = BTreeMap::new();
    for &i in &free_all {
        let slot = by_key.entry(&keys[&i]).or_insert(i);
        if alive[i] && !alive[*slot] {
            *slot = i;
        }
    }
    chosen.extend(by_key.values().copied());

    let kept_free: Vec<usize> = free_all.iter().copied().filter(|&i| alive[i]).collect();
    let graph = ThresholdGraph::build_on(rows, &kept_free, 2 * r);
    let missing_cols: BTreeSet<usize> = cert.cols.iter().copied().collect();
    for component in graph.components() {
        let members: Vec<usize> = component.iter().map(|&v| kept_free[v]).collect();
        let important = important_coordinates(rows, &members);
        let refined: Vec<usize> = important.difference(&missing_cols).copied().collect();
        let shared: Vec<usize> =
            (0..rows[members[0]].dim()).filter(|c| !important.contains(c) && !missing_cols.contains(c)).collect();
        let anchor = &rows[members[0]];
        let mut best: BTreeMap<(&CoverKey, Vec<Symbol>), (usize, usize)> = BTreeMap::new();
        for &m in free_all.iter().filter(|&&m| !alive[m]) {
            if !members.iter().any(|&y| rows[m].delta(&rows[y]) <= r) {
                continue;
            }
            let outside = shared.iter().filter(|&&c| rows[m].get(c) != anchor.get(c)).count();
            let trace: Vec<Symbol> = refined.iter().map(|&c| rows[m].get(c)).collect();
            let slot = best.entry((&keys[&m], trace)).or_insert((outside, m));
            if outside < slot.0 {
                *slot = (outside, m);
            }
        }
        chosen.extend(best.values().map(|&(_, m)| m));
    }
    chosen.into_iter().filter(|&i| !alive[i]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covering::covering_certificate;

    fn rows(s: &[&str]) -> Vec<TriVector> {
        s.iter().map(|x| TriVector::parse(x).unwrap()).collect()
    }

    #[test]
    fn nothing_to_add_when_everything_is_kept() {
        let m = rows(&["000000", "000011", "110000"]);
        let cert = covering_certificate(&m);
        assert!(augment_centers_in(&m, &[true, true, true], 2, &cert).is_empty());
    }

    #[test]
    fn closest_class_member_is_restored() {
        // Kept component {000000, 000011}; both dropped rows share the trace
        // 00 on the important coordinates {5, 6}; 100000 is closer elsewhere.
        let m = rows(&["000000", "000011", "110000", "100000"]);
        let cert = covering_certificate(&m);
        let alive = [true, true, false, false];
        assert_eq!(augment_centers_in(&m, &alive, 2, &cert), [3]);
    }
}
