//! Turning a solution of the kernel into a solution of the input instance.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use thiserror::Error;

use super::KernelResult;
use crate::instance::{Instance, Variant};
use crate::solution::{verify_solution, Center, ClusteringSolution, Violation};
use crate::tri::{Symbol, TriVector};

/// Completions of a removed Diam row tried per cluster before giving up.
const MAX_ROW_COMPLETIONS: usize = 1 << 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LiftError {
    #[error("kernel answered NO early; there is nothing to lift")]
    NoKernel,
    #[error("reduced solution does not solve the kernel: {0}")]
    InvalidReduced(Violation),
    #[error("removed row {row} fits no cluster of the lifted solution")]
    Unplaced { row: usize },
    #[error("lifted solution failed verification: {0}")]
    Invalid(Violation),
}

/// Widens a kernel solution to full width, reinserts removed rows and
/// duplicates, and verifies the result against `inst`.
pub fn lift_solution(
    inst: &Instance,
    kernel: &KernelResult,
    reduced_sol: &ClusteringSolution,
) -> Result<ClusteringSolution, LiftError> {
    let reduced = kernel.reduced.as_ref().ok_or(LiftError::NoKernel)?;
    verify_solution(reduced, reduced_sol).map_err(LiftError::InvalidReduced)?;
    let (d, r, variant) = (inst.dim(), inst.r(), inst.variant());
    let in_coords: BTreeSet<usize> = kernel.kept_coords.iter().copied().collect();
    let n = inst.rows().len();
    let mut completion: Vec<Option<TriVector>> = alloc::vec![None; n];
    let mut clusters: Vec<Vec<usize>> = Vec::new();
    let mut centers: Vec<TriVector> = Vec::new();

    for (ci, cluster) in reduced_sol.clusters.iter().enumerate() {
        let members: Vec<usize> = cluster.iter().map(|&i| kernel.kept_rows[i]).collect();
        // Kept rows of one cluster agree on every known coordinate outside the kernel.
        let mut common = TriVector::zeros(d);
        for j in (0..d).filter(|j| !in_coords.contains(j)) {
            if let Some(s) = members.iter().map(|&i| inst.rows()[i].get(j)).find(|&s| s != Symbol::Missing) {
                common.set(j, s);
            }
        }
        let widen = |narrow: &TriVector, row: &TriVector| {
            let mut full = row.fill_missing_from(&common);
            for (p, &j) in kernel.kept_coords.iter().enumerate() {
                full.set(j, narrow.get(p));
            }
            full
        };
        for &i in cluster {
            let orig = kernel.kept_rows[i];
            completion[orig] = Some(widen(&reduced_sol.completion[i], &inst.rows()[orig]));
        }
        match (variant, reduced_sol.centers.get(ci)) {
            (Variant::In, Some(Center::Row(c))) => centers.push(completion[kernel.kept_rows[*c]].clone().unwrap()),
            (Variant::Any, Some(Center::Point(p))) => centers.push(widen(p, &TriVector::missing(d))),
            _ => {}
        }
        clusters.push(members);
    }

    let kept: BTreeSet<usize> = kernel.kept_rows.iter().copied().collect();
    let dropped: Vec<usize> =
        (0..n).filter(|&i| kernel.representative[i] == i && !kept.contains(&i)).rev().collect();
    for row in dropped {
        let v = &inst.rows()[row];
        let placed = match variant {
            Variant::In | Variant::Any => centers
                .iter()
                .enumerate()
                .map(|(ci, c)| (c.delta(v), ci))
                .filter(|&(dist, _)| dist <= r)
                .min()
                .map(|(_, ci)| (ci, v.fill_missing_from(&centers[ci]))),
            Variant::Diam => place_diam(v, &clusters, &completion, r),
        };
        let (ci, full) = placed.ok_or(LiftError::Unplaced { row })?;
        completion[row] = Some(full);
        clusters[ci].push(row);
    }

    for i in 0..n {
        let rep = kernel.representative[i];
        if rep != i {
            completion[i] = completion[rep].clone();
            let ci = clusters.iter().position(|c| c.contains(&rep)).expect("representative placed");
            clusters[ci].push(i);
        }
    }
    for c in &mut clusters {
        c.sort_unstable();
    }
    let centers = match variant {
        Variant::Diam => Vec::new(),
        Variant::In => reduced_sol
            .centers
            .iter()
            .map(|c| match c {
                Center::Row(i) => Center::Row(kernel.kept_rows[*i]),
                Center::Point(_) => unreachable!("verified In solution"),
            })
            .collect(),
        Variant::Any => centers.into_iter().map(Center::Point).collect(),
    };
    let sol = ClusteringSolution {
        completion: completion.into_iter().map(|c| c.expect("every row placed")).collect(),
        clusters,
        centers,
    };
    verify_solution(inst, &sol).map_err(LiftError::Invalid)?;
    Ok(sol)
}

fn place_diam(
    v: &TriVector,
    clusters: &[Vec<usize>],
    completion: &[Option<TriVector>],
    r: usize,
) -> Option<(usize, TriVector)> {
    let missing = v.missing_coords();
    for (ci, cluster) in clusters.iter().enumerate() {
        let fits = |cand: &TriVector| {
            cluster.iter().all(|&m| completion[m].as_ref().is_some_and(|c| c.delta(cand) <= r))
        };
        // Completing like a member first, then exhaustively for few MISSING entries.
        for &m in cluster {
            let cand = v.fill_missing_from(completion[m].as_ref()?);
            if fits(&cand) {
                return Some((ci, cand));
            }
        }
        if missing.len() < usize::BITS as usize && (1usize << missing.len()) <= MAX_ROW_COMPLETIONS {
            for mask in 0..1usize << missing.len() {
                let mut cand = v.clone();
                for (b, &j) in missing.iter().enumerate() {
                    cand.set(j, Symbol::from_bit(mask >> b & 1 == 1));
                }
                if fits(&cand) {
                    return Some((ci, cand));
                }
            }
        }
    }
    None
}
