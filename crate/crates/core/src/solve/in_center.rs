use alloc::vec::Vec;

use super::Decision;
use crate::solution::{Center, ClusteringSolution};
use crate::tri::TriVector;

/// Work done by the In solver.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct InSearchStats {
    /// Center subsets enumerated.
    pub subsets: u64,
    /// (subset, row) coverage checks performed.
    pub checks: u64,
}

/// XP search for In on complete rows: try every subset of `min(k, |M|)` rows
/// as centers.
pub fn solve_in_complete(rows: &[TriVector], k: usize, r: usize) -> Decision {
    solve_in_complete_counted(rows, k, r).0
}

pub fn solve_in_complete_counted(rows: &[TriVector], k: usize, r: usize) -> (Decision, InSearchStats) {
    let n = rows.len();
    let size = k.min(n);
    let mut stats = InSearchStats::default();
    let mut subset: Vec<usize> = (0..size).collect();
    loop {
        stats.subsets += 1;
        let mut assignment = Vec::with_capacity(n);
        for (row, v) in rows.iter().enumerate() {
            stats.checks += 1;
            let slot = match subset.iter().position(|&c| c == row) {
                Some(own) => Some(own),
                None => subset
                    .iter()
                    .enumerate()
                    .map(|(s, &c)| (rows[c].delta(v), s))
                    .filter(|&(dist, _)| dist <= r)
                    .min()
                    .map(|(_, s)| s),
            };
            match slot {
                Some(s) => assignment.push(s),
                None => break,
            }
        }
        if assignment.len() == n {
            let mut clusters = alloc::vec![Vec::new(); size];
            for (row, &s) in assignment.iter().enumerate() {
                clusters[s].push(row);
            }
            let sol = ClusteringSolution {
                completion: rows.to_vec(),
                clusters,
                centers: subset.iter().map(|&c| Center::Row(c)).collect(),
            };
            return (Decision::yes(sol), stats);
        }
        if !next_subset(&mut subset, n) {
            return (Decision::no(), stats);
        }
    }
}

/// Advances to the next `subset.len()`-subset of `0..n` in lexicographic order.
pub(crate) fn next_subset(subset: &mut [usize], n: usize) -> bool {
    let size = subset.len();
    for i in (0..size).rev() {
        if subset[i] < n - size + i {
            subset[i] += 1;
            for j in i + 1..size {
                subset[j] = subset[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
