use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::{binomial, Decision, SolverBudget};
use crate::solution::{Center, ClusteringSolution};
use crate::tri::{Symbol, TriVector};

/// Number of vectors within Hamming distance `r` of a point in `{0,1}^d`.
pub fn ball_size(d: usize, r: usize) -> u128 {
    (0..=r.min(d)).map(|i| binomial(d, i)).fold(0u128, u128::saturating_add)
}

/// Any on complete rows. A center set can be shrunk so that every center is
/// within `r` of some row, so the candidates are the radius-`r` balls around
/// the rows.
pub fn solve_any_complete(rows: &[TriVector], k: usize, r: usize, budget: &SolverBudget) -> Decision {
    let d = rows.first().map_or(0, TriVector::dim);
    let pool_size = ball_size(d, r).saturating_mul(rows.len() as u128);
    if pool_size > u128::from(budget.max_center_tuples) {
        return Decision::exhausted();
    }
    let mut pool = BTreeSet::new();
    for row in rows {
        ball(row, r, &mut pool);
    }
    solve_any_with_pool(rows, k, r, pool.into_iter().collect())
}

fn ball(center: &TriVector, r: usize, out: &mut BTreeSet<TriVector>) {
    fn rec(v: &mut TriVector, from: usize, left: usize, out: &mut BTreeSet<TriVector>) {
        out.insert(v.clone());
        if left == 0 {
            return;
        }
        for i in from..v.dim() {
            let old = v.get(i);
            v.set(i, if old == Symbol::One { Symbol::Zero } else { Symbol::One });
            rec(v, i + 1, left - 1, out);
            v.set(i, old);
        }
    }
    rec(&mut center.clone(), 0, r, out);
}

type Mask = Vec<u64>;

fn covers(mask: &Mask, row: usize) -> bool {
    mask[row / 64] >> (row % 64) & 1 == 1
}

fn subset_of(a: &Mask, b: &Mask) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

/// Any on complete rows with an explicit candidate center pool. YES iff at
/// most `k` candidates cover every row within `r`.
pub fn solve_any_with_pool(rows: &[TriVector], k: usize, r: usize, pool: Vec<TriVector>) -> Decision {
    let n = rows.len();
    let words = n.div_ceil(64).max(1);
    let mut by_mask: alloc::collections::BTreeMap<Mask, usize> = alloc::collections::BTreeMap::new();
    for (ci, c) in pool.iter().enumerate() {
        let mut mask = alloc::vec![0u64; words];
        for (i, row) in rows.iter().enumerate() {
            if c.delta(row) <= r {
                mask[i / 64] |= 1 << (i % 64);
            }
        }
        if mask.iter().any(|&w| w != 0) {
            by_mask.entry(mask).or_insert(ci);
        }
    }
    let masks: Vec<(Mask, usize)> = by_mask.into_iter().collect();
    let maximal: Vec<&(Mask, usize)> = masks
        .iter()
        .filter(|(m, _)| !masks.iter().any(|(o, _)| o != m && subset_of(m, o)))
        .collect();

    let mut chosen = Vec::new();
    let mut covered = alloc::vec![0u64; words];
    if !search(&maximal, n, k, &mut covered, &mut chosen) {
        return Decision::no();
    }
    let centers: Vec<&TriVector> = chosen.iter().map(|&i| &pool[maximal[i].1]).collect();
    let mut clusters = alloc::vec![Vec::new(); centers.len()];
    for (row, v) in rows.iter().enumerate() {
        let best = (0..centers.len()).min_by_key(|&c| (centers[c].delta(v), c)).expect("nonempty");
        clusters[best].push(row);
    }
    let (clusters, centers): (Vec<_>, Vec<_>) = clusters
        .into_iter()
        .zip(centers)
        .filter(|(c, _)| !c.is_empty())
        .map(|(c, p)| (c, Center::Point(p.clone())))
        .unzip();
    Decision::yes(ClusteringSolution { completion: rows.to_vec(), clusters, centers })
}

fn search(masks: &[&(Mask, usize)], n: usize, left: usize, covered: &mut Mask, chosen: &mut Vec<usize>) -> bool {
    let Some(row) = (0..n).find(|&i| !covers(covered, i)) else {
        return true;
    };
    if left == 0 {
        return false;
    }
    for (i, (mask, _)) in masks.iter().enumerate() {
        if !covers(mask, row) {
            continue;
        }
        let saved = covered.clone();
        for (w, m) in covered.iter_mut().zip(mask) {
            *w |= m;
        }
        chosen.push(i);
        if search(masks, n, left - 1, covered, chosen) {
            return true;
        }
        chosen.pop();
        *covered = saved;
    }
    false
}
