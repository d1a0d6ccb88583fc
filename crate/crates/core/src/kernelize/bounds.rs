//! Closed-form thresholds and size bounds, in saturating `u128` arithmetic.

use serde::{Deserialize, Serialize};

use crate::instance::Variant;

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).fold(1u128, |acc, x| acc.saturating_mul(x))
}

fn pow(base: u128, exp: usize) -> u128 {
    base.saturating_pow(exp.min(u32::MAX as usize) as u32)
}

fn pow2(exp: usize) -> u128 {
    if exp >= 128 {
        u128::MAX
    } else {
        1u128 << exp
    }
}

fn sat(x: usize) -> u128 {
    x as u128
}

/// Radius of the neighborhoods the In/Any vector rule inspects.
pub fn rule_radius(variant: Variant, r: usize) -> usize {
    match variant {
        Variant::Any => 2 * r,
        Variant::In | Variant::Diam => r,
    }
}

/// Largest exact distance `t` the vector rule visits.
pub fn max_rule_distance(variant: Variant, r: usize, missing_cols: usize) -> usize {
    match variant {
        Variant::In | Variant::Any => 2 * r + missing_cols,
        Variant::Diam => r + missing_cols,
    }
}

/// In/Any: an exact-`t` class neighborhood this large triggers a sunflower search.
pub fn radius_rule_threshold(k: usize, radius: usize, t: usize) -> u128 {
    factorial(t).saturating_mul(pow(sat(k).saturating_mul(sat(radius + t + 2)), t))
}

/// In/Any: petals required so that one petal is irrelevant.
pub fn radius_rule_petals(k: usize, radius: usize, t: usize) -> usize {
    k.saturating_mul(radius + t + 2).saturating_add(1)
}

/// Diam: an exact-`t` neighborhood this large triggers a sunflower search.
pub fn diam_rule_threshold(k: usize, r: usize, missing_cols: usize, t: usize) -> u128 {
    let blocks = pow2(missing_cols);
    blocks
        .saturating_mul(factorial(t))
        .saturating_mul(pow(sat(diam_rule_petals(k, r, missing_cols, t)), t))
        .saturating_add(1)
}

/// Diam: petals required so that one petal is irrelevant.
pub fn diam_rule_petals(k: usize, r: usize, missing_cols: usize, t: usize) -> usize {
    let blocks = if missing_cols >= usize::BITS as usize { usize::MAX } else { 1usize << missing_cols };
    blocks.saturating_mul(k).saturating_mul(r + t + missing_cols + 2)
}

/// Upper bound on the rows of `M' \ R` any single cluster can hold once the
/// vector rule is exhausted. A cluster of `y` lies inside the radius-`ρ`
/// neighborhood of `y`, which meets every pattern class of the zero-filled
/// reference in exact distances `0..=ρ+|T|`.
pub fn cluster_row_bound(variant: Variant, k: usize, r: usize, missing_cols: usize) -> u128 {
    let tmax = max_rule_distance(variant, r, missing_cols);
    match variant {
        Variant::In | Variant::Any => {
            let radius = rule_radius(variant, r);
            let per_class = (1..=tmax)
                .map(|t| radius_rule_threshold(k, radius, t))
                .fold(1u128, u128::saturating_add);
            pow2(missing_cols).saturating_mul(per_class)
        }
        Variant::Diam => (1..=tmax)
            .map(|t| diam_rule_threshold(k, r, missing_cols, t) - 1)
            .fold(pow2(missing_cols), u128::saturating_add),
    }
}

/// The three per-`t` constants that appear for the same neighborhood bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstantVariants {
    /// Sum of the removal-rule thresholds actually used.
    pub rule_threshold_sum: u128,
    /// Sum with the `+2` outside the product, as stated for the bookkeeping bound.
    pub stated_bound_sum: u128,
    /// Sum with `+1` outside the product, as used in the kernel-size theorem.
    pub theorem_sum: u128,
}

pub fn constant_variants(variant: Variant, k: usize, r: usize, missing_cols: usize) -> ConstantVariants {
    let (k_, t_) = (sat(k), sat(missing_cols));
    let (range, scale, offset) = match variant {
        Variant::In => (r, 1u128, sat(r)),
        Variant::Any => (2 * r, 1, sat(2 * r)),
        Variant::Diam => (r + missing_cols, pow2(missing_cols), sat(r).saturating_add(t_)),
    };
    let mut out = ConstantVariants { rule_threshold_sum: 0, stated_bound_sum: 0, theorem_sum: 0 };
    for t in 1..=range {
        let f = factorial(t);
        let base = scale.saturating_mul(k_).saturating_mul(offset.saturating_add(sat(t)));
        let rule = match variant {
            Variant::Diam => diam_rule_threshold(k, r, missing_cols, t),
            _ => radius_rule_threshold(k, rule_radius(variant, r), t),
        };
        out.rule_threshold_sum = out.rule_threshold_sum.saturating_add(rule);
        out.stated_bound_sum = out.stated_bound_sum.saturating_add(f.saturating_mul(pow(base.saturating_add(2), t)));
        out.theorem_sum = out.theorem_sum.saturating_add(f.saturating_mul(pow(base.saturating_add(1), t)));
    }
    out
}

/// The row-count guard exactly as the kernel-size theorems state it.
pub fn stated_row_guard(variant: Variant, k: usize, r: usize, missing_cols: usize, cover_rows: usize) -> u128 {
    let k_ = sat(k);
    match variant {
        Variant::Any => {
            let s = (1..=2 * r)
                .map(|t| radius_rule_threshold(k, 2 * r, t))
                .fold(0u128, u128::saturating_add);
            k_.saturating_mul(s.saturating_add(1))
        }
        Variant::In | Variant::Diam => {
            let s = constant_variants(variant, k, r, missing_cols).theorem_sum;
            k_.saturating_mul(
                pow2(missing_cols).saturating_mul(s).saturating_add(sat(cover_rows)).saturating_add(1),
            )
        }
    }
}

/// Rows the In center augmentation can add: one per `≡^R` class plus, for
/// each of at most `k` components, one per refined class. The distance
/// profile to a row of `R` takes `r + 2` values (`0..=r` and "farther").
pub fn augment_bound(k: usize, r: usize, missing_cols: usize, cover_rows: usize, gamma2_max: usize, rows: usize) -> u128 {
    let base = pow(3, missing_cols).saturating_mul(pow(sat(r + 2), cover_rows));
    let refined = pow2(gamma2_max.saturating_mul(rows.saturating_sub(1)));
    base.saturating_add(sat(k).saturating_mul(base).saturating_mul(refined))
}

/// The augmentation size bound as stated: `|M'| + 3^|T| r^|R| + k·3^{2|T|} r^|R| 2^{γ(|M'|−1)}`.
pub fn stated_augment_bound(k: usize, r: usize, missing_cols: usize, cover_rows: usize, gamma_max: usize, rows: usize) -> u128 {
    let rr = pow(sat(r), cover_rows);
    sat(rows)
        .saturating_add(pow(3, missing_cols).saturating_mul(rr))
        .saturating_add(
            sat(k)
                .saturating_mul(pow(3, 2 * missing_cols))
                .saturating_mul(rr)
                .saturating_mul(pow2(gamma_max.saturating_mul(rows.saturating_sub(1)))),
        )
}

/// Coordinates kept by the reduction: every pair of rows contributes at most
/// `max(γ, ρ+1)` coordinates, plus the MISSING columns.
pub fn coord_bound(rows: usize, gamma_max: usize, pair_radius: usize, missing_cols: usize) -> u128 {
    let pairs = sat(rows).saturating_mul(sat(rows.saturating_sub(1))) / 2;
    pairs.saturating_mul(sat(gamma_max.max(pair_radius + 1))).saturating_add(sat(missing_cols))
}

/// `(k·γmax + |R|(|M'|−1))(r'+1) + |T|` as stated.
pub fn stated_coord_bound(variant: Variant, k: usize, r: usize, gamma_max: usize, cover_rows: usize, rows: usize, missing_cols: usize) -> u128 {
    let r_prime = sat(variant.edge_threshold(r));
    sat(k)
        .saturating_mul(sat(gamma_max))
        .saturating_add(sat(cover_rows).saturating_mul(sat(rows.saturating_sub(1))))
        .saturating_mul(r_prime + 1)
        .saturating_add(sat(missing_cols))
}

/// Every bound the kernel reports, both the ones it enforces and the stated
/// forms kept for comparison.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub variant: Variant,
    pub k: usize,
    pub r: usize,
    pub cover_rows: usize,
    pub cover_cols: usize,
    /// Guard on `|M' \ R|`: more rows than this means NO.
    pub row_guard: u128,
    /// Enforced bound on the reduced row count.
    pub row_bound: u128,
    /// The theorem's stated guard on `|M'|`.
    pub stated_row_guard: u128,
    pub constants: ConstantVariants,
    pub augment_bound: Option<u128>,
    pub stated_augment_bound: Option<u128>,
    /// Largest component diameter among the reduced rows.
    pub gamma_max: Option<usize>,
    /// Enforced bound on `|D'|`.
    pub coord_bound: Option<u128>,
    pub stated_coord_bound: Option<u128>,
}

impl BoundReport {
    pub fn new(variant: Variant, k: usize, r: usize, cover_rows: usize, cover_cols: usize) -> Self {
        let row_guard = sat(k).saturating_mul(cluster_row_bound(variant, k, r, cover_cols));
        BoundReport {
            variant,
            k,
            r,
            cover_rows,
            cover_cols,
            row_guard,
            row_bound: row_guard.saturating_add(sat(cover_rows)),
            stated_row_guard: stated_row_guard(variant, k, r, cover_cols, cover_rows),
            constants: constant_variants(variant, k, r, cover_cols),
            augment_bound: None,
            stated_augment_bound: None,
            gamma_max: None,
            coord_bound: None,
            stated_coord_bound: None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn radius_thresholds() {
        // k = 1, r = 1, t = 1: 1!·(1·4)^1 = 4; k = 2: 8.
        assert_eq!(radius_rule_threshold(1, 1, 1), 4);
        assert_eq!(radius_rule_threshold(2, 1, 1), 8);
        assert_eq!(radius_rule_petals(1, 1, 1), 5);
        // t = 2, k = 1, radius 2: 2·(1·6)^2 = 72.
        assert_eq!(radius_rule_threshold(1, 2, 2), 72);
    }

    #[test]
    fn diam_thresholds() {
        assert_eq!(diam_rule_threshold(1, 1, 0, 1), 5);
        // |T| = 3, k = r = 1, t = 1: 8·1·(8·7)^1 + 1.
        assert_eq!(diam_rule_threshold(1, 1, 3, 1), 8 * 56 + 1);
        assert_eq!(diam_rule_petals(1, 1, 3, 1), 56);
    }

    #[test]
    fn stated_any_guard() {
        // k = 1, r = 1: t = 1: 1·5 = 5; t = 2: 2·36 = 72; (5 + 72 + 1) = 78.
        assert_eq!(stated_row_guard(Variant::Any, 1, 1, 0, 0), 78);
    }

    #[test]
    fn cluster_bounds() {
        // In, k = 1, r = 1, |T| = 0: t ∈ 1..=2 with radius 1: 1 + 4 + 2·25 = 55.
        assert_eq!(cluster_row_bound(Variant::In, 1, 1, 0), 55);
        // Diam, k = 1, r = 1, |T| = 0: 1 + (5 - 1).
        assert_eq!(cluster_row_bound(Variant::Diam, 1, 1, 0), 5);
        assert_eq!(BoundReport::new(Variant::In, 2, 1, 3, 0).row_bound, 2 * cluster_row_bound(Variant::In, 2, 1, 0) + 3);
    }

    #[test]
    fn saturation() {
        assert_eq!(radius_rule_threshold(1000, 1000, 60), u128::MAX);
        assert_eq!(cluster_row_bound(Variant::Diam, 3, 3, 200), u128::MAX);
        assert_eq!(factorial(5), 120);
    }

    #[test]
    fn coordinate_bounds() {
        assert_eq!(coord_bound(3, 2, 1, 1), 3 * 2 + 1);
        assert_eq!(stated_coord_bound(Variant::Any, 2, 1, 3, 1, 4, 2), (2 * 3 + 3) * 3 + 2);
    }
}
