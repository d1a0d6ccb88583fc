//! Constructive sunflower extraction on uniform set families.
//!
//! [`find_sunflower`] follows the classical recursion: take a maximal
//! pairwise-disjoint subfamily greedily in input order; if it is large enough
//! it is a sunflower with empty core, otherwise branch on a most frequent
//! element and recurse on the sets containing it. For `b ≥ 2` a family of at
//! least `b!(a−1)^b` distinct sets always yields a sunflower of size `a`; for
//! `b = 1` the sets are distinct singletons and `a` of them are needed.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SunflowerError {
    #[error("set family is empty")]
    EmptyFamily,
    #[error("member sets must be non-empty")]
    EmptyMember,
    #[error("member {index} has {found} elements, expected {expected}")]
    NonUniform { index: usize, expected: usize, found: usize },
    #[error("petal index {index} out of range for a family of {len}")]
    PetalIndex { index: usize, len: usize },
    #[error("petal index {index} listed twice")]
    DuplicatePetal { index: usize },
}

/// A non-empty family of sets that all have the same size `b ≥ 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetFamily {
    members: Vec<Vec<usize>>,
    set_size: usize,
}

impl SetFamily {
    pub fn new(members: Vec<Vec<usize>>) -> Result<Self, SunflowerError> {
        let members: Vec<Vec<usize>> = members
            .into_iter()
            .map(|mut s| {
                s.sort_unstable();
                s.dedup();
                s
            })
            .collect();
        let set_size = members.first().ok_or(SunflowerError::EmptyFamily)?.len();
        if set_size == 0 {
            return Err(SunflowerError::EmptyMember);
        }
        if let Some((index, s)) = members.iter().enumerate().find(|(_, s)| s.len() != set_size) {
            return Err(SunflowerError::NonUniform { index, expected: set_size, found: s.len() });
        }
        Ok(SetFamily { members, set_size })
    }

    pub fn members(&self) -> &[Vec<usize>] {
        &self.members
    }

    pub fn set_size(&self) -> usize {
        self.set_size
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Core plus petal indices into the family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sunflower {
    pub core: Vec<usize>,
    pub petals: Vec<usize>,
}

/// `b!(a−1)^b`, saturating.
pub fn sunflower_threshold(set_size: usize, target: usize) -> u128 {
    crate::kernelize::bounds::factorial(set_size)
        .saturating_mul((target.saturating_sub(1) as u128).saturating_pow(set_size as u32))
}

/// Searches for a sunflower with at least `target` petals. Duplicate sets are
/// collapsed first (their first occurrence represents them).
pub fn find_sunflower(fam: &SetFamily, target: usize) -> Option<Sunflower> {
    if target <= 1 {
        return Some(Sunflower { core: fam.members[0].clone(), petals: alloc::vec![0] });
    }
    let mut seen = BTreeSet::new();
    let distinct: Vec<(usize, Vec<usize>)> = fam
        .members
        .iter()
        .enumerate()
        .filter(|(_, s)| seen.insert(*s))
        .map(|(i, s)| (i, s.clone()))
        .collect();
    let (mut core, petals) = search(distinct, target)?;
    core.sort_unstable();
    Some(Sunflower { core, petals })
}

fn search(sets: Vec<(usize, Vec<usize>)>, target: usize) -> Option<(Vec<usize>, Vec<usize>)> {
    let mut used = BTreeSet::new();
    let mut disjoint = Vec::new();
    for (idx, s) in &sets {
        if s.iter().all(|e| !used.contains(e)) {
            used.extend(s.iter().copied());
            disjoint.push(*idx);
        }
    }
    if disjoint.len() >= target {
        return Some((Vec::new(), disjoint));
    }
    let mut freq: BTreeMap<usize, usize> = BTreeMap::new();
    for (_, s) in &sets {
        for &e in s {
            *freq.entry(e).or_default() += 1;
        }
    }
    let (pivot, count) = freq.iter().fold((0, 0), |best, (&e, &c)| if c > best.1 { (e, c) } else { best });
    if count < target {
        return None;
    }
    let link: Vec<(usize, Vec<usize>)> = sets
        .into_iter()
        .filter(|(_, s)| s.contains(&pivot))
        .map(|(i, s)| (i, s.into_iter().filter(|&e| e != pivot).collect()))
        .collect();
    let (mut core, petals) = search(link, target)?;
    core.push(pivot);
    Some((core, petals))
}

/// Whether the petals pairwise intersect exactly in the core (and each petal
/// contains the core).
pub fn verify_sunflower(fam: &SetFamily, sf: &Sunflower) -> Result<bool, SunflowerError> {
    let mut seen = BTreeSet::new();
    for &index in &sf.petals {
        if index >= fam.len() {
            return Err(SunflowerError::PetalIndex { index, len: fam.len() });
        }
        if !seen.insert(index) {
            return Err(SunflowerError::DuplicatePetal { index });
        }
    }
    let core: BTreeSet<usize> = sf.core.iter().copied().collect();
    let mut outside = BTreeSet::new();
    for &p in &sf.petals {
        let petal: BTreeSet<usize> = fam.members[p].iter().copied().collect();
        if !core.is_subset(&petal) {
            return Ok(false);
        }
        for e in petal.difference(&core) {
            if !outside.insert(*e) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn fam(sets: &[&[usize]]) -> SetFamily {
        SetFamily::new(sets.iter().map(|s| s.to_vec()).collect()).unwrap()
    }

    #[test]
    fn disjoint_family_has_empty_core() {
        let f = fam(&[&[1, 2], &[3, 4], &[5, 6]]);
        let sf = find_sunflower(&f, 3).unwrap();
        assert_eq!(sf, Sunflower { core: vec![], petals: vec![0, 1, 2] });
        assert_eq!(verify_sunflower(&f, &sf), Ok(true));
    }

    #[test]
    fn common_element_is_the_core() {
        let f = fam(&[&[1, 2], &[1, 3], &[1, 4]]);
        let sf = find_sunflower(&f, 3).unwrap();
        assert_eq!(sf.core, vec![1]);
        assert_eq!(verify_sunflower(&f, &sf), Ok(true));
    }

    #[test]
    fn eight_pairs_contain_three_petals() {
        // Two triangles' edge sets plus two extra pairs: no three pairwise
        // disjoint members exist among the first six.
        let f = fam(&[&[1, 2], &[2, 3], &[1, 3], &[4, 5], &[5, 6], &[4, 6], &[1, 4], &[2, 5]]);
        assert_eq!(sunflower_threshold(2, 3), 8);
        let sf = find_sunflower(&f, 3).unwrap();
        assert!(sf.petals.len() >= 3);
        assert_eq!(verify_sunflower(&f, &sf), Ok(true));
    }

    #[test]
    fn verify_rejects_triangle_with_empty_core() {
        let f = fam(&[&[1, 2], &[1, 3], &[2, 3]]);
        let sf = Sunflower { core: vec![], petals: vec![0, 1, 2] };
        assert_eq!(verify_sunflower(&f, &sf), Ok(false));
    }

    #[test]
    fn single_petal_is_vacuous() {
        let f = fam(&[&[1, 2]]);
        assert_eq!(verify_sunflower(&f, &Sunflower { core: vec![1], petals: vec![0] }), Ok(true));
        assert_eq!(verify_sunflower(&f, &Sunflower { core: vec![3], petals: vec![0] }), Ok(false));
        assert_eq!(find_sunflower(&f, 1).map(|s| s.petals), Some(vec![0]));
    }

    #[test]
    fn structural_errors() {
        assert_eq!(SetFamily::new(vec![]), Err(SunflowerError::EmptyFamily));
        assert_eq!(SetFamily::new(vec![vec![]]), Err(SunflowerError::EmptyMember));
        assert_eq!(
            SetFamily::new(vec![vec![1], vec![1, 2]]),
            Err(SunflowerError::NonUniform { index: 1, expected: 1, found: 2 })
        );
        let f = fam(&[&[1]]);
        assert!(verify_sunflower(&f, &Sunflower { core: vec![], petals: vec![4] }).is_err());
        assert!(verify_sunflower(&f, &Sunflower { core: vec![], petals: vec![0, 0] }).is_err());
    }

    #[test]
    fn duplicates_are_collapsed() {
        let f = fam(&[&[1], &[1], &[2]]);
        assert_eq!(find_sunflower(&f, 3), None);
        assert_eq!(find_sunflower(&f, 2).unwrap().petals, vec![0, 2]);
    }

    #[test]
    fn singletons_need_target_many() {
        // b = 1: b!(a-1)^b = a-1 distinct singletons hold no sunflower of size a.
        let f = fam(&[&[1], &[2]]);
        assert_eq!(sunflower_threshold(1, 3), 2);
        assert_eq!(find_sunflower(&f, 3), None);
    }

    #[test]
    fn large_family_is_fast() {
        let mut sets = Vec::new();
        let mut x: u64 = 12345;
        for _ in 0..10_000 {
            let mut s = Vec::new();
            while s.len() < 4 {
                x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let e = (x >> 33) as usize % 40;
                if !s.contains(&e) {
                    s.push(e);
                }
            }
            sets.push(s);
        }
        let f = SetFamily::new(sets).unwrap();
        let sf = find_sunflower(&f, 5).unwrap();
        assert_eq!(verify_sunflower(&f, &sf), Ok(true));
    }
}
