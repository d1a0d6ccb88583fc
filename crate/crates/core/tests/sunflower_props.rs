use std::collections::BTreeSet;

use inclust_core::solve::binomial;
use inclust_core::sunflower::{find_sunflower, sunflower_threshold, verify_sunflower, SetFamily};
use proptest::prelude::*;
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// `count` distinct `b`-subsets of `0..universe`.
fn distinct_family(seed: u64, b: usize, universe: usize, count: usize) -> SetFamily {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = BTreeSet::new();
    while seen.len() < count {
        let mut s = sample(&mut rng, universe, b).into_vec();
        s.sort_unstable();
        seen.insert(s);
    }
    SetFamily::new(seen.into_iter().collect()).unwrap()
}

fn smallest_universe(b: usize, count: usize) -> usize {
    (b..).find(|&u| binomial(u, b) >= count as u128).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn threshold_families_contain_a_sunflower(b in 2usize..=3, a in 2usize..=4, slack in 0usize..=6, seed: u64) {
        let count = sunflower_threshold(b, a) as usize;
        let universe = smallest_universe(b, count) + slack;
        let fam = distinct_family(seed, b, universe, count);
        let sf = find_sunflower(&fam, a).expect("threshold guarantees a sunflower");
        prop_assert!(sf.petals.len() >= a);
        prop_assert_eq!(verify_sunflower(&fam, &sf), Ok(true));
    }

    #[test]
    fn returned_sunflowers_always_verify(b in 1usize..=3, a in 1usize..=5, count in 1usize..=30, seed: u64) {
        let universe = smallest_universe(b, count) + 2;
        let fam = distinct_family(seed, b, universe, count);
        if let Some(sf) = find_sunflower(&fam, a) {
            prop_assert!(sf.petals.len() >= a);
            prop_assert_eq!(verify_sunflower(&fam, &sf), Ok(true));
        }
    }
}

#[test]
fn singletons_need_a_distinct_members() {
    // b = 1: the bound b!(a−1)^b = a−1 distinct singletons only hold a−1 petals.
    let fam = SetFamily::new((0..3).map(|e| vec![e]).collect()).unwrap();
    assert_eq!(sunflower_threshold(1, 4), 3);
    assert!(find_sunflower(&fam, 4).is_none());
    assert_eq!(find_sunflower(&fam, 3).unwrap().petals, vec![0, 1, 2]);
}

#[test]
fn non_uniform_family_is_rejected() {
    assert!(SetFamily::new(vec![vec![1, 2], vec![3]]).is_err());
}
