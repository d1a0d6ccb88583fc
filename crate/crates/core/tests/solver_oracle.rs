mod common;

use common::{naive_answer, naive_complete, rows};
use inclust_core::gen::{random_planted, random_uniform, MissingSpec, PlantedSpec};
use inclust_core::solve::{
    binomial, enumerate_completions, solve_any_complete, solve_completion, solve_diam_complete,
    solve_in_complete_counted, Answer, Decision, SolverBudget,
};
use inclust_core::{verify_solution, Instance, TriVector, Variant};
use proptest::prelude::*;

fn complete_rows() -> impl Strategy<Value = Vec<TriVector>> {
    (1usize..=7, 1usize..=6).prop_flat_map(|(n, d)| {
        proptest::collection::vec(proptest::collection::vec(any::<bool>(), d), n)
            .prop_map(|m| m.iter().map(|b| TriVector::from_bits(b)).collect())
    })
}

fn check(inst: &Instance, d: &Decision, expected: bool) -> Result<(), TestCaseError> {
    prop_assert_eq!(d.answer == Answer::Yes, expected);
    if let Some(w) = &d.witness {
        prop_assert_eq!(verify_solution(inst, w), Ok(()));
    }
    prop_assert_eq!(d.witness.is_some(), expected);
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn in_solver_matches_partitions(m in complete_rows(), k in 1usize..=3, r in 0usize..=3) {
        let inst = Instance::new(m.clone(), k, r, Variant::In).unwrap();
        let (d, stats) = solve_in_complete_counted(&m, k, r);
        check(&inst, &d, naive_complete(&m, k, r, Variant::In))?;
        let n = m.len();
        prop_assert!(stats.checks as u128 <= binomial(n, k.min(n)) * n as u128);
    }

    #[test]
    fn diam_solver_matches_partitions(m in complete_rows(), k in 1usize..=3, r in 0usize..=3) {
        let inst = Instance::new(m.clone(), k, r, Variant::Diam).unwrap();
        check(&inst, &solve_diam_complete(&m, k, r), naive_complete(&m, k, r, Variant::Diam))?;
    }

    #[test]
    fn any_solver_matches_partitions(m in complete_rows(), k in 1usize..=3, r in 0usize..=3) {
        let inst = Instance::new(m.clone(), k, r, Variant::Any).unwrap();
        let d = solve_any_complete(&m, k, r, &SolverBudget::default());
        check(&inst, &d, naive_complete(&m, k, r, Variant::Any))?;
    }

    #[test]
    fn completion_oracle_matches_exhaustion(seed: u64, n in 2usize..=6, d in 2usize..=6, k in 1usize..=3,
                                            r in 0usize..=2, v in 0usize..3, holes in 0usize..=5) {
        let spec = PlantedSpec {
            n, d, k, r,
            variant: Variant::ALL[v],
            missing: MissingSpec { rows: 1, cols: 2, entries: holes },
        };
        let inst = random_uniform(&spec, seed).unwrap();
        let dec = solve_completion(&inst, &SolverBudget::default());
        check(&inst, &dec, naive_answer(&inst))?;
    }

    #[test]
    fn planted_instances_are_yes(seed: u64, v in 0usize..3, k in 1usize..=3, r in 0usize..=3) {
        let spec = PlantedSpec {
            n: 7, d: 6, k, r,
            variant: Variant::ALL[v],
            missing: MissingSpec { rows: 2, cols: 2, entries: 5 },
        };
        let p = random_planted(&spec, seed).unwrap();
        prop_assert_eq!(verify_solution(&p.instance, &p.witness), Ok(()));
        let dec = solve_completion(&p.instance, &SolverBudget::default());
        check(&p.instance, &dec, true)?;
    }
}

#[test]
fn completions_count_up_from_zero() {
    let listed: Vec<String> = enumerate_completions(&rows(&["??"]), &SolverBudget::default())
        .unwrap()
        .map(|c| c[0].to_string())
        .collect();
    assert_eq!(listed, ["00", "01", "10", "11"]);
}

#[test]
fn completion_budget_is_checked_up_front() {
    let tight = SolverBudget { max_completions: 3, ..SolverBudget::default() };
    assert!(enumerate_completions(&rows(&["??"]), &tight).is_none());
    let inst = Instance::new(rows(&["??", "00"]), 1, 0, Variant::Diam).unwrap();
    assert_eq!(solve_completion(&inst, &tight).answer, Answer::BudgetExhausted);
}

#[test]
fn any_center_between_two_rows() {
    // 000 and 011 share the centers 001 and 010 at r = 1.
    let m = rows(&["000", "011"]);
    let d = solve_any_complete(&m, 1, 1, &SolverBudget::default());
    assert_eq!(d.answer, Answer::Yes);
    let inst = Instance::new(m.clone(), 1, 1, Variant::Any).unwrap();
    assert_eq!(verify_solution(&inst, d.witness.as_ref().unwrap()), Ok(()));
    let center = match &d.witness.unwrap().centers[0] {
        inclust_core::Center::Point(p) => p.to_string(),
        other => panic!("unexpected center {other:?}"),
    };
    assert!(center == "001" || center == "010");
    assert_eq!(solve_any_complete(&m, 1, 0, &SolverBudget::default()).answer, Answer::No);
}

#[test]
fn any_radius_threshold_is_half_the_distance() {
    // Two rows at distance 2r are YES at radius r; distance 2r+1 is NO.
    for r in 1..=3 {
        let far = TriVector::from_bits(&vec![true; 2 * r + 1]);
        let near = TriVector::from_bits(&[vec![true; 2 * r], vec![false]].concat());
        let zero = TriVector::zeros(2 * r + 1);
        let b = SolverBudget::default();
        assert_eq!(solve_any_complete(&[zero.clone(), far], 1, r, &b).answer, Answer::No);
        assert_eq!(solve_any_complete(&[zero, near], 1, r, &b).answer, Answer::Yes);
    }
}

#[test]
fn any_budget_exhausts_on_large_balls() {
    let m = rows(&["0000000000", "1111111111"]);
    let tiny = SolverBudget { max_center_tuples: 10, ..SolverBudget::default() };
    assert_eq!(solve_any_complete(&m, 1, 5, &tiny).answer, Answer::BudgetExhausted);
}
