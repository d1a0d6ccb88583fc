mod common;

use common::{partitions, plain_distance, rows};
use inclust_core::gen::{
    clique_cover_instance, closest_string_instance, coloring_completion_instance, dominating_set_instance,
    incidence_reduction, random_planted, random_uniform, triangle_partition_instance, Graph, MissingSpec, PlantedSpec,
};
use inclust_core::solve::{solve_completion, solve_via_kernel, Answer, SolverBudget};
use inclust_core::{covering_certificate, verify_solution, Instance, Symbol, TriVector, Variant};
use proptest::prelude::*;

fn three_colorable(g: &Graph) -> bool {
    let n = g.vertex_count();
    (0..3usize.pow(n as u32)).any(|mut code| {
        let color: Vec<usize> = (0..n)
            .map(|_| {
                let c = code % 3;
                code /= 3;
                c
            })
            .collect();
        g.edges().iter().all(|&(a, b)| color[a] != color[b])
    })
}

/// r = 0 with MISSING: a block works iff no column holds both a 0 and a 1.
fn zero_radius_partition(inst: &Instance) -> bool {
    let m = inst.rows();
    partitions(m.len(), inst.k()).iter().any(|p| {
        p.iter().all(|block| {
            (0..inst.dim()).all(|j| {
                let seen: Vec<Symbol> = block.iter().map(|&i| m[i].get(j)).filter(|&s| s != Symbol::Missing).collect();
                seen.windows(2).all(|w| w[0] == w[1])
            })
        })
    })
}

fn closest_string_exists(strings: &[TriVector], r: usize) -> bool {
    let len = strings[0].dim();
    (0..1u32 << len).any(|x| {
        let c = TriVector::from_bits(&(0..len).map(|i| x >> i & 1 == 1).collect::<Vec<_>>());
        strings.iter().all(|s| plain_distance(&c, s) <= r)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn incidence_distances_match_closed_form(n in 1usize..=10, p in 0.0f64..=1.0, seed: u64, pad_seed: u64) {
        let g = Graph::random(n, p, seed);
        let pads: Vec<usize> = (0..n).map(|i| (pad_seed as usize >> (i % 32)) % n.max(1)).collect();
        let m = incidence_reduction(&g, &pads).unwrap();
        for i in 0..n {
            for j in 0..n {
                let expected = if i == j {
                    0
                } else {
                    g.degree(i) + pads[i] + g.degree(j) + pads[j] - 2 * usize::from(g.adjacent(i, j))
                };
                prop_assert_eq!(m[i].delta(&m[j]), expected);
            }
        }
    }

    #[test]
    fn coloring_reduction_matches_brute_force(n in 1usize..=7, p in 0.0f64..=1.0, seed: u64, v in 0usize..3) {
        let g = Graph::random(n, p, seed);
        let inst = coloring_completion_instance(&g, Variant::ALL[v]).unwrap();
        let colorable = three_colorable(&g);
        prop_assert_eq!(g.is_colorable(3), colorable);
        prop_assert_eq!(zero_radius_partition(&inst), colorable);
        if inst.missing_count() <= 12 {
            let d = solve_completion(&inst, &SolverBudget::default());
            prop_assert_eq!(d.answer == Answer::Yes, colorable);
        }
    }

    #[test]
    fn closest_string_matches_brute_force(len in 1usize..=10, count in 1usize..=5, r in 0usize..=4, seed: u64) {
        let strings: Vec<TriVector> = (0..count)
            .map(|s| {
                let x = seed.rotate_left(13 * s as u32) ^ (s as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15);
                TriVector::from_bits(&(0..len).map(|i| x >> i & 1 == 1).collect::<Vec<_>>())
            })
            .collect();
        let inst = closest_string_instance(&strings, r).unwrap();
        let d = solve_completion(&inst, &SolverBudget::default());
        prop_assert_eq!(d.answer == Answer::Yes, closest_string_exists(&strings, r));
    }

    #[test]
    fn planted_generation_is_seeded_and_sound(seed: u64, v in 0usize..3, k in 1usize..=3, r in 0usize..=3,
                                              rows_m in 0usize..=2, cols_m in 0usize..=2, entries in 0usize..=6) {
        let spec = PlantedSpec {
            n: 8, d: 8, k, r,
            variant: Variant::ALL[v],
            missing: MissingSpec { rows: rows_m, cols: cols_m, entries },
        };
        let a = random_planted(&spec, seed).unwrap();
        prop_assert_eq!(&a, &random_planted(&spec, seed).unwrap());
        prop_assert_eq!(verify_solution(&a.instance, &a.witness), Ok(()));
        prop_assert!(covering_certificate(a.instance.rows()).value() <= rows_m + cols_m);
        prop_assert!(a.instance.missing_count() <= entries);
        let u = random_uniform(&spec, seed).unwrap();
        prop_assert_eq!(&u, &random_uniform(&spec, seed).unwrap());
        prop_assert!(covering_certificate(u.rows()).value() <= rows_m + cols_m);
    }
}

#[test]
fn incidence_examples() {
    let k3 = incidence_reduction(&Graph::complete(3), &[0, 0, 0]).unwrap();
    assert!(k3.iter().all(|a| k3.iter().all(|b| a == b || a.delta(b) == 2)));

    let rook = Graph::rook_3x3();
    let m = incidence_reduction(&rook, &[0; 9]).unwrap();
    for i in 0..9 {
        for j in i + 1..9 {
            assert_eq!(m[i].delta(&m[j]), if rook.adjacent(i, j) { 6 } else { 8 });
        }
    }

    let c5 = Graph::cycle(5);
    let pads: Vec<usize> = (0..5).map(|v| 4 - c5.degree(v)).collect();
    let m = incidence_reduction(&c5, &pads).unwrap();
    for i in 0..5 {
        for j in i + 1..5 {
            assert_eq!(m[i].delta(&m[j]), if c5.adjacent(i, j) { 6 } else { 8 });
        }
    }
}

#[test]
fn cubic_graph_distances() {
    // K4 is 3-regular: every pair adjacent at 4. The prism adds nonadjacent pairs at 6.
    let prism = Graph::new(6, vec![(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]).unwrap();
    let m = incidence_reduction(&prism, &[0; 6]).unwrap();
    for i in 0..6 {
        for j in i + 1..6 {
            assert_eq!(m[i].delta(&m[j]), if prism.adjacent(i, j) { 4 } else { 6 });
        }
    }
}

#[test]
fn coloring_ground_truths() {
    let b = SolverBudget::default();
    for v in Variant::ALL {
        let k3 = coloring_completion_instance(&Graph::complete(3), v).unwrap();
        assert_eq!((k3.k(), k3.r()), (3, 0));
        assert_eq!(solve_completion(&k3, &b).answer, Answer::Yes);
        let k4 = coloring_completion_instance(&Graph::complete(4), v).unwrap();
        assert_eq!(solve_completion(&k4, &b).answer, Answer::No);
        let empty = coloring_completion_instance(&Graph::new(4, vec![]).unwrap(), v).unwrap();
        assert_eq!(empty.dim(), 1);
        assert_eq!(solve_completion(&empty, &b).answer, Answer::Yes);
    }
}

#[test]
fn closest_string_ground_truths() {
    let b = SolverBudget::default();
    let no = closest_string_instance(&rows(&["000", "111"]), 1).unwrap();
    assert_eq!(solve_completion(&no, &b).answer, Answer::No);
    let yes = closest_string_instance(&rows(&["00", "11"]), 1).unwrap();
    assert_eq!(solve_completion(&yes, &b).answer, Answer::Yes);
    let single = closest_string_instance(&rows(&["0110"]), 0).unwrap();
    assert_eq!(solve_completion(&single, &b).answer, Answer::Yes);
}

#[test]
fn graph_problem_instances() {
    let b = SolverBudget::default();
    let c4 = Graph::cycle(4);
    assert_eq!(solve_via_kernel(&dominating_set_instance(&c4, 2).unwrap(), &b).answer, Answer::Yes);
    assert_eq!(solve_via_kernel(&dominating_set_instance(&c4, 1).unwrap(), &b).answer, Answer::No);
    assert_eq!(solve_via_kernel(&clique_cover_instance(&c4, 2).unwrap(), &b).answer, Answer::Yes);
    assert_eq!(solve_via_kernel(&clique_cover_instance(&c4, 1).unwrap(), &b).answer, Answer::No);

    let rook = triangle_partition_instance(&Graph::rook_3x3()).unwrap();
    assert_eq!((rook.k(), rook.r()), (3, 6));
    assert_eq!(solve_via_kernel(&rook, &b).answer, Answer::Yes);
    // A 6-cycle is 2-regular and triangle-free.
    let c6 = triangle_partition_instance(&Graph::cycle(6)).unwrap();
    assert_eq!(solve_via_kernel(&c6, &b).answer, Answer::No);
}

#[test]
fn identical_rows_are_one_cluster() {
    let spec = PlantedSpec { n: 5, d: 4, k: 1, r: 0, variant: Variant::In, missing: MissingSpec::default() };
    let p = random_planted(&spec, 7).unwrap();
    assert!(p.instance.rows().iter().all(|v| v == &p.instance.rows()[0]));
    assert_eq!(solve_completion(&p.instance, &SolverBudget::default()).answer, Answer::Yes);
}
