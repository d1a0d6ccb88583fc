use alloc::vec::Vec;

use super::Decision;
use crate::compat::ThresholdGraph;
use crate::solution::ClusteringSolution;
use crate::tri::TriVector;

/// Diam on complete rows: partition the `δ ≤ r` graph into at most `k`
/// cliques. Components are covered independently, each with the fewest
/// cliques found by branch and bound.
pub fn solve_diam_complete(rows: &[TriVector], k: usize, r: usize) -> Decision {
    let graph = ThresholdGraph::build(rows, r);
    let mut clusters = Vec::new();
    let components = graph.components();
    if components.len() > k {
        return Decision::no();
    }
    let mut budget = k.saturating_sub(components.len());
    for component in &components {
        // Every component needs one clique; spare cliques go where needed.
        let mut found = None;
        for limit in 1..=1 + budget {
            if let Some(cover) = clique_cover(&graph, component, limit) {
                budget -= cover.len() - 1;
                found = Some(cover);
                break;
            }
        }
        match found {
            Some(cover) => clusters.extend(cover),
            None => return Decision::no(),
        }
    }
    Decision::yes(ClusteringSolution { completion: rows.to_vec(), clusters, centers: Vec::new() })
}

/// A cover of `vertices` by at most `limit` cliques, if one exists.
fn clique_cover(graph: &ThresholdGraph, vertices: &[usize], limit: usize) -> Option<Vec<Vec<usize>>> {
    let mut order = vertices.to_vec();
    order.sort_by_key(|&v| (core::cmp::Reverse(graph.neighbors(v).len()), v));
    if greedy_independent(graph, &order) > limit {
        return None;
    }
    let mut cliques: Vec<Vec<usize>> = Vec::new();
    if assign(graph, &order, 0, limit, &mut cliques) {
        for c in &mut cliques {
            c.sort_unstable();
        }
        Some(cliques)
    } else {
        None
    }
}

/// Size of a greedily built independent set: a lower bound on the cliques needed.
fn greedy_independent(graph: &ThresholdGraph, order: &[usize]) -> usize {
    let mut chosen: Vec<usize> = Vec::new();
    for &v in order.iter().rev() {
        if chosen.iter().all(|&u| !graph.has_edge(u, v)) {
            chosen.push(v);
        }
    }
    chosen.len()
}

fn assign(graph: &ThresholdGraph, order: &[usize], next: usize, limit: usize, cliques: &mut Vec<Vec<usize>>) -> bool {
    let Some(&v) = order.get(next) else {
        return true;
    };
    for i in 0..cliques.len() {
        if cliques[i].iter().all(|&u| graph.has_edge(u, v)) {
            cliques[i].push(v);
            if assign(graph, order, next + 1, limit, cliques) {
                return true;
            }
            cliques[i].pop();
        }
    }
    if cliques.len() < limit {
        cliques.push(alloc::vec![v]);
        if assign(graph, order, next + 1, limit, cliques) {
            return true;
        }
        cliques.pop();
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::{Instance, Variant};
    use crate::solution::verify_solution;
    use crate::solve::Answer;

    fn rows(s: &[&str]) -> Vec<TriVector> {
        s.iter().map(|x| TriVector::parse(x).unwrap()).collect()
    }

    #[test]
    fn close_rows_fit_one_cluster() {
        let m = rows(&["000", "001", "011"]);
        let d = solve_diam_complete(&m, 1, 2);
        assert_eq!(d.answer, Answer::Yes);
        let inst = Instance::new(m, 1, 2, Variant::Diam).unwrap();
        assert_eq!(verify_solution(&inst, &d.witness.unwrap()), Ok(()));
    }

    #[test]
    fn opposite_pair_is_no() {
        assert_eq!(solve_diam_complete(&rows(&["00", "11"]), 1, 1).answer, Answer::No);
    }

    #[test]
    fn path_needs_two_cliques() {
        // 000 - 001 - 011 - 111 with r = 1: a path on four vertices.
        let m = rows(&["000", "001", "011", "111"]);
        assert_eq!(solve_diam_complete(&m, 1, 1).answer, Answer::No);
        let d = solve_diam_complete(&m, 2, 1);
        let inst = Instance::new(m, 2, 1, Variant::Diam).unwrap();
        assert_eq!(verify_solution(&inst, &d.witness.unwrap()), Ok(()));
    }
}
