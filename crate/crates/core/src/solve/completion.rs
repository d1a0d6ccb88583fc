use alloc::vec::Vec;

use super::{any, binomial, solve_any_complete, solve_diam_complete, solve_in_complete, Answer, Decision, SolverBudget};
use crate::instance::{Instance, Variant};
use crate::tri::{Symbol, TriVector};

/// All completions of a matrix. MISSING entries are taken in row-major order
/// and completion `i` writes the binary digits of `i` into them, most
/// significant digit first, so `??` yields `00, 01, 10, 11`.
#[derive(Debug, Clone)]
pub struct Completions {
    rows: Vec<TriVector>,
    slots: Vec<(usize, usize)>,
    next: u64,
    total: u64,
}

impl Completions {
    pub fn total(&self) -> u64 {
        self.total
    }
}

impl Iterator for Completions {
    type Item = Vec<TriVector>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.next >= self.total {
            return None;
        }
        let mut out = self.rows.clone();
        let m = self.slots.len();
        for (j, &(row, col)) in self.slots.iter().enumerate() {
            out[row].set(col, Symbol::from_bit(self.next >> (m - 1 - j) & 1 == 1));
        }
        self.next += 1;
        Some(out)
    }
}

/// Enumerates completions, or `None` when their number exceeds the budget.
pub fn enumerate_completions(rows: &[TriVector], budget: &SolverBudget) -> Option<Completions> {
    let slots: Vec<(usize, usize)> =
        rows.iter().enumerate().flat_map(|(i, v)| v.missing_coords().into_iter().map(move |j| (i, j))).collect();
    if slots.len() >= 64 || (1u64 << slots.len()) > budget.max_completions {
        return None;
    }
    Some(Completions { rows: rows.to_vec(), total: 1 << slots.len(), slots, next: 0 })
}

/// Whether the complete-data solver for this instance fits the center budget.
pub(crate) fn centers_within_budget(inst: &Instance, budget: &SolverBudget) -> bool {
    let n = inst.rows().len();
    let needed = match inst.variant() {
        Variant::In => binomial(n, inst.k().min(n)),
        Variant::Any => any::ball_size(inst.dim(), inst.r()).saturating_mul(n as u128),
        Variant::Diam => 0,
    };
    needed <= u128::from(budget.max_center_tuples)
}

/// Exhaustive oracle: some completion admits a clustering. The witness holds
/// the first successful completion in enumeration order.
pub fn solve_completion(inst: &Instance, budget: &SolverBudget) -> Decision {
    let Some(completions) = enumerate_completions(inst.rows(), budget) else {
        return Decision::exhausted();
    };
    if !centers_within_budget(inst, budget) {
        return Decision::exhausted();
    }
    let (k, r) = (inst.k(), inst.r());
    for rows in completions {
        let d = match inst.variant() {
            Variant::In => solve_in_complete(&rows, k, r),
            Variant::Any => solve_any_complete(&rows, k, r, budget),
            Variant::Diam => solve_diam_complete(&rows, k, r),
        };
        match d.answer {
            Answer::Yes => return d,
            Answer::BudgetExhausted => return Decision::exhausted(),
            Answer::No => {}
        }
    }
    Decision::no()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solution::verify_solution;

    fn rows(s: &[&str]) -> Vec<TriVector> {
        s.iter().map(|x| TriVector::parse(x).unwrap()).collect()
    }

    fn strings(c: Vec<TriVector>) -> Vec<alloc::string::String> {
        c.iter().map(|v| alloc::format!("{v}")).collect()
    }

    #[test]
    fn complete_input_is_its_only_completion() {
        let m = rows(&["01", "10"]);
        let all: Vec<_> = enumerate_completions(&m, &SolverBudget::default()).unwrap().collect();
        assert_eq!(all, [m]);
    }

    #[test]
    fn one_missing_gives_two() {
        let m = rows(&["0?"]);
        assert_eq!(enumerate_completions(&m, &SolverBudget::default()).unwrap().count(), 2);
    }

    #[test]
    fn order_counts_up_in_binary() {
        let got: Vec<_> =
            enumerate_completions(&rows(&["??"]), &SolverBudget::default()).unwrap().map(strings).collect();
        assert_eq!(got, [["00"], ["01"], ["10"], ["11"]]);
    }

    #[test]
    fn budget_is_checked_up_front() {
        let budget = SolverBudget { max_completions: 2, ..SolverBudget::default() };
        assert!(enumerate_completions(&rows(&["??"]), &budget).is_none());
        let inst = Instance::new(rows(&["??"]), 1, 0, Variant::Diam).unwrap();
        assert_eq!(solve_completion(&inst, &budget).answer, Answer::BudgetExhausted);
    }

    #[test]
    fn oracle_witness_verifies() {
        let inst = Instance::new(rows(&["00", "11", "??"]), 1, 1, Variant::In).unwrap();
        let d = solve_completion(&inst, &SolverBudget::default());
        assert_eq!(d.answer, Answer::Yes);
        assert_eq!(verify_solution(&inst, &d.witness.unwrap()), Ok(()));
    }
}
