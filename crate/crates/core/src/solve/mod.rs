//! Exact solvers for complete data, the completion-enumeration oracle and
//! the kernel-first route.

mod any;
mod completion;
mod diam;
mod in_center;
mod via_kernel;

use core::time::Duration;

use serde::{Deserialize, Serialize};

pub use any::{ball_size, solve_any_complete, solve_any_with_pool};
pub use completion::{enumerate_completions, solve_completion, Completions};
pub use diam::solve_diam_complete;
pub use in_center::{solve_in_complete, solve_in_complete_counted, InSearchStats};
pub use via_kernel::{solve_via_kernel, solve_via_kernel_report, ViaKernel};

use crate::solution::ClusteringSolution;

/// Caps on exhaustive search. Exceeding a cap yields
/// [`Answer::BudgetExhausted`], never a wrong answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverBudget {
    /// Completions the oracle may enumerate.
    pub max_completions: u64,
    /// Center subsets (In) or candidate centers (Any) the solvers may consider.
    pub max_center_tuples: u64,
    /// Advisory only; solvers do not read a clock.
    pub time_hint: Option<Duration>,
}

impl Default for SolverBudget {
    fn default() -> Self {
        SolverBudget { max_completions: 1 << 20, max_center_tuples: 1 << 22, time_hint: None }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Answer {
    Yes,
    No,
    BudgetExhausted,
}

impl Answer {
    pub fn name(self) -> &'static str {
        match self {
            Answer::Yes => "YES",
            Answer::No => "NO",
            Answer::BudgetExhausted => "BUDGET_EXHAUSTED",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decision {
    pub answer: Answer,
    pub witness: Option<ClusteringSolution>,
}

impl Decision {
    pub fn yes(witness: ClusteringSolution) -> Self {
        Decision { answer: Answer::Yes, witness: Some(witness) }
    }

    pub fn no() -> Self {
        Decision { answer: Answer::No, witness: None }
    }

    pub fn exhausted() -> Self {
        Decision { answer: Answer::BudgetExhausted, witness: None }
    }
}

/// `C(n, k)`, saturating.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul((n - i) as u128) {
            Some(x) => x / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::binomial;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(12, 3), 220);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(10, 0), 1);
    }
}
