use super::{solve_completion, Answer, Decision, SolverBudget};
use crate::instance::Instance;
use crate::kernelize::{kernelize, lift_solution, KernelResult, LiftError};

/// Everything the kernel-first route produced.
#[derive(Debug, Clone)]
pub struct ViaKernel {
    pub decision: Decision,
    pub kernel: KernelResult,
    /// Set when the kernel said YES but its witness could not be lifted; the
    /// decision then carries no witness.
    pub lift_error: Option<LiftError>,
}

/// Kernelize, then run the completion oracle on the kernel and lift its witness.
pub fn solve_via_kernel(inst: &Instance, budget: &SolverBudget) -> Decision {
    solve_via_kernel_report(inst, budget).decision
}

pub fn solve_via_kernel_report(inst: &Instance, budget: &SolverBudget) -> ViaKernel {
    let kernel = kernelize(inst);
    let Some(reduced) = &kernel.reduced else {
        return ViaKernel { decision: Decision::no(), kernel, lift_error: None };
    };
    let inner = solve_completion(reduced, budget);
    if inner.answer != Answer::Yes {
        return ViaKernel { decision: inner, kernel, lift_error: None };
    }
    let witness = inner.witness.as_ref().expect("YES carries a witness");
    match lift_solution(inst, &kernel, witness) {
        Ok(sol) => ViaKernel { decision: Decision::yes(sol), kernel, lift_error: None },
        Err(e) => ViaKernel {
            decision: Decision { answer: Answer::Yes, witness: None },
            kernel,
            lift_error: Some(e),
        },
    }
}
