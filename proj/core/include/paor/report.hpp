#pragma once

#include <cstddef>
#include <vector>

namespace paor {

/// Convergence record shared by the stationary and Krylov solvers.
///
/// `iterations` counts solver steps (AOR sweeps, or GMRES inner iterations
/// across all cycles). `restarts` counts GMRES restart events and is zero
/// for stationary solves. `residual_history` holds the true relative
/// residual of the solved system, one entry per iteration, starting with
/// the initial guess. `estimate_history` holds the solver's internal
/// recurrence estimate where one exists (GMRES Givens estimates of the
/// preconditioned relative residual); empty otherwise.
struct SolveReport {
    std::size_t iterations = 0;
    std::size_t restarts = 0;
    double final_relative_residual = 0.0;
    bool converged = false;
    std::vector<double> residual_history;
    std::vector<double> estimate_history;
};

}  // namespace paor
