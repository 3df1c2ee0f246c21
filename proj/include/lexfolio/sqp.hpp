#pragma once

#include <Eigen/Dense>

#include <functional>
#include <vector>

namespace lexfolio {

// a' x = b (equalities) or a' x >= b (inequalities).
struct LinearConstraint {
    Eigen::VectorXd a;
    double b = 0;
};

struct SqpOptions {
    int max_iterations = 200;
    double kkt_tolerance = 1e-8;
    double fd_step = 1e-6; // central-difference step for the objective gradient
};

struct SqpResult {
    Eigen::VectorXd x;
    double objective = 0;
    bool converged = false;
    int iterations = 0;
};

using ObjectiveFn = std::function<double(const Eigen::VectorXd&)>;

// Maps an arbitrary point to one satisfying the constraints; used to start
// from a feasible iterate. Must return a feasible point whenever one exists.
using RepairFn = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;

// Sequential quadratic programming for a nonlinear objective under linear
// constraints: damped-BFGS model of the Lagrangian, an active-set QP for the
// step, and a backtracking line search on the l1 merit function. Gradients
// come from central finite differences. Because every constraint is linear,
// iterates remain feasible once the initial point has been repaired.
SqpResult sqp_minimize(const ObjectiveFn& objective, const Eigen::VectorXd& x0,
                       const std::vector<LinearConstraint>& equalities,
                       const std::vector<LinearConstraint>& inequalities,
                       const RepairFn& repair, const SqpOptions& options = {});

} // namespace lexfolio
