#pragma once

#include "lexfolio/risk_metrics.hpp"
#include "lexfolio/rng.hpp"
#include "lexfolio/sqp.hpp"

#include <optional>
#include <vector>

namespace lexfolio {

struct DirichletParams {
    Eigen::VectorXd alpha; // concentration parameters, all > 0

    static DirichletParams symmetric(Eigen::Index k, double value) {
        DirichletParams p;
        p.alpha = Eigen::VectorXd::Constant(k, value);
        return p;
    }
};

// One draw from Dirichlet(alpha) via normalized Gamma variates; the result is
// non-negative and sums to 1. Deterministic for a given Rng state.
WeightVector sample_dirichlet(const DirichletParams& params, Rng& rng);
WeightVector sample_dirichlet(const DirichletParams& params, std::uint64_t seed);

// min f(w)  s.t.  sum w = 1, w >= 0, w' mu >= return_target, where f is the
// chosen metric (LR enters negated so that minimization maximizes it).
struct OptimizationProblem {
    MetricKind objective = MetricKind::Volatility;
    Eigen::VectorXd mean_returns; // annualized expected returns, length n
    double return_target = 0.0;   // annual rate

    // Objective context; only the pieces the chosen metric needs are read.
    const CovarianceMatrix* cov = nullptr;     // Volatility, DrSd
    const ReturnsPanel* panel = nullptr;       // DrVar (training slice)
    double var_alpha = 0.05;                   // DrVar
    const TermCountMatrix* counts = nullptr;   // Lr
    int vocab_m = 0;                           // Lr

    // Eq. 2's DR_SD grows with diversification; the experiments minimize it
    // as given, but the direction can be flipped here.
    bool maximize_dr_sd = false;
};

struct OptimizationOutcome {
    WeightVector weights;
    double objective_value = 0; // in the minimized orientation (-LR for Lr)
    bool converged = false;
    int iterations = 0;
};

// Local SQP solve from `initial`. Throws Infeasible when no simplex point can
// reach the return target (max_i mu_i < target). A hit iteration cap returns
// converged = false with the best iterate.
OptimizationOutcome optimize(const OptimizationProblem& problem, const WeightVector& initial);

// Objective value (minimized orientation) at a given weight vector; the same
// function the optimizer sees, including the simplex re-projection.
double objective_value(const OptimizationProblem& problem, const WeightVector& w);

struct TargetOutcome {
    double target = 0;
    OptimizationOutcome outcome;
};

struct MultiTargetResult {
    std::vector<TargetOutcome> outcomes;
    std::vector<double> infeasible_targets;
};

// Runs optimize once per return target, each from a fresh Dirichlet initial
// drawn from `rng`. Infeasible targets are recorded and skipped; throws
// AllInfeasible when none admits a solution.
MultiTargetResult optimize_all_targets(const OptimizationProblem& problem_template,
                                       const std::vector<double>& targets,
                                       const DirichletParams& initial_params, Rng& rng);

} // namespace lexfolio
