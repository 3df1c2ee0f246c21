#include "lexfolio/allocation.hpp"

#include "lexfolio/errors.hpp"

#include <algorithm>
#include <cmath>

namespace lexfolio {

WeightVector sample_dirichlet(const DirichletParams& params, Rng& rng) {
    const Eigen::Index k = params.alpha.size();
    if (k < 1) throw InvalidAlpha("Dirichlet needs at least one component");
    for (Eigen::Index i = 0; i < k; ++i) {
        if (!(params.alpha(i) > 0.0)) {
            throw InvalidAlpha("Dirichlet concentration parameters must be positive");
        }
    }
    WeightVector w(k);
    double total = 0.0;
    for (Eigen::Index i = 0; i < k; ++i) {
        w(i) = rng.gamma(params.alpha(i));
        total += w(i);
    }
    if (total <= 0.0) {
        // Possible only deep in the underflow regime; fall back to uniform.
        w.setConstant(1.0 / static_cast<double>(k));
        return w;
    }
    return w / total;
}

WeightVector sample_dirichlet(const DirichletParams& params, std::uint64_t seed) {
    Rng rng(seed);
    return sample_dirichlet(params, rng);
}

namespace {

// Clamp-and-renormalize projection used when evaluating the objective at
// finite-difference probe points slightly off the simplex.
Eigen::VectorXd project_for_evaluation(const Eigen::VectorXd& w) {
    Eigen::VectorXd p = w.cwiseMax(0.0);
    const double total = p.sum();
    if (total <= 0.0) {
        throw ZeroMass("weight projection collapsed to zero");
    }
    return p / total;
}

ObjectiveFn make_objective(const OptimizationProblem& problem) {
    switch (problem.objective) {
        case MetricKind::Lr: {
            if (problem.counts == nullptr || problem.vocab_m < 2) {
                throw DimensionMismatch("LR objective needs a term-count matrix and m >= 2");
            }
            const TermCountMatrix* counts = problem.counts;
            const int m = problem.vocab_m;
            return [counts, m](const Eigen::VectorXd& w) {
                return -lexical_ratio(*counts, project_for_evaluation(w), m);
            };
        }
        case MetricKind::Volatility: {
            if (problem.cov == nullptr) {
                throw DimensionMismatch("volatility objective needs a covariance matrix");
            }
            const CovarianceMatrix* cov = problem.cov;
            return [cov](const Eigen::VectorXd& w) {
                return portfolio_volatility(project_for_evaluation(w), *cov);
            };
        }
        case MetricKind::DrSd: {
            if (problem.cov == nullptr) {
                throw DimensionMismatch("DR_SD objective needs a covariance matrix");
            }
            const CovarianceMatrix* cov = problem.cov;
            const double sign = problem.maximize_dr_sd ? -1.0 : 1.0;
            return [cov, sign](const Eigen::VectorXd& w) {
                return sign * dr_sd(project_for_evaluation(w), *cov);
            };
        }
        case MetricKind::DrVar: {
            if (problem.panel == nullptr) {
                throw DimensionMismatch("DR_VaR objective needs a returns panel");
            }
            const ReturnsPanel* panel = problem.panel;
            const double alpha = problem.var_alpha;
            return [panel, alpha](const Eigen::VectorXd& w) {
                return dr_var(project_for_evaluation(w), *panel, alpha);
            };
        }
    }
    throw InternalError("unhandled objective kind");
}

} // namespace

double objective_value(const OptimizationProblem& problem, const WeightVector& w) {
    return make_objective(problem)(w);
}

OptimizationOutcome optimize(const OptimizationProblem& problem, const WeightVector& initial) {
    const Eigen::Index n = problem.mean_returns.size();
    if (n < 1 || initial.size() != n) {
        throw DimensionMismatch("initial weights and mean returns disagree");
    }
    const double mu_max = problem.mean_returns.maxCoeff();
    if (mu_max < problem.return_target) {
        throw Infeasible("no simplex portfolio reaches the return target");
    }

    const ObjectiveFn f = make_objective(problem);

    std::vector<LinearConstraint> equalities;
    equalities.push_back({Eigen::VectorXd::Ones(n), 1.0});
    std::vector<LinearConstraint> inequalities;
    for (Eigen::Index i = 0; i < n; ++i) {
        Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
        e(i) = 1.0;
        inequalities.push_back({std::move(e), 0.0});
    }
    inequalities.push_back({problem.mean_returns, problem.return_target});

    const Eigen::VectorXd mu = problem.mean_returns;
    const double target = problem.return_target;
    Eigen::Index best_asset = 0;
    mu.maxCoeff(&best_asset);
    const RepairFn repair = [mu, target, best_asset](const Eigen::VectorXd& w) {
        Eigen::VectorXd p = w.cwiseMax(0.0);
        const double total = p.sum();
        p = total > 0.0 ? Eigen::VectorXd(p / total)
                        : Eigen::VectorXd(Eigen::VectorXd::Constant(
                              w.size(), 1.0 / static_cast<double>(w.size())));
        const double achieved = mu.dot(p);
        if (achieved >= target) return p;
        // Blend toward the highest-mean corner until the target binds.
        const double corner = mu(best_asset);
        const double theta = std::min(1.0, (target - achieved) / (corner - achieved));
        Eigen::VectorXd blended = (1.0 - theta) * p;
        blended(best_asset) += theta;
        return blended;
    };

    SqpOptions options;
    options.fd_step = problem.objective == MetricKind::DrVar ? 1e-4 : 1e-6;

    const SqpResult r = sqp_minimize(f, initial, equalities, inequalities, repair, options);

    OptimizationOutcome outcome;
    outcome.weights = r.x;
    outcome.objective_value = r.objective;
    outcome.converged = r.converged;
    outcome.iterations = r.iterations;
    return outcome;
}

MultiTargetResult optimize_all_targets(const OptimizationProblem& problem_template,
                                       const std::vector<double>& targets,
                                       const DirichletParams& initial_params, Rng& rng) {
    if (targets.empty()) throw ConfigError("no return targets given");
    MultiTargetResult result;
    for (const double target : targets) {
        const WeightVector initial = sample_dirichlet(initial_params, rng);
        OptimizationProblem problem = problem_template;
        problem.return_target = target;
        try {
            result.outcomes.push_back({target, optimize(problem, initial)});
        } catch (const Infeasible&) {
            result.infeasible_targets.push_back(target);
        }
    }
    if (result.outcomes.empty()) {
        throw AllInfeasible("every return target is infeasible for this window");
    }
    return result;
}

} // namespace lexfolio
