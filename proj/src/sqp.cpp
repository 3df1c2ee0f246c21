#include "lexfolio/sqp.hpp"

#include "lexfolio/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace lexfolio {

namespace {

constexpr double kFeasTol = 1e-10;
constexpr double kActiveTol = 1e-9;

Eigen::VectorXd finite_difference_gradient(const ObjectiveFn& f, const Eigen::VectorXd& x,
                                           double h) {
    Eigen::VectorXd g(x.size());
    Eigen::VectorXd probe = x;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        const double xi = x(i);
        probe(i) = xi + h;
        const double fp = f(probe);
        probe(i) = xi - h;
        const double fm = f(probe);
        probe(i) = xi;
        g(i) = (fp - fm) / (2.0 * h);
    }
    return g;
}

double constraint_violation(const Eigen::VectorXd& x,
                            const std::vector<LinearConstraint>& equalities,
                            const std::vector<LinearConstraint>& inequalities) {
    double v = 0.0;
    for (const auto& c : equalities) v += std::abs(c.a.dot(x) - c.b);
    for (const auto& c : inequalities) v += std::max(0.0, c.b - c.a.dot(x));
    return v;
}

struct QpSolution {
    Eigen::VectorXd d;
    Eigen::VectorXd lambda_eq;
    Eigen::VectorXd lambda_in; // full-length, zero on inactive constraints
    bool ok = false;
};

// Convex QP  min 1/2 d'Bd + g'd  s.t.  Aeq d = req,  Ain d >= rin,
// solved with a primal active-set method started from the feasible d0.
QpSolution solve_qp(const Eigen::MatrixXd& B, const Eigen::VectorXd& g,
                    const std::vector<LinearConstraint>& eqs, const Eigen::VectorXd& req,
                    const std::vector<LinearConstraint>& ins, const Eigen::VectorXd& rin,
                    const Eigen::VectorXd& d0) {
    const Eigen::Index n = g.size();
    const std::size_t mi = ins.size();

    QpSolution sol;
    sol.d = d0;
    sol.lambda_eq = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(eqs.size()));
    sol.lambda_in = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(mi));

    std::vector<bool> working(mi, false);
    for (std::size_t i = 0; i < mi; ++i) {
        working[i] = ins[i].a.dot(sol.d) - rin(static_cast<Eigen::Index>(i)) <= kActiveTol;
    }

    const int max_qp_iterations = 40 + 12 * static_cast<int>(n + mi);
    for (int it = 0; it < max_qp_iterations; ++it) {
        std::vector<std::size_t> active;
        for (std::size_t i = 0; i < mi; ++i) {
            if (working[i]) active.push_back(i);
        }
        const auto meq = static_cast<Eigen::Index>(eqs.size());
        const auto ma = static_cast<Eigen::Index>(active.size());
        const Eigen::Index dim = n + meq + ma;

        Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(dim, dim);
        Eigen::VectorXd rhs(dim);
        kkt.topLeftCorner(n, n) = B;
        rhs.head(n) = -g;
        for (Eigen::Index r = 0; r < meq; ++r) {
            kkt.block(n + r, 0, 1, n) = eqs[static_cast<std::size_t>(r)].a.transpose();
            kkt.block(0, n + r, n, 1) = eqs[static_cast<std::size_t>(r)].a;
            rhs(n + r) = req(r);
        }
        for (Eigen::Index r = 0; r < ma; ++r) {
            const auto& row = ins[active[static_cast<std::size_t>(r)]].a;
            kkt.block(n + meq + r, 0, 1, n) = row.transpose();
            kkt.block(0, n + meq + r, n, 1) = row;
            rhs(n + meq + r) = rin(static_cast<Eigen::Index>(active[static_cast<std::size_t>(r)]));
        }

        const Eigen::FullPivLU<Eigen::MatrixXd> lu(kkt);
        if (!lu.isInvertible()) {
            // Dependent working set (e.g. uniform mean-return row against the
            // budget row); drop the most recently added constraint and retry.
            if (!active.empty()) {
                working[active.back()] = false;
                continue;
            }
            return sol;
        }
        const Eigen::VectorXd primal_dual = lu.solve(rhs);
        const Eigen::VectorXd d_star = primal_dual.head(n);
        const Eigen::VectorXd p = d_star - sol.d;

        if (p.lpNorm<Eigen::Infinity>() < 1e-12) {
            sol.lambda_eq = primal_dual.segment(n, meq);
            sol.lambda_in.setZero();
            double most_negative = -kActiveTol;
            std::size_t drop = mi;
            for (Eigen::Index r = 0; r < ma; ++r) {
                const double lam = primal_dual(n + meq + r);
                sol.lambda_in(static_cast<Eigen::Index>(active[static_cast<std::size_t>(r)])) = lam;
                if (lam < most_negative) {
                    most_negative = lam;
                    drop = active[static_cast<std::size_t>(r)];
                }
            }
            if (drop == mi) {
                sol.ok = true;
                return sol;
            }
            working[drop] = false;
            continue;
        }

        // Step toward d_star, stopping at the first blocking constraint.
        double alpha = 1.0;
        std::size_t blocking = mi;
        for (std::size_t i = 0; i < mi; ++i) {
            if (working[i]) continue;
            const double ap = ins[i].a.dot(p);
            if (ap >= -1e-14) continue;
            const double slack = ins[i].a.dot(sol.d) - rin(static_cast<Eigen::Index>(i));
            const double a_i = std::max(0.0, slack) / (-ap);
            if (a_i < alpha) {
                alpha = a_i;
                blocking = i;
            }
        }
        sol.d += alpha * p;
        if (blocking != mi) working[blocking] = true;
    }
    return sol; // iteration cap; best effort
}

} // namespace

SqpResult sqp_minimize(const ObjectiveFn& objective, const Eigen::VectorXd& x0,
                       const std::vector<LinearConstraint>& equalities,
                       const std::vector<LinearConstraint>& inequalities,
                       const RepairFn& repair, const SqpOptions& options) {
    const Eigen::Index n = x0.size();
    if (n == 0) throw DimensionMismatch("empty optimization variable");

    Eigen::VectorXd x = repair(x0);
    double fx = objective(x);
    Eigen::VectorXd g = finite_difference_gradient(objective, x, options.fd_step);
    Eigen::MatrixXd B = Eigen::MatrixXd::Identity(n, n);

    SqpResult result;
    result.x = x;
    result.objective = fx;

    double rho = 1.0;
    Eigen::VectorXd req(static_cast<Eigen::Index>(equalities.size()));
    Eigen::VectorXd rin(static_cast<Eigen::Index>(inequalities.size()));

    for (int iter = 1; iter <= options.max_iterations; ++iter) {
        result.iterations = iter;
        for (std::size_t i = 0; i < equalities.size(); ++i) {
            req(static_cast<Eigen::Index>(i)) = equalities[i].b - equalities[i].a.dot(x);
        }
        for (std::size_t i = 0; i < inequalities.size(); ++i) {
            rin(static_cast<Eigen::Index>(i)) = inequalities[i].b - inequalities[i].a.dot(x);
        }

        const QpSolution qp = solve_qp(B, g, equalities, req, inequalities, rin,
                                       Eigen::VectorXd::Zero(n));
        if (!qp.ok) break;

        const double viol = constraint_violation(x, equalities, inequalities);
        const double stationarity = (B * qp.d).lpNorm<Eigen::Infinity>();
        if (stationarity <= options.kkt_tolerance && viol <= options.kkt_tolerance) {
            result.converged = true;
            break;
        }

        double lambda_max = qp.lambda_eq.size() ? qp.lambda_eq.cwiseAbs().maxCoeff() : 0.0;
        if (qp.lambda_in.size()) {
            lambda_max = std::max(lambda_max, qp.lambda_in.cwiseAbs().maxCoeff());
        }
        rho = std::max(rho, 2.0 * lambda_max + 1e-3);

        const double descent = g.dot(qp.d) - rho * viol;
        if (descent > -1e-16) break;

        const double merit0 = fx + rho * viol;
        double alpha = 1.0;
        bool accepted = false;
        Eigen::VectorXd xt;
        double ft = 0.0;
        for (int ls = 0; ls < 48; ++ls) {
            xt = x + alpha * qp.d;
            ft = objective(xt);
            const double merit_t =
                ft + rho * constraint_violation(xt, equalities, inequalities);
            if (merit_t <= merit0 + 1e-4 * alpha * descent) {
                accepted = true;
                break;
            }
            alpha *= 0.5;
        }
        if (!accepted) break;

        const Eigen::VectorXd g_new = finite_difference_gradient(objective, xt, options.fd_step);
        const Eigen::VectorXd s = xt - x;
        const Eigen::VectorXd y = g_new - g;

        // Damped BFGS (Powell) keeps the model positive definite.
        const Eigen::VectorXd Bs = B * s;
        const double sBs = s.dot(Bs);
        const double sy = s.dot(y);
        if (sBs > 1e-16 && s.squaredNorm() > 1e-24) {
            Eigen::VectorXd y_hat = y;
            if (sy < 0.2 * sBs) {
                const double theta = 0.8 * sBs / (sBs - sy);
                y_hat = theta * y + (1.0 - theta) * Bs;
            }
            const double sy_hat = s.dot(y_hat);
            if (sy_hat > 1e-16) {
                B -= (Bs * Bs.transpose()) / sBs;
                B += (y_hat * y_hat.transpose()) / sy_hat;
            }
        }

        x = xt;
        fx = ft;
        g = g_new;
        if (fx <= result.objective) {
            result.x = x;
            result.objective = fx;
        }
    }
    return result;
}

} // namespace lexfolio
