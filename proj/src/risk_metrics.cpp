#include "lexfolio/risk_metrics.hpp"

#include "lexfolio/errors.hpp"

#include <cmath>

namespace lexfolio {

std::string_view metric_name(MetricKind kind) {
    switch (kind) {
        case MetricKind::Lr: return "lr";
        case MetricKind::Volatility: return "volatility";
        case MetricKind::DrSd: return "dr_sd";
        case MetricKind::DrVar: return "dr_var";
    }
    return "unknown";
}

double portfolio_volatility(const WeightVector& w, const CovarianceMatrix& cov) {
    if (w.size() != cov.values.rows() || cov.values.rows() != cov.values.cols()) {
        throw DimensionMismatch("weights and covariance dimensions disagree");
    }
    const double q = w.dot(cov.values * w);
    return q > 0.0 ? std::sqrt(q) : 0.0;
}

double dr_sd(const WeightVector& w, const CovarianceMatrix& cov) {
    if (w.size() != cov.values.rows()) {
        throw DimensionMismatch("weights and covariance dimensions disagree");
    }
    double weighted_vol = 0.0;
    for (Eigen::Index i = 0; i < w.size(); ++i) {
        const double var = cov.values(i, i);
        weighted_vol += w(i) * std::sqrt(var > 0.0 ? var : 0.0);
    }
    const double pvol = portfolio_volatility(w, cov);
    if (pvol == 0.0) {
        throw ZeroVolatility("portfolio volatility is zero in DR_SD");
    }
    return weighted_vol / pvol;
}

double dr_var(const WeightVector& w, const ReturnsPanel& panel, double alpha) {
    if (w.size() != panel.cols()) {
        throw DimensionMismatch("weights and panel dimensions disagree");
    }
    double denom = 0.0;
    std::vector<double> column(static_cast<std::size_t>(panel.rows()));
    for (Eigen::Index i = 0; i < panel.cols(); ++i) {
        for (Eigen::Index r = 0; r < panel.rows(); ++r) {
            column[static_cast<std::size_t>(r)] = panel.returns(r, i);
        }
        denom += w(i) * historical_var(column, alpha);
    }
    if (denom == 0.0) {
        throw ZeroDenominator("weighted sum of asset VaRs is zero");
    }
    const Eigen::VectorXd portfolio = panel.returns * w;
    std::vector<double> series(portfolio.data(), portfolio.data() + portfolio.size());
    return historical_var(series, alpha) / denom;
}

PerformanceSummary performance_summary(std::span<const double> returns, double risk_free_rate,
                                       int periods_per_year) {
    const std::size_t n = returns.size();
    if (n < 2) throw InsufficientData("performance summary needs at least 2 returns");

    double mean = 0.0;
    for (const double r : returns) mean += r;
    mean /= static_cast<double>(n);

    double ss = 0.0;
    double downside_ss = 0.0;
    for (const double r : returns) {
        ss += (r - mean) * (r - mean);
        const double d = r < 0.0 ? r : 0.0;
        downside_ss += d * d;
    }
    const double p = static_cast<double>(periods_per_year);
    const double sqrt_p = std::sqrt(p);

    PerformanceSummary s;
    s.annualized_return = mean * p;
    s.annualized_volatility = std::sqrt(ss / static_cast<double>(n - 1)) * sqrt_p;
    s.downside_volatility = std::sqrt(downside_ss / static_cast<double>(n)) * sqrt_p;
    if (s.annualized_volatility == 0.0) {
        throw ZeroVolatility("constant return series, Sharpe ratio undefined");
    }
    if (s.downside_volatility == 0.0) {
        throw ZeroVolatility("no negative returns, Sortino ratio undefined");
    }
    const double excess = s.annualized_return - risk_free_rate;
    s.sharpe = excess / s.annualized_volatility;
    s.sortino = excess / s.downside_volatility;
    return s;
}

double coefficient_of_variation(std::span<const double> series) {
    if (series.size() < 2) throw InsufficientData("CV needs at least 2 values");
    double mean = 0.0;
    for (const double v : series) mean += v;
    mean /= static_cast<double>(series.size());
    if (mean == 0.0) throw ZeroMean("CV undefined for zero-mean series");
    double ss = 0.0;
    for (const double v : series) ss += (v - mean) * (v - mean);
    return std::sqrt(ss / static_cast<double>(series.size() - 1)) / mean;
}

} // namespace lexfolio
