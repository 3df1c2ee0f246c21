#pragma once

#include "lexfolio/lexical.hpp"
#include "lexfolio/market_data.hpp"

#include <span>
#include <string_view>

namespace lexfolio {

enum class MetricKind { Lr, Volatility, DrSd, DrVar };

std::string_view metric_name(MetricKind kind);

struct PerformanceSummary {
    double sharpe = 0;
    double sortino = 0;
    double annualized_return = 0;
    double annualized_volatility = 0;
    double downside_volatility = 0;
};

// sqrt(w' Sigma w); small negative quadratic forms from rounding clamp to 0.
double portfolio_volatility(const WeightVector& w, const CovarianceMatrix& cov);

// Diversification ratio on volatilities: sum_i w_i sigma_i / sqrt(w' Sigma w).
// >= 1 for long-only weights and a PSD covariance.
double dr_sd(const WeightVector& w, const CovarianceMatrix& cov);

// Diversification ratio on historical VaR:
//   VaR_alpha(w'X) / sum_i w_i VaR_alpha(X_i).
// Lower values mean more diversification benefit.
double dr_var(const WeightVector& w, const ReturnsPanel& panel, double alpha);

// Annualized performance statistics of a periodic return series.
//   annualized_return    = mean(r) * P
//   annualized_volatility= sd(r) * sqrt(P)        (sample sd, N-1)
//   downside_volatility  = sqrt(mean(min(r,0)^2)) * sqrt(P)
//   sharpe               = (annualized_return - rf) / annualized_volatility
//   sortino              = (annualized_return - rf) / downside_volatility
// Throws ZeroVolatility when either denominator is zero.
PerformanceSummary performance_summary(std::span<const double> returns, double risk_free_rate,
                                       int periods_per_year);

// Sample standard deviation (N-1) divided by the sample mean.
double coefficient_of_variation(std::span<const double> series);

} // namespace lexfolio
