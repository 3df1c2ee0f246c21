#pragma once

#include <span>
#include <vector>

namespace lexfolio {

// One observation per analysis window: z = lexical ratio, y = traditional
// metric, x = conditioning value (VIX proxy).
struct DependenceSample {
    std::vector<double> z;
    std::vector<double> y;
    std::vector<double> x;
};

// Which variable supplies the ranks R_i in T_n. The construction follows
// Azadkia-Chatterjee: with Metric ranks, M(i) is the nearest neighbour in the
// standardized (conditioning, LR) plane and N(i) the nearest neighbour along
// the conditioning variable alone; Lr swaps the roles of y and z.
enum class TnRankSource { Metric, Lr };

struct TnResult {
    double value = 0; // clamped to [0, 1] for reporting
    double raw = 0;   // unclamped diagnostic
};

//! Conditional dependence coefficient
//!   T_n = sum_i (min{R_i, R_M(i)} - min{R_i, R_N(i)})
//!       / sum_i (R_i - min{R_i, R_N(i)}),
//! with ascending 1-based ranks (ties averaged), nearest neighbours under
//! Euclidean distance on standardized coordinates, and ties broken by lowest
//! index. Throws DegenerateDenominator when the denominator vanishes.
TnResult conditional_dependence_tn(const DependenceSample& sample,
                                   TnRankSource rank_source = TnRankSource::Metric);

// Sample Pearson correlation; throws ConstantSeries if either input is flat.
double pearson(std::span<const double> a, std::span<const double> b);

struct RegressionResult {
    double beta0 = 0;
    double beta1 = 0;
    double p_value_beta1 = 1; // two-sided t-test, N-2 degrees of freedom
    double r_squared = 0;
};

// Least-squares fit of metric = beta0 + beta1 * lr + noise. A constant metric
// yields beta1 = 0, p = 1, R^2 = 0; a constant regressor throws
// ConstantRegressor.
RegressionResult ols_lr_regression(std::span<const double> lr, std::span<const double> metric);

// Average ranks, ascending and 1-based; ties share the mean of their span.
std::vector<double> average_ranks(std::span<const double> values);

} // namespace lexfolio
