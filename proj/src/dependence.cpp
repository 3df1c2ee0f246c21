#include "lexfolio/dependence.hpp"

#include "lexfolio/errors.hpp"

#include <boost/math/distributions/students_t.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace lexfolio {

namespace {

void require_finite(std::span<const double> v, const char* name) {
    for (const double x : v) {
        if (!std::isfinite(x)) {
            throw DataError(std::string("non-finite value in ") + name);
        }
    }
}

// Zero-mean unit-variance copy; a constant series maps to all zeros.
std::vector<double> standardize(std::span<const double> v) {
    const std::size_t n = v.size();
    double mean = 0.0;
    for (const double x : v) mean += x;
    mean /= static_cast<double>(n);
    double ss = 0.0;
    for (const double x : v) ss += (x - mean) * (x - mean);
    const double sd = std::sqrt(ss / static_cast<double>(n - 1));
    std::vector<double> out(n, 0.0);
    if (sd > 0.0) {
        for (std::size_t i = 0; i < n; ++i) out[i] = (v[i] - mean) / sd;
    }
    return out;
}

} // namespace

std::vector<double> average_ranks(std::span<const double> values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<double> ranks(n, 0.0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
        const double avg = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = avg;
        i = j + 1;
    }
    return ranks;
}

TnResult conditional_dependence_tn(const DependenceSample& sample, TnRankSource rank_source) {
    const std::size_t n = sample.y.size();
    if (sample.z.size() != n || sample.x.size() != n) {
        throw DimensionMismatch("dependence sample lengths differ");
    }
    if (n < 3) throw InsufficientData("T_n needs at least 3 observations");
    require_finite(sample.z, "z");
    require_finite(sample.y, "y");
    require_finite(sample.x, "x");

    // Ranked variable and joint-plane variable per the configured role split.
    const std::vector<double>& ranked = rank_source == TnRankSource::Metric ? sample.y : sample.z;
    const std::vector<double>& joint = rank_source == TnRankSource::Metric ? sample.z : sample.y;

    const std::vector<double> ranks = average_ranks(ranked);
    const std::vector<double> xs = standardize(sample.x);
    const std::vector<double> zs = standardize(joint);

    double numerator = 0.0;
    double denominator = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t m_idx = n;
        std::size_t n_idx = n;
        double best_joint = 0.0;
        double best_cond = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            const double dx = xs[i] - xs[j];
            const double dz = zs[i] - zs[j];
            const double d_joint = dx * dx + dz * dz;
            const double d_cond = dx * dx;
            if (m_idx == n || d_joint < best_joint) {
                m_idx = j;
                best_joint = d_joint;
            }
            if (n_idx == n || d_cond < best_cond) {
                n_idx = j;
                best_cond = d_cond;
            }
        }
        numerator += std::min(ranks[i], ranks[m_idx]) - std::min(ranks[i], ranks[n_idx]);
        denominator += ranks[i] - std::min(ranks[i], ranks[n_idx]);
    }
    if (denominator == 0.0) {
        throw DegenerateDenominator("T_n denominator is zero");
    }
    TnResult result;
    result.raw = numerator / denominator;
    result.value = std::clamp(result.raw, 0.0, 1.0);
    return result;
}

double pearson(std::span<const double> a, std::span<const double> b) {
    const std::size_t n = a.size();
    if (b.size() != n) throw DimensionMismatch("series lengths differ");
    if (n < 2) throw InsufficientData("correlation needs at least 2 points");
    double ma = 0.0;
    double mb = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        ma += a[i];
        mb += b[i];
    }
    ma /= static_cast<double>(n);
    mb /= static_cast<double>(n);
    double saa = 0.0;
    double sbb = 0.0;
    double sab = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        saa += (a[i] - ma) * (a[i] - ma);
        sbb += (b[i] - mb) * (b[i] - mb);
        sab += (a[i] - ma) * (b[i] - mb);
    }
    if (saa == 0.0 || sbb == 0.0) {
        throw ConstantSeries("Pearson correlation undefined for a constant series");
    }
    return sab / std::sqrt(saa * sbb);
}

RegressionResult ols_lr_regression(std::span<const double> lr, std::span<const double> metric) {
    const std::size_t n = lr.size();
    if (metric.size() != n) throw DimensionMismatch("series lengths differ");
    if (n < 3) throw InsufficientData("regression needs at least 3 points");

    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += lr[i];
        my += metric[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);

    double sxx = 0.0;
    double sxy = 0.0;
    double syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (lr[i] - mx) * (lr[i] - mx);
        sxy += (lr[i] - mx) * (metric[i] - my);
        syy += (metric[i] - my) * (metric[i] - my);
    }
    if (sxx == 0.0) {
        throw ConstantRegressor("regressor series is constant");
    }

    RegressionResult r;
    if (syy == 0.0) {
        // Constant response: flat fit with nothing to explain.
        r.beta0 = my;
        r.beta1 = 0.0;
        r.p_value_beta1 = 1.0;
        r.r_squared = 0.0;
        return r;
    }

    r.beta1 = sxy / sxx;
    r.beta0 = my - r.beta1 * mx;

    double ssr = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double e = metric[i] - (r.beta0 + r.beta1 * lr[i]);
        ssr += e * e;
    }
    const double dof = static_cast<double>(n - 2);
    const double sigma2 = ssr / dof;
    if (sigma2 <= 0.0) {
        r.p_value_beta1 = 0.0;
        r.r_squared = 1.0;
        return r;
    }
    const double se = std::sqrt(sigma2 / sxx);
    const double t = r.beta1 / se;
    const boost::math::students_t_distribution<double> dist(dof);
    r.p_value_beta1 = 2.0 * boost::math::cdf(dist, -std::abs(t));
    r.r_squared = std::clamp(1.0 - ssr / syy, 0.0, 1.0);
    return r;
}

} // namespace lexfolio
