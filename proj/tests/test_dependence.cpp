#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lexfolio/dependence.hpp"
#include "lexfolio/errors.hpp"
#include "lexfolio/rng.hpp"

#include <cmath>

using namespace lexfolio;

namespace {

DependenceSample make_sample(std::vector<double> z, std::vector<double> y, std::vector<double> x) {
    return DependenceSample{std::move(z), std::move(y), std::move(x)};
}

} // namespace

TEST_CASE("average ranks with ties") {
    const auto r = average_ranks(std::vector<double>{3.0, 1.0, 3.0, 2.0});
    CHECK(r == std::vector<double>{3.5, 1.0, 3.5, 2.0});
}

TEST_CASE("T_n three-point fixture matches the hand enumeration") {
    // x = (0,1,2), z = (5,0,4), y = (2,1,3); standardized coordinates give
    // squared joint distances 32/7, 29/7, 23/7, so M = (3,3,2) and N = (2,1,2).
    // Ranks R = (2,1,3): numerator 4 - 3 = 1, denominator 3.
    const auto s = make_sample({5.0, 0.0, 4.0}, {2.0, 1.0, 3.0}, {0.0, 1.0, 2.0});
    const TnResult t = conditional_dependence_tn(s);
    CHECK(t.raw == 1.0 / 3.0);
    CHECK(t.value == 1.0 / 3.0);
}

TEST_CASE("T_n approaches 1 when the metric is the LR itself") {
    Rng rng(1234);
    std::vector<double> z;
    std::vector<double> x;
    for (int i = 0; i < 500; ++i) {
        z.push_back(rng.normal());
        x.push_back(rng.normal());
    }
    const auto s = make_sample(z, z, x);
    CHECK(conditional_dependence_tn(s).value >= 0.9);
}

TEST_CASE("T_n near 0 for independent series") {
    Rng rng(4321);
    std::vector<double> z;
    std::vector<double> y;
    std::vector<double> x;
    for (int i = 0; i < 500; ++i) {
        z.push_back(rng.normal());
        y.push_back(rng.normal());
        x.push_back(rng.normal());
    }
    const auto s = make_sample(z, y, x);
    CHECK(std::abs(conditional_dependence_tn(s).raw) <= 0.15);
}

TEST_CASE("T_n is invariant under strictly increasing transforms of the ranked variable") {
    Rng rng(99);
    for (int rep = 0; rep < 25; ++rep) {
        std::vector<double> z;
        std::vector<double> y;
        std::vector<double> x;
        for (int i = 0; i < 40; ++i) {
            x.push_back(rng.normal());
            z.push_back(rng.normal() + 0.5 * x.back());
            y.push_back(0.8 * z.back() + 0.2 * rng.normal());
        }
        const double base = conditional_dependence_tn(make_sample(z, y, x)).raw;
        std::vector<double> fy(y);
        for (double& v : fy) v = std::exp(3.0 * v) + 7.0;
        const double transformed = conditional_dependence_tn(make_sample(z, fy, x)).raw;
        CHECK(transformed == base);
    }
}

TEST_CASE("T_n clamps the reported value to [0, 1]") {
    Rng rng(7);
    for (int rep = 0; rep < 50; ++rep) {
        std::vector<double> z;
        std::vector<double> y;
        std::vector<double> x;
        for (int i = 0; i < 15; ++i) {
            z.push_back(rng.normal());
            y.push_back(rng.normal());
            x.push_back(rng.normal());
        }
        const TnResult t = conditional_dependence_tn(make_sample(z, y, x));
        CHECK(t.value >= 0.0);
        CHECK(t.value <= 1.0);
    }
}

TEST_CASE("T_n rank-source switch swaps the roles of y and z") {
    const auto s = make_sample({5.0, 0.0, 4.0}, {2.0, 1.0, 3.0}, {0.0, 1.0, 2.0});
    const auto swapped = make_sample({2.0, 1.0, 3.0}, {5.0, 0.0, 4.0}, {0.0, 1.0, 2.0});
    CHECK(conditional_dependence_tn(s, TnRankSource::Lr).raw ==
          conditional_dependence_tn(swapped, TnRankSource::Metric).raw);
}

TEST_CASE("T_n preconditions") {
    CHECK_THROWS_AS(conditional_dependence_tn(make_sample({1, 2}, {1, 2}, {1, 2})),
                    InsufficientData);
    CHECK_THROWS_AS(conditional_dependence_tn(make_sample({1, 2, 3}, {1, 2}, {1, 2, 3})),
                    DimensionMismatch);
    // Constant ranked variable: every rank equals the average, denominator 0.
    CHECK_THROWS_AS(conditional_dependence_tn(make_sample({1, 2, 3}, {5, 5, 5}, {1, 2, 3})),
                    DegenerateDenominator);
}

TEST_CASE("pearson basics") {
    const std::vector<double> a{1.0, 2.0, 3.0};
    CHECK(pearson(a, a) == doctest::Approx(1.0).epsilon(1e-15));
    const std::vector<double> na{-1.0, -2.0, -3.0};
    CHECK(pearson(a, na) == doctest::Approx(-1.0).epsilon(1e-15));
    const std::vector<double> b{1.0, 3.0, 2.0};
    CHECK(pearson(a, b) == doctest::Approx(0.5).epsilon(1e-15));
    const std::vector<double> c{2.0, 2.0, 2.0};
    CHECK_THROWS_AS(pearson(a, c), ConstantSeries);
}

TEST_CASE("pearson affine equivariance") {
    Rng rng(5);
    std::vector<double> a;
    std::vector<double> b;
    for (int i = 0; i < 30; ++i) {
        a.push_back(rng.normal());
        b.push_back(rng.normal() + 0.3 * a.back());
    }
    const double base = pearson(a, b);
    std::vector<double> scaled(b);
    for (double& v : scaled) v = -2.5 * v + 11.0;
    CHECK(pearson(a, scaled) == doctest::Approx(-base).epsilon(1e-12));
}

TEST_CASE("OLS perfect fit") {
    std::vector<double> lr;
    std::vector<double> metric;
    for (int i = 0; i < 10; ++i) {
        lr.push_back(0.1 * i);
        metric.push_back(2.0 + 3.0 * lr.back());
    }
    const RegressionResult r = ols_lr_regression(lr, metric);
    CHECK(r.beta0 == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(r.beta1 == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(r.p_value_beta1 <= 1e-12);
    CHECK(r.r_squared == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("OLS constant response boundary") {
    const std::vector<double> lr{0.1, 0.2, 0.3, 0.4};
    const std::vector<double> metric{5.0, 5.0, 5.0, 5.0};
    const RegressionResult r = ols_lr_regression(lr, metric);
    CHECK(r.beta1 == 0.0);
    CHECK(r.p_value_beta1 == 1.0);
    CHECK(r.r_squared == 0.0);
    CHECK(r.beta0 == 5.0);
}

TEST_CASE("OLS constant regressor throws") {
    const std::vector<double> lr{0.5, 0.5, 0.5};
    const std::vector<double> metric{1.0, 2.0, 3.0};
    CHECK_THROWS_AS(ols_lr_regression(lr, metric), ConstantRegressor);
}

TEST_CASE("OLS matches an independent normal-equations solve") {
    // Fixed 10-point fixture with known noise; solve X'X b = X'y directly.
    Rng rng(31);
    std::vector<double> lr;
    std::vector<double> metric;
    for (int i = 0; i < 10; ++i) {
        lr.push_back(0.2 + 0.05 * i);
        metric.push_back(1.5 - 2.0 * lr.back() + 0.01 * rng.normal());
    }
    double s1 = 10.0;
    double sx = 0.0;
    double sxx = 0.0;
    double sy = 0.0;
    double sxy = 0.0;
    for (int i = 0; i < 10; ++i) {
        sx += lr[static_cast<std::size_t>(i)];
        sxx += lr[static_cast<std::size_t>(i)] * lr[static_cast<std::size_t>(i)];
        sy += metric[static_cast<std::size_t>(i)];
        sxy += lr[static_cast<std::size_t>(i)] * metric[static_cast<std::size_t>(i)];
    }
    const double det = s1 * sxx - sx * sx;
    const double beta0 = (sxx * sy - sx * sxy) / det;
    const double beta1 = (s1 * sxy - sx * sy) / det;

    const RegressionResult r = ols_lr_regression(lr, metric);
    CHECK(std::abs(r.beta0 - beta0) < 1e-9);
    CHECK(std::abs(r.beta1 - beta1) < 1e-9);
    CHECK(r.p_value_beta1 < 0.05);
}

TEST_CASE("beta1 equals pearson * sd(metric) / sd(lr)") {
    Rng rng(77);
    for (int rep = 0; rep < 40; ++rep) {
        std::vector<double> lr;
        std::vector<double> metric;
        for (int i = 0; i < 25; ++i) {
            lr.push_back(rng.uniform() + 0.1);
            metric.push_back(0.4 - 0.8 * lr.back() + 0.05 * rng.normal());
        }
        const RegressionResult r = ols_lr_regression(lr, metric);
        double ml = 0.0;
        double mm = 0.0;
        for (int i = 0; i < 25; ++i) {
            ml += lr[static_cast<std::size_t>(i)];
            mm += metric[static_cast<std::size_t>(i)];
        }
        ml /= 25.0;
        mm /= 25.0;
        double sll = 0.0;
        double smm = 0.0;
        for (int i = 0; i < 25; ++i) {
            sll += (lr[static_cast<std::size_t>(i)] - ml) * (lr[static_cast<std::size_t>(i)] - ml);
            smm += (metric[static_cast<std::size_t>(i)] - mm) * (metric[static_cast<std::size_t>(i)] - mm);
        }
        const double identity = pearson(lr, metric) * std::sqrt(smm / sll);
        CHECK(std::abs(r.beta1 - identity) < 1e-9);
    }
}
