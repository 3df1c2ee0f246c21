#pragma once

#include "lexfolio/dates.hpp"

#include <Eigen/Dense>

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lexfolio {

// Date-aligned simple-return series. Rows with a gap in any selected asset are
// dropped during loading, so `returns` has no missing cells. The conditioning
// series (a VIX proxy) is optional and may carry NaN on dates it does not
// cover; NaN never leaves the library through reports.
struct ReturnsPanel {
    std::vector<Date> dates;          // strictly increasing, length T
    std::vector<std::string> assets;  // length n
    Eigen::MatrixXd returns;          // T x n
    std::vector<double> conditioning; // empty, or length T with NaN gaps

    Eigen::Index rows() const { return returns.rows(); }
    Eigen::Index cols() const { return returns.cols(); }
    bool has_conditioning() const { return !conditioning.empty(); }
};

struct CovarianceMatrix {
    Eigen::MatrixXd values; // n x n, symmetric, diagonal >= 0
};

enum class PriceFileMode {
    Auto, // long form if the header is exactly date,ticker,adj_close
    Long,
    Wide,
};

struct LoadOptions {
    std::vector<std::string> assets; // empty = every asset in the file
    std::optional<DateRange> range;  // restrict price rows before differencing
    PriceFileMode mode = PriceFileMode::Auto;
    bool values_are_returns = false; // file already holds returns, skip differencing
};

// r_t = p_t / p_{t-1} - 1 for consecutive prices; length is prices.size()-1.
std::vector<double> simple_returns(std::span<const double> prices);

// Loads adjusted closes, inner-joins dates across the selected assets, and
// computes simple returns p_t/p_{t-1} - 1. Throws ParseError on malformed
// input and InsufficientData when fewer than 2 return rows survive alignment.
ReturnsPanel load_panel(const std::filesystem::path& prices_file, const LoadOptions& options);

// Attaches a `date,value` series to matching panel dates (NaN elsewhere).
void attach_conditioning(ReturnsPanel& panel, const std::filesystem::path& series_file);

// Sample covariance with denominator T-1.
CovarianceMatrix covariance(const ReturnsPanel& panel);

// Historical VaR: negated empirical alpha-quantile (linear interpolation
// between order statistics), so a losing tail reports as a positive number.
// Requires at least 20 observations.
double historical_var(std::span<const double> returns, double alpha);

// Row-restriction to a date window; assets unchanged. Throws EmptyWindow.
ReturnsPanel slice(const ReturnsPanel& panel, const DateRange& window);

// Column subset in the given order. Throws DataError when a ticker is absent.
ReturnsPanel select_assets(const ReturnsPanel& panel, const std::vector<std::string>& tickers);

} // namespace lexfolio
