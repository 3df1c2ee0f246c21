#include "lexfolio/market_data.hpp"

#include "lexfolio/csv.hpp"
#include "lexfolio/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <unordered_map>

namespace lexfolio {

namespace {

double parse_number(const std::string& s, const std::string& where) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size() || !std::isfinite(v)) {
            throw ParseError("bad numeric value '" + s + "' in " + where);
        }
        return v;
    } catch (const std::exception&) {
        throw ParseError("bad numeric value '" + s + "' in " + where);
    }
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

} // namespace

ReturnsPanel load_panel(const std::filesystem::path& prices_file, const LoadOptions& options) {
    const CsvTable table = read_csv(prices_file);
    if (table.header.empty() || lower(table.header[0]) != "date") {
        throw ParseError(prices_file.string() + ": first header column must be 'date'");
    }

    PriceFileMode mode = options.mode;
    if (mode == PriceFileMode::Auto) {
        const bool is_long = table.header.size() == 3 && lower(table.header[1]) == "ticker" &&
                             lower(table.header[2]) == "adj_close";
        mode = is_long ? PriceFileMode::Long : PriceFileMode::Wide;
    }

    // date -> asset -> value, with dates kept sorted.
    std::map<Date, std::unordered_map<std::string, double>> cells;
    std::vector<std::string> file_assets;
    std::set<std::string> seen;

    if (mode == PriceFileMode::Long) {
        if (table.header.size() < 3) {
            throw ParseError(prices_file.string() + ": long form needs date,ticker,adj_close");
        }
        for (const auto& row : table.rows) {
            if (row.size() < 3) throw ParseError(prices_file.string() + ": short row");
            const Date d = parse_date(row[0]);
            if (options.range && !options.range->contains(d)) continue;
            if (row[2].empty()) continue;
            cells[d][row[1]] = parse_number(row[2], prices_file.string());
            if (seen.insert(row[1]).second) file_assets.push_back(row[1]);
        }
        std::sort(file_assets.begin(), file_assets.end());
    } else {
        for (std::size_t c = 1; c < table.header.size(); ++c) {
            file_assets.push_back(table.header[c]);
        }
        for (const auto& row : table.rows) {
            if (row.empty()) continue;
            const Date d = parse_date(row[0]);
            if (options.range && !options.range->contains(d)) continue;
            auto& by_asset = cells[d];
            for (std::size_t c = 1; c < table.header.size() && c < row.size(); ++c) {
                if (row[c].empty()) continue; // gap; the whole date drops in the join
                by_asset[table.header[c]] = parse_number(row[c], prices_file.string());
            }
        }
    }

    const std::vector<std::string>& assets =
        options.assets.empty() ? file_assets : options.assets;
    if (assets.empty()) {
        throw ParseError(prices_file.string() + ": no assets found");
    }
    for (const auto& a : assets) {
        if (std::find(file_assets.begin(), file_assets.end(), a) == file_assets.end()) {
            throw DataError("asset '" + a + "' not present in " + prices_file.string());
        }
    }

    // Inner join: keep only dates where every selected asset has a value.
    std::vector<Date> joined_dates;
    std::vector<std::vector<double>> joined_values;
    for (const auto& [d, by_asset] : cells) {
        std::vector<double> row;
        row.reserve(assets.size());
        bool complete = true;
        for (const auto& a : assets) {
            const auto it = by_asset.find(a);
            if (it == by_asset.end()) {
                complete = false;
                break;
            }
            row.push_back(it->second);
        }
        if (complete) {
            joined_dates.push_back(d);
            joined_values.push_back(std::move(row));
        }
    }

    ReturnsPanel panel;
    panel.assets = assets;
    const auto n = static_cast<Eigen::Index>(assets.size());

    if (options.values_are_returns) {
        const auto t = static_cast<Eigen::Index>(joined_dates.size());
        if (t < 2) throw InsufficientData("fewer than 2 aligned return rows");
        panel.dates = std::move(joined_dates);
        panel.returns.resize(t, n);
        for (Eigen::Index r = 0; r < t; ++r) {
            for (Eigen::Index c = 0; c < n; ++c) {
                panel.returns(r, c) = joined_values[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            }
        }
        return panel;
    }

    if (joined_dates.size() < 3) {
        throw InsufficientData("fewer than 2 aligned return rows after differencing");
    }
    const auto t = static_cast<Eigen::Index>(joined_dates.size() - 1);
    panel.dates.assign(joined_dates.begin() + 1, joined_dates.end());
    panel.returns.resize(t, n);
    std::vector<double> prices(joined_dates.size());
    for (Eigen::Index c = 0; c < n; ++c) {
        for (std::size_t r = 0; r < joined_dates.size(); ++r) {
            prices[r] = joined_values[r][static_cast<std::size_t>(c)];
        }
        const std::vector<double> rets = simple_returns(prices);
        for (Eigen::Index r = 0; r < t; ++r) {
            panel.returns(r, c) = rets[static_cast<std::size_t>(r)];
        }
    }
    return panel;
}

std::vector<double> simple_returns(std::span<const double> prices) {
    std::vector<double> out;
    if (prices.size() < 2) return out;
    out.reserve(prices.size() - 1);
    for (std::size_t i = 1; i < prices.size(); ++i) {
        if (prices[i - 1] == 0.0) {
            throw DataError("zero price encountered while computing returns");
        }
        out.push_back(prices[i] / prices[i - 1] - 1.0);
    }
    return out;
}

void attach_conditioning(ReturnsPanel& panel, const std::filesystem::path& series_file) {
    const CsvTable table = read_csv(series_file);
    if (table.header.size() < 2 || lower(table.header[0]) != "date") {
        throw ParseError(series_file.string() + ": expected header date,value");
    }
    std::map<Date, double> by_date;
    for (const auto& row : table.rows) {
        if (row.size() < 2) throw ParseError(series_file.string() + ": short row");
        if (row[1].empty()) continue;
        by_date[parse_date(row[0])] = parse_number(row[1], series_file.string());
    }
    panel.conditioning.assign(panel.dates.size(), std::numeric_limits<double>::quiet_NaN());
    for (std::size_t i = 0; i < panel.dates.size(); ++i) {
        const auto it = by_date.find(panel.dates[i]);
        if (it != by_date.end()) panel.conditioning[i] = it->second;
    }
}

CovarianceMatrix covariance(const ReturnsPanel& panel) {
    const Eigen::Index t = panel.rows();
    const Eigen::Index n = panel.cols();
    if (t < 2) throw InsufficientData("covariance needs at least 2 rows");

    const Eigen::RowVectorXd mean = panel.returns.colwise().mean();
    const Eigen::MatrixXd centered = panel.returns.rowwise() - mean;

    CovarianceMatrix cov;
    cov.values.resize(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i; j < n; ++j) {
            const double v = centered.col(i).dot(centered.col(j)) / static_cast<double>(t - 1);
            cov.values(i, j) = v;
            cov.values(j, i) = v; // mirrored, so exactly symmetric
        }
    }
    return cov;
}

double historical_var(std::span<const double> returns, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw InvalidAlpha("alpha must lie in (0, 1)");
    }
    if (returns.size() < 20) {
        throw InsufficientData("historical VaR needs at least 20 observations");
    }
    std::vector<double> sorted(returns.begin(), returns.end());
    std::sort(sorted.begin(), sorted.end());

    // Type-7 quantile: h = (n-1) * alpha, linear between order statistics.
    const double h = static_cast<double>(sorted.size() - 1) * alpha;
    const auto lo = static_cast<std::size_t>(h);
    const double frac = h - static_cast<double>(lo);
    double q = sorted[lo];
    if (frac > 0.0 && lo + 1 < sorted.size()) {
        q += frac * (sorted[lo + 1] - sorted[lo]);
    }
    return -q;
}

ReturnsPanel slice(const ReturnsPanel& panel, const DateRange& window) {
    std::vector<Eigen::Index> keep;
    for (std::size_t i = 0; i < panel.dates.size(); ++i) {
        if (window.contains(panel.dates[i])) keep.push_back(static_cast<Eigen::Index>(i));
    }
    if (keep.empty()) {
        throw EmptyWindow("no panel rows inside " + format_date(window.begin) + ".." +
                          format_date(window.last_day()));
    }
    ReturnsPanel out;
    out.assets = panel.assets;
    out.dates.reserve(keep.size());
    out.returns.resize(static_cast<Eigen::Index>(keep.size()), panel.cols());
    if (panel.has_conditioning()) out.conditioning.reserve(keep.size());
    Eigen::Index r = 0;
    for (const auto idx : keep) {
        out.dates.push_back(panel.dates[static_cast<std::size_t>(idx)]);
        out.returns.row(r++) = panel.returns.row(idx);
        if (panel.has_conditioning()) {
            out.conditioning.push_back(panel.conditioning[static_cast<std::size_t>(idx)]);
        }
    }
    return out;
}

ReturnsPanel select_assets(const ReturnsPanel& panel, const std::vector<std::string>& tickers) {
    std::vector<Eigen::Index> cols;
    cols.reserve(tickers.size());
    for (const auto& t : tickers) {
        const auto it = std::find(panel.assets.begin(), panel.assets.end(), t);
        if (it == panel.assets.end()) {
            throw DataError("asset '" + t + "' not present in the loaded panel");
        }
        cols.push_back(static_cast<Eigen::Index>(it - panel.assets.begin()));
    }
    ReturnsPanel out;
    out.dates = panel.dates;
    out.assets = tickers;
    out.conditioning = panel.conditioning;
    out.returns.resize(panel.rows(), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c) {
        out.returns.col(static_cast<Eigen::Index>(c)) = panel.returns.col(cols[c]);
    }
    return out;
}

} // namespace lexfolio
