#include "lexfolio/lexical.hpp"

#include "lexfolio/errors.hpp"

#include <algorithm>
#include <cmath>

namespace lexfolio {

namespace {

void check_weights(const TermCountMatrix& counts, const WeightVector& w) {
    if (w.size() != counts.counts.rows()) {
        throw DimensionMismatch("weight vector length does not match asset count");
    }
    bool any_positive = false;
    for (Eigen::Index i = 0; i < w.size(); ++i) {
        if (w(i) < 0.0) throw DimensionMismatch("negative portfolio weight");
        if (w(i) > 0.0) any_positive = true;
    }
    if (!any_positive) throw ZeroMass("all portfolio weights are zero");
}

Eigen::VectorXd combined_masses(const TermCountMatrix& counts, const WeightVector& w) {
    check_weights(counts, w);
    return counts.counts.transpose() * w;
}

double entropy_over_log_m(const Eigen::VectorXd& masses, int vocab_size_m) {
    if (vocab_size_m < 2) {
        throw DegenerateVocab("normalization vocabulary must have at least 2 terms");
    }
    int support = 0;
    for (Eigen::Index k = 0; k < masses.size(); ++k) {
        if (masses(k) > 0.0) ++support;
    }
    if (support > vocab_size_m) {
        throw DegenerateVocab("normalization vocabulary smaller than the realized support");
    }
    return shannon_entropy(masses) / std::log(static_cast<double>(vocab_size_m));
}

} // namespace

double shannon_entropy(const Eigen::VectorXd& masses) {
    std::vector<double> positive;
    positive.reserve(static_cast<std::size_t>(masses.size()));
    for (Eigen::Index k = 0; k < masses.size(); ++k) {
        const double v = masses(k);
        if (v < 0.0) throw DimensionMismatch("negative term mass");
        if (v > 0.0) positive.push_back(v);
    }
    if (positive.empty()) {
        throw ZeroMass("combined term distribution has zero total mass");
    }
    std::sort(positive.begin(), positive.end());

    // Equal masses: the entropy is log(support) exactly, no accumulation error.
    if (positive.front() == positive.back()) {
        return std::log(static_cast<double>(positive.size()));
    }

    double total = 0.0;
    for (const double v : positive) total += v;
    double h = 0.0;
    for (const double v : positive) {
        const double p = v / total;
        h -= p * std::log(p);
    }
    return h;
}

TermDistribution combined_distribution(const TermCountMatrix& counts, const WeightVector& w) {
    const Eigen::VectorXd masses = combined_masses(counts, w);
    double total = 0.0;
    int support = 0;
    for (Eigen::Index k = 0; k < masses.size(); ++k) {
        total += masses(k);
        if (masses(k) > 0.0) ++support;
    }
    if (!(total > 0.0)) {
        throw ZeroMass("combined term distribution has zero total mass");
    }
    TermDistribution dist;
    dist.probs = masses / total;
    dist.support_size = support;
    return dist;
}

double lexical_ratio(const TermCountMatrix& counts, const WeightVector& w, int vocab_size_m) {
    return entropy_over_log_m(combined_masses(counts, w), vocab_size_m);
}

double lexical_ratio_decayed(std::span<const HeadlineRecord> records,
                             const std::vector<std::string>& assets, const Vocabulary& vocab,
                             const DateRange& range, double lambda, Date as_of,
                             const WeightVector& w) {
    const TermCountMatrix counts =
        decayed_term_counts(records, assets, vocab, range, lambda, as_of);
    return lexical_ratio(counts, w, static_cast<int>(vocab.size()));
}

double risk_sensitive_lr(const TermCountMatrix& counts, const WeightVector& w,
                         const RiskKeywordSet& risk, int vocab_size_m) {
    if (!(risk.gamma > 1.0)) {
        throw InvalidGamma("risk boost factor must be > 1");
    }
    Eigen::VectorXd masses = combined_masses(counts, w);
    for (Eigen::Index k = 0; k < masses.size(); ++k) {
        const auto& term = counts.vocabulary.terms[static_cast<std::size_t>(k)];
        if (risk.keywords.count(term)) masses(k) *= risk.gamma;
    }
    return entropy_over_log_m(masses, vocab_size_m);
}

} // namespace lexfolio
