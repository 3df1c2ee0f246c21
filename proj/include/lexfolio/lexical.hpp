#pragma once

#include "lexfolio/corpus.hpp"

#include <Eigen/Dense>

#include <unordered_set>

namespace lexfolio {

using WeightVector = Eigen::VectorXd;

struct TermDistribution {
    Eigen::VectorXd probs; // length m, entries >= 0, sums to 1
    int support_size = 0;  // strictly positive entries
};

struct RiskKeywordSet {
    std::unordered_set<std::string> keywords;
    double gamma = 2.0; // boost factor, must be > 1
};

// Weighted combined term distribution:
//   probs[k] = sum_i w_i c_{i,k} / sum_i sum_j w_i c_{i,j}.
// Throws ZeroMass when the selected weights touch only all-zero rows.
TermDistribution combined_distribution(const TermCountMatrix& counts, const WeightVector& w);

//! Lexical ratio: normalized Shannon entropy of the combined term
//! distribution, natural logs, with 0*log 0 taken as 0.
//!
//! `vocab_size_m` is the normalization vocabulary size and is deliberately
//! decoupled from the realized support (it may exceed the number of terms
//! that actually occur); it must be >= 2 and >= the realized support.
double lexical_ratio(const TermCountMatrix& counts, const WeightVector& w, int vocab_size_m);

// Time-sensitive variant: counts are decay-weighted by exp(-lambda * age)
// before the ratio is computed. lambda = 0 matches lexical_ratio exactly.
double lexical_ratio_decayed(std::span<const HeadlineRecord> records,
                             const std::vector<std::string>& assets, const Vocabulary& vocab,
                             const DateRange& range, double lambda, Date as_of,
                             const WeightVector& w);

// Risk-sensitive variant: terms in `risk.keywords` get their combined mass
// multiplied by gamma before renormalization. An empty keyword set (or a
// uniform boost) reproduces lexical_ratio.
double risk_sensitive_lr(const TermCountMatrix& counts, const WeightVector& w,
                         const RiskKeywordSet& risk, int vocab_size_m);

// Entropy of an unnormalized non-negative mass vector, -sum p log p with
// p = mass/total. Masses are accumulated in sorted order so the result is
// invariant under permutation of the input.
double shannon_entropy(const Eigen::VectorXd& masses);

} // namespace lexfolio
