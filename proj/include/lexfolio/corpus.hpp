#pragma once

#include "lexfolio/dates.hpp"

#include <Eigen/Dense>

#include <filesystem>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace lexfolio {

struct HeadlineRecord {
    std::string asset_id;
    Date published_at;
    std::string text;
};

// Ordered set of distinct lowercase tokens; column order is lexicographic so
// term-count matrices are reproducible across runs.
struct Vocabulary {
    std::vector<std::string> terms;
    std::unordered_map<std::string, std::size_t> index;

    std::size_t size() const { return terms.size(); }

    // `sorted_unique` must already be sorted and de-duplicated.
    static Vocabulary from_sorted_terms(std::vector<std::string> sorted_unique);
};

// Real-valued so that decay-weighted counts reuse the same type.
struct TermCountMatrix {
    std::vector<std::string> assets;  // row order
    Vocabulary vocabulary;            // column order
    Eigen::MatrixXd counts;           // assets.size() x vocabulary.size(), entries >= 0
};

// Lowercases and splits on any non-alphanumeric character; empty fragments
// dropped, no stopword removal or stemming.
std::vector<std::string> tokenize(std::string_view text);

// Vocabulary of all tokens from records published inside `range`.
// Throws EmptyCorpus when nothing usable falls in the range.
Vocabulary build_vocabulary(std::span<const HeadlineRecord> records, const DateRange& range);

// counts[i][k] = occurrences of term k across records of asset i within range.
// Tokens absent from `vocab` are ignored; assets with no records get zero rows.
TermCountMatrix term_counts(std::span<const HeadlineRecord> records,
                            const std::vector<std::string>& assets,
                            const Vocabulary& vocab, const DateRange& range);

// Like term_counts but each record contributes exp(-lambda * age_days) per
// token, with age measured from `as_of`. lambda = 0 reproduces term_counts
// exactly.
TermCountMatrix decayed_term_counts(std::span<const HeadlineRecord> records,
                                    const std::vector<std::string>& assets,
                                    const Vocabulary& vocab, const DateRange& range,
                                    double lambda, Date as_of);

// Reads headline records from a JSON-Lines file (objects with keys `ticker`,
// `date`, `title`) or a CSV file with header `ticker,date,title`. The format
// is sniffed from the first non-blank byte.
std::vector<HeadlineRecord> load_headlines(const std::filesystem::path& path);

} // namespace lexfolio
