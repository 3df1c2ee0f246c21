#include "lexfolio/corpus.hpp"

#include "lexfolio/csv.hpp"
#include "lexfolio/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <set>

namespace lexfolio {

Vocabulary Vocabulary::from_sorted_terms(std::vector<std::string> sorted_unique) {
    Vocabulary v;
    v.terms = std::move(sorted_unique);
    v.index.reserve(v.terms.size());
    for (std::size_t k = 0; k < v.terms.size(); ++k) {
        v.index.emplace(v.terms[k], k);
    }
    return v;
}

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::string cur;
    for (char ch : text) {
        const auto uc = static_cast<unsigned char>(ch);
        if (std::isalnum(uc)) {
            cur.push_back(static_cast<char>(std::tolower(uc)));
        } else if (!cur.empty()) {
            tokens.push_back(std::move(cur));
            cur.clear();
        }
    }
    if (!cur.empty()) tokens.push_back(std::move(cur));
    return tokens;
}

Vocabulary build_vocabulary(std::span<const HeadlineRecord> records, const DateRange& range) {
    if (range.empty()) {
        throw EmptyCorpus("empty date range for vocabulary");
    }
    std::set<std::string> terms;
    bool any_record = false;
    for (const auto& rec : records) {
        if (!range.contains(rec.published_at)) continue;
        any_record = true;
        for (auto& tok : tokenize(rec.text)) {
            terms.insert(std::move(tok));
        }
    }
    if (!any_record) {
        throw EmptyCorpus("no headline falls inside " + format_date(range.begin) + ".." +
                          format_date(range.last_day()));
    }
    if (terms.empty()) {
        throw EmptyCorpus("headlines in range contain no tokens");
    }
    return Vocabulary::from_sorted_terms({terms.begin(), terms.end()});
}

namespace {

TermCountMatrix weighted_counts(std::span<const HeadlineRecord> records,
                                const std::vector<std::string>& assets,
                                const Vocabulary& vocab, const DateRange& range,
                                double lambda, Date as_of) {
    if (assets.empty()) throw DimensionMismatch("term_counts: empty asset list");
    if (vocab.size() == 0) throw DimensionMismatch("term_counts: empty vocabulary");

    std::unordered_map<std::string, Eigen::Index> row;
    row.reserve(assets.size());
    for (std::size_t i = 0; i < assets.size(); ++i) {
        row.emplace(assets[i], static_cast<Eigen::Index>(i));
    }

    TermCountMatrix m;
    m.assets = assets;
    m.vocabulary = vocab;
    m.counts = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(assets.size()),
                                     static_cast<Eigen::Index>(vocab.size()));

    for (const auto& rec : records) {
        if (!range.contains(rec.published_at)) continue;
        const auto it = row.find(rec.asset_id);
        if (it == row.end()) continue;
        double w = 1.0;
        if (lambda > 0.0) {
            const int age = days_between(rec.published_at, as_of);
            w = std::exp(-lambda * static_cast<double>(age));
        }
        for (const auto& tok : tokenize(rec.text)) {
            const auto v = m.vocabulary.index.find(tok);
            if (v == m.vocabulary.index.end()) continue;
            m.counts(it->second, static_cast<Eigen::Index>(v->second)) += w;
        }
    }
    return m;
}

} // namespace

TermCountMatrix term_counts(std::span<const HeadlineRecord> records,
                            const std::vector<std::string>& assets,
                            const Vocabulary& vocab, const DateRange& range) {
    return weighted_counts(records, assets, vocab, range, 0.0, range.begin);
}

TermCountMatrix decayed_term_counts(std::span<const HeadlineRecord> records,
                                    const std::vector<std::string>& assets,
                                    const Vocabulary& vocab, const DateRange& range,
                                    double lambda, Date as_of) {
    if (lambda < 0.0) {
        throw InvalidDecay("decay rate must be >= 0");
    }
    if (!range.empty() && as_of < range.last_day()) {
        throw ConfigError("decay as_of date precedes the end of the count range");
    }
    return weighted_counts(records, assets, vocab, range, lambda, as_of);
}

std::vector<HeadlineRecord> load_headlines(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open file: " + path.string());
    }

    // Sniff: JSON-Lines starts with '{', otherwise expect the CSV header.
    char first = 0;
    while (in.get(first) && (first == '\n' || first == '\r' || first == ' ' || first == '\t')) {
    }
    in.seekg(0);

    std::vector<HeadlineRecord> records;
    if (first == '{') {
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty()) continue;
            nlohmann::json j;
            try {
                j = nlohmann::json::parse(line);
            } catch (const nlohmann::json::exception& e) {
                throw ParseError(path.string() + ":" + std::to_string(line_no) + ": " + e.what());
            }
            if (!j.contains("ticker") || !j.contains("date") || !j.contains("title")) {
                throw ParseError(path.string() + ":" + std::to_string(line_no) +
                                 ": expected keys ticker, date, title");
            }
            HeadlineRecord rec;
            rec.asset_id = j.at("ticker").get<std::string>();
            rec.published_at = parse_date(j.at("date").get<std::string>());
            rec.text = j.at("title").get<std::string>();
            if (rec.asset_id.empty()) {
                throw ParseError(path.string() + ":" + std::to_string(line_no) + ": empty ticker");
            }
            records.push_back(std::move(rec));
        }
    } else {
        const CsvTable table = read_csv(path);
        if (table.header.size() < 3 || table.header[0] != "ticker" || table.header[1] != "date" ||
            table.header[2] != "title") {
            throw ParseError(path.string() + ": expected CSV header ticker,date,title");
        }
        std::size_t line_no = 1;
        for (const auto& fields : table.rows) {
            ++line_no;
            if (fields.size() < 3) {
                throw ParseError(path.string() + ":" + std::to_string(line_no) + ": short row");
            }
            HeadlineRecord rec{fields[0], parse_date(fields[1]), fields[2]};
            if (rec.asset_id.empty()) {
                throw ParseError(path.string() + ":" + std::to_string(line_no) + ": empty ticker");
            }
            records.push_back(std::move(rec));
        }
    }
    return records;
}

} // namespace lexfolio
