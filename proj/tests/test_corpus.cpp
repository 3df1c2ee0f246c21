#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lexfolio/corpus.hpp"
#include "lexfolio/errors.hpp"
#include "lexfolio/rng.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace lexfolio;

namespace {

Date d(const char* s) { return parse_date(s); }

std::vector<HeadlineRecord> two_asset_records() {
    return {
        {"A", d("2020-01-02"), "up down"},
        {"B", d("2020-01-03"), "down flat"},
    };
}

} // namespace

TEST_CASE("tokenize lowercases and splits on non-alphanumerics") {
    CHECK(tokenize("Oil prices surge; Fed holds") ==
          std::vector<std::string>{"oil", "prices", "surge", "fed", "holds"});
    CHECK(tokenize("").empty());
    CHECK(tokenize("TTTTT") == std::vector<std::string>{"ttttt"});
    CHECK(tokenize("rate-hike 2024!") == std::vector<std::string>{"rate", "hike", "2024"});
}

TEST_CASE("build_vocabulary sorts and dedups") {
    const auto records = two_asset_records();
    const auto range = DateRange::inclusive(d("2020-01-01"), d("2020-01-31"));
    const Vocabulary v = build_vocabulary(records, range);
    CHECK(v.terms == std::vector<std::string>{"down", "flat", "up"});
    CHECK(v.size() == 3);
    CHECK(v.index.at("flat") == 1);
}

TEST_CASE("build_vocabulary dedups repeated tokens") {
    std::vector<HeadlineRecord> records{{"A", d("2020-01-02"), "x x x"}};
    const auto range = DateRange::inclusive(d("2020-01-01"), d("2020-01-31"));
    const Vocabulary v = build_vocabulary(records, range);
    CHECK(v.terms == std::vector<std::string>{"x"});
}

TEST_CASE("build_vocabulary rejects a range with no records") {
    const auto records = two_asset_records();
    const auto range = DateRange::inclusive(d("2021-01-01"), d("2021-01-31"));
    CHECK_THROWS_AS(build_vocabulary(records, range), EmptyCorpus);
}

TEST_CASE("vocabulary order does not depend on record order") {
    auto records = two_asset_records();
    const auto range = DateRange::inclusive(d("2020-01-01"), d("2020-01-31"));
    const Vocabulary a = build_vocabulary(records, range);
    std::swap(records[0], records[1]);
    const Vocabulary b = build_vocabulary(records, range);
    CHECK(a.terms == b.terms);
}

TEST_CASE("term_counts counts per asset against a fixed vocabulary") {
    std::vector<HeadlineRecord> records{{"A", d("2020-01-02"), "up up down"}};
    const Vocabulary v = Vocabulary::from_sorted_terms({"down", "up"});
    const auto range = DateRange::inclusive(d("2020-01-01"), d("2020-01-31"));

    const TermCountMatrix m = term_counts(records, {"A", "B"}, v, range);
    CHECK(m.counts(0, 0) == 1.0);
    CHECK(m.counts(0, 1) == 2.0);
    // Asset without records gets an all-zero row.
    CHECK(m.counts(1, 0) == 0.0);
    CHECK(m.counts(1, 1) == 0.0);
}

TEST_CASE("term_counts adds across records and ignores unknown tokens") {
    std::vector<HeadlineRecord> records{
        {"A", d("2020-01-02"), "up"},
        {"A", d("2020-01-05"), "up mystery"},
    };
    const Vocabulary v = Vocabulary::from_sorted_terms({"up"});
    const auto range = DateRange::inclusive(d("2020-01-01"), d("2020-01-31"));
    const TermCountMatrix m = term_counts(records, {"A"}, v, range);
    CHECK(m.counts(0, 0) == 2.0);
}

TEST_CASE("count additivity over disjoint ranges") {
    Rng rng(7);
    std::vector<HeadlineRecord> records;
    const std::vector<std::string> words{"alpha", "beta", "gamma", "delta"};
    for (int i = 0; i < 60; ++i) {
        const int day = 1 + static_cast<int>(rng.next_u64() % 28);
        char buf[64];
        std::snprintf(buf, sizeof(buf), "2020-%02d-%02d", 1 + (i % 2), day);
        std::string text;
        for (int t = 0; t < 3; ++t) {
            text += words[rng.next_u64() % words.size()] + " ";
        }
        records.push_back({i % 2 ? "A" : "B", d(buf), text});
    }
    const Vocabulary v = Vocabulary::from_sorted_terms({"alpha", "beta", "delta", "gamma"});
    const auto r1 = DateRange::inclusive(d("2020-01-01"), d("2020-01-31"));
    const auto r2 = DateRange::inclusive(d("2020-02-01"), d("2020-02-29"));
    const auto all = DateRange::inclusive(d("2020-01-01"), d("2020-02-29"));
    const std::vector<std::string> assets{"A", "B"};
    const auto m1 = term_counts(records, assets, v, r1);
    const auto m2 = term_counts(records, assets, v, r2);
    const auto m = term_counts(records, assets, v, all);
    CHECK((m1.counts + m2.counts - m.counts).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("decayed counts: lambda 0 is exact, ln 2 halves a one-day-old record") {
    std::vector<HeadlineRecord> records{{"A", d("2020-01-10"), "oil"}};
    const Vocabulary v = Vocabulary::from_sorted_terms({"oil"});
    const auto range = DateRange::inclusive(d("2020-01-01"), d("2020-01-10"));

    const auto plain = term_counts(records, {"A"}, v, range);
    const auto zero = decayed_term_counts(records, {"A"}, v, range, 0.0, d("2020-01-11"));
    CHECK(zero.counts == plain.counts);

    const auto halved = decayed_term_counts(records, {"A"}, v, range, std::log(2.0), d("2020-01-11"));
    CHECK(halved.counts(0, 0) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("decayed counts: ten-day-old token at lambda 0.1") {
    std::vector<HeadlineRecord> records{{"A", d("2020-01-01"), "oil"}};
    const Vocabulary v = Vocabulary::from_sorted_terms({"oil"});
    const auto range = DateRange::inclusive(d("2020-01-01"), d("2020-01-11"));
    const auto m = decayed_term_counts(records, {"A"}, v, range, 0.1, d("2020-01-11"));
    // exp(-1), evaluated independently
    CHECK(m.counts(0, 0) == doctest::Approx(0.36787944117144233).epsilon(1e-12));
}

TEST_CASE("decayed counts reject a negative decay rate") {
    std::vector<HeadlineRecord> records{{"A", d("2020-01-10"), "oil"}};
    const Vocabulary v = Vocabulary::from_sorted_terms({"oil"});
    const auto range = DateRange::inclusive(d("2020-01-01"), d("2020-01-10"));
    CHECK_THROWS_AS(decayed_term_counts(records, {"A"}, v, range, -0.5, d("2020-01-11")),
                    InvalidDecay);
}

TEST_CASE("monotone decay: entries non-increasing in lambda") {
    Rng rng(11);
    std::vector<HeadlineRecord> records;
    for (int i = 0; i < 40; ++i) {
        char buf[16];
        std::snprintf(buf, sizeof(buf), "2020-01-%02d", 1 + static_cast<int>(rng.next_u64() % 28));
        records.push_back({"A", d(buf), "oil gas war peace"});
    }
    const Vocabulary v = Vocabulary::from_sorted_terms({"gas", "oil", "peace", "war"});
    const auto range = DateRange::inclusive(d("2020-01-01"), d("2020-01-31"));
    double prev_sum = -1.0;
    bool first = true;
    for (const double lambda : {0.0, 0.01, 0.1, 0.5, 2.0}) {
        const auto m = decayed_term_counts(records, {"A"}, v, range, lambda, d("2020-02-01"));
        if (!first) CHECK(m.counts.sum() <= prev_sum + 1e-15);
        prev_sum = m.counts.sum();
        first = false;
    }
}

TEST_CASE("load_headlines reads JSONL and CSV") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "lexfolio_corpus_test";
    fs::create_directories(dir);

    {
        std::ofstream out(dir / "headlines.jsonl");
        out << R"({"ticker":"AAA","date":"2020-01-02","title":"Oil surges, stocks fall"})" << "\n";
        out << R"({"ticker":"BBB","date":"2020-01-03","title":"Fed holds rates"})" << "\n";
    }
    auto records = load_headlines(dir / "headlines.jsonl");
    REQUIRE(records.size() == 2);
    CHECK(records[0].asset_id == "AAA");
    CHECK(records[1].published_at == d("2020-01-03"));

    {
        std::ofstream out(dir / "headlines.csv");
        out << "ticker,date,title\n";
        out << "AAA,2020-01-02,\"Oil surges, stocks fall\"\n";
    }
    records = load_headlines(dir / "headlines.csv");
    REQUIRE(records.size() == 1);
    CHECK(records[0].text == "Oil surges, stocks fall");

    {
        std::ofstream out(dir / "bad.jsonl");
        out << "{this is not json}\n";
    }
    CHECK_THROWS_AS(load_headlines(dir / "bad.jsonl"), ParseError);
    fs::remove_all(dir);
}

TEST_CASE("date parsing rejects malformed input") {
    CHECK_THROWS_AS(parse_date("2020-13-01"), ParseError);
    CHECK_THROWS_AS(parse_date("2020-02-30"), ParseError);
    CHECK_THROWS_AS(parse_date("20200101"), ParseError);
    CHECK(format_date(parse_date("2024-06-30")) == "2024-06-30");
    CHECK(parse_date("2024-06-30T15:04:05") == parse_date("2024-06-30"));
}
