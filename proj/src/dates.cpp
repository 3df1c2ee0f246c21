#include "lexfolio/dates.hpp"

#include "lexfolio/errors.hpp"

#include <cctype>
#include <cstdio>

namespace lexfolio {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

} // namespace

Date parse_date(std::string_view text) {
    // Accept an ISO timestamp by truncating at 'T' or space.
    const auto cut = text.find_first_of("T ");
    if (cut != std::string_view::npos) text = text.substr(0, cut);

    if (text.size() != 10 || text[4] != '-' || text[7] != '-' ||
        !all_digits(text.substr(0, 4)) || !all_digits(text.substr(5, 2)) ||
        !all_digits(text.substr(8, 2))) {
        throw ParseError("invalid date '" + std::string(text) + "', expected YYYY-MM-DD");
    }

    const int y = (text[0] - '0') * 1000 + (text[1] - '0') * 100 + (text[2] - '0') * 10 + (text[3] - '0');
    const unsigned m = static_cast<unsigned>((text[5] - '0') * 10 + (text[6] - '0'));
    const unsigned d = static_cast<unsigned>((text[8] - '0') * 10 + (text[9] - '0'));

    const std::chrono::year_month_day ymd{std::chrono::year{y}, std::chrono::month{m}, std::chrono::day{d}};
    if (!ymd.ok()) {
        throw ParseError("non-existent calendar date '" + std::string(text) + "'");
    }
    return Date{ymd};
}

std::string format_date(Date d) {
    const std::chrono::year_month_day ymd{d};
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                  static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
    return buf;
}

} // namespace lexfolio
