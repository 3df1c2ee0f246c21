#pragma once

#include <chrono>
#include <string>
#include <string_view>

namespace lexfolio {

// Whole-day resolution throughout; intraday timestamps are truncated to dates.
using Date = std::chrono::sys_days;

// Parses "YYYY-MM-DD". Throws ParseError on malformed or non-existent dates.
Date parse_date(std::string_view text);

std::string format_date(Date d);

inline Date add_days(Date d, int days) { return d + std::chrono::days{days}; }

inline int days_between(Date a, Date b) {
    return static_cast<int>((b - a).count());
}

// Half-open day interval [begin, end).
struct DateRange {
    Date begin;
    Date end;

    bool contains(Date d) const { return d >= begin && d < end; }
    int days() const { return days_between(begin, end); }
    bool empty() const { return end <= begin; }

    // Last day covered by the range; only meaningful when non-empty.
    Date last_day() const { return add_days(end, -1); }

    static DateRange inclusive(Date first, Date last) {
        return DateRange{first, add_days(last, 1)};
    }

    DateRange intersect(const DateRange& other) const {
        return DateRange{std::max(begin, other.begin), std::min(end, other.end)};
    }
};

} // namespace lexfolio
