#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace stocknn {

// Calendar date. Only validity and ordering matter here; there is no
// time-zone or trading-calendar logic.
struct Date {
    int16_t year = 0;
    int8_t month = 0;
    int8_t day = 0;

    auto operator<=>(const Date&) const = default;
};

bool is_leap_year(int year);
int days_in_month(int year, int month);

// Parses strict ISO-8601 "yyyy-mm-dd". Returns nullopt on any syntactic or
// calendar violation (bad width, month 13, Feb 30, ...).
std::optional<Date> parse_date(std::string_view text);

std::string to_string(const Date& d);

// The following calendar day, rolling over months and years.
Date next_day(const Date& d);

}  // namespace stocknn
