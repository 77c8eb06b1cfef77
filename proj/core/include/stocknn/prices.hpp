#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "stocknn/dates.hpp"

namespace stocknn {

struct PriceDay {
    Date date;
    double high = 0.0;
};

// Ordered daily-high history for one ticker. Dates are strictly increasing
// and every high is positive and finite; the constructor enforces both.
class PriceSeries {
public:
    PriceSeries(std::string ticker, std::vector<PriceDay> days);

    const std::string& ticker() const { return ticker_; }
    const std::vector<PriceDay>& days() const { return days_; }
    std::size_t size() const { return days_.size(); }

    // Highs in date order, oldest first.
    std::vector<double> highs() const;

private:
    std::string ticker_;
    std::vector<PriceDay> days_;
};

// Parses a Yahoo-Finance-style historical export: header row naming at
// least Date and High (any order, extra columns ignored), then one row per
// trading day. Rows may arrive out of date order; the result is sorted
// ascending. A row whose High is missing or not a number aborts the whole
// ticker rather than being dropped.
//
// Throws MalformedCsv, EmptySeries, NonPositivePrice.
PriceSeries parse_price_csv(std::istream& raw, std::string_view ticker);
PriceSeries parse_price_csv_file(const std::string& path, std::string_view ticker);

}  // namespace stocknn
