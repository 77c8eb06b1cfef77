#include "stocknn/prices.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <utility>

#include "stocknn/errors.hpp"

namespace stocknn {

PriceSeries::PriceSeries(std::string ticker, std::vector<PriceDay> days)
    : ticker_(std::move(ticker)), days_(std::move(days)) {
    if (days_.empty()) throw EmptySeries(ticker_ + ": no price rows");
    for (const auto& day : days_) {
        if (!std::isfinite(day.high) || day.high <= 0.0)
            throw NonPositivePrice(ticker_ + ": non-positive high on " + to_string(day.date));
    }
    for (std::size_t i = 1; i < days_.size(); ++i) {
        if (!(days_[i - 1].date < days_[i].date))
            throw std::invalid_argument(ticker_ + ": dates not strictly increasing at " +
                                        to_string(days_[i].date));
    }
}

std::vector<double> PriceSeries::highs() const {
    std::vector<double> out;
    out.reserve(days_.size());
    for (const auto& day : days_) out.push_back(day.high);
    return out;
}

namespace {

std::string trim(std::string_view s) {
    const auto start = s.find_first_not_of(" \t\r\n");
    if (start == std::string_view::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    std::string_view inner = s.substr(start, end - start + 1);
    // tolerate quoted fields from spreadsheet exports
    if (inner.size() >= 2 && inner.front() == '"' && inner.back() == '"')
        inner = inner.substr(1, inner.size() - 2);
    return std::string(inner);
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(trim(field));
    if (!line.empty() && line.back() == ',') fields.push_back("");
    return fields;
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

double parse_high(const std::string& token, std::string_view ticker, std::size_t line_no) {
    const std::string where =
        std::string(ticker) + ": line " + std::to_string(line_no) + ": ";
    if (token.empty()) throw MalformedCsv(where + "missing High value");
    double value = 0.0;
    const char* begin = token.data();
    const char* end = begin + token.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end)
        throw MalformedCsv(where + "non-numeric High '" + token + "'");
    if (!std::isfinite(value)) throw MalformedCsv(where + "non-finite High '" + token + "'");
    if (value <= 0.0)
        throw NonPositivePrice(where + "non-positive High " + token);
    return value;
}

}  // namespace

PriceSeries parse_price_csv(std::istream& raw, std::string_view ticker) {
    std::string line;
    if (!std::getline(raw, line))
        throw MalformedCsv(std::string(ticker) + ": empty input, expected a CSV header");
    if (line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);

    const auto header = split_csv_line(line);
    std::size_t date_col = header.size();
    std::size_t high_col = header.size();
    for (std::size_t i = 0; i < header.size(); ++i) {
        const std::string name = lower(header[i]);
        if (name == "date") date_col = i;
        if (name == "high") high_col = i;
    }
    if (date_col == header.size() || high_col == header.size())
        throw MalformedCsv(std::string(ticker) + ": header must name Date and High columns, got '" +
                           line + "'");

    std::vector<PriceDay> days;
    std::size_t line_no = 1;
    while (std::getline(raw, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const auto fields = split_csv_line(line);
        const std::string where =
            std::string(ticker) + ": line " + std::to_string(line_no) + ": ";
        if (fields.size() <= std::max(date_col, high_col))
            throw MalformedCsv(where + "expected at least " +
                               std::to_string(std::max(date_col, high_col) + 1) + " fields, got " +
                               std::to_string(fields.size()));
        const auto date = parse_date(fields[date_col]);
        if (!date) throw MalformedCsv(where + "bad date '" + fields[date_col] + "'");
        days.push_back({*date, parse_high(fields[high_col], ticker, line_no)});
    }
    if (days.empty()) throw EmptySeries(std::string(ticker) + ": no data rows after header");

    std::stable_sort(days.begin(), days.end(),
                     [](const PriceDay& a, const PriceDay& b) { return a.date < b.date; });
    for (std::size_t i = 1; i < days.size(); ++i) {
        if (days[i - 1].date == days[i].date)
            throw MalformedCsv(std::string(ticker) + ": duplicate date " +
                               to_string(days[i].date));
    }
    return PriceSeries(std::string(ticker), std::move(days));
}

PriceSeries parse_price_csv_file(const std::string& path, std::string_view ticker) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoFailure(std::string(ticker) + ": cannot open " + path);
    return parse_price_csv(in, ticker);
}

}  // namespace stocknn
