#pragma once

#include <cstddef>
#include <span>

namespace stocknn {

struct ChiSquareResult {
    double statistic = 0.0;
    int df = 1;
    double critical_value = 0.0;
    bool significant = false;
};

// Tabulated critical value for df = 1, alpha = 0.01.
inline constexpr double kChiSquaredCritical1Df = 6.63;

// Goodness-of-fit statistic: sum over categories of (O - E)^2 / E.
// Expected counts may be non-integral. Throws LengthMismatch unless both
// spans have equal length >= 2, NonPositiveExpected if any expected <= 0.
double chi_squared(std::span<const double> observed, std::span<const double> expected);

// Verdict at the df = 1, alpha = 0.01 table entry: significant exactly when
// the statistic strictly exceeds 6.63. Any other (df, alpha) pair throws
// UnsupportedSignificanceLevel.
ChiSquareResult significance_verdict(double statistic, int df, double alpha);

}  // namespace stocknn
