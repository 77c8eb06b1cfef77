#include "stocknn/stats.hpp"

#include <string>

#include "stocknn/errors.hpp"

namespace stocknn {

double chi_squared(std::span<const double> observed, std::span<const double> expected) {
    if (observed.size() != expected.size())
        throw LengthMismatch("observed has " + std::to_string(observed.size()) +
                             " categories, expected has " + std::to_string(expected.size()));
    if (observed.size() < 2)
        throw LengthMismatch("need at least 2 categories, got " +
                             std::to_string(observed.size()));
    double statistic = 0.0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        if (!(expected[i] > 0.0))
            throw NonPositiveExpected("expected count for category " + std::to_string(i) +
                                      " is not positive");
        const double diff = observed[i] - expected[i];
        statistic += diff * diff / expected[i];
    }
    return statistic;
}

ChiSquareResult significance_verdict(double statistic, int df, double alpha) {
    if (df != 1 || alpha != 0.01)
        throw UnsupportedSignificanceLevel("only df=1, alpha=0.01 is tabulated");
    ChiSquareResult result;
    result.statistic = statistic;
    result.df = df;
    result.critical_value = kChiSquaredCritical1Df;
    result.significant = statistic > result.critical_value;  // strictly greater
    return result;
}

}  // namespace stocknn
