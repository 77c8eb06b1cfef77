#pragma once

#include <stdexcept>
#include <string>

namespace stocknn {

// Base class for all library errors so callers can catch everything in one arm.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define STOCKNN_DEFINE_ERROR(Name)                    \
    class Name : public Error {                       \
    public:                                           \
        using Error::Error;                           \
    }

// Data ingestion
STOCKNN_DEFINE_ERROR(MalformedCsv);
STOCKNN_DEFINE_ERROR(EmptySeries);
STOCKNN_DEFINE_ERROR(NonPositivePrice);

// Windowing / splitting
STOCKNN_DEFINE_ERROR(SeriesTooShort);
STOCKNN_DEFINE_ERROR(TooFewExamples);

// Network
STOCKNN_DEFINE_ERROR(ZeroDimension);
STOCKNN_DEFINE_ERROR(DimensionMismatch);
STOCKNN_DEFINE_ERROR(EmptyTrainSet);

// Trials
STOCKNN_DEFINE_ERROR(MixedArms);
STOCKNN_DEFINE_ERROR(EmptyOutcomes);

// Stats
STOCKNN_DEFINE_ERROR(LengthMismatch);
STOCKNN_DEFINE_ERROR(NonPositiveExpected);
STOCKNN_DEFINE_ERROR(UnsupportedSignificanceLevel);

// CLI / runner
STOCKNN_DEFINE_ERROR(ConfigInvalid);
STOCKNN_DEFINE_ERROR(IoFailure);

#undef STOCKNN_DEFINE_ERROR

}  // namespace stocknn
