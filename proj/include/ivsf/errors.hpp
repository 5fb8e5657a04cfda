#pragma once

#include <stdexcept>
#include <string>

namespace ivsf {

inline constexpr const char* kVersion = "0.1.0";

// Data / input errors.
struct UnreadableFileError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SchemaMismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct EmptySeriesError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct EmptyInputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InvalidConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct AllGroupsDroppedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Numerical / estimation errors.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct RankDeficientError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct TooFewObservationsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SeriesTooShortError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ZeroRealizedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BenchmarkMissingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ZeroBenchmarkRmseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NoCommonDatesError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InsufficientHistoryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace ivsf
