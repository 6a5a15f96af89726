#pragma once

#include <stdexcept>
#include <string>

namespace dimers {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct MissingVariableError : Error {
    using Error::Error;
};
struct InexactDivisionError : Error {
    using Error::Error;
};
struct NotASquareError : Error {
    using Error::Error;
};
struct OddSizeError : Error {
    using Error::Error;
};
struct CapExceededError : Error {
    using Error::Error;
};
struct BudgetExceededError : Error {
    using Error::Error;
};
struct DimensionMismatchError : Error {
    using Error::Error;
};
struct UnsupportedLevelError : Error {
    using Error::Error;
};
struct UnsupportedWeightsError : Error {
    using Error::Error;
};
struct UnsupportedContextError : Error {
    using Error::Error;
};
struct MalformedInputError : Error {
    using Error::Error;
};
struct SingularDenominatorError : Error {
    using Error::Error;
};
struct ZeroPartitionError : Error {
    using Error::Error;
};
struct DegenerateVarianceError : Error {
    using Error::Error;
};
struct InvalidCoverError : Error {
    using Error::Error;
};
struct ValidationError : Error {
    using Error::Error;
};

}  // namespace dimers
