#pragma once

#include <stdexcept>
#include <string>

namespace xrv {

// Base classes determine the process exit code: DataError -> 2, NumericError -> 3.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DataError : Error {
    using Error::Error;
};

struct NumericError : Error {
    using Error::Error;
};

struct UnknownLabel : DataError {
    using DataError::DataError;
};

struct EmptyVocabulary : DataError {
    using DataError::DataError;
};

struct DuplicatePatient : DataError {
    using DataError::DataError;
};

struct InvalidImage : DataError {
    using DataError::DataError;
};

struct BothViewsMissing : DataError {
    using DataError::DataError;
};

struct AmbiguousOutput : DataError {
    using DataError::DataError;
};

struct MissingHead : DataError {
    using DataError::DataError;
};

struct DegenerateLabel : DataError {
    using DataError::DataError;
};

struct RegimeUnsupported : DataError {
    using DataError::DataError;
};

struct NoRuns : DataError {
    using DataError::DataError;
};

struct NonFiniteLoss : NumericError {
    using NumericError::NumericError;
};

struct ZeroVariance : NumericError {
    using NumericError::NumericError;
};

} // namespace xrv
