#pragma once

#include <stdexcept>
#include <string>

namespace lexfolio {

// Error categories map onto CLI exit codes: DataError -> 2, ConfigError -> 3,
// InternalError -> 4.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DataError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class InternalError : public Error {
public:
    using Error::Error;
};

struct ParseError final : DataError { using DataError::DataError; };
struct EmptyCorpus final : DataError { using DataError::DataError; };
struct InsufficientData final : DataError { using DataError::DataError; };
struct EmptyWindow final : DataError { using DataError::DataError; };
struct ZeroMass final : DataError { using DataError::DataError; };
struct DegenerateVocab final : DataError { using DataError::DataError; };
struct ZeroVolatility final : DataError { using DataError::DataError; };
struct ZeroDenominator final : DataError { using DataError::DataError; };
struct ZeroMean final : DataError { using DataError::DataError; };
struct ConstantSeries final : DataError { using DataError::DataError; };
struct ConstantRegressor final : DataError { using DataError::DataError; };
struct DegenerateDenominator final : DataError { using DataError::DataError; };
struct Infeasible final : DataError { using DataError::DataError; };
struct AllInfeasible final : DataError { using DataError::DataError; };

struct InvalidDecay final : ConfigError { using ConfigError::ConfigError; };
struct InvalidGamma final : ConfigError { using ConfigError::ConfigError; };
struct InvalidAlpha final : ConfigError { using ConfigError::ConfigError; };
struct NoWindows final : ConfigError { using ConfigError::ConfigError; };

struct DimensionMismatch final : InternalError { using InternalError::InternalError; };

} // namespace lexfolio
