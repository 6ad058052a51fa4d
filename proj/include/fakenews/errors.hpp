#pragma once

#include <stdexcept>
#include <string>

namespace fakenews {

// Base of every exception this library throws. The two subcategories map to
// the CLI exit codes: ConfigError -> 2, DataError -> 3, anything else -> 1.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : Error {
    using Error::Error;
};

struct DataError : Error {
    using Error::Error;
};

// --- configuration / usage ---
struct BadFoldCount : ConfigError { using ConfigError::ConfigError; };
struct UnknownDomain : ConfigError { using ConfigError::ConfigError; };
struct FractionTooSmall : ConfigError { using ConfigError::ConfigError; };
struct TooFewPoints : ConfigError { using ConfigError::ConfigError; };
struct BadConfig : ConfigError { using ConfigError::ConfigError; };

// --- input data ---
struct MissingDirectory : DataError { using DataError::DataError; };
struct EmptyDataset : DataError { using DataError::DataError; };
struct UnreadableFile : DataError { using DataError::DataError; };
struct InvalidArticle : DataError { using DataError::DataError; };
struct EmptyText : DataError { using DataError::DataError; };
struct NotAWord : DataError { using DataError::DataError; };
struct SchemaMismatch : DataError { using DataError::DataError; };
struct InvariantViolation : DataError { using DataError::DataError; };
struct EmptyFile : DataError { using DataError::DataError; };
struct DimensionMismatch : DataError { using DataError::DataError; };
struct InsufficientVocabulary : DataError { using DataError::DataError; };
struct EmptyTrainingSet : DataError { using DataError::DataError; };
struct DegenerateLabels : DataError { using DataError::DataError; };
struct NonFiniteFeature : DataError { using DataError::DataError; };
struct DatasetOverlap : DataError { using DataError::DataError; };
struct SingleDomainDataset : DataError { using DataError::DataError; };
struct LexiconParse : DataError { using DataError::DataError; };

// --- contract violations between modules ---
struct AlreadyParaphrased : Error { using Error::Error; };
struct VariantMismatch : Error { using Error::Error; };
struct UnfittedState : Error { using Error::Error; };
struct LengthMismatch : Error { using Error::Error; };
struct InternalError : Error { using Error::Error; };

}  // namespace fakenews
