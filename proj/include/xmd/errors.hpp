#pragma once

#include <stdexcept>
#include <string>

namespace xmd {

// Base class for all library errors. Subclasses carry the failure kind in
// the type so callers can map them to exit codes without string matching.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Numeric / contract violations.
struct ZeroVectorError : Error { using Error::Error; };
struct DimMismatchError : Error { using Error::Error; };
struct NonFiniteLossError : Error { using Error::Error; };
struct UnregisteredPrimitiveError : Error { using Error::Error; };

// Dataset / labeling.
struct InvalidSpecError : Error { using Error::Error; };
struct EmptySplitError : Error { using Error::Error; };
struct NotInfraredError : Error { using Error::Error; };
struct NotVisibleError : Error { using Error::Error; };
struct NoClustersError : Error { using Error::Error; };
struct EmptyBankError : Error { using Error::Error; };
struct UnknownLabelError : Error { using Error::Error; };
struct LabelSpaceMismatchError : Error { using Error::Error; };
struct LengthMismatchError : Error { using Error::Error; };
struct CountMismatchError : Error { using Error::Error; };
struct DegenerateBatchError : Error { using Error::Error; };
struct TooFewSamplesError : Error { using Error::Error; };
struct SpaceMismatchError : Error { using Error::Error; };

// File formats.
struct BadMagicError : Error { using Error::Error; };
struct BadHeaderError : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

}  // namespace xmd
