#pragma once

#include <stdexcept>
#include <string>

namespace cocluster {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error { using Error::Error; };
struct NonSymmetricInput : Error { using Error::Error; };
struct NonFiniteInput : Error { using Error::Error; };
struct NotPositiveSemidefinite : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };
struct SingularSystem : Error { using Error::Error; };
struct InvalidHyper : Error { using Error::Error; };
struct InvalidDataset : Error { using Error::Error; };
struct InvalidSpec : Error { using Error::Error; };
struct ZeroFactor : Error { using Error::Error; };
struct EmptyInput : Error { using Error::Error; };
struct TooFewRows : Error { using Error::Error; };
struct TooFewRuns : Error { using Error::Error; };
struct EmptyTargetData : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

}  // namespace cocluster
