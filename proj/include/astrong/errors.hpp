#pragma once

#include <stdexcept>

namespace astrong {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidModulusError : Error { using Error::Error; };
struct DimensionError : Error { using Error::Error; };
struct ArityError : Error { using Error::Error; };
struct UnsupportedRingError : Error { using Error::Error; };
struct InvalidTargetError : Error { using Error::Error; };
struct InvalidInputError : Error { using Error::Error; };

}  // namespace astrong
