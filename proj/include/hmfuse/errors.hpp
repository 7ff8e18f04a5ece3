#pragma once

#include <stdexcept>

namespace hmfuse {

// Error hierarchy shared by the library and the CLI. The CLI maps
// ShapeError/ParamError/IoError to exit code 2 and NumericalError to 3.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ShapeError : Error {
  using Error::Error;
};

struct ParamError : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

struct NumericalError : Error {
  using Error::Error;
};

}  // namespace hmfuse
