#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bisyz {

// Base class for every error thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ZeroPolynomialError : Error {
  ZeroPolynomialError() : Error("zero polynomial has no bidegree") {}
  using Error::Error;
};

struct NotBihomogeneousError : Error {
  using Error::Error;
};

// Parse failure; `offset` is the byte position in the input text.
struct SyntaxError : Error {
  SyntaxError(const std::string& what, std::size_t offset_)
      : Error(what + " (at byte " + std::to_string(offset_) + ")"),
        offset(offset_) {}
  std::size_t offset = 0;
};

struct UnknownVariableError : SyntaxError {
  UnknownVariableError(char symbol, std::size_t offset_)
      : SyntaxError(std::string("unknown variable '") + symbol +
                        "', expected one of s,u,t,v",
                    offset_) {}
};

struct BidegreeMismatchError : Error {
  using Error::Error;
};

struct EmptyIdealError : Error {
  EmptyIdealError() : Error("ideal has no generators") {}
};

struct IoError : Error {
  using Error::Error;
};

struct AmbientMismatchError : Error {
  AmbientMismatchError() : Error("elements live in different free modules") {}
  using Error::Error;
};

struct ZeroElementError : Error {
  ZeroElementError() : Error("cannot saturate by the zero element") {}
};

struct NotZeroDimensionalError : Error {
  using Error::Error;
};

struct PointNotOnLocusError : Error {
  using Error::Error;
};

struct NotASyzygyError : Error {
  using Error::Error;
};

struct WrongGeneratorCountError : Error {
  using Error::Error;
};

struct NoStabilizationError : Error {
  using Error::Error;
};

struct RequiresRationalPointsError : Error {
  using Error::Error;
};

}  // namespace bisyz
