#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace galcong {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define GALCONG_DEFINE_ERROR(Name)                  \
  class Name : public Error {                       \
   public:                                          \
    explicit Name(const std::string& what)          \
        : Error(std::string(#Name ": ") + what) {}  \
  }

// core algebra
GALCONG_DEFINE_ERROR(DivisionByZero);
GALCONG_DEFINE_ERROR(NotPrime);
GALCONG_DEFINE_ERROR(IndexDivisor);
GALCONG_DEFINE_ERROR(DenominatorAtEll);
GALCONG_DEFINE_ERROR(NotSquarefree);
GALCONG_DEFINE_ERROR(DegreeCapExceeded);
GALCONG_DEFINE_ERROR(FieldMismatch);
GALCONG_DEFINE_ERROR(InvalidArgument);

// weil
GALCONG_DEFINE_ERROR(NotMonic);
GALCONG_DEFINE_ERROR(NotIntegral);
GALCONG_DEFINE_ERROR(ZeroRoot);

// bounds
GALCONG_DEFINE_ERROR(MissingParam);
GALCONG_DEFINE_ERROR(NonIntegralExponent);

// tame
GALCONG_DEFINE_ERROR(MixedPrimes);

// engine
GALCONG_DEFINE_ERROR(DimensionMismatch);
GALCONG_DEFINE_ERROR(DescriptorMismatch);
GALCONG_DEFINE_ERROR(ZeroElement);
GALCONG_DEFINE_ERROR(DivisibilityHypothesisFails);

// modforms
GALCONG_DEFINE_ERROR(OddWeight);
GALCONG_DEFINE_ERROR(InsufficientPrecision);
GALCONG_DEFINE_ERROR(NonSeparating);
GALCONG_DEFINE_ERROR(InsufficientCoefficients);
GALCONG_DEFINE_ERROR(BadPrime);

#undef GALCONG_DEFINE_ERROR

/// Malformed descriptor or eigenform file; carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& reason)
      : Error("ParseError: line " + std::to_string(line) + ": " + reason),
        line_(line),
        reason_(reason) {}

  std::size_t line() const { return line_; }
  const std::string& reason() const { return reason_; }

 private:
  std::size_t line_;
  std::string reason_;
};

}  // namespace galcong
