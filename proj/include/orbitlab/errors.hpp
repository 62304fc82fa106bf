#pragma once

#include <stdexcept>
#include <string>

namespace orbitlab {

/// Base class of every error raised by the library. `kind()` is the stable
/// machine-readable name used in CLI diagnostics and JSON reports.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define ORBITLAB_DEFINE_ERROR(Name)                                \
  class Name : public Error {                                      \
   public:                                                         \
    explicit Name(const std::string& what) : Error(#Name, what) {} \
  };

ORBITLAB_DEFINE_ERROR(NonRepresentationWeights)
ORBITLAB_DEFINE_ERROR(NegativeMultiplicity)
ORBITLAB_DEFINE_ERROR(OrderTooSmall)
ORBITLAB_DEFINE_ERROR(NonInvertibleFactorial)
ORBITLAB_DEFINE_ERROR(DimensionMismatch)
ORBITLAB_DEFINE_ERROR(NotUnimodular)
ORBITLAB_DEFINE_ERROR(DegenerateForm)
ORBITLAB_DEFINE_ERROR(MissingBetti)
ORBITLAB_DEFINE_ERROR(ConfigError)
ORBITLAB_DEFINE_ERROR(PrimeDisagreement)
ORBITLAB_DEFINE_ERROR(UnsupportedOrder)
ORBITLAB_DEFINE_ERROR(NotTabulated)
ORBITLAB_DEFINE_ERROR(ParseError)

#undef ORBITLAB_DEFINE_ERROR

}  // namespace orbitlab
