#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dihedra {

enum class ErrorCode {
  kNotInvertible,
  kInvalidModulus,
  kMismatchedModulus,
  kInvalidOrder,
  kContainsIdentity,
  kContainsZero,
  kNotSymmetric,
  kUnclassifiableCubic,
  kNotCubic,
  kNotConnected,
  kWitnessConstructionFailed,
  kNegativeDiscriminant,
  kMismatchedOrder,
  kDegenerateSet,
  kOutOfDomain,
  kParseError,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this type; callers that care
// about the reason switch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dihedra
