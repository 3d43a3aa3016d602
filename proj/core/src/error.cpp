#include "dihedra/error.hpp"

namespace dihedra {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotInvertible: return "NotInvertible";
    case ErrorCode::kInvalidModulus: return "InvalidModulus";
    case ErrorCode::kMismatchedModulus: return "MismatchedModulus";
    case ErrorCode::kInvalidOrder: return "InvalidOrder";
    case ErrorCode::kContainsIdentity: return "ContainsIdentity";
    case ErrorCode::kContainsZero: return "ContainsZero";
    case ErrorCode::kNotSymmetric: return "NotSymmetric";
    case ErrorCode::kUnclassifiableCubic: return "UnclassifiableCubic";
    case ErrorCode::kNotCubic: return "NotCubic";
    case ErrorCode::kNotConnected: return "NotConnected";
    case ErrorCode::kWitnessConstructionFailed: return "WitnessConstructionFailed";
    case ErrorCode::kNegativeDiscriminant: return "NegativeDiscriminant";
    case ErrorCode::kMismatchedOrder: return "MismatchedOrder";
    case ErrorCode::kDegenerateSet: return "DegenerateSet";
    case ErrorCode::kOutOfDomain: return "OutOfDomain";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace dihedra
