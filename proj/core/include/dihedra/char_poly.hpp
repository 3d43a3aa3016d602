#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dihedra/graph.hpp"

namespace dihedra {

using BigInt = boost::multiprecision::cpp_int;

/// Exact characteristic polynomial det(xI - A), coefficients in ascending
/// degree. Two graphs are cospectral iff their fingerprints are equal.
struct SpectrumFingerprint {
  std::vector<BigInt> coefficients;

  std::size_t degree() const noexcept {
    return coefficients.empty() ? 0 : coefficients.size() - 1;
  }
  double evaluate(double x) const;

  std::vector<std::string> to_decimal_strings() const;
  /// Throws Error{kParseError} for malformed integers.
  static SpectrumFingerprint from_decimal_strings(
      const std::vector<std::string>& digits);

  bool operator==(const SpectrumFingerprint&) const = default;
};

/// Division-free Samuelson-Berkowitz recurrence over big integers: the
/// polynomial of each leading principal submatrix is obtained from the
/// previous one through the products r * B^j * c of its bordering row and
/// column. `matrix` is row-major N x N.
SpectrumFingerprint char_poly(std::span<const std::int64_t> matrix,
                              std::size_t dimension);

SpectrumFingerprint char_poly(const Graph& graph);

}  // namespace dihedra
