#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "dihedra/number_theory.hpp"

namespace dihedra {

/// An element of D_2n = <a, b | a^n = b^2 = 1, bab = a^-1> in canonical form:
/// a^exponent when !reflected, b*a^exponent when reflected.
struct DihedralElement {
  bool reflected = false;
  std::int64_t exponent = 0;

  static constexpr DihedralElement identity() noexcept { return {}; }
  static constexpr DihedralElement rotation(std::int64_t k) noexcept {
    return {false, k};
  }
  static constexpr DihedralElement reflection(std::int64_t k) noexcept {
    return {true, k};
  }

  constexpr bool is_identity() const noexcept {
    return !reflected && exponent == 0;
  }

  // Rotations sort before reflections, then by exponent; this is also the
  // vertex order of every Cayley graph.
  auto operator<=>(const DihedralElement&) const = default;
};

/// Throws Error{kInvalidOrder} unless n >= 3.
void require_dihedral_order(std::int64_t n);

/// Throws Error{kMismatchedModulus} if x is not canonical for D_2n.
void require_canonical(const DihedralElement& x, std::int64_t n);

/// Group product x*y as a word read left to right:
///   a^i * a^j = a^(i+j)       a^i * b a^j = b a^(j-i)
///   b a^i * a^j = b a^(i+j)   b a^i * b a^j = a^(j-i)
DihedralElement multiply(const DihedralElement& x, const DihedralElement& y,
                         std::int64_t n);

DihedralElement inverse(const DihedralElement& x, std::int64_t n);

/// Position in the fixed order a^0..a^(n-1), b a^0..b a^(n-1).
constexpr std::size_t vertex_index(const DihedralElement& x,
                                   std::int64_t n) noexcept {
  return static_cast<std::size_t>(x.reflected ? n + x.exponent : x.exponent);
}

constexpr DihedralElement element_at(std::size_t index,
                                     std::int64_t n) noexcept {
  const auto i = static_cast<std::int64_t>(index);
  return i < n ? DihedralElement::rotation(i) : DihedralElement::reflection(i - n);
}

/// All 2n elements in vertex order.
std::vector<DihedralElement> all_elements(std::int64_t n);

/// sigma_{lambda,k}: a^i -> a^(lambda i), b a^j -> b a^(lambda j + k).
class DihedralAutomorphism {
 public:
  /// Throws Error{kNotInvertible} unless gcd(lambda, n) = 1 and
  /// Error{kMismatchedModulus} when lambda and shift disagree on n.
  DihedralAutomorphism(ModInt lambda, ModInt shift);

  static DihedralAutomorphism identity(std::int64_t n);

  const ModInt& lambda() const noexcept { return lambda_; }
  const ModInt& shift() const noexcept { return shift_; }
  std::int64_t order_parameter() const noexcept { return lambda_.modulus(); }

  DihedralElement operator()(const DihedralElement& x) const;
  std::vector<DihedralElement> operator()(
      const std::vector<DihedralElement>& xs) const;

  DihedralAutomorphism inverse() const;

  bool operator==(const DihedralAutomorphism&) const = default;

 private:
  ModInt lambda_;
  ModInt shift_;
};

DihedralElement apply_automorphism(const DihedralAutomorphism& sigma,
                                   const DihedralElement& x);

/// Aut(D_2n) for n >= 3: all phi(n) * n maps sigma_{lambda,k}, ordered by
/// lambda then k. Throws Error{kInvalidOrder} for n < 3.
std::vector<DihedralAutomorphism> enumerate_automorphisms(std::int64_t n);

}  // namespace dihedra
