#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace dihedra {

/// An element of Z_n, always stored reduced into [0, n).
class ModInt {
 public:
  /// Reduces `value` (which may be negative) modulo `modulus`.
  /// Throws Error{kInvalidModulus} when modulus < 2.
  ModInt(std::int64_t value, std::int64_t modulus);

  std::int64_t value() const noexcept { return value_; }
  std::int64_t modulus() const noexcept { return modulus_; }

  ModInt operator+(const ModInt& other) const;
  ModInt operator-(const ModInt& other) const;
  ModInt operator*(const ModInt& other) const;
  ModInt operator-() const;
  ModInt pow(std::uint64_t exponent) const;

  bool operator==(const ModInt&) const = default;
  // Orders by modulus first, then value; only meaningful within one modulus.
  auto operator<=>(const ModInt&) const = default;

 private:
  std::int64_t value_;
  std::int64_t modulus_;
};

std::string to_string(const ModInt& x);

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m);
std::int64_t pow_mod(std::int64_t base, std::uint64_t exponent, std::int64_t m);

/// Inverse via the extended Euclidean algorithm, so composite moduli work.
/// Throws Error{kNotInvertible} when gcd(x, n) != 1.
ModInt mod_inverse(const ModInt& x);

/// gcd of all `values` together with `n`; an empty list yields |n|.
std::int64_t gcd_many(std::span<const std::int64_t> values, std::int64_t n);

bool is_prime(std::int64_t n);
bool is_odd_prime(std::int64_t n);
/// Throws Error{kInvalidModulus} unless p is an odd prime.
void require_odd_prime(std::int64_t p);

std::int64_t euler_phi(std::int64_t n);

enum class LegendreValue : int { kNonResidue = -1, kZero = 0, kResidue = 1 };

constexpr int to_int(LegendreValue v) noexcept { return static_cast<int>(v); }

/// Euler's criterion a^((p-1)/2) mod p. `a` is reduced mod p first, so
/// negative arguments are fine.
LegendreValue legendre(std::int64_t a, std::int64_t p);

/// Square roots of `a` modulo an odd prime, ascending. Empty when `a` is a
/// non-residue, {0} when p | a, otherwise the two roots {x, p - x}.
/// Exhaustive search below 1000, Tonelli-Shanks above.
std::vector<ModInt> sqrt_mod(std::int64_t a, std::int64_t p);

/// Roots of s^2 - s + 1 over Z_p for p >= 5, ascending. Present exactly when
/// p = 1 (mod 6); the two roots are mutually inverse.
std::optional<std::pair<ModInt, ModInt>> roots_s2_minus_s_plus_1(std::int64_t p);

enum class CountBranch { kPEquals3, kOneMod6, kFiveMod6 };

std::string to_string(CountBranch branch);

struct CountReport {
  std::int64_t p = 0;
  std::int64_t n_tilde = 0;  // isomorphism classes of three-reflection sets
  std::int64_t N_tilde = 0;  // all cubic isomorphism classes on D_2p
  CountBranch branch = CountBranch::kPEquals3;

  bool operator==(const CountReport&) const = default;
};

/// Closed-form class counts for the cubic Cayley graphs on D_2p.
CountReport count_classes(std::int64_t p);

struct ReciprocityCheck {
  bool minus_one = false;       // (-1/p) = (-1)^((p-1)/2)
  bool two = false;             // (2/p) = (-1)^((p^2-1)/8)
  bool reciprocity = false;     // (q/p)(p/q) = (-1)^((p-1)(q-1)/4)
  bool multiplicative = false;  // (mn/p) = (m/p)(n/p) over m, n in {-1, 2, q}

  bool all() const noexcept {
    return minus_one && two && reciprocity && multiplicative;
  }
};

/// Evaluates both sides of the supplementary laws, the reciprocity law and
/// multiplicativity with legendre(). Requires distinct odd primes.
ReciprocityCheck reciprocity_identities(std::int64_t p, std::int64_t q);

}  // namespace dihedra
