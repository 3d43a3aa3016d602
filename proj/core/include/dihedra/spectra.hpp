#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dihedra/cayley.hpp"
#include "dihedra/char_poly.hpp"
#include "dihedra/dihedral.hpp"
#include "dihedra/number_theory.hpp"

namespace dihedra {

/// Irreducible characters of D_2n. Linear characters are psi_1..psi_4
/// (indices 0..3; psi_3 and psi_4 only for even n), two-dimensional ones
/// are chi_h for 1 <= h <= floor((n-1)/2).
class CharacterTable {
 public:
  explicit CharacterTable(std::int64_t n);

  std::int64_t n() const noexcept { return n_; }
  std::size_t linear_count() const noexcept { return n_ % 2 == 0 ? 4 : 2; }
  std::size_t two_dimensional_count() const noexcept {
    return static_cast<std::size_t>((n_ - 1) / 2);
  }
  std::size_t character_count() const noexcept {
    return linear_count() + two_dimensional_count();
  }
  /// Sum of squared degrees; equals 2n.
  std::int64_t degree_square_sum() const noexcept {
    return static_cast<std::int64_t>(linear_count() + 4 * two_dimensional_count());
  }

  int linear(std::size_t index, const DihedralElement& x) const;
  /// chi_h(a^k) = 2 cos(2 pi h k / n), chi_h(b a^k) = 0.
  double two_dimensional(std::int64_t h, const DihedralElement& x) const;

  /// Character `c` in table order (linear first, then chi_1, chi_2, ...).
  double value(std::size_t c, const DihedralElement& x) const;
  std::string character_name(std::size_t c) const;

 private:
  std::int64_t n_;
};

CharacterTable character_table(std::int64_t n);

/// Eigenvalue in closed form; value() evaluates it in double precision.
struct IntegerForm {
  std::int64_t value = 0;
};
/// 2 cos(2 pi h k / n) + sign
struct CosPlusMinusForm {
  std::int64_t n = 0, h = 0, k = 0;
  int sign = 1;
};
/// sign * sqrt(a_h(S)) for a three-reflection set S.
struct SqrtAhForm {
  std::int64_t n = 0, h = 0;
  TypeII set;
  int sign = 1;
};
/// (-1)^h + sign * sqrt(2 cos(2 pi h d / n) + 2), d = i - j.
struct ParitySqrtForm {
  std::int64_t n = 0, h = 0, difference = 0;
  int sign = 1;
};

struct SymbolicEigenvalue {
  std::variant<IntegerForm, CosPlusMinusForm, SqrtAhForm, ParitySqrtForm> form;
  int multiplicity = 1;

  double value() const;
  std::string expression() const;
};

struct NumericEigenvalue {
  double value = 0.0;
  int multiplicity = 1;
};

/// a_h(S) = 3 + 2 [cos(2 pi h (k1-k2)/n) + cos(2 pi h (k1-k3)/n) +
///                 cos(2 pi h (k2-k3)/n)]
double a_h(const TypeII& set, std::int64_t n, std::int64_t h);

/// Eigenvalues of X(Z_n, R), one per h = 1..n, in that order. R may be a
/// multiset. Throws Error{kNotSymmetric} or kContainsZero.
std::vector<double> circulant_spectrum(std::int64_t n,
                                       const std::vector<std::int64_t>& residues);

/// Spectrum of X(D_2n, S) for any valid S from the character sums: one
/// eigenvalue per linear character, and for each chi_h the pair
/// (e1 +- sqrt(2 e2 - e1^2)) / 2, each with multiplicity 2, where
/// e1 = sum chi_h(s) and e2 = sum chi_h(s1 s2). Throws
/// Error{kNegativeDiscriminant} if 2 e2 - e1^2 < -1e-9.
std::vector<NumericEigenvalue> general_dihedral_spectrum(const ConnectionSet& set);

/// Closed-form cubic spectrum per type, including the even-n values of the
/// psi_3 and psi_4 characters. Throws Error{kNotCubic}.
std::vector<SymbolicEigenvalue> cubic_closed_form(const ConnectionSet& set);

/// Multiplicity-expanded values, sorted ascending.
std::vector<double> expand(const std::vector<NumericEigenvalue>& spectrum);
std::vector<double> expand(const std::vector<SymbolicEigenvalue>& spectrum);

/// Jacobi eigensolve of the explicit adjacency matrix, ascending.
std::vector<double> numeric_spectrum(const Graph& graph);

SpectrumFingerprint fingerprint(const ConnectionSet& set);

/// Exact cospectrality via characteristic polynomials.
/// Throws Error{kMismatchedOrder} when the sets live in different groups.
bool cospectral(const ConnectionSet& s, const ConnectionSet& t);

/// {+-(k1-k2), +-(k1-k3), +-(k2-k3)} reduced mod p, sorted.
std::vector<std::int64_t> signed_differences(const TypeII& set, std::int64_t p);

/// Smallest lambda in Z_p^* with lambda * D(s) = D(t) as multisets, where D
/// is signed_differences. Throws Error{kInvalidModulus} unless p is an odd
/// prime.
std::optional<ModInt> type2_cospectral_criterion(const TypeII& s, const TypeII& t,
                                                 std::int64_t p);

/// Smallest k in Z_p^* with k * s = t as multisets of residues mod p.
std::optional<ModInt> circulant_scale_equivalent(const std::vector<std::int64_t>& s,
                                                 const std::vector<std::int64_t>& t,
                                                 std::int64_t p);

/// One row of a printed spectrum.
struct SpectrumLine {
  std::string expr;
  double value = 0.0;
  int multiplicity = 1;

  bool operator==(const SpectrumLine&) const = default;
};

/// Symbolic rows for cubic sets, character-sum rows otherwise.
std::vector<SpectrumLine> spectrum_lines(const ConnectionSet& set);

}  // namespace dihedra
