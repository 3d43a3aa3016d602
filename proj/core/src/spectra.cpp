#include "dihedra/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <array>
#include <map>
#include <numbers>

#include "dihedra/error.hpp"
#include "dihedra/jacobi.hpp"

namespace dihedra {
namespace {

constexpr double kDiscriminantSlack = 1e-9;

int parity_sign(std::int64_t e) { return (e % 2 == 0) ? 1 : -1; }

double two_cos(std::int64_t h, std::int64_t k, std::int64_t n) {
  // Reduce h*k first so large arguments keep full precision.
  const std::int64_t r = ((h * k) % n + n) % n;
  return 2.0 * std::cos(2.0 * std::numbers::pi * static_cast<double>(r) /
                        static_cast<double>(n));
}

// Sum of chi_h's real 2x2 matrices over S: a^k -> R(theta), b a^k -> F R(theta)
// with F = diag(1, -1). Returns the symmetric entries (p, q, r).
std::array<double, 3> representation_sum(const ConnectionSet& set, std::int64_t h) {
  const std::int64_t n = set.n();
  double p = 0.0, q = 0.0, r = 0.0;
  for (const auto& x : set.elements()) {
    const std::int64_t e = ((h * x.exponent) % n + n) % n;
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(e) /
                         static_cast<double>(n);
    const double c = std::cos(theta), sn = std::sin(theta);
    if (x.reflected) {
      p += c;
      q -= sn;
      r -= c;
    } else {
      p += c;
      r += c;
    }
  }
  return {p, q, r};
}

// |sum_j exp(2 pi i h e_j / n)|. Taking the modulus directly, instead of a
// sqrt of 3 + 2 sum cos(...), keeps near-zero values near zero.
double unit_sum_modulus(std::int64_t n, std::int64_t h,
                        std::initializer_list<std::int64_t> exponents) {
  double re = 0.0, im = 0.0;
  for (const std::int64_t e : exponents) {
    const std::int64_t r = ((h * e) % n + n) % n;
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(r) /
                         static_cast<double>(n);
    re += std::cos(theta);
    im += std::sin(theta);
  }
  return std::hypot(re, im);
}

std::string signed_term(int sign) { return sign > 0 ? "+" : "-"; }

std::vector<std::int64_t> scaled_sorted(const std::vector<std::int64_t>& xs,
                                        std::int64_t lambda, std::int64_t p) {
  std::vector<std::int64_t> out;
  out.reserve(xs.size());
  for (const std::int64_t x : xs) out.push_back(mul_mod(x, lambda, p));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::int64_t> reduced_sorted(const std::vector<std::int64_t>& xs,
                                         std::int64_t p) {
  return scaled_sorted(xs, 1, p);
}

std::optional<ModInt> find_scale(const std::vector<std::int64_t>& s,
                                 const std::vector<std::int64_t>& t,
                                 std::int64_t p) {
  if (s.size() != t.size()) return std::nullopt;
  const std::vector<std::int64_t> target = reduced_sorted(t, p);
  for (std::int64_t lambda = 1; lambda < p; ++lambda) {
    if (scaled_sorted(s, lambda, p) == target) return ModInt(lambda, p);
  }
  return std::nullopt;
}

}  // namespace

CharacterTable::CharacterTable(std::int64_t n) : n_(n) {
  require_dihedral_order(n);
}

int CharacterTable::linear(std::size_t index, const DihedralElement& x) const {
  require_canonical(x, n_);
  if (index >= linear_count()) {
    throw std::out_of_range("linear character index out of range");
  }
  switch (index) {
    case 0: return 1;
    case 1: return x.reflected ? -1 : 1;
    case 2: return parity_sign(x.exponent);
    default: return parity_sign(x.exponent + (x.reflected ? 1 : 0));
  }
}

double CharacterTable::two_dimensional(std::int64_t h, const DihedralElement& x) const {
  require_canonical(x, n_);
  if (h < 1 || h > static_cast<std::int64_t>(two_dimensional_count())) {
    throw std::out_of_range("two-dimensional character index out of range");
  }
  return x.reflected ? 0.0 : two_cos(h, x.exponent, n_);
}

double CharacterTable::value(std::size_t c, const DihedralElement& x) const {
  if (c < linear_count()) return linear(c, x);
  return two_dimensional(static_cast<std::int64_t>(c - linear_count()) + 1, x);
}

std::string CharacterTable::character_name(std::size_t c) const {
  if (c < linear_count()) return "psi_" + std::to_string(c + 1);
  return "chi_" + std::to_string(c - linear_count() + 1);
}

CharacterTable character_table(std::int64_t n) { return CharacterTable(n); }

double SymbolicEigenvalue::value() const {
  return std::visit(
      [](const auto& f) -> double {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, IntegerForm>) {
          return static_cast<double>(f.value);
        } else if constexpr (std::is_same_v<F, CosPlusMinusForm>) {
          return two_cos(f.h, f.k, f.n) + f.sign;
        } else if constexpr (std::is_same_v<F, SqrtAhForm>) {
          // sqrt(a_h) = |w^k1 + w^k2 + w^k3|
          return f.sign * unit_sum_modulus(f.n, f.h, {f.set.k1, f.set.k2, f.set.k3});
        } else {
          // sqrt(2 cos(theta) + 2) = |1 + w^d|
          return parity_sign(f.h) + f.sign * unit_sum_modulus(f.n, f.h, {0, f.difference});
        }
      },
      form);
}

std::string SymbolicEigenvalue::expression() const {
  return std::visit(
      [](const auto& f) -> std::string {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, IntegerForm>) {
          return std::to_string(f.value);
        } else if constexpr (std::is_same_v<F, CosPlusMinusForm>) {
          return "2cos(2pi*" + std::to_string(f.h) + "*" + std::to_string(f.k) +
                 "/" + std::to_string(f.n) + ")" + signed_term(f.sign) + "1";
        } else if constexpr (std::is_same_v<F, SqrtAhForm>) {
          return signed_term(f.sign) + "sqrt(a_" + std::to_string(f.h) + "(S))";
        } else {
          return "(-1)^" + std::to_string(f.h) + signed_term(f.sign) +
                 "sqrt(2cos(2pi*" + std::to_string(f.h) + "*(" +
                 std::to_string(f.difference) + ")/" + std::to_string(f.n) + ")+2)";
        }
      },
      form);
}

double a_h(const TypeII& set, std::int64_t n, std::int64_t h) {
  return 3.0 + two_cos(h, set.k1 - set.k2, n) + two_cos(h, set.k1 - set.k3, n) +
         two_cos(h, set.k2 - set.k3, n);
}

std::vector<double> circulant_spectrum(std::int64_t n,
                                       const std::vector<std::int64_t>& residues) {
  if (n < 1) throw Error(ErrorCode::kInvalidOrder, "circulant order must be >= 1");
  std::map<std::int64_t, int> counts;
  for (const std::int64_t r : residues) ++counts[((r % n) + n) % n];
  for (const auto& [r, c] : counts) {
    if (r == 0) throw Error(ErrorCode::kContainsZero, "0 in circulant multiset");
    const auto mirror = counts.find((n - r) % n);
    if (mirror == counts.end() || mirror->second != c) {
      throw Error(ErrorCode::kNotSymmetric,
                  "residue " + std::to_string(r) + " is not matched by its negative");
    }
  }
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n));
  for (std::int64_t h = 1; h <= n; ++h) {
    double sum = 0.0;
    for (const std::int64_t r : residues) sum += 0.5 * two_cos(h, r, n);
    out.push_back(sum);
  }
  return out;
}

std::vector<NumericEigenvalue> general_dihedral_spectrum(const ConnectionSet& set) {
  const std::int64_t n = set.n();
  const CharacterTable table(n);
  std::vector<NumericEigenvalue> out;

  for (std::size_t c = 0; c < table.linear_count(); ++c) {
    int sum = 0;
    for (const auto& s : set.elements()) sum += table.linear(c, s);
    out.push_back({static_cast<double>(sum), 1});
  }

  for (std::int64_t h = 1; h <= static_cast<std::int64_t>(table.two_dimensional_count()); ++h) {
    double e1 = 0.0, e2 = 0.0;
    for (const auto& s1 : set.elements()) {
      e1 += table.two_dimensional(h, s1);
      for (const auto& s2 : set.elements()) {
        e2 += table.two_dimensional(h, multiply(s1, s2, n));
      }
    }
    double disc = 2.0 * e2 - e1 * e1;
    if (disc < -kDiscriminantSlack) {
      throw Error(ErrorCode::kNegativeDiscriminant,
                  "2 e2 - e1^2 = " + std::to_string(disc) + " for h = " +
                      std::to_string(h));
    }
    // 2 e2 - e1^2 equals (p - r)^2 + 4 q^2; the sum of squares keeps a
    // double eigenvalue from turning rounding noise into a sqrt-sized error.
    const auto [p, q, r] = representation_sum(set, h);
    disc = std::sqrt((p - r) * (p - r) + 4.0 * q * q);
    out.push_back({(e1 + disc) / 2.0, 2});
    out.push_back({(e1 - disc) / 2.0, 2});
  }
  return out;
}

std::vector<SymbolicEigenvalue> cubic_closed_form(const ConnectionSet& set) {
  const std::int64_t n = set.n();
  const CubicType& type = set.require_cubic();
  const std::int64_t h_max = (n - 1) / 2;
  const bool even = n % 2 == 0;
  std::vector<SymbolicEigenvalue> out;
  const auto integer = [&out](std::int64_t v) {
    out.push_back({IntegerForm{v}, 1});
  };

  if (const auto* t = std::get_if<TypeI>(&type)) {
    integer(3);
    integer(1);
    if (even) {
      integer(2 * parity_sign(t->k) + parity_sign(t->i));
      integer(2 * parity_sign(t->k) - parity_sign(t->i));
    }
    for (std::int64_t h = 1; h <= h_max; ++h) {
      out.push_back({CosPlusMinusForm{n, h, t->k, +1}, 2});
      out.push_back({CosPlusMinusForm{n, h, t->k, -1}, 2});
    }
  } else if (const auto* t2 = std::get_if<TypeII>(&type)) {
    integer(3);
    integer(-3);
    if (even) {
      const std::int64_t s =
          parity_sign(t2->k1) + parity_sign(t2->k2) + parity_sign(t2->k3);
      integer(s);
      integer(-s);
    }
    for (std::int64_t h = 1; h <= h_max; ++h) {
      out.push_back({SqrtAhForm{n, h, *t2, +1}, 2});
      out.push_back({SqrtAhForm{n, h, *t2, -1}, 2});
    }
  } else {
    const auto& t3 = std::get<TypeIII>(type);
    integer(3);
    integer(-1);
    // psi_3 and psi_4 summed over {a^(n/2), b a^i, b a^j}; psi_4 flips sign
    // on both reflections.
    const int centre = parity_sign(n / 2);
    integer(centre + parity_sign(t3.i) + parity_sign(t3.j));
    integer(centre - parity_sign(t3.i) - parity_sign(t3.j));
    for (std::int64_t h = 1; h <= h_max; ++h) {
      out.push_back({ParitySqrtForm{n, h, t3.i - t3.j, +1}, 2});
      out.push_back({ParitySqrtForm{n, h, t3.i - t3.j, -1}, 2});
    }
  }
  return out;
}

std::vector<double> expand(const std::vector<NumericEigenvalue>& spectrum) {
  std::vector<double> out;
  for (const auto& e : spectrum) out.insert(out.end(), e.multiplicity, e.value);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> expand(const std::vector<SymbolicEigenvalue>& spectrum) {
  std::vector<double> out;
  for (const auto& e : spectrum) out.insert(out.end(), e.multiplicity, e.value());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> numeric_spectrum(const Graph& graph) {
  const std::size_t n = graph.vertex_count();
  std::vector<double> a(n * n, 0.0);
  for (std::size_t u = 0; u < n; ++u) {
    for (const std::size_t v : graph.neighbors(u)) a[u * n + v] = 1.0;
  }
  return jacobi_eigenvalues(a, n);
}

SpectrumFingerprint fingerprint(const ConnectionSet& set) {
  return char_poly(build_graph(set).graph());
}

bool cospectral(const ConnectionSet& s, const ConnectionSet& t) {
  if (s.n() != t.n()) {
    throw Error(ErrorCode::kMismatchedOrder,
                "sets live in D_" + std::to_string(2 * s.n()) + " and D_" +
                    std::to_string(2 * t.n()));
  }
  return fingerprint(s) == fingerprint(t);
}

std::vector<std::int64_t> signed_differences(const TypeII& set, std::int64_t p) {
  const std::int64_t d[] = {set.k1 - set.k2, set.k1 - set.k3, set.k2 - set.k3};
  std::vector<std::int64_t> out;
  for (const std::int64_t x : d) {
    out.push_back(ModInt(x, p).value());
    out.push_back(ModInt(-x, p).value());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<ModInt> type2_cospectral_criterion(const TypeII& s, const TypeII& t,
                                                 std::int64_t p) {
  require_odd_prime(p);
  return find_scale(signed_differences(s, p), signed_differences(t, p), p);
}

std::optional<ModInt> circulant_scale_equivalent(const std::vector<std::int64_t>& s,
                                                 const std::vector<std::int64_t>& t,
                                                 std::int64_t p) {
  require_odd_prime(p);
  return find_scale(s, t, p);
}

std::vector<SpectrumLine> spectrum_lines(const ConnectionSet& set) {
  std::vector<SpectrumLine> out;
  if (set.is_cubic()) {
    for (const auto& e : cubic_closed_form(set)) {
      out.push_back({e.expression(), e.value(), e.multiplicity});
    }
    return out;
  }
  const CharacterTable table(set.n());
  const auto spectrum = general_dihedral_spectrum(set);
  for (std::size_t i = 0; i < spectrum.size(); ++i) {
    std::string expr;
    if (i < table.linear_count()) {
      expr = "sum psi_" + std::to_string(i + 1) + "(S)";
    } else {
      const std::size_t h = (i - table.linear_count()) / 2 + 1;
      const bool plus = (i - table.linear_count()) % 2 == 0;
      expr = std::string("mu_{") + std::to_string(h) + (plus ? ",1}" : ",2}");
    }
    out.push_back({expr, spectrum[i].value, spectrum[i].multiplicity});
  }
  return out;
}

}  // namespace dihedra
