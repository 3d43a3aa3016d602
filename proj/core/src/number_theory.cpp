#include "dihedra/number_theory.hpp"

#include <numeric>

#include "dihedra/error.hpp"

namespace dihedra {
namespace {

constexpr std::int64_t kExhaustiveSqrtLimit = 1000;

std::int64_t reduce(std::int64_t value, std::int64_t m) {
  std::int64_t r = value % m;
  return r < 0 ? r + m : r;
}

void require_same_modulus(const ModInt& x, const ModInt& y) {
  if (x.modulus() != y.modulus()) {
    throw Error(ErrorCode::kMismatchedModulus,
                "operands live in Z_" + std::to_string(x.modulus()) +
                    " and Z_" + std::to_string(y.modulus()));
  }
}

// Tonelli-Shanks for an odd prime p and a quadratic residue a != 0.
std::int64_t tonelli_shanks(std::int64_t a, std::int64_t p) {
  std::int64_t q = p - 1;
  int s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  std::int64_t z = 2;
  while (legendre(z, p) != LegendreValue::kNonResidue) ++z;

  std::int64_t m = s;
  std::int64_t c = pow_mod(z, static_cast<std::uint64_t>(q), p);
  std::int64_t t = pow_mod(a, static_cast<std::uint64_t>(q), p);
  std::int64_t r = pow_mod(a, static_cast<std::uint64_t>((q + 1) / 2), p);
  while (t != 1) {
    std::int64_t i = 0;
    std::int64_t t2 = t;
    while (t2 != 1) {
      t2 = mul_mod(t2, t2, p);
      ++i;
    }
    std::int64_t b = c;
    for (std::int64_t j = 0; j < m - i - 1; ++j) b = mul_mod(b, b, p);
    m = i;
    c = mul_mod(b, b, p);
    t = mul_mod(t, c, p);
    r = mul_mod(r, b, p);
  }
  return r;
}

}  // namespace

ModInt::ModInt(std::int64_t value, std::int64_t modulus) : modulus_(modulus) {
  if (modulus < 2) {
    throw Error(ErrorCode::kInvalidModulus,
                "modulus must be at least 2, got " + std::to_string(modulus));
  }
  value_ = reduce(value, modulus);
}

ModInt ModInt::operator+(const ModInt& other) const {
  require_same_modulus(*this, other);
  return {value_ + other.value_, modulus_};
}

ModInt ModInt::operator-(const ModInt& other) const {
  require_same_modulus(*this, other);
  return {value_ - other.value_, modulus_};
}

ModInt ModInt::operator*(const ModInt& other) const {
  require_same_modulus(*this, other);
  return {mul_mod(value_, other.value_, modulus_), modulus_};
}

ModInt ModInt::operator-() const { return {-value_, modulus_}; }

ModInt ModInt::pow(std::uint64_t exponent) const {
  return {pow_mod(value_, exponent, modulus_), modulus_};
}

std::string to_string(const ModInt& x) {
  return std::to_string(x.value()) + " mod " + std::to_string(x.modulus());
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
  const __int128 product = static_cast<__int128>(reduce(a, m)) * reduce(b, m);
  return static_cast<std::int64_t>(product % m);
}

std::int64_t pow_mod(std::int64_t base, std::uint64_t exponent, std::int64_t m) {
  std::int64_t result = 1 % m;
  std::int64_t b = reduce(base, m);
  while (exponent > 0) {
    if (exponent & 1U) result = mul_mod(result, b, m);
    b = mul_mod(b, b, m);
    exponent >>= 1U;
  }
  return result;
}

ModInt mod_inverse(const ModInt& x) {
  std::int64_t old_r = x.value(), r = x.modulus();
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t quotient = old_r / r;
    old_r -= quotient * r;
    std::swap(old_r, r);
    old_s -= quotient * s;
    std::swap(old_s, s);
  }
  if (old_r != 1) {
    throw Error(ErrorCode::kNotInvertible,
                std::to_string(x.value()) + " shares factor " +
                    std::to_string(old_r) + " with " +
                    std::to_string(x.modulus()));
  }
  return {old_s, x.modulus()};
}

std::int64_t gcd_many(std::span<const std::int64_t> values, std::int64_t n) {
  std::int64_t g = n < 0 ? -n : n;
  for (const std::int64_t v : values) g = std::gcd(g, v);
  return g;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_odd_prime(std::int64_t n) { return n > 2 && is_prime(n); }

void require_odd_prime(std::int64_t p) {
  if (!is_odd_prime(p)) {
    throw Error(ErrorCode::kInvalidModulus,
                std::to_string(p) + " is not an odd prime");
  }
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  std::int64_t m = n;
  for (std::int64_t d = 2; d <= m / d; ++d) {
    if (m % d != 0) continue;
    while (m % d == 0) m /= d;
    result -= result / d;
  }
  if (m > 1) result -= result / m;
  return result;
}

LegendreValue legendre(std::int64_t a, std::int64_t p) {
  require_odd_prime(p);
  const std::int64_t r = pow_mod(reduce(a, p),
                                 static_cast<std::uint64_t>((p - 1) / 2), p);
  if (r == 0) return LegendreValue::kZero;
  return r == 1 ? LegendreValue::kResidue : LegendreValue::kNonResidue;
}

std::vector<ModInt> sqrt_mod(std::int64_t a, std::int64_t p) {
  const LegendreValue symbol = legendre(a, p);
  const std::int64_t r = reduce(a, p);
  if (symbol == LegendreValue::kZero) return {ModInt(0, p)};
  if (symbol == LegendreValue::kNonResidue) return {};

  std::int64_t root = 0;
  if (p < kExhaustiveSqrtLimit) {
    for (std::int64_t x = 1; x <= p / 2; ++x) {
      if (mul_mod(x, x, p) == r) {
        root = x;
        break;
      }
    }
  } else {
    root = tonelli_shanks(r, p);
  }
  const std::int64_t other = p - root;
  return {ModInt(std::min(root, other), p), ModInt(std::max(root, other), p)};
}

std::optional<std::pair<ModInt, ModInt>> roots_s2_minus_s_plus_1(std::int64_t p) {
  require_odd_prime(p);
  if (p < 5) {
    throw Error(ErrorCode::kInvalidModulus,
                "s^2 - s + 1 root pair is defined for p >= 5");
  }
  // s^2 - s + 1 = 0  <=>  (2s - 1)^2 = -3
  const std::vector<ModInt> x = sqrt_mod(-3, p);
  if (x.size() != 2) return std::nullopt;
  const ModInt half = mod_inverse(ModInt(2, p));
  const ModInt one(1, p);
  const ModInt s0 = half * (one + x[0]);
  const ModInt s1 = half * (one - x[0]);
  return s0 < s1 ? std::pair{s0, s1} : std::pair{s1, s0};
}

std::string to_string(CountBranch branch) {
  switch (branch) {
    case CountBranch::kPEquals3: return "p=3";
    case CountBranch::kOneMod6: return "p=1 mod 6";
    case CountBranch::kFiveMod6: return "p=5 mod 6";
  }
  return "unknown";
}

CountReport count_classes(std::int64_t p) {
  require_odd_prime(p);
  CountReport report;
  report.p = p;
  if (p == 3) {
    report.branch = CountBranch::kPEquals3;
    report.n_tilde = 1;
  } else if (p % 6 == 5) {
    report.branch = CountBranch::kFiveMod6;
    report.n_tilde = (p - 5) / 6 + 1;
  } else {
    report.branch = CountBranch::kOneMod6;
    report.n_tilde = (p - 1) / 6 + 1;
  }
  // One extra class for the prism graphs.
  report.N_tilde = report.n_tilde + 1;
  return report;
}

ReciprocityCheck reciprocity_identities(std::int64_t p, std::int64_t q) {
  require_odd_prime(p);
  require_odd_prime(q);
  if (p == q) {
    throw Error(ErrorCode::kInvalidModulus,
                "reciprocity needs distinct primes, got p = q = " +
                    std::to_string(p));
  }
  const auto sign = [](std::int64_t e) { return e % 2 == 0 ? 1 : -1; };

  ReciprocityCheck check;
  check.minus_one = to_int(legendre(-1, p)) == sign((p - 1) / 2);
  check.two = to_int(legendre(2, p)) == sign((p * p - 1) / 8);
  check.reciprocity = to_int(legendre(q, p)) * to_int(legendre(p, q)) ==
                      sign((p - 1) / 2 * ((q - 1) / 2));

  check.multiplicative = true;
  const std::int64_t factors[] = {-1, 2, q};
  for (const std::int64_t m : factors) {
    for (const std::int64_t n : factors) {
      if (to_int(legendre(m * n, p)) !=
          to_int(legendre(m, p)) * to_int(legendre(n, p))) {
        check.multiplicative = false;
      }
    }
  }
  return check;
}

}  // namespace dihedra
