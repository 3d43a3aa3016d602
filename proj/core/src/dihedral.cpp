#include "dihedra/dihedral.hpp"

#include <numeric>
#include <string>

#include "dihedra/error.hpp"

namespace dihedra {
namespace {

std::int64_t wrap(std::int64_t v, std::int64_t n) {
  const std::int64_t r = v % n;
  return r < 0 ? r + n : r;
}

}  // namespace

void require_dihedral_order(std::int64_t n) {
  if (n < 3) {
    throw Error(ErrorCode::kInvalidOrder,
                "D_2n needs n >= 3, got n = " + std::to_string(n));
  }
}

void require_canonical(const DihedralElement& x, std::int64_t n) {
  if (x.exponent < 0 || x.exponent >= n) {
    throw Error(ErrorCode::kMismatchedModulus,
                "exponent " + std::to_string(x.exponent) +
                    " is not canonical for n = " + std::to_string(n));
  }
}

DihedralElement multiply(const DihedralElement& x, const DihedralElement& y,
                         std::int64_t n) {
  require_canonical(x, n);
  require_canonical(y, n);
  if (!x.reflected) {
    return y.reflected ? DihedralElement::reflection(wrap(y.exponent - x.exponent, n))
                       : DihedralElement::rotation(wrap(x.exponent + y.exponent, n));
  }
  return y.reflected ? DihedralElement::rotation(wrap(y.exponent - x.exponent, n))
                     : DihedralElement::reflection(wrap(x.exponent + y.exponent, n));
}

DihedralElement inverse(const DihedralElement& x, std::int64_t n) {
  require_canonical(x, n);
  if (x.reflected) return x;
  return DihedralElement::rotation(wrap(-x.exponent, n));
}

std::vector<DihedralElement> all_elements(std::int64_t n) {
  std::vector<DihedralElement> out;
  out.reserve(static_cast<std::size_t>(2 * n));
  for (std::size_t i = 0; i < static_cast<std::size_t>(2 * n); ++i) {
    out.push_back(element_at(i, n));
  }
  return out;
}

DihedralAutomorphism::DihedralAutomorphism(ModInt lambda, ModInt shift)
    : lambda_(lambda), shift_(shift) {
  if (lambda.modulus() != shift.modulus()) {
    throw Error(ErrorCode::kMismatchedModulus,
                "lambda and k must share a modulus");
  }
  if (std::gcd(lambda.value(), lambda.modulus()) != 1) {
    throw Error(ErrorCode::kNotInvertible,
                "lambda = " + to_string(lambda) + " is not a unit");
  }
}

DihedralAutomorphism DihedralAutomorphism::identity(std::int64_t n) {
  return {ModInt(1, n), ModInt(0, n)};
}

DihedralElement DihedralAutomorphism::operator()(const DihedralElement& x) const {
  const std::int64_t n = order_parameter();
  require_canonical(x, n);
  const ModInt scaled = lambda_ * ModInt(x.exponent, n);
  if (!x.reflected) return DihedralElement::rotation(scaled.value());
  return DihedralElement::reflection((scaled + shift_).value());
}

std::vector<DihedralElement> DihedralAutomorphism::operator()(
    const std::vector<DihedralElement>& xs) const {
  std::vector<DihedralElement> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back((*this)(x));
  return out;
}

DihedralAutomorphism DihedralAutomorphism::inverse() const {
  const ModInt lambda_inv = mod_inverse(lambda_);
  return {lambda_inv, -(lambda_inv * shift_)};
}

DihedralElement apply_automorphism(const DihedralAutomorphism& sigma,
                                   const DihedralElement& x) {
  return sigma(x);
}

std::vector<DihedralAutomorphism> enumerate_automorphisms(std::int64_t n) {
  require_dihedral_order(n);
  std::vector<DihedralAutomorphism> out;
  out.reserve(static_cast<std::size_t>(euler_phi(n) * n));
  for (std::int64_t lambda = 1; lambda < n; ++lambda) {
    if (std::gcd(lambda, n) != 1) continue;
    for (std::int64_t k = 0; k < n; ++k) {
      out.emplace_back(ModInt(lambda, n), ModInt(k, n));
    }
  }
  return out;
}

}  // namespace dihedra
