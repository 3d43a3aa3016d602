#include "dihedra/char_poly.hpp"

#include <stdexcept>

#include "dihedra/error.hpp"

namespace dihedra {

double SpectrumFingerprint::evaluate(double x) const {
  double acc = 0.0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
    acc = acc * x + it->convert_to<double>();
  }
  return acc;
}

std::vector<std::string> SpectrumFingerprint::to_decimal_strings() const {
  std::vector<std::string> out;
  out.reserve(coefficients.size());
  for (const auto& c : coefficients) out.push_back(c.str());
  return out;
}

SpectrumFingerprint SpectrumFingerprint::from_decimal_strings(
    const std::vector<std::string>& digits) {
  SpectrumFingerprint fp;
  for (const auto& d : digits) {
    const std::size_t start = (!d.empty() && d[0] == '-') ? 1 : 0;
    if (d.size() == start ||
        d.find_first_not_of("0123456789", start) != std::string::npos) {
      throw Error(ErrorCode::kParseError, "not a decimal integer: '" + d + "'");
    }
    fp.coefficients.emplace_back(d);
  }
  return fp;
}

SpectrumFingerprint char_poly(std::span<const std::int64_t> matrix,
                              std::size_t n) {
  if (matrix.size() != n * n) {
    throw std::invalid_argument("char_poly: matrix is not N x N");
  }
  const auto at = [&](std::size_t i, std::size_t j) { return matrix[i * n + j]; };

  // Nonzero entries per row, for the mat-vec products on leading blocks.
  std::vector<std::vector<std::size_t>> support(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (at(i, j) != 0) support[i].push_back(j);
    }
  }

  std::vector<BigInt> poly{1};  // det(xI - A_0) = 1
  for (std::size_t k = 1; k <= n; ++k) {
    const std::size_t m = k - 1;  // dimension of the leading block B
    const std::int64_t corner = at(m, m);

    // (x - a) p_{k-1}(x)
    std::vector<BigInt> next(k + 1);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= poly[i] * corner;
    }

    // - sum_j (r B^j c) sum_{i > j} b_i x^(i-j-1)
    std::vector<BigInt> v(m);
    for (std::size_t i = 0; i < m; ++i) v[i] = at(i, m);
    for (std::size_t j = 0; j < m; ++j) {
      BigInt w = 0;
      for (std::size_t i = 0; i < m; ++i) {
        if (const std::int64_t r = at(m, i); r != 0 && !v[i].is_zero()) w += v[i] * r;
      }
      if (!w.is_zero()) {
        for (std::size_t i = j + 1; i <= m; ++i) next[i - j - 1] -= w * poly[i];
      }
      if (j + 1 < m) {
        std::vector<BigInt> bv(m);
        for (std::size_t row = 0; row < m; ++row) {
          for (const std::size_t col : support[row]) {
            if (col >= m) break;
            if (!v[col].is_zero()) bv[row] += v[col] * at(row, col);
          }
        }
        v = std::move(bv);
      }
    }
    poly = std::move(next);
  }
  return SpectrumFingerprint{std::move(poly)};
}

SpectrumFingerprint char_poly(const Graph& graph) {
  const std::vector<std::int64_t> a = graph.adjacency_matrix();
  return char_poly(a, graph.vertex_count());
}

}  // namespace dihedra
