#include <gtest/gtest.h>

#include <random>

#include "dihedra/cayley.hpp"
#include "dihedra/char_poly.hpp"
#include "dihedra/error.hpp"

using namespace dihedra;

namespace {

std::vector<BigInt> big(std::initializer_list<long long> xs) {
  std::vector<BigInt> out;
  for (const long long x : xs) out.emplace_back(x);
  return out;
}

std::vector<BigInt> poly_mul(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  std::vector<BigInt> c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

// det(xI - A) by cofactor expansion with polynomial entries.
std::vector<BigInt> cofactor_char_poly(const std::vector<std::int64_t>& a, std::size_t n) {
  using Poly = std::vector<BigInt>;
  std::vector<Poly> m(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m[i * n + j] = i == j ? Poly{BigInt(-a[i * n + j]), BigInt(1)} : Poly{BigInt(-a[i * n + j])};
    }
  }
  std::function<Poly(const std::vector<std::size_t>&, const std::vector<std::size_t>&)> det =
      [&](const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) -> Poly {
    if (rows.size() == 1) return m[rows[0] * n + cols[0]];
    Poly total{BigInt(0)};
    for (std::size_t c = 0; c < cols.size(); ++c) {
      std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
      std::vector<std::size_t> sub_cols;
      for (std::size_t d = 0; d < cols.size(); ++d) {
        if (d != c) sub_cols.push_back(cols[d]);
      }
      Poly term = poly_mul(m[rows[0] * n + cols[c]], det(sub_rows, sub_cols));
      if (term.size() > total.size()) total.resize(term.size());
      for (std::size_t i = 0; i < term.size(); ++i) total[i] += c % 2 == 0 ? term[i] : -term[i];
    }
    while (total.size() > 1 && total.back() == 0) total.pop_back();
    return total;
  };
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  return det(idx, idx);
}

}  // namespace

TEST(CharPoly, PrismOnSixVertices) {
  // (x - 3)(x - 1) x^2 (x + 2)^2 expanded.
  const auto expected = poly_mul(
      poly_mul(poly_mul(big({-3, 1}), big({-1, 1})), big({0, 0, 1})), big({4, 4, 1}));
  EXPECT_EQ(char_poly(build_prism(3)).coefficients, expected);
  EXPECT_EQ(expected, big({0, 0, 12, -4, -9, 0, 1}));
}

TEST(CharPoly, SmallMatrices) {
  EXPECT_EQ(char_poly(std::vector<std::int64_t>{5}, 1).coefficients, big({-5, 1}));
  EXPECT_EQ(char_poly(std::vector<std::int64_t>{1, 2, 3, 4}, 2).coefficients,
            big({-2, -5, 1}));
  EXPECT_EQ(char_poly(std::vector<std::int64_t>{}, 0).coefficients, big({1}));
}

TEST(CharPoly, MatchesCofactorExpansion) {
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> d(-3, 3);
  for (std::size_t n = 1; n <= 7; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<std::int64_t> a(n * n);
      for (auto& x : a) x = d(rng);
      EXPECT_EQ(char_poly(a, n).coefficients, cofactor_char_poly(a, n));
    }
  }
}

TEST(CharPoly, GraphInvariants) {
  for (const auto& s : enumerate_typed_cubic_sets(9)) {
    const Graph g = build_graph(s).graph();
    const auto c = char_poly(g).coefficients;
    const std::size_t n = g.vertex_count();
    ASSERT_EQ(c.size(), n + 1);
    EXPECT_EQ(c[n], 1);
    EXPECT_EQ(c[n - 1], 0);                                    // trace
    EXPECT_EQ(c[n - 2], -static_cast<long long>(g.edge_count()));  // edges
    EXPECT_EQ(char_poly(g).evaluate(3.0), 0.0);                // 3-regular
  }
}

TEST(CharPoly, LargeCoefficientsNeedBigIntegers) {
  // K_70 has characteristic polynomial (x + 1)^69 (x - 69).
  Graph k(70);
  for (std::size_t u = 0; u < 70; ++u) {
    for (std::size_t v = u + 1; v < 70; ++v) k.add_edge(u, v);
  }
  std::vector<BigInt> expected{1};
  auto multiply_linear = [&](const BigInt& root) {
    std::vector<BigInt> next(expected.size() + 1);
    for (std::size_t i = 0; i < expected.size(); ++i) {
      next[i + 1] += expected[i];
      next[i] -= root * expected[i];
    }
    expected = std::move(next);
  };
  for (int i = 0; i < 69; ++i) multiply_linear(-1);
  multiply_linear(69);
  const auto c = char_poly(k).coefficients;
  EXPECT_EQ(c, expected);
  bool beyond_64_bits = false;
  for (const auto& x : c) beyond_64_bits |= abs(x) > BigInt(std::numeric_limits<std::int64_t>::max());
  EXPECT_TRUE(beyond_64_bits);
  SpectrumFingerprint f{c};
  EXPECT_EQ(SpectrumFingerprint::from_decimal_strings(f.to_decimal_strings()), f);
}

TEST(CharPoly, DecimalParsingErrors) {
  EXPECT_THROW(SpectrumFingerprint::from_decimal_strings({"12", "x"}), Error);
  EXPECT_THROW(SpectrumFingerprint::from_decimal_strings({""}), Error);
}

TEST(CharPoly, RelabelingInvariant) {
  const Graph g = build_graph(ConnectionSet::type_ii(7, 0, 1, 3)).graph();
  std::vector<std::size_t> perm(g.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937 rng(4);
  std::shuffle(perm.begin(), perm.end(), rng);
  EXPECT_EQ(char_poly(g), char_poly(g.relabeled(perm)));
}
