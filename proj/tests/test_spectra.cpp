#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "dihedra/error.hpp"
#include "dihedra/notation.hpp"
#include "dihedra/spectra.hpp"
#include "oracles.hpp"

using namespace dihedra;
using E = DihedralElement;

namespace {

void expect_close(const std::vector<double>& a, const std::vector<double>& b, double tol) {
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i], b[i], tol) << "index " << i;
}

std::vector<double> sorted(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return v;
}

ConnectionSet set_of(std::int64_t n, const std::string& text) {
  return validate_connection_set(n, parse_elements(text, n));
}

ConnectionSet random_set(std::int64_t n, std::size_t size, std::mt19937_64& rng) {
  for (;;) {
    std::vector<E> pool = all_elements(n);
    std::shuffle(pool.begin(), pool.end(), rng);
    std::set<E> chosen;
    for (const auto& x : pool) {
      if (x.is_identity() || chosen.size() >= size) continue;
      const E y = inverse(x, n);
      if (chosen.size() + (x == y ? 1 : 2) > size) continue;
      chosen.insert(x);
      chosen.insert(y);
    }
    if (chosen.size() != size) continue;
    try {
      return validate_connection_set(n, {chosen.begin(), chosen.end()});
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kUnclassifiableCubic) throw;
    }
  }
}

}  // namespace

TEST(CharacterTable, Shape) {
  const CharacterTable t5(5);
  EXPECT_EQ(t5.linear_count(), 2u);
  EXPECT_EQ(t5.two_dimensional_count(), 2u);
  EXPECT_EQ(t5.degree_square_sum(), 10);
  const CharacterTable t6 = character_table(6);
  EXPECT_EQ(t6.linear_count(), 4u);
  EXPECT_EQ(t6.two_dimensional_count(), 2u);
  EXPECT_EQ(t6.degree_square_sum(), 12);
  EXPECT_NEAR(CharacterTable(3).two_dimensional(1, E::rotation(1)), -1.0, 1e-15);
  EXPECT_EQ(t6.character_name(0), "psi_1");
  EXPECT_EQ(t6.character_name(4), "chi_1");
  EXPECT_THROW(CharacterTable(2), Error);
}

TEST(CharacterTable, CharactersAreClassFunctionsAndLinearOnesAreHomomorphisms) {
  for (std::int64_t n = 3; n <= 12; ++n) {
    const CharacterTable t(n);
    const auto elems = all_elements(n);
    for (std::size_t c = 0; c < t.character_count(); ++c) {
      for (const auto& x : elems) {
        for (const auto& g : elems) {
          const E conj = multiply(multiply(g, x, n), inverse(g, n), n);
          EXPECT_NEAR(t.value(c, conj), t.value(c, x), 1e-12);
        }
      }
    }
    for (std::size_t c = 0; c < t.linear_count(); ++c) {
      for (const auto& x : elems) {
        for (const auto& y : elems) {
          EXPECT_EQ(t.linear(c, multiply(x, y, n)), t.linear(c, x) * t.linear(c, y));
        }
      }
    }
  }
}

// sum_chi chi(g) chi(h) = |C(g)| when g ~ h and 0 otherwise, with classes
// and centralizers found by brute force.
TEST(CharacterTable, ColumnOrthogonality) {
  for (std::int64_t n = 3; n <= 30; ++n) {
    const CharacterTable t(n);
    const auto elems = all_elements(n);
    std::vector<std::set<E>> classes;
    std::map<E, std::size_t> class_of;
    for (const auto& x : elems) {
      if (class_of.count(x)) continue;
      std::set<E> cls;
      for (const auto& g : elems) cls.insert(multiply(multiply(g, x, n), inverse(g, n), n));
      for (const auto& y : cls) class_of[y] = classes.size();
      classes.push_back(cls);
    }
    EXPECT_EQ(classes.size(), t.character_count()) << n;
    for (std::size_t i = 0; i < classes.size(); ++i) {
      const E g = *classes[i].begin();
      std::size_t centralizer = 0;
      for (const auto& y : elems) centralizer += multiply(g, y, n) == multiply(y, g, n);
      for (std::size_t j = 0; j < classes.size(); ++j) {
        const E h = *classes[j].begin();
        double sum = 0.0;
        for (std::size_t c = 0; c < t.character_count(); ++c) sum += t.value(c, g) * t.value(c, h);
        EXPECT_NEAR(sum, i == j ? static_cast<double>(centralizer) : 0.0, 1e-10);
      }
    }
  }
}

TEST(CirculantSpectrum, Examples) {
  const auto c5 = sorted(circulant_spectrum(5, {1, 4}));
  const double g = 2.0 * std::cos(2.0 * std::numbers::pi / 5.0);
  const double h = 2.0 * std::cos(4.0 * std::numbers::pi / 5.0);
  expect_close(c5, {h, h, g, g, 2.0}, 1e-12);
  EXPECT_EQ(circulant_spectrum(4, {2, 2}), (std::vector<double>{-2, 2, -2, 2}));
  EXPECT_EQ(circulant_spectrum(4, {}), (std::vector<double>(4, 0.0)));
  EXPECT_THROW(circulant_spectrum(5, {1}), Error);
  EXPECT_THROW(circulant_spectrum(5, {0}), Error);
}

TEST(CirculantSpectrum, MatchesJacobi) {
  for (std::int64_t n = 3; n <= 14; ++n) {
    for (std::int64_t r = 1; 2 * r <= n; ++r) {
      for (std::int64_t q = r + 1; 2 * q <= n; ++q) {
        std::vector<std::int64_t> res{r, q};
        if (2 * r != n) res.push_back(n - r);
        if (2 * q != n) res.push_back(n - q);
        expect_close(sorted(circulant_spectrum(n, res)),
                     numeric_spectrum(build_circulant(n, res).graph()), 1e-9);
      }
    }
  }
}

TEST(GeneralSpectrum, Examples) {
  expect_close(expand(general_dihedral_spectrum(set_of(3, "a,a^2,b"))),
               {-2, -2, 0, 0, 1, 3}, 1e-12);
  const ConnectionSet s = set_of(5, "b,b*a,b*a^2");
  expect_close(expand(general_dihedral_spectrum(s)), numeric_spectrum(build_graph(s).graph()),
               1e-9);
  EXPECT_EQ(expand(general_dihedral_spectrum(set_of(4, ""))), std::vector<double>(8, 0.0));
}

TEST(GeneralSpectrum, RandomSetsMatchJacobi) {
  std::mt19937_64 rng(42);
  for (std::int64_t n = 3; n <= 16; ++n) {
    for (std::size_t size = 2; size <= std::min<std::size_t>(6, 2 * n - 1); ++size) {
      const ConnectionSet s = random_set(n, size, rng);
      const auto got = expand(general_dihedral_spectrum(s));
      ASSERT_EQ(got.size(), static_cast<std::size_t>(2 * n));
      expect_close(got, numeric_spectrum(build_graph(s).graph()), 1e-9);
    }
  }
}

TEST(CubicClosedForm, Examples) {
  expect_close(expand(cubic_closed_form(ConnectionSet::type_i(3, 1, 0))),
               {-2, -2, 0, 0, 1, 3}, 1e-12);

  const auto t2 = cubic_closed_form(ConnectionSet::type_ii(5, 0, 1, 2));
  ASSERT_EQ(t2.size(), 6u);
  EXPECT_EQ(std::get<IntegerForm>(t2[0].form).value, 3);
  EXPECT_EQ(std::get<IntegerForm>(t2[1].form).value, -3);
  for (std::size_t i = 2; i < t2.size(); ++i) {
    EXPECT_TRUE(std::holds_alternative<SqrtAhForm>(t2[i].form));
    EXPECT_EQ(t2[i].multiplicity, 2);
  }

  // psi_3 and psi_4 give -1 and -1 for {a^3, b, b*a}; the full spectrum is
  // checked against the eigensolver as well.
  const ConnectionSet t3 = ConnectionSet::type_iii(6, 0, 1);
  const auto forms = cubic_closed_form(t3);
  std::vector<std::int64_t> integers;
  for (const auto& f : forms) {
    if (const auto* i = std::get_if<IntegerForm>(&f.form)) integers.push_back(i->value);
  }
  EXPECT_EQ(integers, (std::vector<std::int64_t>{3, -1, -1, -1}));
  expect_close(expand(forms), numeric_spectrum(build_graph(t3).graph()), 1e-9);

  EXPECT_THROW(cubic_closed_form(set_of(6, "a,a^5,b,b*a")), Error);
}

TEST(CubicClosedForm, MatchesJacobiUpToTwelve) {
  for (std::int64_t n = 3; n <= 12; ++n) {
    for (const auto& s : enumerate_typed_cubic_sets(n)) {
      const auto forms = cubic_closed_form(s);
      int total = 0;
      for (const auto& f : forms) {
        EXPECT_TRUE(f.multiplicity == 1 || f.multiplicity == 2);
        total += f.multiplicity;
      }
      EXPECT_EQ(total, 2 * n);
      expect_close(expand(forms), numeric_spectrum(build_graph(s).graph()), 1e-9);
    }
  }
}

TEST(CubicClosedForm, AhIsSumOfCosines) {
  const TypeII s{0, 1, 3};
  for (std::int64_t h = 1; h <= 3; ++h) {
    double direct = 3.0;
    for (const auto d : {-1, -3, -2}) direct += 2.0 * std::cos(2.0 * std::numbers::pi * h * d / 7.0);
    EXPECT_NEAR(a_h(s, 7, h), direct, 1e-12);
  }
}

TEST(Fingerprint, Examples) {
  const auto s2 = ConnectionSet::type_ii(7, 0, 1, 2);
  EXPECT_TRUE(cospectral(s2, ConnectionSet::type_ii(7, 0, 1, 4)));
  EXPECT_FALSE(cospectral(s2, ConnectionSet::type_ii(7, 0, 1, 3)));
  EXPECT_TRUE(cospectral(s2, s2));
  EXPECT_THROW(cospectral(s2, ConnectionSet::type_ii(5, 0, 1, 2)), Error);

  Graph k2(2);
  k2.add_edge(0, 1);
  EXPECT_EQ(char_poly(k2).coefficients, (std::vector<BigInt>{-1, 0, 1}));
  EXPECT_EQ(char_poly(Graph(4)).coefficients, (std::vector<BigInt>{0, 0, 0, 0, 1}));
}

TEST(Fingerprint, VanishesAtEigenvalues) {
  for (const auto& s : enumerate_typed_cubic_sets(6)) {
    const auto f = fingerprint(s);
    EXPECT_EQ(f.degree(), 12u);
    for (const double x : numeric_spectrum(build_graph(s).graph())) {
      EXPECT_NEAR(f.evaluate(x), 0.0, 1e-5);
    }
  }
}

// Exact comparison agrees with the floating-point spectra on every pair.
TEST(Fingerprint, SoundAgainstNumericSpectraUpTo13) {
  for (const std::int64_t p : oracle::odd_primes(3, 13)) {
    const auto sets = enumerate_typed_cubic_sets(p);
    std::vector<SpectrumFingerprint> prints;
    std::vector<std::vector<double>> spectra;
    for (const auto& s : sets) {
      prints.push_back(fingerprint(s));
      spectra.push_back(numeric_spectrum(build_graph(s).graph()));
    }
    for (std::size_t i = 0; i < sets.size(); ++i) {
      for (std::size_t j = i + 1; j < sets.size(); ++j) {
        bool close = true;
        for (std::size_t k = 0; k < spectra[i].size(); ++k) {
          close = close && std::abs(spectra[i][k] - spectra[j][k]) < 1e-7;
        }
        ASSERT_EQ(prints[i] == prints[j], close) << p << ": " << i << "," << j;
      }
    }
  }
}

TEST(SignedDifferences, Example) {
  EXPECT_EQ(signed_differences({0, 1, 3}, 7), (std::vector<std::int64_t>{1, 2, 3, 4, 5, 6}));
  EXPECT_EQ(signed_differences({0, 1, 2}, 7), (std::vector<std::int64_t>{1, 1, 2, 5, 6, 6}));
}

TEST(ScaleCriteria, Examples) {
  const auto l = type2_cospectral_criterion({0, 1, 2}, {0, 2, 4}, 7);
  ASSERT_TRUE(l);
  EXPECT_EQ(l->value(), 2);
  EXPECT_EQ(type2_cospectral_criterion({0, 1, 2}, {0, 1, 2}, 7)->value(), 1);
  EXPECT_FALSE(type2_cospectral_criterion({0, 1, 2}, {0, 1, 3}, 7));
  EXPECT_THROW(type2_cospectral_criterion({0, 1, 2}, {0, 1, 3}, 9), Error);

  EXPECT_EQ(circulant_scale_equivalent({1, 4}, {2, 3}, 5)->value(), 2);
  EXPECT_EQ(circulant_scale_equivalent({1, 6}, {1, 6}, 7)->value(), 1);
  EXPECT_FALSE(circulant_scale_equivalent({1, 6}, {1, 6, 2, 5}, 7));
}

TEST(ScaleCriteria, TypeIICriterionEquivalentToCospectrality) {
  for (const std::int64_t p : oracle::odd_primes(3, 13)) {
    std::vector<ConnectionSet> sets;
    for (const auto& s : enumerate_typed_cubic_sets(p)) {
      if (std::holds_alternative<TypeII>(s.require_cubic())) sets.push_back(s);
    }
    std::vector<SpectrumFingerprint> fps;
    for (const auto& s : sets) fps.push_back(fingerprint(s));
    for (std::size_t i = 0; i < sets.size(); ++i) {
      for (std::size_t j = 0; j < sets.size(); ++j) {
        const auto& ts = std::get<TypeII>(sets[i].require_cubic());
        const auto& tt = std::get<TypeII>(sets[j].require_cubic());
        ASSERT_EQ(type2_cospectral_criterion(ts, tt, p).has_value(), fps[i] == fps[j]);
      }
    }
    EXPECT_EQ(cospectral(sets.front(), sets.back()), fps.front() == fps.back());
  }
}

TEST(SpectrumLines, CubicAndGeneral) {
  const auto lines = spectrum_lines(ConnectionSet::type_i(3, 1, 0));
  ASSERT_EQ(lines.size(), 4u);
  EXPECT_EQ(lines[0].expr, "3");
  EXPECT_EQ(lines[2].multiplicity, 2);
  const auto general = spectrum_lines(set_of(5, "a,a^4,b,b*a"));
  int total = 0;
  for (const auto& l : general) total += l.multiplicity;
  EXPECT_EQ(total, 10);
}
