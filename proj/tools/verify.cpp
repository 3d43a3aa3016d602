#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "cli.hpp"
#include "dihedra/cayley.hpp"
#include "dihedra/classify.hpp"
#include "dihedra/error.hpp"
#include "dihedra/isomorphism.hpp"
#include "dihedra/spectra.hpp"
#include "reference_tables.hpp"

namespace dihedra::cli {
namespace {

struct SuiteResult {
  bool passed = true;
  std::string summary;
  std::vector<std::string> failures;
};

using Suite = std::function<SuiteResult()>;

std::vector<std::int64_t> odd_primes_up_to(std::int64_t limit) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 3; p <= limit; ++p) {
    if (is_prime(p)) out.push_back(p);
  }
  return out;
}

void fail(SuiteResult& r, std::string message) {
  r.passed = false;
  if (r.failures.size() < 5) r.failures.push_back(std::move(message));
}

bool close_spectra(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (std::abs(x[i] - y[i]) > 1e-9) return false;
  }
  return true;
}

// Draws until the set is accepted; the all-rotation cubic sets
// {a^k, a^-k, a^(n/2)} are rejected by validation and redrawn.
ConnectionSet random_symmetric_set(std::int64_t n, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.3);
  for (;;) {
    std::vector<DihedralElement> raw;
    for (std::int64_t k = 1; 2 * k <= n; ++k) {
      if (!coin(rng)) continue;
      raw.push_back(DihedralElement::rotation(k));
      raw.push_back(DihedralElement::rotation(n - k));
    }
    for (std::int64_t k = 0; k < n; ++k) {
      if (coin(rng)) raw.push_back(DihedralElement::reflection(k));
    }
    if (raw.empty()) continue;
    try {
      return validate_connection_set(n, raw);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kUnclassifiableCubic) throw;
    }
  }
}

SuiteResult connectivity_suite(std::int64_t n_max) {
  SuiteResult r;
  std::size_t checked = 0;
  for (std::int64_t n = 3; n <= n_max; ++n) {
    for (const auto& set : enumerate_typed_cubic_sets(n)) {
      ++checked;
      if (is_connected_gcd(set) != is_connected_bfs(build_graph(set).graph())) {
        fail(r, "n=" + std::to_string(n) + " gcd and BFS disagree");
      }
    }
  }
  r.summary = std::to_string(checked) + " cubic sets, 3 <= n <= " + std::to_string(n_max);
  return r;
}

SuiteResult spectra_suite(std::int64_t n_max) {
  SuiteResult r;
  std::size_t cubic = 0;
  std::size_t general = 0;
  std::mt19937_64 rng(20240601);
  for (std::int64_t n = 3; n <= n_max; ++n) {
    for (const auto& set : enumerate_typed_cubic_sets(n)) {
      ++cubic;
      if (!close_spectra(expand(cubic_closed_form(set)),
                         numeric_spectrum(build_graph(set).graph()))) {
        fail(r, "closed form off for n=" + std::to_string(n));
      }
    }
    for (int t = 0; t < 8; ++t) {
      const ConnectionSet set = random_symmetric_set(n, rng);
      ++general;
      if (!close_spectra(expand(general_dihedral_spectrum(set)),
                         numeric_spectrum(build_graph(set).graph()))) {
        fail(r, "character-sum spectrum off for n=" + std::to_string(n));
      }
    }
  }
  r.summary = std::to_string(cubic) + " cubic and " + std::to_string(general) +
              " random sets, n <= " + std::to_string(n_max);
  return r;
}

SuiteResult isomorphism_suite(std::int64_t p_max) {
  SuiteResult r;
  std::size_t pairs = 0;
  for (const std::int64_t p : odd_primes_up_to(p_max)) {
    const auto sets = enumerate_cubic_sets(p);
    std::vector<Graph> graphs;
    std::vector<SpectrumFingerprint> prints;
    for (const auto& s : sets) {
      graphs.push_back(build_graph(s).graph());
      prints.push_back(char_poly(graphs.back()));
    }
    for (std::size_t i = 0; i < sets.size(); ++i) {
      for (std::size_t j = i + 1; j < sets.size(); ++j) {
        ++pairs;
        const bool spectral = prints[i] == prints[j];
        const auto sigma = find_cayley_isomorphism(sets[i], sets[j]);
        const bool brute = brute_force_isomorphism(graphs[i], graphs[j]).has_value();
        const bool six = isomorphic(sets[i], sets[j], p);
        if (spectral != brute || sigma.has_value() != brute || six != brute) {
          fail(r, "p=" + std::to_string(p) + " verdicts disagree for pair " +
                      std::to_string(i) + "," + std::to_string(j));
        }
      }
    }
  }
  r.summary = std::to_string(pairs) + " pairs, p <= " + std::to_string(p_max);
  return r;
}

SuiteResult hamiltonicity_suite(std::int64_t p_max) {
  SuiteResult r;
  std::size_t witnesses = 0;
  for (const std::int64_t p : odd_primes_up_to(p_max)) {
    for (const auto& set : enumerate_cubic_sets(p)) {
      if (!is_connected_gcd(set)) continue;
      try {
        const auto walk = hamiltonian_witness(set);
        std::vector<std::size_t> cycle;
        for (const auto& x : walk) cycle.push_back(vertex_index(x, p));
        if (!is_hamiltonian_cycle(build_graph(set).graph(), cycle)) {
          fail(r, "p=" + std::to_string(p) + " walk rejected");
        }
        ++witnesses;
      } catch (const Error& e) {
        fail(r, e.what());
      }
    }
  }
  r.summary = std::to_string(witnesses) + " Hamilton cycles, p <= " + std::to_string(p_max);
  return r;
}

SuiteResult count_suite(std::int64_t p_max) {
  SuiteResult r;
  const auto primes = odd_primes_up_to(p_max);
  for (const std::int64_t p : primes) {
    const CountReport report = count_classes(p);
    const ClassTable table = enumerate_classes(p);
    if (report.n_tilde != table.n_tilde() || report.N_tilde != table.N_tilde()) {
      fail(r, "p=" + std::to_string(p) + " formula " + std::to_string(report.n_tilde) +
                  " vs enumerated " + std::to_string(table.n_tilde()));
    }
  }
  r.summary = std::to_string(primes.size()) + " primes, p <= " + std::to_string(p_max);
  return r;
}

SuiteResult reference_suite(std::int64_t p_max) {
  SuiteResult r;
  std::size_t rows = 0;
  for (const auto& row : reference_rows()) {
    if (row.p > p_max) continue;
    ++rows;
    std::set<std::vector<std::int64_t>> expected;
    for (auto members : row.classes) {
      std::sort(members.begin(), members.end());
      expected.insert(members);
    }
    std::set<std::vector<std::int64_t>> actual;
    const ClassTable table = enumerate_classes(row.p);
    for (const auto& c : table.classes) actual.insert(c.members);
    if (expected != actual || table.n_tilde() != row.n_tilde) {
      fail(r, "class table differs for p=" + std::to_string(row.p));
    }
  }
  r.summary = std::to_string(rows) + " reference rows";
  return r;
}

SuiteResult number_theory_suite(std::int64_t p_max) {
  SuiteResult r;
  const auto primes = odd_primes_up_to(p_max);
  for (const std::int64_t p : primes) {
    std::set<std::int64_t> squares;
    for (std::int64_t x = 1; x < p; ++x) squares.insert(x * x % p);
    for (std::int64_t a = 0; a < p; ++a) {
      const int expected = a == 0 ? 0 : (squares.count(a) ? 1 : -1);
      if (to_int(legendre(a, p)) != expected) {
        fail(r, "legendre(" + std::to_string(a) + ", " + std::to_string(p) + ")");
      }
    }
    for (const std::int64_t q : primes) {
      if (q != p && !reciprocity_identities(p, q).all()) {
        fail(r, "reciprocity p=" + std::to_string(p) + " q=" + std::to_string(q));
      }
    }
  }
  r.summary = std::to_string(primes.size()) + " primes, p <= " + std::to_string(p_max);
  return r;
}

}  // namespace

int cmd_verify(const VerifyOptions& options, std::ostream& out) {
  if (options.p_max < 3) {
    throw Error(ErrorCode::kOutOfDomain, "--p-max must be at least 3");
  }
  if (options.p_max > options.formula_ceiling) {
    throw Error(ErrorCode::kOutOfDomain,
                "--p-max " + std::to_string(options.p_max) + " exceeds the ceiling " +
                    std::to_string(options.formula_ceiling));
  }
  const std::int64_t p_max = options.p_max;
  const std::int64_t oracle_max = std::min(p_max, options.oracle_ceiling);

  const std::vector<std::pair<std::string, Suite>> suites{
      {"number theory", [=] { return number_theory_suite(p_max); }},
      {"connectivity", [=] { return connectivity_suite(p_max); }},
      {"closed-form spectra", [=] { return spectra_suite(p_max); }},
      {"cospectral/isomorphic/witness", [=] { return isomorphism_suite(oracle_max); }},
      {"hamiltonicity", [=] { return hamiltonicity_suite(p_max); }},
      {"count formulas", [=] { return count_suite(p_max); }},
      {"reference tables", [=] { return reference_suite(p_max); }},
  };

  std::vector<std::future<SuiteResult>> running;
  for (const auto& [name, suite] : suites) {
    running.push_back(std::async(std::launch::async, [suite = suite] {
      try {
        return suite();
      } catch (const std::exception& e) {
        SuiteResult r;
        fail(r, e.what());
        r.summary = "aborted";
        return r;
      }
    }));
  }

  bool all = true;
  for (std::size_t i = 0; i < suites.size(); ++i) {
    const SuiteResult r = running[i].get();
    all = all && r.passed;
    out << (r.passed ? "PASS " : "FAIL ") << suites[i].first << ": " << r.summary << "\n";
    for (const auto& f : r.failures) out << "    " << f << "\n";
  }
  out << (all ? "all suites passed" : "verification FAILED") << "\n";
  return all ? kExitOk : kExitVerification;
}

}  // namespace dihedra::cli
