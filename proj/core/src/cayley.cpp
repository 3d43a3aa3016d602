#include "dihedra/cayley.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "dihedra/error.hpp"
#include "dihedra/notation.hpp"

namespace dihedra {
namespace {

std::int64_t wrap(std::int64_t v, std::int64_t n) {
  const std::int64_t r = v % n;
  return r < 0 ? r + n : r;
}

std::optional<CubicType> detect_cubic_type(
    std::int64_t n, const std::vector<DihedralElement>& sorted) {
  std::vector<std::int64_t> rotations, reflections;
  for (const auto& x : sorted) {
    (x.reflected ? reflections : rotations).push_back(x.exponent);
  }
  // Type I: a rotation pair plus one reflection.
  if (rotations.size() == 2 && reflections.size() == 1 &&
      rotations[0] + rotations[1] == n && rotations[0] != rotations[1]) {
    return TypeI{std::min(rotations[0], rotations[1]), reflections[0]};
  }
  // Type III: the central involution plus two reflections.
  if (n % 2 == 0 && rotations.size() == 1 && rotations[0] == n / 2 &&
      reflections.size() == 2) {
    return TypeIII{reflections[0], reflections[1]};
  }
  if (reflections.size() == 3) {
    return TypeII{reflections[0], reflections[1], reflections[2]};
  }
  return std::nullopt;
}

std::vector<std::size_t> to_indices(const std::vector<DihedralElement>& walk,
                                    std::int64_t n) {
  std::vector<std::size_t> out;
  out.reserve(walk.size());
  for (const auto& x : walk) out.push_back(vertex_index(x, n));
  return out;
}

// v_{t+1} = g_t * v_t with the generators taken cyclically from `steps`.
std::vector<DihedralElement> walk_from_identity(
    const std::vector<DihedralElement>& steps, std::int64_t n) {
  std::vector<DihedralElement> walk{DihedralElement::identity()};
  for (std::size_t t = 0; t + 1 < steps.size(); ++t) {
    walk.push_back(multiply(steps[t], walk.back(), n));
  }
  return walk;
}

}  // namespace

std::string type_name(const CubicType& type) {
  switch (type.index()) {
    case 0: return "I";
    case 1: return "II";
    default: return "III";
  }
}

bool ConnectionSet::contains(const DihedralElement& x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

const CubicType& ConnectionSet::require_cubic() const {
  if (!type_) {
    throw Error(ErrorCode::kNotCubic,
                "connection set {" + format_elements(elements_) +
                    "} is not cubic");
  }
  return *type_;
}

ConnectionSet ConnectionSet::type_i(std::int64_t n, std::int64_t k,
                                    std::int64_t i) {
  return validate_connection_set(
      n, {DihedralElement::rotation(wrap(k, n)),
          DihedralElement::rotation(wrap(-k, n)),
          DihedralElement::reflection(wrap(i, n))});
}

ConnectionSet ConnectionSet::type_ii(std::int64_t n, std::int64_t k1,
                                     std::int64_t k2, std::int64_t k3) {
  return validate_connection_set(n, {DihedralElement::reflection(wrap(k1, n)),
                                     DihedralElement::reflection(wrap(k2, n)),
                                     DihedralElement::reflection(wrap(k3, n))});
}

ConnectionSet ConnectionSet::type_iii(std::int64_t n, std::int64_t i,
                                      std::int64_t j) {
  if (n % 2 != 0) {
    throw Error(ErrorCode::kInvalidOrder,
                "type III sets need even n, got " + std::to_string(n));
  }
  return validate_connection_set(n, {DihedralElement::rotation(n / 2),
                                     DihedralElement::reflection(wrap(i, n)),
                                     DihedralElement::reflection(wrap(j, n))});
}

ConnectionSet validate_connection_set(std::int64_t n,
                                      const std::vector<DihedralElement>& raw) {
  require_dihedral_order(n);
  for (const auto& x : raw) require_canonical(x, n);

  std::vector<DihedralElement> sorted(raw);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  for (const auto& x : sorted) {
    if (x.is_identity()) {
      throw Error(ErrorCode::kContainsIdentity, "connection set contains e");
    }
    if (!std::binary_search(sorted.begin(), sorted.end(), inverse(x, n))) {
      throw Error(ErrorCode::kNotSymmetric,
                  format_element(x) + " is present but its inverse " +
                      format_element(inverse(x, n)) + " is not");
    }
  }

  ConnectionSet set;
  set.n_ = n;
  set.elements_ = std::move(sorted);
  if (set.elements_.size() == 3) {
    set.type_ = detect_cubic_type(n, set.elements_);
    if (!set.type_) {
      throw Error(ErrorCode::kUnclassifiableCubic,
                  "{" + format_elements(set.elements_) +
                      "} matches none of the type I/II/III templates");
    }
  }
  return set;
}

CayleyGraph build_graph(const ConnectionSet& set) {
  const std::int64_t n = set.n();
  CayleyGraph out;
  out.set_ = set;
  out.graph_ = Graph(static_cast<std::size_t>(2 * n));
  for (std::size_t g = 0; g < out.graph_.vertex_count(); ++g) {
    const DihedralElement ge = element_at(g, n);
    for (const auto& s : set.elements()) {
      // h * g^-1 = s  <=>  h = s * g
      out.graph_.add_edge(g, vertex_index(multiply(s, ge, n), n));
    }
  }
  return out;
}

std::vector<std::string> vertex_labels(std::int64_t n) {
  std::vector<std::string> labels;
  for (const auto& x : all_elements(n)) labels.push_back(format_element(x));
  return labels;
}

CirculantGraph build_circulant(std::int64_t n,
                               const std::vector<std::int64_t>& residues) {
  if (n < 2) {
    throw Error(ErrorCode::kInvalidOrder,
                "circulants need n >= 2, got " + std::to_string(n));
  }
  std::vector<std::int64_t> reduced;
  for (const std::int64_t r : residues) reduced.push_back(wrap(r, n));
  std::sort(reduced.begin(), reduced.end());
  if (std::adjacent_find(reduced.begin(), reduced.end()) != reduced.end()) {
    throw Error(ErrorCode::kOutOfDomain, "repeated residue in circulant set");
  }
  for (const std::int64_t r : reduced) {
    if (r == 0) throw Error(ErrorCode::kContainsZero, "0 in circulant set");
    if (!std::binary_search(reduced.begin(), reduced.end(), wrap(-r, n))) {
      throw Error(ErrorCode::kNotSymmetric,
                  std::to_string(r) + " present without " +
                      std::to_string(wrap(-r, n)));
    }
  }

  CirculantGraph out;
  out.n_ = n;
  out.residues_ = reduced;
  out.graph_ = Graph(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) {
    for (const std::int64_t r : reduced) {
      out.graph_.add_edge(static_cast<std::size_t>(i),
                          static_cast<std::size_t>(wrap(i + r, n)));
    }
  }
  return out;
}

bool is_connected_gcd(const ConnectionSet& set) {
  const std::int64_t n = set.n();
  return std::visit(
      [n](const auto& t) -> bool {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, TypeI>) {
          return std::gcd(t.k, n) == 1;
        } else if constexpr (std::is_same_v<T, TypeII>) {
          const std::int64_t diffs[] = {t.k1 - t.k2, t.k1 - t.k3, t.k2 - t.k3};
          return gcd_many(diffs, n) == 1;
        } else {
          return std::gcd(t.i - t.j, n / 2) == 1;
        }
      },
      set.require_cubic());
}

std::vector<DihedralElement> hamiltonian_witness(const ConnectionSet& set) {
  const std::int64_t n = set.n();
  const CubicType& type = set.require_cubic();
  if (!is_connected_gcd(set)) {
    throw Error(ErrorCode::kNotConnected,
                "{" + format_elements(set.elements()) + "} is disconnected");
  }

  std::vector<DihedralElement> steps;
  if (const auto* t1 = std::get_if<TypeI>(&type)) {
    const auto rot = DihedralElement::rotation(t1->k);
    const auto rung = DihedralElement::reflection(t1->i);
    for (std::int64_t t = 0; t < n - 1; ++t) steps.push_back(rot);
    steps.push_back(rung);
    for (std::int64_t t = 0; t < n - 1; ++t) steps.push_back(rot);
    steps.push_back(rung);
  } else {
    std::vector<std::int64_t> refl;
    for (const auto& x : set.elements()) {
      if (x.reflected) refl.push_back(x.exponent);
    }
    std::optional<std::pair<std::int64_t, std::int64_t>> pair;
    for (std::size_t u = 0; u < refl.size() && !pair; ++u) {
      for (std::size_t v = u + 1; v < refl.size() && !pair; ++v) {
        if (std::gcd(refl[v] - refl[u], n) == 1) pair = {refl[u], refl[v]};
      }
    }
    if (!pair) {
      throw Error(ErrorCode::kWitnessConstructionFailed,
                  "no pair of reflections with unit exponent difference");
    }
    for (std::int64_t t = 0; t < n; ++t) {
      steps.push_back(DihedralElement::reflection(pair->first));
      steps.push_back(DihedralElement::reflection(pair->second));
    }
  }

  std::vector<DihedralElement> walk = walk_from_identity(steps, n);
  const CayleyGraph graph = build_graph(set);
  if (!is_hamiltonian_cycle(graph.graph(), to_indices(walk, n))) {
    throw Error(ErrorCode::kWitnessConstructionFailed,
                "constructed walk is not a Hamilton cycle");
  }
  return walk;
}

Graph build_prism(std::int64_t n) {
  require_dihedral_order(n);
  const auto N = static_cast<std::size_t>(n);
  Graph g(2 * N);
  for (std::size_t i = 0; i < N; ++i) {
    g.add_edge(i, (i + 1) % N);
    g.add_edge(N + i, N + (i + 1) % N);
    g.add_edge(i, N + i);
  }
  return g;
}

std::vector<ConnectionSet> enumerate_typed_cubic_sets(std::int64_t n) {
  require_dihedral_order(n);
  std::vector<ConnectionSet> out;
  for (std::int64_t k = 1; 2 * k < n; ++k) {
    for (std::int64_t i = 0; i < n; ++i) out.push_back(ConnectionSet::type_i(n, k, i));
  }
  for (std::int64_t k1 = 0; k1 < n; ++k1) {
    for (std::int64_t k2 = k1 + 1; k2 < n; ++k2) {
      for (std::int64_t k3 = k2 + 1; k3 < n; ++k3) {
        out.push_back(ConnectionSet::type_ii(n, k1, k2, k3));
      }
    }
  }
  if (n % 2 == 0) {
    for (std::int64_t i = 0; i < n; ++i) {
      for (std::int64_t j = i + 1; j < n; ++j) {
        out.push_back(ConnectionSet::type_iii(n, i, j));
      }
    }
  }
  return out;
}

}  // namespace dihedra
