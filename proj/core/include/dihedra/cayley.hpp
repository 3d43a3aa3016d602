#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dihedra/dihedral.hpp"
#include "dihedra/graph.hpp"

namespace dihedra {

/// {a^k, a^-k, b a^i}; k is stored as min(k, n - k) and never equals n/2.
struct TypeI {
  std::int64_t k = 0;
  std::int64_t i = 0;
  bool operator==(const TypeI&) const = default;
};

/// {b a^k1, b a^k2, b a^k3} with k1 < k2 < k3.
struct TypeII {
  std::int64_t k1 = 0;
  std::int64_t k2 = 0;
  std::int64_t k3 = 0;
  bool operator==(const TypeII&) const = default;
};

/// {a^(n/2), b a^i, b a^j} with i < j; only exists for even n.
struct TypeIII {
  std::int64_t i = 0;
  std::int64_t j = 0;
  bool operator==(const TypeIII&) const = default;
};

using CubicType = std::variant<TypeI, TypeII, TypeIII>;

/// "I", "II" or "III".
std::string type_name(const CubicType& type);

/// A validated connection set of D_2n: identity-free, closed under inverses,
/// elements kept sorted in vertex order. Cubic sets carry their type.
class ConnectionSet {
 public:
  std::int64_t n() const noexcept { return n_; }
  const std::vector<DihedralElement>& elements() const noexcept {
    return elements_;
  }
  std::size_t size() const noexcept { return elements_.size(); }
  bool contains(const DihedralElement& x) const;

  const std::optional<CubicType>& cubic_type() const noexcept { return type_; }
  bool is_cubic() const noexcept { return type_.has_value(); }
  /// Throws Error{kNotCubic} when the set has no cubic type.
  const CubicType& require_cubic() const;

  bool operator==(const ConnectionSet& other) const {
    return n_ == other.n_ && elements_ == other.elements_;
  }

  static ConnectionSet type_i(std::int64_t n, std::int64_t k, std::int64_t i);
  static ConnectionSet type_ii(std::int64_t n, std::int64_t k1, std::int64_t k2,
                               std::int64_t k3);
  static ConnectionSet type_iii(std::int64_t n, std::int64_t i, std::int64_t j);

 private:
  friend ConnectionSet validate_connection_set(
      std::int64_t n, const std::vector<DihedralElement>& raw);

  std::int64_t n_ = 0;
  std::vector<DihedralElement> elements_;
  std::optional<CubicType> type_;
};

/// Throws Error{kInvalidOrder} for n < 3, kMismatchedModulus for
/// non-canonical elements, kContainsIdentity, kNotSymmetric, and
/// kUnclassifiableCubic for a 3-element set matching no cubic template (the
/// all-rotation set {a^k, a^-k, a^(n/2)} for even n).
ConnectionSet validate_connection_set(std::int64_t n,
                                      const std::vector<DihedralElement>& raw);

/// X(D_2n, S): g ~ h iff h * g^-1 is in S.
class CayleyGraph {
 public:
  const ConnectionSet& connection_set() const noexcept { return set_; }
  std::int64_t n() const noexcept { return set_.n(); }
  const Graph& graph() const noexcept { return graph_; }

 private:
  friend CayleyGraph build_graph(const ConnectionSet& set);
  ConnectionSet set_;
  Graph graph_;
};

CayleyGraph build_graph(const ConnectionSet& set);

/// Vertex labels in textual element notation, in vertex order.
std::vector<std::string> vertex_labels(std::int64_t n);

/// X(Z_n, R): i ~ i + r for r in R.
class CirculantGraph {
 public:
  std::int64_t n() const noexcept { return n_; }
  const std::vector<std::int64_t>& residues() const noexcept { return residues_; }
  const Graph& graph() const noexcept { return graph_; }

 private:
  friend CirculantGraph build_circulant(std::int64_t n,
                                        const std::vector<std::int64_t>& residues);
  std::int64_t n_ = 0;
  std::vector<std::int64_t> residues_;
  Graph graph_;
};

/// Throws Error{kContainsZero}, kNotSymmetric, or kOutOfDomain for repeated
/// residues. Residues are reduced mod n first.
CirculantGraph build_circulant(std::int64_t n,
                               const std::vector<std::int64_t>& residues);

/// Connectivity from the gcd criterion alone:
///   I: (k, n) = 1;  II: (k1-k2, k1-k3, k2-k3, n) = 1;  III: (i-j, n/2) = 1.
bool is_connected_gcd(const ConnectionSet& set);

/// Hamilton cycle through all 2n elements, built constructively:
/// - type I: around the rotation coset with a^k, across with b a^i, around
///   the reflection coset, and back across;
/// - type II/III: alternating two reflections b a^x, b a^y whose exponent
///   difference is a unit mod n (for type II over D_2p this is the
///   {b, ba} cycle transported by the canonicalizing automorphism).
/// The walk is checked before it is returned. Throws Error{kNotConnected}
/// for disconnected sets and kWitnessConstructionFailed when no
/// construction applies.
std::vector<DihedralElement> hamiltonian_witness(const ConnectionSet& set);

/// C_n [] K_2 on the Cayley vertex order: i ~ i+1 and n+i ~ n+i+1 (mod n),
/// plus the rungs i ~ n+i. Throws Error{kInvalidOrder} for n < 3.
Graph build_prism(std::int64_t n);

/// Every type I, II and III connection set of D_2n (type I with
/// 1 <= k < n/2, type III only for even n), in a fixed order.
std::vector<ConnectionSet> enumerate_typed_cubic_sets(std::int64_t n);

}  // namespace dihedra
