#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dihedra/cayley.hpp"
#include "dihedra/dihedral.hpp"
#include "dihedra/number_theory.hpp"

namespace dihedra {

/// {b, ba, b a^s} over D_2p, together with the automorphism that carries the
/// original set onto it.
struct CanonicalType2 {
  std::int64_t p;
  ModInt s;
  DihedralAutomorphism map;
};

/// Orbit of s in Z_p \ {0, 1} under
///   s -> s^-1, 1 - s, (s-1) s^-1, (1-s)^-1, s (s-1)^-1.
struct EquivalenceClass {
  std::int64_t representative = 0;  // min(members)
  std::vector<std::int64_t> members;  // ascending

  std::size_t size() const noexcept { return members.size(); }
  bool operator==(const EquivalenceClass&) const = default;
};

struct ClassTable {
  std::int64_t p = 0;
  std::vector<EquivalenceClass> classes;  // sorted by representative

  std::int64_t n_tilde() const noexcept {
    return static_cast<std::int64_t>(classes.size());
  }
  std::int64_t N_tilde() const noexcept { return n_tilde() + 1; }
  std::int64_t total_elements() const noexcept;

  bool operator==(const ClassTable&) const = default;
};

/// Sends {b a^s1, b a^s2, b a^s3} (s1 < s2 < s3) to {b, ba, b a^s} with
/// lambda = (s2 - s1)^-1, k = -lambda s1, s = lambda (s3 - s1); the image is
/// checked by applying the automorphism. Throws Error{kDegenerateSet} for
/// repeated exponents and kInvalidModulus unless p is an odd prime.
CanonicalType2 canonicalize_type2(const TypeII& set, std::int64_t p);

/// Throws Error{kOutOfDomain} for s in {0, 1} and kInvalidModulus unless p
/// is an odd prime.
EquivalenceClass class_of(std::int64_t s, std::int64_t p);

/// The six isomorphism conditions: s = t, st = 1, s + t = 1, s - st - 1 = 0,
/// t - st - 1 = 0, s + t - st = 0 (mod p).
bool equivalent(std::int64_t s, std::int64_t t, std::int64_t p);

ClassTable enumerate_classes(std::int64_t p);

/// Isomorphism of two cubic Cayley graphs on D_2p by type and, for three
/// reflections, by the classes of their canonical parameters.
/// Throws Error{kNotCubic}, kInvalidModulus.
bool isomorphic(const ConnectionSet& s, const ConnectionSet& t, std::int64_t p);

/// First sigma in enumerate_automorphisms(n) with sigma(s) = t, if any.
/// Works for any n >= 3. Throws Error{kMismatchedOrder} when the sets live
/// in different groups.
std::optional<DihedralAutomorphism> find_cayley_isomorphism(const ConnectionSet& s,
                                                            const ConnectionSet& t);

/// All cubic connection sets of D_2p: (p-1)/2 * p type I followed by
/// C(p, 3) type II. Throws Error{kInvalidModulus}.
std::vector<ConnectionSet> enumerate_cubic_sets(std::int64_t p);

struct IsomorphismClass {
  ConnectionSet representative;  // {a, a^-1, b} or {b, ba, b a^s}
  std::size_t member_count = 0;
  std::optional<EquivalenceClass> parameters;  // set for three reflections
};

/// Partitions enumerate_cubic_sets(p) under isomorphic(). The prism class
/// comes first, then three-reflection classes by representative s.
std::vector<IsomorphismClass> classify_all(std::int64_t p);

}  // namespace dihedra
