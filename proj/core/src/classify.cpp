#include "dihedra/classify.hpp"

#include <algorithm>
#include <set>

#include "dihedra/error.hpp"
#include "dihedra/notation.hpp"

namespace dihedra {
namespace {

void require_domain(std::int64_t s, std::int64_t p) {
  if (s < 0 || s >= p || s == 0 || s == 1) {
    throw Error(ErrorCode::kOutOfDomain,
                std::to_string(s) + " is not in Z_" + std::to_string(p) +
                    " \\ {0, 1}");
  }
}

void require_order(const ConnectionSet& set, std::int64_t p) {
  if (set.n() != p) {
    throw Error(ErrorCode::kInvalidModulus,
                "set lives in D_" + std::to_string(2 * set.n()) +
                    ", expected D_" + std::to_string(2 * p));
  }
}

}  // namespace

std::int64_t ClassTable::total_elements() const noexcept {
  std::int64_t total = 0;
  for (const auto& c : classes) total += static_cast<std::int64_t>(c.size());
  return total;
}

CanonicalType2 canonicalize_type2(const TypeII& set, std::int64_t p) {
  require_odd_prime(p);
  std::int64_t e[] = {ModInt(set.k1, p).value(), ModInt(set.k2, p).value(),
                      ModInt(set.k3, p).value()};
  std::sort(std::begin(e), std::end(e));
  if (e[0] == e[1] || e[1] == e[2]) {
    throw Error(ErrorCode::kDegenerateSet, "repeated reflection exponent");
  }
  const ModInt s1(e[0], p), s2(e[1], p), s3(e[2], p);
  const ModInt lambda = mod_inverse(s2 - s1);
  const ModInt shift = -(lambda * s1);
  const ModInt s = lambda * (s3 - s1);
  const DihedralAutomorphism sigma(lambda, shift);

  std::vector<DihedralElement> image =
      sigma({DihedralElement::reflection(e[0]), DihedralElement::reflection(e[1]),
             DihedralElement::reflection(e[2])});
  std::sort(image.begin(), image.end());
  std::vector<DihedralElement> expected{DihedralElement::reflection(0),
                                        DihedralElement::reflection(1),
                                        DihedralElement::reflection(s.value())};
  std::sort(expected.begin(), expected.end());
  if (image != expected) {
    throw Error(ErrorCode::kDegenerateSet, "canonicalizing map check failed");
  }
  return {p, s, sigma};
}

EquivalenceClass class_of(std::int64_t s, std::int64_t p) {
  require_odd_prime(p);
  require_domain(s, p);
  const ModInt x(s, p), one(1, p);
  const ModInt x_inv = mod_inverse(x);
  const ModInt x_minus_1_inv = mod_inverse(x - one);
  const std::set<std::int64_t> orbit{
      x.value(),
      x_inv.value(),
      (one - x).value(),
      ((x - one) * x_inv).value(),
      mod_inverse(one - x).value(),
      (x * x_minus_1_inv).value(),
  };
  EquivalenceClass out;
  out.members.assign(orbit.begin(), orbit.end());
  out.representative = out.members.front();
  return out;
}

bool equivalent(std::int64_t s, std::int64_t t, std::int64_t p) {
  require_odd_prime(p);
  require_domain(s, p);
  require_domain(t, p);
  const ModInt x(s, p), y(t, p), one(1, p), zero(0, p);
  const ModInt xy = x * y;
  return x == y || xy == one || x + y == one || x - xy - one == zero ||
         y - xy - one == zero || x + y - xy == zero;
}

ClassTable enumerate_classes(std::int64_t p) {
  require_odd_prime(p);
  ClassTable table;
  table.p = p;
  std::vector<bool> assigned(static_cast<std::size_t>(p), false);
  for (std::int64_t s = 2; s < p; ++s) {
    if (assigned[s]) continue;
    EquivalenceClass c = class_of(s, p);
    for (const std::int64_t m : c.members) assigned[m] = true;
    table.classes.push_back(std::move(c));
  }
  return table;
}

bool isomorphic(const ConnectionSet& s, const ConnectionSet& t, std::int64_t p) {
  require_odd_prime(p);
  require_order(s, p);
  require_order(t, p);
  const CubicType& ts = s.require_cubic();
  const CubicType& tt = t.require_cubic();
  if (ts.index() != tt.index()) return false;
  if (std::holds_alternative<TypeI>(ts)) return true;
  const std::int64_t cs = canonicalize_type2(std::get<TypeII>(ts), p).s.value();
  const std::int64_t ct = canonicalize_type2(std::get<TypeII>(tt), p).s.value();
  return equivalent(cs, ct, p);
}

std::optional<DihedralAutomorphism> find_cayley_isomorphism(const ConnectionSet& s,
                                                            const ConnectionSet& t) {
  if (s.n() != t.n()) {
    throw Error(ErrorCode::kMismatchedOrder, "sets live in different groups");
  }
  if (s.size() != t.size()) return std::nullopt;
  for (const auto& sigma : enumerate_automorphisms(s.n())) {
    bool hit = true;
    for (const auto& x : s.elements()) {
      if (!t.contains(sigma(x))) {
        hit = false;
        break;
      }
    }
    if (hit) return sigma;
  }
  return std::nullopt;
}

std::vector<ConnectionSet> enumerate_cubic_sets(std::int64_t p) {
  require_odd_prime(p);
  // For odd n there are no type III sets, so the typed enumeration is
  // already the full list.
  return enumerate_typed_cubic_sets(p);
}

std::vector<IsomorphismClass> classify_all(std::int64_t p) {
  const std::vector<ConnectionSet> sets = enumerate_cubic_sets(p);
  std::vector<std::size_t> firsts;  // index of the first member of each group
  std::vector<std::size_t> counts;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    bool placed = false;
    for (std::size_t g = 0; g < firsts.size(); ++g) {
      if (isomorphic(sets[firsts[g]], sets[i], p)) {
        ++counts[g];
        placed = true;
        break;
      }
    }
    if (!placed) {
      firsts.push_back(i);
      counts.push_back(1);
    }
  }

  std::vector<IsomorphismClass> out;
  for (std::size_t g = 0; g < firsts.size(); ++g) {
    const ConnectionSet& first = sets[firsts[g]];
    if (std::holds_alternative<TypeI>(first.require_cubic())) {
      out.push_back({ConnectionSet::type_i(p, 1, 0), counts[g], std::nullopt});
    } else {
      const auto canon = canonicalize_type2(std::get<TypeII>(first.require_cubic()), p);
      EquivalenceClass params = class_of(canon.s.value(), p);
      out.push_back({ConnectionSet::type_ii(p, 0, 1, params.representative),
                     counts[g], std::move(params)});
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    const std::int64_t kx = x.parameters ? x.parameters->representative : 0;
    const std::int64_t ky = y.parameters ? y.parameters->representative : 0;
    return kx < ky;
  });
  return out;
}

}  // namespace dihedra
