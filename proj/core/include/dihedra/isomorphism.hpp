#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dihedra/graph.hpp"

namespace dihedra {

/// Exhaustive isomorphism test by individualization-refinement.
///
/// Both graphs are colored jointly (as one disjoint union) so that color
/// names are comparable across them. Refinement starts from degrees and
/// repeatedly splits cells by the multiset of neighbor colors; after a
/// vertex is individualized in each graph, cells are also split by BFS
/// distance to it. Any cell whose size differs between the two sides prunes
/// the branch. At a discrete coloring the induced bijection is checked edge
/// by edge, and the search backtracks on failure, so the answer is exact.
///
/// Returns perm with perm[v] = image in `b` of vertex v of `a`, or nullopt.
/// Deterministic for fixed inputs.
std::optional<std::vector<std::size_t>> brute_force_isomorphism(const Graph& a,
                                                                const Graph& b);

/// True iff `perm` is a bijection mapping the edges of `a` onto those of `b`.
bool is_isomorphism(const Graph& a, const Graph& b,
                    const std::vector<std::size_t>& perm);

}  // namespace dihedra
