#pragma once

#include <string>
#include <vector>

#include "dihedra/graph.hpp"

namespace dihedra {

/// DOT subset: `graph name { ... }` with one labelled node line per vertex
/// and one `u -- v;` line per edge (u < v).
std::string to_dot(const Graph& g, const std::vector<std::string>& labels,
                   const std::string& name = "G");

/// Standard graph6 (no header, no trailing newline). Supports N < 258048.
std::string to_graph6(const Graph& g);

/// Inverse of to_graph6. Throws Error{kParseError} on malformed input.
Graph from_graph6(const std::string& text);

}  // namespace dihedra
