#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dihedra/dihedral.hpp"

namespace dihedra {

// Textual element notation: "e", "a^k", "b", "b*a^k". The parser also
// accepts bare "a" for a^1, negative exponents, and ignores whitespace.

std::string format_element(const DihedralElement& x);

/// Throws Error{kParseError} on malformed tokens.
DihedralElement parse_element(std::string_view token, std::int64_t n);

/// Comma separated list of element tokens; duplicates are rejected with
/// Error{kParseError}. An empty or all-blank string is the empty set.
std::vector<DihedralElement> parse_elements(std::string_view text,
                                            std::int64_t n);

std::string format_elements(const std::vector<DihedralElement>& xs);

}  // namespace dihedra
