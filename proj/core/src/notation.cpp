#include "dihedra/notation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

#include "dihedra/error.hpp"

namespace dihedra {
namespace {

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (const char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

[[noreturn]] void bad_token(std::string_view token, std::string_view why) {
  throw Error(ErrorCode::kParseError,
              "cannot parse element '" + std::string(token) + "': " +
                  std::string(why));
}

// Parses "a" or "a^k" into k.
std::int64_t parse_rotation_exponent(std::string_view body,
                                     std::string_view token) {
  if (body == "a") return 1;
  if (body.size() < 3 || body.substr(0, 2) != "a^") {
    bad_token(token, "expected a or a^k");
  }
  const std::string_view digits = body.substr(2);
  std::int64_t k = 0;
  const auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), k);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    bad_token(token, "exponent is not an integer");
  }
  return k;
}

}  // namespace

std::string format_element(const DihedralElement& x) {
  if (!x.reflected) {
    return x.exponent == 0 ? "e" : "a^" + std::to_string(x.exponent);
  }
  return x.exponent == 0 ? "b" : "b*a^" + std::to_string(x.exponent);
}

DihedralElement parse_element(std::string_view raw, std::int64_t n) {
  require_dihedral_order(n);
  const std::string token = strip_spaces(raw);
  if (token.empty()) bad_token(raw, "empty token");

  DihedralElement x;
  if (token == "e" || token == "1") {
    return x;
  }
  if (token == "b") {
    x.reflected = true;
  } else if (token.starts_with("b*")) {
    x.reflected = true;
    x.exponent = parse_rotation_exponent(std::string_view(token).substr(2), raw);
  } else {
    x.exponent = parse_rotation_exponent(token, raw);
  }
  x.exponent %= n;
  if (x.exponent < 0) x.exponent += n;
  return x;
}

std::vector<DihedralElement> parse_elements(std::string_view text,
                                            std::int64_t n) {
  std::vector<DihedralElement> out;
  if (strip_spaces(text).empty()) return out;

  std::set<DihedralElement> seen;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view token =
        text.substr(start, comma == std::string_view::npos ? text.npos
                                                           : comma - start);
    const DihedralElement x = parse_element(token, n);
    if (!seen.insert(x).second) {
      bad_token(token, "duplicate element " + format_element(x));
    }
    out.push_back(x);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string format_elements(const std::vector<DihedralElement>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out += ",";
    out += format_element(xs[i]);
  }
  return out;
}

}  // namespace dihedra
