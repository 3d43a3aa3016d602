#include "dihedra/graph_io.hpp"

#include <sstream>
#include <stdexcept>

#include "dihedra/error.hpp"

namespace dihedra {
namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

[[noreturn]] void bad_graph6(const std::string& what) {
  throw Error(ErrorCode::kParseError, "graph6: " + what);
}

}  // namespace

std::string to_dot(const Graph& g, const std::vector<std::string>& labels,
                   const std::string& name) {
  if (!labels.empty() && labels.size() != g.vertex_count()) {
    throw std::invalid_argument("label count does not match vertex count");
  }
  std::ostringstream out;
  out << "graph " << quote(name) << " {\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v << " [label=" << quote(labels.empty() ? std::to_string(v) : labels[v])
        << "];\n";
  }
  for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(63 + n);
  } else if (n < 258048) {
    out += static_cast<char>(126);
    for (int shift = 12; shift >= 0; shift -= 6) {
      out += static_cast<char>(63 + ((n >> shift) & 63));
    }
  } else {
    throw std::invalid_argument("graph6 supports fewer than 258048 vertices here");
  }
  // Upper triangle, column by column: (0,1), (0,2), (1,2), (0,3), ...
  int bits = 0;
  int acc = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out += static_cast<char>(63 + acc);
        bits = acc = 0;
      }
    }
  }
  if (bits > 0) out += static_cast<char>(63 + (acc << (6 - bits)));
  return out;
}

Graph from_graph6(const std::string& text) {
  std::size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= text.size()) bad_graph6("truncated input");
    const int c = static_cast<unsigned char>(text[pos++]);
    if (c < 63 || c > 126) bad_graph6("byte out of range");
    return c - 63;
  };
  std::size_t n = 0;
  if (text.empty()) bad_graph6("empty input");
  if (static_cast<unsigned char>(text[0]) == 126) {
    ++pos;
    if (pos < text.size() && static_cast<unsigned char>(text[pos]) == 126) {
      bad_graph6("8-byte size prefix not supported");
    }
    for (int t = 0; t < 3; ++t) n = (n << 6) | static_cast<std::size_t>(next());
  } else {
    n = static_cast<std::size_t>(next());
  }
  Graph g(n);
  const std::size_t total = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t expected = pos + (total + 5) / 6;
  if (text.size() != expected) bad_graph6("wrong length for " + std::to_string(n) + " vertices");
  std::size_t bit = 0;
  int word = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (bit % 6 == 0) word = next();
      if ((word >> (5 - bit % 6)) & 1) g.add_edge(i, j);
      ++bit;
    }
  }
  return g;
}

}  // namespace dihedra
